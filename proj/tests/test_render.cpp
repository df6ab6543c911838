#include <doctest.h>

#include "classify.hpp"
#include "render.hpp"

using namespace riccati;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

} // namespace

TEST_CASE("a minimal skeleton renders one glyph per node") {
  SignPolicy pol = SignPolicy::strict();
  // all discriminants negative: only the vertical node pair
  SeparatrixSkeleton sk =
      trace_separatrices(make_normal_form(Family::I, {0, 0, 1.25, 1.25, 1}), pol);
  REQUIRE(sk.nodes.size() == 2);
  std::string svg = render_disk(sk, {}, RenderSpec{});
  CHECK(count_occurrences(svg, "class=\"glyph\"") == 2);
  CHECK(svg.find("viewBox=\"-1.05 -1.05 2.1 2.1\"") != std::string::npos);
}

TEST_CASE("the first fixture renders all ten equilibria and its edges") {
  SignPolicy pol = SignPolicy::strict();
  SeparatrixSkeleton sk =
      trace_separatrices(make_normal_form(Family::I, {0, 0, 0, 3.75, -0.25}), pol);
  std::string svg = render_disk(sk, {}, RenderSpec{});
  CHECK(count_occurrences(svg, "class=\"glyph\"") == 10);
  // at least one path per edge plus the disk outline
  CHECK(count_occurrences(svg, "<path") >= sk.edges.size());
}

TEST_CASE("rendering is byte-deterministic") {
  SignPolicy pol = SignPolicy::strict();
  NormalForm nf = make_normal_form(Family::I, {0, 0, 0, 3.75, -0.25});
  SeparatrixSkeleton sk = trace_separatrices(nf, pol);
  std::vector<Trajectory> orbits = grid_orbits(nf, pol, 4);
  std::string a = render_disk(sk, orbits, RenderSpec{});
  SeparatrixSkeleton sk2 = trace_separatrices(nf, pol);
  std::vector<Trajectory> orbits2 = grid_orbits(nf, pol, 4);
  std::string b = render_disk(sk2, orbits2, RenderSpec{});
  CHECK(a == b);
  CHECK(a.size() > 2000);
}
