#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "error.hpp"
#include "flow.hpp"

using namespace riccati;

namespace {

struct Setup {
  NormalForm nf;
  CompactifiedSystem cs;
  std::vector<Equilibrium> eqs;
  explicit Setup(Family f, Params5 p, SignPolicy pol = SignPolicy::strict())
      : nf(make_normal_form(f, p)), cs(nf) {
    eqs = finite_equilibria(nf, pol);
    auto inf = infinite_equilibria(nf, pol);
    eqs.insert(eqs.end(), inf.begin(), inf.end());
  }
  const Equilibrium* find(const std::string& l) const {
    for (auto& e : eqs)
      if (e.label == l) return &e;
    return nullptr;
  }
};

} // namespace

TEST_CASE("forward orbit from (0.5, 0) of the first fixture reaches the top node") {
  Setup s(Family::I, {0, 0, 0, 3.75, -0.25});
  Trajectory tr = integrate(s.cs, s.eqs, DiskPoint::affine(0.5, 0.0), true, {});
  REQUIRE(tr.termination == Termination::ReachedEquilibrium);
  REQUIRE(tr.omega_limit.has_value());
  CHECK(s.eqs[*tr.omega_limit].label == "n");
  // time stamps strictly increase
  for (std::size_t i = 1; i < tr.samples.size(); ++i)
    CHECK(tr.samples[i].t > tr.samples[i - 1].t);
}

TEST_CASE("orbits on the invariant line stay on it") {
  Setup s(Family::I, {0, 0, 0, 3.75, -0.25});
  Trajectory tr = integrate(s.cs, s.eqs, DiskPoint::affine(0.0, 0.1), true, {});
  for (const auto& smp : tr.samples) {
    if (smp.q.chart != Chart::affine) continue;
    CHECK(std::fabs(smp.q.p.x) <= 1e-9);
  }
}

TEST_CASE("family IV orbits always reach the circle at infinity") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  Setup s(Family::IV, {1, 1, 0, 0, 1});
  for (int it = 0; it < 10; ++it) {
    Trajectory tr =
        integrate(s.cs, s.eqs, DiskPoint::affine(U(rng), U(rng)), true, {});
    REQUIRE(tr.termination == Termination::ReachedEquilibrium);
    CHECK(s.eqs[*tr.omega_limit].at_infinity);
  }
}

TEST_CASE("integration refuses to start on an equilibrium") {
  Setup s(Family::I, {0, 0, 0, 3.75, -0.25});
  CHECK_THROWS_AS(integrate(s.cs, s.eqs, DiskPoint::affine(0.0, 0.5), true, {}),
                  Error);
}

TEST_CASE("chart switches keep the disk position continuous") {
  Setup s(Family::I, {0, 0, 0, 3.75, -0.25});
  Trajectory tr = integrate(s.cs, s.eqs, DiskPoint::affine(0.5, 0.0), true, {});
  bool switched = false;
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    if (tr.samples[i].q.chart != tr.samples[i - 1].q.chart) {
      switched = true;
      CHECK(dist(tr.samples[i].disk, tr.samples[i - 1].disk) < 0.12);
    }
  }
  CHECK(switched);
}

TEST_CASE("per-step residual against the unit-speed field") {
  Setup s(Family::I, {0, 0, -0.75, -0.75, -0.25});
  Trajectory tr = integrate(s.cs, s.eqs, DiskPoint::affine(0.4, 0.3), true, {});
  REQUIRE(tr.samples.size() > 10);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> pick(1, tr.samples.size() - 2);
  int checked = 0;
  for (int it = 0; it < (int)tr.samples.size() / 10 && checked < 200; ++it) {
    std::size_t i = pick(rng);
    const auto& a = tr.samples[i];
    const auto& b = tr.samples[i + 1];
    if (a.q.chart != b.q.chart) continue;
    double dt = b.t - a.t;
    if (dt <= 0 || dt > 0.2) continue;
    Vec2 mid{0.5 * (a.q.p.x + b.q.p.x), 0.5 * (a.q.p.y + b.q.p.y)};
    Vec2 f = s.cs.eval(DiskPoint{a.q.chart, mid});
    f = f * (1.0 / (1e-12 + f.norm()));
    Vec2 chord{(b.q.p.x - a.q.p.x) / dt, (b.q.p.y - a.q.p.y) / dt};
    // midpoint rule is second order in the step
    CHECK(dist(chord, f) <= 200.0 * dt * dt + 5e-6);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("separatrix counts match the local type on the first fixture") {
  SignPolicy pol = SignPolicy::strict();
  SeparatrixSkeleton sk =
      trace_separatrices(make_normal_form(Family::I, {0, 0, 0, 3.75, -0.25}), pol);
  REQUIRE(sk.nodes.size() == 10);
  CHECK_FALSE(sk.has_unresolved);
  for (std::size_t i = 0; i < sk.nodes.size(); ++i) {
    int deg = sk.degree((int)i);
    switch (sk.nodes[i].topo) {
      case TopoClass::Saddle:
        CHECK(deg == (sk.nodes[i].at_infinity ? 3 : 4));
        break;
      case TopoClass::Source:
      case TopoClass::Sink:
        CHECK(deg >= 2);
        break;
      default:
        break;
    }
  }
  // every saddle separatrix resolved to an equilibrium
  for (const auto& e : sk.edges) {
    CHECK(e.src >= 0);
    CHECK(e.dst >= 0);
  }
}

TEST_CASE("no orbit returns near a previous sample with aligned tangent") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  SignPolicy pol = SignPolicy::tolerant();
  int systems = 0;
  while (systems < 10) {
    Params5 p{U(rng), U(rng), U(rng), U(rng), U(rng)};
    if (p.c == 0.0 && p.d == 0.0 && p.e == 0.0) continue;
    Family fam = static_cast<Family>(1 + (systems % 5));
    ++systems;
    Setup s(fam, p, pol);
    for (int k = 0; k < 4; ++k) {
      Vec2 start{U(rng), U(rng)};
      bool near_eq = false;
      for (auto& e : s.eqs)
        if (sphere_dist(sphere_project(DiskPoint::affine(start.x, start.y)),
                        sphere_project(e.pt)) < 1e-6)
          near_eq = true;
      if (near_eq) continue;
      FlowOptions opt;
      opt.arc_budget = 30.0;
      Trajectory tr =
          integrate(s.cs, s.eqs, DiskPoint::affine(start.x, start.y), true, opt);
      // look for a return: a later sample within 1e-4 of an earlier one with
      // aligned tangent after having left a 1e-2 neighborhood in between
      std::vector<Vec2> pts, tans;
      const auto& sm = tr.samples;
      std::size_t stride = std::max<std::size_t>(1, sm.size() / 1000);
      for (std::size_t i = 0; i + 1 < sm.size(); i += stride) {
        pts.push_back(sm[i].disk);
        tans.push_back((sm[i + 1].disk - sm[i].disk).normalized());
      }
      for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
        double far = 0.0;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          far = std::max(far, dist(pts[j], pts[i]));
          if (far < 1e-2) continue;
          if (dist(pts[j], pts[i]) < 1e-4) CHECK(tans[i].dot(tans[j]) < 0.99);
        }
      }
    }
  }
}
