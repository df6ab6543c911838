#include <doctest.h>

#include <cmath>
#include <random>

#include "error.hpp"
#include "system.hpp"
#include "vec2.hpp"

using namespace riccati;

namespace {

// plain RK4 on the raw affine field, for the conjugacy oracle
Vec2 rk4_flow(const AffineField& f, Vec2 p, double t, int steps) {
  double h = t / steps;
  auto fv = [&](Vec2 q) { return Vec2{f.P(q.x, q.y), f.Q(q.x, q.y)}; };
  for (int i = 0; i < steps; ++i) {
    Vec2 k1 = fv(p), k2 = fv(p + k1 * (h / 2)), k3 = fv(p + k2 * (h / 2)),
         k4 = fv(p + k3 * h);
    p = p + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
  }
  return p;
}

GeneralRiccati random_system(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  std::uniform_int_distribution<int> deg(0, 2);
  GeneralRiccati g;
  int da = deg(rng);
  std::vector<double> a(da + 1);
  for (auto& v : a) v = U(rng);
  if (std::fabs(a.back()) < 0.1) a.back() = a.back() < 0 ? -0.5 : 0.5;
  g.alpha2 = Poly1(a);
  g.k = U(rng);
  if (std::fabs(g.k) < 0.1) g.k = 0.7;
  g.beta1 = Poly1({U(rng), U(rng)});
  g.gamma2 = Poly1({U(rng), U(rng), U(rng)});
  if (g.gamma2.is_zero()) g.gamma2 = Poly1({1.0});
  return g;
}

} // namespace

TEST_CASE("validate rejects the excluded classes") {
  GeneralRiccati g;
  g.alpha2 = Poly1({0, 1, 1});
  g.k = 1.0;
  g.gamma2 = Poly1({-0.25, 3.75});
  CHECK_NOTHROW(validate(g));

  GeneralRiccati bern = g;
  bern.gamma2 = Poly1();
  try {
    validate(bern);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bernoulli_input);
  }

  GeneralRiccati lien = g;
  lien.k = 0.0;
  try {
    validate(lien);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::lienard_input);
  }

  GeneralRiccati zero = g;
  zero.alpha2 = Poly1();
  try {
    validate(zero);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degree_violation);
  }
}

TEST_CASE("reduce keeps systems already in normal form") {
  GeneralRiccati g;
  g.alpha2 = Poly1({0, 1, 1}); // x(x+1)
  g.k = 1.0;
  g.gamma2 = Poly1({-0.25, 3.75});
  NormalForm nf = reduce(validate(g), SignPolicy::tolerant());
  CHECK(nf.family == Family::I);
  CHECK(nf.change.identity());
  CHECK(nf.params.a == doctest::Approx(0.0));
  CHECK(nf.params.b == doctest::Approx(0.0));
  CHECK(nf.params.c == doctest::Approx(0.0));
  CHECK(nf.params.d == doctest::Approx(3.75));
  CHECK(nf.params.e == doctest::Approx(-0.25));
}

TEST_CASE("reduce of (x-2)(x-5) picks the orientation-preserving root order") {
  GeneralRiccati g;
  g.alpha2 = Poly1({10, -7, 1});
  g.k = 1.0;
  g.gamma2 = Poly1({1});
  NormalForm nf = reduce(validate(g), SignPolicy::tolerant());
  CHECK(nf.family == Family::I);
  CHECK(nf.change.time_scale == doctest::Approx(3.0));
  CHECK_FALSE(nf.change.orientation_reversed);
  CHECK(nf.params.e == doctest::Approx(1.0 / 9.0));
  CHECK(nf.params.c == doctest::Approx(0.0));
  CHECK(nf.params.d == doctest::Approx(0.0));
}

TEST_CASE("reduce of (x-1)^2+4 lands in family V") {
  GeneralRiccati g;
  g.alpha2 = Poly1({5, -2, 1});
  g.k = 1.0;
  g.gamma2 = Poly1({0, 1});
  NormalForm nf = reduce(validate(g), SignPolicy::tolerant());
  CHECK(nf.family == Family::V);
  CHECK(nf.change.mu == doctest::Approx(2.0));
  CHECK(nf.change.nu == doctest::Approx(1.0));
  CHECK(nf.change.time_scale == doctest::Approx(2.0));
  CHECK(nf.params.d == doctest::Approx(0.5));
  CHECK(nf.params.e == doctest::Approx(0.25));
}

TEST_CASE("decreasing linear x-dynamics reverse orientation") {
  GeneralRiccati g;
  g.alpha2 = Poly1({1, -1}); // 1 - x
  g.k = 1.0;
  g.gamma2 = Poly1({1});
  NormalForm nf = reduce(validate(g), SignPolicy::tolerant());
  CHECK(nf.family == Family::III);
  CHECK(nf.change.orientation_reversed);
  CHECK(nf.change.time_scale == doctest::Approx(-1.0));
}

TEST_CASE("family partition follows the root structure of alpha2") {
  SignPolicy pol = SignPolicy::tolerant();
  auto fam = [&](std::initializer_list<double> coeffs) {
    GeneralRiccati g;
    g.alpha2 = Poly1(coeffs);
    g.k = 1.0;
    g.gamma2 = Poly1({1});
    return reduce(validate(g), pol).family;
  };
  CHECK(fam({0, 1, 1}) == Family::I);   // two roots
  CHECK(fam({1, 2, 1}) == Family::II);  // double root
  CHECK(fam({1, -2}) == Family::III);   // degree 1
  CHECK(fam({-3}) == Family::IV);       // constant
  CHECK(fam({2, 0, 1}) == Family::V);   // complex pair
  CHECK(fam({-2, 0, -1}) == Family::V); // complex pair, negative leading
}

TEST_CASE("conjugacy: reduced field and flow match the original through the change") {
  std::mt19937_64 rng(123456);
  SignPolicy pol = SignPolicy::tolerant();
  int tested = 0;
  for (int it = 0; it < 200 && tested < 100; ++it) {
    GeneralRiccati g = random_system(rng);
    NormalForm nf;
    try {
      nf = reduce(validate(g), pol);
    } catch (const Error&) {
      continue;
    }
    ++tested;
    AffineField orig = affine_field(g);
    AffineField red = affine_field(nf);
    const CoordinateChange& ch = nf.change;

    std::uniform_real_distribution<double> U(-1.5, 1.5);
    for (int k = 0; k < 20; ++k) {
      double x1 = U(rng), y1 = U(rng);
      double x = ch.mu * x1 + ch.nu;
      double y = y1 / ch.y_scale;
      double fx1 = orig.P(x, y) / (ch.mu * ch.time_scale);
      double fy1 = ch.y_scale * orig.Q(x, y) / ch.time_scale;
      double gx1 = red.P(x1, y1);
      double gy1 = red.Q(x1, y1);
      double scale = 1.0 + std::fabs(gx1) + std::fabs(gy1);
      CHECK(std::fabs(fx1 - gx1) <= 1e-9 * scale);
      CHECK(std::fabs(fy1 - gy1) <= 1e-9 * scale);
    }

    std::uniform_real_distribution<double> U0(-0.5, 0.5);
    for (int k = 0; k < 5; ++k) {
      Vec2 p1{U0(rng), U0(rng)};
      Vec2 p{ch.mu * p1.x + ch.nu, p1.y / ch.y_scale};
      for (double tau : {0.01, 0.1}) {
        double t = tau / ch.time_scale; // negative when orientation reversed
        Vec2 fp = rk4_flow(orig, p, t, 400);
        Vec2 f1 = rk4_flow(red, p1, tau, 400);
        Vec2 mapped{(fp.x - ch.nu) / ch.mu, fp.y * ch.y_scale};
        if (!std::isfinite(fp.x) || !std::isfinite(f1.x)) continue;
        if (f1.norm() > 1e3) continue; // blown up inside the sample window
        double scale = 1.0 + f1.norm();
        CHECK(dist(mapped, f1) <= 1e-6 * scale);
      }
    }
  }
  CHECK(tested >= 50);
}
