#include <doctest.h>

#include <cmath>
#include <random>

#include "compactify.hpp"
#include "error.hpp"

using namespace riccati;

namespace {

Params5 random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-4.0, 4.0);
  Params5 p{U(rng), U(rng), U(rng), U(rng), U(rng)};
  if (p.c == 0.0 && p.d == 0.0 && p.e == 0.0) p.e = 1.0;
  return p;
}

} // namespace

TEST_CASE("family-I chart field matches the hand expansion at the P1 tuple") {
  NormalForm nf = make_normal_form(Family::I, {0, 0, 0, 3.75, -0.25});
  ChartField f = chart_field(nf, Chart::U1);
  // u' = u^2 - u + v(-u + 3.75) - 0.25 v^2 ; v' = -(v + v^2)
  CHECK(f.u_dot(0.3, 0.2) ==
        doctest::Approx(0.09 - 0.3 + 0.2 * (-0.3 + 3.75) - 0.25 * 0.04));
  CHECK(f.v_dot(0.3, 0.2) == doctest::Approx(-(0.2 + 0.04)));
}

TEST_CASE("family III and IV transverse equator rates") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 10; ++it) {
    Params5 p = random_params(rng);
    ChartField f3 = chart_field(make_normal_form(Family::III, p), Chart::U1);
    ChartField f4 = chart_field(make_normal_form(Family::IV, p), Chart::U1);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int k = 0; k < 10; ++k) {
      double u = U(rng), v = U(rng);
      CHECK(f3.v_dot(u, v) == doctest::Approx(-v * v));
      CHECK(f4.v_dot(u, v) == doctest::Approx(-v * v * v));
    }
  }
}

TEST_CASE("the equator line v = 0 is invariant at coefficient level") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    Params5 p = random_params(rng);
    for (Family fam :
         {Family::I, Family::II, Family::III, Family::IV, Family::V}) {
      for (Chart c : {Chart::U1, Chart::U2, Chart::V1, Chart::V2}) {
        ChartField f = chart_field(make_normal_form(fam, p), c);
        for (int i = 0; i < Poly2::N; ++i) CHECK(f.v_dot.at(i, 0) == 0.0);
      }
    }
  }
}

TEST_CASE("V charts read the U expression at antipodal coordinates") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 20; ++it) {
    Params5 p = random_params(rng);
    for (Family fam : {Family::I, Family::III, Family::V}) {
      NormalForm nf = make_normal_form(fam, p);
      ChartField u1 = chart_field(nf, Chart::U1);
      ChartField v1 = chart_field(nf, Chart::V1);
      std::uniform_real_distribution<double> U(-1.5, 1.5);
      for (int k = 0; k < 10; ++k) {
        double u = U(rng), v = U(rng);
        CHECK(v1.u_dot(u, v) == doctest::Approx(u1.u_dot(-u, -v)));
        CHECK(v1.v_dot(u, v) == doctest::Approx(u1.v_dot(-u, -v)));
      }
    }
  }
}

TEST_CASE("chart transitions reproduce the chart map examples") {
  DiskPoint a = DiskPoint::affine(2.0, 3.0);
  DiskPoint u1 = transition(a, Chart::U1);
  CHECK(u1.p.x == doctest::Approx(1.5));
  CHECK(u1.p.y == doctest::Approx(0.5));
  DiskPoint u2 = transition(a, Chart::U2);
  CHECK(u2.p.x == doctest::Approx(2.0 / 3.0));
  CHECK(u2.p.y == doctest::Approx(1.0 / 3.0));
  // round trip
  DiskPoint back = transition(u1, Chart::affine);
  CHECK(back.p.x == doctest::Approx(2.0));
  CHECK(back.p.y == doctest::Approx(3.0));
  // the equator has no affine image
  CHECK_THROWS_AS(transition(DiskPoint::in_chart(Chart::U1, 0.0, 0.0), Chart::affine),
                  Error);
  // left and lower half-planes land in the V charts
  DiskPoint l = DiskPoint::affine(-2.0, 3.0);
  DiskPoint v1 = transition(l, Chart::V1);
  CHECK(v1.p.x == doctest::Approx(1.5));
  CHECK(v1.p.y == doctest::Approx(0.5));
  DiskPoint lb = transition(v1, Chart::affine);
  CHECK(lb.p.x == doctest::Approx(-2.0));
  CHECK(lb.p.y == doctest::Approx(3.0));
}

TEST_CASE("round trips through the disk projection stay exact") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> U(-8.0, 8.0);
  for (int it = 0; it < 2000; ++it) {
    Vec2 p{U(rng), U(rng)};
    if (std::fabs(p.x) < 1e-3 && std::fabs(p.y) < 1e-3) continue;
    DiskPoint a = DiskPoint::affine(p.x, p.y);
    Ray r = to_ray(a);
    DiskPoint c = from_ray(r, preferred_chart(r));
    DiskPoint b = transition(c, Chart::affine);
    CHECK(std::fabs(b.p.x - p.x) <= 1e-12 * (1.0 + std::fabs(p.x)));
    CHECK(std::fabs(b.p.y - p.y) <= 1e-12 * (1.0 + std::fabs(p.y)));
  }
}

TEST_CASE("infinite equilibria of the first fixture and the empty regime") {
  SignPolicy pol = SignPolicy::strict();
  auto eqs = infinite_equilibria(make_normal_form(Family::I, {0, 0, 0, 3.75, -0.25}), pol);
  REQUIRE(eqs.size() == 6);
  auto find = [&](const char* label) -> const Equilibrium& {
    for (auto& e : eqs)
      if (e.label == label) return e;
    REQUIRE(false);
    return eqs[0];
  };
  CHECK(find("u1").pt.p.x == doctest::Approx(1.0));
  CHECK(find("u1").type == LocalType::Saddle);
  CHECK(find("u2").pt.p.x == doctest::Approx(0.0));
  CHECK(find("u2").type == LocalType::StableNode);
  CHECK(find("n").type == LocalType::StableNode);
  CHECK(find("n").eigen.lambda1 == doctest::Approx(-1.0));
  CHECK(find("n").eigen.lambda2 == doctest::Approx(-1.0));
  CHECK(find("s").type == LocalType::UnstableNode);
  CHECK(find("v1").type == LocalType::Saddle);
  CHECK(find("v2").type == LocalType::UnstableNode);

  // all discriminants negative: only the vertical pair remains
  auto only = infinite_equilibria(make_normal_form(Family::I, {0, 0, 2, 0, 2}), pol);
  CHECK(only.size() == 2);
}

TEST_CASE("family IV equator points carry semi-hyperbolic saddle/node types") {
  SignPolicy pol = SignPolicy::strict();
  auto eqs = infinite_equilibria(make_normal_form(Family::IV, {1, 1, 0, 0, 0}), pol);
  REQUIRE(eqs.size() == 6);
  for (auto& e : eqs) {
    if (e.label == "u1" || e.label == "v1")
      CHECK(e.type == LocalType::SemiHyperbolicSaddle);
    if (e.label == "u2") CHECK(e.type == LocalType::SemiHyperbolicStableNode);
    if (e.label == "v2") CHECK(e.type == LocalType::SemiHyperbolicUnstableNode);
  }
}

TEST_CASE("family III merged equator points are nilpotent or degenerate") {
  SignPolicy pol = SignPolicy::strict();
  auto eqs = infinite_equilibria(make_normal_form(Family::III, {2, 2, 1, 1, 0.2}), pol);
  REQUIRE(eqs.size() == 4);
  for (auto& e : eqs) {
    if (e.label == "u12" || e.label == "v12") {
      CHECK(e.merged);
      CHECK((e.type == LocalType::NilpotentSaddleNode ||
             e.type == LocalType::DegenerateSaddleNode));
    }
  }
}

TEST_CASE("transformation oracle: chart fields equal the pushforward of the plane field") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> U(-1.2, 1.2);
  std::uniform_real_distribution<double> V(0.15, 1.2);
  for (int it = 0; it < 50; ++it) {
    Params5 p = random_params(rng);
    for (Family fam :
         {Family::I, Family::II, Family::III, Family::IV, Family::V}) {
      NormalForm nf = make_normal_form(fam, p);
      AffineField aff = affine_field(nf);
      CompactifiedSystem cs(nf);
      for (Chart chart : {Chart::U1, Chart::U2, Chart::V1, Chart::V2}) {
        for (int k = 0; k < 5; ++k) {
          DiskPoint q = DiskPoint::in_chart(chart, U(rng), V(rng));
          DiskPoint a = transition(q, Chart::affine);
          Vec2 f{aff.P(a.p.x, a.p.y), aff.Q(a.p.x, a.p.y)};
          // finite differences of the chart map along the flow
          const double h = 1e-7 / (1.0 + f.norm());
          DiskPoint fwd = transition(
              DiskPoint::affine(a.p.x + h * f.x, a.p.y + h * f.y), chart);
          DiskPoint bwd = transition(
              DiskPoint::affine(a.p.x - h * f.x, a.p.y - h * f.y), chart);
          Vec2 push{(fwd.p.x - bwd.p.x) / (2 * h), (fwd.p.y - bwd.p.y) / (2 * h)};
          // normalization factor v^(d-1)
          Vec2 expect = push * q.p.y;
          Vec2 got = cs.eval(q);
          double scale = 1.0 + got.norm();
          CHECK(std::fabs(expect.x - got.x) <= 1e-6 * scale);
          CHECK(std::fabs(expect.y - got.y) <= 1e-6 * scale);
        }
      }
    }
  }
}

TEST_CASE("the vertical pair is always a hyperbolic node pair") {
  std::mt19937_64 rng(37);
  SignPolicy pol = SignPolicy::tolerant();
  for (int it = 0; it < 40; ++it) {
    Params5 p = random_params(rng);
    for (Family fam :
         {Family::I, Family::II, Family::III, Family::IV, Family::V}) {
      auto eqs = infinite_equilibria(make_normal_form(fam, p), pol);
      bool saw_n = false, saw_s = false;
      for (auto& e : eqs) {
        if (e.label == "n") {
          saw_n = true;
          CHECK(e.eigen.lambda1 == doctest::Approx(-1.0));
          CHECK(e.eigen.lambda2 == doctest::Approx(-1.0));
        }
        if (e.label == "s") {
          saw_s = true;
          CHECK(e.eigen.lambda1 == doctest::Approx(1.0));
          CHECK(e.eigen.lambda2 == doctest::Approx(1.0));
        }
      }
      CHECK(saw_n);
      CHECK(saw_s);
      // antipodal pairing of the remaining points
      for (auto& e : eqs) {
        if (e.label == "n" || e.label == "s") continue;
        Vec2 d = disk_project(e.pt);
        bool has_partner = false;
        for (auto& o : eqs) {
          Vec2 od = disk_project(o.pt);
          if (dist(od, Vec2{-d.x, -d.y}) < 1e-9) has_partner = true;
        }
        CHECK(has_partner);
      }
    }
  }
}
