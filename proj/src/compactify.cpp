#include "compactify.hpp"

#include <cmath>

#include "error.hpp"
#include "sector.hpp"

namespace riccati {

namespace {

// substitute (x, y) = (1/v, u/v) and multiply by v^2:
// x^i y^j -> u^j v^{2-i-j}
Poly2 lift_u1(const Poly2& p) {
  Poly2 r;
  for (int i = 0; i < Poly2::N; ++i)
    for (int j = 0; j < Poly2::N; ++j) {
      double c = p.at(i, j);
      if (c == 0.0) continue;
      r.at(j, 2 - i - j) += c;
    }
  return r;
}

// substitute (x, y) = (u/v, 1/v) and multiply by v^2:
// x^i y^j -> u^i v^{2-i-j}
Poly2 lift_u2(const Poly2& p) {
  Poly2 r;
  for (int i = 0; i < Poly2::N; ++i)
    for (int j = 0; j < Poly2::N; ++j) {
      double c = p.at(i, j);
      if (c == 0.0) continue;
      r.at(i, 2 - i - j) += c;
    }
  return r;
}

Poly2 times_u(const Poly2& p) { return p.shifted(1, 0); }
Poly2 times_v(const Poly2& p) { return p.shifted(0, 1); }

// compose with (u, v) -> (-u, -v)
Poly2 antipodal(const Poly2& p) {
  Poly2 r;
  for (int i = 0; i < Poly2::N; ++i)
    for (int j = 0; j < Poly2::N; ++j)
      r.at(i, j) = ((i + j) % 2 == 0) ? p.at(i, j) : -p.at(i, j);
  return r;
}

} // namespace

ChartField chart_field(const AffineField& aff, Chart chart) {
  ChartField f;
  f.chart = chart;
  switch (chart) {
    case Chart::U1: {
      Poly2 P = lift_u1(aff.P), Q = lift_u1(aff.Q);
      f.u_dot = -times_u(P) + Q;
      f.v_dot = -times_v(P);
      break;
    }
    case Chart::U2: {
      Poly2 P = lift_u2(aff.P), Q = lift_u2(aff.Q);
      f.u_dot = P + -times_u(Q);
      f.v_dot = -times_v(Q);
      break;
    }
    case Chart::V1: {
      // with the chart maps psi_k = -phi_k the V expression is the U
      // expression read at the antipodal chart coordinates
      ChartField g = chart_field(aff, Chart::U1);
      f.u_dot = antipodal(g.u_dot);
      f.v_dot = antipodal(g.v_dot);
      break;
    }
    case Chart::V2: {
      ChartField g = chart_field(aff, Chart::U2);
      f.u_dot = antipodal(g.u_dot);
      f.v_dot = antipodal(g.v_dot);
      break;
    }
    case Chart::affine:
      f.u_dot = aff.P;
      f.v_dot = aff.Q;
      break;
  }
  return f;
}

ChartField chart_field(const NormalForm& nf, Chart chart) {
  return chart_field(affine_field(nf), chart);
}

CompactifiedSystem::CompactifiedSystem(const NormalForm& nf)
    : nf_(nf), aff_(affine_field(nf)) {
  const Chart cs[4] = {Chart::U1, Chart::U2, Chart::V1, Chart::V2};
  for (int i = 0; i < 4; ++i) charts_[i] = chart_field(aff_, cs[i]);
  aff_d_ = {aff_.P.dx(), aff_.P.dy(), aff_.Q.dx(), aff_.Q.dy()};
  for (int i = 0; i < 4; ++i)
    chart_d_[i] = {charts_[i].u_dot.dx(), charts_[i].u_dot.dy(),
                   charts_[i].v_dot.dx(), charts_[i].v_dot.dy()};
}

const ChartField& CompactifiedSystem::chart(Chart c) const {
  switch (c) {
    case Chart::U1: return charts_[0];
    case Chart::U2: return charts_[1];
    case Chart::V1: return charts_[2];
    case Chart::V2: return charts_[3];
    default: fail(Errc::bad_input, "no chart field for the affine chart");
  }
}

Vec2 CompactifiedSystem::eval(const DiskPoint& q) const {
  if (q.chart == Chart::affine)
    return {aff_.P(q.p.x, q.p.y), aff_.Q(q.p.x, q.p.y)};
  const ChartField& f = chart(q.chart);
  return {f.u_dot(q.p.x, q.p.y), f.v_dot(q.p.x, q.p.y)};
}

std::array<std::array<double, 2>, 2> CompactifiedSystem::jacobian(
    const DiskPoint& q) const {
  const Derivs* d = &aff_d_;
  if (q.chart != Chart::affine) {
    switch (q.chart) {
      case Chart::U1: d = &chart_d_[0]; break;
      case Chart::U2: d = &chart_d_[1]; break;
      case Chart::V1: d = &chart_d_[2]; break;
      default: d = &chart_d_[3]; break;
    }
  }
  const double x = q.p.x, y = q.p.y;
  return {{{d->fx_x(x, y), d->fx_y(x, y)}, {d->fy_x(x, y), d->fy_y(x, y)}}};
}

int CompactifiedSystem::equator_flow_sign(double phi) const {
  DiskPoint q = equator_point(phi);
  Vec2 f = eval(q);
  Vec2 dv = disk_velocity(q, f);
  Vec2 tangent{-std::sin(phi), std::cos(phi)};
  double s = dv.dot(tangent);
  return s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
}

namespace {

Eigenpair chart_eigen(const CompactifiedSystem& cs, const DiskPoint& q) {
  return eig2(cs.jacobian(q));
}

} // namespace

std::vector<Equilibrium> infinite_equilibria(const NormalForm& nf,
                                             const SignPolicy& policy) {
  CompactifiedSystem cs(nf);
  std::vector<Equilibrium> out;

  auto add = [&](Chart chart, double u, const std::string& label, bool merged) {
    Equilibrium eq;
    eq.pt = DiskPoint::in_chart(chart, u, 0.0);
    eq.disk_pos = disk_project(eq.pt);
    eq.at_infinity = true;
    eq.merged = merged;
    eq.label = label;
    eq.eigen = chart_eigen(cs, eq.pt);
    eq.type = classify_infinite(nf, eq, policy);
    out.push_back(eq);
  };

  // the vertical directions are always equilibria: the equator polynomial
  // q(u) of U2 vanishes at the origin for every family
  add(Chart::U2, 0.0, "n", false);
  add(Chart::V2, 0.0, "s", false);

  // remaining equator points: roots of the U1 equator polynomial u_dot(u, 0);
  // the antipodal partners sit at -u in the V1 chart
  const Poly2& ud = cs.chart(Chart::U1).u_dot;
  Poly1 p({ud.at(0, 0), ud.at(1, 0), ud.at(2, 0)});
  auto signs = discriminant_signs(nf.params, policy);
  const bool uses_i2 = nf.family == Family::III || nf.family == Family::IV;
  RootSet rs = roots_quadratic(p, policy, uses_i2 ? signs[3] : signs[2]);
  if (rs.kind == RootSet::Kind::double_root) {
    add(Chart::U1, rs.roots[0], "u12", true);
    add(Chart::V1, -rs.roots[0], "v12", true);
  } else if (rs.kind == RootSet::Kind::two_simple) {
    add(Chart::U1, rs.roots[1], "u1", false); // larger root: p'(u) > 0
    add(Chart::U1, rs.roots[0], "u2", false);
    add(Chart::V1, -rs.roots[1], "v1", false);
    add(Chart::V1, -rs.roots[0], "v2", false);
  }
  return out;
}

LocalType classify_infinite(const NormalForm& nf, const Equilibrium& eq,
                            const SignPolicy& policy) {
  CompactifiedSystem cs(nf);
  const Eigenpair& e = eq.eigen;
  if (e.complex)
    fail(Errc::inconsistent_local_type,
         "complex eigenvalues at an infinite equilibrium");

  const double scale = std::max({1.0, std::fabs(e.lambda1), std::fabs(e.lambda2)});
  const int s1 = policy.sign(e.lambda1 / scale);
  const int s2 = policy.sign(e.lambda2 / scale);

  if (s1 != 0 && s2 != 0) {
    if (s1 * s2 < 0) return LocalType::Saddle;
    return s1 > 0 ? LocalType::UnstableNode : LocalType::StableNode;
  }

  // degenerate point: decide through the ring signature of the full chart
  // plane (v < 0 is the antipodal continuation, still polynomial)
  const ChartField& f = cs.chart(eq.pt.chart);
  const Vec2 p0 = eq.pt.p;
  auto shifted = [&](Vec2 w) {
    return Vec2{f.u_dot(p0.x + w.x, p0.y + w.y), f.v_dot(p0.x + w.x, p0.y + w.y)};
  };
  RingOptions opt;
  RingAnalysis ra = ring_analysis(shifted, opt);

  const bool both_zero = (s1 == 0 && s2 == 0);
  if (both_zero) {
    if (ra.index != 0)
      fail(Errc::inconsistent_local_type,
           "nilpotent equator point is not a saddle-node (index " +
               std::to_string(ra.index) + ")");
    auto j = cs.jacobian(eq.pt);
    const double jn = std::fabs(j[0][0]) + std::fabs(j[0][1]) +
                      std::fabs(j[1][0]) + std::fabs(j[1][1]);
    return jn <= 1e-12 ? LocalType::DegenerateSaddleNode
                       : LocalType::NilpotentSaddleNode;
  }

  if (ra.index == 0) return LocalType::SemiHyperbolicSaddleNode;
  if (ra.index == -1) return LocalType::SemiHyperbolicSaddle;
  if (ra.index == 1) {
    // node: the center flow shares the stability of the nonzero eigenvalue,
    // otherwise the index could not be +1
    const double lam = (s1 != 0) ? e.lambda1 : e.lambda2;
    return lam > 0.0 ? LocalType::SemiHyperbolicUnstableNode
                     : LocalType::SemiHyperbolicStableNode;
  }
  fail(Errc::inconsistent_local_type,
       "sector analysis found no admissible type at an infinite equilibrium");
}

} // namespace riccati
