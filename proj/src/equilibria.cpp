#include "equilibria.hpp"

#include <cmath>

#include "error.hpp"
#include "sector.hpp"

namespace riccati {

const char* local_type_name(LocalType t) {
  switch (t) {
    case LocalType::Saddle: return "saddle";
    case LocalType::StableNode: return "stable-node";
    case LocalType::UnstableNode: return "unstable-node";
    case LocalType::SemiHyperbolicSaddle: return "semi-hyperbolic-saddle";
    case LocalType::SemiHyperbolicStableNode: return "semi-hyperbolic-stable-node";
    case LocalType::SemiHyperbolicUnstableNode: return "semi-hyperbolic-unstable-node";
    case LocalType::SemiHyperbolicSaddleNode: return "semi-hyperbolic-saddle-node";
    case LocalType::NilpotentSaddleNode: return "nilpotent-saddle-node";
    case LocalType::DegenerateSaddleNode: return "degenerate-saddle-node";
  }
  return "?";
}

TopoClass topo_class(LocalType t) {
  switch (t) {
    case LocalType::Saddle:
    case LocalType::SemiHyperbolicSaddle: return TopoClass::Saddle;
    case LocalType::StableNode:
    case LocalType::SemiHyperbolicStableNode: return TopoClass::Sink;
    case LocalType::UnstableNode:
    case LocalType::SemiHyperbolicUnstableNode: return TopoClass::Source;
    default: return TopoClass::SaddleNode;
  }
}

const char* topo_class_name(TopoClass t) {
  switch (t) {
    case TopoClass::Saddle: return "saddle";
    case TopoClass::Source: return "source";
    case TopoClass::Sink: return "sink";
    case TopoClass::SaddleNode: return "saddle-node";
  }
  return "?";
}

namespace {

Eigenpair jacobian_eigen(const AffineField& f, double x, double y) {
  return eig2({{{f.P.dx()(x, y), f.P.dy()(x, y)},
                {f.Q.dx()(x, y), f.Q.dy()(x, y)}}});
}

// points on one invariant vertical line x = x0, where the y-dynamics
// restrict to y^2 + beta*y + gamma; disc_sign carries the decimal-exact
// discriminant trichotomy
void line_points(const NormalForm& nf, const AffineField& field, double x0,
                 double beta, double gamma, const char* upper_label,
                 const char* lower_label, const char* merged_label,
                 const SignPolicy& policy, int disc_sign,
                 std::vector<Equilibrium>& out) {
  RootSet rs = roots_quadratic(Poly1({gamma, beta, 1.0}), policy, disc_sign);
  if (rs.kind == RootSet::Kind::no_real_roots) return;

  auto make = [&](double y, const std::string& label, bool merged) {
    Equilibrium eq;
    eq.pt = DiskPoint::affine(x0, y);
    eq.disk_pos = disk_project(eq.pt);
    eq.eigen = jacobian_eigen(field, x0, y);
    eq.label = label;
    eq.merged = merged;
    out.push_back(eq);
  };

  if (rs.kind == RootSet::Kind::double_root) {
    make(rs.roots[0], merged_label, true);
  } else {
    make(rs.roots[1], upper_label, false);
    make(rs.roots[0], lower_label, false);
  }
  (void)nf;
}

LocalType type_from_eigen(const Eigenpair& e, const SignPolicy& policy) {
  if (e.complex)
    fail(Errc::inconsistent_local_type,
         "complex eigenvalues cannot occur at a Riccati equilibrium");
  const double scale = std::max({1.0, std::fabs(e.lambda1), std::fabs(e.lambda2)});
  const int s1 = policy.sign(e.lambda1 / scale);
  const int s2 = policy.sign(e.lambda2 / scale);
  if (s1 != 0 && s2 != 0) {
    if (s1 * s2 < 0) return LocalType::Saddle;
    return s1 > 0 ? LocalType::UnstableNode : LocalType::StableNode;
  }
  if (s1 == 0 && s2 == 0) return LocalType::NilpotentSaddleNode;
  return LocalType::SemiHyperbolicSaddleNode;
}

} // namespace

std::vector<Equilibrium> finite_equilibria(const NormalForm& nf,
                                           const SignPolicy& policy) {
  std::vector<Equilibrium> out;
  if (nf.family == Family::IV || nf.family == Family::V) return out;

  const Params5& p = nf.params;
  const AffineField field = affine_field(nf);
  auto signs = discriminant_signs(p, policy); // (dF1, dF2, dI1, dI2)

  // x = 0 line: y^2 + b y + e
  line_points(nf, field, 0.0, p.b, p.e, "q1", "q2", "q12", policy, signs[0],
              out);
  if (nf.family == Family::I) {
    // x = -1 line: y^2 + (b-a) y + (c-d+e)
    line_points(nf, field, -1.0, p.b - p.a, p.c - p.d + p.e, "p1", "p2", "p12",
                policy, signs[1], out);
  }
  for (auto& eq : out) eq.type = classify_finite(nf, eq, policy);
  return out;
}

LocalType classify_finite(const NormalForm& nf, const Equilibrium& eq,
                          const SignPolicy& policy) {
  LocalType t = type_from_eigen(eq.eigen, policy);

  if (t == LocalType::NilpotentSaddleNode) {
    // distinguish a vanishing Jacobian
    const AffineField f = affine_field(nf);
    const double x = eq.pt.p.x, y = eq.pt.p.y;
    const double jn = std::fabs(f.P.dx()(x, y)) + std::fabs(f.P.dy()(x, y)) +
                      std::fabs(f.Q.dx()(x, y)) + std::fabs(f.Q.dy()(x, y));
    if (jn <= 1e-12) t = LocalType::DegenerateSaddleNode;
  }

  if (t == LocalType::SemiHyperbolicSaddleNode ||
      t == LocalType::NilpotentSaddleNode ||
      t == LocalType::DegenerateSaddleNode) {
    const AffineField f = affine_field(nf);
    const Vec2 p0 = eq.pt.p;
    RingOptions opt;
    auto shifted = [&](Vec2 w) {
      return Vec2{f.P(p0.x + w.x, p0.y + w.y), f.Q(p0.x + w.x, p0.y + w.y)};
    };
    RingAnalysis ra = ring_analysis(shifted, opt);
    if (!saddle_node_signature(ra))
      fail(Errc::inconsistent_local_type,
           "sector analysis disagrees with saddle-node type (index " +
               std::to_string(ra.index) + ")");
  }
  return t;
}

} // namespace riccati
