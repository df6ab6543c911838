#include "flow.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "error.hpp"
#include "sector.hpp"

namespace riccati {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187,
                 A53 = 64448.0 / 6561, A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = B1 - 5179.0 / 57600, E3 = B3 - 7571.0 / 16695,
                 E4 = B4 - 393.0 / 640, E5 = B5 + 92097.0 / 339200,
                 E6 = B6 - 187.0 / 2100, E7 = -1.0 / 40;

struct Stepper {
  const CompactifiedSystem& cs;
  double dir;

  // unit-speed reparametrization: time becomes arc length in the current
  // chart, so algebraic approaches to degenerate points stay cheap
  Vec2 field(const DiskPoint& q) const {
    Vec2 f = cs.eval(q);
    double n = f.norm();
    return f * (dir / (1e-12 + n));
  }

  // one embedded step in the current chart; returns error estimate
  double step(const DiskPoint& z, double h, Vec2& out) const {
    auto f = [&](Vec2 p) { return field(DiskPoint{z.chart, p}); };
    const Vec2 y = z.p;
    Vec2 k1 = f(y);
    Vec2 k2 = f(y + k1 * (A21 * h));
    Vec2 k3 = f(y + k1 * (A31 * h) + k2 * (A32 * h));
    Vec2 k4 = f(y + k1 * (A41 * h) + k2 * (A42 * h) + k3 * (A43 * h));
    Vec2 k5 = f(y + k1 * (A51 * h) + k2 * (A52 * h) + k3 * (A53 * h) +
                k4 * (A54 * h));
    Vec2 k6 = f(y + k1 * (A61 * h) + k2 * (A62 * h) + k3 * (A63 * h) +
                k4 * (A64 * h) + k5 * (A65 * h));
    Vec2 y5 = y + (k1 * B1 + k3 * B3 + k4 * B4 + k5 * B5 + k6 * B6) * h;
    Vec2 k7 = f(y5);
    Vec2 err =
        (k1 * E1 + k3 * E3 + k4 * E4 + k5 * E5 + k6 * E6 + k7 * E7) * h;
    out = y5;
    const double sc = 1.0 + std::max(std::fabs(y.x), std::fabs(y.y));
    return std::max(std::fabs(err.x), std::fabs(err.y)) / sc;
  }
};

// local field around an equilibrium, in its own chart coordinates
std::function<Vec2(Vec2)> local_field(const CompactifiedSystem& cs,
                                      const Equilibrium& eq) {
  DiskPoint base = eq.pt;
  return [&cs, base](Vec2 w) {
    return cs.eval(DiskPoint{base.chart, base.p + w});
  };
}

// flow direction restricted to the center manifold: the reduced dynamics
// along the zero-eigenvector direction is the quadratic of the field
// projected onto the zero LEFT-eigenvector (curvature of the manifold only
// feeds the transverse component, which the left projection annihilates)
int center_outflow_sign(const CompactifiedSystem& cs, const Equilibrium& eq,
                        Vec2 center_dir, double delta) {
  auto J = cs.jacobian(eq.pt);
  // left null vector of J
  Vec2 l{-J[1][0], J[0][0]};
  if (l.norm() < 1e-14 * (1.0 + std::fabs(J[0][1]) + std::fabs(J[1][1])))
    l = Vec2{-J[1][1], J[0][1]};
  if (l.norm() == 0.0) l = Vec2{-center_dir.y, center_dir.x}; // J == 0
  l = l.normalized();
  double orient = l.dot(center_dir);
  if (std::fabs(orient) < 1e-12) return 0;
  auto f = local_field(cs, eq);
  for (double d : {delta, 10.0 * delta, 0.1 * delta}) {
    double o = f(center_dir * d).dot(l) * (orient > 0.0 ? 1.0 : -1.0);
    if (std::fabs(o) > 1e-14 * d) return o > 0.0 ? 1 : -1;
  }
  return 0;
}

DiskPoint maybe_switch(const DiskPoint& z, const FlowOptions& opt) {
  Ray r = to_ray(z);
  if (z.chart == Chart::affine) {
    if (z.p.norm() > opt.switch_radius) return from_ray(r, preferred_chart(r));
    return z;
  }
  if (r.Z > 0.0) {
    const double x = r.X / r.Z, y = r.Y / r.Z;
    if (std::hypot(x, y) < opt.return_radius)
      return DiskPoint::affine(x, y);
  }
  if (std::fabs(z.p.x) > 2.5) {
    Chart c = preferred_chart(r);
    if (c != Chart::affine && c != z.chart) return from_ray(r, c);
  }
  return z;
}

} // namespace

Trajectory integrate(const CompactifiedSystem& cs,
                     const std::vector<Equilibrium>& equilibria,
                     const DiskPoint& start, bool forward,
                     const FlowOptions& opt) {
  Trajectory tr;
  tr.forward = forward;

  DiskPoint z = start;
  Vec2 zdisk = disk_project(z);
  Vec3 zs = sphere_project(z);
  std::vector<Vec3> eq_sphere(equilibria.size());
  for (std::size_t i = 0; i < equilibria.size(); ++i)
    eq_sphere[i] = sphere_project(equilibria[i].pt);
  for (const auto& es : eq_sphere)
    if (sphere_dist(zs, es) < 1e-8)
      fail(Errc::bad_input, "integration start lies on an equilibrium");

  Stepper st{cs, forward ? 1.0 : -1.0};

  std::vector<bool> armed(equilibria.size());
  for (std::size_t i = 0; i < equilibria.size(); ++i)
    armed[i] = sphere_dist(zs, eq_sphere[i]) > 1e-3;

  // per-equilibrium capture data: for semi-hyperbolic saddle-nodes the
  // admissible approaches lie in the parabolic half-plane (bounded by the
  // stable-eigenvector line, containing the inward center direction) or
  // along the eigenvector rays; orbits sweeping through the pinch of a
  // hyperbolic sector never satisfy this
  struct CapInfo {
    double jnorm = 0.0;
    bool wedge = false;
    Vec2 vs{1.0, 0.0};  // eigvec line of the nonzero eigenvalue
    double side = 0.0;  // sign of cross(vs, center-in) for this direction
  };
  std::vector<CapInfo> cap(equilibria.size());
  for (std::size_t i = 0; i < equilibria.size(); ++i) {
    const Equilibrium& eq = equilibria[i];
    auto J = cs.jacobian(eq.pt);
    CapInfo ci;
    ci.jnorm = std::max({std::fabs(J[0][0]), std::fabs(J[0][1]),
                         std::fabs(J[1][0]), std::fabs(J[1][1])});
    if (eq.type == LocalType::SemiHyperbolicSaddleNode && !eq.eigen.complex) {
      const Eigenpair& e = eq.eigen;
      bool l1_zero = std::fabs(e.lambda1) <= std::fabs(e.lambda2) * 1e-9;
      Vec2 vs = l1_zero ? Vec2{e.v2[0], e.v2[1]} : Vec2{e.v1[0], e.v1[1]};
      Vec2 v0 = l1_zero ? Vec2{e.v1[0], e.v1[1]} : Vec2{e.v2[0], e.v2[1]};
      int o = center_outflow_sign(cs, eq, v0.normalized(), 1e-3);
      if (o != 0) {
        double sigma = forward ? -o : o; // inward center side
        Vec2 cin = v0.normalized() * sigma;
        ci.vs = vs.normalized();
        double s = ci.vs.cross(cin);
        if (std::fabs(s) > 1e-9) {
          ci.wedge = true;
          ci.side = s > 0.0 ? 1.0 : -1.0;
        }
      }
    }
    cap[i] = ci;
  }

  // gates that open a capture attempt; a gate only makes the capture
  // pending, confirmed when the distance keeps shrinking
  auto capture_gate = [&](int i, const DiskPoint& q, double d) {
    const Equilibrium& eq = equilibria[i];
    if (eq.type == LocalType::StableNode || eq.type == LocalType::UnstableNode)
      return d < opt.eq_radius;
    DiskPoint local;
    try {
      local = transition(q, eq.pt.chart);
    } catch (const Error&) {
      return false;
    }
    Vec2 w = local.p - eq.pt.p;
    auto J = cs.jacobian(eq.pt);
    double quad = w.x * (J[0][0] * w.x + J[0][1] * w.y) +
                  w.y * (J[1][0] * w.x + J[1][1] * w.y);
    if (!forward) quad = -quad;
    if (eq.type == LocalType::Saddle)
      return d < opt.eq_radius && quad < 0.0;
    if (d >= 1e-3) return false;
    if (cap[i].wedge) {
      double sinq = cap[i].vs.cross(w.normalized()) * cap[i].side;
      if (sinq < -0.25) return false; // inside a hyperbolic sector
    }
    double speed = cs.eval(local).norm();
    double wd = w.norm();
    return speed <= 2.0 * (1.0 + cap[i].jnorm) * wd * wd || quad < 0.0;
  };

  double t = 0.0, h = 1e-3;
  // per-equilibrium pending capture distance (infinity = no attempt)
  std::vector<double> pend0(equilibria.size(),
                            std::numeric_limits<double>::infinity());
  tr.samples.push_back({z, zdisk, t});

  for (int step = 0; step < opt.max_steps; ++step) {
    // keep steps below the distance to the nearest equilibrium: the
    // unit-speed field has no natural slow-down there and would otherwise
    // hop across the termination ball of a passed saddle
    double dmin = 1e30;
    for (const auto& es : eq_sphere) dmin = std::min(dmin, sphere_dist(zs, es));
    double hcap = std::max(0.3 * dmin, 1e-7);
    double hstep = std::min(h, hcap);

    Vec2 ynew;
    double err = st.step(z, hstep, ynew);
    if (!std::isfinite(err) || err > opt.rtol) {
      double f = std::isfinite(err) && err > 0.0
                     ? std::max(0.2, 0.9 * std::pow(opt.rtol / err, 0.2))
                     : 0.2;
      h = hstep * f;
      if (h < opt.min_step) {
        tr.termination = Termination::StepFailure;
        return tr;
      }
      continue;
    }

    DiskPoint znew{z.chart, ynew};
    if (znew.chart != Chart::affine && znew.p.y < 0.0) {
      if (znew.p.y > -1e-12) {
        znew.p.y = 0.0;
      } else {
        h = 0.5 * hstep;
        if (h < opt.min_step) {
          tr.termination = Termination::StepFailure;
          return tr;
        }
        continue;
      }
    }

    Vec2 ndisk = disk_project(znew);
    Vec3 ns = sphere_project(znew);
    t += hstep;
    tr.arc_length += sphere_dist(ns, zs);
    z = znew;
    zdisk = ndisk;
    zs = ns;
    tr.samples.push_back({z, zdisk, t});

    for (std::size_t i = 0; i < equilibria.size(); ++i) {
      double d = sphere_dist(zs, eq_sphere[i]);
      if (!armed[i]) {
        if (d > 1e-3) armed[i] = true;
        continue;
      }
      if (d >= 3.0 * pend0[i]) {
        pend0[i] = std::numeric_limits<double>::infinity(); // swept past
        continue;
      }
      if (std::isinf(pend0[i]) && d < 1e-3 && capture_gate((int)i, z, d))
        pend0[i] = d;
      if (!std::isinf(pend0[i]) && d <= 0.3 * pend0[i]) {
        tr.termination = Termination::ReachedEquilibrium;
        if (forward) tr.omega_limit = (int)i;
        else tr.alpha_limit = (int)i;
        tr.samples.push_back({equilibria[i].pt, equilibria[i].disk_pos, t + d});
        return tr;
      }
    }

    DiskPoint sw = maybe_switch(z, opt);
    if (sw.chart != z.chart) {
      z = sw;
      zdisk = disk_project(z);
      zs = sphere_project(z);
    }

    if (tr.arc_length > opt.arc_budget) {
      tr.termination = Termination::LeftTimeBudget;
      return tr;
    }
    if (err > 0.0)
      h = std::min(hstep * std::min(5.0, 0.9 * std::pow(opt.rtol / err, 0.2)),
                   0.1);
    else
      h = std::min(hstep * 5.0, 0.1);
  }
  tr.termination = Termination::LeftTimeBudget;
  return tr;
}

namespace {

// does a short probe integration move away from the equilibrium?
bool probe_outgoing(const CompactifiedSystem& cs, const Equilibrium& eq,
                    Vec2 offset) {
  auto f = local_field(cs, eq);
  Vec2 w = offset;
  const double r0 = w.norm();
  const double hstep = 0.05 * r0;
  for (int i = 0; i < 400; ++i) {
    // classic RK4 on the unit-speed local field
    auto g = [&](Vec2 p) {
      Vec2 v = f(p);
      return v * (1.0 / (1e-15 + v.norm()));
    };
    Vec2 k1 = g(w), k2 = g(w + k1 * (hstep / 2)), k3 = g(w + k2 * (hstep / 2)),
         k4 = g(w + k3 * hstep);
    w = w + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (hstep / 6.0);
    double r = w.norm();
    if (r > 2.0 * r0) return true;
    if (r < 0.5 * r0) return false;
  }
  // drift dominates: compare final to initial radius
  return w.norm() > r0;
}

// seed on the slow manifold at distance `far` along the center direction:
// one Newton solve of the strong component's vanishing keeps the seed inside
// the contracting funnel of the separatrix while skipping the slow crawl
// near the equilibrium.
Vec2 slow_manifold_offset(const CompactifiedSystem& cs, const Equilibrium& eq,
                          Vec2 center_dir, bool strong_is_second,
                          double far) {
  auto f = local_field(cs, eq);
  // coordinates: s along the center direction, t along the strong axis
  Vec2 strong = strong_is_second ? Vec2{0.0, 1.0} : Vec2{1.0, 0.0};
  Vec2 base = center_dir * far;
  double t = 0.0;
  for (int it = 0; it < 60; ++it) {
    Vec2 p = base + strong * t;
    double g = strong_is_second ? f(p).y : f(p).x;
    double h = 1e-7 * (1.0 + std::fabs(t));
    Vec2 ph = base + strong * (t + h);
    double gp = ((strong_is_second ? f(ph).y : f(ph).x) - g) / h;
    if (gp == 0.0) break;
    double step = g / gp;
    t -= step;
    if (std::fabs(step) < 1e-13 * (1.0 + std::fabs(t))) break;
  }
  if (!std::isfinite(t) || std::fabs(t) > 2.0 * far) t = 0.0;
  return base + strong * t;
}

bool is_vertical(Vec2 v) { return std::fabs(v.x) <= 1e-9 * v.norm(); }

void eigen_seed_pair(std::vector<Seed>& out, const Equilibrium& eq, Vec2 dir,
                     bool fwd, double delta) {
  Vec2 d = dir.normalized();
  out.push_back({DiskPoint{eq.pt.chart, eq.pt.p + d * delta}, fwd});
  out.push_back({DiskPoint{eq.pt.chart, eq.pt.p - d * delta}, fwd});
}

void finite_seeds(const CompactifiedSystem& cs, const Equilibrium& eq,
                  const FlowOptions& opt, std::vector<Seed>& out) {
  const Eigenpair& e = eq.eigen;
  const double delta = opt.seed_offset;
  switch (topo_class(eq.type)) {
    case TopoClass::Source:
    case TopoClass::Sink:
      return;
    case TopoClass::Saddle: {
      // the invariant-line eigendirection is vertical; trace the other pair
      struct {
        double lam;
        Vec2 v;
      } cand[2] = {{e.lambda1, {e.v1[0], e.v1[1]}},
                   {e.lambda2, {e.v2[0], e.v2[1]}}};
      for (auto& c : cand)
        if (!is_vertical(c.v)) eigen_seed_pair(out, eq, c.v, c.lam > 0.0, delta);
      return;
    }
    case TopoClass::SaddleNode:
      break;
  }

  if (eq.type == LocalType::SemiHyperbolicSaddleNode) {
    const bool l1_zero = std::fabs(e.lambda1) <= std::fabs(e.lambda2) * 1e-9 ||
                         e.lambda1 == 0.0;
    const double lam = l1_zero ? e.lambda2 : e.lambda1;
    const Vec2 vn = l1_zero ? Vec2{e.v2[0], e.v2[1]} : Vec2{e.v1[0], e.v1[1]};
    const Vec2 v0 = l1_zero ? Vec2{e.v1[0], e.v1[1]} : Vec2{e.v2[0], e.v2[1]};
    if (!is_vertical(vn)) {
      // hyperbolic pair transverse to the line, center along the line
      eigen_seed_pair(out, eq, vn, lam > 0.0, delta);
      return;
    }
    // hyperbolic pair runs along the line; one center separatrix sits on
    // the side whose flow opposes the hyperbolic stability
    Vec2 v = v0.normalized();
    if (v.x < 0.0) v = -v;
    for (double side : {1.0, -1.0}) {
      Vec2 dir = v * side;
      int o = center_outflow_sign(cs, eq, dir, opt.ring_radius);
      if (o != 0 && (o > 0) == (lam < 0.0)) {
        Vec2 off = slow_manifold_offset(cs, eq, dir, true, 0.05);
        out.push_back({DiskPoint{eq.pt.chart, eq.pt.p + off}, o > 0});
        return;
      }
    }
    return;
  }

  // nilpotent / degenerate: ring-detected characteristic directions,
  // skipping the invariant-line directions
  auto f = local_field(cs, eq);
  RingOptions ropt;
  ropt.radius = opt.ring_radius;
  RingAnalysis ra = ring_analysis(f, ropt);
  for (const auto& ch : ra.characteristics) {
    double dxc = std::cos(ch.theta);
    if (std::fabs(dxc) < 1e-4) continue; // along the vertical line
    Vec2 off{std::cos(ch.theta) * ropt.radius, std::sin(ch.theta) * ropt.radius};
    bool outgoing = probe_outgoing(cs, eq, off);
    out.push_back({DiskPoint{eq.pt.chart, eq.pt.p + off}, outgoing});
  }
}

void infinite_seeds(const CompactifiedSystem& cs, const Equilibrium& eq,
                    const FlowOptions& opt, std::vector<Seed>& out) {
  if (eq.label == "n" || eq.label == "s") return;
  const Eigenpair& e = eq.eigen;
  const double delta = opt.seed_offset;

  auto interior_seed = [&](Vec2 dir, bool fwd) {
    Vec2 v = dir.normalized();
    if (v.y < 0.0) v = -v; // interior is v > 0
    if (v.y <= 1e-9) return;
    out.push_back({DiskPoint{eq.pt.chart, eq.pt.p + v * delta}, fwd});
  };

  switch (topo_class(eq.type)) {
    case TopoClass::Source:
    case TopoClass::Sink:
      return;
    case TopoClass::Saddle: {
      if (eq.type == LocalType::Saddle) {
        // hyperbolic: one eigendirection runs along the equator, the other
        // enters the disk
        struct {
          double lam;
          Vec2 v;
        } cand[2] = {{e.lambda1, {e.v1[0], e.v1[1]}},
                     {e.lambda2, {e.v2[0], e.v2[1]}}};
        for (auto& c : cand)
          if (std::fabs(c.v.y) > 1e-9) interior_seed(c.v, c.lam > 0.0);
        return;
      }
      // semi-hyperbolic saddle (family IV ends): the transverse direction
      // is the center; its stability opposes the equator eigenvalue
      break;
    }
    case TopoClass::SaddleNode:
      break;
  }

  if (eq.type == LocalType::NilpotentSaddleNode ||
      eq.type == LocalType::DegenerateSaddleNode) {
    auto f = local_field(cs, eq);
    RingOptions ropt;
    ropt.radius = opt.ring_radius;
    ropt.full_circle = false;
    ropt.theta0 = 1e-5;
    ropt.theta1 = M_PI - 1e-5;
    RingAnalysis ra = ring_analysis(f, ropt);
    for (const auto& ch : ra.characteristics) {
      Vec2 off{std::cos(ch.theta) * ropt.radius,
               std::sin(ch.theta) * ropt.radius};
      bool outgoing = probe_outgoing(cs, eq, off);
      out.push_back({DiskPoint{eq.pt.chart, eq.pt.p + off}, outgoing});
    }
    return;
  }

  // semi-hyperbolic: nonzero eigenvalue along the equator or transverse
  const bool l1_zero =
      std::fabs(e.lambda1) <= std::fabs(e.lambda2) * 1e-9 || e.lambda1 == 0.0;
  const double lam = l1_zero ? e.lambda2 : e.lambda1;
  const Vec2 vn = l1_zero ? Vec2{e.v2[0], e.v2[1]} : Vec2{e.v1[0], e.v1[1]};
  const Vec2 v0 = l1_zero ? Vec2{e.v1[0], e.v1[1]} : Vec2{e.v2[0], e.v2[1]};

  if (std::fabs(vn.y) > 1e-9) {
    // hyperbolic direction enters the disk: a stable/unstable interior pair
    interior_seed(vn, lam > 0.0);
    return;
  }
  // hyperbolic direction along the equator, center direction transverse:
  // an interior separatrix exists iff the center flow opposes lambda
  Vec2 v = v0.normalized();
  if (v.y < 0.0) v = -v;
  if (v.y <= 1e-9) return;
  int o = center_outflow_sign(cs, eq, v, opt.ring_radius);
  if (o != 0 && (o > 0) == (lam < 0.0)) {
    Vec2 off = slow_manifold_offset(cs, eq, v, false, 0.05);
    out.push_back({DiskPoint{eq.pt.chart, eq.pt.p + off}, o > 0});
  }
}

} // namespace

std::vector<Seed> separatrix_seeds(const CompactifiedSystem& cs,
                                   const Equilibrium& eq,
                                   const FlowOptions& opt) {
  std::vector<Seed> out;
  if (eq.at_infinity) infinite_seeds(cs, eq, opt, out);
  else finite_seeds(cs, eq, opt, out);
  return out;
}

namespace {

std::vector<Vec2> arc_polyline(double phi0, double phi1) {
  std::vector<Vec2> pl;
  const int n = 48;
  for (int i = 0; i <= n; ++i) {
    double phi = phi0 + (phi1 - phi0) * i / n;
    pl.push_back({std::cos(phi), std::sin(phi)});
  }
  return pl;
}

std::vector<Vec2> line_polyline(double x0, double ylo, double yhi) {
  // bounded segment of a vertical line, in disk projection
  std::vector<Vec2> pl;
  const int n = 32;
  for (int i = 0; i <= n; ++i) {
    double y = ylo + (yhi - ylo) * i / n;
    pl.push_back(disk_project(DiskPoint::affine(x0, y)));
  }
  return pl;
}

std::vector<Vec2> line_ray_polyline(double x0, double yend, bool upward) {
  // unbounded piece from yend to the vertical direction at infinity
  std::vector<Vec2> pl;
  const int n = 64;
  for (int i = 0; i < n; ++i) {
    double t = (double)i / n * (M_PI / 2 - 1e-6);
    double y = yend + (upward ? 1.0 : -1.0) * std::tan(t);
    pl.push_back(disk_project(DiskPoint::affine(x0, y)));
  }
  pl.push_back({0.0, upward ? 1.0 : -1.0});
  return pl;
}

} // namespace

SeparatrixSkeleton trace_separatrices(const NormalForm& nf,
                                      const SignPolicy& policy,
                                      const FlowOptions& opt) {
  CompactifiedSystem cs(nf);
  std::vector<Equilibrium> fin = finite_equilibria(nf, policy);
  std::vector<Equilibrium> inf = infinite_equilibria(nf, policy);

  std::sort(fin.begin(), fin.end(), [](const Equilibrium& a, const Equilibrium& b) {
    if (a.pt.p.x != b.pt.p.x) return a.pt.p.x < b.pt.p.x;
    return a.pt.p.y < b.pt.p.y;
  });
  std::sort(inf.begin(), inf.end(), [](const Equilibrium& a, const Equilibrium& b) {
    return equator_angle(a.pt) < equator_angle(b.pt);
  });

  std::vector<Equilibrium> all = fin;
  all.insert(all.end(), inf.begin(), inf.end());

  SeparatrixSkeleton sk;
  for (const auto& eq : all) {
    SkeletonNode n;
    n.disk_pos = eq.disk_pos;
    n.type = eq.type;
    n.topo = topo_class(eq.type);
    n.label = eq.label;
    n.at_infinity = eq.at_infinity;
    n.merged = eq.merged;
    sk.nodes.push_back(n);
  }
  const int nfin = (int)fin.size();
  for (int i = 0; i < (int)inf.size(); ++i) sk.equator_order.push_back(nfin + i);

  // equator arcs between consecutive infinite equilibria
  const int m = (int)inf.size();
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    double phi0 = equator_angle(inf[i].pt);
    double phi1 = equator_angle(inf[j].pt);
    if (j <= i) phi1 += 2.0 * M_PI;
    int dir = cs.equator_flow_sign(0.5 * (phi0 + phi1));
    SkeletonEdge e;
    e.kind = EdgeKind::EquatorArc;
    if (dir >= 0) {
      e.src = nfin + i;
      e.dst = nfin + j;
      e.polyline = arc_polyline(phi0, phi1);
    } else {
      e.src = nfin + j;
      e.dst = nfin + i;
      e.polyline = arc_polyline(phi1, phi0);
    }
    sk.edges.push_back(e);
  }

  // invariant vertical lines carrying finite equilibria
  const int node_n = sk.node_by_label("n");
  const int node_s = sk.node_by_label("s");
  std::vector<double> lines;
  if (nf.family == Family::I) lines = {0.0, -1.0};
  else if (nf.family == Family::II || nf.family == Family::III) lines = {0.0};
  const Poly2& Q = cs.affine().Q;
  for (double x0 : lines) {
    std::vector<int> on_line;
    for (int i = 0; i < nfin; ++i)
      if (fin[i].pt.p.x == x0) on_line.push_back(i);
    if (on_line.empty()) continue; // plain orbit, not separatrix-bearing
    auto add_line_edge = [&](int lo_node, int hi_node, double ymid,
                             std::vector<Vec2> pl) {
      SkeletonEdge e;
      e.kind = EdgeKind::InvariantLine;
      bool up = Q(x0, ymid) > 0.0;
      e.src = up ? lo_node : hi_node;
      e.dst = up ? hi_node : lo_node;
      if (!up) std::reverse(pl.begin(), pl.end());
      e.polyline = std::move(pl);
      sk.edges.push_back(e);
    };
    double ybot = fin[on_line.front()].pt.p.y;
    double ytop = fin[on_line.back()].pt.p.y;
    add_line_edge(node_s, on_line.front(), ybot - 1.0,
                  [&] {
                    auto pl = line_ray_polyline(x0, ybot, false);
                    std::reverse(pl.begin(), pl.end());
                    return pl;
                  }());
    for (std::size_t k = 0; k + 1 < on_line.size(); ++k) {
      double ya = fin[on_line[k]].pt.p.y, yb = fin[on_line[k + 1]].pt.p.y;
      add_line_edge(on_line[k], on_line[k + 1], 0.5 * (ya + yb),
                    line_polyline(x0, ya, yb));
    }
    add_line_edge(on_line.back(), node_n, ytop + 1.0,
                  line_ray_polyline(x0, ytop, true));
  }

  // traced separatrices
  for (int i = 0; i < (int)all.size(); ++i) {
    for (const Seed& seed : separatrix_seeds(cs, all[i], opt)) {
      Trajectory tr = integrate(cs, all, seed.start, seed.forward, opt);
      SkeletonEdge e;
      e.kind = EdgeKind::Separatrix;
      e.seed_node = i;
      e.seeded_at_src = seed.forward;
      std::vector<Vec2> pl;
      pl.push_back(all[i].disk_pos);
      for (const auto& s : tr.samples) pl.push_back(s.disk);
      if (seed.forward) {
        e.src = i;
        e.dst = tr.omega_limit.value_or(-1);
      } else {
        e.dst = i;
        e.src = tr.alpha_limit.value_or(-1);
        std::reverse(pl.begin(), pl.end());
      }
      e.unresolved = (tr.termination != Termination::ReachedEquilibrium);
      e.polyline = std::move(pl);
      sk.edges.push_back(e);
    }
  }

  merge_split_connections(sk);
  sk.has_unresolved = false;
  for (const auto& e : sk.edges)
    if (e.unresolved) sk.has_unresolved = true;

  compute_rotations(sk);
  return sk;
}

} // namespace riccati
