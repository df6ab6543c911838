#include "sector.hpp"

#include <cmath>

namespace riccati {

namespace {

double field_angle(const std::function<Vec2(Vec2)>& field, double radius,
                   double theta) {
  Vec2 f = field(Vec2{std::cos(theta), std::sin(theta)} * radius);
  return std::atan2(f.y, f.x);
}

// signed rotation of the field direction from theta0 to theta1, subdividing
// until each increment is unambiguous
double winding(const std::function<Vec2(Vec2)>& field, double radius,
               double t0, double t1, double a0, double a1, int depth) {
  double d = a1 - a0;
  while (d > M_PI) d -= 2.0 * M_PI;
  while (d < -M_PI) d += 2.0 * M_PI;
  if (std::fabs(d) < 0.5 || depth >= 40) return d;
  double tm = 0.5 * (t0 + t1);
  double am = field_angle(field, radius, tm);
  return winding(field, radius, t0, tm, a0, am, depth + 1) +
         winding(field, radius, tm, t1, am, a1, depth + 1);
}

} // namespace

RingAnalysis ring_analysis(const std::function<Vec2(Vec2)>& field,
                           const RingOptions& opt) {
  RingAnalysis ra;
  const int n = opt.samples;
  const double span = opt.theta1 - opt.theta0;
  const double dt = span / n;

  auto probe = [&](double theta) {
    Vec2 er{std::cos(theta), std::sin(theta)};
    Vec2 f = field(er * opt.radius);
    return std::pair<double, double>{f.dot(er), er.cross(f)};
  };

  std::vector<double> R(n), T(n), ang(n);
  for (int i = 0; i < n; ++i) {
    ang[i] = opt.theta0 + (i + 0.5) * dt;
    auto [r, t] = probe(ang[i]);
    R[i] = r;
    T[i] = t;
  }

  if (opt.full_circle) {
    const int coarse = 64;
    double total = 0.0;
    double prev = field_angle(field, opt.radius, opt.theta0);
    for (int i = 1; i <= coarse; ++i) {
      double t1 = opt.theta0 + span * i / coarse;
      double a1 = field_angle(field, opt.radius, t1);
      total += winding(field, opt.radius, t1 - span / coarse, t1, prev, a1, 0);
      prev = a1;
    }
    ra.index = (int)std::lround(total / (2.0 * M_PI));
  }

  int changes = 0, last = 0, first = 0;
  for (int i = 0; i < n; ++i) {
    int s = R[i] > 0.0 ? 1 : (R[i] < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    if (first == 0) first = s;
    last = s;
  }
  if (opt.full_circle && last != 0 && first != 0 && last != first) ++changes;
  ra.radial_sign_changes = changes;

  auto refine = [&](double lo, double hi, double flo) {
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = probe(mid).second;
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  for (int i = 0; i < n; ++i) {
    int j = i + 1;
    if (j == n) {
      if (!opt.full_circle) break;
      j = 0;
    }
    if (T[i] == 0.0) continue;
    double tj = T[j];
    double aj = (j == 0) ? ang[0] + span : ang[j];
    if ((T[i] > 0.0) != (tj >= 0.0)) {
      double theta = refine(ang[i], aj, T[i]);
      double rad = probe(theta).first;
      ra.characteristics.push_back({theta, rad});
    }
  }
  return ra;
}

bool saddle_node_signature(const RingAnalysis& ra) { return ra.index == 0; }

} // namespace riccati
