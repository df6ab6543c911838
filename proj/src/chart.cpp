#include "chart.hpp"

#include <cmath>

#include "error.hpp"

namespace riccati {

const char* chart_name(Chart c) {
  switch (c) {
    case Chart::affine: return "affine";
    case Chart::U1: return "U1";
    case Chart::U2: return "U2";
    case Chart::V1: return "V1";
    case Chart::V2: return "V2";
  }
  return "?";
}

Ray to_ray(const DiskPoint& q) {
  const double a = q.p.x, b = q.p.y;
  switch (q.chart) {
    case Chart::affine: return {a, b, 1.0};
    case Chart::U1: return {1.0, a, b};   // (u,v) = (y/x, 1/x)
    case Chart::V1: return {-1.0, a, b};  // (u,v) = (-y/x, -1/x)
    case Chart::U2: return {a, 1.0, b};   // (u,v) = (x/y, 1/y)
    case Chart::V2: return {a, -1.0, b};  // (u,v) = (-x/y, -1/y)
  }
  return {};
}

DiskPoint from_ray(const Ray& r, Chart target) {
  auto need = [&](double denom, const char* what) {
    if (denom == 0.0)
      fail(Errc::out_of_domain, std::string("point not in chart ") + what);
  };
  switch (target) {
    case Chart::affine:
      need(r.Z, "affine");
      if (r.Z <= 0.0) fail(Errc::out_of_domain, "point not in chart affine");
      return DiskPoint::affine(r.X / r.Z, r.Y / r.Z);
    case Chart::U1:
      need(r.X, "U1");
      if (r.X < 0.0) fail(Errc::out_of_domain, "point not in chart U1");
      return DiskPoint::in_chart(Chart::U1, r.Y / r.X, r.Z / r.X);
    case Chart::V1:
      if (r.X >= 0.0) fail(Errc::out_of_domain, "point not in chart V1");
      return DiskPoint::in_chart(Chart::V1, -r.Y / r.X, -r.Z / r.X);
    case Chart::U2:
      if (r.Y <= 0.0) fail(Errc::out_of_domain, "point not in chart U2");
      return DiskPoint::in_chart(Chart::U2, r.X / r.Y, r.Z / r.Y);
    case Chart::V2:
      if (r.Y >= 0.0) fail(Errc::out_of_domain, "point not in chart V2");
      return DiskPoint::in_chart(Chart::V2, -r.X / r.Y, -r.Z / r.Y);
  }
  fail(Errc::out_of_domain, "bad chart");
}

DiskPoint transition(const DiskPoint& q, Chart target) {
  if (q.chart == target) return q;
  return from_ray(to_ray(q), target);
}

Chart preferred_chart(const Ray& r) {
  const double ax = std::fabs(r.X), ay = std::fabs(r.Y);
  // bias towards the affine chart while the point is comfortably finite
  if (r.Z > 0.0 && 0.2 * std::max(ax, ay) < r.Z) return Chart::affine;
  if (ax >= ay) return r.X > 0.0 ? Chart::U1 : Chart::V1;
  return r.Y > 0.0 ? Chart::U2 : Chart::V2;
}

Vec2 disk_project(const DiskPoint& q) {
  Ray r = to_ray(q);
  const double n = std::sqrt(r.X * r.X + r.Y * r.Y + r.Z * r.Z);
  return {r.X / n, r.Y / n};
}

Vec3 sphere_project(const DiskPoint& q) {
  Ray r = to_ray(q);
  const double n = std::sqrt(r.X * r.X + r.Y * r.Y + r.Z * r.Z);
  return {r.X / n, r.Y / n, r.Z / n};
}

double sphere_dist(const Vec3& a, const Vec3& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.z - b.z) * (a.z - b.z));
}

Vec2 disk_velocity(const DiskPoint& q, Vec2 vel) {
  const double a = q.p.x, b = q.p.y, da = vel.x, db = vel.y;
  const double n2 = 1.0 + a * a + b * b;
  const double n3 = n2 * std::sqrt(n2);
  const double radial = a * da + b * db;
  // d/dt of component c/N for the three fixed-coordinate patterns
  switch (q.chart) {
    case Chart::affine:
      return {(da * n2 - a * radial) / n3, (db * n2 - b * radial) / n3};
    case Chart::U1:
      return {-radial / n3, (da * n2 - a * radial) / n3};
    case Chart::V1:
      return {radial / n3, (da * n2 - a * radial) / n3};
    case Chart::U2:
      return {(da * n2 - a * radial) / n3, -radial / n3};
    case Chart::V2:
      return {(da * n2 - a * radial) / n3, radial / n3};
  }
  return {};
}

DiskPoint equator_point(double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  if (std::fabs(c) >= std::fabs(s)) {
    // u = y/x on the right end, u = -y/x on the left
    return c > 0.0 ? DiskPoint::in_chart(Chart::U1, s / c, 0.0)
                   : DiskPoint::in_chart(Chart::V1, -s / c, 0.0);
  }
  return s > 0.0 ? DiskPoint::in_chart(Chart::U2, c / s, 0.0)
                 : DiskPoint::in_chart(Chart::V2, -c / s, 0.0);
}

double equator_angle(const DiskPoint& q) {
  Vec2 d = disk_project(q);
  double phi = std::atan2(d.y, d.x);
  if (phi < 0.0) phi += 2.0 * M_PI;
  return phi;
}

} // namespace riccati
