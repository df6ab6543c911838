#pragma once

#include <string>

#include "vec2.hpp"

namespace riccati {

// Local charts of the Poincare disk. U1/V1 cover the x > 0 / x < 0 ends,
// U2/V2 the y > 0 / y < 0 ends; v = 0 is the circle at infinity.
enum class Chart : int { affine = 0, U1 = 1, U2 = 2, V1 = 3, V2 = 4 };

const char* chart_name(Chart c);

// A point of the closed disk in one concrete chart. Chart points carry
// (u, v) with v >= 0; affine points carry (x, y).
struct DiskPoint {
  Chart chart = Chart::affine;
  Vec2 p;

  static DiskPoint affine(double x, double y) {
    return {Chart::affine, {x, y}};
  }
  static DiskPoint in_chart(Chart c, double u, double v) { return {c, {u, v}}; }

  bool at_infinity() const { return chart != Chart::affine && p.y == 0.0; }
};

// Homogeneous ray (X, Y, Z), Z >= 0, used as the common exchange format
// between charts: affine (x,y) ~ (x,y,1), U1 (u,v) ~ (1,u,v), etc.
struct Ray {
  double X = 0.0, Y = 0.0, Z = 1.0;
};

Ray to_ray(const DiskPoint& q);

// Convert a ray into a given chart; fails with Errc::out_of_domain when the
// point is outside the chart (e.g. an infinite point into the affine chart).
DiskPoint from_ray(const Ray& r, Chart target);

DiskPoint transition(const DiskPoint& q, Chart target);

// Chart whose coordinates are best conditioned for this point.
Chart preferred_chart(const Ray& r);

// Projection onto the closed unit disk (equator = unit circle).
Vec2 disk_project(const DiskPoint& q);

// Point on the upper unit hemisphere; unlike the disk projection this
// metric is not degenerate at the equator, so it drives all proximity and
// arc-length bookkeeping.
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};
Vec3 sphere_project(const DiskPoint& q);
double sphere_dist(const Vec3& a, const Vec3& b);

// Pushforward of an in-chart velocity to the disk projection.
Vec2 disk_velocity(const DiskPoint& q, Vec2 vel);

// Position of the boundary point in direction angle phi (disk coords).
DiskPoint equator_point(double phi);
// Boundary angle of an infinite point.
double equator_angle(const DiskPoint& q);

} // namespace riccati
