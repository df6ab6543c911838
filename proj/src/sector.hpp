#pragma once

#include <functional>
#include <vector>

#include "vec2.hpp"

namespace riccati {

// Ring probe of an isolated equilibrium: sample the field on a circle of
// radius `radius` around the origin of `field` (already shifted), over the
// angular window [theta0, theta1].
struct RingAnalysis {
  int index = 0;              // Poincare index (winding of the field)
  int radial_sign_changes = 0;
  // characteristic directions: angles where the field is radial
  struct Characteristic {
    double theta;
    double radial; // signed radial component there (>0 outflow)
  };
  std::vector<Characteristic> characteristics;
};

struct RingOptions {
  double radius = 1e-3;
  int samples = 8192;
  double theta0 = 0.0;
  double theta1 = 2.0 * 3.14159265358979323846;
  bool full_circle = true;
};

RingAnalysis ring_analysis(const std::function<Vec2(Vec2)>& field,
                           const RingOptions& opt);

// Saddle-node signature: index 0 on the full circle. Nodes have +1,
// saddles -1. Radial sign-change counts are reported as evidence.
bool saddle_node_signature(const RingAnalysis& ra);

} // namespace riccati
