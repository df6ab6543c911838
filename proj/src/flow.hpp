#pragma once

#include <optional>
#include <vector>

#include "compactify.hpp"
#include "skeleton.hpp"

namespace riccati {

struct FlowOptions {
  double rtol = 1e-9;
  double switch_radius = 10.0; // affine -> chart hand-off
  double return_radius = 5.0;  // chart -> affine (hysteresis)
  double arc_budget = 1000.0;  // disk arc length
  double eq_radius = 1e-6;     // limit resolution radius (disk metric)
  double seed_offset = 1e-6;   // separatrix seed distance
  double ring_radius = 1e-3;   // sector-analysis ring
  double min_step = 1e-14;
  int max_steps = 2000000;
};

enum class Termination { ReachedEquilibrium, LeftTimeBudget, StepFailure };

struct TrajectorySample {
  DiskPoint q;
  Vec2 disk;
  double t; // rescaled (unit-speed) time, strictly increasing
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::optional<int> alpha_limit, omega_limit; // indices into the eq list
  Termination termination = Termination::LeftTimeBudget;
  bool forward = true;
  double arc_length = 0.0;
};

// Integrate the compactified flow from `start`, switching charts near
// infinity; the field is rescaled to unit-ish speed so the time variable is
// an arc-length parameter. Terminates on proximity to a listed equilibrium
// (with a contraction test), on budget exhaustion, or on step collapse.
Trajectory integrate(const CompactifiedSystem& cs,
                     const std::vector<Equilibrium>& equilibria,
                     const DiskPoint& start, bool forward,
                     const FlowOptions& opt = {});

struct Seed {
  DiskPoint start;
  bool forward = true;
};

// Separatrix seeds of one classified equilibrium: eigendirection seeds for
// hyperbolic and semi-hyperbolic points, ring-detected characteristic
// directions for nilpotent ones. Directions along invariant lines and the
// equator are omitted (those edges are inserted analytically).
std::vector<Seed> separatrix_seeds(const CompactifiedSystem& cs,
                                   const Equilibrium& eq,
                                   const FlowOptions& opt = {});

// Full separatrix skeleton: equilibria as nodes, analytic equator arcs and
// invariant-line segments, traced separatrices, rotation system.
SeparatrixSkeleton trace_separatrices(const NormalForm& nf,
                                      const SignPolicy& policy,
                                      const FlowOptions& opt = {});

} // namespace riccati
