#pragma once

#include <string>
#include <vector>

#include "flow.hpp"
#include "skeleton.hpp"

namespace riccati {

struct RenderSpec {
  int size_px = 800;
  int orbit_grid = 8;
  double separatrix_width = 0.012;
  double orbit_width = 0.004;
  double glyph_radius = 0.022;
  bool show_labels = false;
};

// Deterministic SVG of the Poincare disk: equator, sample orbits, skeleton
// edges with direction arrows, equilibrium glyphs by type. Identical inputs
// produce identical bytes; coordinates are rounded to 4 decimals.
std::string render_disk(const SeparatrixSkeleton& skeleton,
                        const std::vector<Trajectory>& extra_orbits,
                        const RenderSpec& spec);

// Sample orbits on a grid over the disk for portrait rendering.
std::vector<Trajectory> grid_orbits(const NormalForm& nf,
                                    const SignPolicy& policy, int per_axis,
                                    const FlowOptions& opt = {});

} // namespace riccati
