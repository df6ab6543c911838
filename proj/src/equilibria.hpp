#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"
#include "chart.hpp"
#include "system.hpp"

namespace riccati {

enum class LocalType : int {
  Saddle,
  StableNode,
  UnstableNode,
  SemiHyperbolicSaddle,
  SemiHyperbolicStableNode,
  SemiHyperbolicUnstableNode,
  SemiHyperbolicSaddleNode,
  NilpotentSaddleNode,
  DegenerateSaddleNode,
};

const char* local_type_name(LocalType t);

// Coarse role used by the topological matching: the taxonomy only needs
// saddle / source / sink / saddle-node.
enum class TopoClass : int { Saddle, Source, Sink, SaddleNode };
TopoClass topo_class(LocalType t);
const char* topo_class_name(TopoClass t);

struct Equilibrium {
  DiskPoint pt;
  Vec2 disk_pos;
  Eigenpair eigen;
  LocalType type = LocalType::Saddle;
  std::string label;        // q1, p12, u1, n, ...
  bool at_infinity = false;
  bool merged = false;      // collision of two simple points (double root)
};

// Finite equilibria of a normal form in closed form: on x = 0 and x = -1
// for family I, on x = 0 for II/III, none for IV/V. Local types assigned
// from the eigenvalue structure; saddle-node claims for degenerate points
// are verified by the ring analysis in classify_finite.
std::vector<Equilibrium> finite_equilibria(const NormalForm& nf,
                                           const SignPolicy& policy);

// Local type of one finite equilibrium; throws inconsistent_local_type when
// the numerical sector signature contradicts the eigenvalue-based type.
LocalType classify_finite(const NormalForm& nf, const Equilibrium& eq,
                          const SignPolicy& policy);

} // namespace riccati
