#pragma once

#include <string>
#include <vector>

#include "equilibria.hpp"

namespace riccati {

enum class EdgeKind : int { EquatorArc = 0, InvariantLine = 1, Separatrix = 2 };

const char* edge_kind_name(EdgeKind k);

struct SkeletonNode {
  Vec2 disk_pos;
  LocalType type = LocalType::Saddle;
  TopoClass topo = TopoClass::Saddle;
  std::string label;
  bool at_infinity = false;
  bool merged = false;
};

// Edges are oriented by the flow: src is the alpha-limit end. An edge with
// an unresolved end keeps -1 there and marks the skeleton.
struct SkeletonEdge {
  int src = -1, dst = -1;
  EdgeKind kind = EdgeKind::Separatrix;
  std::vector<Vec2> polyline; // disk coordinates, src -> dst
  bool unresolved = false;
  // separatrix provenance: the end at the seeding equilibrium is exact,
  // the other end comes from the traced limit
  bool seeded_at_src = false;
  int seed_node = -1;
};

struct SeparatrixSkeleton {
  std::vector<SkeletonNode> nodes;
  std::vector<SkeletonEdge> edges;
  std::vector<int> equator_order; // infinite nodes in increasing angle
  // per node, incident edge ends in cyclic angular order: (edge, outgoing)
  std::vector<std::vector<std::pair<int, bool>>> rotations;
  bool has_unresolved = false;

  int node_by_label(const std::string& label) const;
  int degree(int node) const;
};

// Fill `rotations` from the edge polylines.
void compute_rotations(SeparatrixSkeleton& sk);

// A heteroclinic connection between two saddle-like equilibria is traced
// twice (forward from its alpha end, backward from its omega end), and
// strong transversal expansion can make either trace fall off the shared
// orbit near its far end. A forward- and a backward-seeded trace riding
// within tolerance of each other over most of their length are one orbit:
// they are replaced by the connection edge between the two seed nodes.
void merge_split_connections(SeparatrixSkeleton& sk);

// Topological equivalence of two traced skeletons: a bijection of nodes
// respecting topo class and finite/infinite, mapping the directed edge
// multiset, aligning the equator cyclic order, and carrying the rotation
// system either all-preserving or all-reversing (reflections allowed,
// time direction is never flipped).
// check_rotations = false compares only node labels, directed edge multiset
// and equator order (used where near-coincident curves make the angular
// order unreliable, e.g. at continuation boundaries).
bool skeletons_isomorphic(const SeparatrixSkeleton& a,
                          const SeparatrixSkeleton& b,
                          bool check_rotations = true);

std::string skeleton_summary(const SeparatrixSkeleton& sk);

} // namespace riccati
