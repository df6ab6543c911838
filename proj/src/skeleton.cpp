#include "skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace riccati {

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::EquatorArc: return "equator";
    case EdgeKind::InvariantLine: return "line";
    case EdgeKind::Separatrix: return "separatrix";
  }
  return "?";
}

int SeparatrixSkeleton::node_by_label(const std::string& label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].label == label) return (int)i;
  return -1;
}

int SeparatrixSkeleton::degree(int node) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.src == node) ++d;
    if (e.dst == node) ++d;
  }
  return d;
}

namespace {

double polyline_angle_at(const std::vector<Vec2>& pl, bool from_front,
                         Vec2 origin, double radius) {
  // walk along the polyline from the given end until `radius` away from
  // the node, then take the direction of that point
  double acc = 0.0;
  Vec2 prev = from_front ? pl.front() : pl.back();
  const int n = (int)pl.size();
  for (int k = 1; k < n; ++k) {
    Vec2 cur = from_front ? pl[k] : pl[n - 1 - k];
    acc += dist(prev, cur);
    if (acc >= radius || k == n - 1) {
      Vec2 d = cur - origin;
      if (d.norm() < 1e-12) d = cur - prev;
      return std::atan2(d.y, d.x);
    }
    prev = cur;
  }
  return 0.0;
}

std::vector<Vec2> thin_polyline(const std::vector<Vec2>& pl, std::size_t cap) {
  if (pl.size() <= cap) return pl;
  std::vector<Vec2> out;
  double stride = double(pl.size() - 1) / double(cap - 1);
  for (std::size_t i = 0; i < cap; ++i)
    out.push_back(pl[(std::size_t)std::lround(i * stride)]);
  return out;
}

double arc_length(const std::vector<Vec2>& pl) {
  double s = 0.0;
  for (std::size_t i = 1; i < pl.size(); ++i) s += dist(pl[i - 1], pl[i]);
  return s;
}

Vec2 point_at_arc(const std::vector<Vec2>& pl, double target, Vec2* tangent) {
  double s = 0.0;
  for (std::size_t i = 1; i < pl.size(); ++i) {
    double seg = dist(pl[i - 1], pl[i]);
    if (s + seg >= target && seg > 0.0) {
      double f = (target - s) / seg;
      if (tangent) *tangent = (pl[i] - pl[i - 1]).normalized();
      return pl[i - 1] + (pl[i] - pl[i - 1]) * f;
    }
    s += seg;
  }
  if (tangent && pl.size() >= 2)
    *tangent = (pl.back() - pl[pl.size() - 2]).normalized();
  return pl.back();
}

double point_segment_dist(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double L2 = ab.dot(ab);
  if (L2 <= 0.0) return dist(p, a);
  double t = std::clamp((p - a).dot(ab) / L2, 0.0, 1.0);
  return dist(p, a + ab * t);
}

// fraction of the middle of `a` running within tol of `b`, requiring
// aligned flow direction at the matched points
double ride_fraction(const std::vector<Vec2>& a, const std::vector<Vec2>& b,
                     double tol) {
  const double la = arc_length(a);
  if (la <= 0.0 || b.size() < 2) return 0.0;
  int hits = 0;
  const int K = 48;
  for (int k = 0; k < K; ++k) {
    double s = la * (0.05 + 0.9 * (k + 0.5) / K);
    Vec2 ta;
    Vec2 p = point_at_arc(a, s, &ta);
    double best = 1e30;
    Vec2 tb{0, 0};
    for (std::size_t i = 1; i < b.size(); ++i) {
      double d = point_segment_dist(p, b[i - 1], b[i]);
      if (d < best) {
        best = d;
        tb = (b[i] - b[i - 1]).normalized();
      }
    }
    if (best <= tol && ta.dot(tb) > 0.0) ++hits;
  }
  return double(hits) / K;
}

} // namespace

void compute_rotations(SeparatrixSkeleton& sk) {
  const int n = (int)sk.nodes.size();
  sk.rotations.assign(n, {});

  std::vector<double> node_radius(n, 0.05);
  for (int i = 0; i < n; ++i) {
    double best = 0.3;
    for (int j = 0; j < n; ++j)
      if (j != i) best = std::min(best, dist(sk.nodes[i].disk_pos, sk.nodes[j].disk_pos));
    node_radius[i] = std::min(0.1, 0.3 * best);
  }

  for (int i = 0; i < n; ++i) {
    struct End {
      double angle;
      int edge;
      bool outgoing;
      EdgeKind kind;
    };
    std::vector<End> ends;
    const bool boundary = sk.nodes[i].at_infinity;
    const Vec2 pos = sk.nodes[i].disk_pos;
    const double inward = std::atan2(-pos.y, -pos.x);
    for (int e = 0; e < (int)sk.edges.size(); ++e) {
      const auto& ed = sk.edges[e];
      if (ed.polyline.size() < 2) continue;
      for (int side = 0; side < 2; ++side) {
        bool from_front = side == 0;
        if ((from_front ? ed.src : ed.dst) != i) continue;
        double ang =
            polyline_angle_at(ed.polyline, from_front, pos, node_radius[i]);
        ends.push_back({ang, e, from_front, ed.kind});
      }
    }

    // separatrices that run exponentially close to an invariant line have
    // angle ties against the line end; their order is decided by the side
    // of the line they hug
    for (const End& L : ends) {
      if (L.kind != EdgeKind::InvariantLine) continue;
      const auto& lpl = sk.edges[L.edge].polyline;
      for (End& S : ends) {
        if (S.kind != EdgeKind::Separatrix) continue;
        double diff = std::remainder(S.angle - L.angle, 2.0 * M_PI);
        if (std::fabs(diff) > 0.12) continue;
        const auto& spl = sk.edges[S.edge].polyline;
        double smid = 0.5 * arc_length(spl);
        Vec2 pm = point_at_arc(spl, smid, nullptr);
        double best = 1e30;
        Vec2 tl{0, 0}, ql{0, 0};
        for (std::size_t k = 1; k < lpl.size(); ++k) {
          double d = point_segment_dist(pm, lpl[k - 1], lpl[k]);
          if (d < best) {
            best = d;
            tl = (lpl[k] - lpl[k - 1]).normalized();
            ql = lpl[k - 1];
          }
        }
        // orient the line tangent away from this node
        if (L.outgoing == false) tl = -tl;
        double side = tl.cross(pm - ql) >= 0.0 ? 1.0 : -1.0;
        S.angle = L.angle + side * (1e-7 + std::min(best, 0.1) * 1e-4);
      }
    }

    if (boundary) {
      // the boundary arcs are the extreme entries of the cyclic order;
      // interior ends are clamped strictly between them
      for (End& e : ends) {
        double beta = std::remainder(e.angle - inward, 2.0 * M_PI);
        if (e.kind == EdgeKind::EquatorArc)
          beta = beta >= 0.0 ? M_PI / 2 : -M_PI / 2;
        else
          beta = std::clamp(beta, -M_PI / 2 + 1e-9, M_PI / 2 - 1e-9);
        e.angle = beta;
      }
    }

    std::sort(ends.begin(), ends.end(),
              [](const End& a, const End& b) { return a.angle < b.angle; });
    for (auto& e : ends) sk.rotations[i].push_back({e.edge, e.outgoing});
  }
}

void merge_split_connections(SeparatrixSkeleton& sk) {
  const double tol = 1e-4;
  std::vector<bool> dead(sk.edges.size(), false);
  std::vector<SkeletonEdge> merged;

  for (std::size_t i = 0; i < sk.edges.size(); ++i) {
    const auto& ef = sk.edges[i];
    if (dead[i] || ef.kind != EdgeKind::Separatrix || !ef.seeded_at_src)
      continue;
    for (std::size_t j = 0; j < sk.edges.size(); ++j) {
      const auto& eb = sk.edges[j];
      if (dead[j] || j == i || eb.kind != EdgeKind::Separatrix ||
          eb.seeded_at_src)
        continue;
      if (ef.seed_node == eb.seed_node) continue;
      if (ef.src == eb.dst) continue; // would be a homoclinic loop
      if (ef.polyline.size() < 2 || eb.polyline.size() < 2) continue;
      std::vector<Vec2> tf = thin_polyline(ef.polyline, 400);
      std::vector<Vec2> tb = thin_polyline(eb.polyline, 400);
      if (ride_fraction(tf, tb, tol) < 0.6) continue;
      if (ride_fraction(tb, tf, tol) < 0.6) continue;

      SkeletonEdge e;
      e.kind = EdgeKind::Separatrix;
      e.src = ef.src;
      e.dst = eb.dst;
      e.seed_node = -1;
      // keep the forward trace up to its closest approach to the target
      Vec2 target = sk.nodes[eb.dst].disk_pos;
      std::size_t cut = ef.polyline.size() - 1;
      double best = 1e30;
      for (std::size_t k = 0; k < ef.polyline.size(); ++k) {
        double d = dist(ef.polyline[k], target);
        if (d < best) {
          best = d;
          cut = k;
        }
      }
      e.polyline.assign(ef.polyline.begin(), ef.polyline.begin() + cut + 1);
      e.polyline.push_back(target);
      dead[i] = dead[j] = true;
      merged.push_back(std::move(e));
      break;
    }
  }
  if (merged.empty()) return;
  std::vector<SkeletonEdge> out;
  for (std::size_t i = 0; i < sk.edges.size(); ++i)
    if (!dead[i]) out.push_back(std::move(sk.edges[i]));
  for (auto& e : merged) out.push_back(std::move(e));
  sk.edges = std::move(out);
}

namespace {

struct NodeKey {
  TopoClass topo;
  bool inf;
  bool operator<(const NodeKey& o) const {
    return std::tie(topo, inf) < std::tie(o.topo, o.inf);
  }
  bool operator==(const NodeKey& o) const {
    return topo == o.topo && inf == o.inf;
  }
};

NodeKey key_of(const SkeletonNode& n) { return {n.topo, n.at_infinity}; }

using Entry = std::pair<int, bool>; // (mapped other endpoint, outgoing)

// incident cyclic sequence at a node under a node mapping
std::vector<Entry> mapped_rotation(const SeparatrixSkeleton& sk, int node,
                                   const std::vector<int>& sigma, bool reverse) {
  std::vector<Entry> seq;
  for (auto [e, outgoing] : sk.rotations[node]) {
    const auto& ed = sk.edges[e];
    int other = outgoing ? ed.dst : ed.src;
    seq.push_back({other >= 0 ? sigma[other] : -1, outgoing});
  }
  if (reverse) std::reverse(seq.begin(), seq.end());
  return seq;
}

std::vector<Entry> plain_rotation(const SeparatrixSkeleton& sk, int node) {
  std::vector<Entry> seq;
  for (auto [e, outgoing] : sk.rotations[node]) {
    const auto& ed = sk.edges[e];
    int other = outgoing ? ed.dst : ed.src;
    seq.push_back({other, outgoing});
  }
  return seq;
}

bool cyclic_equal(const std::vector<Entry>& a, const std::vector<Entry>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const int n = (int)a.size();
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = a[i] == b[(s + i) % n];
    if (ok) return true;
  }
  return false;
}

bool edges_match(const SeparatrixSkeleton& a, const SeparatrixSkeleton& b,
                 const std::vector<int>& sigma) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& e : a.edges) {
    int s = e.src >= 0 ? sigma[e.src] : -1;
    int d = e.dst >= 0 ? sigma[e.dst] : -1;
    count[{s, d}]++;
  }
  for (const auto& e : b.edges) {
    auto it = count.find({e.src, e.dst});
    if (it == count.end() || it->second == 0) return false;
    it->second--;
  }
  return true;
}

bool rotations_match(const SeparatrixSkeleton& a, const SeparatrixSkeleton& b,
                     const std::vector<int>& sigma, bool reflect) {
  for (int v = 0; v < (int)a.nodes.size(); ++v) {
    auto sa = mapped_rotation(a, v, sigma, reflect);
    auto sb = plain_rotation(b, sigma[v]);
    if (!cyclic_equal(sa, sb)) return false;
  }
  return true;
}

bool try_finite_assignments(const SeparatrixSkeleton& a,
                            const SeparatrixSkeleton& b,
                            std::vector<int>& sigma,
                            const std::vector<int>& fa,
                            const std::vector<int>& fb,
                            std::vector<bool>& used, std::size_t k,
                            bool reflect, bool check_rotations) {
  if (k == fa.size()) {
    if (!edges_match(a, b, sigma)) return false;
    return !check_rotations || rotations_match(a, b, sigma, reflect);
  }
  for (std::size_t j = 0; j < fb.size(); ++j) {
    if (used[j]) continue;
    if (!(key_of(a.nodes[fa[k]]) == key_of(b.nodes[fb[j]]))) continue;
    used[j] = true;
    sigma[fa[k]] = fb[j];
    if (try_finite_assignments(a, b, sigma, fa, fb, used, k + 1, reflect,
                               check_rotations))
      return true;
    used[j] = false;
    sigma[fa[k]] = -1;
  }
  return false;
}

} // namespace

bool skeletons_isomorphic(const SeparatrixSkeleton& a,
                          const SeparatrixSkeleton& b,
                          bool check_rotations) {
  if (a.nodes.size() != b.nodes.size()) return false;
  if (a.edges.size() != b.edges.size()) return false;
  if (a.equator_order.size() != b.equator_order.size()) return false;
  if (a.has_unresolved || b.has_unresolved) return false;

  std::map<NodeKey, int> ca, cb;
  for (const auto& n : a.nodes) ca[key_of(n)]++;
  for (const auto& n : b.nodes) cb[key_of(n)]++;
  if (ca != cb) return false;

  const int m = (int)a.equator_order.size();
  std::vector<int> fa, fb;
  for (int i = 0; i < (int)a.nodes.size(); ++i)
    if (!a.nodes[i].at_infinity) fa.push_back(i);
  for (int i = 0; i < (int)b.nodes.size(); ++i)
    if (!b.nodes[i].at_infinity) fb.push_back(i);

  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int off = 0; off < std::max(m, 1); ++off) {
      std::vector<int> sigma(a.nodes.size(), -1);
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        int ia = a.equator_order[i];
        int idx = reflect ? ((off - i) % m + m) % m : (off + i) % m;
        int ib = b.equator_order[idx];
        if (!(key_of(a.nodes[ia]) == key_of(b.nodes[ib]))) ok = false;
        else sigma[ia] = ib;
      }
      if (!ok) continue;
      std::vector<bool> used(fb.size(), false);
      if (try_finite_assignments(a, b, sigma, fa, fb, used, 0, reflect != 0,
                                 check_rotations))
        return true;
      if (m == 0) break;
    }
    if (m == 0 && fa.empty()) break;
  }
  return false;
}

std::string skeleton_summary(const SeparatrixSkeleton& sk) {
  std::ostringstream os;
  os << sk.nodes.size() << " nodes, " << sk.edges.size() << " edges; ";
  for (std::size_t i = 0; i < sk.nodes.size(); ++i) {
    const auto& n = sk.nodes[i];
    os << (i ? ", " : "") << n.label << ":" << topo_class_name(n.topo)
       << (n.at_infinity ? "@inf" : "");
  }
  os << "; edges:";
  for (const auto& e : sk.edges) {
    auto name = [&](int v) {
      return v >= 0 ? sk.nodes[v].label : std::string("?");
    };
    os << " " << name(e.src) << ">" << name(e.dst);
  }
  return os.str();
}

} // namespace riccati
