#include "classify.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace riccati {

std::vector<std::string> table_keys(Family f) {
  switch (f) {
    case Family::I: return {"dI1", "dF1", "dF2"};
    case Family::II: return {"dI1", "dF1"};
    case Family::III: return {"dI2", "dF1"};
    case Family::IV: return {"dI2"};
    case Family::V: return {"dI1"};
  }
  return {};
}

std::vector<int> sign_pattern(Family f, const Params5& p,
                              const SignPolicy& policy) {
  auto s = discriminant_signs(p, policy); // (dF1, dF2, dI1, dI2)
  switch (f) {
    case Family::I: return {s[2], s[0], s[1]};
    case Family::II: return {s[2], s[0]};
    case Family::III: return {s[3], s[0]};
    case Family::IV: return {s[3]};
    case Family::V: return {s[2]};
  }
  return {};
}

namespace {

std::vector<TableRow> make_rows(Family f,
                                std::vector<std::pair<std::vector<int>,
                                                      std::vector<int>>> spec) {
  std::vector<TableRow> rows;
  for (auto& [pat, cand] : spec) rows.push_back({f, pat, cand});
  return rows;
}

} // namespace

const std::vector<TableRow>& all_rows(Family f) {
  static const std::vector<TableRow> rows_i = make_rows(
      Family::I,
      {{{1, 1, 1}, {1, 2, 3, 4, 5}},
       {{1, 1, 0}, {6, 7, 8, 9}},
       {{1, 1, -1}, {10}},
       {{1, 0, 1}, {11, 12, 13, 14}},
       {{1, 0, 0}, {15, 16}},
       {{1, 0, -1}, {17}},
       {{1, -1, 1}, {18}},
       {{1, -1, 0}, {19}},
       {{1, -1, -1}, {20}},
       {{0, 1, 1}, {21, 22, 23}},
       {{0, 1, 0}, {24, 25}},
       {{0, 1, -1}, {26}},
       {{0, 0, 1}, {27}},
       {{0, 0, 0}, {28}},
       {{0, 0, -1}, {29}},
       {{0, -1, 1}, {30}},
       {{0, -1, 0}, {31}},
       {{0, -1, -1}, {32}},
       {{-1, 1, 1}, {33}},
       {{-1, 1, 0}, {34}},
       {{-1, 1, -1}, {35}},
       {{-1, 0, 1}, {36}},
       {{-1, 0, 0}, {37}},
       {{-1, 0, -1}, {38}},
       {{-1, -1, 1}, {39}},
       {{-1, -1, 0}, {40}},
       {{-1, -1, -1}, {41}}});
  static const std::vector<TableRow> rows_ii = make_rows(
      Family::II,
      {{{1, 1}, {42, 43, 44}},
       {{1, 0}, {45, 46, 47}},
       {{1, -1}, {48}},
       {{0, 1}, {49, 50, 51}},
       {{0, 0}, {52, 53, 54}},
       {{0, -1}, {55}},
       {{-1, 1}, {56}},
       {{-1, 0}, {57, 58}},
       {{-1, -1}, {41}}});
  static const std::vector<TableRow> rows_iii = make_rows(
      Family::III,
      {{{1, 1}, {59, 60, 61}},
       {{1, 0}, {62, 63, 64}},
       {{1, -1}, {65}},
       {{0, 1}, {66, 67}},
       {{0, 0}, {68, 69}},
       {{0, -1}, {32}},
       {{-1, 1}, {35}},
       {{-1, 0}, {38}},
       {{-1, -1}, {41}}});
  static const std::vector<TableRow> rows_iv = make_rows(
      Family::IV, {{{1}, {70, 71}}, {{0}, {72, 73, 74}}, {{-1}, {41}}});
  static const std::vector<TableRow> rows_v = make_rows(
      Family::V, {{{1}, {70, 71}}, {{0}, {72, 73, 74}}, {{-1}, {41}}});
  switch (f) {
    case Family::I: return rows_i;
    case Family::II: return rows_ii;
    case Family::III: return rows_iii;
    case Family::IV: return rows_iv;
    case Family::V: return rows_v;
  }
  return rows_i;
}

TableRow table_row(Family f, const Params5& p, const SignPolicy& policy) {
  std::vector<int> pat = sign_pattern(f, p, policy);
  for (const auto& row : all_rows(f))
    if (row.pattern == pat) return row;
  fail(Errc::bad_input, "sign pattern not covered by the tables");
}

Row1Lines family_i_row1_lines(const Params5& p, const Discriminants& d) {
  const double sI1 = std::sqrt(d.dI1), sF1 = std::sqrt(d.dF1),
               sF2 = std::sqrt(d.dF2);
  Row1Lines L;
  const double u1 = (1.0 - p.a + sI1) / 2.0; // slope of the saddle direction
  L.r1 = {u1, (1.0 - p.b + sI1 + sF2) / 2.0, '1'};
  L.r2 = {u1, (-p.b - sF1) / 2.0, '2'};
  L.S = {(-p.a - sF1 - sF2) / 2.0, (-p.b - sF1) / 2.0, 'S'};
  return L;
}

int subcase_family_i_row1(const Params5& p, const Discriminants& d,
                          const SignPolicy& policy, SubcaseEvidence& ev) {
  const double sI1 = std::sqrt(d.dI1), sF1 = std::sqrt(d.dF1),
               sF2 = std::sqrt(d.dF2);
  // q1 = (0, (-b+sF1)/2) against r1, p2 = (-1, (a-b-sF2)/2) against r2
  ev.r1_at_q1 = (sF1 - 1.0 - sI1 - sF2) / 2.0;
  ev.r2_at_p2 = (1.0 + sI1 + sF1 - sF2) / 2.0;
  const int s1 = policy.sign(ev.r1_at_q1);
  const int s2 = policy.sign(ev.r2_at_p2);
  if (s1 == 0 || s2 == 0)
    fail(Errc::impossible_case,
         "equilibrium lies on the reference line within tolerance; the "
         "configuration excludes this");
  if (s1 < 0 && s2 < 0) return 1;
  if (s1 > 0 && s2 > 0) return 2;
  if (s1 > 0 && s2 < 0)
    fail(Errc::impossible_case,
         "r1(q1) > 0 together with r2(p2) < 0 cannot occur");
  ev.used_slope_test = true;
  ev.slope_lhs = -p.a - sF1 - sF2;
  ev.slope_rhs = 1.0 - p.a - sI1;
  const int sc = policy.sign(ev.slope_lhs - ev.slope_rhs);
  if (sc < 0) return 3;
  if (sc == 0) return 4;
  return 5;
}

ContactReport line_contact_analysis(const NormalForm& nf, const Line& line,
                                    const SignPolicy& policy) {
  const Params5& p = nf.params;
  // T(x) = Q(x, slope*x + intercept) - slope * P(x)
  Poly1 yline({line.intercept, line.slope});
  Poly1 Q = yline * yline + Poly1({p.b, p.a}) * yline +
            Poly1({p.e, p.d, p.c});
  Poly1 T = Q + family_alpha(nf.family) * (-line.slope);

  ContactReport rep;
  const double scale = std::max(1.0, T.max_abs_coeff());
  bool all_small = true;
  for (double c : T.coeffs())
    if (std::fabs(c) > 1e-12 * scale) all_small = false;
  if (T.is_zero() || (policy.mode == SignPolicy::Mode::tolerant && all_small)) {
    rep.integral_line = true;
    return rep;
  }

  RootSet rs = roots_quadratic(T, policy);
  for (int i = 0; i < rs.count(); ++i) rep.contact_x.push_back(rs.roots[i]);
  if (rs.kind == RootSet::Kind::double_root) rep.contact_x.resize(1);

  std::vector<double> probes;
  if (rep.contact_x.empty()) {
    probes = {0.0};
  } else {
    probes.push_back(rep.contact_x.front() - 1.0);
    for (std::size_t i = 0; i + 1 < rep.contact_x.size(); ++i)
      probes.push_back(0.5 * (rep.contact_x[i] + rep.contact_x[i + 1]));
    probes.push_back(rep.contact_x.back() + 1.0);
  }
  for (double x : probes)
    rep.segment_signs.push_back(T(x) > 0.0 ? 1 : (T(x) < 0.0 ? -1 : 0));
  return rep;
}

const std::vector<Fixture>& fixture_corpus() {
  auto f = [](int id, Family fam, double a, double b, double c, double d,
              double e, bool complete = true) {
    return Fixture{id, fam, {a, b, c, d, e}, complete};
  };
  static const std::vector<Fixture> corpus = {
      f(1, Family::I, 0, 0, 0, 3.75, -0.25),
      f(2, Family::I, 0, 0, 0, -3.75, -4),
      f(3, Family::I, 0, 0, -0.75, -0.75, -0.25),
      f(4, Family::I, 0, 0, -2, -2, -0.25),
      f(5, Family::I, 0, 0, -3.75, -3.75, -0.25),
      f(6, Family::I, 0, 0, 0, -3, -3),
      f(7, Family::I, 0, 0, -1, -2, -1),
      f(8, Family::I, 0, 0, 0, 0, 0, false), // sought by continuation
      f(9, Family::I, 0, 0, -29, -30, -1),
      f(10, Family::I, 0, 0, 0, -1, -0.25),
      f(11, Family::I, 0, 0, -1, 10, 0),
      f(12, Family::I, 2, 0, -1, -1, 0),
      f(13, Family::I, 1, 0, -1, -1, 0),
      f(14, Family::I, -2, 0, -1, -1, 0),
      f(15, Family::I, 4, 0, 2, -2, 0),
      f(16, Family::I, 1, 0, -1, -1.25, 0),
      f(17, Family::I, 0, 0, -1, -10, 0),
      f(18, Family::I, 0, 1, 0, 1, 0.75),
      f(19, Family::I, 0, 0, -0.75, 0.25, 1),
      f(20, Family::I, 1, 0, -1, -1.25, 1),
      f(21, Family::I, 1, 2, 0, 4.75, 0),
      f(22, Family::I, 2, 0, 0.25, -9.75, -10),
      f(23, Family::I, 2, 0, 0.25, -0.75, -1),
      f(24, Family::I, 0, 0, 0.25, -0.75, -1),
      f(25, Family::I, 1, 1, 0, 0.2, 0.2),
      f(26, Family::I, 0, 0, 0.25, -1.75, -1),
      f(27, Family::I, 0, 0, 0.25, 1.25, 0),
      f(28, Family::I, 1, 1, 0, 0.25, 0.25),
      f(29, Family::I, 1, 0, 0, -1, 0),
      f(30, Family::I, 0, 0, 0.25, 2.25, 1),
      f(31, Family::I, 0, 0, 0.25, 1.25, 1),
      f(32, Family::I, 0, 0, 0.25, 0.25, 1),
      f(33, Family::I, 0, 0, 1.25, 1.25, -1),
      f(34, Family::I, 1, 1, 1, 1.2, 0.2),
      f(35, Family::I, 1, 1, 2, 0, 0.2),
      f(36, Family::I, 1, 2, 1, 2, 1),
      f(37, Family::I, 2, 0, 2, 1, 0),
      f(38, Family::I, 1, 0, 1, -1, 0),
      f(39, Family::I, 1, 0, 1, 2, 1),
      f(40, Family::I, 1, 0, 1, 1.75, 1),
      f(41, Family::I, 0, 0, 1.25, 1.25, 1),
      f(42, Family::II, 1, 1, -1, 4, -1),
      f(43, Family::II, 1, 1, -1, -4, -1),
      f(44, Family::II, 1, 1, -1, 0, -1),
      f(45, Family::II, 1, 1, -1, 4, 0.25),
      f(46, Family::II, 1, 1, -1, 0, 0.25),
      f(47, Family::II, 2, 1, -1, 1, 0.25),
      f(48, Family::II, 1, 2, -1, 0, 2),
      f(49, Family::II, 1, 1, 0, 4, -1),
      f(50, Family::II, 1, 1, 0, -2, -1),
      f(51, Family::II, 1, 1, 0, 0, -1),
      f(52, Family::II, 1, 1, 0, 4, 0.25),
      f(53, Family::II, 2, 1, 0.25, 1, 0.25),
      f(54, Family::II, 1, 1, 0, -2, 0.25),
      f(55, Family::II, 1, 1, 0, 0, 1),
      f(56, Family::II, 1, 1, 1, 0, 0.2),
      f(57, Family::II, 1, 1, 1, 0, 0.25),
      f(58, Family::II, 2, 1, 0.3, 1, 0.25),
      f(59, Family::III, 1, 2, 0.2, 1, 0.2),
      f(60, Family::III, 1, 1, 0.2, 2, 0.2),
      f(61, Family::III, 1, 1, 0.2, 0, 0.2, false), // d sought
      f(62, Family::III, 2, 2, 0.2, 1, 1),
      f(63, Family::III, 1, 2, 0.2, 1, 1),
      f(64, Family::III, 0, 2, 0.2, 1, 1, false), // a sought
      f(65, Family::III, 8, 2, 2, 1, 5),
      f(66, Family::III, 2, 2, 1, 1, 0.2),
      f(67, Family::III, 2, 1, 1, 1, 0.2),
      f(68, Family::III, 2, 2, 1, 1, 1),
      f(69, Family::III, 1, 2, 0.25, 1, 1),
      f(70, Family::IV, 1, 1, 0, 0, 0),
      f(71, Family::IV, 1, 1, 0, 0, 1),
      f(72, Family::V, 1, 1, 0, 0, 0),
      f(73, Family::V, 1, 1, 0, 0, 1),
      f(74, Family::V, 1, 1, 0, 0, -1),
  };
  return corpus;
}

namespace {

SeparatrixSkeleton trace_for(Family fam, const Params5& p,
                             const SignPolicy& policy,
                             const FlowOptions& fopt) {
  return trace_separatrices(make_normal_form(fam, p), policy, fopt);
}

Params5 lerp(const Params5& a, const Params5& b, double t) {
  auto L = [t](double x, double y) { return x + t * (y - x); };
  return {L(a.a, b.a), L(a.b, b.b), L(a.c, b.c), L(a.d, b.d), L(a.e, b.e)};
}

// Bisect along the segment between two fixtures of the same row for the
// transition portrait separating their classes.
void continuation_entry(Catalog& cat, int target, Family fam,
                        const Params5& pa, const Params5& pb, int id_a,
                        int id_b, const SignPolicy& policy,
                        const FlowOptions& fopt) {
  CatalogEntry entry;
  entry.id = target;
  entry.family = fam;
  entry.available = false;

  const CatalogEntry* ea = cat.find(id_a);
  const CatalogEntry* eb = cat.find(id_b);
  if (!ea || !eb || !ea->available || !eb->available) {
    entry.note = "flanking entries unavailable";
    cat.entries_[target] = entry;
    return;
  }

  // bisect on the edge-multiset class: the transition portrait carries a
  // separatrix connection absent from both flanks, and rotation order is
  // unreliable near the boundary where curves nearly coincide
  auto cls = [&](double t, SeparatrixSkeleton* out_sk = nullptr) -> int {
    SeparatrixSkeleton sk = trace_for(fam, lerp(pa, pb, t), policy, fopt);
    int c;
    if (sk.has_unresolved) c = -1;
    else if (skeletons_isomorphic(sk, ea->skeleton, false)) c = 0;
    else if (skeletons_isomorphic(sk, eb->skeleton, false)) c = 1;
    else c = 2;
    if (out_sk) *out_sk = std::move(sk);
    return c;
  };

  double lo = 0.0, hi = 1.0;
  if (cls(lo) != 0 || cls(hi) != 1) {
    entry.note = "flanking tuples do not bracket a transition";
    cat.entries_[target] = entry;
    return;
  }

  // multiplicities of saddle-to-saddle separatrix connections, by label
  using PairCount = std::map<std::pair<std::string, std::string>, int>;
  auto sep_pairs = [](const SeparatrixSkeleton& sk) {
    PairCount m;
    for (const auto& ed : sk.edges) {
      if (ed.kind != EdgeKind::Separatrix || ed.src < 0 || ed.dst < 0)
        continue;
      TopoClass a = sk.nodes[ed.src].topo, b = sk.nodes[ed.dst].topo;
      if (a == TopoClass::Source || a == TopoClass::Sink) continue;
      if (b == TopoClass::Source || b == TopoClass::Sink) continue;
      m[{sk.nodes[ed.src].label, sk.nodes[ed.dst].label}]++;
    }
    return m;
  };
  PairCount pairs_a = sep_pairs(ea->skeleton), pairs_b = sep_pairs(eb->skeleton);
  auto has_new_connection = [&](const SeparatrixSkeleton& sk) {
    for (auto& [pr, cnt] : sep_pairs(sk)) {
      auto ia = pairs_a.find(pr);
      auto ib = pairs_b.find(pr);
      int ca = ia == pairs_a.end() ? 0 : ia->second;
      int cb = ib == pairs_b.end() ? 0 : ib->second;
      if (cnt > ca && cnt > cb) return true;
    }
    return false;
  };

  // walk the parameter interval zone by zone: trace-resolution effects can
  // split the neighborhood of the transition into several thin classes;
  // the genuine boundary portrait is the one resolving a new connection
  SeparatrixSkeleton best;
  bool have_best = false;
  double t_cur = lo;
  SeparatrixSkeleton sk_cur = trace_for(fam, lerp(pa, pb, t_cur), policy, fopt);
  for (int zone = 0; zone < 12; ++zone) {
    // first parameter beyond the current zone
    double a = t_cur, b = hi;
    SeparatrixSkeleton sk_next;
    bool have_next = false;
    for (int it = 0; it < 90; ++it) {
      double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      SeparatrixSkeleton sk = trace_for(fam, lerp(pa, pb, mid), policy, fopt);
      if (!sk.has_unresolved && skeletons_isomorphic(sk, sk_cur, false)) {
        a = mid;
      } else {
        b = mid;
        sk_next = std::move(sk);
        have_next = true;
      }
    }
    if (!have_next) break;
    // the class jitters at ulp scale around a boundary and a one-ulp
    // connection band can hide below the converged bracket: scan a small
    // window across it
    double t_scan = b;
    for (int k = 0; k < 12; ++k) t_scan = std::nextafter(t_scan, -1.0);
    for (int k = 0; k < 15; ++k, t_scan = std::nextafter(t_scan, 2.0)) {
      SeparatrixSkeleton sk;
      if (cls(t_scan, &sk) != 2) continue;
      if (has_new_connection(sk)) {
        entry.params = lerp(pa, pb, t_scan);
        entry.skeleton = std::move(sk);
        entry.available = true;
        entry.note = "found by bisection";
        cat.entries_[target] = entry;
        return;
      }
      if (!have_best) {
        best = sk;
        entry.params = lerp(pa, pb, t_scan);
        have_best = true;
      }
    }
    t_cur = b;
    sk_cur = std::move(sk_next);
    if (cls(t_cur, nullptr) == 1) break; // reached the far flank's class
  }
  if (have_best) {
    entry.skeleton = std::move(best);
    entry.available = true;
    entry.note = "found by bisection (no explicit connection resolved)";
    cat.entries_[target] = entry;
    return;
  }
  entry.note = "transition portrait not resolved within tolerance";
  cat.entries_[target] = entry;
}

} // namespace

Catalog Catalog::build(const SignPolicy& policy, const FlowOptions& fopt) {
  Catalog cat;
  for (const Fixture& fx : fixture_corpus()) {
    if (!fx.complete) continue;
    // shared portraits keep their first (family I) representative
    if (cat.entries_.count(fx.id) && cat.entries_[fx.id].available) continue;
    CatalogEntry e;
    e.id = fx.id;
    e.family = fx.family;
    e.params = fx.params;
    e.skeleton = trace_for(fx.family, fx.params, policy, fopt);
    e.available = !e.skeleton.has_unresolved;
    if (!e.available) e.note = "trace left unresolved separatrices";
    cat.entries_[fx.id] = e;
  }

  // transition portraits without a printed tuple
  continuation_entry(cat, 8, Family::I, Params5{0, 0, -1, -2, -1},
                     Params5{0, 0, -29, -30, -1}, 7, 9, policy, fopt);
  continuation_entry(cat, 61, Family::III, Params5{1, 1, 0.2, 2, 0.2},
                     Params5{1, 2, 0.2, 1, 0.2}, 60, 59, policy, fopt);
  continuation_entry(cat, 64, Family::III, Params5{1, 2, 0.2, 1, 1},
                     Params5{2, 2, 0.2, 1, 1}, 63, 62, policy, fopt);
  return cat;
}

const CatalogEntry* Catalog::find(int id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<int> Catalog::gaps() const {
  std::vector<int> g;
  for (const auto& [id, e] : entries_)
    if (!e.available) g.push_back(id);
  return g;
}

void Catalog::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open catalog file for writing: " + path);
  out << "riccati-catalog 1\n";
  for (const auto& [id, e] : entries_) {
    out << "entry " << id << " family " << family_name(e.family) << " params "
        << e.params.a << " " << e.params.b << " " << e.params.c << " "
        << e.params.d << " " << e.params.e << " available " << (e.available ? 1 : 0)
        << "\n";
    if (!e.note.empty()) out << "note " << e.note << "\n";
    if (!e.available) continue;
    const SeparatrixSkeleton& sk = e.skeleton;
    out << "nodes " << sk.nodes.size() << "\n";
    for (const auto& n : sk.nodes)
      out << "  node " << n.label << " " << local_type_name(n.type) << " "
          << (n.at_infinity ? "inf" : "fin") << " " << (n.merged ? 1 : 0) << " "
          << n.disk_pos.x << " " << n.disk_pos.y << "\n";
    out << "edges " << sk.edges.size() << "\n";
    for (const auto& ed : sk.edges)
      out << "  edge " << ed.src << " " << ed.dst << " "
          << (int)ed.kind << "\n";
    out << "equator";
    for (int v : sk.equator_order) out << " " << v;
    out << "\n";
    for (std::size_t v = 0; v < sk.rotations.size(); ++v) {
      out << "rot " << v;
      for (auto [eidx, outg] : sk.rotations[v])
        out << " " << eidx << ":" << (outg ? 1 : 0);
      out << "\n";
    }
    out << "end\n";
  }
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open catalog file: " + path);
  std::string header;
  std::getline(in, header);
  if (header != "riccati-catalog 1")
    fail(Errc::io_error, "unrecognized catalog format: " + header);

  Catalog cat;
  std::string line;
  CatalogEntry cur;
  bool have = false;
  auto flush = [&]() {
    if (have) cat.entries_[cur.id] = cur;
    cur = CatalogEntry{};
    have = false;
  };
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::string tok;
    is >> tok;
    if (tok == "entry") {
      flush();
      have = true;
      std::string kw, fam;
      int avail = 0;
      is >> cur.id >> kw >> fam >> kw >> cur.params.a >> cur.params.b >>
          cur.params.c >> cur.params.d >> cur.params.e >> kw >> avail;
      cur.family = family_from_name(fam);
      cur.available = avail != 0;
    } else if (tok == "note") {
      std::getline(is, cur.note);
      if (!cur.note.empty() && cur.note.front() == ' ') cur.note.erase(0, 1);
    } else if (tok == "nodes") {
      int n;
      is >> n;
      for (int i = 0; i < n; ++i) {
        std::getline(in, line);
        std::istringstream ns(line);
        std::string kw, label, type, where;
        int merged;
        SkeletonNode node;
        ns >> kw >> label >> type >> where >> merged >> node.disk_pos.x >>
            node.disk_pos.y;
        node.label = label;
        node.at_infinity = (where == "inf");
        node.merged = merged != 0;
        for (int t = 0; t <= (int)LocalType::DegenerateSaddleNode; ++t)
          if (type == local_type_name((LocalType)t)) node.type = (LocalType)t;
        node.topo = topo_class(node.type);
        cur.skeleton.nodes.push_back(node);
      }
    } else if (tok == "edges") {
      int n;
      is >> n;
      for (int i = 0; i < n; ++i) {
        std::getline(in, line);
        std::istringstream es(line);
        std::string kw;
        SkeletonEdge ed;
        int kind;
        es >> kw >> ed.src >> ed.dst >> kind;
        ed.kind = (EdgeKind)kind;
        cur.skeleton.edges.push_back(ed);
      }
    } else if (tok == "equator") {
      int v;
      while (is >> v) cur.skeleton.equator_order.push_back(v);
    } else if (tok == "rot") {
      std::size_t v;
      is >> v;
      if (cur.skeleton.rotations.size() <= v)
        cur.skeleton.rotations.resize(v + 1);
      std::string item;
      while (is >> item) {
        auto colon = item.find(':');
        cur.skeleton.rotations[v].push_back(
            {std::stoi(item.substr(0, colon)), item.substr(colon + 1) == "1"});
      }
    }
  }
  flush();
  return cat;
}

ClassifyResult classify(const NormalForm& nf, const SignPolicy& policy,
                        const Catalog* catalog, const FlowOptions& fopt) {
  ClassifyResult res;
  res.nf = nf;
  res.disc = discriminants(nf.params);
  res.row = table_row(nf.family, nf.params, policy);
  res.finite = finite_equilibria(nf, policy);
  res.infinite = infinite_equilibria(nf, policy);

  if (res.row.candidates.size() == 1) {
    res.portrait = res.row.candidates[0];
    return res;
  }

  if (nf.family == Family::I && res.row.pattern == std::vector<int>{1, 1, 1}) {
    SubcaseEvidence ev;
    res.portrait = subcase_family_i_row1(nf.params, res.disc, policy, ev);
    res.subcase = ev;
    return res;
  }

  if (!catalog)
    fail(Errc::catalog_required,
         "portrait row has several candidates; a canonical catalog is needed");

  SeparatrixSkeleton query = trace_separatrices(nf, policy, fopt);
  MatchEvidence ev;
  ev.query_summary = skeleton_summary(query);
  std::vector<int> hits;
  for (int id : res.row.candidates) {
    const CatalogEntry* e = catalog->find(id);
    if (!e || !e->available) {
      ev.unavailable.push_back(id);
      continue;
    }
    if (skeletons_isomorphic(query, e->skeleton)) hits.push_back(id);
    else ev.rejected.push_back(id);
  }
  if (hits.empty()) {
    std::string msg = "skeleton matches no catalog candidate of its row";
    if (!ev.unavailable.empty()) {
      msg += " (unavailable:";
      for (int id : ev.unavailable) msg += " P" + std::to_string(id);
      msg += ")";
    }
    if (query.has_unresolved) msg += "; trace left unresolved separatrices";
    fail(Errc::no_match, msg);
  }
  if (hits.size() > 1) {
    std::string msg = "skeleton matches several candidates:";
    for (int id : hits) msg += " P" + std::to_string(id);
    fail(Errc::ambiguous_match, msg);
  }
  ev.matched = hits[0];
  res.portrait = hits[0];
  res.match = ev;
  return res;
}

} // namespace riccati
