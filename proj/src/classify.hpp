#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flow.hpp"
#include "skeleton.hpp"
#include "system.hpp"

namespace riccati {

// One row of the per-family decision tables: a sign pattern over the
// relevant discriminants and its candidate portraits.
struct TableRow {
  Family family = Family::I;
  std::vector<int> pattern; // signs of the relevant discriminants
  std::vector<int> candidates;
};

// Names of the discriminants a family's table branches on.
std::vector<std::string> table_keys(Family f);
// Sign pattern of the relevant discriminants (decimal-exact when possible).
std::vector<int> sign_pattern(Family f, const Params5& p,
                              const SignPolicy& policy);
// The unique row matching the sign pattern (total).
TableRow table_row(Family f, const Params5& p, const SignPolicy& policy);
const std::vector<TableRow>& all_rows(Family f);

// Straight lines of the family-I row-1 analysis.
struct Line {
  double slope = 0.0, intercept = 0.0;
  char role = 'r'; // '1' = r1, '2' = r2, 'S' = S
};

struct Row1Lines {
  Line r1, r2, S;
};
Row1Lines family_i_row1_lines(const Params5& p, const Discriminants& d);

struct SubcaseEvidence {
  double r1_at_q1 = 0.0, r2_at_p2 = 0.0;
  double slope_lhs = 0.0, slope_rhs = 0.0;
  bool used_slope_test = false;
};

// Resolves P1..P5 from the positions of q1, p2 relative to r1, r2 and the
// slope comparison when both lie on the same side.
int subcase_family_i_row1(const Params5& p, const Discriminants& d,
                          const SignPolicy& policy, SubcaseEvidence& ev);

// Contact structure of a straight line with the flow.
struct ContactReport {
  bool integral_line = false;
  std::vector<double> contact_x;  // x-coordinates of contact points
  std::vector<int> segment_signs; // sign of the transversality function
                                  // on each maximal open segment
};
ContactReport line_contact_analysis(const NormalForm& nf, const Line& line,
                                    const SignPolicy& policy);

// Parameter tuple realizing one portrait.
struct Fixture {
  int id = 0;
  Family family = Family::I;
  Params5 params;
  bool complete = true;
};
const std::vector<Fixture>& fixture_corpus();

struct CatalogEntry {
  int id = 0;
  Family family = Family::I;
  Params5 params;
  SeparatrixSkeleton skeleton;
  bool available = false;
  std::string note;
};

// Canonical skeletons, one per portrait, traced from the corpus tuples;
// the three ids without a complete tuple are sought by bisection along the
// parameter segment joining their row siblings.
class Catalog {
public:
  static Catalog build(const SignPolicy& policy = SignPolicy::strict(),
                       const FlowOptions& fopt = {});
  void save(const std::string& path) const;
  static Catalog load(const std::string& path);

  const CatalogEntry* find(int id) const;
  const std::map<int, CatalogEntry>& entries() const { return entries_; }
  std::vector<int> gaps() const;

  std::map<int, CatalogEntry> entries_;
};

struct MatchEvidence {
  int matched = 0;
  std::vector<int> rejected;
  std::vector<int> unavailable;
  std::string query_summary;
};

struct ClassifyResult {
  NormalForm nf;
  Discriminants disc;
  TableRow row;
  int portrait = 0;
  std::optional<SubcaseEvidence> subcase;
  std::optional<MatchEvidence> match;
  std::vector<Equilibrium> finite, infinite;
};

// Full resolution of the portrait id: table row, then the row-1 line tests
// or labeled-skeleton matching against the catalog for multi-candidate rows.
ClassifyResult classify(const NormalForm& nf, const SignPolicy& policy,
                        const Catalog* catalog = nullptr,
                        const FlowOptions& fopt = {});

} // namespace riccati
