#include "report.hpp"

#include <json.hpp>

#include <sstream>

namespace riccati {

namespace {

std::string pattern_str(const TableRow& row) {
  std::string s;
  auto keys = table_keys(row.family);
  for (std::size_t i = 0; i < row.pattern.size(); ++i) {
    if (i) s += ", ";
    s += keys[i];
    s += row.pattern[i] > 0 ? " > 0" : (row.pattern[i] < 0 ? " < 0" : " = 0");
  }
  return s;
}

std::string eq_line(const Equilibrium& e) {
  std::ostringstream os;
  os << "  " << e.label << ": ";
  if (e.at_infinity)
    os << chart_name(e.pt.chart) << " u = " << e.pt.p.x + 0.0;
  else
    os << "(" << e.pt.p.x + 0.0 << ", " << e.pt.p.y + 0.0 << ")";
  os << "  " << local_type_name(e.type);
  if (e.eigen.complex)
    os << "  eigenvalues " << e.eigen.re << " +- " << e.eigen.im << "i";
  else
    os << "  eigenvalues (" << e.eigen.lambda1 << ", " << e.eigen.lambda2
       << ")";
  return os.str();
}

} // namespace

std::string classification_report(const ClassifyResult& res) {
  std::ostringstream os;
  const Params5& p = res.nf.params;
  os << "family: " << family_name(res.nf.family) << "\n";
  os << "params: (a,b,c,d,e) = (" << p.a << ", " << p.b << ", " << p.c << ", "
     << p.d << ", " << p.e << ")\n";
  if (!res.nf.change.identity()) {
    const auto& ch = res.nf.change;
    os << "reduction: x = " << ch.mu << "*x1 + " << ch.nu
       << ", y-scale = " << ch.y_scale << ", time-scale = " << ch.time_scale;
    if (ch.orientation_reversed) os << " (orientation reversed)";
    os << "\n";
  }
  os << "discriminants: dF1 = " << res.disc.dF1 << ", dF2 = " << res.disc.dF2
     << ", dI1 = " << res.disc.dI1 << ", dI2 = " << res.disc.dI2 << "\n";
  os << "table row: " << pattern_str(res.row) << "  -> candidates {";
  for (std::size_t i = 0; i < res.row.candidates.size(); ++i)
    os << (i ? ", " : "") << "P" << res.row.candidates[i];
  os << "}\n";
  os << "finite equilibria: " << res.finite.size() << "\n";
  for (const auto& e : res.finite) os << eq_line(e) << "\n";
  os << "infinite equilibria: " << res.infinite.size() << "\n";
  for (const auto& e : res.infinite) os << eq_line(e) << "\n";
  if (res.subcase) {
    const auto& s = *res.subcase;
    os << "line tests: r1(q1) = " << s.r1_at_q1 << ", r2(p2) = " << s.r2_at_p2
       << "\n";
    if (s.used_slope_test)
      os << "slope test: lhs = " << s.slope_lhs << ", rhs = " << s.slope_rhs
         << "\n";
  }
  if (res.match) {
    os << "skeleton match: P" << res.match->matched << " (rejected:";
    for (int id : res.match->rejected) os << " P" << id;
    os << ")\n";
    if (!res.match->unavailable.empty()) {
      os << "catalog gaps in row:";
      for (int id : res.match->unavailable) os << " P" << id;
      os << "\n";
    }
  }
  os << "portrait: P" << res.portrait << "\n";
  return os.str();
}

std::string classification_report_json(const ClassifyResult& res) {
  using nlohmann::json;
  json j;
  const Params5& p = res.nf.params;
  j["family"] = family_name(res.nf.family);
  j["params"] = {p.a, p.b, p.c, p.d, p.e};
  j["reduction"] = {{"mu", res.nf.change.mu},
                    {"nu", res.nf.change.nu},
                    {"y_scale", res.nf.change.y_scale},
                    {"time_scale", res.nf.change.time_scale},
                    {"orientation_reversed", res.nf.change.orientation_reversed}};
  j["discriminants"] = {{"dF1", res.disc.dF1},
                        {"dF2", res.disc.dF2},
                        {"dI1", res.disc.dI1},
                        {"dI2", res.disc.dI2}};
  j["row"] = {{"pattern", res.row.pattern}, {"candidates", res.row.candidates}};
  auto eq_json = [](const Equilibrium& e) {
    json q;
    q["label"] = e.label;
    q["chart"] = chart_name(e.pt.chart);
    q["coords"] = {e.pt.p.x + 0.0, e.pt.p.y + 0.0};
    q["type"] = local_type_name(e.type);
    if (e.eigen.complex)
      q["eigenvalues"] = {{"re", e.eigen.re}, {"im", e.eigen.im}};
    else
      q["eigenvalues"] = {e.eigen.lambda1, e.eigen.lambda2};
    q["merged"] = e.merged;
    return q;
  };
  j["finite"] = json::array();
  for (const auto& e : res.finite) j["finite"].push_back(eq_json(e));
  j["infinite"] = json::array();
  for (const auto& e : res.infinite) j["infinite"].push_back(eq_json(e));
  if (res.subcase) {
    j["line_tests"] = {{"r1_at_q1", res.subcase->r1_at_q1},
                       {"r2_at_p2", res.subcase->r2_at_p2}};
    if (res.subcase->used_slope_test)
      j["slope_test"] = {{"lhs", res.subcase->slope_lhs},
                         {"rhs", res.subcase->slope_rhs}};
  }
  if (res.match) {
    j["match"] = {{"matched", res.match->matched},
                  {"rejected", res.match->rejected},
                  {"unavailable", res.match->unavailable}};
  }
  j["portrait"] = "P" + std::to_string(res.portrait);
  return j.dump(2) + "\n";
}

} // namespace riccati
