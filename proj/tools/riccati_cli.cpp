// Command-line front end over the shared-library C API.

#include <riccati/riccati.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitValidation = 2;
constexpr int kExitClassification = 3;
constexpr int kExitIo = 4;

struct PolicyFlags {
  std::string policy = "strict";
  double epsilon = 1e-9;
  int value() const {
    return policy == "tolerant" ? RICCATI_POLICY_TOLERANT
                                : RICCATI_POLICY_STRICT;
  }
};

[[noreturn]] void die(int exit_code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(exit_code);
}

int exit_code_for(int rc) {
  switch (rc) {
    case RICCATI_E_BERNOULLI:
    case RICCATI_E_LIENARD:
    case RICCATI_E_DEGREE:
    case RICCATI_E_SIDE_CONDITION:
    case RICCATI_E_BAD_INPUT:
      return kExitValidation;
    case RICCATI_E_IO:
      return kExitIo;
    default:
      return kExitClassification;
  }
}

std::string describe(int rc) {
  std::string s = riccati_error_name(rc);
  const char* detail = riccati_last_error();
  if (detail && *detail) s += std::string(": ") + detail;
  if (rc == RICCATI_E_LIENARD) s = "Lienard system: out of scope";
  if (rc == RICCATI_E_BERNOULLI) s = "Bernoulli system: out of scope";
  return s;
}

// Input schema: either {"family": "I", "params": [a,b,c,d,e]} or
// {"alpha2": [...], "k": ..., "beta1": [...], "gamma2": [...]}.
riccati_system* load_system(const std::string& path, const PolicyFlags& pf) {
  std::ifstream in(path);
  if (!in) die(kExitIo, "cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    die(kExitValidation, std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) die(kExitValidation, "input must be a JSON object");

  const bool normal = j.contains("family");
  const std::vector<std::string> allowed =
      normal ? std::vector<std::string>{"family", "params"}
             : std::vector<std::string>{"alpha2", "k", "beta1", "gamma2"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed) ok = ok || it.key() == k;
    if (!ok) die(kExitValidation, "unknown field in input: " + it.key());
  }

  riccati_system* sys = nullptr;
  int rc;
  if (normal) {
    if (!j.contains("params") || !j["params"].is_array() ||
        j["params"].size() != 5)
      die(kExitValidation, "params must be an array of 5 numbers");
    double p[5];
    for (int i = 0; i < 5; ++i) p[i] = j["params"][i].get<double>();
    std::string fam = j["family"].get<std::string>();
    rc = riccati_system_from_normal_form(fam.c_str(), p, &sys);
  } else {
    for (const char* k : {"alpha2", "k", "beta1", "gamma2"})
      if (!j.contains(k))
        die(kExitValidation, std::string("missing field: ") + k);
    auto arr = [&](const char* k) {
      if (!j[k].is_array()) die(kExitValidation, std::string(k) + " must be an array");
      std::vector<double> v;
      for (const auto& x : j[k]) v.push_back(x.get<double>());
      return v;
    };
    std::vector<double> a2 = arr("alpha2"), b1 = arr("beta1"), g2 = arr("gamma2");
    double k = j["k"].get<double>();
    rc = riccati_system_from_raw(a2.data(), (int)a2.size(), k, b1.data(),
                                 (int)b1.size(), g2.data(), (int)g2.size(),
                                 pf.value(), pf.epsilon, &sys);
  }
  if (rc != RICCATI_OK) die(exit_code_for(rc), describe(rc));
  return sys;
}

riccati_catalog* obtain_catalog(const std::string& path, const PolicyFlags& pf,
                                bool build_if_missing) {
  riccati_catalog* cat = nullptr;
  if (std::filesystem::exists(path)) {
    int rc = riccati_catalog_load(path.c_str(), &cat);
    if (rc == RICCATI_OK) return cat;
    std::cerr << "note: failed to load catalog (" << describe(rc)
              << "), rebuilding\n";
  }
  if (!build_if_missing) return nullptr;
  int rc = riccati_catalog_build(pf.value(), pf.epsilon, &cat);
  if (rc != RICCATI_OK) die(exit_code_for(rc), describe(rc));
  rc = riccati_catalog_save(cat, path.c_str());
  if (rc != RICCATI_OK)
    std::cerr << "note: could not save catalog to " << path << "\n";
  return cat;
}

int cmd_classify(const std::string& input, const PolicyFlags& pf,
                 const std::string& format, const std::string& catalog_path) {
  riccati_system* sys = load_system(input, pf);
  riccati_catalog* cat = obtain_catalog(catalog_path, pf, true);
  riccati_result* res = nullptr;
  int rc = riccati_classify(sys, cat, pf.value(), pf.epsilon, &res);
  if (rc != RICCATI_OK) {
    int code = exit_code_for(rc);
    std::cerr << "error: " << describe(rc) << "\n";
    riccati_catalog_free(cat);
    riccati_system_free(sys);
    return code;
  }
  char* text = nullptr;
  riccati_result_report(res, format == "json" ? 1 : 0, &text);
  std::cout << text;
  riccati_string_free(text);
  riccati_result_free(res);
  riccati_catalog_free(cat);
  riccati_system_free(sys);
  return 0;
}

int cmd_portrait(const std::string& input, const PolicyFlags& pf,
                 const std::string& out_path, int size, int grid, bool labels,
                 bool force) {
  riccati_system* sys = load_system(input, pf);
  char* svg = nullptr;
  int rc = riccati_render_svg(sys, pf.value(), pf.epsilon, size, grid,
                              labels ? 1 : 0, force ? 1 : 0, &svg);
  if (rc != RICCATI_OK) {
    std::cerr << "error: " << describe(rc) << "\n";
    riccati_system_free(sys);
    return exit_code_for(rc);
  }
  std::filesystem::path p(out_path);
  if (p.has_parent_path() && !std::filesystem::exists(p.parent_path())) {
    std::cerr << "error: output directory does not exist: "
              << p.parent_path().string() << "\n";
    riccati_string_free(svg);
    riccati_system_free(sys);
    return kExitIo;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    riccati_string_free(svg);
    riccati_system_free(sys);
    return kExitIo;
  }
  out << svg;
  std::cout << "portrait written to " << out_path << "\n";
  riccati_string_free(svg);
  riccati_system_free(sys);
  return 0;
}

struct Range {
  double lo = 0.0, hi = 0.0;
  int n = 1;
};

Range parse_range(const std::string& s) {
  Range r;
  auto c1 = s.find(':');
  if (c1 == std::string::npos) {
    r.lo = r.hi = std::stod(s);
    r.n = 1;
    return r;
  }
  auto c2 = s.find(':', c1 + 1);
  if (c2 == std::string::npos)
    die(kExitValidation, "range must be lo:hi:count, got " + s);
  r.lo = std::stod(s.substr(0, c1));
  r.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  r.n = std::stoi(s.substr(c2 + 1));
  if (r.n < 1) die(kExitValidation, "range count must be positive");
  return r;
}

std::string csv_quote(const std::string& s) {
  bool need = s.find_first_of(",\"\n") != std::string::npos;
  if (!need) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  q += "\"";
  return q;
}

int cmd_sweep(const std::string& family, const std::vector<std::string>& spec,
              const PolicyFlags& pf, const std::string& out_path,
              const std::string& catalog_path, int jobs) {
  Range rng[5];
  for (int i = 0; i < 5; ++i) rng[i] = parse_range(spec[i]);
  riccati_catalog* cat = obtain_catalog(catalog_path, pf, true);

  struct Row {
    double p[5];
    std::string row;
  };
  long total = 1;
  for (const auto& r : rng) total *= r.n;
  std::vector<Row> rows((std::size_t)total);

  auto value_at = [](const Range& r, int i) {
    return r.n == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / (r.n - 1);
  };

  std::atomic<long> next{0};
  auto worker = [&]() {
    for (;;) {
      long idx = next.fetch_add(1);
      if (idx >= total) return;
      long rest = idx;
      int ix[5];
      for (int k = 4; k >= 0; --k) {
        ix[k] = rest % rng[k].n;
        rest /= rng[k].n;
      }
      Row& row = rows[(std::size_t)idx];
      for (int k = 0; k < 5; ++k) row.p[k] = value_at(rng[k], ix[k]);

      std::ostringstream os;
      riccati_system* sys = nullptr;
      int rc = riccati_system_from_normal_form(family.c_str(), row.p, &sys);
      double d[4] = {0, 0, 0, 0};
      if (rc == RICCATI_OK) riccati_system_discriminants(sys, d);
      for (int k = 0; k < 5; ++k) os << row.p[k] << ",";
      os << d[0] << "," << d[1] << "," << d[2] << "," << d[3] << ",";
      if (rc != RICCATI_OK) {
        os << "," << csv_quote(riccati_error_name(rc));
      } else {
        riccati_result* res = nullptr;
        rc = riccati_classify(sys, cat, pf.value(), pf.epsilon, &res);
        if (rc != RICCATI_OK) {
          os << "," << csv_quote(riccati_error_name(rc));
        } else {
          int id = 0;
          riccati_result_portrait(res, &id);
          os << "P" << id << ",";
          riccati_result_free(res);
        }
      }
      riccati_system_free(sys);
      row.row = os.str();
    }
  };

  int nthreads = jobs > 0 ? jobs : (int)std::thread::hardware_concurrency();
  if (nthreads < 1) nthreads = 1;
  std::vector<std::thread> pool;
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) die(kExitIo, "cannot write " + out_path);
    out = &file;
  }
  *out << "a,b,c,d,e,dF1,dF2,dI1,dI2,portrait,error\n";
  for (const auto& r : rows) *out << r.row << "\n";
  riccati_catalog_free(cat);
  return 0;
}

int cmd_catalog_build(const PolicyFlags& pf, const std::string& out_path) {
  riccati_catalog* cat = nullptr;
  int rc = riccati_catalog_build(pf.value(), pf.epsilon, &cat);
  if (rc != RICCATI_OK) die(exit_code_for(rc), describe(rc));
  rc = riccati_catalog_save(cat, out_path.c_str());
  if (rc != RICCATI_OK) die(kExitIo, describe(rc));
  int ids[8];
  int gaps = riccati_catalog_gaps(cat, ids, 8);
  std::cout << "catalog written to " << out_path << " (" << gaps
            << " gaps)\n";
  for (int i = 0; i < gaps && i < 8; ++i)
    std::cout << "  gap: P" << ids[i] << "\n";
  riccati_catalog_free(cat);
  return 0;
}

int cmd_verify_tables(const PolicyFlags& pf, const std::string& catalog_path) {
  riccati_catalog* cat = obtain_catalog(catalog_path, pf, true);
  int n = riccati_fixture_count();
  int pass = 0, failcnt = 0, skipped = 0;
  std::string skipped_ids;
  for (int i = 0; i < n; ++i) {
    int id = 0, complete = 0;
    char fam[4];
    double p[5];
    riccati_fixture(i, &id, fam, p, &complete);
    if (!complete) {
      ++skipped;
      if (!skipped_ids.empty()) skipped_ids += ", ";
      skipped_ids += "P" + std::to_string(id);
      std::printf("SKIP  P%-3d %-3s (incomplete tuple)\n", id, fam);
      continue;
    }
    riccati_system* sys = nullptr;
    riccati_system_from_normal_form(fam, p, &sys);
    riccati_result* res = nullptr;
    int rc = riccati_classify(sys, cat, pf.value(), pf.epsilon, &res);
    int got = -1;
    if (rc == RICCATI_OK) riccati_result_portrait(res, &got);
    bool ok = (rc == RICCATI_OK && got == id);
    if (ok) {
      ++pass;
      std::printf("PASS  P%-3d %-3s\n", id, fam);
    } else {
      ++failcnt;
      if (rc != RICCATI_OK)
        std::printf("FAIL  P%-3d %-3s (%s)\n", id, fam, describe(rc).c_str());
      else
        std::printf("FAIL  P%-3d %-3s (got P%d)\n", id, fam, got);
    }
    riccati_result_free(res);
    riccati_system_free(sys);
  }
  std::printf("%d/%d complete fixtures pass, %d skipped (%s)\n", pass,
              pass + failcnt, skipped, skipped_ids.c_str());
  riccati_catalog_free(cat);
  return failcnt == 0 ? 0 : kExitClassification;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global phase portraits of Riccati quadratic systems in the "
               "Poincare disk"};
  app.require_subcommand(1);

  PolicyFlags pf;
  std::string catalog_path = "riccati_catalog.txt";
  app.add_option("--policy", pf.policy, "sign policy: strict or tolerant")
      ->check(CLI::IsMember({"strict", "tolerant"}));
  app.add_option("--epsilon", pf.epsilon, "tolerance for the tolerant policy");
  app.add_option("--catalog", catalog_path, "catalog cache file");

  auto* c_classify = app.add_subcommand("classify", "classify one system");
  std::string input, format = "text";
  c_classify->add_option("input", input, "system input file (JSON)")
      ->required();
  c_classify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* c_portrait =
      app.add_subcommand("portrait", "render the phase portrait as SVG");
  std::string out_path = "portrait.svg";
  int size = 800, grid = 8;
  bool labels = false, force = false;
  c_portrait->add_option("input", input, "system input file (JSON)")
      ->required();
  c_portrait->add_option("--out", out_path, "output SVG path");
  c_portrait->add_option("--size", size, "image size in px");
  c_portrait->add_option("--orbit-grid", grid, "sample orbits per axis");
  c_portrait->add_flag("--labels", labels, "draw equilibrium labels");
  c_portrait->add_flag("--force", force, "render even if tracing failed");

  auto* c_sweep = app.add_subcommand("sweep", "classify over a parameter grid");
  std::string family = "I";
  std::vector<std::string> ranges(5);
  std::string sweep_out = "-";
  int jobs = 0;
  c_sweep->add_option("--family", family, "normal family I..V")->required();
  c_sweep->add_option("--a", ranges[0], "a value or lo:hi:count")->required();
  c_sweep->add_option("--b", ranges[1], "b value or lo:hi:count")->required();
  c_sweep->add_option("--c", ranges[2], "c value or lo:hi:count")->required();
  c_sweep->add_option("--d", ranges[3], "d value or lo:hi:count")->required();
  c_sweep->add_option("--e", ranges[4], "e value or lo:hi:count")->required();
  c_sweep->add_option("--out", sweep_out, "CSV output path (- for stdout)");
  c_sweep->add_option("--jobs", jobs, "worker threads (0 = auto)");

  auto* c_catalog = app.add_subcommand("catalog", "canonical catalog tools");
  auto* c_build = c_catalog->add_subcommand("build", "build and save the catalog");
  std::string cat_out;
  c_build->add_option("--out", cat_out, "catalog output path");

  auto* c_verify = app.add_subcommand(
      "verify-tables", "classify every corpus tuple and compare");

  CLI11_PARSE(app, argc, argv);

  if (c_classify->parsed())
    return cmd_classify(input, pf, format, catalog_path);
  if (c_portrait->parsed())
    return cmd_portrait(input, pf, out_path, size, grid, labels, force);
  if (c_sweep->parsed())
    return cmd_sweep(family, ranges, pf, sweep_out, catalog_path, jobs);
  if (c_catalog->parsed()) {
    if (c_build->parsed())
      return cmd_catalog_build(pf, cat_out.empty() ? catalog_path : cat_out);
    std::cerr << "error: catalog requires a subcommand (build)\n";
    return 1;
  }
  if (c_verify->parsed()) return cmd_verify_tables(pf, catalog_path);
  return 0;
}
