#include "riccati/riccati.h"

#include <cstring>
#include <string>

#include "classify.hpp"
#include "error.hpp"
#include "render.hpp"
#include "report.hpp"

using namespace riccati;

struct riccati_system {
  NormalForm nf;
};
struct riccati_catalog {
  Catalog cat;
};
struct riccati_result {
  ClassifyResult res;
};

namespace {

thread_local std::string g_last_error;

int set_error(const Error& e) {
  g_last_error = e.what();
  return static_cast<int>(e.code());
}

int set_error(const std::exception& e) {
  g_last_error = e.what();
  return RICCATI_E_INTERNAL;
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    return RICCATI_OK;
  } catch (const Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    return set_error(e);
  }
}

SignPolicy make_policy(int policy, double epsilon) {
  if (policy == RICCATI_POLICY_STRICT) return SignPolicy::strict();
  return SignPolicy::tolerant(epsilon > 0.0 ? epsilon : 1e-9);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Poly1 poly_from(const double* c, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(c[i]);
  return Poly1(std::move(v));
}

} // namespace

extern "C" {

const char* riccati_error_name(int code) {
  if (code == RICCATI_E_INTERNAL) return "internal";
  return errc_name(static_cast<Errc>(code));
}

const char* riccati_last_error(void) { return g_last_error.c_str(); }

void riccati_string_free(char* s) { ::free(s); }

int riccati_system_from_normal_form(const char* family, const double params[5],
                                    riccati_system** out) {
  return guarded([&] {
    if (!family || !params || !out) fail(Errc::bad_input, "null argument");
    // the side condition is enforced only on the reduction path: direct
    // normal-form input accepts boundary members such as c = d = e = 0
    NormalForm nf = make_normal_form(
        family_from_name(family),
        Params5{params[0], params[1], params[2], params[3], params[4]});
    *out = new riccati_system{nf};
  });
}

int riccati_system_from_raw(const double* alpha2, int n_alpha2, double k,
                            const double* beta1, int n_beta1,
                            const double* gamma2, int n_gamma2, int policy,
                            double epsilon, riccati_system** out) {
  return guarded([&] {
    if (!out) fail(Errc::bad_input, "null output");
    GeneralRiccati sys;
    sys.alpha2 = poly_from(alpha2, n_alpha2);
    sys.k = k;
    sys.beta1 = poly_from(beta1, n_beta1);
    sys.gamma2 = poly_from(gamma2, n_gamma2);
    NormalForm nf = reduce(validate(sys), make_policy(policy, epsilon));
    *out = new riccati_system{nf};
  });
}

void riccati_system_free(riccati_system* s) { delete s; }

int riccati_system_family(const riccati_system* s, char* buf, size_t bufsize) {
  return guarded([&] {
    if (!s || !buf || bufsize < 4) fail(Errc::bad_input, "bad buffer");
    std::snprintf(buf, bufsize, "%s", family_name(s->nf.family));
  });
}

int riccati_system_params(const riccati_system* s, double out[5]) {
  return guarded([&] {
    if (!s || !out) fail(Errc::bad_input, "null argument");
    const Params5& p = s->nf.params;
    out[0] = p.a;
    out[1] = p.b;
    out[2] = p.c;
    out[3] = p.d;
    out[4] = p.e;
  });
}

int riccati_system_discriminants(const riccati_system* s, double out[4]) {
  return guarded([&] {
    if (!s || !out) fail(Errc::bad_input, "null argument");
    Discriminants d = discriminants(s->nf.params);
    out[0] = d.dF1;
    out[1] = d.dF2;
    out[2] = d.dI1;
    out[3] = d.dI2;
  });
}

int riccati_system_orientation_reversed(const riccati_system* s, int* out) {
  return guarded([&] {
    if (!s || !out) fail(Errc::bad_input, "null argument");
    *out = s->nf.change.orientation_reversed ? 1 : 0;
  });
}

int riccati_catalog_build(int policy, double epsilon, riccati_catalog** out) {
  return guarded([&] {
    if (!out) fail(Errc::bad_input, "null output");
    *out = new riccati_catalog{Catalog::build(make_policy(policy, epsilon))};
  });
}

int riccati_catalog_save(const riccati_catalog* c, const char* path) {
  return guarded([&] {
    if (!c || !path) fail(Errc::bad_input, "null argument");
    c->cat.save(path);
  });
}

int riccati_catalog_load(const char* path, riccati_catalog** out) {
  return guarded([&] {
    if (!path || !out) fail(Errc::bad_input, "null argument");
    *out = new riccati_catalog{Catalog::load(path)};
  });
}

void riccati_catalog_free(riccati_catalog* c) { delete c; }

int riccati_catalog_gaps(const riccati_catalog* c, int* ids, int cap) {
  if (!c) return -1;
  auto gaps = c->cat.gaps();
  for (int i = 0; i < (int)gaps.size() && i < cap; ++i) ids[i] = gaps[i];
  return (int)gaps.size();
}

int riccati_classify(const riccati_system* s, const riccati_catalog* catalog,
                     int policy, double epsilon, riccati_result** out) {
  return guarded([&] {
    if (!s || !out) fail(Errc::bad_input, "null argument");
    ClassifyResult res = classify(s->nf, make_policy(policy, epsilon),
                                  catalog ? &catalog->cat : nullptr);
    *out = new riccati_result{std::move(res)};
  });
}

int riccati_result_portrait(const riccati_result* r, int* id) {
  return guarded([&] {
    if (!r || !id) fail(Errc::bad_input, "null argument");
    *id = r->res.portrait;
  });
}

int riccati_result_report(const riccati_result* r, int structured,
                          char** text) {
  return guarded([&] {
    if (!r || !text) fail(Errc::bad_input, "null argument");
    *text = dup_string(structured ? classification_report_json(r->res)
                                  : classification_report(r->res));
  });
}

void riccati_result_free(riccati_result* r) { delete r; }

int riccati_render_svg(const riccati_system* s, int policy, double epsilon,
                       int size_px, int orbit_grid, int show_labels, int force,
                       char** svg) {
  return guarded([&] {
    if (!s || !svg) fail(Errc::bad_input, "null argument");
    SignPolicy pol = make_policy(policy, epsilon);
    SeparatrixSkeleton sk = trace_separatrices(s->nf, pol);
    if (sk.has_unresolved && !force)
      fail(Errc::unresolved_limit,
           "trace left unresolved separatrices; pass force to render anyway");
    RenderSpec spec;
    if (size_px > 0) spec.size_px = size_px;
    spec.orbit_grid = orbit_grid;
    spec.show_labels = show_labels != 0;
    std::vector<Trajectory> orbits;
    if (orbit_grid > 0) orbits = grid_orbits(s->nf, pol, orbit_grid);
    *svg = dup_string(render_disk(sk, orbits, spec));
  });
}

int riccati_fixture_count(void) { return (int)fixture_corpus().size(); }

int riccati_fixture(int index, int* id, char* family, double params[5],
                    int* complete) {
  return guarded([&] {
    const auto& corpus = fixture_corpus();
    if (index < 0 || index >= (int)corpus.size())
      fail(Errc::bad_input, "fixture index out of range");
    const Fixture& f = corpus[index];
    if (id) *id = f.id;
    if (family) std::snprintf(family, 4, "%s", family_name(f.family));
    if (params) {
      params[0] = f.params.a;
      params[1] = f.params.b;
      params[2] = f.params.c;
      params[3] = f.params.d;
      params[4] = f.params.e;
    }
    if (complete) *complete = f.complete ? 1 : 0;
  });
}

} // extern "C"
