/* C interface to the Riccati phase-portrait classifier.
 *
 * All functions return RICCATI_OK (0) on success or a nonzero error code;
 * riccati_last_error() describes the most recent failure on the calling
 * thread. Objects are opaque handles released with the matching _free.
 */
#ifndef RICCATI_H
#define RICCATI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct riccati_system riccati_system;
typedef struct riccati_catalog riccati_catalog;
typedef struct riccati_result riccati_result;

enum {
  RICCATI_OK = 0,
  RICCATI_E_BERNOULLI = 1,        /* gamma2 identically zero */
  RICCATI_E_LIENARD = 2,          /* k = 0 */
  RICCATI_E_DEGREE = 3,           /* degree constraints violated */
  RICCATI_E_SIDE_CONDITION = 4,   /* c = d = e = 0 after reduction */
  RICCATI_E_DEGENERATE_POLY = 5,
  RICCATI_E_INCONSISTENT_TYPE = 6,
  RICCATI_E_IMPOSSIBLE_CASE = 7,
  RICCATI_E_LEMMA_VIOLATION = 8,
  RICCATI_E_UNRESOLVED_LIMIT = 9,
  RICCATI_E_AMBIGUOUS_MATCH = 10,
  RICCATI_E_NO_MATCH = 11,
  RICCATI_E_CATALOG_GAP = 12,
  RICCATI_E_CATALOG_REQUIRED = 13,
  RICCATI_E_OUT_OF_DOMAIN = 14,
  RICCATI_E_STEP_FAILURE = 15,
  RICCATI_E_IO = 16,
  RICCATI_E_BAD_INPUT = 17,
  RICCATI_E_INTERNAL = 100
};

/* sign policies for the discriminant trichotomies */
enum { RICCATI_POLICY_TOLERANT = 0, RICCATI_POLICY_STRICT = 1 };

const char* riccati_error_name(int code);
const char* riccati_last_error(void);
void riccati_string_free(char* s);

/* ---- systems ---- */

/* family is one of "I".."V"; params are (a, b, c, d, e) */
int riccati_system_from_normal_form(const char* family, const double params[5],
                                    riccati_system** out);

/* raw coefficients, constant term first; reduced to a normal form */
int riccati_system_from_raw(const double* alpha2, int n_alpha2, double k,
                            const double* beta1, int n_beta1,
                            const double* gamma2, int n_gamma2, int policy,
                            double epsilon, riccati_system** out);

void riccati_system_free(riccati_system* s);

int riccati_system_family(const riccati_system* s, char* buf, size_t bufsize);
int riccati_system_params(const riccati_system* s, double out[5]);
/* dF1, dF2, dI1, dI2 */
int riccati_system_discriminants(const riccati_system* s, double out[4]);
int riccati_system_orientation_reversed(const riccati_system* s, int* out);

/* ---- canonical catalog ---- */

int riccati_catalog_build(int policy, double epsilon, riccati_catalog** out);
int riccati_catalog_save(const riccati_catalog* c, const char* path);
int riccati_catalog_load(const char* path, riccati_catalog** out);
void riccati_catalog_free(riccati_catalog* c);
/* portraits without a usable catalog entry; returns the count, fills up to
 * cap ids */
int riccati_catalog_gaps(const riccati_catalog* c, int* ids, int cap);

/* ---- classification ---- */

/* catalog may be NULL; rows that need skeleton matching then fail with
 * RICCATI_E_CATALOG_REQUIRED */
int riccati_classify(const riccati_system* s, const riccati_catalog* catalog,
                     int policy, double epsilon, riccati_result** out);
int riccati_result_portrait(const riccati_result* r, int* id);
/* structured = 0: plain text, 1: JSON; free with riccati_string_free */
int riccati_result_report(const riccati_result* r, int structured, char** text);
void riccati_result_free(riccati_result* r);

/* ---- rendering ---- */

/* force = 1 renders a best-effort portrait even when classification fails */
int riccati_render_svg(const riccati_system* s, int policy, double epsilon,
                       int size_px, int orbit_grid, int show_labels, int force,
                       char** svg);

/* ---- fixture corpus (the acceptance tuples) ---- */

int riccati_fixture_count(void);
/* family buffer needs >= 4 bytes; complete = 0 marks tuples the catalog
 * derives by continuation */
int riccati_fixture(int index, int* id, char* family, double params[5],
                    int* complete);

#ifdef __cplusplus
}
#endif

#endif /* RICCATI_H */
