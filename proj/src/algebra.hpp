#pragma once

#include <array>
#include <optional>

#include "poly.hpp"

namespace riccati {

// Computational sign convention for the discriminant trichotomies.
// tolerant: sign(x) = 0 iff |x| <= epsilon; strict: iff x == 0 exactly.
struct SignPolicy {
  enum class Mode { tolerant, strict };
  double epsilon = 1e-9;
  Mode mode = Mode::tolerant;

  static SignPolicy tolerant(double eps = 1e-9) { return {eps, Mode::tolerant}; }
  static SignPolicy strict() { return {0.0, Mode::strict}; }

  int sign(double x) const {
    if (mode == Mode::strict) return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0);
    if (x > epsilon) return 1;
    if (x < -epsilon) return -1;
    return 0;
  }
};

struct RootSet {
  enum class Kind {
    no_real_roots,   // empty (nonzero constant) or complex pair
    one_simple,      // linear
    double_root,
    two_simple,
  };
  Kind kind;
  bool complex_pair = false; // set when kind == no_real_roots came from disc < 0
  std::array<double, 2> roots{0.0, 0.0}; // ascending when two

  int count() const {
    switch (kind) {
      case Kind::no_real_roots: return 0;
      case Kind::one_simple:
      case Kind::double_root: return 1;
      case Kind::two_simple: return 2;
    }
    return 0;
  }
};

// Real roots of a polynomial of degree <= 2, discriminant sign decided
// through the policy. Cancellation-safe form for the quadratic case.
// Throws Errc::degenerate_polynomial on the zero polynomial.
// forced_disc_sign overrides the policy decision when the caller knows the
// discriminant sign exactly (e.g. from decimal-exact arithmetic).
RootSet roots_quadratic(const Poly1& p, const SignPolicy& policy,
                        int forced_disc_sign = 2);

struct Eigenpair {
  bool complex = false;
  // real case: lambda1 <= lambda2 unordered by magnitude; complex case:
  // lambda = re +- i*im, no eigenvectors.
  double lambda1 = 0.0, lambda2 = 0.0;
  double re = 0.0, im = 0.0;
  std::array<double, 2> v1{1.0, 0.0}, v2{0.0, 1.0};
  bool defective = false; // repeated eigenvalue with 1-d eigenspace
};

// Eigen decomposition of a real 2x2 matrix m[row][col].
Eigenpair eig2(const std::array<std::array<double, 2>, 2>& m);

// The four quadratic discriminants controlling equilibrium structure.
struct Discriminants {
  double dF1 = 0.0, dF2 = 0.0, dI1 = 0.0, dI2 = 0.0;
};

struct Params5 {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;
};

inline Discriminants discriminants(const Params5& p) {
  return {p.b * p.b - 4.0 * p.e,
          (p.b - p.a) * (p.b - p.a) - 4.0 * (p.c - p.d + p.e),
          (p.a - 1.0) * (p.a - 1.0) - 4.0 * p.c,
          p.a * p.a - 4.0 * p.c};
}

// Signs of (dF1, dF2, dI1, dI2). Parameters that are short decimal
// fractions are rescaled to integers and the signs settled exactly, so that
// strict-policy classification of decimal inputs is immune to binary
// rounding; otherwise the policy decides on the floating values.
std::array<int, 4> discriminant_signs(const Params5& p,
                                      const SignPolicy& policy);

} // namespace riccati
