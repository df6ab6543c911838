#include "algebra.hpp"

#include <cmath>

#include "error.hpp"

namespace riccati {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::bernoulli_input: return "bernoulli_input";
    case Errc::lienard_input: return "lienard_input";
    case Errc::degree_violation: return "degree_violation";
    case Errc::side_condition_violated: return "side_condition_violated";
    case Errc::degenerate_polynomial: return "degenerate_polynomial";
    case Errc::inconsistent_local_type: return "inconsistent_local_type";
    case Errc::impossible_case: return "impossible_case";
    case Errc::lemma_violation: return "lemma_violation";
    case Errc::unresolved_limit: return "unresolved_limit";
    case Errc::ambiguous_match: return "ambiguous_match";
    case Errc::no_match: return "no_match";
    case Errc::catalog_gap: return "catalog_gap";
    case Errc::catalog_required: return "catalog_required";
    case Errc::out_of_domain: return "out_of_domain";
    case Errc::step_failure: return "step_failure";
    case Errc::io_error: return "io_error";
    case Errc::bad_input: return "bad_input";
  }
  return "unknown";
}

RootSet roots_quadratic(const Poly1& p, const SignPolicy& policy,
                        int forced_disc_sign) {
  if (p.is_zero())
    fail(Errc::degenerate_polynomial, "degenerate: all reals are roots");

  const double a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  RootSet r{};
  if (p.degree() == 0) {
    r.kind = RootSet::Kind::no_real_roots;
    return r;
  }
  if (p.degree() == 1) {
    r.kind = RootSet::Kind::one_simple;
    r.roots[0] = -c / b;
    return r;
  }

  const double disc = b * b - 4.0 * a * c;
  // scale-aware sign decision: the policy epsilon acts relative to the
  // coefficient magnitude so that e.g. 1e6*(x^2-eps) still counts as split
  const double scale = std::max({a * a, std::fabs(a * c), b * b, 1e-300});
  int s = forced_disc_sign != 2 ? forced_disc_sign : policy.sign(disc / scale);
  if (s < 0) {
    r.kind = RootSet::Kind::no_real_roots;
    r.complex_pair = true;
    return r;
  }
  if (s == 0) {
    r.kind = RootSet::Kind::double_root;
    r.roots[0] = r.roots[1] = -b / (2.0 * a);
    return r;
  }
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  double r0, r1;
  if (q != 0.0) {
    r0 = q / a;
    r1 = c / q;
  } else { // b == 0
    r0 = sq / (2.0 * a);
    r1 = -r0;
  }
  if (r0 > r1) std::swap(r0, r1);
  r.kind = RootSet::Kind::two_simple;
  r.roots = {r0, r1};
  return r;
}

namespace {

// reconstruct x as n / 10^k for small k; the fixture corpus and typical
// inputs are short decimals
bool as_scaled_int(double x, long long scale, long long& out) {
  double v = x * (double)scale;
  if (std::fabs(v) > 9e15) return false;
  double r = std::nearbyint(v);
  if (std::fabs(v - r) > 1e-9 * std::max(1.0, std::fabs(v))) return false;
  out = (long long)r;
  return true;
}

} // namespace

std::array<int, 4> discriminant_signs(const Params5& p,
                                      const SignPolicy& policy) {
  if (policy.mode == SignPolicy::Mode::strict) {
    for (long long scale : {1LL, 10LL, 100LL, 1000LL, 10000LL, 100000LL}) {
      long long A, B, C, D, E;
      if (!as_scaled_int(p.a, scale, A) || !as_scaled_int(p.b, scale, B) ||
          !as_scaled_int(p.c, scale, C) || !as_scaled_int(p.d, scale, D) ||
          !as_scaled_int(p.e, scale, E))
        continue;
      auto sgn = [](__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
      __int128 s = scale;
      __int128 f1 = (__int128)B * B - 4 * s * E;
      __int128 f2 = (__int128)(B - A) * (B - A) - 4 * s * (C - D + E);
      __int128 i1 = (__int128)(A - s) * (A - s) - 4 * s * C;
      __int128 i2 = (__int128)A * A - 4 * s * C;
      return {sgn(f1), sgn(f2), sgn(i1), sgn(i2)};
    }
  }
  Discriminants d = discriminants(p);
  return {policy.sign(d.dF1), policy.sign(d.dF2), policy.sign(d.dI1),
          policy.sign(d.dI2)};
}

Eigenpair eig2(const std::array<std::array<double, 2>, 2>& m) {
  Eigenpair e{};
  const double tr = m[0][0] + m[1][1];
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double disc = tr * tr - 4.0 * det;

  if (disc < 0.0) {
    e.complex = true;
    e.re = tr / 2.0;
    e.im = std::sqrt(-disc) / 2.0;
    return e;
  }

  const double sq = std::sqrt(disc);
  // same stable-quadratic trick as roots_quadratic, for x^2 - tr x + det
  const double q = 0.5 * (tr + (tr >= 0.0 ? sq : -sq));
  double l1, l2;
  if (q != 0.0 && det != 0.0) {
    l1 = q;
    l2 = det / q;
  } else {
    l1 = (tr + sq) / 2.0;
    l2 = (tr - sq) / 2.0;
  }
  if (l1 > l2) std::swap(l1, l2);
  e.lambda1 = l1;
  e.lambda2 = l2;

  auto eigvec = [&](double lam) -> std::array<double, 2> {
    // rows of (m - lam I); the eigenvector is orthogonal to the larger row
    const double r0x = m[0][0] - lam, r0y = m[0][1];
    const double r1x = m[1][0], r1y = m[1][1] - lam;
    const double n0 = r0x * r0x + r0y * r0y;
    const double n1 = r1x * r1x + r1y * r1y;
    double vx, vy;
    if (n0 >= n1 && n0 > 0.0) {
      vx = -r0y;
      vy = r0x;
    } else if (n1 > 0.0) {
      vx = -r1y;
      vy = r1x;
    } else { // m == lam I
      return {1.0, 0.0};
    }
    const double n = std::hypot(vx, vy);
    return {vx / n, vy / n};
  };

  e.v1 = eigvec(l1);
  e.v2 = eigvec(l2);
  if (sq == 0.0) {
    // repeated eigenvalue: defective unless m is a multiple of I
    const double off = std::fabs(m[0][1]) + std::fabs(m[1][0]) +
                       std::fabs(m[0][0] - m[1][1]);
    const double sc = std::fabs(m[0][0]) + std::fabs(m[0][1]) +
                      std::fabs(m[1][0]) + std::fabs(m[1][1]);
    if (off > 1e-14 * std::max(1.0, sc)) {
      e.defective = true;
      e.v2 = e.v1;
    } else {
      e.v1 = {1.0, 0.0};
      e.v2 = {0.0, 1.0};
    }
  }
  return e;
}

} // namespace riccati
