#include "system.hpp"

#include <cmath>

#include "error.hpp"

namespace riccati {

const char* family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "I" || s == "i" || s == "1") return Family::I;
  if (s == "II" || s == "ii" || s == "2") return Family::II;
  if (s == "III" || s == "iii" || s == "3") return Family::III;
  if (s == "IV" || s == "iv" || s == "4") return Family::IV;
  if (s == "V" || s == "v" || s == "5") return Family::V;
  fail(Errc::bad_input, "unknown family name: " + s);
}

ValidatedSystem validate(const GeneralRiccati& input) {
  if (input.gamma2.is_zero())
    fail(Errc::bernoulli_input,
         "gamma2 is identically zero: Bernoulli system, out of scope");
  if (input.k == 0.0)
    fail(Errc::lienard_input, "k = 0: Lienard system, out of scope");
  if (input.alpha2.degree() > 2)
    fail(Errc::degree_violation, "alpha2 has degree > 2");
  if (input.beta1.degree() > 1)
    fail(Errc::degree_violation, "beta1 has degree > 1");
  if (input.gamma2.degree() > 2)
    fail(Errc::degree_violation, "gamma2 has degree > 2");
  if (input.alpha2.is_zero())
    fail(Errc::degree_violation,
         "alpha2 is identically zero: x-dynamics degenerate, out of scope");
  return ValidatedSystem{input};
}

Poly1 family_alpha(Family f) {
  switch (f) {
    case Family::I: return Poly1({0.0, 1.0, 1.0});  // x(x+1)
    case Family::II: return Poly1({0.0, 0.0, 1.0}); // x^2
    case Family::III: return Poly1({0.0, 1.0});     // x
    case Family::IV: return Poly1({1.0});           // 1
    case Family::V: return Poly1({1.0, 0.0, 1.0});  // x^2+1
  }
  return Poly1();
}

namespace {

// Push the y-equation through x = mu*x1 + nu, y1 = (k/lambda) y, tau = lambda t.
// The y1^2 coefficient becomes exactly 1 by the choice of y-scale.
Params5 mapped_params(const GeneralRiccati& sys, double mu, double nu,
                      double lambda) {
  const double k = sys.k;
  Params5 p;
  Poly1 beta = sys.beta1.compose_affine(mu, nu);   // beta1(mu x1 + nu)
  Poly1 gamma = sys.gamma2.compose_affine(mu, nu); // gamma2(mu x1 + nu)
  p.a = beta.coeff(1) / lambda;
  p.b = beta.coeff(0) / lambda;
  const double kk = k / (lambda * lambda);
  p.c = kk * gamma.coeff(2);
  p.d = kk * gamma.coeff(1);
  p.e = kk * gamma.coeff(0);
  return p;
}

} // namespace

NormalForm reduce(const ValidatedSystem& v, const SignPolicy& policy) {
  const GeneralRiccati& sys = v.sys;
  const Poly1& al = sys.alpha2;
  NormalForm nf;
  CoordinateChange ch;
  double lambda = 1.0;

  if (al.degree() == 2) {
    const double A = al.coeff(2);
    RootSet rs = roots_quadratic(al, policy);
    switch (rs.kind) {
      case RootSet::Kind::two_simple: {
        nf.family = Family::I;
        double r = rs.roots[0], s = rs.roots[1];
        // order the roots so that the time scale A*(r - s) is positive
        if (A * (r - s) < 0.0) std::swap(r, s);
        ch.r = r;
        ch.s = s;
        ch.mu = r - s;
        ch.nu = r;
        lambda = A * (r - s);
        break;
      }
      case RootSet::Kind::double_root: {
        nf.family = Family::II;
        const double r = rs.roots[0];
        ch.r = ch.s = r;
        ch.mu = (A > 0.0) ? 1.0 : -1.0; // x-flip keeps time forward
        ch.nu = r;
        lambda = A * ch.mu;
        break;
      }
      default: { // complex pair
        nf.family = Family::V;
        const double r = -al.coeff(1) / (2.0 * A);
        double s = std::sqrt(std::max(0.0, al(r) / A));
        if (A < 0.0) s = -s; // time scale A*s stays positive
        ch.r = r;
        ch.s = s;
        ch.mu = s;
        ch.nu = r;
        lambda = A * s;
        break;
      }
    }
  } else if (al.degree() == 1) {
    nf.family = Family::III;
    const double B = al.coeff(1);
    const double r = -al.coeff(0) / B;
    ch.r = ch.s = r;
    ch.mu = 1.0;
    ch.nu = r;
    lambda = B; // sign not adjustable: B < 0 reverses orientation
  } else { // degree 0, nonzero constant
    nf.family = Family::IV;
    const double C = al.coeff(0);
    ch.mu = (C > 0.0) ? 1.0 : -1.0;
    ch.nu = 0.0;
    lambda = C / ch.mu;
  }

  ch.time_scale = lambda;
  ch.orientation_reversed = lambda < 0.0;
  ch.y_scale = sys.k / lambda;
  nf.change = ch;
  nf.params = mapped_params(sys, ch.mu, ch.nu, lambda);

  const Params5& p = nf.params;
  if (p.c == 0.0 && p.d == 0.0 && p.e == 0.0)
    fail(Errc::side_condition_violated,
         "reduced system has c = d = e = 0, outside the classified class");
  return nf;
}

AffineField affine_field(const NormalForm& nf) {
  const Params5& p = nf.params;
  AffineField f;
  f.P = Poly2::from_poly1_in_x(family_alpha(nf.family));
  f.Q = Poly2::monomial(0, 2, 1.0) +
        Poly2::poly1_in_x_times_y(Poly1({p.b, p.a})) +
        Poly2::from_poly1_in_x(Poly1({p.e, p.d, p.c}));
  return f;
}

AffineField affine_field(const GeneralRiccati& sys) {
  AffineField f;
  f.P = Poly2::from_poly1_in_x(sys.alpha2);
  f.Q = Poly2::monomial(0, 2, sys.k) + Poly2::poly1_in_x_times_y(sys.beta1) +
        Poly2::from_poly1_in_x(sys.gamma2);
  return f;
}

} // namespace riccati
