#pragma once

#include <string>

#include "algebra.hpp"
#include "poly.hpp"

namespace riccati {

// Raw input system  x' = alpha2(x),  y' = k y^2 + beta1(x) y + gamma2(x).
struct GeneralRiccati {
  Poly1 alpha2;   // degree <= 2
  double k = 1.0; // != 0
  Poly1 beta1;    // degree <= 1
  Poly1 gamma2;   // degree <= 2, not identically zero
};

enum class Family : int { I = 1, II = 2, III = 3, IV = 4, V = 5 };

const char* family_name(Family f);
Family family_from_name(const std::string& s);

// Affine change x = mu*x1 + nu, y1 = y_scale*y, tau = time_scale*t that
// carries the input onto its normal form. time_scale < 0 only happens for
// family III with decreasing x-dynamics; the flag records the reversal.
struct CoordinateChange {
  double mu = 1.0, nu = 0.0;
  double y_scale = 1.0;
  double time_scale = 1.0;
  bool orientation_reversed = false;
  // root data of alpha2 that produced the map (family-dependent meaning)
  double r = 0.0, s = 0.0;
  bool identity() const {
    return mu == 1.0 && nu == 0.0 && y_scale == 1.0 && time_scale == 1.0;
  }
};

struct NormalForm {
  Family family = Family::I;
  Params5 params;
  CoordinateChange change;
};

struct ValidatedSystem {
  GeneralRiccati sys;
};

// Rejects Bernoulli (gamma2 == 0), Lienard (k == 0) and degenerate inputs
// (alpha2 == 0 or degrees above the quadratic class).
ValidatedSystem validate(const GeneralRiccati& input);

// Reduction onto one of the five normal families; family selection follows
// the root structure of alpha2 under the sign policy.
NormalForm reduce(const ValidatedSystem& v, const SignPolicy& policy);

inline NormalForm make_normal_form(Family f, const Params5& p) {
  NormalForm nf;
  nf.family = f;
  nf.params = p;
  return nf;
}

// x-dynamics polynomial of a normal family: x(x+1), x^2, x, 1, x^2+1.
Poly1 family_alpha(Family f);

// Planar vector field (P, Q) of a normal form in affine coordinates.
struct AffineField {
  Poly2 P, Q;
};
AffineField affine_field(const NormalForm& nf);
AffineField affine_field(const GeneralRiccati& sys);

} // namespace riccati
