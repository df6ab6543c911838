#pragma once

#include <array>
#include <vector>

#include "equilibria.hpp"
#include "poly.hpp"
#include "system.hpp"

namespace riccati {

// Compactified vector field in one chart, polynomial in (u, v) after the
// degree normalization; the line v = 0 is invariant by construction.
struct ChartField {
  Chart chart = Chart::U1;
  Poly2 u_dot, v_dot;
};

// Chart expression of the compactified field, derived from the chart maps
// applied to the affine field (not transcribed from per-family tables).
ChartField chart_field(const NormalForm& nf, Chart chart);
ChartField chart_field(const AffineField& aff, Chart chart);

// Normal form plus its affine and chart fields with cached derivatives;
// the single evaluation surface used by the integrator and the tracer.
class CompactifiedSystem {
public:
  explicit CompactifiedSystem(const NormalForm& nf);

  const NormalForm& normal_form() const { return nf_; }
  const AffineField& affine() const { return aff_; }
  const ChartField& chart(Chart c) const;

  Vec2 eval(const DiskPoint& q) const;
  std::array<std::array<double, 2>, 2> jacobian(const DiskPoint& q) const;

  // sign of the equator angular velocity at boundary angle phi
  // (+1 counterclockwise)
  int equator_flow_sign(double phi) const;

private:
  NormalForm nf_;
  AffineField aff_;
  struct Derivs {
    Poly2 fx_x, fx_y, fy_x, fy_y;
  };
  std::array<ChartField, 4> charts_; // U1, U2, V1, V2
  Derivs aff_d_;
  std::array<Derivs, 4> chart_d_;
};

// All equilibria on the circle at infinity: the vertical-direction nodes n
// (top, attracting) and s (bottom, repelling) plus 0, 2 or 4 equator points,
// antipodal in pairs, from the roots of the U1 equator polynomial.
std::vector<Equilibrium> infinite_equilibria(const NormalForm& nf,
                                             const SignPolicy& policy);

LocalType classify_infinite(const NormalForm& nf, const Equilibrium& eq,
                            const SignPolicy& policy);

} // namespace riccati
