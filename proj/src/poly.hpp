#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace riccati {

// Univariate real polynomial, constant term first. Everything in this
// project has degree <= 2 in each variable, but the container is generic.
class Poly1 {
public:
  Poly1() = default;
  Poly1(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }
  explicit Poly1(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly1 constant(double v) { return Poly1({v}); }

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  double coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0.0;
  }
  const std::vector<double>& coeffs() const { return c_; }

  double operator()(double x) const;
  Poly1 derivative() const;

  // p(mu*x + nu), expanded
  Poly1 compose_affine(double mu, double nu) const;

  Poly1 operator+(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 operator*(double s) const;

  double max_abs_coeff() const;
  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<double> c_;
};

// Dense bivariate polynomial of total degree <= 3; coefficient of x^i y^j
// at c[i][j]. Used for the planar vector fields and their chart expressions.
class Poly2 {
public:
  static constexpr int N = 4;

  Poly2() : c_{} {}

  double& at(int i, int j) { return c_[i][j]; }
  double at(int i, int j) const { return c_[i][j]; }

  static Poly2 from_poly1_in_x(const Poly1& p);
  // q(x) * y
  static Poly2 poly1_in_x_times_y(const Poly1& p);
  static Poly2 monomial(int i, int j, double v);

  double operator()(double x, double y) const;
  Poly2 dx() const;
  Poly2 dy() const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-() const;
  Poly2 operator*(double s) const;
  // multiply by x^i y^j
  Poly2 shifted(int i, int j) const;
  // multiply by a bivariate polynomial (result must stay within degree N-1)
  Poly2 operator*(const Poly2& o) const;

  double max_abs_coeff() const;
  bool is_zero(double tol = 0.0) const;
  std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

private:
  std::array<std::array<double, N>, N> c_;
};

} // namespace riccati
