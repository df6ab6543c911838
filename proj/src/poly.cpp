#include "poly.hpp"

#include <cmath>
#include <cstdio>

namespace riccati {

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Poly1::operator()(double x) const {
  double r = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly1 Poly1::derivative() const {
  std::vector<double> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * double(i));
  return Poly1(std::move(d));
}

Poly1 Poly1::compose_affine(double mu, double nu) const {
  // Horner in (mu*x + nu)
  Poly1 r;
  for (std::size_t i = c_.size(); i-- > 0;) {
    // r = r*(mu x + nu) + c_[i]
    Poly1 t;
    std::vector<double> tc(r.c_.size() + 1, 0.0);
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
      tc[k] += r.c_[k] * nu;
      tc[k + 1] += r.c_[k] * mu;
    }
    t = Poly1(std::move(tc));
    r = t + Poly1({c_[i]});
  }
  return r;
}

Poly1 Poly1::operator+(const Poly1& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly1(std::move(r));
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (c_.empty() || o.c_.empty()) return Poly1();
  std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly1(std::move(r));
}

Poly1 Poly1::operator*(double s) const {
  std::vector<double> r(c_);
  for (auto& v : r) v *= s;
  return Poly1(std::move(r));
}

double Poly1::max_abs_coeff() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::fabs(v));
  return m;
}

std::string Poly1::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  char buf[64];
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0.0 && c_.size() > 1) continue;
    std::snprintf(buf, sizeof buf, "%+g", c_[i]);
    s += buf;
    if (i == 1) s += var;
    else if (i > 1) {
      std::snprintf(buf, sizeof buf, "%s^%zu", var.c_str(), i);
      s += buf;
    }
  }
  return s;
}

Poly2 Poly2::from_poly1_in_x(const Poly1& p) {
  Poly2 r;
  for (int i = 0; i <= p.degree() && i < N; ++i) r.c_[i][0] = p.coeff(i);
  return r;
}

Poly2 Poly2::poly1_in_x_times_y(const Poly1& p) {
  Poly2 r;
  for (int i = 0; i <= p.degree() && i < N; ++i) r.c_[i][1] = p.coeff(i);
  return r;
}

Poly2 Poly2::monomial(int i, int j, double v) {
  Poly2 r;
  r.c_[i][j] = v;
  return r;
}

double Poly2::operator()(double x, double y) const {
  double yp[N] = {1.0, y, y * y, y * y * y};
  double r = 0.0;
  for (int i = N - 1; i >= 0; --i) {
    double row = 0.0;
    for (int j = 0; j < N; ++j) row += c_[i][j] * yp[j];
    r = r * x + row;
  }
  return r;
}

Poly2 Poly2::dx() const {
  Poly2 r;
  for (int i = 1; i < N; ++i)
    for (int j = 0; j < N; ++j) r.c_[i - 1][j] = c_[i][j] * i;
  return r;
}

Poly2 Poly2::dy() const {
  Poly2 r;
  for (int i = 0; i < N; ++i)
    for (int j = 1; j < N; ++j) r.c_[i][j - 1] = c_[i][j] * j;
  return r;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r.c_[i][j] = c_[i][j] + o.c_[i][j];
  return r;
}

Poly2 Poly2::operator-() const {
  Poly2 r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r.c_[i][j] = -c_[i][j];
  return r;
}

Poly2 Poly2::operator*(double s) const {
  Poly2 r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r.c_[i][j] = c_[i][j] * s;
  return r;
}

Poly2 Poly2::shifted(int di, int dj) const {
  Poly2 r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (c_[i][j] == 0.0) continue;
      r.c_[i + di][j + dj] = c_[i][j];
    }
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (c_[i][j] == 0.0) continue;
      for (int k = 0; k + i < N; ++k)
        for (int l = 0; l + j < N; ++l) r.c_[i + k][j + l] += c_[i][j] * o.c_[k][l];
    }
  return r;
}

double Poly2::max_abs_coeff() const {
  double m = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m = std::max(m, std::fabs(c_[i][j]));
  return m;
}

bool Poly2::is_zero(double tol) const {
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (std::fabs(c_[i][j]) > tol) return false;
  return true;
}

std::string Poly2::str(const std::string& vx, const std::string& vy) const {
  std::string s;
  char buf[96];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (c_[i][j] == 0.0) continue;
      std::snprintf(buf, sizeof buf, "%+g", c_[i][j]);
      s += buf;
      for (int k = 0; k < 1 && i > 0; ++k) {
        std::snprintf(buf, sizeof buf, "%s^%d", vx.c_str(), i);
        s += (i == 1) ? vx : std::string(buf);
      }
      if (j > 0) {
        std::snprintf(buf, sizeof buf, "%s^%d", vy.c_str(), j);
        s += (j == 1) ? vy : std::string(buf);
      }
    }
  return s.empty() ? "0" : s;
}

} // namespace riccati
