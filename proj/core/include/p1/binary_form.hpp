#pragma once

// Homogeneous binary forms f(s, t) = sum_k c_k s^k t^(d-k) over Q, and
// bihomogeneous forms on P^1 x P^1.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "p1/numeric.hpp"

namespace p1 {

/// A point of P^1 given by a nonzero rational pair (s : t).
struct Point {
  Rational s, t;
};

/// True iff the two pairs span the same line. Both must be nonzero.
bool same_point(const Point& a, const Point& b);

class BinaryForm {
 public:
  BinaryForm() : coeffs_(1) {}
  /// Coefficients lowest s-exponent first; length must be degree + 1.
  BinaryForm(std::size_t degree, std::vector<Rational> coeffs);

  static BinaryForm zero(std::size_t degree) { return BinaryForm(degree, std::vector<Rational>(degree + 1)); }
  static BinaryForm monomial(std::size_t degree, std::size_t s_exponent, const Rational& c = 1);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of s^k t^(d-k).
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  bool is_zero() const;

  Rational operator()(const Point& p) const;

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rational& c, const BinaryForm& a);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

/// Bihomogeneous form of bidegree (d1, d2): sum c_ij s^i t^(d1-i) u^j v^(d2-j).
class BiForm {
 public:
  BiForm(std::size_t d1, std::size_t d2) : d1_(d1), d2_(d2), grid_((d1 + 1) * (d2 + 1)) {}

  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }
  Rational& at(std::size_t i, std::size_t j) { return grid_[i * (d2_ + 1) + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return grid_[i * (d2_ + 1) + j]; }

  Rational operator()(const Point& p, const Point& q) const;

 private:
  std::size_t d1_, d2_;
  std::vector<Rational> grid_;
};

/// Value of the monomial s^i t^(d-i) at p.
Rational monomial_value(std::size_t d, std::size_t i, const Point& p);

}  // namespace p1
