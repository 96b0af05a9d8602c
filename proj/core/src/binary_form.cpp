#include "p1/binary_form.hpp"

#include <ostream>

#include "p1/error.hpp"

namespace p1 {

namespace {

Rational qpow(const Rational& x, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

bool same_point(const Point& a, const Point& b) { return a.s * b.t == a.t * b.s; }

Rational monomial_value(std::size_t d, std::size_t i, const Point& p) { return qpow(p.s, i) * qpow(p.t, d - i); }

BinaryForm::BinaryForm(std::size_t degree, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != degree + 1) throw PreconditionError("BinaryForm: coefficient count must be degree + 1");
}

BinaryForm BinaryForm::monomial(std::size_t degree, std::size_t s_exponent, const Rational& c) {
  if (s_exponent > degree) throw PreconditionError("BinaryForm::monomial: exponent exceeds degree");
  BinaryForm f = zero(degree);
  f.coeffs_[s_exponent] = c;
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

Rational BinaryForm::operator()(const Point& p) const {
  const std::size_t d = degree();
  Rational acc = 0;
  Rational tp = 1;
  std::vector<Rational> tpow(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    tpow[k] = tp;
    tp *= p.t;
  }
  Rational sp = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    if (sgn(coeffs_[k]) != 0) acc += coeffs_[k] * sp * tpow[d - k];
    sp *= p.s;
  }
  return acc;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw PreconditionError("BinaryForm +: degree mismatch");
  BinaryForm r = a;
  for (std::size_t k = 0; k <= a.degree(); ++k) r.coeffs_[k] += b.coeffs_[k];
  return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw PreconditionError("BinaryForm -: degree mismatch");
  BinaryForm r = a;
  for (std::size_t k = 0; k <= a.degree(); ++k) r.coeffs_[k] -= b.coeffs_[k];
  return r;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r = BinaryForm::zero(a.degree() + b.degree());
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j <= b.degree(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

BinaryForm operator*(const Rational& c, const BinaryForm& a) {
  BinaryForm r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) {
  os << "[";
  for (std::size_t k = 0; k <= f.degree(); ++k) os << (k ? "," : "") << f[k].get_str();
  return os << "]";
}

Rational BiForm::operator()(const Point& p, const Point& q) const {
  Rational acc = 0;
  for (std::size_t i = 0; i <= d1_; ++i)
    for (std::size_t j = 0; j <= d2_; ++j) {
      const Rational& c = at(i, j);
      if (sgn(c) != 0) acc += c * monomial_value(d1_, i, p) * monomial_value(d2_, j, q);
    }
  return acc;
}

}  // namespace p1
