#include "p1/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "p1/error.hpp"

namespace p1 {

namespace {

// 2^31 - 1, so products of residues fit in 64 bits.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 31) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const Integer& v) {
  return mpz_fdiv_ui(v.get_mpz_t(), kPrime);
}

// Scales each row by the lcm of its denominators; row scaling preserves rank.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& d = m(i, j).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      out[i][j] = x.get_num() * (l / x.get_den());
    }
  }
  return out;
}

// Rank modulo a prime. Never exceeds the rank over Q.
std::size_t rank_mod_p(const std::vector<std::vector<Integer>>& a, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> m(a.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = sgn(a[i][j]) == 0 ? 0 : reduce(a[i][j]);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const std::uint64_t inv = powmod(m[r][c], kPrime - 2);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = mulmod(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        m[i][j] = (m[i][j] + kPrime - mulmod(f, m[r][j])) % kPrime;
      }
    }
    ++r;
  }
  return r;
}

// Fraction-free (Bareiss) elimination; every division is exact.
std::size_t rank_bareiss(std::vector<std::vector<Integer>> a, std::size_t cols) {
  std::size_t r = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), a[i][c].get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

std::vector<Rational> Matrix::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = integer_rows(m);
  // A full-rank certificate mod p is a full-rank certificate over Q.
  const std::size_t full = std::min(m.rows(), m.cols());
  if (rank_mod_p(a, m.cols()) == full) return full;
  return rank_bareiss(std::move(a), m.cols());
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  Matrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors, std::size_t dim) {
  return rank(Matrix::from_rows(vectors, dim));
}

}  // namespace p1
