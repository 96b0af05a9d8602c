#include "p1/graded_map.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "p1/error.hpp"
#include "p1/random.hpp"

namespace p1 {

namespace {

constexpr std::size_t kMaxEntryDegree = std::size_t{1} << 16;
constexpr std::size_t kMaxSectionMatrixCells = std::size_t{1} << 26;

std::size_t entry_size(const Integer& degree) {
  if (sgn(degree) < 0) return 0;
  const std::size_t d = to_size(degree, "entry degree");
  if (d > kMaxEntryDegree) throw Error("graded map entry degree exceeds materialization limit");
  return d + 1;
}

// h0(O(d)) as a machine integer.
std::size_t sections(const Integer& d) {
  if (d < -1) return 0;
  const Integer c = d + 1;
  return to_size(c, "section count");
}

// Sum of the k largest (or smallest) entries of a sorted non-increasing list.
Integer top_sum(const SplittingType& a, std::size_t k) {
  Integer s = 0;
  for (std::size_t i = 0; i < k && i < a.rank(); ++i) s += a.degrees()[i];
  return s;
}

Integer bottom_sum(const SplittingType& a, std::size_t k) {
  Integer s = 0;
  for (std::size_t i = 0; i < k && i < a.rank(); ++i) s += a.degrees()[a.rank() - 1 - i];
  return s;
}

SymBasis make_basis(std::size_t n, const SplittingType& a, bool repeat) {
  SymBasis b;
  b.n = n;
  const std::size_t r = a.rank();
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == n) {
      b.monomials.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < r; ++i) {
      cur.push_back(i);
      rec(repeat ? i : i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::vector<Integer> deg(b.monomials.size());
  for (std::size_t k = 0; k < b.monomials.size(); ++k)
    for (std::size_t i : b.monomials[k]) deg[k] += a.degrees()[i];
  std::vector<std::size_t> order(b.monomials.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return deg[x] > deg[y]; });
  std::vector<std::vector<std::size_t>> sorted;
  std::vector<Integer> sorted_deg;
  for (std::size_t k : order) {
    sorted.push_back(b.monomials[k]);
    sorted_deg.push_back(deg[k]);
  }
  b.monomials = std::move(sorted);
  b.type = SplittingType(std::move(sorted_deg));
  return b;
}

}  // namespace

// ---------------------------------------------------------------- GradedMap

GradedMap::GradedMap(SplittingType source, SplittingType target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (static_cast<double>(rows()) * static_cast<double>(cols()) > static_cast<double>(kMaxMaterializedRank))
    throw Error("graded map shape exceeds materialization limit");
  entries_.resize(rows() * cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) entries_[i * cols() + j].resize(entry_size(entry_degree(i, j)));
}

GradedMap GradedMap::identity(const SplittingType& a) {
  GradedMap m(a, a);
  for (std::size_t i = 0; i < a.rank(); ++i) m.entries_[i * a.rank() + i][0] = 1;
  return m;
}

Integer GradedMap::entry_degree(std::size_t i, std::size_t j) const {
  return target_.degrees()[i] - source_.degrees()[j];
}

BinaryForm GradedMap::entry(std::size_t i, std::size_t j) const {
  const auto& c = entries_[i * cols() + j];
  if (c.empty()) throw PreconditionError("GradedMap::entry: entry has negative degree");
  return BinaryForm(c.size() - 1, c);
}

void GradedMap::set_entry(std::size_t i, std::size_t j, const BinaryForm& f) {
  auto& c = entries_.at(i * cols() + j);
  if (c.empty() || f.degree() + 1 != c.size())
    throw PreconditionError("GradedMap::set_entry: degree mismatch at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  c = f.coeffs();
}

void GradedMap::add_to_entry(std::size_t i, std::size_t j, const BinaryForm& f) {
  auto& c = entries_.at(i * cols() + j);
  if (c.empty() || f.degree() + 1 != c.size())
    throw PreconditionError("GradedMap::add_to_entry: degree mismatch at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += f[k];
}

bool GradedMap::is_zero() const {
  for (const auto& c : entries_)
    for (const auto& x : c)
      if (sgn(x) != 0) return false;
  return true;
}

ProfileWindow ProfileWindow::derive(const GradedMap& m) {
  Integer big = 0;
  for (const auto* t : {&m.source(), &m.target()})
    for (const auto& d : t->degrees()) big = std::max(big, Integer(abs(d)));
  const Integer pad = big + static_cast<unsigned long>(m.cols()) + 2;
  return {Integer(-pad), pad};
}

// ---------------------------------------------------------- evaluation

Matrix section_matrix(const GradedMap& m, const Integer& n) {
  const auto& s = m.source().degrees();
  const auto& t = m.target().degrees();
  std::vector<std::size_t> col_off(m.cols() + 1, 0), row_off(m.rows() + 1, 0);
  for (std::size_t j = 0; j < m.cols(); ++j) col_off[j + 1] = col_off[j] + sections(s[j] + n);
  for (std::size_t i = 0; i < m.rows(); ++i) row_off[i + 1] = row_off[i] + sections(t[i] + n);
  const std::size_t R = row_off.back(), C = col_off.back();
  if (R != 0 && C > kMaxSectionMatrixCells / R) throw Error("section matrix exceeds materialization limit");
  Matrix out(R, C);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const std::size_t nj = col_off[j + 1] - col_off[j];
    if (nj == 0) continue;
    const std::size_t dj = nj - 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m.has_entry(i, j)) continue;
      const auto& c = m.coeffs(i, j);
      const std::size_t ti = row_off[i + 1] - row_off[i] - 1;
      for (std::size_t e = 0; e <= dj; ++e)
        for (std::size_t k = 0; k < c.size(); ++k)
          if (sgn(c[k]) != 0) out(row_off[i] + (ti - (k + e)), col_off[j] + (dj - e)) = c[k];
    }
  }
  return out;
}

Matrix evaluate(const GradedMap& m, const Point& p) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.has_entry(i, j)) out(i, j) = m.entry(i, j)(p);
  return out;
}

std::size_t rank_at_point(const GradedMap& m, const Point& p) {
  if (sgn(p.s) == 0 && sgn(p.t) == 0) throw PreconditionError("rank_at_point: (0,0) is not a point of P^1");
  return rank(evaluate(m, p));
}

std::size_t generic_rank(const GradedMap& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  std::size_t best = 0;
  std::size_t tested = 0;
  for (long k = 0;; ++k) {
    best = std::max(best, rank_at_point(m, Point{Rational(k), Rational(1)}));
    ++tested;
    if (best == full) return best;
    // Every (best+1)-minor is a form of degree at most D; D + 1 distinct
    // zeros force it to vanish identically.
    const Integer D = top_sum(m.target(), best + 1) - bottom_sum(m.source(), best + 1);
    if (sgn(D) < 0 || Integer(static_cast<unsigned long>(tested)) >= D + 1) return best;
  }
}

// ----------------------------------------------------------- splittings

SplittingType splitting_from_profile(const Integer& n_start, const std::vector<Integer>& h0_values,
                                     std::size_t rank) {
  std::vector<Integer> degrees;
  Integer prev_h0 = 0, prev_delta = 0;
  for (std::size_t idx = 0; idx < h0_values.size(); ++idx) {
    const Integer delta = h0_values[idx] - prev_h0;
    if (delta < prev_delta || delta > static_cast<unsigned long>(rank))
      throw InternalError("profile not stabilized: difference profile is not monotone or exceeds the rank");
    const Integer n = n_start + static_cast<unsigned long>(idx);
    for (Integer c = prev_delta; c < delta; ++c) degrees.emplace_back(-n);
    prev_h0 = h0_values[idx];
    prev_delta = delta;
  }
  if (prev_delta != static_cast<unsigned long>(rank)) throw InternalError("profile not stabilized");
  return SplittingType(std::move(degrees));
}

SplittingType kernel_splitting(const GradedMap& m) {
  if (m.cols() == 0) return {};
  const std::size_t r = generic_rank(m);
  const std::size_t rk = m.cols() - r;
  if (rk == 0) return {};
  if (r == 0) return m.source();

  const Integer& max_s = m.source().max_degree();
  const Integer n_start = -max_s;
  // min k >= deg K - (rk - 1) max_s and deg K >= deg F - (top r target degrees).
  const Integer k_lower = m.source().degree() - top_sum(m.target(), r) - static_cast<unsigned long>(rk - 1) * max_s;
  const std::size_t margin = std::max<std::size_t>(m.cols(), 1);
  const ProfileWindow w = ProfileWindow::derive(m);
  const Integer n_cap = std::max(w.n_hi, Integer(-k_lower)) + static_cast<unsigned long>(margin);

  std::vector<Integer> h0;
  Integer prev = 0;
  std::size_t held = 0;
  for (Integer n = n_start;; ++n) {
    if (n > n_cap) throw InternalError("profile not stabilized");
    const Matrix sm = section_matrix(m, n);
    const Integer nul = static_cast<unsigned long>(sm.cols() - rank(sm));
    h0.push_back(nul);
    const Integer delta = nul - prev;
    prev = nul;
    if (delta == static_cast<unsigned long>(rk)) {
      if (++held >= margin) break;
    } else {
      held = 0;
    }
  }
  return splitting_from_profile(n_start, h0, rk);
}

SheafSummary cokernel_sheaf(const GradedMap& m) {
  if (m.rows() == 0) return {};
  if (m.cols() == 0) return SheafSummary(m.target());

  const SplittingType K = kernel_splitting(m);
  const SplittingType C = dual(kernel_splitting(transpose_dual(m)));

  Integer n_stab = -m.source().min_degree() - 1;
  if (!K.empty()) n_stab = std::max(n_stab, Integer(-K.min_degree() - 1));

  Integer len;
  for (int step = 0; step < 3; ++step) {
    const Integer n = n_stab + step;
    const Matrix sm = section_matrix(m, n);
    const Integer corank = static_cast<unsigned long>(sm.rows() - rank(sm));
    const Integer l = corank - h0(twist(C, n));
    if (sgn(l) < 0 || (step > 0 && l != len)) throw InternalError("profile not stabilized");
    len = l;
  }

  if (m.source().degree() - K.degree() != m.target().degree() - C.degree() - len ||
      m.cols() - K.rank() != m.rows() - C.rank())
    throw InternalError("conservation violated");
  return SheafSummary(C, len);
}

// --------------------------------------------------------- constructors

GradedMap random_general(const SplittingType& source, const SplittingType& target, std::uint64_t seed,
                         std::int64_t height) {
  if (height < 1) throw PreconditionError("random_general: height must be positive");
  GradedMap m(source, target);
  Rng rng(seed);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.has_entry(i, j)) continue;
      std::vector<Rational> c(m.coeffs(i, j).size());
      for (auto& x : c) x = Integer(rng.uniform(-height, height));
      m.set_entry(i, j, BinaryForm(c.size() - 1, c));
    }
  return m;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (!(f.target() == g.source())) throw PreconditionError("compose: shape/degree mismatch");
  GradedMap out(f.source(), g.target());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      if (!out.has_entry(i, j)) continue;
      std::vector<Rational> acc(out.coeffs(i, j).size());
      for (std::size_t k = 0; k < f.rows(); ++k) {
        if (!g.has_entry(i, k) || !f.has_entry(k, j)) continue;
        const auto& a = g.coeffs(i, k);
        const auto& b = f.coeffs(k, j);
        for (std::size_t x = 0; x < a.size(); ++x) {
          if (sgn(a[x]) == 0) continue;
          for (std::size_t y = 0; y < b.size(); ++y) acc[x + y] += a[x] * b[y];
        }
      }
      out.set_entry(i, j, BinaryForm(acc.size() - 1, acc));
    }
  return out;
}

GradedMap transpose_dual(const GradedMap& m) {
  GradedMap out(dual(m.target()), dual(m.source()));
  const std::size_t p = m.rows(), q = m.cols();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (m.has_entry(i, j)) out.set_entry(q - 1 - j, p - 1 - i, m.entry(i, j));
  return out;
}

GradedMap restrict_map(const GradedMap& m, const std::vector<std::size_t>& target_rows,
                       const std::vector<std::size_t>& source_cols) {
  std::vector<Integer> s, t;
  for (std::size_t j : source_cols) s.push_back(m.source().degrees().at(j));
  for (std::size_t i : target_rows) t.push_back(m.target().degrees().at(i));
  if (!std::is_sorted(source_cols.begin(), source_cols.end()) || !std::is_sorted(target_rows.begin(), target_rows.end()))
    throw PreconditionError("restrict_map: indices must be ascending");
  GradedMap out{SplittingType(std::move(s)), SplittingType(std::move(t))};
  for (std::size_t a = 0; a < target_rows.size(); ++a)
    for (std::size_t b = 0; b < source_cols.size(); ++b)
      if (m.has_entry(target_rows[a], source_cols[b])) out.set_entry(a, b, m.entry(target_rows[a], source_cols[b]));
  return out;
}

GradedMap stack_rows(const GradedMap& top, const GradedMap& bottom) {
  if (!(top.source() == bottom.source())) throw PreconditionError("stack_rows: sources differ");
  GradedMap out(top.source(), direct_sum(top.target(), bottom.target()));
  std::size_t a = 0, b = 0;
  for (std::size_t row = 0; row < out.rows(); ++row) {
    const bool take_top =
        b == bottom.rows() || (a < top.rows() && top.target().degrees()[a] >= bottom.target().degrees()[b]);
    const GradedMap& src = take_top ? top : bottom;
    const std::size_t i = take_top ? a++ : b++;
    for (std::size_t j = 0; j < out.cols(); ++j)
      if (src.has_entry(i, j)) out.set_entry(row, j, src.entry(i, j));
  }
  return out;
}

// ------------------------------------------------------------- functors

std::size_t SymBasis::index_of(const std::vector<std::size_t>& sorted_monomial) const {
  auto it = std::find(monomials.begin(), monomials.end(), sorted_monomial);
  if (it == monomials.end()) throw PreconditionError("SymBasis::index_of: not a basis monomial");
  return static_cast<std::size_t>(it - monomials.begin());
}

SymBasis sym_basis(std::size_t n, const SplittingType& a) { return make_basis(n, a, true); }

SymBasis wedge_basis(std::size_t k, const SplittingType& a) { return make_basis(k, a, false); }

std::vector<Rational> sym2_product(const SymBasis& basis, const std::vector<Rational>& x,
                                   const std::vector<Rational>& y) {
  if (basis.n != 2) throw PreconditionError("sym2_product: basis is not of S^2");
  if (x.size() != y.size()) throw PreconditionError("sym2_product: length mismatch");
  std::vector<Rational> out(basis.monomials.size());
  for (std::size_t k = 0; k < basis.monomials.size(); ++k) {
    const std::size_t i = basis.monomials[k][0], j = basis.monomials[k][1];
    out[k] = i == j ? Rational(x[i] * y[i]) : Rational(x[i] * y[j] + x[j] * y[i]);
  }
  return out;
}

GradedMap sym2_map(const GradedMap& f) {
  const SymBasis S = sym_basis(2, f.source());
  const SymBasis T = sym_basis(2, f.target());
  GradedMap out(S.type, T.type);
  auto term = [&](std::size_t a, std::size_t p, std::size_t b, std::size_t q, std::vector<Rational>& acc) {
    if (!f.has_entry(a, p) || !f.has_entry(b, q)) return;
    const auto& u = f.coeffs(a, p);
    const auto& v = f.coeffs(b, q);
    for (std::size_t x = 0; x < u.size(); ++x) {
      if (sgn(u[x]) == 0) continue;
      for (std::size_t y = 0; y < v.size(); ++y) acc[x + y] += u[x] * v[y];
    }
  };
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) {
      if (!out.has_entry(r, c)) continue;
      const std::size_t i = T.monomials[r][0], j = T.monomials[r][1];
      const std::size_t p = S.monomials[c][0], q = S.monomials[c][1];
      std::vector<Rational> acc(out.coeffs(r, c).size());
      term(i, p, j, q, acc);
      if (i != j) term(j, p, i, q, acc);
      out.set_entry(r, c, BinaryForm(acc.size() - 1, acc));
    }
  return out;
}

GradedMap c_map(const SplittingType& v1) {
  if (v1.rank() != 3) throw PreconditionError("c_map: V1 must have rank 3");
  const SymBasis W = wedge_basis(2, v1);
  const SymBasis S2W = sym_basis(2, W.type);
  const SymBasis Q = sym_basis(2, v1);
  const SymBasis S2Q = sym_basis(2, Q.type);
  GradedMap out(S2W.type, S2Q.type);
  auto q = [&](std::size_t x, std::size_t y) { return Q.index_of({std::min(x, y), std::max(x, y)}); };
  auto qq = [&](std::size_t x, std::size_t y) { return S2Q.index_of({std::min(x, y), std::max(x, y)}); };
  for (std::size_t c = 0; c < S2W.monomials.size(); ++c) {
    const auto& ab = W.monomials[S2W.monomials[c][0]];
    const auto& cd = W.monomials[S2W.monomials[c][1]];
    const std::size_t a = ab[0], b = ab[1], cc = cd[0], d = cd[1];
    out.add_to_entry(qq(q(a, cc), q(b, d)), c, BinaryForm(0, {Rational(1)}));
    out.add_to_entry(qq(q(a, d), q(b, cc)), c, BinaryForm(0, {Rational(-1)}));
  }
  return out;
}

GradedMap multiplication_map(const SplittingType& v1, std::size_t p, const GradedMap& ell) {
  if (ell.cols() != 1) throw PreconditionError("multiplication_map: ell must have a line bundle source");
  std::size_t q = 0;
  while (!(sym(q, v1) == ell.target())) {
    if (++q > 64 || sym(q, v1).rank() > ell.rows())
      throw PreconditionError("multiplication_map: ell target is not a symmetric power of V1");
  }
  const SymBasis P = sym_basis(p, v1);
  const SymBasis Qb = sym_basis(q, v1);
  const SymBasis T = sym_basis(p + q, v1);
  GradedMap out(twist(P.type, ell.source().degrees()[0]), T.type);
  for (std::size_t a = 0; a < P.monomials.size(); ++a)
    for (std::size_t b = 0; b < Qb.monomials.size(); ++b) {
      if (!ell.has_entry(b, 0)) continue;
      std::vector<std::size_t> merged = P.monomials[a];
      merged.insert(merged.end(), Qb.monomials[b].begin(), Qb.monomials[b].end());
      std::sort(merged.begin(), merged.end());
      out.add_to_entry(T.index_of(merged), a, ell.entry(b, 0));
    }
  return out;
}

SplittingType sym2_root_rank3(const SplittingType& s2) {
  if (s2.rank() != 6) throw PreconditionError("sym2_root_rank3: expected a rank-6 symmetric square");
  const Integer& hi = s2.max_degree();
  const Integer& lo = s2.min_degree();
  const Integer total = s2.degree();
  if (!mpz_even_p(hi.get_mpz_t()) || !mpz_even_p(lo.get_mpz_t()) || !mpz_divisible_ui_p(total.get_mpz_t(), 4))
    throw PreconditionError("sym2_root_rank3: not a symmetric square of a rank-3 type");
  const Integer a0 = hi / 2, a2 = lo / 2;
  const Integer a1 = total / 4 - a0 - a2;
  SplittingType v1(std::vector<Integer>{a0, a1, a2});
  if (!(sym(2, v1) == s2)) throw PreconditionError("sym2_root_rank3: not a symmetric square of a rank-3 type");
  return v1;
}

bool cd_check(const GradedMap& sigma2, const std::vector<Rational>& j_vector, const Point& b) {
  const SplittingType v1 = sym2_root_rank3(sigma2.source());
  const SymBasis T = sym_basis(2, sigma2.target());
  if (j_vector.size() != T.monomials.size()) throw PreconditionError("cd_check: j_vector has the wrong length");

  const Matrix comp = evaluate(compose(sym2_map(sigma2), c_map(v1)), b);
  if (rank(comp) != 6) throw PreconditionError("fiber model degenerate");

  std::vector<std::vector<Rational>> span;
  for (std::size_t c = 0; c < comp.cols(); ++c) span.push_back(comp.column(c));
  const Matrix s = evaluate(sigma2, b);
  const std::size_t r2 = sigma2.rows();
  for (std::size_t c = 0; c < s.cols(); ++c) {
    const std::vector<Rational> h = s.column(c);
    for (std::size_t i = 0; i < r2; ++i) {
      std::vector<Rational> e(r2);
      e[i] = 1;
      span.push_back(sym2_product(T, e, h));
    }
  }
  const std::size_t dim = T.monomials.size();
  const std::size_t base = span_rank(span, dim);
  span.push_back(j_vector);
  return span_rank(span, dim) == base + 1;
}

}  // namespace p1
