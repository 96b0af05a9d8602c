#pragma once

// Morphisms between split bundles on P^1 as matrices of binary forms.
//
// A GradedMap F = (+)_j O(s_j) -> G = (+)_i O(t_i) stores, for each entry
// (i, j), a homogeneous form of degree t_i - s_j (zero when that is
// negative). Source and target are canonical SplittingTypes, so summand
// indices follow the non-increasing degree order.

#include <cstdint>
#include <vector>

#include "p1/binary_form.hpp"
#include "p1/linalg.hpp"
#include "p1/splitting.hpp"

namespace p1 {

class GradedMap {
 public:
  /// The zero map.
  GradedMap(SplittingType source, SplittingType target);

  static GradedMap identity(const SplittingType& a);

  const SplittingType& source() const noexcept { return source_; }
  const SplittingType& target() const noexcept { return target_; }
  std::size_t rows() const noexcept { return target_.rank(); }
  std::size_t cols() const noexcept { return source_.rank(); }

  /// t_i - s_j.
  Integer entry_degree(std::size_t i, std::size_t j) const;
  /// Whether entry (i, j) can be nonzero (t_i - s_j >= 0).
  bool has_entry(std::size_t i, std::size_t j) const { return !entries_[i * cols() + j].empty(); }
  /// Entry (i, j). Precondition: has_entry(i, j).
  BinaryForm entry(std::size_t i, std::size_t j) const;
  const std::vector<Rational>& coeffs(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }

  /// Replaces entry (i, j); its degree must be exactly t_i - s_j.
  void set_entry(std::size_t i, std::size_t j, const BinaryForm& f);
  /// Adds f to entry (i, j) under the same degree rule.
  void add_to_entry(std::size_t i, std::size_t j, const BinaryForm& f);

  bool is_zero() const;

  friend bool operator==(const GradedMap&, const GradedMap&) = default;

 private:
  SplittingType source_, target_;
  std::vector<std::vector<Rational>> entries_;  // row-major; empty when degree < 0
};

/// Twist range scanned when reading splitting types off section dimensions.
struct ProfileWindow {
  Integer n_lo, n_hi;

  /// [-M - rank(source) - 2, M + rank(source) + 2], M the largest absolute
  /// degree among source and target.
  static ProfileWindow derive(const GradedMap& m);
};

/// Matrix of H^0(F(n)) -> H^0(G(n)) in monomial bases ordered by summand,
/// then by descending s-exponent.
Matrix section_matrix(const GradedMap& m, const Integer& n);

/// Scalar matrix of m at a point.
Matrix evaluate(const GradedMap& m, const Point& p);

/// Rank of m at p. Rejects p = (0, 0).
std::size_t rank_at_point(const GradedMap& m, const Point& p);

/// Rank at the generic point, certified: every minor one size larger is a
/// binary form of bounded degree, and enough distinct points are tested to
/// prove it vanishes identically.
std::size_t generic_rank(const GradedMap& m);

/// Recovers a splitting type K from h0(K(n)) for n = n_start, n_start + 1, ...
/// given that h0(K(n_start - 1)) = 0 and rank(K) = rank. Throws InternalError
/// ("profile not stabilized") if the first differences never reach `rank`,
/// or are not monotone.
SplittingType splitting_from_profile(const Integer& n_start, const std::vector<Integer>& h0_values, std::size_t rank);

/// Splitting type of ker m.
SplittingType kernel_splitting(const GradedMap& m);

/// Cokernel as bundle part plus torsion length.
SheafSummary cokernel_sheaf(const GradedMap& m);

/// Entries with integer coefficients uniform in [-height, height], drawn from
/// Rng(seed) row by row, column by column, lowest coefficient first.
GradedMap random_general(const SplittingType& source, const SplittingType& target, std::uint64_t seed,
                         std::int64_t height = 10);

/// g o f. Requires f.target() == g.source().
GradedMap compose(const GradedMap& g, const GradedMap& f);

/// The transpose G^v -> F^v.
GradedMap transpose_dual(const GradedMap& m);

/// Restriction to the given target rows and source columns (each ascending).
GradedMap restrict_map(const GradedMap& m, const std::vector<std::size_t>& target_rows,
                       const std::vector<std::size_t>& source_cols);

/// F -> G1 (+) G2 from F -> G1 and F -> G2. Rows of `top` come first among
/// target summands of equal degree.
GradedMap stack_rows(const GradedMap& top, const GradedMap& bottom);

/// Monomial basis of S^n of a split bundle: index multisets of length n,
/// ordered to match the canonical order of sym(n, a).
struct SymBasis {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> monomials;
  SplittingType type;

  std::size_t index_of(const std::vector<std::size_t>& sorted_monomial) const;
};

SymBasis sym_basis(std::size_t n, const SplittingType& a);

/// Same for the exterior power: strictly increasing index tuples.
SymBasis wedge_basis(std::size_t k, const SplittingType& a);

/// Product x * y in S^2 of a space with basis e_0..e_{r-1}, in the
/// coordinates of `basis` (which must have n = 2).
std::vector<Rational> sym2_product(const SymBasis& basis, const std::vector<Rational>& x,
                                   const std::vector<Rational>& y);

/// S^2(f): S^2 F -> S^2 G.
GradedMap sym2_map(const GradedMap& f);

/// S^2(Wedge^2 V1) -> S^2(S^2 V1), (a^b)(c^d) |-> (ac)(bd) - (ad)(bc).
/// Requires rank(v1) = 3.
GradedMap c_map(const SplittingType& v1);

/// Multiplication by a section: given ell: L -> S^q V1, the map
/// S^p V1 (x) L -> S^(p+q) V1.
GradedMap multiplication_map(const SplittingType& v1, std::size_t p, const GradedMap& ell);

/// V1 from S^2 V1 for rank-3 V1. Throws PreconditionError if `s2` is not of
/// that form.
SplittingType sym2_root_rank3(const SplittingType& s2);

/// Pointwise transversality test at b. With C the image of S^2(sigma2) o c
/// at b and A the span of products v * sigma2(b)(q) in S^2 V2(b), returns
/// true iff j_vector is not in C + A. j_vector is given in the coordinates of
/// sym_basis(2, sigma2.target()). Requires S^2(sigma2) o c to have rank 6 at
/// b ("fiber model degenerate" otherwise).
bool cd_check(const GradedMap& sigma2, const std::vector<Rational>& j_vector, const Point& b);

}  // namespace p1
