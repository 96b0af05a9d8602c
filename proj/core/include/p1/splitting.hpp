#pragma once

// Splitting types of vector bundles on P^1 and numerical classes of coherent
// sheaves. Every bundle on P^1 is a direct sum of line bundles O(a), so all
// of the multilinear algebra below is arithmetic on multisets of degrees.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "p1/numeric.hpp"

namespace p1 {

/// Multiset of degrees {a_i} standing for the bundle (+)_i O(a_i).
///
/// Degrees are kept sorted non-increasing, so equality is multiset equality.
/// The empty list is the zero bundle.
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<Integer> degrees);
  SplittingType(std::initializer_list<long> degrees);

  static SplittingType line(const Integer& d) { return SplittingType({Integer(d)}); }
  static SplittingType repeated(const Integer& d, std::size_t multiplicity);

  const std::vector<Integer>& degrees() const noexcept { return degrees_; }
  std::size_t rank() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }
  Integer degree() const;

  /// Largest / smallest summand degree. Precondition: rank >= 1.
  const Integer& max_degree() const;
  const Integer& min_degree() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<Integer> degrees_;
};

/// Numerical class of a coherent sheaf on P^1: locally free part plus the
/// total length of its torsion subsheaf (support points are not tracked).
class SheafSummary {
 public:
  SheafSummary() = default;
  SheafSummary(SplittingType bundle, Integer torsion_length = 0);
  static SheafSummary torsion(const Integer& length) { return SheafSummary({}, length); }

  const SplittingType& bundle() const noexcept { return bundle_; }
  const Integer& torsion_length() const noexcept { return torsion_length_; }
  std::size_t rank() const noexcept { return bundle_.rank(); }
  /// Degree as a sheaf: bundle degree plus torsion length.
  Integer degree() const { return bundle_.degree() + torsion_length_; }
  bool torsion_free() const { return sgn(torsion_length_) == 0; }

  friend bool operator==(const SheafSummary&, const SheafSummary&) = default;

 private:
  SplittingType bundle_;
  Integer torsion_length_ = 0;
};

/// Upper bound on the rank of any bundle the functors below will materialize.
inline constexpr std::size_t kMaxMaterializedRank = std::size_t{1} << 22;

SplittingType direct_sum(const SplittingType& a, const SplittingType& b);
SplittingType tensor(const SplittingType& a, const SplittingType& b);
SplittingType dual(const SplittingType& a);
SplittingType twist(const SplittingType& a, const Integer& d);
/// n-th symmetric power. sym(0, a) = [0]; sym(n, []) = [] for n >= 1.
SplittingType sym(std::size_t n, const SplittingType& a);
/// k-th exterior power. wedge(0, a) = [0]; k > rank gives [].
SplittingType wedge(std::size_t k, const SplittingType& a);
/// Determinant line bundle [deg a]; det([]) = [0].
SplittingType det(const SplittingType& a);

Integer h0(const SheafSummary& s);
Integer h1(const SheafSummary& s);
/// Euler characteristic; Riemann-Roch on P^1 gives deg + rank + torsion.
Integer chi(const SheafSummary& s);

Integer h0(const SplittingType& a);
Integer h1(const SplittingType& a);
Integer chi(const SplittingType& a);

/// dim Hom(a, b) = h0(a^v (x) b).
Integer hom_dim(const SplittingType& a, const SplittingType& b);
/// dim Aut(a) = dim End(a). Rejects the zero bundle.
Integer aut_dim(const SplittingType& a);
/// dim Aut(P(a)/P^1) = dim Aut(a) - 1. Rejects the zero bundle.
Integer rel_aut_dim(const SplittingType& a);

/// dim Ext^1(O_tau, e) for a divisor tau of degree tau_degree, computed from
/// 0 -> O(-tau) -> O -> O_tau -> 0 as h0(e(tau)) - h0(e) and cross-checked
/// against the local count rank(e) * tau_degree.
///
/// Requires h1(e) = h1(e(tau)) = 0; otherwise throws PreconditionError
/// ("long-exact-sequence regime not satisfied").
Integer ext1_from_torsion(const Integer& tau_degree, const SplittingType& e);

std::string to_string(const SplittingType& a);
std::ostream& operator<<(std::ostream& os, const SplittingType& a);
std::ostream& operator<<(std::ostream& os, const SheafSummary& s);

}  // namespace p1
