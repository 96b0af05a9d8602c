#pragma once

// Resultants, discriminants and root counting for binary forms, and the rank
// of point conditions on bihomogeneous forms.
//
// A binary form f of degree d is read as the univariate polynomial
// f(x, 1) = c_0 + c_1 x + ... + c_d x^d of declared degree d.
//
// Conventions:
//   resultant(f, g) = det Sylvester(f, g), f rows first, highest coefficient
//   first, so resultant(x - a, x - b) = a - b.
//   disc(f) = (-1)^(d(d-1)/2) * resultant(f, f') / c_d.
// With these, disc(x^4 + a x + b) = 256 b^3 - 27 a^4.

#include <cstdint>
#include <utility>
#include <vector>

#include "p1/binary_form.hpp"
#include "p1/random.hpp"

namespace p1 {

/// Sylvester resultant at the declared degrees. Both degrees must be >= 1.
Rational resultant(const BinaryForm& f, const BinaryForm& g);

/// d/dx of f(x, 1), as a form of degree d - 1. Requires d >= 1.
BinaryForm x_derivative(const BinaryForm& f);

/// Discriminant; requires degree >= 2 and c_d != 0.
Rational discriminant(const BinaryForm& f);

/// x^4 + a x + b as a binary form.
BinaryForm depressed_quartic(const Rational& a, const Rational& b);

struct DiscriminantFit {
  Rational u;
  bool verified = false;
  std::size_t samples = 0;
};

/// Fits disc(x^4 + a x + b) = u (256 b^3 - 27 a^4) over `trials` seeded
/// rational samples. Requires trials >= 6. Throws p1::Error("identity
/// refuted") if two samples disagree on u.
DiscriminantFit quartic_discriminant_identity(std::size_t trials, std::uint64_t seed);

/// Number of distinct roots on P^1, counting the root at infinity (t = 0).
/// Rejects the zero form.
std::size_t distinct_root_count(const BinaryForm& f);

/// Form with integer coefficients drawn uniformly from [-height, height].
BinaryForm random_form(std::size_t degree, Rng& rng, std::int64_t height);

/// 256 beta^3 - 27 alpha^4 for alpha of degree 3 and beta of degree 4.
BinaryForm critical_value_form(const BinaryForm& alpha, const BinaryForm& beta);

/// Rank of evaluating the monomial basis of bidegree (d1, d2) forms at the
/// given points of P^1 x P^1. Points must be pairwise distinct.
std::size_t point_condition_rank(std::size_t d1, std::size_t d2, const std::vector<std::pair<Point, Point>>& points);

/// `count` pairwise distinct points of P^1 x P^1 with integer coordinates in
/// [-height, height].
std::vector<std::pair<Point, Point>> random_point_pairs(std::size_t count, Rng& rng, std::int64_t height);

}  // namespace p1
