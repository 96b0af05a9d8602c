#include "doctest.h"
#include "p1/error.hpp"
#include "p1/forms.hpp"
#include "p1/linalg.hpp"

using namespace p1;

namespace {

// c * prod (x - r_i) as a form of degree roots.size(), lowest coefficient first.
BinaryForm from_roots(const Rational& c, const std::vector<Rational>& roots) {
  std::vector<Rational> p{c};
  for (const auto& r : roots) {
    std::vector<Rational> q(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += p[k];
      q[k] -= r * p[k];
    }
    p = std::move(q);
  }
  return BinaryForm(roots.size(), p);
}

}  // namespace

TEST_CASE("exact linear algebra") {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(a) == 2);
  CHECK(nullity(a) == 1);
  CHECK(determinant(a) == 0);
  const Matrix b = Matrix::from_rows({{Rational(1, 2), 1}, {3, Rational(-1, 3)}}, 2);
  CHECK(determinant(b) == Rational(-1, 6) - 3);
  CHECK(rank(b) == 2);
  CHECK(rank(Matrix(0, 4)) == 0);
  // Full rank over Q but singular modulo 2^31 - 1.
  const Integer p = (Integer(1) << 31) - 1;
  const Matrix c = Matrix::from_rows({{Rational(p), 0}, {0, 1}}, 2);
  CHECK(rank(c) == 2);
}

TEST_CASE("resultant") {
  CHECK(resultant(BinaryForm(2, {-1, 0, 1}), BinaryForm(1, {-1, 1})) == 0);
  CHECK(resultant(BinaryForm(1, {-3, 1}), BinaryForm(1, {-7, 1})) == 3 - 7);
  // disc(x^4 + x + 1) = 256 - 27, and disc = Res(f, f') for a monic quartic.
  CHECK(resultant(BinaryForm(4, {1, 1, 0, 0, 1}), BinaryForm(3, {1, 0, 0, 4})) == 229);
  CHECK_THROWS_AS(resultant(BinaryForm(0, {1}), BinaryForm(1, {0, 1})), PreconditionError);
}

TEST_CASE("resultant agrees with the root product formula") {
  const std::vector<Rational> ra{1, -2, Rational(1, 3)}, rb{4, 0};
  const Rational ca = 2, cb = -5;
  Rational prod = 1;
  for (const auto& x : ra)
    for (const auto& y : rb) prod *= x - y;
  // lc_f^deg g * lc_g^deg f * prod (a_i - b_j)
  const Rational want = ca * ca * cb * cb * cb * prod;
  CHECK(resultant(from_roots(ca, ra), from_roots(cb, rb)) == want);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(depressed_quartic(0, 1)) == 256);
  CHECK(discriminant(depressed_quartic(1, 0)) == -27);
  const std::vector<Rational> r{2, -1, 5, Rational(1, 2)};
  Rational want = 1;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) want *= (r[i] - r[j]) * (r[i] - r[j]);
  const Rational c = 3;
  CHECK(discriminant(from_roots(c, r)) == want * c * c * c * c * c * c);
}

TEST_CASE("quartic discriminant identity") {
  const DiscriminantFit fit = quartic_discriminant_identity(8, 1);
  CHECK(fit.u == 1);
  CHECK(fit.verified);
  CHECK(fit.samples == 8);
  CHECK_THROWS_AS(quartic_discriminant_identity(5, 1), PreconditionError);
}

TEST_CASE("distinct roots") {
  // (s t)^2 and s^12.
  CHECK(distinct_root_count(BinaryForm(4, {0, 0, 1, 0, 0})) == 2);
  CHECK(distinct_root_count(BinaryForm::monomial(12, 12)) == 1);
  CHECK(distinct_root_count(BinaryForm::monomial(12, 0)) == 1);
  CHECK(distinct_root_count(from_roots(1, {1, 1, 2, 3, 3, 3})) == 3);
  CHECK(distinct_root_count(BinaryForm(3, {0, 1, -1, 0})) == 3);
  CHECK_THROWS_AS(distinct_root_count(BinaryForm::zero(3)), PreconditionError);
}

TEST_CASE("critical value form has twelve distinct roots for a general pair") {
  Rng ra(2), rb(3);
  const BinaryForm f = critical_value_form(random_form(3, ra, 10), random_form(4, rb, 10));
  CHECK(f.degree() == 12);
  CHECK(distinct_root_count(f) == 12);
}

TEST_CASE("point conditions") {
  Rng rng(4);
  CHECK(point_condition_rank(2, 2, random_point_pairs(8, rng, 50)) == 8);
  CHECK(point_condition_rank(2, 2, {}) == 0);
  std::vector<std::pair<Point, Point>> line;
  for (int k = 0; k < 8; ++k) line.push_back({Point{1, 2}, Point{k, 1}});
  CHECK(point_condition_rank(2, 2, line) == 3);
  CHECK_THROWS_AS(point_condition_rank(2, 2, {{Point{0, 0}, Point{1, 1}}}), PreconditionError);
  CHECK_THROWS_AS(point_condition_rank(2, 2, {{Point{1, 1}, Point{1, 2}}, {Point{2, 2}, Point{2, 4}}}),
                  PreconditionError);
}

TEST_CASE("bihomogeneous evaluation") {
  BiForm g(1, 2);
  g.at(1, 2) = 3;  // 3 s u^2
  CHECK(g(Point{2, 5}, Point{1, 7}) == 6);
}
