// Randomized property suites. Every suite runs at least kCases cases drawn
// from fixed seeds, so failures reproduce.

#include "doctest.h"
#include "oracle.hpp"
#include "p1/bundle_expr.hpp"
#include "p1/error.hpp"
#include "p1/forms.hpp"
#include "p1/graded_map.hpp"
#include "p1/random.hpp"

using namespace p1;
namespace e = p1::expr;

namespace {

constexpr int kCases = 1000;

SplittingType random_type(Rng& rng, std::size_t max_rank, long lo, long hi) {
  const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_rank)));
  std::vector<Integer> d;
  for (std::size_t i = 0; i < r; ++i) d.push_back(Integer(rng.uniform(lo, hi)));
  return SplittingType(d);
}

SplittingType random_nonzero_type(Rng& rng, std::size_t max_rank, long lo, long hi) {
  for (;;) {
    SplittingType a = random_type(rng, max_rank, lo, hi);
    if (!a.empty()) return a;
  }
}

SheafSummary random_summary(Rng& rng) {
  return SheafSummary(random_type(rng, 5, -8, 8), Integer(rng.uniform(0, 4)));
}

bool sorted_desc(const SplittingType& a) {
  return std::is_sorted(a.degrees().begin(), a.degrees().end(), std::greater<>());
}

e::NodePtr random_tree(Rng& rng, int depth) {
  const int kind = depth <= 0 ? static_cast<int>(rng.uniform(0, 3)) : static_cast<int>(rng.uniform(0, 12));
  auto sub = [&] { return random_tree(rng, depth - 1); };
  switch (kind) {
    case 0: return e::line(Integer(rng.uniform(-6, 6)));
    case 1: return e::torsion(Integer(rng.uniform(0, 4)));
    case 2: return rng.uniform(0, 1) ? e::var("V" + std::to_string(rng.uniform(0, 3))) : e::zero();
    case 3: return e::sum(sub(), sub());
    case 4: return e::tensor(sub(), sub());
    case 5: return e::sym(static_cast<std::size_t>(rng.uniform(0, 3)), sub());
    case 6: return e::wedge(static_cast<std::size_t>(rng.uniform(0, 3)), sub());
    case 7: return e::dual(sub());
    case 8: return e::det(sub());
    case 9: return e::twist(sub(), Integer(rng.uniform(-5, 5)));
    case 10: return e::power(sub(), static_cast<std::size_t>(rng.uniform(0, 3)));
    default: return e::tensor_power(sub(), Integer(rng.uniform(-2, 2)));
  }
}

}  // namespace

TEST_CASE("functor rank and degree laws") {
  Rng rng(101);
  for (int c = 0; c < kCases; ++c) {
    const SplittingType a = random_type(rng, 4, -6, 6), b = random_type(rng, 4, -6, 6);
    const Integer ra = a.rank(), rb = b.rank();
    const SplittingType s = direct_sum(a, b);
    CHECK(s.rank() == a.rank() + b.rank());
    CHECK(s.degree() == a.degree() + b.degree());
    CHECK(sorted_desc(s));
    CHECK(direct_sum(a, b) == direct_sum(b, a));

    const SplittingType t = tensor(a, b);
    CHECK(Integer(t.rank()) == ra * rb);
    CHECK(t.degree() == a.degree() * rb + b.degree() * ra);
    CHECK(sorted_desc(t));
    CHECK(dual(dual(a)) == a);
    CHECK(dual(tensor(a, b)) == tensor(dual(a), dual(b)));

    const auto n = static_cast<std::size_t>(rng.uniform(0, 4));
    const SplittingType sn = sym(n, a);
    CHECK(sorted_desc(sn));
    if (!a.empty()) {
      const long r = static_cast<long>(a.rank());
      const Integer count = binomial(r + static_cast<long>(n) - 1, static_cast<long>(n));
      CHECK(Integer(sn.rank()) == count);
      CHECK(sn.degree() * r == Integer(static_cast<long>(n)) * count * a.degree());
    }
    const auto k = static_cast<std::size_t>(rng.uniform(0, 5));
    const SplittingType wk = wedge(k, a);
    const long r = static_cast<long>(a.rank());
    CHECK(Integer(wk.rank()) == binomial(r, static_cast<long>(k)));
    if (k >= 1) CHECK(wk.degree() == binomial(r - 1, static_cast<long>(k) - 1) * a.degree());
    if (!a.empty()) CHECK(det(a) == wedge(a.rank(), a));
  }
}

TEST_CASE("Riemann-Roch") {
  Rng rng(102);
  for (int c = 0; c < kCases; ++c) {
    const SheafSummary s = random_summary(rng);
    CHECK(chi(s) == s.bundle().degree() + Integer(s.rank()) + s.torsion_length());
    CHECK(h0(s) - h1(s) == chi(s));
    CHECK(h0(s) == oracle::bundle_h0(s.bundle()) + s.torsion_length());
    CHECK(h0(s) >= 0);
    CHECK(h1(s) >= 0);
  }
}

TEST_CASE("Serre duality") {
  Rng rng(103);
  for (int c = 0; c < kCases; ++c) {
    const SplittingType a = random_type(rng, 6, -10, 10);
    CHECK(h1(a) == h0(twist(dual(a), -2)));
    CHECK(h0(a) == h1(twist(dual(a), -2)));
  }
}

TEST_CASE("automorphism and Ext counts") {
  Rng rng(104);
  for (int c = 0; c < kCases; ++c) {
    const SplittingType a = random_nonzero_type(rng, 4, -5, 5);
    const Integer d = rng.uniform(-20, 20);
    CHECK(rel_aut_dim(twist(a, d)) == rel_aut_dim(a));
    CHECK(aut_dim(a) == hom_dim(a, a));
    const Integer tau = rng.uniform(1, 4);
    const SplittingType e = twist(a, 6);  // every summand has h1 = 0
    CHECK(ext1_from_torsion(tau, e) == Integer(e.rank()) * tau);
  }
}

TEST_CASE("section nullity matches the kernel splitting") {
  Rng rng(105);
  for (int c = 0; c < kCases; ++c) {
    const SplittingType src = random_nonzero_type(rng, 3, -2, 4);
    const SplittingType tgt = random_type(rng, 3, -2, 5);
    const GradedMap m = random_general(src, tgt, rng.next(), rng.uniform(1, 3));
    const SplittingType k = kernel_splitting(m);
    const ProfileWindow w = ProfileWindow::derive(m);
    for (Integer n = w.n_lo; n <= w.n_hi; ++n) {
      INFO("case " << c << " n " << n);
      CHECK(Integer(nullity(section_matrix(m, n))) == h0(twist(k, n)));
    }
  }
}

TEST_CASE("kernel and cokernel conservation") {
  Rng rng(106);
  for (int c = 0; c < kCases; ++c) {
    const SplittingType src = random_type(rng, 3, -2, 4);
    const SplittingType tgt = random_type(rng, 3, -2, 5);
    GradedMap m = random_general(src, tgt, rng.next(), rng.uniform(1, 4));
    // Occasionally a degenerate map: keep only one column.
    if (rng.uniform(0, 4) == 0 && m.cols() > 1) m = restrict_map(m, [&] {
          std::vector<std::size_t> rows(m.rows());
          for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
          return rows;
        }(), {0});
    const SplittingType k = kernel_splitting(m);
    const SheafSummary q = cokernel_sheaf(m);
    CHECK(m.source().degree() - k.degree() == m.target().degree() - q.bundle().degree() - q.torsion_length());
    CHECK(m.source().rank() - k.rank() == m.target().rank() - q.rank());
    CHECK(generic_rank(m) == m.source().rank() - k.rank());
  }
}

TEST_CASE("pointwise rank is bounded by the generic rank") {
  Rng rng(107);
  for (int c = 0; c < kCases; ++c) {
    const SplittingType src = random_nonzero_type(rng, 3, -1, 3);
    const SplittingType tgt = random_nonzero_type(rng, 3, -1, 4);
    const GradedMap m = random_general(src, tgt, rng.next());
    const std::size_t g = generic_rank(m);
    CHECK(g <= std::min(m.rows(), m.cols()));
    int agree = 0;
    for (int p = 0; p < 10; ++p) {
      const Point pt{Rational(Integer(rng.uniform(-1000, 1000))), Rational(Integer(rng.uniform(1, 1000)))};
      const std::size_t r = rank_at_point(m, pt);
      CHECK(r <= g);
      agree += r == g;
    }
    CHECK(agree >= 8);
  }
}

TEST_CASE("profile recovery round trip") {
  Rng rng(108);
  for (int c = 0; c < kCases; ++c) {
    const SplittingType k = random_nonzero_type(rng, 5, -6, 6);
    const Integer start = -k.max_degree();
    std::vector<Integer> h;
    for (Integer n = start; n <= -k.min_degree() + 3; ++n) h.push_back(h0(twist(k, n)));
    CHECK(splitting_from_profile(start, h, k.rank()) == k);
  }
}

TEST_CASE("format and parse round trip") {
  Rng rng(109);
  for (int c = 0; c < kCases; ++c) {
    const SheafSummary s = random_summary(rng);
    CHECK(e::eval(e::format(s)) == s);
  }
}

TEST_CASE("render and parse round trip") {
  Rng rng(110);
  for (int c = 0; c < kCases; ++c) {
    const e::BundleExpr t(random_tree(rng, 4));
    CHECK(e::parse(e::render(t)) == t);
  }
}

TEST_CASE("unused bindings do not change results") {
  Rng rng(111);
  for (int c = 0; c < kCases; ++c) {
    e::Environment small{{"V0", SheafSummary(random_type(rng, 2, -2, 2))}};
    e::Environment big{{"V0", small.lookup("V0")}, {"Unused", random_summary(rng)}};
    const e::BundleExpr t(random_tree(rng, 2));
    bool uses_other = false;
    std::string text = e::render(t);
    for (const char* v : {"V1", "V2", "V3"}) uses_other = uses_other || text.find(v) != std::string::npos;
    if (uses_other) continue;
    try {
      const SheafSummary a = e::eval(t, small);
      CHECK(e::eval(t, big) == a);
    } catch (const EvalError&) {
      CHECK_THROWS_AS(e::eval(t, big), EvalError);
    }
  }
}

TEST_CASE("parser never crashes on arbitrary input") {
  Rng rng(112);
  const std::string alphabet = "O()T+*^-0123456789SymWedgeDualDetTwist _xyzV\t\n\x01\xff,.";
  for (int c = 0; c < 5 * kCases; ++c) {
    std::string s;
    const auto len = rng.uniform(0, 40);
    for (int i = 0; i < len; ++i) {
      if (rng.uniform(0, 9) == 0)
        s.push_back(static_cast<char>(rng.uniform(0, 255)));
      else
        s.push_back(alphabet[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(alphabet.size()) - 1))]);
    }
    try {
      const auto t = e::parse(s);
      try {
        (void)e::eval(t);
      } catch (const Error&) {
      }
    } catch (const ParseError& err) {
      CHECK(err.offset() <= s.size());
    }
  }
}

TEST_CASE("resultant laws") {
  Rng rng(113);
  for (int c = 0; c < kCases; ++c) {
    const auto m = static_cast<std::size_t>(rng.uniform(1, 3)), n = static_cast<std::size_t>(rng.uniform(1, 3)),
               k = static_cast<std::size_t>(rng.uniform(1, 2));
    const BinaryForm f = random_form(m, rng, 5), g = random_form(n, rng, 5), h = random_form(k, rng, 5);
    const Rational sign = (m * n) % 2 ? -1 : 1;
    CHECK(resultant(f, g) == sign * resultant(g, f));
    CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
  }
}

TEST_CASE("distinct roots are subadditive") {
  Rng rng(114);
  for (int c = 0; c < kCases; ++c) {
    const BinaryForm f = random_form(static_cast<std::size_t>(rng.uniform(1, 4)), rng, 3);
    const BinaryForm g = random_form(static_cast<std::size_t>(rng.uniform(1, 4)), rng, 3);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(distinct_root_count(f * g) <= distinct_root_count(f) + distinct_root_count(g));
    // x - a and x - b with a != b are coprime.
    const auto a = rng.uniform(-9, 9), b = rng.uniform(-9, 9);
    const BinaryForm la(1, {Rational(-a), 1}), lb(1, {Rational(-b), 1});
    if (a != b) CHECK(distinct_root_count(la * lb) == 2);
  }
}

TEST_CASE("point conditions are monotone") {
  Rng rng(115);
  for (int c = 0; c < kCases; ++c) {
    const auto pts = random_point_pairs(static_cast<std::size_t>(rng.uniform(1, 10)), rng, 4);
    std::size_t prev = 0;
    for (std::size_t i = 0; i <= pts.size(); ++i) {
      const std::vector<std::pair<Point, Point>> prefix(pts.begin(), pts.begin() + static_cast<long>(i));
      const std::size_t r = point_condition_rank(2, 2, prefix);
      CHECK(r >= prev);
      CHECK(r <= i);
      prev = r;
    }
  }
}
