#include "doctest.h"
#include "oracle.hpp"
#include "p1/bundle_expr.hpp"
#include "p1/error.hpp"
#include "p1/splitting.hpp"

using namespace p1;

namespace {
std::string f(const SplittingType& a) { return expr::format(a); }
}  // namespace

TEST_CASE("canonical order and equality") {
  CHECK(SplittingType{2, 3, 2} == SplittingType{3, 2, 2});
  CHECK(SplittingType{2, 3, 2}.degrees() == std::vector<Integer>{3, 2, 2});
  CHECK(SplittingType{}.rank() == 0);
  CHECK(SplittingType{4, -1}.degree() == 3);
}

TEST_CASE("direct sum") {
  CHECK(direct_sum(SplittingType{2, 2}, SplittingType{3}) == SplittingType{3, 2, 2});
  CHECK(direct_sum(SplittingType{}, SplittingType{5}) == SplittingType{5});
  CHECK(direct_sum(SplittingType{5, 5, 5}, SplittingType{5, 5, 6}) == SplittingType{6, 5, 5, 5, 5, 5});
}

TEST_CASE("tensor") {
  CHECK(tensor(SplittingType{2}, SplittingType{3}) == SplittingType{5});
  CHECK(tensor(SplittingType{4, 4, 6, 6, 6}, SplittingType{5}) == SplittingType{9, 9, 11, 11, 11});
  CHECK(tensor(sym(2, SplittingType{1, 3, 3}), SplittingType{2}) == SplittingType{4, 6, 6, 8, 8, 8});
}

TEST_CASE("dual and twist") {
  CHECK(dual(SplittingType{10}) == SplittingType{-10});
  CHECK(dual(SplittingType{}) == SplittingType{});
  CHECK(dual(SplittingType{2, 2, 3}) == SplittingType{-2, -2, -3});
  CHECK(twist(SplittingType{5, 5, 5}, -3) == SplittingType{2, 2, 2});
  CHECK(twist(SplittingType{}, 7) == SplittingType{});
  const SplittingType t = twist(SplittingType{8, 8, 8, 10, 10, 12}, -10);
  CHECK(t == SplittingType{-2, -2, -2, 0, 0, 2});
  CHECK(t.degree() == -4);
}

TEST_CASE("symmetric powers") {
  CHECK(sym(2, SplittingType{2, 2, 3}) == SplittingType{4, 4, 4, 5, 5, 6});
  CHECK(f(sym(2, SplittingType{5, 4, 4, 6, 6, 6})) == "O(12)^6 + O(11)^3 + O(10)^7 + O(9)^2 + O(8)^3");
  CHECK(sym(4, SplittingType{1, 3, 3}) ==
        SplittingType{4, 6, 6, 8, 8, 8, 10, 10, 10, 10, 12, 12, 12, 12, 12});
  CHECK(sym(0, SplittingType{1, 2}) == SplittingType{0});
  CHECK(sym(3, SplittingType{}) == SplittingType{});
  CHECK(sym(0, SplittingType{}) == SplittingType{0});
}

TEST_CASE("symmetric powers agree with multiset enumeration") {
  const SplittingType a{7, 3, 3, -2};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(sym(n, a).degrees() == oracle::combos(a.degrees(), n, false));
}

TEST_CASE("exterior powers") {
  CHECK(wedge(2, SplittingType{1, 3, 3}) == SplittingType{4, 4, 6});
  CHECK(wedge(3, SplittingType{2, 2, 3}) == SplittingType{7});
  CHECK(sym(2, wedge(2, SplittingType{1, 3, 3})) == SplittingType{8, 8, 8, 10, 10, 12});
  CHECK(wedge(0, SplittingType{1}) == SplittingType{0});
  CHECK(wedge(4, SplittingType{1, 2, 3}) == SplittingType{});
  const SplittingType a{5, 1, 0, -3, 2};
  for (std::size_t k = 1; k <= 5; ++k) CHECK(wedge(k, a).degrees() == oracle::combos(a.degrees(), k, true));
}

TEST_CASE("determinant") {
  CHECK(det(SplittingType{2, 2, 3}) == SplittingType{7});
  CHECK(det(SplittingType{1, 3, 3}) == SplittingType{7});
  CHECK(tensor(det(SplittingType{2, 2, 3}), SplittingType{3}) == SplittingType{10});
  CHECK(det(SplittingType{}) == SplittingType{0});
}

TEST_CASE("cohomology") {
  CHECK(h0(twist(sym(2, SplittingType{1, 3, 3}), -2)) == 22);
  CHECK(h0(twist(SplittingType{10, 10, 10, 10, 12, 12, 12, 12, 12}, -10)) == 19);
  CHECK(h1(SplittingType{-1}) == 0);
  CHECK(h1(SplittingType{-2}) == 1);
  CHECK(h0(SheafSummary(SplittingType{3, 3}, 3)) == 11);
  CHECK(chi(SheafSummary(SplittingType{-4}, 2)) == -1);
  const SplittingType a{6, 0, -1, -5};
  CHECK(h0(a) == oracle::bundle_h0(a));
}

TEST_CASE("hom and automorphism dimensions") {
  CHECK(hom_dim(SplittingType{2, 4, 4, 6, 6, 6}, SplittingType{5}) == 8);
  CHECK(hom_dim(SplittingType{4, 4, 6, 6, 6}, SplittingType{5}) == 4);
  CHECK(hom_dim(SplittingType{2, 2, 2}, SplittingType{3, 3}) == 12);
  CHECK(aut_dim(SplittingType{3, 3}) == 4);
  CHECK(aut_dim(SplittingType{2, 4}) == 5);
  CHECK(aut_dim(SplittingType{-17}) == 1);
  CHECK(rel_aut_dim(SplittingType{2, 2, 3}) == 8);
  CHECK(rel_aut_dim(SplittingType{1, 3, 3}) == 10);
  CHECK(rel_aut_dim(SplittingType{0, 0, 0}) == 8);
  CHECK_THROWS_AS(aut_dim(SplittingType{}), PreconditionError);
  CHECK_THROWS_AS(rel_aut_dim(SplittingType{}), PreconditionError);
}

TEST_CASE("ext1 from torsion") {
  CHECK(ext1_from_torsion(3, SplittingType{4, 4, 4, 5, 5, 6}) == 18);
  CHECK(ext1_from_torsion(3, SplittingType{2, 4, 4, 6, 6, 6}) == 18);
  CHECK(ext1_from_torsion(1, SplittingType{0}) == 1);
  CHECK_THROWS_WITH_AS(ext1_from_torsion(3, SplittingType{-5}), "ext1_from_torsion: long-exact-sequence regime not satisfied",
                       PreconditionError);
}

TEST_CASE("arbitrary precision degrees") {
  const Integer big("123456789012345678901234567890");
  const SplittingType a(std::vector<Integer>{big, -big});
  CHECK(a.degree() == 0);
  CHECK(h0(a) == big + 1);
  CHECK(h1(a) == big - 1);
  CHECK(chi(a) == 2);
}
