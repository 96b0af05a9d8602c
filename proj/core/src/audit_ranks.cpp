#include "p1/audit.hpp"

#include "p1/error.hpp"
#include "p1/graded_map.hpp"

namespace p1::audit {

namespace {

constexpr std::uint64_t kQuarticSeed = 0x51ed;

// Monomials of degree n in two variables; zero for n < 0.
long binary_monomials(long n) { return n < 0 ? 0 : n + 1; }

// Rank of multiplication by a seeded plane quartic, S^(n-4) -> S^n, computed
// on the trivial rank-3 bundle.
std::size_t quartic_ideal_rank(long n) {
  if (n < 4) return 0;
  const SplittingType v1{0, 0, 0};
  const GradedMap q = random_general(SplittingType{0}, sym(4, v1), kQuarticSeed);
  return generic_rank(multiplication_map(v1, static_cast<std::size_t>(n - 4), q));
}

}  // namespace

std::vector<LedgerEntry> audit_rank_formulas(int n_max) {
  if (n_max < 4) throw PreconditionError("audit_rank_formulas: n_max must be at least 4");
  std::vector<LedgerEntry> out;
  const SplittingType v1{3, 2, 2};
  for (long n = 2; n <= n_max; ++n) {
    const std::string p = "ranks.n" + std::to_string(n) + ".";
    const Integer sym_rank = sym(static_cast<std::size_t>(n), v1).rank();
    const Integer l_rank = quartic_ideal_rank(n);
    // Local basis (*)_n, (*)_(n-1) x2, (*)_(n-2) h y, (*)_(n-3) h x2 y.
    const Integer im_rank =
        binary_monomials(n) + binary_monomials(n - 1) + binary_monomials(n - 2) + binary_monomials(n - 3);
    const Integer t_rank = binary_monomials(n - 2) + binary_monomials(n - 3);

    out.push_back(check(p + "sym", "rank of S^n V1 for rank-3 V1", "rk S^n V1 = (n+2)(n+1)/2",
                        Integer((n + 2) * (n + 1) / 2), sym_rank));
    out.push_back(check(p + "L", "rank of the kernel L_n of S^n V1 -> V_n, as multiples of a plane quartic",
                        "rk L_n = (n-2)(n-3)/2", Integer((n - 2) * (n - 3) / 2), l_rank));
    out.push_back(check(p + "im_sigma", "rank of Im sigma_n from the local monomial basis", "rk Im sigma_n = 4n-2",
                        Integer(4 * n - 2), im_rank));
    out.push_back(check(p + "exact_sequence", "rk L_n + rk Im sigma_n recovers rk S^n V1",
                        "0 -> L_n -> S^n V1 -> Im sigma_n -> 0", Integer((n + 2) * (n + 1) / 2),
                        l_rank + im_rank));
    out.push_back(check(p + "T", "rank of T_n over O_tau from the local monomial basis", "rk T_n = 2n-3",
                        Integer(2 * n - 3), t_rank));
  }
  const Integer v4 = Integer(sym(2, SplittingType{0, 0, 0, 0, 0, 0}).rank()) -
                     Integer(sym(2, wedge(2, SplittingType{0, 0, 0})).rank());
  out.push_back(check("ranks.V4tilde", "rk S^2 V2 - rk S^2 Wedge^2 V1 with rk V2 = 6, rk V1 = 3", "rk V4~ = 15",
                      Integer(15), v4));
  return out;
}

}  // namespace p1::audit
