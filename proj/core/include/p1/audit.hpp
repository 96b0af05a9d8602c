#pragma once

// Ledger of the dimension counts and constructions for genus-3 fibrations
// with a hyperelliptic-type degeneration, recomputed from splitting data and
// seeded general morphisms.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "p1/splitting.hpp"

namespace p1::audit {

enum class Verdict { pass, fail, inconclusive, out_of_scope };

std::string to_string(Verdict v);

/// An integer or a canonical splitting string.
using Value = std::variant<Integer, std::string>;

std::string to_string(const Value& v);

struct LedgerEntry {
  std::string id;
  std::string description;
  std::string paper_ref;
  Value expected;
  Value computed;
  Verdict verdict = Verdict::fail;
  std::optional<std::uint64_t> seed_used;
};

/// pass iff expected == computed (same alternative, same value).
LedgerEntry check(std::string id, std::string description, std::string paper_ref, Value expected, Value computed,
                  std::optional<std::uint64_t> seed_used = std::nullopt);

/// An entry whose computation could not be carried out because a general
/// choice was never found.
LedgerEntry inconclusive(std::string id, std::string description, std::string paper_ref, Value expected);

struct StratumSpec {
  std::string name;
  SplittingType v1;
  Integer tau_degree = 3;
  SplittingType L;
  SplittingType v2_plus;
  SplittingType v2_minus;
  std::optional<SplittingType> a4;
  SplittingType l4_prime;
};

/// "sharp", "flat", "sp" or "m0_general". Throws PreconditionError otherwise.
StratumSpec make_spec(const std::string& name);

/// Fills L4' = det(v1)(tau_degree) and V2- = det(v1) (x) L^v.
StratumSpec complete_spec(StratumSpec s);

struct DeformationResult {
  LedgerEntry cond1;
  LedgerEntry cond2;
  LedgerEntry cond3;
  Integer hom_s2v1_v2minus;
  Integer hom_v2plus_v2minus;
};

/// Conditions 1) and 2) of the deformation criterion for the spec; 3) is
/// reported as out of scope. Entry ids are prefixed with spec.name.
DeformationResult deformation_conditions(const StratumSpec& spec);

std::vector<LedgerEntry> audit_rank_formulas(int n_max);
std::vector<LedgerEntry> audit_stratum_sharp(std::uint64_t seed);
std::vector<LedgerEntry> audit_stratum_flat(std::uint64_t seed);
std::vector<LedgerEntry> audit_stratum_sp(std::uint64_t seed);
std::vector<LedgerEntry> audit_m0_general(std::uint64_t seed);

enum class Selection { all, ranks, sharp, flat, sp, m0 };

/// Parses "all", "ranks", "sharp", "flat", "sp", "m0".
std::optional<Selection> parse_selection(const std::string& s);

struct AuditReport {
  std::uint64_t seed = 0;
  std::vector<LedgerEntry> entries;
  Verdict verdict = Verdict::pass;
};

/// fail beats inconclusive beats pass; out_of_scope entries are neutral.
Verdict overall_verdict(const std::vector<LedgerEntry>& entries);

/// Runs the selected groups (concurrently when `parallel`) and concatenates
/// them in the fixed order ranks, sharp, flat, sp, m0.
AuditReport run(Selection selection, std::uint64_t seed, bool parallel = true);

inline AuditReport run_all(std::uint64_t seed) { return run(Selection::all, seed); }

/// Default n_max for the rank-formula group.
inline constexpr int kRankFormulaMax = 8;

}  // namespace p1::audit
