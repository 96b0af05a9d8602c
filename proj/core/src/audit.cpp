#include "p1/audit.hpp"

#include <functional>
#include <future>

#include "p1/bundle_expr.hpp"
#include "p1/error.hpp"

namespace p1::audit {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::out_of_scope: return "out_of_scope";
  }
  return "fail";
}

std::string to_string(const Value& v) {
  if (const auto* i = std::get_if<Integer>(&v)) return p1::to_string(*i);
  return std::get<std::string>(v);
}

LedgerEntry check(std::string id, std::string description, std::string paper_ref, Value expected, Value computed,
                  std::optional<std::uint64_t> seed_used) {
  LedgerEntry e{std::move(id), std::move(description), std::move(paper_ref), std::move(expected),
                std::move(computed), Verdict::fail, seed_used};
  e.verdict = e.expected == e.computed ? Verdict::pass : Verdict::fail;
  return e;
}

LedgerEntry inconclusive(std::string id, std::string description, std::string paper_ref, Value expected) {
  return LedgerEntry{std::move(id),
                     std::move(description),
                     std::move(paper_ref),
                     std::move(expected),
                     std::string("genericity not achieved"),
                     Verdict::inconclusive,
                     std::nullopt};
}

StratumSpec complete_spec(StratumSpec s) {
  if (s.v1.rank() != 3) throw PreconditionError("StratumSpec: v1 must have rank 3");
  const SplittingType d = det(s.v1);
  s.l4_prime = twist(d, s.tau_degree);
  s.v2_minus = tensor(d, dual(s.L));
  return s;
}

StratumSpec make_spec(const std::string& name) {
  StratumSpec s;
  s.name = name;
  s.L = SplittingType{2};
  if (name == "sharp" || name == "m0_general") {
    s.v1 = SplittingType{3, 2, 2};
    s.v2_plus = SplittingType{6, 5, 5, 5, 5};
  } else if (name == "flat" || name == "sp") {
    s.v1 = SplittingType{3, 3, 1};
    s.v2_plus = SplittingType{6, 6, 6, 4, 4};
    if (name == "sp") s.a4 = SplittingType{12, 12, 12, 12, 12, 10, 10, 10, 10};
  } else {
    throw PreconditionError("make_spec: unknown stratum '" + name + "'");
  }
  return complete_spec(std::move(s));
}

DeformationResult deformation_conditions(const StratumSpec& spec) {
  const std::string p = (spec.name == "m0_general" ? std::string("m0") : spec.name) + ".deform.";
  DeformationResult r;
  r.hom_s2v1_v2minus = hom_dim(sym(2, spec.v1), spec.v2_minus);
  r.hom_v2plus_v2minus = hom_dim(spec.v2_plus, spec.v2_minus);
  const bool c1 = r.hom_s2v1_v2minus > r.hom_v2plus_v2minus;
  r.cond1 = check(p + "cond1",
                  "dim Hom(S^2 V1, V2-) = " + p1::to_string(r.hom_s2v1_v2minus) + " exceeds dim Hom(V2+, V2-) = " +
                      p1::to_string(r.hom_v2plus_v2minus),
                  "dim Hom(S^2 V1, V2-) > dim Hom(V2+, V2-)", std::string("true"),
                  std::string(c1 ? "true" : "false"));

  const SplittingType l4_inv = dual(spec.l4_prime);
  const std::string ref2 = "h1(V4~ (x) L4'^(-1)) = 0";
  if (spec.a4) {
    const SplittingType v4 = direct_sum(direct_sum(*spec.a4, tensor(spec.v2_plus, spec.v2_minus)),
                                        tensor(spec.v2_minus, spec.v2_minus));
    r.cond2 = check(p + "cond2", "h1 via V4~ = A4 + V2+ (x) V2- + V2-^2", ref2, Integer(0), h1(tensor(v4, l4_inv)));
  } else {
    // V4~ is a quotient of S^2 V2, and H^1 is right exact on a curve.
    const SplittingType s2v2 = sym(2, direct_sum(spec.v2_plus, spec.v2_minus));
    const Integer bound = h1(tensor(s2v2, l4_inv));
    if (sgn(bound) == 0) {
      r.cond2 = check(p + "cond2", "h1 bounded by h1(S^2 V2 (x) L4'^(-1))", ref2, Integer(0), bound);
    } else {
      r.cond2 = LedgerEntry{p + "cond2", "h1(S^2 V2 (x) L4'^(-1)) = " + p1::to_string(bound) + " does not bound h1 by 0",
                            ref2, Integer(0), bound, Verdict::inconclusive, std::nullopt};
    }
  }

  r.cond3 = LedgerEntry{p + "cond3", "smoothness of X and admissibility are not modeled", "X smooth",
                        std::string("out of scope"), std::string("out of scope"), Verdict::out_of_scope, std::nullopt};
  return r;
}

std::optional<Selection> parse_selection(const std::string& s) {
  if (s == "all") return Selection::all;
  if (s == "ranks") return Selection::ranks;
  if (s == "sharp") return Selection::sharp;
  if (s == "flat") return Selection::flat;
  if (s == "sp") return Selection::sp;
  if (s == "m0") return Selection::m0;
  return std::nullopt;
}

Verdict overall_verdict(const std::vector<LedgerEntry>& entries) {
  bool any_inconclusive = false;
  for (const auto& e : entries) {
    if (e.verdict == Verdict::fail) return Verdict::fail;
    if (e.verdict == Verdict::inconclusive) any_inconclusive = true;
  }
  return any_inconclusive ? Verdict::inconclusive : Verdict::pass;
}

AuditReport run(Selection selection, std::uint64_t seed, bool parallel) {
  using Group = std::function<std::vector<LedgerEntry>()>;
  std::vector<Group> groups;
  const bool all = selection == Selection::all;
  if (all || selection == Selection::ranks) groups.push_back([] { return audit_rank_formulas(kRankFormulaMax); });
  if (all || selection == Selection::sharp) groups.push_back([seed] { return audit_stratum_sharp(seed); });
  if (all || selection == Selection::flat) groups.push_back([seed] { return audit_stratum_flat(seed); });
  if (all || selection == Selection::sp) groups.push_back([seed] { return audit_stratum_sp(seed); });
  if (all || selection == Selection::m0) groups.push_back([seed] { return audit_m0_general(seed); });

  std::vector<std::vector<LedgerEntry>> results(groups.size());
  if (parallel && groups.size() > 1) {
    std::vector<std::future<std::vector<LedgerEntry>>> futures;
    for (auto& g : groups) futures.push_back(std::async(std::launch::async, g));
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < groups.size(); ++i) results[i] = groups[i]();
  }

  AuditReport report;
  report.seed = seed;
  for (auto& r : results)
    for (auto& e : r) report.entries.push_back(std::move(e));
  report.verdict = overall_verdict(report.entries);
  return report;
}

}  // namespace p1::audit
