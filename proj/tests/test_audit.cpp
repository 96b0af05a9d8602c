#include <fstream>
#include <map>

#include "doctest.h"
#include "json.hpp"
#include "p1/audit.hpp"
#include "p1/report.hpp"

using namespace p1;
using namespace p1::audit;

namespace {

const LedgerEntry& find(const std::vector<LedgerEntry>& v, const std::string& id) {
  for (const auto& e : v)
    if (e.id == id) return e;
  FAIL("missing ledger entry " << id);
  throw;
}

Integer as_int(const Value& v) { return std::get<Integer>(v); }

}  // namespace

TEST_CASE("every entry passes at seed 0") {
  const AuditReport r = run_all(0);
  CHECK(r.verdict == Verdict::pass);
  for (const auto& e : r.entries) {
    INFO(e.id);
    CHECK((e.verdict == Verdict::pass || e.verdict == Verdict::out_of_scope));
  }
}

TEST_CASE("ledger constants match the citation table") {
  std::ifstream in(P1_TEST_DATA_DIR "/citations.json");
  REQUIRE(in.good());
  const auto table = nlohmann::json::parse(in);
  const AuditReport r = run(Selection::all, 0, false);
  REQUIRE(table.size() == r.entries.size());
  std::size_t i = 0;
  for (const auto& e : r.entries) {
    const auto& row = table.at(i++);
    INFO(e.id);
    CHECK(row.at("id").get<std::string>() == e.id);
    CHECK(row.at("paper_ref").get<std::string>() == e.paper_ref);
    if (row.at("expected").is_number())
      CHECK(Value(Integer(row.at("expected").get<long>())) == e.expected);
    else
      CHECK(Value(row.at("expected").get<std::string>()) == e.expected);
  }
}

TEST_CASE("ids are unique") {
  const AuditReport r = run_all(3);
  std::map<std::string, int> seen;
  for (const auto& e : r.entries) CHECK(++seen[e.id] == 1);
}

TEST_CASE("reports are deterministic and independent of scheduling") {
  const std::string a = to_json(run(Selection::all, 5, true));
  const std::string b = to_json(run(Selection::all, 5, false));
  CHECK(a == b);
  CHECK(to_text(run_all(5)) == to_text(run_all(5)));
}

TEST_CASE("a corrupted expected value fails") {
  AuditReport r = run(Selection::sharp, 0);
  for (auto& e : r.entries)
    if (e.id == "sharp.stratum_dim") e = check(e.id, e.description, e.paper_ref, Integer(33), e.computed);
  CHECK(overall_verdict(r.entries) == Verdict::fail);
  CHECK(find(r.entries, "sharp.stratum_dim").verdict == Verdict::fail);
}

TEST_CASE("verdict precedence") {
  const auto pass = check("a", "", "", Integer(1), Integer(1));
  const auto fail = check("b", "", "", Integer(1), Integer(2));
  const auto inc = inconclusive("c", "", "", Integer(1));
  LedgerEntry oos = pass;
  oos.verdict = Verdict::out_of_scope;
  CHECK(overall_verdict({pass, oos}) == Verdict::pass);
  CHECK(overall_verdict({pass, inc}) == Verdict::inconclusive);
  CHECK(overall_verdict({inc, fail, pass}) == Verdict::fail);
  CHECK(check("d", "", "", std::string("1"), Integer(1)).verdict == Verdict::fail);
}

TEST_CASE("stratum specs") {
  for (const char* n : {"sharp", "flat", "sp", "m0_general"}) {
    const StratumSpec s = make_spec(n);
    CHECK(s.v1.rank() == 3);
    CHECK(s.tau_degree == 3);
    CHECK(s.l4_prime == twist(det(s.v1), s.tau_degree));
    CHECK(s.l4_prime.degree() == 10);
    CHECK(s.v2_minus.degree() == det(s.v1).degree() - s.L.degree());
    CHECK(s.v2_plus.rank() == 5);
    CHECK(s.v2_minus.rank() == 1);
  }
  CHECK_THROWS(make_spec("nope"));
}

TEST_CASE("deformation conditions") {
  for (const char* n : {"m0_general", "sp"}) {
    const DeformationResult d = deformation_conditions(make_spec(n));
    CHECK(d.hom_s2v1_v2minus == 8);
    CHECK(d.hom_v2plus_v2minus == 4);
    CHECK(d.cond1.computed == Value(std::string("true")));
    CHECK(d.cond2.computed == Value(Integer(0)));
    CHECK(d.cond2.verdict == Verdict::pass);
    CHECK(d.cond3.verdict == Verdict::out_of_scope);
  }
  StratumSpec neg = make_spec("m0_general");
  neg.v2_minus = SplittingType{-5};
  const DeformationResult d = deformation_conditions(neg);
  CHECK(d.hom_s2v1_v2minus == 0);
  CHECK(d.hom_v2plus_v2minus == 0);
  CHECK(d.cond1.computed == Value(std::string("false")));
  CHECK(d.cond1.verdict == Verdict::fail);
}

TEST_CASE("stratum dimensions are sums of their parts") {
  const AuditReport r = run_all(0);
  const auto& e = r.entries;
  CHECK(as_int(find(e, "sharp.stratum_dim").computed) ==
        as_int(find(e, "sharp.ext_params").computed) + as_int(find(e, "sharp.section_params").computed) -
            as_int(find(e, "sharp.rel_aut").computed));
  CHECK(as_int(find(e, "flat.stratum_dim").computed) ==
        as_int(find(e, "flat.ext_params").computed) + as_int(find(e, "flat.section_params").computed) -
            as_int(find(e, "flat.rel_aut").computed));
  CHECK(as_int(find(e, "sp.stratum_dim").computed) ==
        as_int(find(e, "sp.conic_params").computed) + as_int(find(e, "sp.X_params").computed) -
            as_int(find(e, "sp.aut_subtraction").computed));
}

TEST_CASE("rank formula group") {
  const auto v = audit_rank_formulas(8);
  CHECK(as_int(find(v, "ranks.n4.sym").computed) == 15);
  CHECK(as_int(find(v, "ranks.n4.L").computed) == 1);
  CHECK(as_int(find(v, "ranks.n4.im_sigma").computed) == 14);
  CHECK(as_int(find(v, "ranks.n2.L").computed) == 0);
  CHECK(as_int(find(v, "ranks.V4tilde").computed) == 15);
  CHECK_THROWS(audit_rank_formulas(3));
}

TEST_CASE("selections") {
  CHECK(parse_selection("m0") == Selection::m0);
  CHECK_FALSE(parse_selection("M0").has_value());
  const AuditReport r = run(Selection::ranks, 0);
  for (const auto& e : r.entries) CHECK(e.id.rfind("ranks.", 0) == 0);
}

TEST_CASE("report formats") {
  const AuditReport r = run(Selection::sp, 0);
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j.at("version") == 1);
  CHECK(j.at("seed") == 0);
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("entries").size() == r.entries.size());
  const std::string text = to_text(r);
  for (unsigned char ch : text) CHECK(ch < 128);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(r.entries.size()) + 2);
}
