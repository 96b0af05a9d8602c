#include "p1/report.hpp"

#include "json.hpp"

namespace p1::audit {

namespace {

using json = nlohmann::ordered_json;

json to_json_value(const Value& v) {
  if (const auto* i = std::get_if<Integer>(&v)) {
    if (i->fits_slong_p()) return json(i->get_si());
    return json(p1::to_string(*i));
  }
  return json(std::get<std::string>(v));
}

}  // namespace

std::string to_json(const AuditReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(json{{"id", e.id},
                           {"description", e.description},
                           {"paper_ref", e.paper_ref},
                           {"expected", to_json_value(e.expected)},
                           {"computed", to_json_value(e.computed)},
                           {"verdict", to_string(e.verdict)}});
    if (e.seed_used) entries.back()["seed_used"] = *e.seed_used;
  }
  json doc{{"version", 1}, {"seed", report.seed}, {"entries", std::move(entries)}, {"verdict", to_string(report.verdict)}};
  return doc.dump() + "\n";
}

std::string to_text(const AuditReport& report) {
  std::size_t w_id = 2, w_exp = 8, w_cmp = 8;
  for (const auto& e : report.entries) {
    w_id = std::max(w_id, e.id.size());
    w_exp = std::max(w_exp, to_string(e.expected).size());
    w_cmp = std::max(w_cmp, to_string(e.computed).size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::string out = pad("id", w_id) + "  " + pad("expected", w_exp) + "  " + pad("computed", w_cmp) + "  verdict\n";
  for (const auto& e : report.entries)
    out += pad(e.id, w_id) + "  " + pad(to_string(e.expected), w_exp) + "  " + pad(to_string(e.computed), w_cmp) +
           "  " + to_string(e.verdict) + "\n";
  out += "seed " + std::to_string(report.seed) + ": " + std::to_string(report.entries.size()) + " entries, verdict " +
         to_string(report.verdict) + "\n";
  return out;
}

}  // namespace p1::audit
