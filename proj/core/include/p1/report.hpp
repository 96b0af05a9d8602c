#pragma once

#include <string>

#include "p1/audit.hpp"

namespace p1::audit {

/// {"version":1,"seed":...,"entries":[...],"verdict":...}, one line.
std::string to_json(const AuditReport& report);

/// One ASCII line per entry: id, expected, computed, verdict, then a summary
/// line with the overall verdict.
std::string to_text(const AuditReport& report);

}  // namespace p1::audit
