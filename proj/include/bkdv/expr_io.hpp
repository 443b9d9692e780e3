#pragma once

#include <string>

#include "bkdv/ring.hpp"
#include "vendor_json_fwd.hpp"

namespace bkdv {

// Canonical plain-text form, deterministic (degree-lex term order).
std::string to_text(const Poly& p);
std::string to_text(const LocalizedExpr& e);

std::string to_latex(const LocalizedExpr& e);

// JSON schema: {"gens": [...], "terms": [{"m": {gen: exp,...}, "c": "p/q"}],
//               "den": {gen: exp,...}}
nlohmann::json to_json(const LocalizedExpr& e);
LocalizedExpr from_json(const Ring* ring, const nlohmann::json& j);

// Recursive-descent parser for + - * / ^ ( ) over ring generators and
// rational literals. '/' is exact localized division, so denominators must
// reduce to invertible form (e.g. "(v1+r*r1)^3"). Names resolve through the
// ring's alias table; "u2", "u3", ... in the v-jet ring and "v2", ... in the
// u-jet ring expand to their jet definitions.
LocalizedExpr parse_expr(const Ring* ring, const std::string& text);

} // namespace bkdv
