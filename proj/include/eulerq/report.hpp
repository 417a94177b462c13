#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "eulerq/complexity.hpp"

namespace eulerq {

/// {sequence: {p, r, kind, I}, lc, method, kerror: [{k, lc, exact}]}, keys in that order.
nlohmann::ordered_json to_json(const ComplexityReport& report);

/// Human-readable table of the same report; notes follow as '#' lines.
void render_text(std::ostream& out, const ComplexityReport& report);

} // namespace eulerq
