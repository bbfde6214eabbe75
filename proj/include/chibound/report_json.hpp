#pragma once

#include <json.hpp>

#include "chibound/bounds.hpp"
#include "chibound/coloring.hpp"
#include "chibound/decomposition.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognition.hpp"

namespace chibound {

// JSON views with stable key order (insertion-ordered objects), shared by the
// CLI and the golden tests.
using ojson = nlohmann::ordered_json;

ojson to_json(const ClassReport& r);
ojson to_json(const CliqueLayering& l);
ojson to_json(const Coloring& c, const BoundCertificate& cert);
ojson to_json(const Coloring& c);
ojson to_json(const ColoringViolations& v);
/// Bound values rendered as fixed 6-decimal strings; "undefined" when a
/// logarithm argument was out of range.
ojson to_json(const BoundReport& r);

/// FNV-1a 64-bit content digest, hex-encoded; identifies CLI inputs in run reports.
std::string content_digest(const std::string& bytes);

} // namespace chibound
