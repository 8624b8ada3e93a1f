#pragma once

#include <json.hpp>

#include "conjlab/theorem.hpp"

namespace conjlab {

using Json = nlohmann::ordered_json;

Json to_json(const arith::Factorization& f);
Json to_json(const ClassSizeSet& s);
Json to_json(const TheoremReport& r);

/// Throws ParseError on schema mismatch.
TheoremReport report_from_json(const Json& j);

}  // namespace conjlab
