#pragma once

// JSON serialization of verification reports and bound estimates.  Field
// order is fixed (insertion order) so identical configurations produce
// byte-identical files, which the regression tests diff directly.

#include <string>

#include <json.hpp>

#include "sipsamp/verifier.hpp"

namespace sipsamp {

using Json = nlohmann::ordered_json;

Json to_json(const BoundEstimate& b);
Json to_json(const VerificationReport& r);

void write_json(const std::string& path, const Json& j);

}  // namespace sipsamp
