#pragma once

#include <json.hpp>

#include <string>

namespace mgibbs::cli {

using Json = nlohmann::ordered_json;

/// Serializes with every floating-point number printed as %.17g, so the text
/// round-trips doubles exactly and is byte-stable across runs. Non-finite
/// numbers become null.
std::string dump_json(const Json& value);

/// %.17g formatting shared by the JSON and CSV writers.
std::string format_double(double value);

}  // namespace mgibbs::cli
