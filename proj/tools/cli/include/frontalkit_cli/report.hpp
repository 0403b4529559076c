#pragma once

#include <string>

#include "json.hpp"

namespace frontalkit::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

/// One "key = value" line per leaf. Nested objects join keys with '.',
/// array elements are addressed as key[i] counting from 1.
std::string render_text(const Json& report);

std::string render(const Json& report, Format format);

}  // namespace frontalkit::cli
