#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mutclass/diagram.h"

namespace mutclass::detail {

using Json = nlohmann::ordered_json;

Json document_json(const Diagram& d);

// Throws ParseError with `path` as the field prefix; does not validate.
Diagram diagram_from_json(const Json& doc, const std::string& path);

Json violations_json(const Diagram& d, const std::vector<Violation>& violations);

}  // namespace mutclass::detail
