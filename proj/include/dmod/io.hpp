#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dmod/arrangement.hpp"
#include "dmod/decomp.hpp"

namespace dmod::io {

/// Strict reader for
///   {"forms": [["1","0"],["0","1"],["1","1"]], "beta": ["1/2","1/3","1/5"]}.
/// Unknown keys, non-string scalars, and malformed entries raise ParseError.
/// The result is not validated.
Arrangement parse_arrangement(std::string_view json_text);
Arrangement read_arrangement(const std::filesystem::path& path);

nlohmann::ordered_json arrangement_to_json(const Arrangement& arr);

/// {"count", "case", "k", "beta_H"?, "factors", "nbc"?, "notes"}; line
/// indices are 1-based.
nlohmann::ordered_json report_to_json(const DecompositionReport& report);

std::string report_to_text(const DecompositionReport& report);

}  // namespace dmod::io
