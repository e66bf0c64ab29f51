#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

namespace chargenus::detail {

/// Reads the TOML subset used by atom catalogs and resolution models into a
/// JSON tree: comments, `[table]`, `[[array.of.tables]]`, bare or quoted keys,
/// and string / integer / boolean values plus flat arrays of them.
/// Throws ParseError with line and column.
nlohmann::json parse_toml(std::string_view text);

}  // namespace chargenus::detail
