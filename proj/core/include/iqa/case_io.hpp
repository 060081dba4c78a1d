#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "iqa/case_file.hpp"
#include "iqa/decimal.hpp"

namespace iqa {

// Parses a UTF-8 JSON case document and validates everything in it.
// Throws Error(SyntaxError) for malformed JSON; otherwise collects every
// problem and throws Error(SchemaError) if any is structural (unknown
// version, missing or mistyped field, unknown key) or Error(ValidationError)
// if all are value-level (range, precision, duplicate id, blank text).
// Each finding carries a locator such as "devices[device:4]/scores/DTC/value".
CaseFile parse_case(std::string_view bytes);

// Canonical form: sorted keys, two-space indent, two-decimal score strings,
// trailing newline. Structurally equal cases serialize to identical bytes.
std::string serialize_case(const CaseFile& c);

// Weights document: {"DTC": "2", "CS": "0", ...}; unlisted factors keep 1.
Weights parse_weights(std::string_view bytes);

// Exact decimal when the value terminates within 18 digits, else "p/q".
std::string to_decimal_string(const Rational& value);

// Throws Error(SinkUnavailable) on I/O failure.
std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace iqa
