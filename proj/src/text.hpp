#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pubcite::text {

/// Splits on a single-character separator, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Strips ASCII whitespace from both ends.
std::string_view trim_ascii(std::string_view s);

bool iequals_ascii(std::string_view a, std::string_view b);

/// Decodes the UTF-8 sequence starting at `pos`. Returns the codepoint and
/// sets `len` to the number of bytes consumed. Malformed sequences yield
/// the single lead byte with `valid = false`; the folding routines replace
/// such bytes with U+FFFD.
char32_t decode_utf8(std::string_view s, std::size_t pos, std::size_t& len, bool& valid);

bool is_unicode_space(char32_t cp);

/// Lowercases ASCII letters and collapses Unicode whitespace runs to one
/// space, trimming the ends. The case/whitespace-insensitive match key for
/// categories and config keys.
std::string fold_key(std::string_view s);

}  // namespace pubcite::text
