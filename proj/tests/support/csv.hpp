#pragma once

#include <string>
#include <string_view>
#include <vector>

// Minimal RFC-4180-style CSV reader for checking rendered output.
namespace pubcite::testsupport {

std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace pubcite::testsupport
