#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pubcite::cli {

/// Runs the command line given argv-style arguments (without the program
/// name). Data goes to `out` (or the --out file), diagnostics to `err`.
/// Exit codes: 0 success (warnings allowed), 1 fatal input error, 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Key/value config file: `key = value` lines, `#` comments, optional
/// double quotes around the value. Used for the PUBCITE_CONFIG defaults.
std::map<std::string, std::string> parse_config_text(std::string_view text);
std::map<std::string, std::string> parse_config_file(const std::string& path);

}  // namespace pubcite::cli
