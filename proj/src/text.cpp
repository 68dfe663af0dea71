#include "text.hpp"

namespace pubcite::text {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim_ascii(std::string_view s) {
  auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; };
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

bool iequals_ascii(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = a[i], y = b[i];
    if (x >= 'a' && x <= 'z') x = static_cast<char>(x - 32);
    if (y >= 'a' && y <= 'z') y = static_cast<char>(y - 32);
    if (x != y) return false;
  }
  return true;
}

char32_t decode_utf8(std::string_view s, std::size_t pos, std::size_t& len, bool& valid) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  unsigned char b0 = byte(pos);
  valid = true;
  if (b0 < 0x80) {
    len = 1;
    return b0;
  }
  std::size_t need = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    need = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    need = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    need = 3;
    cp = b0 & 0x07;
  } else {
    len = 1;
    valid = false;
    return b0;
  }
  if (pos + need >= s.size()) {
    len = 1;
    valid = false;
    return b0;
  }
  for (std::size_t i = 1; i <= need; ++i) {
    unsigned char bi = byte(pos + i);
    if ((bi & 0xC0) != 0x80) {
      len = 1;
      valid = false;
      return b0;
    }
    cp = (cp << 6) | (bi & 0x3F);
  }
  len = need + 1;
  return cp;
}

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case U'\t':
    case U'\n':
    case 0x0B:
    case 0x0C:
    case U'\r':
    case U' ':
    case 0x85:    // NEL
    case 0xA0:    // NBSP
    case 0x1680:  // ogham space mark
    case 0x2028:  // line separator
    case 0x2029:  // paragraph separator
    case 0x202F:  // narrow NBSP
    case 0x205F:  // medium mathematical space
    case 0x3000:  // ideographic space
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::string fold_key(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t len = 0;
    bool valid = false;
    char32_t cp = decode_utf8(s, i, len, valid);
    if (valid && is_unicode_space(cp)) {
      pending_space = true;
      i += len;
      continue;
    }
    if (!out.empty() && pending_space) out.push_back(' ');
    pending_space = false;
    if (!valid) {
      // U+FFFD keeps the output valid UTF-8, which keeps folding idempotent:
      // raw bytes copied through could re-combine into whitespace sequences.
      out.append("\xEF\xBF\xBD");
    } else if (cp >= 'A' && cp <= 'Z') {
      out.push_back(static_cast<char>(cp + 32));
    } else {
      out.append(s.substr(i, len));
    }
    i += len;
  }
  return out;
}

}  // namespace pubcite::text
