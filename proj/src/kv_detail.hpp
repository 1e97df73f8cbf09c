#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fopid::detail {

inline std::string trim_ws(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct KvLine {
  enum class Kind { Blank, Comment, Section, Pair, Malformed } kind = Kind::Blank;
  std::string key;    // section name for Kind::Section
  std::string value;
};

inline KvLine parse_kv_line(const std::string& raw) {
  KvLine out;
  const std::string line = trim_ws(raw);
  if (line.empty()) return out;
  if (line[0] == '#') {
    out.kind = KvLine::Kind::Comment;
    out.value = line;
    return out;
  }
  if (line.front() == '[' && line.back() == ']') {
    out.kind = KvLine::Kind::Section;
    out.key = trim_ws(line.substr(1, line.size() - 2));
    return out;
  }
  const auto eq = line.find('=');
  if (eq == std::string::npos) {
    out.kind = KvLine::Kind::Malformed;
    out.value = line;
    return out;
  }
  out.kind = KvLine::Kind::Pair;
  out.key = trim_ws(line.substr(0, eq));
  out.value = trim_ws(line.substr(eq + 1));
  return out;
}

inline double parse_double(const std::string& s, const std::string& key) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw std::invalid_argument("bad numeric value for '" + key + "': " + s);
  return v;
}

inline long parse_long(const std::string& s, const std::string& key) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw std::invalid_argument("bad integer value for '" + key + "': " + s);
  return v;
}

}  // namespace fopid::detail
