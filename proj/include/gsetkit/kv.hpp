#ifndef GSETKIT_KV_HPP
#define GSETKIT_KV_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "gsetkit/error.hpp"

// Single-line key=value records: `key=value key2="quoted value"`.
// Values containing whitespace, quotes or '=' are double-quoted with
// backslash escapes. Doubles print in shortest round-trip form so a record
// read back yields the identical value.

namespace gsetkit::kv {

inline std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

inline bool needs_quotes(std::string_view value) {
  if (value.empty()) return true;
  for (char c : value) {
    if (c == ' ' || c == '\t' || c == '"' || c == '=' || c == '\\' || c == '\n') return true;
  }
  return false;
}

inline std::string quote(std::string_view value) {
  if (!needs_quotes(value)) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

class Record {
 public:
  Record& add(std::string_view key, std::string_view value) {
    fields_.emplace_back(std::string(key), std::string(value));
    return *this;
  }
  Record& add(std::string_view key, const char* value) { return add(key, std::string_view(value)); }
  Record& add(std::string_view key, const std::string& value) {
    return add(key, std::string_view(value));
  }
  Record& add(std::string_view key, double value) { return add(key, format_double(value)); }
  template <typename Int>
    requires std::is_integral_v<Int>
  Record& add(std::string_view key, Int value) {
    return add(key, std::string_view(std::to_string(value)));
  }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : fields_) {
      if (!out.empty()) out += ' ';
      out += k;
      out += '=';
      out += quote(v);
    }
    return out;
  }

  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

  std::optional<std::string_view> find(std::string_view key) const {
    for (const auto& [k, v] : fields_) {
      if (k == key) return std::string_view(v);
    }
    return std::nullopt;
  }

  std::string_view get(std::string_view key) const {
    auto v = find(key);
    if (!v) throw Error(ErrorCode::config, "missing key '" + std::string(key) + "'");
    return *v;
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

inline Record parse(std::string_view line) {
  Record rec;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
  };
  skip_ws();
  while (i < line.size()) {
    const std::size_t eq = line.find('=', i);
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::malformed_token,
                  "expected key=value near '" + std::string(line.substr(i, 20)) + "'");
    }
    std::string key(line.substr(i, eq - i));
    if (key.empty() || key.find_first_of(" \t") != std::string::npos) {
      throw Error(ErrorCode::malformed_token, "bad key '" + key + "'");
    }
    i = eq + 1;
    std::string value;
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char c = line[i++];
        if (c == '\\' && i < line.size()) {
          char e = line[i++];
          value += (e == 'n') ? '\n' : e;
        } else if (c == '"') {
          closed = true;
          break;
        } else {
          value += c;
        }
      }
      if (!closed) throw Error(ErrorCode::malformed_token, "unterminated quote for key '" + key + "'");
    } else {
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      value = std::string(line.substr(start, i - start));
    }
    rec.add(key, value);
    skip_ws();
  }
  return rec;
}

template <typename Int>
Int to_int(std::string_view text, std::string_view what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::malformed_token,
                std::string(what) + ": expected integer, got '" + std::string(text) + "'");
  }
  return value;
}

inline double to_double(std::string_view text, std::string_view what) {
  double value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::malformed_token,
                std::string(what) + ": expected number, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace gsetkit::kv

#endif  // GSETKIT_KV_HPP
