#ifndef GSETKIT_SPIN_CODEC_HPP
#define GSETKIT_SPIN_CODEC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsetkit/error.hpp"
#include "gsetkit/kv.hpp"

namespace gsetkit {

using Spin = std::int8_t;

/// A length-n vector of spins, each exactly -1 or +1. Max-Cut variables and
/// Ising spins are the same vector.
class SpinConfiguration {
 public:
  SpinConfiguration() = default;

  explicit SpinConfiguration(std::vector<Spin> spins) : spins_(std::move(spins)) {
    for (std::size_t i = 0; i < spins_.size(); ++i) {
      if (spins_[i] != 1 && spins_[i] != -1) {
        throw Error(ErrorCode::invalid_argument,
                    "spin " + std::to_string(i + 1) + " is " + std::to_string(spins_[i]) + ", expected -1 or +1");
      }
    }
  }

  static SpinConfiguration uniform(std::size_t n, Spin value) {
    return SpinConfiguration(std::vector<Spin>(n, value));
  }

  std::size_t size() const noexcept { return spins_.size(); }
  Spin operator[](std::size_t i) const noexcept { return spins_[i]; }
  void flip(std::size_t i) noexcept { spins_[i] = static_cast<Spin>(-spins_[i]); }
  std::span<const Spin> values() const noexcept { return spins_; }

  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;

 private:
  std::vector<Spin> spins_;
};

inline SpinConfiguration global_flip(SpinConfiguration config) {
  for (std::size_t i = 0; i < config.size(); ++i) config.flip(i);
  return config;
}

namespace detail {

inline int hex_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

inline bool is_blank(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace detail

/// Expands a hex string into n spins. Digits are read left to right, each
/// digit MSB first, so bit i of the stream belongs to variable i; bit 0 maps
/// to -1 and bit 1 to +1. Whitespace is ignored anywhere. Character errors
/// are reported before length errors, with the 1-based digit position and
/// the line/column in the input.
inline SpinConfiguration decode_hex(std::string_view hex, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "spin count must be positive");
  std::string digits;
  digits.reserve(hex.size());
  std::size_t line = 1, col = 0;
  for (char c : hex) {
    if (c == '\n') {
      ++line;
      col = 0;
      continue;
    }
    ++col;
    if (detail::is_blank(c)) continue;
    if (detail::hex_value(c) < 0) {
      throw Error(ErrorCode::invalid_hex_char,
                  "non-hex character '" + std::string(1, c) + "' at digit position " +
                      std::to_string(digits.size() + 1) + " (line " + std::to_string(line) + ", column " +
                      std::to_string(col) + ")");
    }
    digits += c;
  }
  const std::size_t expected = (n + 3) / 4;
  if (digits.size() != expected) {
    throw Error(ErrorCode::hex_length_mismatch, "expected " + std::to_string(expected) + " hex digits for " +
                                                    std::to_string(n) + " spins, found " +
                                                    std::to_string(digits.size()));
  }
  std::vector<Spin> spins(n);
  for (std::size_t d = 0; d < digits.size(); ++d) {
    const int value = detail::hex_value(digits[d]);
    for (int b = 0; b < 4; ++b) {
      const bool bit = (value >> (3 - b)) & 1;
      const std::size_t i = d * 4 + static_cast<std::size_t>(b);
      if (i < n) {
        spins[i] = bit ? Spin{1} : Spin{-1};
      } else if (bit) {
        throw Error(ErrorCode::nonzero_padding, "padding bits of the final digit '" + std::string(1, digits[d]) +
                                                    "' must be zero for n=" + std::to_string(n));
      }
    }
  }
  return SpinConfiguration(std::move(spins));
}

/// Lowercase, unwrapped inverse of decode_hex; trailing pad bits are zero.
inline std::string encode_hex(const SpinConfiguration& config) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve((config.size() + 3) / 4);
  for (std::size_t i = 0; i < config.size(); i += 4) {
    int value = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      value <<= 1;
      if (i + b < config.size() && config[i + b] > 0) value |= 1;
    }
    out += digits[value];
  }
  return out;
}

/// Contents of a solution file: the hex body (header lines removed, wrapping
/// preserved) and the optional "# instance=<name> n=<n>" header.
struct SolutionText {
  std::string body;
  std::optional<std::string> instance;
  std::optional<std::size_t> n;
};

inline SolutionText parse_solution_text(std::string_view text) {
  SolutionText out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    std::size_t first = 0;
    while (first < line.size() && detail::is_blank(line[first])) ++first;
    if (first < line.size() && line[first] == '#') {
      // Header is advisory; anything unparseable in it is ignored.
      try {
        auto rec = kv::parse(line.substr(first + 1));
        if (auto v = rec.find("instance")) out.instance = std::string(*v);
        if (auto v = rec.find("n")) out.n = kv::to_int<std::size_t>(*v, "n");
      } catch (const Error&) {
      }
      out.body += '\n';
      continue;
    }
    out.body += line;
    out.body += '\n';
  }
  return out;
}

struct Substitution {
  char from;
  char to;
};

/// Parses "l=1" style substitution specs.
inline Substitution parse_substitution(std::string_view spec) {
  if (spec.size() != 3 || spec[1] != '=') {
    throw Error(ErrorCode::invalid_argument, "substitution must look like CHAR=CHAR, got '" + std::string(spec) + "'");
  }
  return {spec[0], spec[2]};
}

struct SubstitutionReport {
  Substitution rule;
  std::vector<std::size_t> digit_positions;  // 1-based, whitespace skipped
};

/// Replaces every occurrence of rule.from and records where it happened, in
/// the same digit-position numbering decode_hex uses for errors.
inline SubstitutionReport apply_substitution(std::string& text, Substitution rule) {
  SubstitutionReport report{rule, {}};
  std::size_t position = 0;
  for (char& c : text) {
    if (detail::is_blank(c)) continue;
    ++position;
    if (c == rule.from) {
      c = rule.to;
      report.digit_positions.push_back(position);
    }
  }
  return report;
}

}  // namespace gsetkit

#endif  // GSETKIT_SPIN_CODEC_HPP
