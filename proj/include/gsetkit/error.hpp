#ifndef GSETKIT_ERROR_HPP
#define GSETKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsetkit {

// Every failure the toolkit reports carries one of these codes so callers
// (and the CLI) can tell diagnostics apart without parsing messages.
enum class ErrorCode {
  malformed_token,
  edge_count_mismatch,
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  invalid_argument,
  invalid_hex_char,
  hex_length_mismatch,
  nonzero_padding,
  size_mismatch,
  size_limit,
  domain,
  io,
  config,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_token: return "malformed_token";
    case ErrorCode::edge_count_mismatch: return "edge_count_mismatch";
    case ErrorCode::self_loop: return "self_loop";
    case ErrorCode::duplicate_edge: return "duplicate_edge";
    case ErrorCode::vertex_out_of_range: return "vertex_out_of_range";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::invalid_hex_char: return "invalid_hex_char";
    case ErrorCode::hex_length_mismatch: return "hex_length_mismatch";
    case ErrorCode::nonzero_padding: return "nonzero_padding";
    case ErrorCode::size_mismatch: return "size_mismatch";
    case ErrorCode::size_limit: return "size_limit";
    case ErrorCode::domain: return "domain";
    case ErrorCode::io: return "io";
    case ErrorCode::config: return "config";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gsetkit

#endif  // GSETKIT_ERROR_HPP
