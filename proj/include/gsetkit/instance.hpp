#ifndef GSETKIT_INSTANCE_HPP
#define GSETKIT_INSTANCE_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gsetkit/error.hpp"
#include "gsetkit/rng.hpp"

namespace gsetkit {

using Weight = std::int64_t;
using Vertex = std::uint32_t;

// Vertices are 0-based inside the library; the Gset text format, solution
// files and CLI speak 1-based ids.
struct Edge {
  Vertex u;
  Vertex v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex;
  Weight w;
};

/// Undirected weighted graph with a CSR adjacency index. Immutable once
/// built; share freely between threads.
///
/// Invariants: u < v < n for every edge, no duplicate pairs, adjacency is
/// the symmetric closure of the edge list, total_weight is the edge sum.
/// Local fields are identically zero and are not stored; the Ising
/// couplings are J = -w.
class ProblemInstance {
 public:
  static ProblemInstance from_edges(std::string name, std::size_t n, std::vector<Edge> edges) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "vertex count must be positive");
    if (n > std::size_t{UINT32_MAX}) throw Error(ErrorCode::invalid_argument, "vertex count too large");

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw Error(ErrorCode::vertex_out_of_range,
                    "edge (" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                        ") outside [1," + std::to_string(n) + "]");
      }
      if (e.u == e.v) {
        throw Error(ErrorCode::self_loop, "self-loop on vertex " + std::to_string(e.u + 1));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
      const std::uint64_t key = std::uint64_t{e.u} * n + e.v;
      if (!seen.insert(key).second) {
        throw Error(ErrorCode::duplicate_edge, "duplicate edge (" + std::to_string(e.u + 1) + "," +
                                                   std::to_string(e.v + 1) + ")");
      }
    }
    return ProblemInstance(std::move(name), n, std::move(edges));
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  Weight total_weight() const noexcept { return total_weight_; }

  std::span<const Neighbor> neighbors(Vertex k) const noexcept {
    return {adjacency_.data() + offsets_[k], adjacency_.data() + offsets_[k + 1]};
  }
  std::size_t degree(Vertex k) const noexcept { return offsets_[k + 1] - offsets_[k]; }

  // Same graph: vertex count and edge list (order included). Names differ
  // freely between a file and its in-memory copy.
  friend bool operator==(const ProblemInstance& a, const ProblemInstance& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  ProblemInstance(std::string name, std::size_t n, std::vector<Edge> edges)
      : name_(std::move(name)), n_(n), edges_(std::move(edges)), offsets_(n + 1, 0) {
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
      total_weight_ += e.w;
    }
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(offsets_[n_]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      adjacency_[cursor[e.u]++] = {e.v, e.w};
      adjacency_[cursor[e.v]++] = {e.u, e.w};
    }
  }

  std::string name_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  Weight total_weight_ = 0;
};

inline Weight total_weight(const ProblemInstance& instance) noexcept {
  return instance.total_weight();
}

namespace detail {

// Whitespace tokenizer that remembers the line of each token for diagnostics.
class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& token) {
    while (pos_ < text_.size() && is_space(text_[pos_])) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
    if (pos_ >= text_.size()) return false;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    token = text_.substr(start, pos_ - start);
    token_line_ = line_;
    return true;
  }

  std::size_t line() const noexcept { return token_line_; }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t token_line_ = 1;
};

inline std::int64_t parse_integer(std::string_view token, std::size_t line, const char* what) {
  std::int64_t value{};
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || first == token.data() + token.size()) {
    throw Error(ErrorCode::malformed_token, "line " + std::to_string(line) + ": " + what +
                                                " is not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses the Gset text format: "n m" followed by exactly m "u v w" triples
/// with 1-based vertex ids. Any whitespace separates tokens.
inline ProblemInstance parse_gset(std::string_view text, std::string name = {}) {
  detail::TokenReader reader(text);
  std::string_view tok;
  if (!reader.next(tok)) throw Error(ErrorCode::malformed_token, "empty input, expected 'n m' header");
  const auto n = detail::parse_integer(tok, reader.line(), "vertex count");
  if (!reader.next(tok)) throw Error(ErrorCode::malformed_token, "missing edge count in header");
  const auto m = detail::parse_integer(tok, reader.line(), "edge count");
  if (n <= 0) throw Error(ErrorCode::invalid_argument, "vertex count must be positive, got " + std::to_string(n));
  if (m < 0) throw Error(ErrorCode::invalid_argument, "edge count must be nonnegative, got " + std::to_string(m));

  std::vector<Edge> edges;
  edges.reserve(std::min(static_cast<std::size_t>(m), text.size() / 6 + 1));
  for (std::int64_t k = 0; k < m; ++k) {
    std::int64_t field[3];
    std::size_t line = 0;
    for (int f = 0; f < 3; ++f) {
      if (!reader.next(tok)) {
        throw Error(ErrorCode::edge_count_mismatch, "header declares " + std::to_string(m) +
                                                        " edges, input ends after " + std::to_string(k));
      }
      if (f == 0) line = reader.line();
      field[f] = detail::parse_integer(tok, reader.line(), f == 2 ? "weight" : "vertex id");
    }
    const auto [u, v, w] = field;
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error(ErrorCode::vertex_out_of_range, "line " + std::to_string(line) + ": edge (" +
                                                      std::to_string(u) + "," + std::to_string(v) +
                                                      ") outside [1," + std::to_string(n) + "]");
    }
    if (u == v) {
      throw Error(ErrorCode::self_loop, "line " + std::to_string(line) + ": self-loop on vertex " +
                                            std::to_string(u));
    }
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
  }
  if (reader.next(tok)) {
    throw Error(ErrorCode::edge_count_mismatch, "line " + std::to_string(reader.line()) +
                                                    ": data after the declared " + std::to_string(m) +
                                                    " edges");
  }
  return ProblemInstance::from_edges(std::move(name), static_cast<std::size_t>(n), std::move(edges));
}

/// Canonical Gset text: single spaces, one edge per line, trailing newline.
inline std::string write_gset(const ProblemInstance& instance) {
  std::string out;
  out.reserve(16 + instance.m() * 16);
  out += std::to_string(instance.n());
  out += ' ';
  out += std::to_string(instance.m());
  out += '\n';
  for (const auto& e : instance.edges()) {
    out += std::to_string(e.u + 1);
    out += ' ';
    out += std::to_string(e.v + 1);
    out += ' ';
    out += std::to_string(e.w);
    out += '\n';
  }
  return out;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io, "read failed on '" + path.string() + "'");
  return buf.str();
}

inline ProblemInstance load_gset_file(const std::filesystem::path& path, std::string name = {}) {
  if (name.empty()) name = path.stem().string();
  return parse_gset(read_text_file(path), std::move(name));
}

// FNV-1a over the canonical serialization, so the value does not depend on
// how the file was wrapped or spaced.
inline std::string content_checksum(const ProblemInstance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : write_gset(instance)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

struct TorusSpec {
  std::size_t rows = 3;
  std::size_t cols = 3;
  std::uint64_t seed = 0;
};

/// Toroidal square grid with independent uniform +-1 weights.
///
/// Vertex (row, col), both 1-based, gets id (row - 1) * cols + col. Edges
/// are emitted vertex by vertex in id order: first the edge to the right
/// neighbour (col + 1, wrapping), then to the lower neighbour (row + 1,
/// wrapping), each stored with u < v. Weights come from Xoshiro256(seed),
/// one draw per edge in emission order, top bit set meaning +1.
inline ProblemInstance generate_torus(const TorusSpec& spec) {
  if (spec.rows < 3 || spec.cols < 3) {
    throw Error(ErrorCode::invalid_argument, "torus needs rows >= 3 and cols >= 3, got " +
                                                 std::to_string(spec.rows) + "x" + std::to_string(spec.cols));
  }
  const std::size_t n = spec.rows * spec.cols;
  Xoshiro256 rng(spec.seed);
  std::vector<Edge> edges;
  edges.reserve(2 * n);
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * spec.cols + c); };
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.cols; ++c) {
      const Vertex self = id(r, c);
      for (const Vertex other : {id(r, (c + 1) % spec.cols), id((r + 1) % spec.rows, c)}) {
        const Weight w = rng.coin() ? 1 : -1;
        edges.push_back({std::min(self, other), std::max(self, other), w});
      }
    }
  }
  std::string name = "torus_" + std::to_string(spec.rows) + "x" + std::to_string(spec.cols) + "_s" +
                     std::to_string(spec.seed);
  return ProblemInstance::from_edges(std::move(name), n, std::move(edges));
}

}  // namespace gsetkit

#endif  // GSETKIT_INSTANCE_HPP
