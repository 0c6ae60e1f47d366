#ifndef GSETKIT_ORACLE_HPP
#define GSETKIT_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "gsetkit/error.hpp"
#include "gsetkit/evaluator.hpp"
#include "gsetkit/instance.hpp"
#include "gsetkit/spin_codec.hpp"

namespace gsetkit {

inline constexpr std::size_t kOracleMaxVertices = 24;

struct ExactCut {
  Weight cut = 0;
  SpinConfiguration config;
};

/// Exhaustive Max-Cut. Spin 1 is pinned to +1 (zero fields make the global
/// flip free), the remaining n-1 spins are walked in Gray-code order so each
/// step is one flip scored by flip_delta_cut. Ties go to the configuration
/// with the smallest bit string b_1..b_n read as a binary number (b_i = 1
/// for spin +1), i.e. the lexicographically smallest hex encoding.
inline ExactCut exact_max_cut(const ProblemInstance& instance) {
  const std::size_t n = instance.n();
  if (n > kOracleMaxVertices) {
    throw Error(ErrorCode::size_limit, "exhaustive search is limited to n <= " +
                                           std::to_string(kOracleMaxVertices) + ", got n=" + std::to_string(n));
  }
  SpinConfiguration config = SpinConfiguration::uniform(n, -1);
  config.flip(0);
  // code bit (n-1-i) holds b_i
  const auto bit_of = [n](std::size_t i) { return std::uint32_t{1} << (n - 1 - i); };
  std::uint32_t code = bit_of(0);

  Weight cut = cut_value(instance, config);
  Weight best_cut = cut;
  std::uint32_t best_code = code;

  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < steps; ++k) {
    const auto i = static_cast<Vertex>(1 + std::countr_zero(k));
    cut += flip_delta_cut(instance, config, i);
    config.flip(i);
    code ^= bit_of(i);
    if (cut > best_cut || (cut == best_cut && code < best_code)) {
      best_cut = cut;
      best_code = code;
    }
  }

  std::vector<Spin> spins(n);
  for (std::size_t i = 0; i < n; ++i) spins[i] = (best_code & bit_of(i)) ? Spin{1} : Spin{-1};
  return {best_cut, SpinConfiguration(std::move(spins))};
}

}  // namespace gsetkit

#endif  // GSETKIT_ORACLE_HPP
