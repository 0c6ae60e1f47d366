#ifndef GSETKIT_SOLVER_HPP
#define GSETKIT_SOLVER_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "gsetkit/error.hpp"
#include "gsetkit/evaluator.hpp"
#include "gsetkit/instance.hpp"
#include "gsetkit/kv.hpp"
#include "gsetkit/rng.hpp"
#include "gsetkit/spin_codec.hpp"

// Sweep-based stand-in solvers. A sweep visits every variable exactly once
// in a fresh random order; a trial is a fixed budget of sweeps followed by
// a readout of the best configuration seen.
//
// Each trial seed feeds three independent Xoshiro256 streams:
//   stream 1  initial spins (one coin per variable, in id order)
//   stream 2  visiting permutations (Fisher-Yates reshuffle per sweep)
//   stream 3  Metropolis acceptance draws (only consumed when dcut < 0)
// None of the streams depends on the sweep budget.

namespace gsetkit {

enum class SolverKind { greedy_local_search, simulated_annealing };

inline std::string_view to_string(SolverKind kind) {
  return kind == SolverKind::greedy_local_search ? "greedy_local_search" : "simulated_annealing";
}

inline SolverKind parse_solver_kind(std::string_view text) {
  if (text == "greedy_local_search" || text == "greedy") return SolverKind::greedy_local_search;
  if (text == "simulated_annealing" || text == "sa") return SolverKind::simulated_annealing;
  throw Error(ErrorCode::invalid_argument, "unknown solver kind '" + std::string(text) + "'");
}

inline constexpr double kDefaultTempStart = 3.0;
inline constexpr double kDefaultTempEnd = 0.05;

struct SolverConfig {
  SolverKind kind = SolverKind::simulated_annealing;
  std::uint64_t sweeps = 1;
  std::uint64_t seed = 0;
  double temp_start = kDefaultTempStart;
  double temp_end = kDefaultTempEnd;

  void validate() const {
    if (sweeps < 1) throw Error(ErrorCode::invalid_argument, "sweeps must be >= 1");
    if (kind == SolverKind::simulated_annealing && !(temp_end > 0.0 && temp_end < temp_start)) {
      throw Error(ErrorCode::invalid_argument, "annealing needs 0 < temp_end < temp_start, got " +
                                                   kv::format_double(temp_start) + " -> " +
                                                   kv::format_double(temp_end));
    }
  }

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

inline SolverConfig default_config(SolverKind kind, std::uint64_t sweeps, std::uint64_t seed) {
  return {kind, sweeps, seed, kDefaultTempStart, kDefaultTempEnd};
}

struct TrialResult {
  Weight best_cut = 0;
  SpinConfiguration best_spins;
  std::uint64_t sweeps_executed = 0;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
};

// Called after each completed sweep with (sweeps done, best cut so far).
using SweepObserver = std::function<void(std::uint64_t, Weight)>;

inline constexpr std::uint64_t kInitStream = 1;
inline constexpr std::uint64_t kPermutationStream = 2;
inline constexpr std::uint64_t kAcceptanceStream = 3;

namespace detail {

// Temperature for sweep index k of a budget of `sweeps`, geometric from
// temp_start (first sweep) to temp_end (last sweep).
inline double annealing_temperature(const SolverConfig& config, std::uint64_t k) {
  if (config.sweeps <= 1) return config.temp_start;
  const double frac = static_cast<double>(k) / static_cast<double>(config.sweeps - 1);
  return config.temp_start * std::pow(config.temp_end / config.temp_start, frac);
}

}  // namespace detail

inline TrialResult run_trial(const ProblemInstance& instance, const SolverConfig& config,
                             const SweepObserver& observer = {}) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = instance.n();

  Xoshiro256 init_rng(config.seed, kInitStream);
  Xoshiro256 perm_rng(config.seed, kPermutationStream);
  Xoshiro256 accept_rng(config.seed, kAcceptanceStream);

  std::vector<Spin> spins(n);
  for (auto& s : spins) s = init_rng.coin() ? Spin{1} : Spin{-1};

  Weight current = 0;
  for (const auto& e : instance.edges()) {
    if (spins[e.u] != spins[e.v]) current += e.w;
  }
  Weight best = current;
  std::vector<Spin> best_spins = spins;

  auto delta = [&](Vertex k) {
    Weight aligned = 0;
    for (const auto& nb : instance.neighbors(k)) aligned += nb.w * spins[nb.vertex];
    return aligned * spins[k];
  };
  auto accept = [&](Vertex k, Weight d) {
    spins[k] = static_cast<Spin>(-spins[k]);
    current += d;
    if (current > best) {
      best = current;
      best_spins = spins;
    }
  };

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});

  std::uint64_t executed = 0;
  for (std::uint64_t sweep = 0; sweep < config.sweeps; ++sweep) {
    shuffle(std::span<Vertex>(order), perm_rng);
    std::size_t flips = 0;
    if (config.kind == SolverKind::greedy_local_search) {
      for (const Vertex k : order) {
        const Weight d = delta(k);
        if (d > 0) {
          accept(k, d);
          ++flips;
        }
      }
    } else {
      const double temperature = detail::annealing_temperature(config, sweep);
      for (const Vertex k : order) {
        const Weight d = delta(k);
        if (d >= 0 || accept_rng.uniform01() < std::exp(static_cast<double>(d) / temperature)) {
          accept(k, d);
          ++flips;
        }
      }
    }
    ++executed;
    if (observer) observer(executed, best);
    if (config.kind == SolverKind::greedy_local_search && flips == 0) break;
  }

  TrialResult result;
  result.best_cut = best;
  result.best_spins = SpinConfiguration(std::move(best_spins));
  result.sweeps_executed = executed;
  result.seed = config.seed;
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace gsetkit

#endif  // GSETKIT_SOLVER_HPP
