#ifndef GSETKIT_EVALUATOR_HPP
#define GSETKIT_EVALUATOR_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "gsetkit/error.hpp"
#include "gsetkit/instance.hpp"
#include "gsetkit/kv.hpp"
#include "gsetkit/spin_codec.hpp"

namespace gsetkit {

namespace detail {

inline void check_length(const ProblemInstance& instance, const SpinConfiguration& config) {
  if (config.size() != instance.n()) {
    throw Error(ErrorCode::size_mismatch, "configuration has " + std::to_string(config.size()) +
                                              " spins, instance '" + instance.name() + "' has " +
                                              std::to_string(instance.n()) + " vertices");
  }
}

}  // namespace detail

/// Weighted Max-Cut objective: sum of w_uv over edges whose endpoints
/// disagree. Exact integer arithmetic.
inline Weight cut_value(const ProblemInstance& instance, const SpinConfiguration& config) {
  detail::check_length(instance, config);
  Weight cut = 0;
  for (const auto& e : instance.edges()) {
    if (config[e.u] != config[e.v]) cut += e.w;
  }
  return cut;
}

/// Ising energy with J = -w and zero fields: sum over edges of w_uv s_u s_v.
/// Always equals total_weight - 2 * cut_value.
inline Weight ising_energy(const ProblemInstance& instance, const SpinConfiguration& config) {
  detail::check_length(instance, config);
  Weight energy = 0;
  for (const auto& e : instance.edges()) {
    energy += e.w * config[e.u] * config[e.v];
  }
  return energy;
}

/// Change in cut from flipping spin k (0-based), from k's neighbours only.
inline Weight flip_delta_cut(const ProblemInstance& instance, const SpinConfiguration& config, Vertex k) {
  detail::check_length(instance, config);
  if (k >= instance.n()) {
    throw Error(ErrorCode::vertex_out_of_range,
                "vertex " + std::to_string(std::size_t{k} + 1) + " outside [1," + std::to_string(instance.n()) + "]");
  }
  Weight aligned = 0;
  for (const auto& nb : instance.neighbors(k)) aligned += nb.w * config[nb.vertex];
  return aligned * config[k];
}

inline double solution_quality(Weight cut, Weight best_known) {
  if (best_known <= 0) {
    throw Error(ErrorCode::domain, "best-known cut must be positive, got " + std::to_string(best_known));
  }
  return static_cast<double>(cut) / static_cast<double>(best_known);
}

// "99.986%": three decimals in percent.
inline std::string format_quality_percent(double quality) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f%%", quality * 100.0);
  return buf;
}

struct EvaluationReport {
  std::string instance;
  std::size_t n = 0;
  Weight cut = 0;
  Weight energy = 0;
  std::optional<double> quality;  // only when a best-known cut is available

  kv::Record to_record() const {
    kv::Record rec;
    rec.add("instance", instance).add("n", n).add("cut", cut).add("energy", energy);
    if (quality) {
      rec.add("quality", *quality).add("quality_pct", format_quality_percent(*quality));
    }
    return rec;
  }
};

inline EvaluationReport evaluate(const ProblemInstance& instance, const SpinConfiguration& config,
                                 std::optional<Weight> best_known = std::nullopt) {
  EvaluationReport report;
  report.instance = instance.name();
  report.n = instance.n();
  report.cut = cut_value(instance, config);
  report.energy = ising_energy(instance, config);
  if (best_known) report.quality = solution_quality(report.cut, *best_known);
  return report;
}

}  // namespace gsetkit

#endif  // GSETKIT_EVALUATOR_HPP
