#ifndef GSETKIT_METRICS_HPP
#define GSETKIT_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "gsetkit/error.hpp"
#include "gsetkit/kv.hpp"

// Time-to-target arithmetic for stochastic solvers:
//
//   P_s  = successes / trials
//   r    = max(1, ln(1 - confidence) / ln(1 - P_s))     (real, never ceiled)
//   STT  = S_trial * r
//   TTT  = t_trial * r
//
// P_s = 0 has no finite r; it is reported as "unreachable" (std::nullopt).

namespace gsetkit {

inline constexpr double kDefaultConfidence = 0.99;
inline constexpr double kDefaultSweepTimeSeconds = 2e-9;

struct TargetSpec {
  std::string label;
  double target_cut = 0.0;  // a trial succeeds iff best_cut >= target_cut
  double confidence = kDefaultConfidence;

  void validate() const {
    if (!(confidence > 0.0 && confidence < 1.0)) {
      throw Error(ErrorCode::domain, "confidence must lie in (0,1), got " + kv::format_double(confidence));
    }
  }

  bool reached_by(std::int64_t cut) const noexcept { return static_cast<double>(cut) >= target_cut; }
};

struct CampaignStats {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t sweeps_per_trial = 0;
  double avg_trial_time_s = 0.0;
};

inline double success_probability(const CampaignStats& stats) {
  if (stats.trials == 0) throw Error(ErrorCode::domain, "success probability needs at least one trial");
  if (stats.successes > stats.trials) {
    throw Error(ErrorCode::domain, "successes (" + std::to_string(stats.successes) + ") exceed trials (" +
                                       std::to_string(stats.trials) + ")");
  }
  return static_cast<double>(stats.successes) / static_cast<double>(stats.trials);
}

/// Expected repetitions for at least one success with the given confidence.
/// Returns nullopt when p_s == 0 (target unreachable).
inline std::optional<double> repetitions_to_target(double p_s, double confidence = kDefaultConfidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw Error(ErrorCode::domain, "confidence must lie in (0,1), got " + kv::format_double(confidence));
  }
  if (!(p_s >= 0.0 && p_s <= 1.0)) {
    throw Error(ErrorCode::domain, "success probability must lie in [0,1], got " + kv::format_double(p_s));
  }
  if (p_s == 0.0) return std::nullopt;
  if (p_s == 1.0) return 1.0;
  return std::max(1.0, std::log1p(-confidence) / std::log1p(-p_s));
}

inline double sweeps_to_target(std::uint64_t sweeps_per_trial, double r) {
  if (!(r >= 1.0)) throw Error(ErrorCode::domain, "repetitions must be >= 1, got " + kv::format_double(r));
  return static_cast<double>(sweeps_per_trial) * r;
}

inline double time_to_target(double avg_trial_time_s, double r) {
  if (!(r >= 1.0)) throw Error(ErrorCode::domain, "repetitions must be >= 1, got " + kv::format_double(r));
  if (!(avg_trial_time_s > 0.0)) {
    throw Error(ErrorCode::domain, "average trial time must be positive, got " + kv::format_double(avg_trial_time_s));
  }
  return avg_trial_time_s * r;
}

inline double project_hw_ttt(double stt, double sweep_time_s = kDefaultSweepTimeSeconds) {
  if (!(stt >= 0.0)) throw Error(ErrorCode::domain, "sweeps-to-target must be nonnegative");
  if (!(sweep_time_s >= 0.0)) throw Error(ErrorCode::domain, "sweep time must be nonnegative");
  return stt * sweep_time_s;
}

inline double speedup(double reference_ttt_s, double measured_ttt_s) {
  if (!(reference_ttt_s > 0.0) || !(measured_ttt_s > 0.0)) {
    throw Error(ErrorCode::domain, "speedup needs two positive times");
  }
  return reference_ttt_s / measured_ttt_s;
}

/// Human-readable duration with three significant figures, e.g. "0.468 ms".
/// Seconds at or above 1 s, milliseconds down to 0.1 ms, then us, then ns.
inline std::string format_duration(double seconds) {
  const char* unit = "s";
  double value = seconds;
  if (seconds == 0.0) {
    unit = "s";
  } else if (seconds < 1e-7) {
    value = seconds * 1e9;
    unit = "ns";
  } else if (seconds < 1e-4) {
    value = seconds * 1e6;
    unit = "us";
  } else if (seconds < 1.0) {
    value = seconds * 1e3;
    unit = "ms";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g %s", value, unit);
  return buf;
}

/// One target evaluated over a campaign.
struct MetricsRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  TargetSpec target;
  CampaignStats stats;
  std::optional<double> r;  // nullopt: unreachable
  std::optional<double> stt;
  std::optional<double> ttt_s;
  std::optional<double> projected_hw_ttt_s;
  std::optional<double> reference_ttt_s;
  std::optional<double> speedup_vs_reference;

  double p_s() const { return success_probability(stats); }
};

inline MetricsRow compute_metrics_row(std::string instance, std::size_t n, std::size_t m, TargetSpec target,
                                      CampaignStats stats, std::optional<double> reference_ttt_s = std::nullopt,
                                      double sweep_time_s = kDefaultSweepTimeSeconds) {
  target.validate();
  MetricsRow row{std::move(instance), n, m, std::move(target), stats, {}, {}, {}, {}, reference_ttt_s, {}};
  row.r = repetitions_to_target(success_probability(stats), row.target.confidence);
  if (row.r) {
    row.stt = sweeps_to_target(stats.sweeps_per_trial, *row.r);
    row.projected_hw_ttt_s = project_hw_ttt(*row.stt, sweep_time_s);
    if (stats.avg_trial_time_s > 0.0) row.ttt_s = time_to_target(stats.avg_trial_time_s, *row.r);
    if (reference_ttt_s && row.ttt_s) row.speedup_vs_reference = speedup(*reference_ttt_s, *row.ttt_s);
  }
  return row;
}

namespace detail {

inline std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string opt_field(const std::optional<double>& v, const char* missing) {
  return v ? kv::format_double(*v) : std::string(missing);
}

}  // namespace detail

inline std::string metrics_csv_header() {
  return "instance,n,m,target,target_cut,confidence,sweeps_per_trial,successes,trials,p_s,r,stt,"
         "ttt_s,projected_hw_ttt_s,reference_ttt_s,speedup";
}

inline std::string metrics_csv_row(const MetricsRow& row) {
  const char* unreachable = "unreachable";
  std::string out;
  out += detail::csv_field(row.instance) + ',';
  out += std::to_string(row.n) + ',' + std::to_string(row.m) + ',';
  out += detail::csv_field(row.target.label) + ',';
  out += kv::format_double(row.target.target_cut) + ',';
  out += kv::format_double(row.target.confidence) + ',';
  out += std::to_string(row.stats.sweeps_per_trial) + ',';
  out += std::to_string(row.stats.successes) + ',' + std::to_string(row.stats.trials) + ',';
  out += kv::format_double(row.p_s()) + ',';
  out += detail::opt_field(row.r, unreachable) + ',';
  out += detail::opt_field(row.stt, unreachable) + ',';
  out += detail::opt_field(row.ttt_s, row.r ? "" : unreachable) + ',';
  out += detail::opt_field(row.projected_hw_ttt_s, unreachable) + ',';
  out += detail::opt_field(row.reference_ttt_s, "") + ',';
  out += detail::opt_field(row.speedup_vs_reference, "");
  return out;
}

}  // namespace gsetkit

#endif  // GSETKIT_METRICS_HPP
