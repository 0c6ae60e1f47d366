#ifndef GSETKIT_CAMPAIGN_HPP
#define GSETKIT_CAMPAIGN_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gsetkit/error.hpp"
#include "gsetkit/evaluator.hpp"
#include "gsetkit/instance.hpp"
#include "gsetkit/kv.hpp"
#include "gsetkit/metrics.hpp"
#include "gsetkit/rng.hpp"
#include "gsetkit/solver.hpp"
#include "gsetkit/spin_codec.hpp"

namespace gsetkit {

struct CampaignConfig {
  std::string instance_name;
  SolverConfig solver;  // seed is replaced per trial
  std::uint64_t num_trials = 100;
  std::uint64_t master_seed = 0;
  std::vector<TargetSpec> targets;
  std::vector<std::uint64_t> sweep_scan;
  unsigned workers = 1;
  bool log_spins = false;

  void validate() const {
    if (num_trials < 1) throw Error(ErrorCode::config, "num_trials must be >= 1");
    if (workers < 1) throw Error(ErrorCode::config, "workers must be >= 1");
    SolverConfig probe = solver;
    probe.validate();
    for (const auto& t : targets) t.validate();
    for (std::size_t i = 0; i < sweep_scan.size(); ++i) {
      if (sweep_scan[i] < 1) throw Error(ErrorCode::config, "sweep_scan entries must be positive");
      if (i > 0 && sweep_scan[i] <= sweep_scan[i - 1]) {
        throw Error(ErrorCode::config, "sweep_scan entries must be strictly increasing");
      }
    }
  }

  SolverConfig trial_config(std::uint64_t trial_index) const {
    SolverConfig c = solver;
    c.seed = derive_trial_seed(master_seed, trial_index);
    return c;
  }
};

/// One line of the trial log. Carries everything needed to re-run the
/// trial: instance name, full solver config including the trial seed.
struct TrialRecord {
  std::string instance;
  std::uint64_t trial = 0;
  SolverConfig solver;
  Weight best_cut = 0;
  std::uint64_t sweeps_executed = 0;
  double wall_time_s = 0.0;
  std::optional<std::string> spins_hex;

  std::string to_line() const {
    kv::Record rec;
    rec.add("instance", instance)
        .add("trial", trial)
        .add("kind", to_string(solver.kind))
        .add("sweeps", solver.sweeps)
        .add("seed", solver.seed);
    if (solver.kind == SolverKind::simulated_annealing) {
      rec.add("temp_start", solver.temp_start).add("temp_end", solver.temp_end);
    }
    rec.add("best_cut", best_cut).add("sweeps_executed", sweeps_executed).add("wall_time_s", wall_time_s);
    if (spins_hex) rec.add("spins", *spins_hex);
    return rec.str();
  }

  static TrialRecord parse_line(std::string_view line) {
    const kv::Record rec = kv::parse(line);
    TrialRecord r;
    r.instance = std::string(rec.get("instance"));
    r.trial = kv::to_int<std::uint64_t>(rec.get("trial"), "trial");
    r.solver.kind = parse_solver_kind(rec.get("kind"));
    r.solver.sweeps = kv::to_int<std::uint64_t>(rec.get("sweeps"), "sweeps");
    r.solver.seed = kv::to_int<std::uint64_t>(rec.get("seed"), "seed");
    if (auto v = rec.find("temp_start")) r.solver.temp_start = kv::to_double(*v, "temp_start");
    if (auto v = rec.find("temp_end")) r.solver.temp_end = kv::to_double(*v, "temp_end");
    r.best_cut = kv::to_int<Weight>(rec.get("best_cut"), "best_cut");
    r.sweeps_executed = kv::to_int<std::uint64_t>(rec.get("sweeps_executed"), "sweeps_executed");
    r.wall_time_s = kv::to_double(rec.get("wall_time_s"), "wall_time_s");
    if (auto v = rec.find("spins")) r.spins_hex = std::string(*v);
    return r;
  }
};

inline TrialRecord make_record(const std::string& instance, std::uint64_t trial, const SolverConfig& config,
                               const TrialResult& result, bool with_spins) {
  TrialRecord r{instance, trial, config, result.best_cut, result.sweeps_executed, result.wall_time_s, {}};
  if (with_spins) r.spins_hex = encode_hex(result.best_spins);
  return r;
}

/// Re-runs a logged trial from its record alone.
inline TrialResult replay(const ProblemInstance& instance, const TrialRecord& record) {
  return run_trial(instance, record.solver);
}

inline std::vector<TrialRecord> read_trial_log(std::string_view text) {
  std::vector<TrialRecord> out;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    try {
      out.push_back(TrialRecord::parse_line(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::config, "log line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<TrialRecord> read_trial_log_file(const std::filesystem::path& path) {
  return read_trial_log(read_text_file(path));
}

struct TargetOutcome {
  TargetSpec target;
  std::uint64_t successes = 0;
  double p_s = 0.0;
  std::optional<double> r;  // nullopt: unreachable
  std::optional<double> stt;
  std::optional<double> ttt_s;

  friend bool operator==(const TargetOutcome& a, const TargetOutcome& b) {
    return a.target.label == b.target.label && a.target.target_cut == b.target.target_cut &&
           a.target.confidence == b.target.confidence && a.successes == b.successes && a.p_s == b.p_s &&
           a.r == b.r && a.stt == b.stt;
  }
};

struct CampaignSummary {
  std::string instance;
  std::uint64_t trials = 0;
  std::uint64_t sweeps_per_trial = 0;
  std::vector<TargetOutcome> targets;
  Weight highest_cut = 0;
  Weight min_cut = 0;
  double average_cut = 0.0;
  std::map<Weight, std::uint64_t> cut_histogram;
  double avg_trial_time_s = 0.0;

  // Everything except the timing-derived fields.
  bool same_outcome(const CampaignSummary& o) const {
    return instance == o.instance && trials == o.trials && sweeps_per_trial == o.sweeps_per_trial &&
           targets == o.targets && highest_cut == o.highest_cut && min_cut == o.min_cut &&
           average_cut == o.average_cut && cut_histogram == o.cut_histogram;
  }
};

namespace detail {

struct TrialOutcome {
  std::uint64_t trial;
  Weight best_cut;
  double wall_time_s;
};

inline CampaignSummary summarize_outcomes(std::string instance, std::vector<TrialOutcome> outcomes,
                                          std::uint64_t sweeps_per_trial, std::span<const TargetSpec> targets) {
  if (outcomes.empty()) throw Error(ErrorCode::invalid_argument, "cannot summarize zero trials");
  std::stable_sort(outcomes.begin(), outcomes.end(),
                   [](const TrialOutcome& a, const TrialOutcome& b) { return a.trial < b.trial; });
  CampaignSummary s;
  s.instance = std::move(instance);
  s.trials = outcomes.size();
  s.sweeps_per_trial = sweeps_per_trial;
  s.highest_cut = outcomes.front().best_cut;
  s.min_cut = outcomes.front().best_cut;
  Weight sum = 0;
  double time_sum = 0.0;
  for (const auto& o : outcomes) {
    s.highest_cut = std::max(s.highest_cut, o.best_cut);
    s.min_cut = std::min(s.min_cut, o.best_cut);
    sum += o.best_cut;
    time_sum += o.wall_time_s;
    ++s.cut_histogram[o.best_cut];
  }
  s.average_cut = static_cast<double>(sum) / static_cast<double>(s.trials);
  s.avg_trial_time_s = time_sum / static_cast<double>(s.trials);

  for (const auto& target : targets) {
    target.validate();
    TargetOutcome t;
    t.target = target;
    for (const auto& o : outcomes) t.successes += target.reached_by(o.best_cut) ? 1 : 0;
    CampaignStats stats{s.trials, t.successes, sweeps_per_trial, s.avg_trial_time_s};
    t.p_s = success_probability(stats);
    t.r = repetitions_to_target(t.p_s, target.confidence);
    if (t.r) {
      t.stt = sweeps_to_target(sweeps_per_trial, *t.r);
      if (s.avg_trial_time_s > 0.0) t.ttt_s = time_to_target(s.avg_trial_time_s, *t.r);
    }
    s.targets.push_back(std::move(t));
  }
  return s;
}

}  // namespace detail

/// Aggregates logged trials. All records must share one sweep budget.
inline CampaignSummary summarize(std::span<const TrialRecord> records, std::span<const TargetSpec> targets) {
  if (records.empty()) throw Error(ErrorCode::invalid_argument, "cannot summarize zero trials");
  std::vector<detail::TrialOutcome> outcomes;
  outcomes.reserve(records.size());
  for (const auto& r : records) {
    if (r.solver.sweeps != records.front().solver.sweeps) {
      throw Error(ErrorCode::config, "records mix sweep budgets " + std::to_string(records.front().solver.sweeps) +
                                         " and " + std::to_string(r.solver.sweeps));
    }
    outcomes.push_back({r.trial, r.best_cut, r.wall_time_s});
  }
  return detail::summarize_outcomes(records.front().instance, std::move(outcomes), records.front().solver.sweeps,
                                    targets);
}

inline CampaignSummary summarize(std::span<const TrialResult> results, std::uint64_t sweeps_per_trial,
                                 std::span<const TargetSpec> targets, std::string instance = {}) {
  std::vector<detail::TrialOutcome> outcomes;
  outcomes.reserve(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    outcomes.push_back({i, results[i].best_cut, results[i].wall_time_s});
  }
  return detail::summarize_outcomes(std::move(instance), std::move(outcomes), sweeps_per_trial, targets);
}

struct CampaignRun {
  CampaignSummary summary;
  std::vector<TrialRecord> records;  // ordered by trial index
  std::uint64_t resumed = 0;         // trials taken from an existing log
};

/// Runs num_trials independent trials on up to `workers` threads. Trial i
/// uses seed derive_trial_seed(master_seed, i). With a log path, each
/// finished trial is appended and flushed as one line; trials already in
/// the log (same instance and solver settings) are not run again.
inline CampaignRun run_campaign(const ProblemInstance& instance, const CampaignConfig& config,
                                const std::optional<std::filesystem::path>& log_path = std::nullopt) {
  config.validate();
  const std::string name = config.instance_name.empty() ? instance.name() : config.instance_name;

  std::vector<std::optional<TrialRecord>> slots(config.num_trials);
  std::uint64_t resumed = 0;
  if (log_path && std::filesystem::exists(*log_path)) {
    for (auto& rec : read_trial_log_file(*log_path)) {
      if (rec.trial >= config.num_trials) continue;
      const SolverConfig expected = config.trial_config(rec.trial);
      if (rec.instance != name || !(rec.solver == expected)) {
        throw Error(ErrorCode::config, "existing log '" + log_path->string() + "' has trial " +
                                           std::to_string(rec.trial) + " from a different campaign");
      }
      if (!slots[rec.trial]) ++resumed;
      slots[rec.trial] = std::move(rec);
    }
  }

  std::ofstream log;
  if (log_path) {
    log.open(*log_path, std::ios::app);
    if (!log) throw Error(ErrorCode::io, "cannot open log '" + log_path->string() + "' for append");
  }

  std::vector<std::uint64_t> pending;
  for (std::uint64_t i = 0; i < config.num_trials; ++i) {
    if (!slots[i]) pending.push_back(i);
  }

  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  bool io_failed = false;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= pending.size()) return;
      const std::uint64_t trial = pending[k];
      const SolverConfig trial_config = config.trial_config(trial);
      const TrialResult result = run_trial(instance, trial_config);
      TrialRecord rec = make_record(name, trial, trial_config, result, config.log_spins);
      std::lock_guard lock(mutex);
      if (log.is_open()) {
        log << rec.to_line() << '\n';
        log.flush();
        if (!log) io_failed = true;
      }
      slots[trial] = std::move(rec);
    }
  };

  const unsigned threads = std::min<std::size_t>(config.workers, std::max<std::size_t>(pending.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (io_failed) throw Error(ErrorCode::io, "write to log '" + log_path->string() + "' failed");

  CampaignRun run;
  run.resumed = resumed;
  run.records.reserve(slots.size());
  for (auto& s : slots) run.records.push_back(std::move(*s));
  run.summary = summarize(run.records, config.targets);
  return run;
}

struct ScanRow {
  std::uint64_t sweeps = 0;
  Weight highest_cut = 0;
  double average_cut = 0.0;
  CampaignSummary summary;
};

/// One full campaign per ladder rung. Every rung reuses the same per-trial
/// seeds, so trial i at a longer budget replays the shorter one's visiting
/// order and initial state.
inline std::vector<ScanRow> sweep_scan(const ProblemInstance& instance, const CampaignConfig& config) {
  if (config.sweep_scan.empty()) throw Error(ErrorCode::invalid_argument, "sweep_scan ladder is empty");
  config.validate();
  std::vector<ScanRow> rows;
  for (const std::uint64_t sweeps : config.sweep_scan) {
    CampaignConfig rung = config;
    rung.solver.sweeps = sweeps;
    auto run = run_campaign(instance, rung);
    rows.push_back({sweeps, run.summary.highest_cut, run.summary.average_cut, std::move(run.summary)});
  }
  return rows;
}

inline std::string scan_csv(std::span<const ScanRow> rows) {
  std::string out = "sweeps,highest_cut,average_cut\n";
  for (const auto& r : rows) {
    out += std::to_string(r.sweeps) + "," + std::to_string(r.highest_cut) + "," +
           kv::format_double(r.average_cut) + "\n";
  }
  return out;
}

/// Metrics CSV: one row per target, followed by the campaign's cut
/// extremes. reference_ttt_s applies to every target when given.
inline std::string summary_csv(const CampaignSummary& s, std::size_t n, std::size_t m,
                               std::optional<double> reference_ttt_s = std::nullopt,
                               double sweep_time_s = kDefaultSweepTimeSeconds) {
  std::string out = metrics_csv_header() + ",highest_cut,average_cut,min_cut,avg_trial_time_s\n";
  const std::string tail = "," + std::to_string(s.highest_cut) + "," + kv::format_double(s.average_cut) + "," +
                           std::to_string(s.min_cut) + "," + kv::format_double(s.avg_trial_time_s) + "\n";
  for (const auto& t : s.targets) {
    CampaignStats stats{s.trials, t.successes, s.sweeps_per_trial, s.avg_trial_time_s};
    MetricsRow row = compute_metrics_row(s.instance, n, m, t.target, stats, reference_ttt_s, sweep_time_s);
    out += metrics_csv_row(row) + tail;
  }
  if (s.targets.empty()) {
    out += detail::csv_field(s.instance) + "," + std::to_string(n) + "," + std::to_string(m) + ",,,," +
           std::to_string(s.sweeps_per_trial) + ",," + std::to_string(s.trials) + ",,,,,,," + tail;
  }
  return out;
}

inline std::string histogram_csv(const CampaignSummary& s, std::optional<Weight> best_known = std::nullopt) {
  std::string out = best_known ? "cut,count,quality\n" : "cut,count\n";
  for (const auto& [cut, count] : s.cut_histogram) {
    out += std::to_string(cut) + "," + std::to_string(count);
    if (best_known) out += "," + kv::format_double(solution_quality(cut, *best_known));
    out += "\n";
  }
  return out;
}

}  // namespace gsetkit

#endif  // GSETKIT_CAMPAIGN_HPP
