#ifndef GSETKIT_CAMPAIGN_FILE_HPP
#define GSETKIT_CAMPAIGN_FILE_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsetkit/campaign.hpp"
#include "gsetkit/error.hpp"
#include "gsetkit/instance.hpp"
#include "gsetkit/kv.hpp"
#include "gsetkit/registry.hpp"

// Declarative campaign description, one `key = value` per line, '#'
// comments. Recognised keys:
//
//   instance        path to a Gset file (relative to the config file)
//   torus           RxC:seed, a generated instance instead of a file
//   instance_name   name used in logs (defaults to file stem / torus name)
//   solver          greedy_local_search | simulated_annealing (or greedy | sa)
//   sweeps          sweeps per trial
//   temp_start, temp_end
//   trials          number of trials
//   master_seed
//   workers
//   confidence      default confidence for targets below (0.99)
//   target          "<label> <cut>"; repeatable
//   target_quality  fraction of best_known, e.g. 0.999; repeatable
//   best_known      overrides the registry's best-known cut
//   sweep_scan      comma-separated increasing ladder, e.g. 10,30,100
//   log_spins       true | false

namespace gsetkit {

struct CampaignFile {
  CampaignConfig config;
  std::optional<std::filesystem::path> instance_path;
  std::optional<TorusSpec> torus;
  std::vector<double> target_qualities;
  std::optional<Weight> best_known;
  double confidence = kDefaultConfidence;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline TorusSpec parse_torus_spec(std::string_view text) {
  const auto x = text.find('x');
  const auto colon = text.find(':');
  if (x == std::string_view::npos) throw Error(ErrorCode::config, "torus must look like RxC[:seed]");
  TorusSpec spec;
  spec.rows = kv::to_int<std::size_t>(text.substr(0, x), "torus rows");
  spec.cols = kv::to_int<std::size_t>(text.substr(x + 1, colon == std::string_view::npos ? colon : colon - x - 1),
                                      "torus cols");
  if (colon != std::string_view::npos) spec.seed = kv::to_int<std::uint64_t>(text.substr(colon + 1), "torus seed");
  return spec;
}

}  // namespace detail

inline CampaignFile parse_campaign_file(std::string_view text, const std::filesystem::path& base_dir = {}) {
  CampaignFile f;
  f.config.solver = default_config(SolverKind::simulated_annealing, 1000, 0);
  // Targets are resolved after all lines are read, so confidence may come later.
  std::vector<std::pair<std::string, double>> explicit_targets;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::config, "campaign line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    try {
      if (key == "instance") {
        f.instance_path = base_dir / std::filesystem::path(std::string(value));
      } else if (key == "torus") {
        f.torus = detail::parse_torus_spec(value);
      } else if (key == "instance_name") {
        f.config.instance_name = std::string(value);
      } else if (key == "solver") {
        f.config.solver.kind = parse_solver_kind(value);
      } else if (key == "sweeps") {
        f.config.solver.sweeps = kv::to_int<std::uint64_t>(value, key);
      } else if (key == "temp_start") {
        f.config.solver.temp_start = kv::to_double(value, key);
      } else if (key == "temp_end") {
        f.config.solver.temp_end = kv::to_double(value, key);
      } else if (key == "trials") {
        f.config.num_trials = kv::to_int<std::uint64_t>(value, key);
      } else if (key == "master_seed") {
        f.config.master_seed = kv::to_int<std::uint64_t>(value, key);
      } else if (key == "workers") {
        f.config.workers = kv::to_int<unsigned>(value, key);
      } else if (key == "confidence") {
        f.confidence = kv::to_double(value, key);
      } else if (key == "target") {
        const auto space = value.find_last_of(" \t");
        if (space == std::string_view::npos) throw Error(ErrorCode::config, "target needs '<label> <cut>'");
        explicit_targets.emplace_back(std::string(detail::trim(value.substr(0, space))),
                                      kv::to_double(value.substr(space + 1), "target cut"));
      } else if (key == "target_quality") {
        f.target_qualities.push_back(kv::to_double(value, key));
      } else if (key == "best_known") {
        f.best_known = kv::to_int<Weight>(value, key);
      } else if (key == "sweep_scan") {
        std::string_view rest = value;
        while (!rest.empty()) {
          const auto comma = rest.find(',');
          f.config.sweep_scan.push_back(kv::to_int<std::uint64_t>(detail::trim(rest.substr(0, comma)), key));
          rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
      } else if (key == "log_spins") {
        if (value != "true" && value != "false") throw Error(ErrorCode::config, "log_spins must be true or false");
        f.config.log_spins = value == "true";
      } else {
        throw Error(ErrorCode::config, "unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::config, "campaign line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (f.instance_path && f.torus) throw Error(ErrorCode::config, "give either instance or torus, not both");
  for (auto& [label, cut] : explicit_targets) f.config.targets.push_back({label, cut, f.confidence});
  return f;
}

inline CampaignFile load_campaign_file(const std::filesystem::path& path) {
  return parse_campaign_file(read_text_file(path), path.parent_path());
}

/// Quality label used for fractional targets, e.g. 0.999 -> "99.9%".
inline std::string quality_label(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g%%", fraction * 100.0);
  return buf;
}

/// Turns target_quality entries into absolute cut thresholds using
/// best_known (explicit) or the registry row for the instance name.
inline void resolve_quality_targets(CampaignFile& f, const Registry& registry, const std::string& instance_name) {
  if (f.target_qualities.empty()) return;
  std::optional<Weight> best = f.best_known;
  if (!best) {
    if (const auto* entry = registry.find(instance_name)) best = entry->best_known_cut;
  }
  if (!best) {
    throw Error(ErrorCode::config, "target_quality needs a best-known cut for '" + instance_name +
                                       "' (set best_known or add a registry entry)");
  }
  for (double q : f.target_qualities) {
    f.config.targets.push_back({quality_label(q), q * static_cast<double>(*best), f.confidence});
  }
  f.target_qualities.clear();
}

}  // namespace gsetkit

#endif  // GSETKIT_CAMPAIGN_FILE_HPP
