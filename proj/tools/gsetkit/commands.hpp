#ifndef GSETKIT_TOOLS_COMMANDS_HPP
#define GSETKIT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gsetkit/gsetkit.hpp"

// Subcommand bodies, kept apart from argument parsing so tests can drive
// them with string streams. Each returns the process exit status.

namespace gsetkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;   // ran fine, check did not pass
inline constexpr int kExitError = 2;  // bad input, I/O, usage

enum class Format { text, kv, csv };

inline Format parse_format(const std::string& text) {
  if (text == "kv") return Format::kv;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw Error(ErrorCode::invalid_argument, "format must be text, kv or csv, got '" + text + "'");
}

// "-" reads stdin, "torus:RxC:seed" generates, anything else is a path.
inline ProblemInstance load_instance(const std::string& source, const std::string& name_override = {},
                                     std::istream& in = std::cin) {
  ProblemInstance inst = [&] {
    if (source == "-") {
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return parse_gset(text, "stdin");
    }
    if (source.rfind("torus:", 0) == 0) return generate_torus(detail::parse_torus_spec(source.substr(6)));
    return load_gset_file(source);
  }();
  if (name_override.empty()) return inst;
  std::vector<Edge> edges(inst.edges().begin(), inst.edges().end());
  return ProblemInstance::from_edges(name_override, inst.n(), std::move(edges));
}

inline void print_record(std::ostream& out, const kv::Record& rec, Format format) {
  if (format != Format::csv) {
    out << rec.str() << '\n';
    return;
  }
  std::string header, row;
  for (const auto& [k, v] : rec.fields()) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += k;
    row += detail::csv_field(v);
  }
  out << header << '\n' << row << '\n';
}

struct ValidateOptions {
  std::string instance;
  std::string solution;
  std::string name;
  std::optional<Weight> expect_cut;
  std::optional<Weight> best_known;
  std::vector<std::string> substitutions;
  Format format = Format::kv;
};

inline int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err,
                        const Registry& registry = Registry::load_default()) {
  const ProblemInstance instance = load_instance(opt.instance, opt.name);
  SolutionText sol = parse_solution_text(read_text_file(opt.solution));
  if (sol.n && *sol.n != instance.n()) {
    throw Error(ErrorCode::size_mismatch, "solution header says n=" + std::to_string(*sol.n) + " but instance has n=" +
                                              std::to_string(instance.n()));
  }
  for (const auto& spec : opt.substitutions) {
    const SubstitutionReport rep = apply_substitution(sol.body, parse_substitution(spec));
    std::string positions;
    for (auto p : rep.digit_positions) positions += (positions.empty() ? "" : ",") + std::to_string(p);
    err << "substitution " << rep.rule.from << "=" << rep.rule.to << " replaced " << rep.digit_positions.size()
        << " character(s)" << (positions.empty() ? "" : " at digit positions " + positions) << '\n';
  }
  const SpinConfiguration config = decode_hex(sol.body, instance.n());

  std::optional<Weight> best = opt.best_known;
  if (!best) {
    if (const auto* entry = registry.find(instance.name())) best = entry->best_known_cut;
  }
  EvaluationReport report = evaluate(instance, config, best);
  kv::Record rec = report.to_record();
  rec.add("total_weight", instance.total_weight());
  bool ok = true;
  if (opt.expect_cut) {
    ok = report.cut == *opt.expect_cut;
    rec.add("expect_cut", *opt.expect_cut);
  }
  if (!opt.substitutions.empty()) {
    std::string joined;
    for (const auto& s : opt.substitutions) joined += (joined.empty() ? "" : ";") + s;
    rec.add("substitutions", joined);
  }
  rec.add("status", ok ? "PASS" : "FAIL");
  print_record(out, rec, opt.format);
  return ok ? kExitOk : kExitFail;
}

struct EvaluateOptions {
  std::string instance;
  std::string name;
  std::optional<std::string> solution;
  std::optional<std::string> hex;
  std::optional<Weight> best_known;
  Format format = Format::kv;
};

inline int cmd_evaluate(const EvaluateOptions& opt, std::ostream& out,
                        const Registry& registry = Registry::load_default()) {
  const ProblemInstance instance = load_instance(opt.instance, opt.name);
  std::string body;
  if (opt.hex) {
    body = *opt.hex;
  } else if (opt.solution) {
    body = parse_solution_text(read_text_file(*opt.solution)).body;
  } else {
    throw Error(ErrorCode::invalid_argument, "evaluate needs --solution or --hex");
  }
  std::optional<Weight> best = opt.best_known;
  if (!best) {
    if (const auto* entry = registry.find(instance.name())) best = entry->best_known_cut;
  }
  const EvaluationReport report = evaluate(instance, decode_hex(body, instance.n()), best);
  print_record(out, report.to_record(), opt.format);
  return kExitOk;
}

inline int cmd_oracle(const std::string& source, Format format, std::ostream& out, std::istream& in = std::cin) {
  const ProblemInstance instance = load_instance(source, {}, in);
  const ExactCut exact = exact_max_cut(instance);
  kv::Record rec;
  rec.add("instance", instance.name())
      .add("n", instance.n())
      .add("cut", exact.cut)
      .add("energy", ising_energy(instance, exact.config))
      .add("hex", encode_hex(exact.config));
  print_record(out, rec, format);
  return kExitOk;
}

inline int cmd_gen_torus(const TorusSpec& spec, const std::optional<std::string>& output, std::ostream& out) {
  const ProblemInstance instance = generate_torus(spec);
  const std::string text = write_gset(instance);
  if (output) {
    std::ofstream file(*output, std::ios::binary);
    if (!file) throw Error(ErrorCode::io, "cannot write '" + *output + "'");
    file << text;
    if (!file) throw Error(ErrorCode::io, "write to '" + *output + "' failed");
  } else {
    out << text;
  }
  return kExitOk;
}

struct SolveOptions {
  std::string instance;
  std::string name;
  SolverConfig solver;
  bool spins = false;
  Format format = Format::kv;
};

inline int cmd_solve(const SolveOptions& opt, std::ostream& out) {
  const ProblemInstance instance = load_instance(opt.instance, opt.name);
  const TrialResult result = run_trial(instance, opt.solver);
  const TrialRecord rec = make_record(instance.name(), 0, opt.solver, result, opt.spins);
  if (opt.format != Format::csv) {
    out << rec.to_line() << '\n';
  } else {
    print_record(out, kv::parse(rec.to_line()), Format::csv);
  }
  return kExitOk;
}

// Loads the instance named by a campaign file and resolves its targets.
inline ProblemInstance campaign_instance(CampaignFile& file, const Registry& registry) {
  std::optional<ProblemInstance> inst;
  if (file.instance_path) {
    inst = load_gset_file(*file.instance_path);
  } else if (file.torus) {
    inst = generate_torus(*file.torus);
  } else {
    throw Error(ErrorCode::config, "campaign file names no instance (set instance or torus)");
  }
  if (!file.config.instance_name.empty() && file.config.instance_name != inst->name()) {
    std::vector<Edge> edges(inst->edges().begin(), inst->edges().end());
    inst = ProblemInstance::from_edges(file.config.instance_name, inst->n(), std::move(edges));
  }
  file.config.instance_name = inst->name();
  resolve_quality_targets(file, registry, inst->name());
  return std::move(*inst);
}

inline std::optional<double> reference_ttt(const Registry& registry, const std::string& name) {
  const auto* entry = registry.find(name);
  return entry ? entry->reference_ttt_999_s : std::nullopt;
}

struct CampaignOptions {
  std::string config;
  std::optional<std::string> log;
  std::optional<std::string> summary;
  std::optional<std::string> scan;
  std::optional<unsigned> workers;
  std::optional<double> confidence;
  bool histogram = false;
};

inline int cmd_campaign(const CampaignOptions& opt, std::ostream& out,
                        const Registry& registry = Registry::load_default()) {
  CampaignFile file = load_campaign_file(opt.config);
  if (opt.confidence) {
    file.confidence = *opt.confidence;
    for (auto& t : file.config.targets) t.confidence = *opt.confidence;
  }
  if (opt.workers) file.config.workers = *opt.workers;
  const ProblemInstance instance = campaign_instance(file, registry);
  const auto ref = reference_ttt(registry, instance.name());

  if (!file.config.sweep_scan.empty()) {
    const auto rows = sweep_scan(instance, file.config);
    const std::string csv = scan_csv(rows);
    if (opt.scan) {
      std::ofstream f(*opt.scan);
      if (!(f << csv)) throw Error(ErrorCode::io, "cannot write '" + *opt.scan + "'");
    } else {
      out << csv;
    }
    if (!opt.log && !opt.summary) return kExitOk;
  }

  std::optional<std::filesystem::path> log_path;
  if (opt.log) log_path = *opt.log;
  const CampaignRun run = run_campaign(instance, file.config, log_path);
  const std::string csv = summary_csv(run.summary, instance.n(), instance.m(), ref);
  if (opt.summary) {
    std::ofstream f(*opt.summary);
    if (!(f << csv)) throw Error(ErrorCode::io, "cannot write '" + *opt.summary + "'");
  } else {
    out << csv;
  }
  if (opt.histogram) {
    std::optional<Weight> best = file.best_known;
    if (!best) {
      if (const auto* e = registry.find(instance.name())) best = e->best_known_cut;
    }
    out << histogram_csv(run.summary, best);
  }
  return kExitOk;
}

struct ReportOptions {
  std::string log;
  std::optional<std::string> config;
  std::optional<std::string> instance;
  std::vector<std::string> targets;  // "label cut" or "label=cut"
  std::optional<double> confidence;
  bool histogram = false;
};

inline int cmd_report(const ReportOptions& opt, std::ostream& out,
                      const Registry& registry = Registry::load_default()) {
  const std::vector<TrialRecord> records = read_trial_log_file(opt.log);
  if (records.empty()) throw Error(ErrorCode::config, "log '" + opt.log + "' holds no trial records");

  std::vector<TargetSpec> targets;
  std::size_t n = 0, m = 0;
  std::optional<Weight> best;
  std::string name = records.front().instance;
  if (opt.config) {
    CampaignFile file = load_campaign_file(*opt.config);
    if (opt.confidence) {
      file.confidence = *opt.confidence;
      for (auto& t : file.config.targets) t.confidence = *opt.confidence;
    }
    const ProblemInstance instance = campaign_instance(file, registry);
    n = instance.n();
    m = instance.m();
    targets = file.config.targets;
    best = file.best_known;
  } else if (opt.instance) {
    const ProblemInstance instance = load_instance(*opt.instance, name);
    n = instance.n();
    m = instance.m();
  } else if (const auto* entry = registry.find(name)) {
    n = entry->n;
    m = entry->m;
  }
  if (!best) {
    if (const auto* e = registry.find(name)) best = e->best_known_cut;
  }
  const double confidence = opt.confidence.value_or(kDefaultConfidence);
  for (const auto& spec : opt.targets) {
    const auto sep = spec.find_last_of(" =");
    if (sep == std::string::npos) throw Error(ErrorCode::invalid_argument, "target must be 'label=cut'");
    targets.push_back({spec.substr(0, sep), kv::to_double(spec.substr(sep + 1), "target cut"), confidence});
  }
  const CampaignSummary summary = summarize(records, targets);
  out << summary_csv(summary, n, m, reference_ttt(registry, name));
  if (opt.histogram) out << histogram_csv(summary, best);
  return kExitOk;
}

inline int cmd_project(double stt, double sweep_time_s, Format format, std::ostream& out) {
  const double seconds = project_hw_ttt(stt, sweep_time_s);
  if (format == Format::text) {
    out << format_duration(seconds) << '\n';
  } else if (format == Format::kv) {
    kv::Record rec;
    rec.add("stt", stt).add("sweep_time_s", sweep_time_s).add("projected_ttt_s", seconds);
    rec.add("projected_ttt", format_duration(seconds));
    out << rec.str() << '\n';
  } else if (format == Format::csv) {
    out << "stt,sweep_time_s,projected_ttt_s\n"
        << kv::format_double(stt) << ',' << kv::format_double(sweep_time_s) << ',' << kv::format_double(seconds)
        << '\n';
  }
  return kExitOk;
}

struct MetricsOptions {
  std::string instance = "-";
  std::uint64_t sweeps = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double trial_time_s = 0.0;
  std::optional<double> reference_ttt_s;
  double confidence = kDefaultConfidence;
  double sweep_time_s = kDefaultSweepTimeSeconds;
  std::string label = "target";
  double target_cut = 0.0;
};

inline int cmd_metrics(const MetricsOptions& opt, std::ostream& out) {
  const CampaignStats stats{opt.trials, opt.successes, opt.sweeps, opt.trial_time_s};
  const MetricsRow row = compute_metrics_row(opt.instance, 0, 0, {opt.label, opt.target_cut, opt.confidence}, stats,
                                             opt.reference_ttt_s, opt.sweep_time_s);
  out << metrics_csv_header() << '\n' << metrics_csv_row(row) << '\n';
  return kExitOk;
}

struct ReplayOptions {
  std::string instance;
  std::string log;
  std::size_t line = 1;  // 1-based among trial records
};

inline int cmd_replay(const ReplayOptions& opt, std::ostream& out) {
  const std::vector<TrialRecord> records = read_trial_log_file(opt.log);
  if (opt.line < 1 || opt.line > records.size()) {
    throw Error(ErrorCode::invalid_argument, "log has " + std::to_string(records.size()) + " records, asked for " +
                                                 std::to_string(opt.line));
  }
  const TrialRecord& rec = records[opt.line - 1];
  const ProblemInstance instance = load_instance(opt.instance, rec.instance);
  const TrialResult result = replay(instance, rec);
  const bool same = result.best_cut == rec.best_cut && result.sweeps_executed == rec.sweeps_executed &&
                    (!rec.spins_hex || *rec.spins_hex == encode_hex(result.best_spins));
  kv::Record out_rec;
  out_rec.add("instance", rec.instance)
      .add("trial", rec.trial)
      .add("logged_best_cut", rec.best_cut)
      .add("replayed_best_cut", result.best_cut)
      .add("status", same ? "MATCH" : "MISMATCH");
  out << out_rec.str() << '\n';
  return same ? kExitOk : kExitFail;
}

inline int cmd_registry(std::ostream& out, const Registry& registry = Registry::load_default()) {
  out << registry.to_text();
  return kExitOk;
}

}  // namespace gsetkit::cli

#endif  // GSETKIT_TOOLS_COMMANDS_HPP
