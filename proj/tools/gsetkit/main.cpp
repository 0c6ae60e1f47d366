#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace gsetkit;
using namespace gsetkit::cli;

template <typename T>
std::optional<T> opt_if(const CLI::Option* flag, const T& value) {
  return flag->count() > 0 ? std::optional<T>(value) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsetkit: Max-Cut / Ising benchmark, validation and campaign toolkit"};
  app.require_subcommand(1);
  std::string format_text = "kv";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"kv", "csv"}));
  };

  // validate
  ValidateOptions validate;
  Weight expect_cut = 0, validate_best = 0;
  auto* v = app.add_subcommand("validate", "Decode a hex solution and check its cut against an instance");
  v->add_option("--instance,-i", validate.instance, "Gset file ('-' for stdin)")->required();
  v->add_option("--solution,-s", validate.solution, "Hex solution file")->required();
  v->add_option("--name", validate.name, "Instance name for registry lookup (default: file stem)");
  auto* v_expect = v->add_option("--expect-cut", expect_cut, "Cut the solution must reach for PASS");
  auto* v_best = v->add_option("--best-known", validate_best, "Best-known cut for quality");
  v->add_option("--substitute", validate.substitutions, "Explicit character repair before decoding, e.g. l=1");
  add_format(v);

  // evaluate
  EvaluateOptions evaluate_opt;
  std::string eval_solution, eval_hex;
  Weight eval_best = 0;
  auto* e = app.add_subcommand("evaluate", "Cut, energy and quality of a configuration");
  e->add_option("--instance,-i", evaluate_opt.instance, "Gset file, '-' or torus:RxC:seed")->required();
  e->add_option("--name", evaluate_opt.name, "Instance name");
  auto* e_sol = e->add_option("--solution,-s", eval_solution, "Hex solution file");
  auto* e_hex = e->add_option("--hex", eval_hex, "Hex string");
  auto* e_best = e->add_option("--best-known", eval_best, "Best-known cut for quality");
  add_format(e);

  // oracle
  std::string oracle_source = "-";
  auto* o = app.add_subcommand("oracle", "Exact maximum cut by enumeration (n <= 24)");
  o->add_option("instance", oracle_source, "Gset file, '-' (default) or torus:RxC:seed");
  add_format(o);

  // gen-torus
  TorusSpec torus;
  std::string torus_out;
  auto* g = app.add_subcommand("gen-torus", "Write a random +-1 toroidal grid in Gset format");
  g->add_option("rows", torus.rows)->required();
  g->add_option("cols", torus.cols)->required();
  g->add_option("--seed", torus.seed, "Generator seed");
  auto* g_out = g->add_option("--output,-o", torus_out, "Output file (default stdout)");

  // solve
  SolveOptions solve;
  std::string solver_kind = "sa";
  auto* s = app.add_subcommand("solve", "Run one solver trial and print its record");
  s->add_option("--instance,-i", solve.instance, "Gset file, '-' or torus:RxC:seed")->required();
  s->add_option("--name", solve.name, "Instance name");
  s->add_option("--solver", solver_kind, "greedy | sa");
  s->add_option("--sweeps", solve.solver.sweeps, "Sweeps per trial")->required();
  s->add_option("--seed", solve.solver.seed, "Trial seed");
  s->add_option("--temp-start", solve.solver.temp_start, "Annealing start temperature");
  s->add_option("--temp-end", solve.solver.temp_end, "Annealing end temperature");
  s->add_flag("--spins", solve.spins, "Include best spins as hex");
  add_format(s);

  // campaign
  CampaignOptions campaign;
  std::string campaign_log, campaign_summary, campaign_scan;
  unsigned campaign_workers = 1;
  double campaign_conf = kDefaultConfidence;
  auto* c = app.add_subcommand("campaign", "Run a multi-trial campaign from a config file");
  c->add_option("config", campaign.config, "Campaign config file")->required();
  auto* c_log = c->add_option("--log", campaign_log, "Append trial records here (resumes if present)");
  auto* c_sum = c->add_option("--summary", campaign_summary, "Summary CSV path (default stdout)");
  auto* c_scan = c->add_option("--scan-out", campaign_scan, "Sweep-scan CSV path (default stdout)");
  auto* c_workers = c->add_option("--workers", campaign_workers, "Concurrent trials");
  auto* c_conf = c->add_option("--confidence", campaign_conf, "Confidence for all targets");
  c->add_flag("--histogram", campaign.histogram, "Also print the cut histogram");

  // report
  ReportOptions report;
  std::string report_config, report_instance;
  double report_conf = kDefaultConfidence;
  auto* r = app.add_subcommand("report", "Recompute a campaign summary from its log");
  r->add_option("log", report.log, "Trial log")->required();
  auto* r_config = r->add_option("--config", report_config, "Campaign config (targets and instance)");
  auto* r_inst = r->add_option("--instance", report_instance, "Instance file for n and m");
  r->add_option("--target", report.targets, "label=cut; repeatable");
  auto* r_conf = r->add_option("--confidence", report_conf, "Confidence");
  r->add_flag("--histogram", report.histogram, "Also print the cut histogram");

  // project
  double stt = 0, sweep_time = kDefaultSweepTimeSeconds;
  std::string project_format = "text";
  auto* p = app.add_subcommand("project", "Projected hardware time-to-target for a sweep count");
  p->add_option("stt", stt, "Sweeps to target")->required();
  p->add_option("--sweep-time", sweep_time, "Seconds per sweep (default 2e-9)");
  p->add_option("--format", project_format, "text | kv | csv")->check(CLI::IsMember({"text", "kv", "csv"}));

  // metrics
  MetricsOptions metrics;
  double metrics_ref = 0;
  auto* mt = app.add_subcommand("metrics", "P_s, repetitions, STT, TTT from campaign counts");
  mt->add_option("--sweeps", metrics.sweeps, "Sweeps per trial")->required();
  mt->add_option("--successes", metrics.successes)->required();
  mt->add_option("--trials", metrics.trials)->required();
  mt->add_option("--trial-time", metrics.trial_time_s, "Average seconds per trial");
  auto* mt_ref = mt->add_option("--reference-ttt", metrics_ref, "Reference time-to-target (s) for speedup");
  mt->add_option("--confidence", metrics.confidence);
  mt->add_option("--sweep-time", metrics.sweep_time_s);
  mt->add_option("--label", metrics.label);
  mt->add_option("--target-cut", metrics.target_cut);
  mt->add_option("--instance", metrics.instance);

  // replay
  ReplayOptions replay_opt;
  auto* rp = app.add_subcommand("replay", "Re-run one logged trial and compare");
  rp->add_option("--instance,-i", replay_opt.instance, "Gset file or torus:RxC:seed")->required();
  rp->add_option("--log", replay_opt.log, "Trial log")->required();
  rp->add_option("--line", replay_opt.line, "1-based record number");

  auto* reg = app.add_subcommand("registry", "Print the instance registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const Format format = (format_text == "csv") ? Format::csv : Format::kv;
    if (v->parsed()) {
      validate.expect_cut = opt_if(v_expect, expect_cut);
      validate.best_known = opt_if(v_best, validate_best);
      validate.format = format;
      return cmd_validate(validate, std::cout, std::cerr);
    }
    if (e->parsed()) {
      evaluate_opt.solution = opt_if(e_sol, eval_solution);
      evaluate_opt.hex = opt_if(e_hex, eval_hex);
      evaluate_opt.best_known = opt_if(e_best, eval_best);
      evaluate_opt.format = format;
      return cmd_evaluate(evaluate_opt, std::cout);
    }
    if (o->parsed()) return cmd_oracle(oracle_source, format, std::cout);
    if (g->parsed()) return cmd_gen_torus(torus, opt_if(g_out, torus_out), std::cout);
    if (s->parsed()) {
      solve.solver.kind = parse_solver_kind(solver_kind);
      solve.format = format;
      return cmd_solve(solve, std::cout);
    }
    if (c->parsed()) {
      campaign.log = opt_if(c_log, campaign_log);
      campaign.summary = opt_if(c_sum, campaign_summary);
      campaign.scan = opt_if(c_scan, campaign_scan);
      campaign.workers = opt_if(c_workers, campaign_workers);
      campaign.confidence = opt_if(c_conf, campaign_conf);
      return cmd_campaign(campaign, std::cout);
    }
    if (r->parsed()) {
      report.config = opt_if(r_config, report_config);
      report.instance = opt_if(r_inst, report_instance);
      report.confidence = opt_if(r_conf, report_conf);
      return cmd_report(report, std::cout);
    }
    if (p->parsed()) {
      return cmd_project(stt, sweep_time, parse_format(project_format), std::cout);
    }
    if (mt->parsed()) {
      metrics.reference_ttt_s = opt_if(mt_ref, metrics_ref);
      return cmd_metrics(metrics, std::cout);
    }
    if (rp->parsed()) return cmd_replay(replay_opt, std::cout);
    if (reg->parsed()) return cmd_registry(std::cout);
  } catch (const std::exception& ex) {
    std::cerr << "gsetkit: " << ex.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
