#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "ctm/checkpoint.h"
#include "ctm/measures.h"

using namespace ctm::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive small Turing machine output-frequency laboratory"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run an enumeration into a raw distribution file");
  run_cmd->add_option("--states", run.states, "State count (1-5)")->required()->check(CLI::Range(1, 5));
  run_cmd->add_option("--mode", run.mode, "full or reduced")->check(CLI::IsMember({"full", "reduced"}));
  run_cmd->add_option("--blank", run.blank, "0, 1, or both (full mode only)")->check(CLI::IsMember({"0", "1", "both"}));
  run_cmd->add_option("--bound", run.bound, "Step bound (default depends on --states)");
  run_cmd->add_option("--workers", run.workers, "Worker threads (default: CTM_WORKERS or all cores)");
  run_cmd->add_option("--out", run.out, "Output distribution file")->required();
  run_cmd->add_option("--checkpoint", run.checkpoint, "Checkpoint file for resumable runs");
  run_cmd->add_option("--chunk-size", run.chunk_size, "Machine indices per chunk");
  run_cmd->add_option("--max-stripes", run.max_stripes, "Stop after this many checkpoint stripes");

  CompleteArgs complete;
  auto* complete_cmd = app.add_subcommand("complete", "Lift a raw reduced file to the full both-blanks distribution");
  complete_cmd->add_option("--in", complete.in, "Raw reduced distribution file")->required();
  complete_cmd->add_option("--out", complete.out, "Completed distribution file")->required();

  KmArgs km;
  auto* km_cmd = app.add_subcommand("km", "Report Km, LD and instruction counts");
  km_cmd->add_option("file", km.file, "Distribution file")->required();
  km_cmd->add_option("string", km.string, "Binary string to look up");
  km_cmd->add_flag("--all", km.all, "Report every observed string");
  km_cmd->add_option("--table", km.table, "instructions or runtime");
  km_cmd->add_option("--width", km.width, "Runtime interval width")->check(CLI::PositiveNumber);

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check reduced+completion against the full enumeration");
  validate_cmd->add_option("--states", validate.states, "State count")->required()->check(CLI::Range(1, 4));
  validate_cmd->add_option("--bound", validate.bound, "Step bound");
  validate_cmd->add_option("--recheck-bound", validate.recheck_bound, "Unfiltered re-run bound for the filter audit");
  validate_cmd->add_option("--file", validate.file, "Compare this distribution file instead of a fresh reduced run");
  validate_cmd->add_flag("!--no-audit", validate.audit, "Skip the filter soundness audit");
  validate_cmd->add_option("--workers", validate.workers, "Worker threads");
  validate_cmd->add_option("--histogram-out", validate.histogram_out, "Write the exhaustive runtime histogram");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Correlations over a distribution and an optional runtime fit");
  stats_cmd->add_option("file", stats.file, "Distribution file")->required();
  stats_cmd->add_option("--histogram", stats.histogram, "Runtime histogram file to fit");

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Run uniformly sampled machines");
  sample_cmd->add_option("--states", sample.states, "State count")->required()->check(CLI::Range(1, 5));
  sample_cmd->add_option("--samples", sample.samples, "Number of machines")->required();
  sample_cmd->add_option("--bound", sample.bound, "Step bound");
  sample_cmd->add_option("--seed", sample.seed, "Sampler seed");
  sample_cmd->add_option("--workers", sample.workers, "Worker threads");
  sample_cmd->add_option("--out", sample.out, "Sampled both-blanks distribution file");
  sample_cmd->add_option("--histogram-out", sample.histogram_out, "Runtime histogram file");

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Re-run filtered machines without filters");
  audit_cmd->add_option("--states", audit.states, "State count")->required()->check(CLI::Range(1, 5));
  audit_cmd->add_option("--recheck-bound", audit.recheck_bound, "Unfiltered re-run bound");
  audit_cmd->add_option("--samples", audit.samples, "Sample this many machines instead of all");
  audit_cmd->add_option("--seed", audit.seed, "Sampler seed");
  audit_cmd->add_option("--workers", audit.workers, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run, std::cout, std::cerr);
    if (*complete_cmd) return cmd_complete(complete, std::cout, std::cerr);
    if (*km_cmd) return cmd_km(km, std::cout, std::cerr);
    if (*validate_cmd) return cmd_validate(validate, std::cout, std::cerr);
    if (*stats_cmd) return cmd_stats(stats, std::cout, std::cerr);
    if (*sample_cmd) return cmd_sample(sample, std::cout, std::cerr);
    if (*audit_cmd) return cmd_audit(audit, std::cout, std::cerr);
  } catch (const ctm::NotObserved& e) {
    std::cerr << e.what() << '\n';
    return kNotObserved;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kUsage;
}
