#include "commands.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <stdexcept>

#include "ctm/distribution_file.h"
#include "ctm/enumeration.h"
#include "ctm/measures.h"
#include "ctm/runner.h"
#include "ctm/sampling.h"
#include "ctm/stats.h"

namespace ctm::cli {

namespace {

std::string fmt(double value, int precision = 12) {
  if (std::isnan(value)) return "NA";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
  return buffer;
}

IndexSpace parse_space(const std::string& mode) {
  if (mode == "full") return IndexSpace::Full;
  if (mode == "reduced") return IndexSpace::Reduced;
  throw std::invalid_argument("--mode must be full or reduced");
}

void print_entry(std::ostream& out, const DistributionEntry& e) {
  out << e.string << '\t' << e.count << '\t' << fmt(e.probability.value(), 17) << '\t' << fmt(e.km, 17) << '\t'
      << e.min_n << '\t' << e.ld << '\t' << e.length << '\n';
}

}  // namespace

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  const IndexSpace space = parse_space(args.mode);
  const std::uint64_t bound = args.bound.value_or(default_bound(args.states));
  if (bound < 1) throw std::invalid_argument("--bound must be at least 1");
  if (space == IndexSpace::Reduced && args.states < 2) throw std::invalid_argument("reduced mode needs --states >= 2");
  const std::uint64_t chunk = args.chunk_size ? args.chunk_size : kDefaultChunkSize;

  Plan plan;
  if (args.blank == "both") {
    if (space != IndexSpace::Full) throw std::invalid_argument("--blank both requires --mode full");
    plan = make_oracle_plan(args.states, bound, chunk);
  } else if (args.blank == "0" || args.blank == "1") {
    plan = make_plan(args.states, space, static_cast<Symbol>(args.blank == "1"), bound, chunk);
  } else {
    throw std::invalid_argument("--blank must be 0, 1 or both");
  }

  OrchestrateOptions options;
  options.workers = args.workers;
  if (args.checkpoint) options.checkpoint = *args.checkpoint;
  options.max_stripes = args.max_stripes;
  OrchestrateResult result = orchestrate(plan, options);
  if (!result.complete) {
    err << "interrupted after " << result.chunks_done << " of " << plan.chunks.size()
        << " chunks; rerun with the same --checkpoint to resume\n";
    return kInterrupted;
  }
  save_distribution(args.out, result.aggregate);
  if (args.checkpoint) std::filesystem::remove(*args.checkpoint);
  out << "machines_total\t" << result.aggregate.machines_total() << '\n'
      << "halting\t" << result.aggregate.halting() << '\n'
      << "strings\t" << result.aggregate.records().size() << '\n';
  return kOk;
}

int cmd_complete(const CompleteArgs& args, std::ostream& out, std::ostream& err) {
  const Aggregate raw = load_distribution(args.in);
  if (raw.meta().mode != AggregateMode::RawReduced) {
    err << args.in << ": expected mode raw-reduced, found " << to_string(raw.meta().mode) << '\n';
    return kError;
  }
  const Aggregate completed = complete(raw);
  save_distribution(args.out, completed);
  out << "machines_total\t" << completed.machines_total() << '\n'
      << "strings\t" << completed.records().size() << '\n';
  return kOk;
}

int cmd_km(const KmArgs& args, std::ostream& out, std::ostream& err) {
  const int selected = (args.string ? 1 : 0) + (args.all ? 1 : 0) + (args.table ? 1 : 0);
  if (selected != 1) {
    err << "km: give exactly one of STRING, --all or --table\n";
    return kUsage;
  }
  const Distribution dist = build_distribution(load_distribution(args.file));

  if (args.table && *args.table == "instructions") {
    out << "#used_n\tstring_count\tmean_km\tmean_length\n";
    for (const InstructionGroupRow& row : instruction_group_table(dist)) {
      out << row.used_n << '\t' << row.string_count << '\t' << fmt(row.mean_km) << '\t' << fmt(row.mean_length)
          << '\n';
    }
    return kOk;
  }
  if (args.table && *args.table == "runtime") {
    out << "#lo\thi\tstring_count\tmin_km\tmean_km\tmax_km\n";
    for (const RuntimeGroupRow& row : runtime_group_table(dist, args.width)) {
      out << row.lo << '\t' << row.hi << '\t' << row.string_count << '\t' << fmt(row.min_km) << '\t'
          << fmt(row.mean_km) << '\t' << fmt(row.max_km) << '\n';
    }
    return kOk;
  }
  if (args.table) {
    err << "km: --table must be instructions or runtime\n";
    return kUsage;
  }

  out << "#string\tcount\tprobability\tkm\tmin_instructions\tld\tlength\n";
  if (args.all) {
    for (const DistributionEntry& e : dist.entries()) print_entry(out, e);
  } else {
    print_entry(out, dist.at(*args.string));
  }
  return kOk;
}

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  const std::uint64_t bound = args.bound.value_or(default_bound(args.states));
  const Aggregate oracle = full_oracle(args.states, bound, args.workers);

  Aggregate candidate;
  if (args.file) {
    candidate = load_distribution(*args.file);
  } else {
    OrchestrateOptions options;
    options.workers = args.workers;
    candidate = complete(orchestrate(make_plan(args.states, IndexSpace::Reduced, 0, bound), options).aggregate);
  }
  out << "states\t" << args.states << '\n' << "bound\t" << bound << '\n';
  out << "oracle_machines\t" << oracle.machines_total() << '\n'
      << "oracle_strings\t" << oracle.records().size() << '\n';

  bool ok = true;
  if (const auto difference = first_difference(candidate, oracle)) {
    out << "equivalence\tFAIL\n";
    err << "first difference (candidate vs oracle): " << *difference << '\n';
    ok = false;
  } else {
    out << "equivalence\tPASS\n";
  }

  if (args.audit) {
    const AuditReport report = audit_filters(args.states, args.recheck_bound, args.workers);
    out << "audit_runs\t" << report.runs << '\n'
        << "audit_flagged_no_halt\t" << report.flagged[0] << '\n'
        << "audit_flagged_escapee\t" << report.flagged[1] << '\n'
        << "audit_flagged_two_cycle\t" << report.flagged[2] << '\n'
        << "audit_violations\t" << report.violations.size() << '\n';
    if (!report.sound()) {
      const FilterViolation& v = report.violations.front();
      err << "filter violation: machine " << v.index << " blank " << int{v.blank} << " flagged "
          << to_string(v.which) << " halts at step " << v.halted_at << '\n';
      ok = false;
    }
  }

  const RuntimeSample runtimes = exhaustive_runtimes(args.states, bound, args.workers);
  const std::uint64_t max_runtime = runtimes.histogram.counts.empty() ? 0 : runtimes.histogram.counts.rbegin()->first;
  out << "max_halting_runtime\t" << max_runtime << '\n';
  if (max_runtime == bound) err << "warning: a machine halts exactly at the bound; the bound may be too small\n";
  if (args.histogram_out) write_file_atomic(*args.histogram_out, serialize_histogram(runtimes.histogram));

  out << "result\t" << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kValidationFailed;
}

int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream&) {
  const Distribution dist = build_distribution(load_distribution(args.file));
  const CorrelationReport report = correlation_report(dist);
  out << "points\t" << report.points << '\n'
      << "r_km_n\t" << fmt(report.r_km_n) << '\n'
      << "r_km_n_given_l\t" << fmt(report.r_km_n_given_l) << '\n'
      << "r_km_ld\t" << fmt(report.r_km_ld) << '\n'
      << "r_km_ld_given_l\t" << fmt(report.r_km_ld_given_l) << '\n';
  if (args.histogram) {
    const FitResult fit = fit_exponential(load_histogram(*args.histogram));
    out << "fit_alpha\t" << fmt(fit.alpha) << '\n'
        << "fit_lambda\t" << fmt(fit.lambda) << '\n'
        << "fit_rss\t" << fmt(fit.rss) << '\n'
        << "fit_iterations\t" << fit.iterations << '\n'
        << "tail_mass_log10\t" << fmt(tail_mass_log10(fit.lambda, static_cast<double>(dist.bound()))) << '\n';
  }
  return kOk;
}

int cmd_sample(const SampleArgs& args, std::ostream& out, std::ostream& err) {
  if (!args.out && !args.histogram_out) {
    err << "sample: give --out and/or --histogram-out\n";
    return kUsage;
  }
  const std::uint64_t bound = args.bound.value_or(default_bound(args.states));
  if (args.out) {
    // Both blanks via the 0-1 symmetry of the sampled machines.
    const Aggregate sampled =
        complement_doubling(sample_full(args.states, args.samples, bound, args.seed, 0, args.workers));
    save_distribution(*args.out, sampled);
    out << "strings\t" << sampled.records().size() << '\n';
  }
  if (args.histogram_out) {
    const RuntimeSample runtimes = sample_runtimes(args.states, args.samples, bound, args.seed, args.workers);
    write_file_atomic(*args.histogram_out, serialize_histogram(runtimes.histogram));
    out << "halted\t" << runtimes.halted << '\n'
        << "filtered\t" << runtimes.filtered << '\n'
        << "exhausted\t" << runtimes.exhausted << '\n';
  }
  return kOk;
}

int cmd_audit(const AuditArgs& args, std::ostream& out, std::ostream& err) {
  const AuditReport report =
      args.samples ? audit_filters_sampled(args.states, *args.samples, args.seed, args.recheck_bound, args.workers)
                   : audit_filters(args.states, args.recheck_bound, args.workers);
  out << "runs\t" << report.runs << '\n'
      << "flagged_no_halt\t" << report.flagged[0] << '\n'
      << "flagged_escapee\t" << report.flagged[1] << '\n'
      << "flagged_two_cycle\t" << report.flagged[2] << '\n'
      << "violations\t" << report.violations.size() << '\n';
  for (const FilterViolation& v : report.violations) {
    err << "violation: machine " << v.index << " blank " << int{v.blank} << " flagged " << to_string(v.which)
        << " halts at step " << v.halted_at << '\n';
  }
  return report.sound() ? kOk : kValidationFailed;
}

}  // namespace ctm::cli
