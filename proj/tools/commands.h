#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ctm::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kUsage = 2,
  kNotObserved = 3,
  kValidationFailed = 4,
  kInterrupted = 75,
};

struct RunArgs {
  int states = 0;
  std::string mode = "reduced";  // full | reduced
  std::string blank = "0";       // 0 | 1 | both (both requires full)
  std::optional<std::uint64_t> bound;
  int workers = 0;
  std::string out;
  std::optional<std::string> checkpoint;
  std::uint64_t chunk_size = 0;
  std::optional<std::size_t> max_stripes;
};

struct CompleteArgs {
  std::string in;
  std::string out;
};

struct KmArgs {
  std::string file;
  std::optional<std::string> string;
  bool all = false;
  std::optional<std::string> table;  // instructions | runtime
  std::uint64_t width = 25;
};

struct ValidateArgs {
  int states = 0;
  std::optional<std::uint64_t> bound;
  std::uint64_t recheck_bound = 10000;
  std::optional<std::string> file;
  bool audit = true;
  int workers = 0;
  std::optional<std::string> histogram_out;
};

struct StatsArgs {
  std::string file;
  std::optional<std::string> histogram;
};

struct SampleArgs {
  int states = 0;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> bound;
  std::uint64_t seed = 1;
  int workers = 0;
  std::optional<std::string> out;
  std::optional<std::string> histogram_out;
};

struct AuditArgs {
  int states = 0;
  std::uint64_t recheck_bound = 10000;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  int workers = 0;
};

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);
int cmd_complete(const CompleteArgs& args, std::ostream& out, std::ostream& err);
int cmd_km(const KmArgs& args, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);
int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err);
int cmd_sample(const SampleArgs& args, std::ostream& out, std::ostream& err);
int cmd_audit(const AuditArgs& args, std::ostream& out, std::ostream& err);

}  // namespace ctm::cli
