#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ctm/aggregate.h"
#include "ctm/stats.h"

namespace ctm {

inline constexpr int kCodecVersion = 1;
inline constexpr std::string_view kDistributionFormat = "ctm-distribution/1";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Header of '#key=value' lines, then one row per string:
//   string TAB count TAB min_instructions TAB min_runtime
// Rows are in (length, lexicographic) order.
void write_distribution(std::ostream& out, const Aggregate& aggregate);
std::string serialize_distribution(const Aggregate& aggregate);

// Throws FormatError with a line number on any malformed or inconsistent input.
Aggregate read_distribution(std::istream& in);
Aggregate parse_distribution(std::string_view text);

Aggregate load_distribution(const std::filesystem::path& path);
void save_distribution(const std::filesystem::path& path, const Aggregate& aggregate);

inline constexpr std::string_view kHistogramFormat = "ctm-runtime-histogram/1";

// '#format=ctm-runtime-histogram/1' then rows: steps TAB count, by steps.
std::string serialize_histogram(const RuntimeHistogram& histogram);
RuntimeHistogram parse_histogram(std::string_view text);
RuntimeHistogram load_histogram(const std::filesystem::path& path);

// Writes to a sibling temporary file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ctm
