#include "ctm/distribution_file.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

namespace ctm {

namespace {

template <typename T>
T parse_number(std::string_view text, int line, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw FormatError("line " + std::to_string(line) + ": bad " + std::string(what) + " '" +
                      std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

void write_distribution(std::ostream& out, const Aggregate& aggregate) {
  const AggregateMeta& meta = aggregate.meta();
  out << "#format=" << kDistributionFormat << '\n'
      << "#states=" << meta.states << '\n'
      << "#symbols=2\n"
      << "#mode=" << to_string(meta.mode) << '\n'
      << "#blank=" << to_string(meta.blank) << '\n'
      << "#bound=" << meta.bound << '\n'
      << "#machines_total=" << aggregate.machines_total() << '\n'
      << "#halting=" << aggregate.halting() << '\n'
      << "#nonhalting=" << aggregate.nonhalting() << '\n'
      << "#exhausted=" << aggregate.exhausted() << '\n'
      << "#codec=" << kCodecVersion << '\n';
  for (const auto& [s, record] : aggregate.sorted_records()) {
    out << s << '\t' << record.count << '\t' << record.min_n << '\t' << record.min_t << '\n';
  }
}

std::string serialize_distribution(const Aggregate& aggregate) {
  std::ostringstream out;
  write_distribution(out, aggregate);
  return out.str();
}

Aggregate read_distribution(std::istream& in) {
  static const std::vector<std::string> kKeys = {"format",     "states",    "symbols",   "mode",
                                                 "blank",      "bound",     "machines_total",
                                                 "halting",    "nonhalting", "exhausted", "codec"};
  std::map<std::string, std::string, std::less<>> header;
  std::string line;
  int line_no = 0;
  std::vector<std::pair<std::string, StringRecord>> rows;
  bool in_rows = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') {
      if (in_rows) throw FormatError("line " + std::to_string(line_no) + ": header after data rows");
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) throw FormatError("line " + std::to_string(line_no) + ": header without '='");
      const std::string key = line.substr(1, eq - 1);
      if (!header.emplace(key, line.substr(eq + 1)).second) {
        throw FormatError("line " + std::to_string(line_no) + ": duplicate header '" + key + "'");
      }
      continue;
    }
    in_rows = true;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) throw FormatError("line " + std::to_string(line_no) + ": expected 4 fields");
    const std::string_view s = fields[0];
    if (s.empty() || s.find_first_not_of("01") != std::string_view::npos) {
      throw FormatError("line " + std::to_string(line_no) + ": string must be non-empty 0/1");
    }
    StringRecord record{parse_number<std::uint64_t>(fields[1], line_no, "count"),
                        parse_number<int>(fields[2], line_no, "min_instructions"),
                        parse_number<std::uint64_t>(fields[3], line_no, "min_runtime")};
    if (!rows.empty() && !shortlex_less(rows.back().first, s)) {
      throw FormatError("line " + std::to_string(line_no) + ": rows not in (length, lexicographic) order");
    }
    rows.emplace_back(std::string(s), record);
  }

  for (const auto& key : kKeys) {
    if (!header.contains(key)) throw FormatError("missing header '" + key + "'");
  }
  if (header.size() != kKeys.size()) throw FormatError("unexpected header key");
  if (header["format"] != kDistributionFormat) throw FormatError("unsupported format '" + header["format"] + "'");
  if (header["symbols"] != "2") throw FormatError("only 2-symbol distributions are supported");
  if (parse_number<int>(header["codec"], 0, "codec") != kCodecVersion) throw FormatError("unsupported codec version");

  AggregateMeta meta;
  meta.states = parse_number<int>(header["states"], 0, "states");
  if (meta.states < 1 || meta.states > kMaxStates) throw FormatError("state count out of range");
  meta.bound = parse_number<std::uint64_t>(header["bound"], 0, "bound");
  try {
    meta.mode = parse_aggregate_mode(header["mode"]);
    meta.blank = parse_blank_convention(header["blank"]);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }

  Aggregate aggregate(meta);
  for (const auto& [s, record] : rows) {
    if (record.count == 0) throw FormatError("zero count for '" + s + "'");
    aggregate.add_string(s, record);
  }
  aggregate.add_nonhalting(parse_number<std::uint64_t>(header["nonhalting"], 0, "nonhalting"));
  aggregate.add_exhausted(parse_number<std::uint64_t>(header["exhausted"], 0, "exhausted"));

  if (aggregate.halting() != parse_number<std::uint64_t>(header["halting"], 0, "halting")) {
    throw FormatError("header halting tally differs from the sum of row counts");
  }
  if (aggregate.machines_total() != parse_number<std::uint64_t>(header["machines_total"], 0, "machines_total")) {
    throw FormatError("machines_total differs from halting + nonhalting + exhausted");
  }
  try {
    aggregate.check_invariants();
  } catch (const std::logic_error& e) {
    throw FormatError(e.what());
  }
  return aggregate;
}

Aggregate parse_distribution(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_distribution(in);
}

Aggregate load_distribution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_distribution(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_distribution(const std::filesystem::path& path, const Aggregate& aggregate) {
  write_file_atomic(path, serialize_distribution(aggregate));
}

std::string serialize_histogram(const RuntimeHistogram& histogram) {
  std::ostringstream out;
  out << "#format=" << kHistogramFormat << '\n';
  for (const auto& [steps, count] : histogram.counts) out << steps << '\t' << count << '\n';
  return out.str();
}

RuntimeHistogram parse_histogram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  RuntimeHistogram histogram;
  bool format_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line == "#format=" + std::string(kHistogramFormat)) format_seen = true;
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 2) throw FormatError("line " + std::to_string(line_no) + ": expected 2 fields");
    const auto steps = parse_number<std::uint64_t>(fields[0], line_no, "steps");
    const auto count = parse_number<std::uint64_t>(fields[1], line_no, "count");
    if (steps == 0) throw FormatError("line " + std::to_string(line_no) + ": runtime must be positive");
    if (!histogram.counts.empty() && steps <= histogram.counts.rbegin()->first) {
      throw FormatError("line " + std::to_string(line_no) + ": runtimes must be strictly increasing");
    }
    histogram.add(steps, count);
  }
  if (!format_seen) throw FormatError("missing '#format=" + std::string(kHistogramFormat) + "' header");
  return histogram;
}

RuntimeHistogram load_histogram(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_histogram(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace ctm
