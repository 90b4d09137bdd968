#include "ctm/checkpoint.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctm/distribution_file.h"

namespace ctm {

namespace {

std::string format_ranges(const std::vector<bool>& completed) {
  std::string out;
  std::size_t i = 0;
  while (i < completed.size()) {
    if (!completed[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < completed.size() && completed[j + 1]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(i);
    if (j > i) out += '-' + std::to_string(j);
    i = j + 1;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view text, int base = 10) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value, base);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw CheckpointError("bad number '" + std::string(text) + "' in checkpoint");
  }
  return value;
}

std::string_view expect_header(std::string_view& text, std::string_view key) {
  const std::size_t nl = text.find('\n');
  if (nl == std::string_view::npos) throw CheckpointError("truncated checkpoint header");
  std::string_view line = text.substr(0, nl);
  text.remove_prefix(nl + 1);
  const std::string prefix = "#" + std::string(key) + "=";
  if (!line.starts_with(prefix)) throw CheckpointError("expected checkpoint header '" + std::string(key) + "'");
  line.remove_prefix(prefix.size());
  return line;
}

}  // namespace

std::string serialize_checkpoint(const Checkpoint& checkpoint) {
  std::ostringstream out;
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(checkpoint.digest));
  out << "#format=" << kCheckpointFormat << '\n'
      << "#digest=" << digest << '\n'
      << "#chunks=" << checkpoint.completed.size() << '\n'
      << "#completed=" << format_ranges(checkpoint.completed) << '\n';
  write_distribution(out, checkpoint.partial);
  return out.str();
}

Checkpoint parse_checkpoint(std::string_view text) {
  Checkpoint checkpoint;
  if (expect_header(text, "format") != kCheckpointFormat) throw CheckpointError("unsupported checkpoint format");
  checkpoint.digest = parse_u64(expect_header(text, "digest"), 16);
  const std::uint64_t chunks = parse_u64(expect_header(text, "chunks"));
  checkpoint.completed.assign(static_cast<std::size_t>(chunks), false);

  std::string_view ranges = expect_header(text, "completed");
  while (!ranges.empty()) {
    const std::size_t comma = ranges.find(',');
    std::string_view range = ranges.substr(0, comma);
    ranges = comma == std::string_view::npos ? std::string_view{} : ranges.substr(comma + 1);
    const std::size_t dash = range.find('-');
    const std::uint64_t lo = parse_u64(range.substr(0, dash));
    const std::uint64_t hi = dash == std::string_view::npos ? lo : parse_u64(range.substr(dash + 1));
    if (lo > hi || hi >= chunks) throw CheckpointError("completed chunk range out of bounds");
    for (std::uint64_t id = lo; id <= hi; ++id) checkpoint.completed[static_cast<std::size_t>(id)] = true;
  }

  try {
    checkpoint.partial = parse_distribution(text);
  } catch (const FormatError& e) {
    throw CheckpointError(std::string("checkpoint aggregate: ") + e.what());
  }
  return checkpoint;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  write_file_atomic(path, serialize_checkpoint(checkpoint));
}

std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_checkpoint(buffer.str());
}

}  // namespace ctm
