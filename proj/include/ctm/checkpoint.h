#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctm/aggregate.h"

namespace ctm {

inline constexpr std::string_view kCheckpointFormat = "ctm-checkpoint/1";

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line format:
//   #format=ctm-checkpoint/1
//   #digest=<16 hex digits of Plan::digest()>
//   #chunks=<chunk count of the plan>
//   #completed=<comma-separated id ranges, e.g. 0-63,128>
// followed by the distribution serialization of the merged completed chunks.
struct Checkpoint {
  std::uint64_t digest = 0;
  std::vector<bool> completed;
  Aggregate partial;
};

std::string serialize_checkpoint(const Checkpoint& checkpoint);
// Throws CheckpointError on malformed input.
Checkpoint parse_checkpoint(std::string_view text);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
// Empty if the file does not exist.
std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path);

}  // namespace ctm
