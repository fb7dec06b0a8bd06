#pragma once

#include <string>

#include "lmpc/harness/config.h"

namespace lmpc::harness {

/// Git-style content hash: SHA-1 of "blob <size>\0" followed by the bytes.
std::string git_blob_hash(const std::string& content);
/// Same for a file. Throws ConfigError if it cannot be read.
std::string file_blob_hash(const std::string& path);

/// JSON manifest of an output directory: the command, the configuration,
/// its seeds, the stored versions per mode and the blob hash of every file
/// below dir (sorted, manifest.json itself excluded). No timestamps, so the
/// same inputs give the same manifest.
std::string build_manifest(const std::string& dir, const ExperimentConfig& config,
                           const std::string& command);
/// Writes dir/manifest.json and returns its path.
std::string write_manifest(const std::string& dir, const ExperimentConfig& config,
                           const std::string& command);

}  // namespace lmpc::harness
