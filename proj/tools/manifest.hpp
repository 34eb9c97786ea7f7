#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

namespace nrd::cli {

/// FNV-1a 64-bit digest of a file's bytes, rendered as 16 hex characters.
std::string file_digest(const std::filesystem::path& path);

/// Writes <out>.manifest.json next to the command outputs. `parameters`
/// must contain everything needed to re-run the command bit-identically
/// (execution details like thread counts are deliberately excluded).
/// Returns the manifest path.
std::filesystem::path write_manifest(const std::filesystem::path& out_dir,
                                     const std::string& primary_output,
                                     const std::string& command, std::uint64_t seed,
                                     const nlohmann::json& parameters,
                                     const std::vector<std::string>& outputs);

}  // namespace nrd::cli
