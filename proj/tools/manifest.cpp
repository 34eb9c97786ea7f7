#include "manifest.hpp"

#include <fstream>

#include "nrd/version.hpp"

namespace nrd::cli {

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("file_digest: cannot open " + path.string());
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001B3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + hex;
}

std::filesystem::path write_manifest(const std::filesystem::path& out_dir,
                                     const std::string& primary_output,
                                     const std::string& command, std::uint64_t seed,
                                     const nlohmann::json& parameters,
                                     const std::vector<std::string>& outputs) {
  nlohmann::json manifest;
  manifest["command"] = command;
  manifest["tool_version"] = nrd::kVersion;
  manifest["seed"] = seed;
  manifest["parameters"] = parameters;
  nlohmann::json outs = nlohmann::json::array();
  for (const std::string& name : outputs) {
    outs.push_back({{"path", name}, {"digest", file_digest(out_dir / name)}});
  }
  manifest["outputs"] = std::move(outs);

  const std::filesystem::path path = out_dir / (primary_output + ".manifest.json");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_manifest: cannot open " + path.string());
  out << manifest.dump(2) << "\n";
  return path;
}

}  // namespace nrd::cli
