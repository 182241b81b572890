#ifndef TEMPREL_MANIFEST_HPP
#define TEMPREL_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace temprel {

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::string hash_file(const std::filesystem::path& path);
std::string hash_string(const std::string& s);

// Reproducibility record emitted by every CLI run: the command, its full
// config, hashes of every input, the seed and the produced outputs. The
// wall_clock_sec field is informational; everything else is deterministic.
struct RunManifest {
  std::string command;
  std::string config_json;  // serialized config snapshot
  std::map<std::string, std::string> input_hashes;
  std::uint64_t seed = 0;
  std::vector<std::string> output_paths;
  double wall_clock_sec = 0.0;

  void write(const std::filesystem::path& path) const;
};

}  // namespace temprel

#endif  // TEMPREL_MANIFEST_HPP
