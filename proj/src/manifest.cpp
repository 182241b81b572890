#include "temprel/manifest.hpp"

#include "temprel/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace temprel {

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string to_hex(std::uint64_t h) {
  std::ostringstream os;
  os << "fnv64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace

std::string hash_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot hash missing file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  return to_hex(fnv1a64(bytes.data(), bytes.size()));
}

std::string hash_string(const std::string& s) {
  return to_hex(fnv1a64(s.data(), s.size()));
}

void RunManifest::write(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["version"] = 1;
  j["command"] = command;
  j["config"] = nlohmann::json::parse(config_json);
  j["inputs"] = input_hashes;
  j["seed"] = seed;
  j["outputs"] = output_paths;
  j["wall_clock_sec"] = wall_clock_sec;
  std::ofstream out(path);
  if (!out)
    throw SchemaError("cannot open manifest for writing: " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace temprel
