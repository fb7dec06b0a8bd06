#include "lmpc/harness/manifest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <boost/uuid/detail/sha1.hpp>
#include <json.hpp>

namespace lmpc::harness {

namespace fs = std::filesystem;
using nlohmann::json;

std::string git_blob_hash(const std::string& content) {
  boost::uuids::detail::sha1 sha;
  const std::string head = "blob " + std::to_string(content.size()) + '\0';
  sha.process_bytes(head.data(), head.size());
  sha.process_bytes(content.data(), content.size());
  boost::uuids::detail::sha1::digest_type digest;
  sha.get_digest(digest);
  char hex[41];
  for (int i = 0; i < 5; ++i) std::snprintf(hex + 8 * i, 9, "%08x", digest[i]);
  return std::string(hex, 40);
}

std::string file_blob_hash(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return git_blob_hash(ss.str());
}

std::string build_manifest(const std::string& dir, const ExperimentConfig& config,
                           const std::string& command) {
  std::vector<std::string> files;
  if (fs::exists(dir))
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
      if (!e.is_regular_file()) continue;
      const std::string rel = fs::relative(e.path(), dir).generic_string();
      if (rel != "manifest.json") files.push_back(rel);
    }
  std::sort(files.begin(), files.end());

  json j;
  j["format"] = "lmpc-manifest";
  j["command"] = command;
  j["config"] = json::parse(to_json(config));
  j["seeds"] = {{"disturbance", config.disturbance_seed}, {"closed_loop", config.seed}};
  json versions = json::object();
  const std::regex store_re(R"(^([a-z]+)/store_v([0-9]+)\.csv$)");
  json list = json::array();
  for (const auto& rel : files) {
    const std::string full = (fs::path(dir) / rel).string();
    list.push_back({{"path", rel}, {"blob", file_blob_hash(full)}, {"bytes", fs::file_size(full)}});
    std::smatch m;
    if (std::regex_match(rel, m, store_re)) versions[m[1].str()].push_back(std::stoi(m[2].str()));
  }
  for (auto& [mode, v] : versions.items()) std::sort(v.begin(), v.end());
  j["store_versions"] = versions;
  j["files"] = list;
  return j.dump(2) + '\n';
}

std::string write_manifest(const std::string& dir, const ExperimentConfig& config,
                           const std::string& command) {
  const std::string text = build_manifest(dir, config, command);
  const std::string path = (fs::path(dir) / "manifest.json").string();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
  return path;
}

}  // namespace lmpc::harness
