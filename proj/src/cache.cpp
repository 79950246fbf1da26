#include "pushpull/cache.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pushpull/error.hpp"

namespace pushpull {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::CacheCorrupt, "SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

namespace {

std::string entry_hash(const json& version, const json& key, const json& payload) {
  json body = {{"version", version}, {"key", key}, {"payload", payload}};
  return sha256_hex(body.dump());
}

json read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception&) {
    throw Error(ErrorCode::CacheCorrupt, "cache entry " + p.filename().string() + " is not valid JSON");
  }
}

void check_entry(const fs::path& p, const json& doc) {
  if (!doc.is_object() || !doc.contains("version") || !doc.contains("key") ||
      !doc.contains("payload") || !doc.contains("sha256")) {
    throw Error(ErrorCode::CacheCorrupt, "cache entry " + p.filename().string() + " is incomplete");
  }
  if (entry_hash(doc["version"], doc["key"], doc["payload"]) != doc["sha256"]) {
    throw Error(ErrorCode::CacheCorrupt,
                "hash mismatch for cache key " + doc["key"].dump() + " (" + p.filename().string() + ")");
  }
}

}  // namespace

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

std::optional<Cache> Cache::from_env() {
  const char* v = std::getenv(kEnvVar);
  if (!v || !*v) return std::nullopt;
  return Cache(v);
}

fs::path Cache::path_for(const json& key) const {
  return dir_ / ("sc-" + sha256_hex(key.dump()).substr(0, 24) + ".json");
}

std::optional<json> Cache::load(const json& key) const {
  fs::path p = path_for(key);
  if (!fs::exists(p)) return std::nullopt;
  json doc = read_file(p);
  if (!doc.is_object() || doc.value("version", -1) != kVersion) return std::nullopt;
  check_entry(p, doc);
  if (doc["key"] != key) return std::nullopt;
  return doc["payload"];
}

void Cache::store(const json& key, const json& payload) const {
  fs::create_directories(dir_);
  json doc = {{"version", kVersion},
              {"key", key},
              {"payload", payload},
              {"sha256", entry_hash(kVersion, key, payload)}};
  fs::path p = path_for(key);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump() << "\n";
  }
  fs::rename(tmp, p);
}

std::vector<fs::path> Cache::entries() const {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir_)) return out;
  for (const auto& e : fs::directory_iterator(dir_)) {
    const auto name = e.path().filename().string();
    if (e.is_regular_file() && name.rfind("sc-", 0) == 0 && e.path().extension() == ".json") {
      out.push_back(e.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

json Cache::list() const {
  json out = json::array();
  for (const auto& p : entries()) {
    json doc = read_file(p);
    out.push_back({{"file", p.filename().string()},
                   {"version", doc.value("version", -1)},
                   {"key", doc.contains("key") ? doc["key"] : json()}});
  }
  return out;
}

std::size_t Cache::clear() const {
  std::size_t n = 0;
  for (const auto& p : entries()) n += fs::remove(p) ? 1 : 0;
  return n;
}

std::size_t Cache::verify() const {
  std::size_t n = 0;
  for (const auto& p : entries()) {
    json doc = read_file(p);
    if (doc.is_object() && doc.value("version", -1) != kVersion) continue;  // stale, recomputed on use
    check_entry(p, doc);
    ++n;
  }
  return n;
}

}  // namespace pushpull
