#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pushpull {

std::string sha256_hex(const std::string& data);

/// Directory of versioned JSON entries {"version", "key", "payload", "sha256"},
/// one file per key. The hash covers the canonical dump of version, key and
/// payload. Entries written by another format version are ignored and
/// recomputed.
class Cache {
 public:
  static constexpr int kVersion = 1;
  static constexpr const char* kEnvVar = "PUSHPULL_CACHE_DIR";

  explicit Cache(std::filesystem::path dir);
  /// The cache named by PUSHPULL_CACHE_DIR, if set and non-empty.
  static std::optional<Cache> from_env();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const nlohmann::json& key) const;

  /// Payload for key; nullopt on a miss or a version mismatch. Throws
  /// CacheCorrupt when the stored hash does not match.
  std::optional<nlohmann::json> load(const nlohmann::json& key) const;
  void store(const nlohmann::json& key, const nlohmann::json& payload) const;

  /// [{"file", "version", "key"}] sorted by file name.
  nlohmann::json list() const;
  /// Removes every entry file; returns the count.
  std::size_t clear() const;
  /// Throws CacheCorrupt naming the first entry whose hash fails.
  std::size_t verify() const;

 private:
  std::vector<std::filesystem::path> entries() const;
  std::filesystem::path dir_;
};

}  // namespace pushpull
