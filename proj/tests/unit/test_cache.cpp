#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "pushpull/cache.hpp"

using namespace pushpull;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& tag) {
  std::mt19937_64 rng(std::random_device{}());
  fs::path p = fs::temp_directory_path() / ("pushpull-" + tag + "-" + std::to_string(rng() % 1000000));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("sha256 of known strings") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("store, load, list, clear") {
  Cache c(scratch_dir("basic"));
  nlohmann::json key = {{"type", "A2"}, {"trunc", 5}};
  CHECK_FALSE(c.load(key).has_value());
  c.store(key, {1, 2, 3});
  auto got = c.load(key);
  REQUIRE(got.has_value());
  CHECK(*got == nlohmann::json({1, 2, 3}));
  CHECK(c.list().size() == 1);
  CHECK(c.verify() == 1);
  CHECK_FALSE(c.load({{"type", "B2"}}).has_value());
  CHECK(c.clear() == 1);
  CHECK_FALSE(c.load(key).has_value());
  fs::remove_all(c.dir());
}

TEST_CASE("a modified payload is reported") {
  Cache c(scratch_dir("corrupt"));
  nlohmann::json key = {{"k", 1}};
  c.store(key, {{"value", 41}});
  fs::path p = c.path_for(key);
  std::stringstream ss;
  ss << std::ifstream(p).rdbuf();
  std::string text = ss.str();
  text.replace(text.find("41"), 2, "42");
  std::ofstream(p) << text;
  CHECK(testing::error_of([&] { c.load(key); }) == ErrorCode::CacheCorrupt);
  CHECK(testing::error_of([&] { c.verify(); }) == ErrorCode::CacheCorrupt);
  std::ofstream(p) << "{not json";
  CHECK(testing::error_of([&] { c.load(key); }) == ErrorCode::CacheCorrupt);
  fs::remove_all(c.dir());
}

TEST_CASE("entries from another format version are ignored") {
  Cache c(scratch_dir("version"));
  nlohmann::json key = {{"k", 2}};
  c.store(key, 5);
  fs::path p = c.path_for(key);
  nlohmann::json doc;
  std::ifstream(p) >> doc;
  doc["version"] = Cache::kVersion + 1;
  std::ofstream(p) << doc.dump();
  CHECK_FALSE(c.load(key).has_value());
  CHECK(c.verify() == 0);
  fs::remove_all(c.dir());
}
