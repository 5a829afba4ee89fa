#include "qcalc/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#ifndef QCALC_FIXTURE_DIR
#define QCALC_FIXTURE_DIR "fixtures"
#endif

namespace qcalc {

namespace {

std::mutex mu;
std::string override_dir;
std::map<std::string, nlohmann::json> cache;

}  // namespace

std::string fixture_dir() {
  std::lock_guard<std::mutex> lock(mu);
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("QCALC_FIXTURES"); env && *env) return env;
  return QCALC_FIXTURE_DIR;
}

void set_fixture_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lock(mu);
  override_dir = dir;
  cache.clear();
}

const nlohmann::json& fixture(const std::string& name) {
  std::string path = fixture_dir() + "/" + name + ".json";
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(path);
  if (it != cache.end()) return it->second;
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture " + path + " (set QCALC_FIXTURES)");
  try {
    return cache.emplace(path, nlohmann::json::parse(in)).first->second;
  } catch (const nlohmann::json::parse_error& e) {
    throw FixtureError("fixture " + path + ": " + e.what());
  }
}

const nlohmann::json& fixture_at(const std::string& name, const std::string& path) {
  const nlohmann::json* j = &fixture(name);
  std::istringstream in(path);
  std::string key;
  while (std::getline(in, key, '/')) {
    if (!j->is_object() || !j->contains(key)) throw FixtureError("fixture " + name + ": missing '" + path + "'");
    j = &(*j)[key];
  }
  return *j;
}

}  // namespace qcalc
