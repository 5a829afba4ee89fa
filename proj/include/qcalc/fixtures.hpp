#pragma once

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace qcalc {

class FixtureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// $QCALC_FIXTURES, else the directory compiled in.
std::string fixture_dir();
void set_fixture_dir(const std::string& dir);
// fixture("sl2") reads <dir>/sl2.json; cached per process.
const nlohmann::json& fixture(const std::string& name);
// Walks a slash separated path, throwing FixtureError with the path on a miss.
const nlohmann::json& fixture_at(const std::string& name, const std::string& path);

}  // namespace qcalc
