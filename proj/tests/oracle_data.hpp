#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

// Reference values frozen by tests/oracle/gen_oracle.py.
inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    const std::string path = std::string(ZSIG_TEST_DATA_DIR) + "/oracle.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing " + path);
    return nlohmann::json::parse(in);
  }();
  return data;
}
