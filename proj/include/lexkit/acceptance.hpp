#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lexkit {

struct SuiteOptions {
  double fuel_scale = 1.0;
  std::uint64_t seed = 20241015;
  std::string golden_dir;  // derivation corpus for the types suite
  std::size_t max_reported_failures = 10;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;    // counts and measured values
  std::vector<std::string> samples;  // first failing cases
  double seconds = 0;
};

struct SuiteInfo {
  int id;
  const char* name;
  const char* description;
};

const std::vector<SuiteInfo>& suite_catalog();
// Accepts the numeric id or the suite name; returns 0 when unknown.
int suite_id(const std::string& s);

SuiteResult run_suite(int id, const SuiteOptions& opts = {});

std::string format_result(const SuiteResult& r);

}  // namespace lexkit
