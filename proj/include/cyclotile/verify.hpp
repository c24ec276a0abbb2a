#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclotile/moduli.hpp"

namespace cyclotile {

struct VerifyEntry {
  std::string suite;
  std::string name;
  std::string target;    // expected value with its provenance
  std::string computed;  // what the run produced
  bool pass = false;
  double ms = 0.0;
};

struct VerificationReport {
  std::vector<VerifyEntry> entries;
  bool overall() const;
};

struct VerifyOptions {
  // empty = all suites; the special name "none" selects nothing
  std::vector<std::string> suites;
  std::optional<int> max_n;
  BuildLimits limits;
};

const std::vector<std::string>& verify_suite_names();

VerificationReport run_verify(const VerifyOptions& opts = {});

std::string report_to_json(const VerificationReport& report);

}  // namespace cyclotile
