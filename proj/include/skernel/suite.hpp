#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skernel/hconstr.hpp"

namespace skernel {

enum class SuiteSize { small, medium };

struct SuiteOptions {
  std::uint64_t seed = 0;
  SuiteSize size = SuiteSize::small;
  /// Worker threads; 0 or 1 runs the checks in order on the calling thread.
  int threads = 0;
  /// Runs one check against a corrupted differential, which must then fail.
  bool inject_fault = false;
};

struct CheckResult {
  std::string label;
  int instances = 0;
  bool pass = false;
  std::string detail;  // first failing instance, empty on success
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  /// One line per check in a fixed order, then a summary line.
  std::string text() const;
};

SuiteReport run_suite(const SuiteOptions& options);

/// SKERNEL_THREADS, or 0 when unset or unparsable.
int threads_from_environment();

struct NamedDiagram {
  std::string name;
  PushoutDiagram diagram;
};

/// Ten fixed pushout diagrams of small pointed spaces; the first is (point ← S⁰ → point).
std::vector<NamedDiagram> pushout_corpus();

struct DiagramVerdict {
  bool cross_check = false;
  bool retraction_strict = false;
  bool retraction_certified = false;
  bool inclusion_certified = false;
  /// Strict comparison certificate; true when f is not injective and it does not apply.
  bool comparison_certified = false;
  bool comparison_applies = false;
  bool ok() const;
  std::string summary() const;
};

DiagramVerdict verify_diagram(const PushoutDiagram& q, int range);

}  // namespace skernel
