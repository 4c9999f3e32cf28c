#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace loopmod {

// Outcome of an exhaustive or sampled invariant check.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t skipped = 0;  // cases that left the truncation window
  std::string witness;      // first failure, empty when passed

  void fail(std::string w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
  CheckResult& merge(const CheckResult& o) {
    cases += o.cases;
    skipped += o.skipped;
    if (!o.passed) fail(o.name + ": " + o.witness);
    return *this;
  }
};

}  // namespace loopmod
