#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hrmc/hermitian.hpp"

namespace hrmc {

struct VerifyOptions {
  std::int64_t q = 2;
  std::int64_t t = 2;
  std::uint64_t trials = 20;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::uint64_t guard = kDefaultEnumerationGuard;
};

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::vector<std::string> failures;  // first few, in check order

  bool ok() const { return total > 0 && passed == total; }
  void check(bool condition, const std::string& label);
};

/// Runs every identity suite for (q, t). Results are independent of `workers`.
/// Check failures and errors raised inside a suite are reported, not thrown.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

}  // namespace hrmc
