#pragma once

// Invariant suites driven by `ecrep verify`. Each suite walks a fixed grid,
// compares against the exact oracles (enumeration, integer division,
// rationals) or closed forms, and records one row per case.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecrep/numerics.hpp"

namespace ecrep {

struct CaseRow {
  std::string suite;
  std::string label;
  bool pass = false;
  std::string deviation;  // decimal; empty for exact comparisons
  std::string detail;     // error text or mismatch values
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string worst_deviation;
  double elapsed_ms = 0;
  std::vector<CaseRow> rows;

  bool pass() const { return failures == 0; }
};

struct SuiteOptions {
  std::int64_t max_p = 101;
  std::optional<std::uint64_t> seed;  // adds randomly drawn curves to the counting suites
  unsigned workers = 1;
};

/// gauss, legendre, expsum, thm2, thm3, repr, special, identity, fracpart.
const std::vector<std::string>& suite_names();

/// Unknown names throw DomainError.
SuiteReport run_suite(const std::string& name, const PrecisionContext& ctx, const SuiteOptions& options);

}  // namespace ecrep
