#pragma once

// Named verification suites over one triple system and their reports.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "triplex/freealg.hpp"
#include "triplex/lts.hpp"
#include "triplex/report.hpp"

namespace triplex {

struct SuiteOptions {
  std::size_t cap = 0;  // 0 picks default_cap(d)
  std::uint64_t seed = 0;
  std::size_t max_monomials = kDefaultMaxMonomials;
};

struct SuiteReport {
  std::string suite;
  std::string system;
  std::size_t cap = 0;
  std::uint64_t seed = 0;
  CheckList checks;  // sorted by id

  bool pass() const { return all_pass(checks); }
  std::string to_json() const;
  std::string to_text() const;
};

// 6 for d <= 2, 4 for d = 3, 3 above.
std::size_t default_cap(std::size_t d);

const std::vector<std::string>& suite_names();

// Throws PreconditionError for an unknown suite name; budget and size-guard
// errors propagate.
SuiteReport run_suite(const std::string& name, const TripleSystem& t, const SuiteOptions& opts);

// Seeded coefficients in {-3, ..., 3}.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed);
  long coefficient();
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace triplex
