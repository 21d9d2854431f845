#pragma once

// End-to-end verification matrix. Each criterion is self-contained and
// pins its own tolerances; run_all() is what `umbral verify-all` and the
// acceptance test binary execute.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "umbral/delta.hpp"

namespace umbral::acceptance {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  std::function<CriterionResult()> run;
};

inline constexpr std::uint64_t kTripleSeed = 1729;

// Random triples with |numerator|, denominator <= 5, a != 0, 1 <= p <= 4.
std::vector<AbTriple> seeded_triples(std::size_t count, std::uint64_t seed = kTripleSeed);

const std::vector<Criterion>& criteria();

// Runs one criterion; exceptions are reported as failures.
CriterionResult run(const Criterion& c);
std::vector<CriterionResult> run_all();

// "[PASS]  3  title  (detail)"
std::string format_line(const CriterionResult& r);

}  // namespace umbral::acceptance
