#include <doctest.h>

#include <stdexcept>

#include "umbral/sequences.hpp"

using namespace umbral;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("generate") {
  CHECK(generate("A144301", 5) == ints({1, 1, 2, 7, 37}));
  CHECK(generate("A144301", 5, Construction::Generic) == ints({1, 1, 2, 7, 37}));
  CHECK(generate("A080893", 4) == ints({1, 1, 3, 19}));
  CHECK(generate("A001515", 5) == ints({1, 2, 7, 37, 266}));
  CHECK(generate("A107104", 4) == ints({1, 2, 6, 26}));
  // w_{n+1}(2)/2 and y_n(2) = 1, 3, 19, ...
  CHECK(generate("A043301", 3) == ints({1, 3, 13}));
  CHECK(generate("A001517", 3) == ints({1, 3, 19}));

  CHECK_THROWS_AS(generate("A000045", 3), std::invalid_argument);
  CHECK_THROWS_AS(generate("A001515", 0), std::invalid_argument);
}

TEST_CASE("every sequence is integral, starts at 1 and has two agreeing constructions") {
  for (const auto& spec : sequence_catalog()) {
    CAPTURE(spec.id);
    const auto closed = generate(spec.id, 40);
    CHECK(closed.front() == 1);
    CHECK(closed == generate(spec.id, 40, Construction::Generic));
  }
}

TEST_CASE("crosscheck against quadrature moments") {
  CHECK(crosscheck("A144301", 8).max_rel_dev() < 1e-8);
  CHECK(crosscheck("A065919", 8).max_rel_dev() < 1e-8);
  for (const auto& spec : sequence_catalog()) {
    CAPTURE(spec.id);
    const SequenceCrosscheck cc = crosscheck(spec.id, 9);
    CHECK(cc.terms.size() == 9);
    CHECK(cc.terms[0].lhs == 1.0);
    CHECK(cc.max_rel_dev() < 1e-8);
  }
}
