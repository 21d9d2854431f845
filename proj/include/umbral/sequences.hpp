#pragma once

// The eight integer sequences arising as moment sequences of the inverse
// Gaussian and Bessel-measure families. OEIS ids are used as labels only.

#include <string>
#include <string_view>
#include <vector>

#include "umbral/distributions.hpp"
#include "umbral/rational.hpp"

namespace umbral {

struct SequenceSpec {
  std::string id;
  std::string description;
  std::string distribution;  // the law whose moments the terms are
};

const std::vector<SequenceSpec>& sequence_catalog();

// Throws std::invalid_argument for an unknown id.
const SequenceSpec& find_sequence(std::string_view id);

enum class Construction {
  ClosedForm,  // explicit coefficient formulas
  Generic,     // triangular solve for the basic sequence of D - D^2/2
};

// Terms n = 0 .. count-1 by exact polynomial evaluation. Throws
// std::logic_error if a term is not an integer.
std::vector<Integer> generate(std::string_view id, std::size_t count,
                              Construction construction = Construction::ClosedForm);

// The density whose n-th moment is the n-th term.
DistSpec sequence_distribution(std::string_view id);

struct SequenceCrosscheck {
  std::string id;
  std::vector<CheckReport> terms;  // lhs = exact term, rhs = quadrature moment

  double max_rel_dev() const;
};

SequenceCrosscheck crosscheck(std::string_view id, std::size_t count, const QuadratureConfig& cfg = {});

}  // namespace umbral
