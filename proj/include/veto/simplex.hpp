#pragma once

#include <optional>
#include <vector>

#include "veto/rational.hpp"

namespace veto {

/// Some x >= 0 with A x = b, found by exact phase-one simplex (Bland's rule), or nullopt.
std::optional<std::vector<Rational>> find_nonnegative_solution(const std::vector<std::vector<Rational>>& A,
                                                               const std::vector<Rational>& b);

}  // namespace veto
