#pragma once

#include <optional>
#include <span>
#include <vector>

#include "veto/core.hpp"

namespace veto {

/// difference: Bellman-Ford over strict difference constraints (unit flavors only).
/// simplex: exact phase-one simplex over gap variables (any flavor).
enum class Solver { automatic, difference, simplex };

/// Coordinates for the placed points of `prefix` (owner vertex per position, in order),
/// such that the prefix extends to a full word meeting `flavor`. The points still to
/// come are only required to lie beyond the last placed point, in their own order.
/// With every point placed this decides realizability exactly.
/// Proper is an ordering condition and is checked combinatorially, not here.
std::optional<std::vector<Rational>> solve_prefix(std::span<const int> prefix, int vertex_count, int mark_count,
                                                  FlavorSet flavor, Solver solver = Solver::automatic);

inline bool prefix_feasible(std::span<const int> prefix, int vertex_count, int mark_count, FlavorSet flavor,
                            Solver solver = Solver::automatic) {
  return solve_prefix(prefix, vertex_count, mark_count, flavor, solver).has_value();
}

/// True if left endpoints and right endpoints appear in the same vertex order
/// (and, with `midpoint`, the marks too). Partial words compare what is placed.
bool proper_order_ok(std::span<const int> prefix, int vertex_count, int mark_count, bool midpoint);

/// Representation whose ordering word is `w` and whose flags include `flavor`, or nullopt.
/// Without flavor the coordinates are the ranks 1..(k+2)n. Unit outputs have length 1.
std::optional<Representation> realizable(const OrderingWord& w, FlavorSet flavor, Solver solver = Solver::automatic);

}  // namespace veto
