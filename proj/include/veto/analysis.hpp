#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "veto/core.hpp"
#include "veto/graph.hpp"
#include "veto/semantics.hpp"

namespace veto {

/// color[v] in 0..palette-1.
struct Coloring {
  std::vector<int> color;
  int palette = 0;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Four classes for unit veto intervals of length 1, keyed on the parities of
// floor(left) and floor(mark).
enum UviColor : int { red = 0, blue = 1, purple = 2, orange = 3 };  // (odd,odd) (odd,even) (even,even) (even,odd)

std::string_view uvi_color_name(int color);

/// Proper colouring of the veto graph of a unit representation. Throws NotUnit, ArityMismatch, TiedPoints.
Coloring uvi_four_color(const Representation& rep);

/// Colour class of a single interval after dividing by `length`.
int uvi_color_of(const MarkedInterval& interval, const Rational& length);

bool is_proper_coloring(const SimpleGraph& g, const Coloring& coloring);
bool is_triangle_free(const SimpleGraph& g);

/// DSATUR backtracking; `nodes` accumulates search nodes when given.
std::optional<Coloring> k_coloring(const SimpleGraph& g, int k, std::uint64_t* nodes = nullptr);

struct ChromaticResult {
  int chromatic_number = 0;
  Coloring coloring;
  int clique_bound = 0;              // size of the clique found greedily
  std::uint64_t refutation_nodes = 0;  // nodes of the exhausted (chi-1)-colouring search
  bool refuted_by_clique = false;      // chi equals the clique bound, no search needed
};

/// Exact chromatic number with certificate. Throws TooLarge above `vertex_cap`.
ChromaticResult chromatic_number(const SimpleGraph& g, int vertex_cap = 20);

/// Unit (length 1) representation with the same ordering word. Throws NotProper, ArityMismatch, TiedPoints.
Representation proper_to_unit(const Representation& rep);

/// (a, a+c, a+2c) -> [a+c/2, a+3c/2]. Throws NotMidpointUnit.
std::vector<PlainInterval> muda_to_unit_interval(const Representation& rep);
/// [p, q] -> (p-c/2, p+c/2, p+3c/2) with c = q-p. Throws NotUnitIntervals.
Representation unit_interval_to_muda(std::span<const PlainInterval> intervals);

struct OrderCheck {
  bool pass = true;
  int first = -1;  // violating pair, ordered by left endpoint
  int second = -1;
  std::string what;  // "marks" or "rights"
};

/// Do left endpoints, marks and right endpoints list the vertices in the same (weak) order?
OrderCheck mpvi_order_check(const Representation& rep);

}  // namespace veto
