#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "veto/core.hpp"
#include "veto/graph.hpp"
#include "veto/linear_system.hpp"
#include "veto/semantics.hpp"

namespace veto {

enum class Verdict { yes, no, timeout };

std::string_view verdict_name(Verdict verdict);

struct RecognizeOptions {
  int mark_count = 0;  // 0 picks 2 for k-veto and 1 otherwise
  std::chrono::milliseconds time_limit{std::chrono::minutes(10)};
  std::uint64_t node_limit = 0;  // 0 = unlimited
  int check_every = 6;           // prefix linear check period, in placed points
  int threads = 1;
  std::size_t automorphism_cap = 20000;
  bool use_symmetry = true;
  Solver solver = Solver::automatic;
};

struct RecognitionStats {
  std::uint64_t nodes = 0;
  std::uint64_t linear_checks = 0;
  double seconds = 0;
  std::string symmetry;  // "automorphisms(<count>)", "twins" or "none"
};

struct RecognitionResult {
  Verdict verdict = Verdict::no;
  std::optional<Representation> witness;
  std::optional<OrderingWord> word;
  RecognitionStats stats;
};

/// Exhaustive search over ordering words. A pair is rejected as soon as the placed
/// points decide its adjacency against g. Proper flavors constrain the order of right
/// endpoints (and marks, with midpoint); unit and midpoint are decided by linear
/// feasibility on prefixes and at the leaves. The first hit in increasing vertex
/// order is the lexicographically least witness word, whatever the thread count.
RecognitionResult recognize(const SimpleGraph& g, SemanticsTag tag, FlavorSet flavor,
                            const RecognizeOptions& options = {});

struct OrientationReport {
  std::uint64_t orientations = 0;  // 2^m
  std::uint64_t feasible = 0;
  std::vector<Digraph> classes;  // one representative per isomorphism class, in discovery order
  std::vector<std::uint64_t> class_sizes;
};

/// Counts orientations with no directed path on >= 3 vertices whose ends are adjacent.
/// Throws TooManyEdges above `edge_cap`.
OrientationReport orientation_feasible(const SimpleGraph& g, std::size_t edge_cap = 24, bool group_classes = true);

/// The path condition for one orientation (arcs must cover the edges of `g`).
bool orientation_ok(const Digraph& d);

}  // namespace veto
