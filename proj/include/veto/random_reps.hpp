#pragma once

#include <random>
#include <vector>

#include "veto/core.hpp"
#include "veto/semantics.hpp"

namespace veto {

// Seeded generators for the property suites. Apart from `tied_rep`, every
// output has pairwise distinct points and declares the flavors it was built for.

/// Shuffle the ranks 1..(k+2)n and cut them into sorted groups of k+2.
Representation random_rep(std::mt19937_64& rng, int n, int k = 1);

/// Length 1, random left endpoints and marks on a grid of 1/1000. Flags {unit, proper}.
Representation random_unit_rep(std::mt19937_64& rng, int n);

/// Length 1, centred marks. Flags {unit, proper, midpoint}.
Representation random_midpoint_unit_rep(std::mt19937_64& rng, int n);

/// Lefts and rights in the same order, marks anywhere inside. Flags {proper}.
Representation random_proper_rep(std::mt19937_64& rng, int n);

/// Lefts and rights in the same order, centred marks. Flags {proper, midpoint}.
Representation random_midpoint_proper_rep(std::mt19937_64& rng, int n);

/// Small integer grid with shared endpoints, shared marks and duplicate intervals.
/// Declares exactly the flags that hold.
Representation tied_rep(std::mt19937_64& rng, int n);

/// 2n distinct endpoints paired at random.
std::vector<PlainInterval> random_plain_intervals(std::mt19937_64& rng, int n);

/// Uniform integer in [lo, hi].
int uniform_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace veto
