#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "veto/graph.hpp"

namespace veto {

/// Vertex map `phi` with g.has_edge(u, v) <=> h.has_edge(phi[u], phi[v]), if one exists.
std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h);
std::optional<std::vector<int>> find_isomorphism(const Digraph& g, const Digraph& h);

inline bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  return find_isomorphism(g, h).has_value();
}
inline bool are_isomorphic(const Digraph& g, const Digraph& h) {
  return find_isomorphism(g, h).has_value();
}

/// Every automorphism of g as a permutation, identity first; nullopt once more than `cap` exist.
std::optional<std::vector<std::vector<int>>> automorphisms(const SimpleGraph& g, std::size_t cap);

}  // namespace veto
