#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "veto/core.hpp"
#include "veto/graph.hpp"

namespace veto {

namespace family {

struct Complete { int n; };
struct Cycle { int n; };
struct Path { int n; };
struct Star { int leaves; };                       // centre is vertex 0
struct Wheel { int rim; };                         // rim 0..rim-1, hub = rim
struct CompleteBipartite { int m; int n; };
struct CompleteMultipartite { std::vector<int> parts; };
struct Caterpillar { std::vector<int> legs; };     // legs per spine vertex; spine first, then legs
struct Tree { std::vector<int> parent; };          // parent[0] == -1, root 0
struct K1bc { int b; int c; };                     // parts b, c, then the single hub

}  // namespace family

using FamilySpec = std::variant<family::Complete, family::Cycle, family::Path, family::Star, family::Wheel,
                                family::CompleteBipartite, family::CompleteMultipartite, family::Caterpillar,
                                family::Tree, family::K1bc>;

std::string describe(const FamilySpec& spec);

/// The labelled graph a family spec names; builders below realize it label for label.
SimpleGraph family_graph(const FamilySpec& spec);

/// Veto representations: complete bipartite, tree (and path/star/caterpillar), caterpillar, cycle.
Representation vi_family_rep(const FamilySpec& spec);
/// Single approval representations: complete, cycle, wheel, tree, complete multipartite.
Representation sa_family_rep(const FamilySpec& spec);
/// Double approval representations: complete, cycle, wheel, complete bipartite, tree, K_{1,b,c}.
Representation da_family_rep(const FamilySpec& spec);

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph star_graph(int leaves);
SimpleGraph wheel_graph(int rim);
SimpleGraph complete_bipartite_graph(int m, int n);
SimpleGraph complete_multipartite_graph(std::span<const int> parts);
SimpleGraph caterpillar_graph(std::span<const int> legs);
SimpleGraph tree_graph(std::span<const int> parent);

// Groetzsch graph as the Mycielskian of C_5, labelled as in the usual drawing:
//   a..e = 0..4   outer 5-cycle a-b-c-d-e-a
//   f..j = 5..9   shadow of a..e (f ~ b,e; g ~ a,c; h ~ b,d; i ~ c,e; j ~ a,d)
//   k    = 10     hub joined to f..j
SimpleGraph grotzsch_graph();

/// Star S_5 with every edge subdivided: centre 0, middles 1..5, leaf 5+i hangs off i.
SimpleGraph lobster5_graph();

/// Hub 0 joined to a_1..a_k (1..k), plus a connector b_ij adjacent to a_i and a_j for each pair.
SimpleGraph g_k_graph(int k);

SimpleGraph circulant_graph(int n, std::span<const int> jumps);

/// Dispatch by CLI name: complete, cycle, path, star, wheel, complete-bipartite,
/// complete-multipartite, caterpillar, tree, grotzsch, lobster5, g-k, circulant.
SimpleGraph named_graph(std::string_view name, std::span<const int> params);

/// Parent array check: root 0 with parent -1, every other parent earlier-reachable, no cycles.
void validate_parent_array(std::span<const int> parent);

}  // namespace veto
