#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <tuple>

#include "veto/error.hpp"
#include "veto/isomorphism.hpp"
#include "veto/recognize.hpp"

namespace veto {

namespace {

using Mask = std::uint64_t;

// out[v] lists arc heads; true if some arc u->v also has a longer path u ~> v,
// or some arc closes a directed cycle.
bool violates(const std::vector<Mask>& out, int n) {
  std::vector<Mask> reach = out;  // paths of length >= 1
  for (int k = 0; k < n; ++k) {
    const Mask bit = Mask{1} << k;
    for (int i = 0; i < n; ++i) {
      if (reach[i] & bit) reach[i] |= reach[k];
    }
  }
  for (int u = 0; u < n; ++u) {
    if (reach[u] >> u & 1) return true;  // directed cycle
    Mask longer = 0;
    for (Mask m = out[u]; m != 0; m &= m - 1) longer |= reach[std::countr_zero(m)];
    if (longer & out[u]) return true;
  }
  return false;
}

std::vector<Mask> out_masks(const Digraph& d) {
  std::vector<Mask> out(d.order(), 0);
  for (auto [a, b] : d.arcs()) out[a] |= Mask{1} << b;
  return out;
}

// Cheap isomorphism invariant: sorted (out, in) degree pairs.
std::vector<std::pair<int, int>> degree_profile(const Digraph& d) {
  std::vector<std::pair<int, int>> deg(d.order(), {0, 0});
  for (auto [a, b] : d.arcs()) {
    ++deg[a].first;
    ++deg[b].second;
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

}  // namespace

bool orientation_ok(const Digraph& d) {
  if (d.order() > 64) throw Error(ErrorKind::too_large, "orientation check supports at most 64 vertices");
  return !violates(out_masks(d), d.order());
}

OrientationReport orientation_feasible(const SimpleGraph& g, std::size_t edge_cap, bool group_classes) {
  const std::size_t m = g.size();
  if (m > edge_cap || m > 40) {
    throw Error(ErrorKind::too_many_edges,
                std::to_string(m) + " edges exceed the orientation cap of " + std::to_string(std::min<std::size_t>(edge_cap, 40)));
  }
  if (g.order() > 64) throw Error(ErrorKind::too_large, "orientation check supports at most 64 vertices");
  const int n = g.order();
  const std::vector<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());

  OrientationReport report;
  report.orientations = std::uint64_t{1} << m;
  std::map<std::vector<std::pair<int, int>>, std::vector<std::size_t>> buckets;
  std::vector<Mask> out(n);
  for (std::uint64_t mask = 0; mask < report.orientations; ++mask) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      if (mask >> e & 1) {
        out[v] |= Mask{1} << u;
      } else {
        out[u] |= Mask{1} << v;
      }
    }
    if (violates(out, n)) continue;
    ++report.feasible;
    if (!group_classes) continue;

    Digraph d(n);
    for (std::size_t e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      if (mask >> e & 1) {
        d.add_arc(v, u);
      } else {
        d.add_arc(u, v);
      }
    }
    auto& bucket = buckets[degree_profile(d)];
    bool placed = false;
    for (std::size_t c : bucket) {
      if (are_isomorphic(report.classes[c], d)) {
        ++report.class_sizes[c];
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(report.classes.size());
      report.classes.push_back(std::move(d));
      report.class_sizes.push_back(1);
    }
  }
  return report;
}

}  // namespace veto
