#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace veto {

/// Undirected simple graph on vertices 0..n-1. Edges are stored as (u, v) with u < v.
class SimpleGraph {
 public:
  using Edge = std::pair<int, int>;

  explicit SimpleGraph(int order = 0);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  /// Adds {u, v}; rejects loops and out-of-range endpoints. Re-adding is a no-op.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  /// Graph with vertex v removed; later vertices shift down by one.
  SimpleGraph without_vertex(int v) const;

  /// Row bitmasks; requires order() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int order_;
  std::set<Edge> edges_;
};

/// Directed graph without loops and with at most one arc per unordered pair.
class Digraph {
 public:
  using Arc = std::pair<int, int>;

  explicit Digraph(int order = 0);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  const std::set<Arc>& arcs() const noexcept { return arcs_; }

  void add_arc(int from, int to);
  bool has_arc(int from, int to) const;
  SimpleGraph underlying() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int order_;
  std::set<Arc> arcs_;
};

// Text formats:
//   GRAPH n=<count> m=<edges>    followed by one `u v` line per edge, u < v
//   DIGRAPH n=<count> m=<arcs>   followed by one `from to` line per arc
void write_graph(std::ostream& out, const SimpleGraph& g);
SimpleGraph read_graph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d);
Digraph read_digraph(std::istream& in);

std::string to_string(const SimpleGraph& g);

}  // namespace veto
