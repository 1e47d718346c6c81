#include "veto/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "veto/error.hpp"

namespace veto {

SimpleGraph::SimpleGraph(int order) : order_(order) {
  if (order < 0) throw Error(ErrorKind::bad_parameters, "negative vertex count");
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw Error(ErrorKind::bad_parameters,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw Error(ErrorKind::bad_parameters, "loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  edges_.emplace(u, v);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edges_.contains({u, v});
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

SimpleGraph SimpleGraph::without_vertex(int v) const {
  SimpleGraph h(order_ - 1);
  for (auto [a, b] : edges_) {
    if (a == v || b == v) continue;
    h.add_edge(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return h;
}

std::vector<std::uint64_t> SimpleGraph::adjacency_masks() const {
  if (order_ > 64) throw Error(ErrorKind::too_large, "graph has more than 64 vertices");
  std::vector<std::uint64_t> rows(order_, 0);
  for (auto [a, b] : edges_) {
    rows[a] |= std::uint64_t{1} << b;
    rows[b] |= std::uint64_t{1} << a;
  }
  return rows;
}

Digraph::Digraph(int order) : order_(order) {
  if (order < 0) throw Error(ErrorKind::bad_parameters, "negative vertex count");
}

void Digraph::add_arc(int from, int to) {
  if (from < 0 || to < 0 || from >= order_ || to >= order_ || from == to) {
    throw Error(ErrorKind::bad_parameters,
                "bad arc (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  if (arcs_.contains({to, from})) {
    throw Error(ErrorKind::bad_parameters, "antiparallel arc between " + std::to_string(from) +
                                               " and " + std::to_string(to));
  }
  arcs_.emplace(from, to);
}

bool Digraph::has_arc(int from, int to) const { return arcs_.contains({from, to}); }

SimpleGraph Digraph::underlying() const {
  SimpleGraph g(order_);
  for (auto [a, b] : arcs_) g.add_edge(a, b);
  return g;
}

namespace {

// Parses `<KEYWORD> n=<a> m=<b>`.
std::pair<int, int> read_header(std::istream& in, const std::string& keyword) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::istringstream head(line);
  std::string word, n_field, m_field;
  head >> word >> n_field >> m_field;
  if (word != keyword || n_field.rfind("n=", 0) != 0 || m_field.rfind("m=", 0) != 0) {
    throw Error(ErrorKind::parse, "expected '" + keyword + " n=<count> m=<count>', got '" + line + "'");
  }
  try {
    return {std::stoi(n_field.substr(2)), std::stoi(m_field.substr(2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, "bad header '" + line + "'");
  }
}

std::vector<std::pair<int, int>> read_pairs(std::istream& in, int count) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < count; ++i) {
    int a = 0, b = 0;
    if (!(in >> a >> b)) throw Error(ErrorKind::parse, "expected " + std::to_string(count) + " pairs");
    pairs.emplace_back(a, b);
  }
  return pairs;
}

}  // namespace

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "GRAPH n=" << g.order() << " m=" << g.size() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

SimpleGraph read_graph(std::istream& in) {
  auto [n, m] = read_header(in, "GRAPH");
  SimpleGraph g(n);
  for (auto [a, b] : read_pairs(in, m)) {
    if (a >= b) throw Error(ErrorKind::parse, "edge lines must satisfy u < v");
    g.add_edge(a, b);
  }
  if (static_cast<int>(g.size()) != m) throw Error(ErrorKind::parse, "duplicate edges in graph file");
  return g;
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << "DIGRAPH n=" << d.order() << " m=" << d.size() << '\n';
  for (auto [a, b] : d.arcs()) out << a << ' ' << b << '\n';
}

Digraph read_digraph(std::istream& in) {
  auto [n, m] = read_header(in, "DIGRAPH");
  Digraph d(n);
  for (auto [a, b] : read_pairs(in, m)) d.add_arc(a, b);
  return d;
}

std::string to_string(const SimpleGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace veto
