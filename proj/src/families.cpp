#include "veto/families.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "veto/error.hpp"

namespace veto {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::bad_parameters, message);
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

MarkedInterval iv(const Rational& l, const Rational& m, const Rational& r) { return make_interval(l, m, r); }

MarkedInterval iv(long long l, long long m, long long r) { return make_interval(l, m, r); }

std::vector<int> caterpillar_parents(const std::vector<int>& legs) {
  const int k = static_cast<int>(legs.size());
  std::vector<int> parent(k, -1);
  for (int i = 1; i < k; ++i) parent[i] = i - 1;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < legs[i]; ++j) parent.push_back(i);
  }
  return parent;
}

// Tree-shaped specs normalized to a parent array rooted at 0.
std::optional<std::vector<int>> as_parent_array(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Tree& t) -> std::optional<std::vector<int>> { return t.parent; },
          [](const family::Path& p) -> std::optional<std::vector<int>> {
            require(p.n >= 1, "path needs n >= 1");
            std::vector<int> parent(p.n);
            for (int i = 0; i < p.n; ++i) parent[i] = i - 1;
            return parent;
          },
          [](const family::Star& s) -> std::optional<std::vector<int>> {
            require(s.leaves >= 0, "star needs leaves >= 0");
            std::vector<int> parent(s.leaves + 1, 0);
            parent[0] = -1;
            return parent;
          },
          [](const family::Caterpillar& c) -> std::optional<std::vector<int>> {
            require(!c.legs.empty(), "caterpillar needs a spine");
            return caterpillar_parents(c.legs);
          },
          [](const auto&) -> std::optional<std::vector<int>> { return std::nullopt; },
      },
      spec);
}

struct BfsTree {
  std::vector<int> order;
  std::vector<int> level;
  std::vector<std::vector<int>> children;
};

BfsTree bfs_tree(std::span<const int> parent) {
  validate_parent_array(parent);
  const int n = static_cast<int>(parent.size());
  BfsTree t{{0}, std::vector<int>(n, 0), std::vector<std::vector<int>>(n)};
  for (int v = 1; v < n; ++v) t.children[parent[v]].push_back(v);
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    int v = t.order[i];
    for (int c : t.children[v]) {
      t.level[c] = t.level[v] + 1;
      t.order.push_back(c);
    }
  }
  return t;
}

std::vector<Rational> all_points(const std::map<int, MarkedInterval>& placed) {
  std::vector<Rational> pts;
  for (const auto& [v, interval] : placed) {
    auto p = interval.points();
    pts.insert(pts.end(), p.begin(), p.end());
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

Representation from_map(std::map<int, MarkedInterval> placed, FlavorSet flavor) {
  Representation rep;
  rep.mark_count = 1;
  rep.flavor = flavor;
  for (auto& [v, interval] : placed) rep.intervals.push_back(std::move(interval));
  return rep;
}

[[noreturn]] void unsupported(std::string_view semantics, const FamilySpec& spec) {
  throw Error(ErrorKind::unsupported_family,
              "no " + std::string(semantics) + " construction for " + describe(spec));
}

// Leaf insertion: each new vertex a with parent v gets x < a_l < v_r < a_v < a_r < w,
// where x and w are the marked points closest to v_r on either side.
Representation vi_tree(std::span<const int> parent) {
  BfsTree t = bfs_tree(parent);
  std::map<int, MarkedInterval> placed;
  placed.emplace(0, iv(0, 1, 2));
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    const int a = t.order[i];
    const Rational vr = placed.at(parent[a]).right;
    auto pts = all_points(placed);
    auto it = std::lower_bound(pts.begin(), pts.end(), vr);
    const Rational below = *std::prev(it);
    const Rational above = std::next(it) == pts.end() ? Rational(vr + 1) : *std::next(it);
    placed.emplace(a, iv((below + vr) / 2, vr + (above - vr) / 3, vr + (above - vr) * 2 / 3));
  }
  return from_map(std::move(placed), {});
}

Representation muvi_caterpillar(const std::vector<int>& legs) {
  require(!legs.empty(), "caterpillar needs a spine");
  const long long k = static_cast<long long>(legs.size());
  Representation rep;
  rep.flavor = FlavorSet{Flavor::unit, Flavor::proper, Flavor::midpoint};
  for (long long i = 1; i <= k; ++i) rep.intervals.push_back(iv(2 * i - 1, 2 * i, 2 * i + 1));
  for (long long i = 1; i <= k; ++i) {
    require(legs[i - 1] >= 0, "negative leg count");
    const Rational shift = make_rational(i, k + 1);
    for (int j = 0; j < legs[i - 1]; ++j) {
      rep.intervals.push_back(iv(2 * i - 3 + shift, 2 * i - 2 + shift, 2 * i - 1 + shift));
    }
  }
  return rep;
}

// v_1..v_n in cycle order; every interval has length 24 with a centred mark.
Representation muvi_cycle(int n) {
  std::vector<MarkedInterval> v(n + 1);
  const long long N = n;
  auto standard = [&](long long i) { return iv(20 * (N - i) + 12, 20 * (N - i) + 24, 20 * (N - i) + 36); };
  if (n % 2 == 1) {
    for (long long k = 1; k <= (N + 1) / 2; ++k) v[k] = iv(20 * k - 18, 20 * k - 6, 20 * k + 6);
    v[(N + 3) / 2] = iv(10 * N - 22, 10 * N - 10, 10 * N + 2);
    for (long long i = (N + 5) / 2; i <= N - 1; ++i) v[i] = standard(i);
  } else {
    for (long long k = 1; k <= N / 2; ++k) v[k] = iv(20 * k - 18, 20 * k - 6, 20 * k + 6);
    v[(N + 2) / 2] = iv(10 * N - 4, 10 * N + 8, 10 * N + 20);
    for (long long i = (N + 4) / 2; i <= N - 1; ++i) v[i] = standard(i);
  }
  v[n] = iv(15, 27, 39);
  Representation rep;
  rep.flavor = FlavorSet{Flavor::unit, Flavor::proper, Flavor::midpoint};
  rep.intervals.assign(v.begin() + 1, v.end());
  return rep;
}

// The single approval cycle is drawn with v_1 ~ v_2, v_i ~ v_{i+2}, v_{n-1} ~ v_n.
// Walking the cycle from v_1: v_1, v_2, v_4, v_6, ..., then the odd labels downwards.
std::vector<int> sa_cycle_walk(int n) {
  std::vector<int> walk{1};
  for (int i = 2; i <= n; i += 2) walk.push_back(i);
  for (int i = (n % 2 == 1) ? n : n - 1; i >= 3; i -= 2) walk.push_back(i);
  return walk;
}

std::vector<MarkedInterval> sa_cycle(int n) {
  const long long N = n;
  std::vector<MarkedInterval> label(n + 1);
  label[1] = iv(2, 6, 7);
  for (long long i = 2; i <= N - 1; ++i) label[i] = iv(2 * i, 2 * i + 4, 2 * i + 7);
  label[n] = iv(2 * N, 2 * N + 6, 2 * N + 7);
  std::vector<MarkedInterval> out;
  for (int l : sa_cycle_walk(n)) out.push_back(label[l]);
  return out;
}

Representation sa_multipartite(const std::vector<int>& parts) {
  long long n = 0;
  for (int c : parts) {
    require(c >= 1, "partite sets must be non-empty");
    n += c;
  }
  Representation rep;
  long long a = 1;
  for (int c : parts) {
    for (long long b = 1; b <= c; ++b, ++a) rep.intervals.push_back(iv(a, n + 2 * a - b, n + 2 * a - b + c));
  }
  return rep;
}

// Level algorithm: a child v of p gets its left endpoint just left of p's mark,
// its mark just right of p_r, and its right endpoint one unit past every
// right endpoint of shallower levels, ordered among its own level like the marks.
Representation sa_tree(std::span<const int> parent) {
  BfsTree t = bfs_tree(parent);
  std::map<int, MarkedInterval> placed;
  placed.emplace(0, iv(0, 1, 2));
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    const int v = t.order[i];
    const auto& p = placed.at(parent[v]);
    auto pts = all_points(placed);
    const Rational pa = p.marks[0];
    const Rational pr = p.right;
    const Rational before = *std::prev(std::lower_bound(pts.begin(), pts.end(), pa));
    auto after = std::upper_bound(pts.begin(), pts.end(), pr);
    const Rational next = after == pts.end() ? Rational(pr + 1) : *after;
    const Rational left = (before + pa) / 2;
    const Rational mark = (pr + next) / 2;

    Rational shallow_right = 0;
    bool any = false;
    for (const auto& [u, interval] : placed) {
      if (t.level[u] < t.level[v] && (!any || interval.right > shallow_right)) {
        shallow_right = interval.right;
        any = true;
      }
    }
    Rational lo = shallow_right + 1;
    Rational hi = shallow_right + 2;
    for (const auto& [u, interval] : placed) {
      if (t.level[u] != t.level[v]) continue;
      if (interval.marks[0] < mark) lo = std::max(lo, interval.right);
      else hi = std::min(hi, interval.right);
    }
    placed.emplace(v, iv(left, mark, (lo + hi) / 2));
  }
  return from_map(std::move(placed), {});
}

Representation da_complete(int n) {
  Representation rep;
  for (long long i = 1; i <= n; ++i) rep.intervals.push_back(iv(i, i + n, i + 2LL * n));
  return rep;
}

// v_i = (i, 2i+n, 2i+n+3) for i <= n-3, then three closing intervals.
std::vector<MarkedInterval> da_cycle(int n) {
  const long long N = n;
  std::vector<MarkedInterval> out;
  for (long long i = 1; i <= N - 3; ++i) out.push_back(iv(i, 2 * i + N, 2 * i + N + 3));
  out.push_back(iv(-2, 3 * N - 4, 3 * N - 2));
  out.push_back(iv(-1, 0, 3 * N - 1));
  out.push_back(iv(-3, N + 1, N + 3));
  return out;
}

std::vector<MarkedInterval> da_bipartite(int m, int n) {
  const long long M = m, N = n;
  std::vector<MarkedInterval> out;
  for (long long i = 1; i <= M; ++i) out.push_back(iv(2 * i, 2 * M + 2 * N + 2 * i, 2 * M + 2 * N + 2 * i + 1));
  for (long long i = 1; i <= N; ++i) out.push_back(iv(2 * M + 2 * i, 2 * M + 2 * i + 1, 4 * M + 2 * N + 2 * i));
  return out;
}

// Base: star around the root. Each further level nests the children of a
// previous-level vertex x inside an empty neighbourhood (x_a - d, x_a + d).
Representation da_tree(std::span<const int> parent) {
  BfsTree t = bfs_tree(parent);
  std::map<int, MarkedInterval> placed;
  const auto& root_children = t.children[0];
  const long long k = static_cast<long long>(root_children.size());
  placed.emplace(0, iv(0, k + 1, 3 * k + 2));
  for (long long i = 1; i <= k; ++i) placed.emplace(root_children[i - 1], iv(i, k + 2 * i, k + 2 * i + 1));
  const int height = *std::max_element(t.level.begin(), t.level.end());
  for (int level = 2; level <= height; ++level) {
    auto pts = all_points(placed);
    std::map<int, MarkedInterval> fresh;
    for (const auto& [x, interval] : placed) {
      if (t.level[x] != level - 1 || t.children[x].empty()) continue;
      const Rational xa = interval.marks[0];
      Rational d = -1;
      for (const auto& p : pts) {
        if (p != xa && (d < 0 || abs(p - xa) < d)) d = abs(p - xa);
      }
      d /= 2;
      const long long j = static_cast<long long>(t.children[x].size());
      for (long long i = 1; i <= j; ++i) {
        fresh.emplace(t.children[x][i - 1],
                      iv(xa - d + d * i / (2 * j), xa + d * i / (2 * j), xa + d * (2 * i + 1) / (4 * j)));
      }
    }
    placed.merge(fresh);
  }
  return from_map(std::move(placed), {});
}

}  // namespace

void validate_parent_array(std::span<const int> parent) {
  const int n = static_cast<int>(parent.size());
  require(n >= 1, "tree needs at least one vertex");
  require(parent[0] == -1, "tree root 0 must have parent -1");
  for (int v = 1; v < n; ++v) {
    require(parent[v] >= 0 && parent[v] < n && parent[v] != v, "bad parent for vertex " + std::to_string(v));
  }
  for (int v = 1; v < n; ++v) {
    int steps = 0;
    for (int u = v; u != 0; u = parent[u]) {
      require(++steps <= n, "parent array has a cycle through vertex " + std::to_string(v));
    }
  }
}

std::string describe(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Complete& s) { return "complete(" + std::to_string(s.n) + ")"; },
          [](const family::Cycle& s) { return "cycle(" + std::to_string(s.n) + ")"; },
          [](const family::Path& s) { return "path(" + std::to_string(s.n) + ")"; },
          [](const family::Star& s) { return "star(" + std::to_string(s.leaves) + ")"; },
          [](const family::Wheel& s) { return "wheel(" + std::to_string(s.rim) + ")"; },
          [](const family::CompleteBipartite& s) {
            return "complete_bipartite(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
          },
          [](const family::CompleteMultipartite& s) { return "complete_multipartite(" + join(s.parts) + ")"; },
          [](const family::Caterpillar& s) { return "caterpillar(" + join(s.legs) + ")"; },
          [](const family::Tree& s) { return "tree(" + join(s.parent) + ")"; },
          [](const family::K1bc& s) { return "k1bc(" + std::to_string(s.b) + "," + std::to_string(s.c) + ")"; },
      },
      spec);
}

SimpleGraph family_graph(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Complete& s) { return complete_graph(s.n); },
          [](const family::Cycle& s) { return cycle_graph(s.n); },
          [](const family::Path& s) { return path_graph(s.n); },
          [](const family::Star& s) { return star_graph(s.leaves); },
          [](const family::Wheel& s) { return wheel_graph(s.rim); },
          [](const family::CompleteBipartite& s) { return complete_bipartite_graph(s.m, s.n); },
          [](const family::CompleteMultipartite& s) { return complete_multipartite_graph(s.parts); },
          [](const family::Caterpillar& s) { return caterpillar_graph(s.legs); },
          [](const family::Tree& s) { return tree_graph(s.parent); },
          [](const family::K1bc& s) {
            std::vector<int> parts{s.b, s.c, 1};
            return complete_multipartite_graph(parts);
          },
      },
      spec);
}

Representation vi_family_rep(const FamilySpec& spec) {
  if (const auto* s = std::get_if<family::CompleteBipartite>(&spec)) {
    require(s->m >= 1 && s->n >= 1, "complete bipartite needs m, n >= 1");
    Representation rep;
    rep.flavor = FlavorSet{Flavor::unit, Flavor::proper, Flavor::midpoint};
    rep.intervals.assign(s->m, iv(0, 2, 4));
    rep.intervals.insert(rep.intervals.end(), s->n, iv(3, 5, 7));
    return rep;
  }
  if (const auto* s = std::get_if<family::Caterpillar>(&spec)) return muvi_caterpillar(s->legs);
  if (const auto* s = std::get_if<family::Cycle>(&spec)) {
    if (s->n < 4) unsupported("veto", spec);
    return muvi_cycle(s->n);
  }
  if (auto parent = as_parent_array(spec)) return vi_tree(*parent);
  unsupported("veto", spec);
}

Representation sa_family_rep(const FamilySpec& spec) {
  if (const auto* s = std::get_if<family::Complete>(&spec)) {
    require(s->n >= 1, "complete graph needs n >= 1");
    Representation rep;
    for (long long i = 1; i <= s->n; ++i) rep.intervals.push_back(iv(-2 * i, -2 * i + 1, 2 * i));
    return rep;
  }
  if (const auto* s = std::get_if<family::Cycle>(&spec)) {
    if (s->n < 3) unsupported("single approval", spec);
    Representation rep;
    rep.intervals = sa_cycle(s->n);
    return rep;
  }
  if (const auto* s = std::get_if<family::Wheel>(&spec)) {
    if (s->rim < 3) unsupported("single approval", spec);
    Representation rep;
    rep.intervals = sa_cycle(s->rim);
    const long long n = s->rim;
    rep.intervals.push_back(iv(2, 2 * n + 8, 2 * n + 10));
    return rep;
  }
  if (const auto* s = std::get_if<family::CompleteMultipartite>(&spec)) return sa_multipartite(s->parts);
  if (const auto* s = std::get_if<family::CompleteBipartite>(&spec)) return sa_multipartite({s->m, s->n});
  if (auto parent = as_parent_array(spec)) return sa_tree(*parent);
  unsupported("single approval", spec);
}

Representation da_family_rep(const FamilySpec& spec) {
  if (const auto* s = std::get_if<family::Complete>(&spec)) {
    require(s->n >= 1, "complete graph needs n >= 1");
    return da_complete(s->n);
  }
  if (const auto* s = std::get_if<family::Cycle>(&spec)) {
    if (s->n < 3) unsupported("double approval", spec);
    if (s->n == 3) return da_complete(3);
    Representation rep;
    rep.intervals = da_cycle(s->n);
    return rep;
  }
  if (const auto* s = std::get_if<family::Wheel>(&spec)) {
    if (s->rim < 3) unsupported("double approval", spec);
    if (s->rim == 3) return da_complete(4);
    Representation rep;
    rep.intervals = da_cycle(s->rim);
    const long long n = s->rim;
    rep.intervals.push_back(iv(-4, n, 3 * n));
    return rep;
  }
  if (const auto* s = std::get_if<family::CompleteBipartite>(&spec)) {
    require(s->m >= 1 && s->n >= 1, "complete bipartite needs m, n >= 1");
    Representation rep;
    rep.intervals = da_bipartite(s->m, s->n);
    return rep;
  }
  if (const auto* s = std::get_if<family::K1bc>(&spec)) {
    require(s->b >= 1 && s->c >= 1, "K_{1,b,c} needs b, c >= 1");
    Representation rep;
    rep.intervals = da_bipartite(s->b, s->c);
    const long long m = s->b, n = s->c;
    rep.intervals.push_back(iv(Rational(1), make_rational(4 * m + 4 * n + 3, 2), Rational(4 * m + 4 * n + 1)));
    return rep;
  }
  if (auto parent = as_parent_array(spec)) return da_tree(*parent);
  unsupported("double approval", spec);
}

SimpleGraph complete_graph(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph star_graph(int leaves) {
  require(leaves >= 0, "star needs leaves >= 0");
  SimpleGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

SimpleGraph wheel_graph(int rim) {
  require(rim >= 3, "wheel needs rim >= 3");
  SimpleGraph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(i, (i + 1) % rim);
    g.add_edge(i, rim);
  }
  return g;
}

SimpleGraph complete_bipartite_graph(int m, int n) {
  std::vector<int> parts{m, n};
  return complete_multipartite_graph(parts);
}

SimpleGraph complete_multipartite_graph(std::span<const int> parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "partite sets must be non-empty");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (part_of[i] != part_of[j]) g.add_edge(i, j);
    }
  }
  return g;
}

SimpleGraph caterpillar_graph(std::span<const int> legs) {
  require(!legs.empty(), "caterpillar needs a spine");
  for (int l : legs) require(l >= 0, "negative leg count");
  return tree_graph(caterpillar_parents({legs.begin(), legs.end()}));
}

SimpleGraph tree_graph(std::span<const int> parent) {
  validate_parent_array(parent);
  SimpleGraph g(static_cast<int>(parent.size()));
  for (std::size_t v = 1; v < parent.size(); ++v) g.add_edge(parent[v], static_cast<int>(v));
  return g;
}

SimpleGraph grotzsch_graph() {
  SimpleGraph g(11);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);            // outer cycle
    g.add_edge(5 + i, (i + 1) % 5);        // shadow of i sees the cycle neighbours of i
    g.add_edge(5 + i, (i + 4) % 5);
    g.add_edge(5 + i, 10);                 // hub
  }
  return g;
}

SimpleGraph lobster5_graph() {
  SimpleGraph g(11);
  for (int i = 1; i <= 5; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, 5 + i);
  }
  return g;
}

SimpleGraph g_k_graph(int k) {
  require(k >= 1, "G_k needs k >= 1");
  SimpleGraph g(1 + k + k * (k - 1) / 2);
  int next = k + 1;
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      g.add_edge(next, i);
      g.add_edge(next, j);
      ++next;
    }
  }
  return g;
}

SimpleGraph circulant_graph(int n, std::span<const int> jumps) {
  require(n >= 1, "circulant needs n >= 1");
  SimpleGraph g(n);
  for (int s : jumps) {
    int step = ((s % n) + n) % n;
    require(step != 0, "circulant jump must not be a multiple of n");
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + step) % n);
  }
  return g;
}

SimpleGraph named_graph(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    require(params.size() == count, std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "complete") { need(1); return complete_graph(params[0]); }
  if (name == "cycle") { need(1); return cycle_graph(params[0]); }
  if (name == "path") { need(1); return path_graph(params[0]); }
  if (name == "star") { need(1); return star_graph(params[0]); }
  if (name == "wheel") { need(1); return wheel_graph(params[0]); }
  if (name == "complete-bipartite") { need(2); return complete_bipartite_graph(params[0], params[1]); }
  if (name == "complete-multipartite") return complete_multipartite_graph(params);
  if (name == "caterpillar") return caterpillar_graph(params);
  if (name == "tree") return tree_graph(params);
  if (name == "grotzsch") { need(0); return grotzsch_graph(); }
  if (name == "lobster5") { need(0); return lobster5_graph(); }
  if (name == "g-k") { need(1); return g_k_graph(params[0]); }
  if (name == "circulant") {
    require(params.size() >= 2, "circulant takes n followed by jumps");
    return circulant_graph(params[0], params.subspan(1));
  }
  throw Error(ErrorKind::bad_parameters, "unknown graph '" + std::string(name) + "'");
}

}  // namespace veto
