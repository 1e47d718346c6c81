#include "veto/linear_system.hpp"

#include <cstdint>
#include <tuple>

#include "veto/error.hpp"
#include "veto/simplex.hpp"

namespace veto {

namespace {

struct Layout {
  int points = 0;  // placed positions
  int k = 1;
  std::vector<std::vector<int>> pos;  // pos[v][slot] or -1
  std::vector<int> opened;            // vertices with L placed, in opening order
};

Layout layout(std::span<const int> prefix, int n, int k) {
  Layout out;
  out.points = static_cast<int>(prefix.size());
  out.k = k;
  out.pos.assign(n, std::vector<int>(k + 2, -1));
  std::vector<int> seen(n, 0);
  for (int p = 0; p < out.points; ++p) {
    const int v = prefix[p];
    if (v < 0 || v >= n || seen[v] > k + 1) throw Error(ErrorKind::invalid_representation, "bad ordering prefix");
    if (seen[v] == 0) out.opened.push_back(v);
    out.pos[v][seen[v]++] = p;
  }
  return out;
}

// x_to - x_from <= c, strictly when `strict`.
struct Difference {
  int from;
  int to;
  std::int64_t c;
  bool strict;
};

// Weight c - s*eps stored as (c, -s); lexicographic order.
using Weight = std::pair<std::int64_t, std::int64_t>;

// Unit length U = 2 so a centred mark sits at integer offset 1.
std::optional<std::vector<Rational>> solve_difference(const Layout& lay, FlavorSet flavor) {
  constexpr std::int64_t U = 2;
  const bool midpoint = flavor.contains(Flavor::midpoint);
  const int P = lay.points;
  const int last = P - 1;
  std::vector<Difference> cons;
  for (int p = 0; p + 1 < P; ++p) cons.push_back({p + 1, p, 0, true});
  auto equal = [&](int a, int b, std::int64_t c) {  // x_b - x_a = c
    cons.push_back({a, b, c, false});
    cons.push_back({b, a, -c, false});
  };
  for (int v : lay.opened) {
    const auto& s = lay.pos[v];
    const int L = s[0];
    const int R = s[lay.k + 1];
    if (R >= 0) {
      equal(L, R, U);
    } else {
      cons.push_back({L, last, U, true});
    }
    if (midpoint) {
      if (s[1] >= 0) {
        equal(L, s[1], U / 2);
      } else {
        cons.push_back({L, last, U / 2, true});
      }
    }
  }

  std::vector<Weight> d(P, Weight{0, 0});
  bool changed = true;
  for (int round = 0; round <= P && changed; ++round) {
    changed = false;
    for (const auto& e : cons) {
      Weight w{d[e.from].first + e.c, d[e.from].second - (e.strict ? 1 : 0)};
      if (w < d[e.to]) {
        d[e.to] = w;
        changed = true;
      }
    }
  }
  if (changed) return std::nullopt;  // still relaxing after P+1 rounds: negative cycle

  Rational eps = 1;
  for (const auto& e : cons) {
    const std::int64_t gap = e.c + d[e.from].first - d[e.to].first;
    const std::int64_t slope = d[e.from].second - d[e.to].second;  // coefficient pulling x_to above the bound
    if (gap > 0 && slope < 0) {
      Rational bound = make_rational(gap, -2 * slope);
      if (bound < eps) eps = bound;
    }
  }
  std::vector<Rational> x(P);
  for (int p = 0; p < P; ++p) x[p] = (Rational(d[p].first) + Rational(d[p].second) * eps) / U;
  const Rational shift = P > 0 ? x[0] : Rational(0);
  for (auto& v : x) v -= shift;
  return x;
}

// Homogeneous system over gaps g_p = x_{p+1} - x_p >= 1 (plus U >= 1 with unit).
// Strict inequalities become ">= 1" by scaling.
std::optional<std::vector<Rational>> solve_simplex(const Layout& lay, FlavorSet flavor) {
  const bool unit = flavor.contains(Flavor::unit);
  const bool midpoint = flavor.contains(Flavor::midpoint);
  const int P = lay.points;
  const int gaps = P > 0 ? P - 1 : 0;
  const int vars = gaps + (unit ? 1 : 0);
  const int u_var = gaps;
  const int last = P - 1;

  struct Row {
    std::vector<Rational> a;
    bool geq_one;  // otherwise "= 0"
  };
  std::vector<Row> rows;
  auto fresh = [&]() { return std::vector<Rational>(vars); };
  auto add_span = [&](std::vector<Rational>& a, int from, int to, long long coef) {  // coef * (x_to - x_from)
    for (int p = from; p < to; ++p) a[p] += coef;
    for (int p = to; p < from; ++p) a[p] -= coef;
  };

  for (int v : lay.opened) {
    const auto& s = lay.pos[v];
    const int L = s[0];
    const int M = s[1];
    const int R = s[lay.k + 1];
    if (unit) {
      auto a = fresh();
      if (R >= 0) {
        add_span(a, L, R, 1);  // R - L - U = 0
        a[u_var] -= 1;
        rows.push_back({a, false});
      } else {
        add_span(a, last, L, 1);  // L + U - last >= 1
        a[u_var] += 1;
        rows.push_back({a, true});
      }
    }
    if (midpoint) {
      auto a = fresh();
      if (M >= 0 && R >= 0) {
        add_span(a, L, M, 1);  // (M - L) - (R - M) = 0
        add_span(a, M, R, -1);
        rows.push_back({a, false});
      } else if (M >= 0 && unit) {
        add_span(a, L, M, 2);  // 2(M - L) - U = 0
        a[u_var] -= 1;
        rows.push_back({a, false});
      } else if (M >= 0) {
        add_span(a, last, M, 2);  // (M - last) + (M - L) >= 1, i.e. 2M - L - last > 0
        add_span(a, L, M, 1);
        rows.push_back({a, true});
      } else if (unit) {
        add_span(a, last, L, 2);  // 2L + U - 2 last >= 1
        a[u_var] += 1;
        rows.push_back({a, true});
      }
    }
  }

  // Substitute y = 1 + z for each variable and add a surplus per ">= 1" row.
  int surplus = 0;
  for (const auto& r : rows) surplus += r.geq_one ? 1 : 0;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  int next_surplus = vars;
  for (const auto& r : rows) {
    std::vector<Rational> a(vars + surplus);
    Rational rhs = r.geq_one ? 1 : 0;
    for (int j = 0; j < vars; ++j) {
      a[j] = r.a[j];
      rhs -= r.a[j];
    }
    if (r.geq_one) a[next_surplus++] = -1;
    A.push_back(std::move(a));
    b.push_back(rhs);
  }
  auto z = find_nonnegative_solution(A, b);
  if (!z) return std::nullopt;
  z->resize(vars + surplus);  // no rows at all gives an empty solution

  std::vector<Rational> x(P);
  for (int p = 1; p < P; ++p) x[p] = x[p - 1] + (*z)[p - 1] + 1;
  if (unit) {
    const Rational len = (*z)[u_var] + 1;
    for (auto& v : x) v /= len;
  }
  return x;
}

}  // namespace

std::optional<std::vector<Rational>> solve_prefix(std::span<const int> prefix, int vertex_count, int mark_count,
                                                  FlavorSet flavor, Solver solver) {
  if (flavor.contains(Flavor::midpoint) && mark_count != 1) {
    throw Error(ErrorKind::bad_parameters, "midpoint flavor needs exactly one mark");
  }
  Layout lay = layout(prefix, vertex_count, mark_count);
  const bool unit = flavor.contains(Flavor::unit);
  const bool midpoint = flavor.contains(Flavor::midpoint);
  if (!unit && !midpoint && solver == Solver::automatic) {
    std::vector<Rational> x(lay.points);
    for (int p = 0; p < lay.points; ++p) x[p] = p + 1;
    return x;
  }
  if (solver == Solver::difference && !unit && midpoint) {
    throw Error(ErrorKind::bad_parameters, "difference solver needs the unit flavor");
  }
  if (solver == Solver::simplex || (solver == Solver::automatic && !unit)) return solve_simplex(lay, flavor);
  return solve_difference(lay, flavor);
}

bool proper_order_ok(std::span<const int> prefix, int vertex_count, int mark_count, bool midpoint) {
  // Slot sequences must be prefixes of the opening order.
  std::vector<int> seen(vertex_count, 0);
  std::vector<int> opening;
  std::size_t closed = 0;
  std::size_t centred = 0;
  for (int v : prefix) {
    const int slot = seen[v]++;
    if (slot == 0) {
      opening.push_back(v);
    } else if (slot == mark_count + 1) {
      if (closed >= opening.size() || opening[closed] != v) return false;
      ++closed;
    } else if (midpoint && slot == 1) {
      if (centred >= opening.size() || opening[centred] != v) return false;
      ++centred;
    }
  }
  return true;
}

std::optional<Representation> realizable(const OrderingWord& w, FlavorSet flavor, Solver solver) {
  const int n = w.vertex_count();
  const int k = w.mark_count();
  if (flavor.contains(Flavor::unit)) flavor.insert(Flavor::proper);
  const bool ordered = flavor.contains(Flavor::proper);
  if (ordered && !proper_order_ok(w.vertices(), n, k, flavor.contains(Flavor::midpoint))) return std::nullopt;
  auto x = solve_prefix(w.vertices(), n, k, flavor, solver);
  if (!x) return std::nullopt;

  Representation rep;
  rep.mark_count = k;
  rep.flavor = flavor;
  rep.intervals.assign(n, MarkedInterval{});
  std::vector<int> seen(n, 0);
  for (std::size_t p = 0; p < w.length(); ++p) {
    const int v = w.vertices()[p];
    const int slot = seen[v]++;
    auto& iv = rep.intervals[v];
    if (slot == 0) {
      iv.left = (*x)[p];
    } else if (slot == k + 1) {
      iv.right = (*x)[p];
    } else {
      iv.marks.push_back((*x)[p]);
    }
  }
  return rep;
}

}  // namespace veto
