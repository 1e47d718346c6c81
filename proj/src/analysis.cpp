#include "veto/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "veto/error.hpp"
#include "veto/linear_system.hpp"

namespace veto {

namespace {

void require_single_mark(const Representation& rep) {
  if (rep.mark_count != 1) throw Error(ErrorKind::arity_mismatch, "expected one mark per interval");
}

void require_distinct(const Representation& rep) {
  if (!has_distinct_points(rep)) throw Error(ErrorKind::tied_points, "marked points must be distinct");
}

}  // namespace

std::string_view uvi_color_name(int color) {
  switch (color) {
    case red: return "red";
    case blue: return "blue";
    case purple: return "purple";
    case orange: return "orange";
  }
  return "?";
}

int uvi_color_of(const MarkedInterval& interval, const Rational& length) {
  const bool left_odd = is_odd(floor(interval.left / length));
  const bool mark_odd = is_odd(floor(interval.marks.front() / length));
  if (left_odd) return mark_odd ? red : blue;
  return mark_odd ? orange : purple;
}

Coloring uvi_four_color(const Representation& rep) {
  require_single_mark(rep);
  if (!flavor_flags(rep).contains(Flavor::unit)) throw Error(ErrorKind::not_unit, "intervals differ in length");
  require_distinct(rep);
  Coloring c{std::vector<int>(rep.intervals.size(), 0), 4};
  if (rep.intervals.empty()) return c;
  const Rational length = rep.intervals.front().length();
  for (std::size_t i = 0; i < rep.intervals.size(); ++i) c.color[i] = uvi_color_of(rep.intervals[i], length);
  return c;
}

bool is_proper_coloring(const SimpleGraph& g, const Coloring& coloring) {
  if (static_cast<int>(coloring.color.size()) != g.order()) return false;
  for (int c : coloring.color) {
    if (c < 0 || c >= coloring.palette) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (coloring.color[u] == coloring.color[v]) return false;
  }
  return true;
}

bool is_triangle_free(const SimpleGraph& g) {
  for (auto [u, v] : g.edges()) {
    for (int w : g.neighbors(u)) {
      if (w > v && g.has_edge(v, w)) return false;
    }
  }
  return true;
}

namespace {

class Dsatur {
 public:
  Dsatur(const SimpleGraph& g, int k) : n_(g.order()), k_(k), color_(n_, -1), nb_(n_) {
    for (int v = 0; v < n_; ++v) nb_[v] = g.neighbors(v);
  }

  bool solve(std::uint64_t& nodes) { return step(0, 0, nodes); }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool step(int done, int used, std::uint64_t& nodes) {
    ++nodes;
    if (done == n_) return true;
    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      std::uint64_t seen = 0;
      int deg = 0;
      for (int u : nb_[v]) {
        if (color_[u] >= 0) {
          seen |= std::uint64_t{1} << color_[u];
        } else {
          ++deg;
        }
      }
      const int sat = std::popcount(seen);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    // A fresh colour is interchangeable with any other fresh colour.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (int u : nb_[pick]) clash = clash || color_[u] == c;
      if (clash) continue;
      color_[pick] = c;
      if (step(done + 1, std::max(used, c + 1), nodes)) return true;
      color_[pick] = -1;
    }
    return false;
  }

  int n_;
  int k_;
  std::vector<int> color_;
  std::vector<std::vector<int>> nb_;
};

int greedy_clique(const SimpleGraph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (int start = 0; start < g.order(); ++start) {
    std::vector<int> clique{start};
    auto cand = g.neighbors(start);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) { return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b); });
    for (int v : cand) {
      bool all = std::all_of(clique.begin(), clique.end(), [&](int u) { return g.has_edge(u, v); });
      if (all) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace

std::optional<Coloring> k_coloring(const SimpleGraph& g, int k, std::uint64_t* nodes) {
  if (k > 64) k = 64;
  std::uint64_t local = 0;
  if (g.order() == 0) return Coloring{{}, std::max(k, 0)};
  if (k <= 0) return std::nullopt;
  Dsatur search(g, k);
  const bool ok = search.solve(local);
  if (nodes) *nodes += local;
  if (!ok) return std::nullopt;
  return Coloring{search.colors(), k};
}

ChromaticResult chromatic_number(const SimpleGraph& g, int vertex_cap) {
  if (g.order() > vertex_cap) {
    throw Error(ErrorKind::too_large,
                std::to_string(g.order()) + " vertices exceed the cap of " + std::to_string(vertex_cap));
  }
  ChromaticResult out;
  out.clique_bound = greedy_clique(g);
  if (g.order() == 0) return out;
  for (int k = std::max(1, out.clique_bound);; ++k) {
    std::uint64_t nodes = 0;
    if (auto c = k_coloring(g, k, &nodes)) {
      out.chromatic_number = k;
      out.coloring = *c;
      break;
    }
    out.refutation_nodes = nodes;  // last failure is the (chi-1) refutation
  }
  out.refuted_by_clique = out.chromatic_number == out.clique_bound;
  if (out.refuted_by_clique) out.refutation_nodes = 0;
  return out;
}

Representation proper_to_unit(const Representation& rep) {
  require_single_mark(rep);
  if (!flavor_flags(rep).contains(Flavor::proper)) {
    throw Error(ErrorKind::not_proper, "some interval properly contains another");
  }
  require_distinct(rep);
  const OrderingWord w = ordering_word(rep);
  FlavorSet target{Flavor::unit, Flavor::proper};
  auto out = realizable(w, target, Solver::difference);
  if (!out) throw Error(ErrorKind::not_proper, "ordering admits no unit realization");
  return *out;
}

std::vector<PlainInterval> muda_to_unit_interval(const Representation& rep) {
  require_single_mark(rep);
  const FlavorSet flags = flavor_flags(rep);
  if (!flags.contains(Flavor::unit) || !flags.contains(Flavor::midpoint)) {
    throw Error(ErrorKind::not_midpoint_unit, "expected equal lengths and centred marks");
  }
  std::vector<PlainInterval> out;
  for (const auto& iv : rep.intervals) {
    const Rational c = iv.marks.front() - iv.left;
    out.push_back({iv.left + c / 2, iv.left + c * 3 / 2});
  }
  return out;
}

Representation unit_interval_to_muda(std::span<const PlainInterval> intervals) {
  Representation rep;
  rep.flavor = FlavorSet{Flavor::unit, Flavor::proper, Flavor::midpoint};
  for (const auto& iv : intervals) {
    const Rational c = iv.right - iv.left;
    if (c <= 0 || c != intervals.front().right - intervals.front().left) {
      throw Error(ErrorKind::not_unit_intervals, "expected intervals of one positive length");
    }
    rep.intervals.push_back(make_interval(iv.left - c / 2, iv.left + c / 2, iv.left + c * 3 / 2));
  }
  return rep;
}

OrderCheck mpvi_order_check(const Representation& rep) {
  require_single_mark(rep);
  std::vector<int> order(rep.intervals.size());
  std::iota(order.begin(), order.end(), 0);
  const auto& iv = rep.intervals;
  // ties (copies, shared lefts) are fine as long as nothing goes backwards
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (iv[a].left != iv[b].left) return iv[a].left < iv[b].left;
    if (iv[a].marks.front() != iv[b].marks.front()) return iv[a].marks.front() < iv[b].marks.front();
    return iv[a].right < iv[b].right;
  });
  OrderCheck out;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const int a = order[i - 1];
    const int b = order[i];
    if (iv[a].marks.front() > iv[b].marks.front()) {
      out = {false, a, b, "marks"};
      return out;
    }
    if (iv[a].right > iv[b].right) {
      out = {false, a, b, "rights"};
      return out;
    }
  }
  return out;
}

}  // namespace veto
