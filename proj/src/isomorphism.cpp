#include "veto/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "veto/error.hpp"

namespace veto {
namespace {

struct Matrix {
  int n = 0;
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> in;

  bool arc(int u, int v) const { return (out[u] >> v) & 1U; }
};

Matrix to_matrix(const SimpleGraph& g) {
  Matrix m{g.order(), g.adjacency_masks(), {}};
  m.in = m.out;
  return m;
}

Matrix to_matrix(const Digraph& d) {
  if (d.order() > 64) throw Error(ErrorKind::too_large, "digraph has more than 64 vertices");
  Matrix m{d.order(), std::vector<std::uint64_t>(d.order(), 0), std::vector<std::uint64_t>(d.order(), 0)};
  for (auto [a, b] : d.arcs()) {
    m.out[a] |= std::uint64_t{1} << b;
    m.in[b] |= std::uint64_t{1} << a;
  }
  return m;
}

// 1-dimensional Weisfeiler-Leman colours computed jointly so that the ids are
// comparable across both matrices.
std::pair<std::vector<int>, std::vector<int>> refine(const Matrix& g, const Matrix& h) {
  const Matrix* mats[2] = {&g, &h};
  std::vector<int> colours[2];
  for (int s = 0; s < 2; ++s) colours[s].assign(mats[s]->n, 0);
  std::size_t classes = 1;
  for (;;) {
    using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::map<Signature, int> ids;
    std::vector<Signature> sigs[2];
    for (int s = 0; s < 2; ++s) {
      const Matrix& m = *mats[s];
      for (int v = 0; v < m.n; ++v) {
        std::vector<int> outs, ins;
        for (int u = 0; u < m.n; ++u) {
          if ((m.out[v] >> u) & 1U) outs.push_back(colours[s][u]);
          if ((m.in[v] >> u) & 1U) ins.push_back(colours[s][u]);
        }
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        sigs[s].emplace_back(colours[s][v], std::move(outs), std::move(ins));
        ids.emplace(sigs[s].back(), 0);
      }
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int s = 0; s < 2; ++s) {
      for (int v = 0; v < mats[s]->n; ++v) colours[s][v] = ids.at(sigs[s][v]);
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {colours[0], colours[1]};
}

class Matcher {
 public:
  Matcher(const Matrix& g, const Matrix& h, std::size_t limit) : g_(g), h_(h), limit_(limit) {
    auto [cg, ch] = refine(g, h);
    cg_ = std::move(cg);
    ch_ = std::move(ch);
    order_ = search_order();
    map_.assign(g.n, -1);
    used_.assign(h.n, false);
  }

  bool compatible() const {
    if (g_.n != h_.n) return false;
    std::vector<int> a = cg_, b = ch_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  void run() {
    if (compatible()) extend(0);
  }

  const std::vector<std::vector<int>>& found() const { return found_; }
  bool overflowed() const { return overflow_; }

 private:
  // Vertices in rare colour classes first, then by adjacency to already ordered ones.
  std::vector<int> search_order() const {
    std::map<int, int> class_size;
    for (int c : cg_) ++class_size[c];
    std::vector<int> order;
    std::vector<bool> taken(g_.n, false);
    for (int step = 0; step < g_.n; ++step) {
      int best = -1;
      std::tuple<int, int, int> best_key{};
      for (int v = 0; v < g_.n; ++v) {
        if (taken[v]) continue;
        int links = 0;
        for (int u : order) links += g_.arc(u, v) || g_.arc(v, u);
        std::tuple<int, int, int> key{-links, class_size[cg_[v]], v};
        if (best < 0 || key < best_key) {
          best = v;
          best_key = key;
        }
      }
      taken[best] = true;
      order.push_back(best);
    }
    return order;
  }

  void extend(std::size_t depth) {
    if (overflow_ || (limit_ == 1 && !found_.empty())) return;
    if (depth == order_.size()) {
      if (found_.size() == limit_) {
        overflow_ = true;
        return;
      }
      found_.push_back(map_);
      return;
    }
    int v = order_[depth];
    for (int w = 0; w < h_.n; ++w) {
      if (used_[w] || ch_[w] != cg_[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        int u = order_[i];
        int x = map_[u];
        ok = g_.arc(u, v) == h_.arc(x, w) && g_.arc(v, u) == h_.arc(w, x);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      extend(depth + 1);
      used_[w] = false;
      map_[v] = -1;
      if (overflow_ || (limit_ == 1 && !found_.empty())) return;
    }
  }

  const Matrix& g_;
  const Matrix& h_;
  std::size_t limit_;
  std::vector<int> cg_, ch_, order_, map_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> found_;
  bool overflow_ = false;
};

std::optional<std::vector<int>> first_match(const Matrix& g, const Matrix& h) {
  Matcher m(g, h, 1);
  m.run();
  if (m.found().empty()) return std::nullopt;
  return m.found().front();
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  return first_match(to_matrix(g), to_matrix(h));
}

std::optional<std::vector<int>> find_isomorphism(const Digraph& g, const Digraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  return first_match(to_matrix(g), to_matrix(h));
}

std::optional<std::vector<std::vector<int>>> automorphisms(const SimpleGraph& g, std::size_t cap) {
  Matrix m = to_matrix(g);
  Matcher matcher(m, m, cap == 1 ? 2 : cap);
  matcher.run();
  if (matcher.overflowed() || matcher.found().size() > cap) return std::nullopt;
  auto all = matcher.found();
  std::sort(all.begin(), all.end());  // identity is lexicographically least
  return all;
}

}  // namespace veto
