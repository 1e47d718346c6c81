#include "veto/recognize.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "veto/error.hpp"
#include "veto/isomorphism.hpp"

namespace veto {

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::timeout: return "timeout";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

enum : std::uint8_t { kOpen = 0, kAdjacent = 1, kApart = 2 };

// All interleavings of two vertices' points. Symbol 0 belongs to the smaller
// vertex. Each node knows whether every completion agrees on adjacency.
struct PairTrie {
  std::vector<std::array<std::uint32_t, 2>> child;
  std::vector<std::uint8_t> verdict;

  PairTrie(int k, SemanticsTag tag) {
    const int len = k + 2;
    std::vector<int> seq;
    build(seq, 0, 0, len, tag);
  }

 private:
  std::uint32_t build(std::vector<int>& seq, int a, int b, int len, SemanticsTag tag) {
    const auto id = static_cast<std::uint32_t>(child.size());
    child.push_back({0, 0});
    verdict.push_back(kOpen);
    if (a == len && b == len) {
      std::vector<std::int64_t> pa, pb;
      for (std::size_t i = 0; i < seq.size(); ++i) (seq[i] == 0 ? pa : pb).push_back(static_cast<std::int64_t>(i));
      verdict[id] = detail::adjacent_points<std::int64_t>(pa, pb, tag) ? kAdjacent : kApart;
      return id;
    }
    std::uint8_t merged = 0;
    bool first = true;
    for (int s = 0; s < 2; ++s) {
      if ((s == 0 ? a : b) == len) continue;
      seq.push_back(s);
      std::uint32_t c = build(seq, a + (s == 0), b + (s == 1), len, tag);
      seq.pop_back();
      child[id][s] = c;
      merged = first ? verdict[c] : (merged == verdict[c] ? merged : std::uint8_t{kOpen});
      first = false;
    }
    verdict[id] = merged;
    return id;
  }
};

struct Problem {
  int n = 0;
  int k = 1;
  SemanticsTag tag = SemanticsTag::veto;
  FlavorSet flavor;
  bool proper = false;      // right endpoints follow the opening order
  bool centred = false;     // marks follow it too
  bool linear = false;      // unit or midpoint present
  SimpleGraph g;
  std::vector<std::uint8_t> adj;  // n*n
  PairTrie trie{1, SemanticsTag::veto};
  std::vector<std::vector<int>> autos;  // empty when using twins
  bool use_autos = false;
  bool use_twins = false;
  std::vector<std::uint8_t> twin;  // n*n
  RecognizeOptions options;
};

struct Shared {
  Clock::time_point deadline;
  std::atomic<bool> timed_out{false};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> linear_checks{0};
};

class Search {
 public:
  Search(const Problem& pb, Shared& shared) : pb_(pb), shared_(shared) {
    const int n = pb.n;
    seen_.assign(n, 0);
    state_.assign(static_cast<std::size_t>(n) * n, 0);
    if (pb.use_autos) {
      std::vector<int> all(pb.autos.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
      push_stabilizer(std::move(all));
    }
  }

  // Applies a prefix already accepted by another search.
  bool replay(const std::vector<int>& prefix) {
    for (int v : prefix) {
      if (!place(v)) return false;
    }
    return true;
  }

  // Collects the surviving prefixes of length `depth`.
  void collect(std::size_t depth, std::vector<std::vector<int>>& out) {
    if (word_.size() == depth || word_.size() == total()) {
      out.push_back(word_);
      return;
    }
    for (int v = 0; v < pb_.n; ++v) {
      if (!allowed(v)) continue;
      if (place(v) && prefix_ok()) collect(depth, out);
      unplace();
    }
  }

  // True once a realizable full word is found; `witness_` then holds it.
  bool run(std::size_t index) {
    index_ = index;
    return dfs();
  }

  const std::vector<int>& word() const { return word_; }
  bool aborted() const { return aborted_; }

 private:
  std::size_t total() const { return static_cast<std::size_t>(pb_.n) * (pb_.k + 2); }

  bool dfs() {
    if (word_.size() == total()) return true;
    for (int v = 0; v < pb_.n; ++v) {
      if (!allowed(v)) continue;
      if (place(v) && prefix_ok()) {
        if (dfs()) return true;
      }
      unplace();
      if (aborted_) return false;
    }
    return false;
  }

  bool allowed(int v) const {
    const int slot = seen_[v];
    const int k = pb_.k;
    if (slot == k + 2) return false;
    if (slot == 0) return opening_allowed(v);
    if (slot == k + 1 && pb_.proper) return opening_[closed_] == v;
    if (slot == 1 && pb_.centred) return opening_[centred_] == v;
    return true;
  }

  bool opening_allowed(int v) const {
    if (pb_.use_autos) return stab_minimal_.back()[v];
    if (pb_.use_twins) {
      for (int w = 0; w < v; ++w) {
        if (seen_[w] == 0 && pb_.twin[static_cast<std::size_t>(v) * pb_.n + w]) return false;
      }
    }
    return true;
  }

  // Returns false on a contradiction; always leaves an undo record.
  bool place(int v) {
    const int n = pb_.n;
    const int slot = seen_[v]++;
    word_.push_back(v);
    marks_.push_back(undo_.size());
    if (slot == 0) {
      opening_.push_back(v);
      if (pb_.use_autos) {
        std::vector<int> keep;
        for (int i : stab_.back()) {
          if (pb_.autos[i][v] == v) keep.push_back(i);
        }
        push_stabilizer(std::move(keep));
      }
    } else if (slot == pb_.k + 1 && pb_.proper) {
      ++closed_;
    } else if (slot == 1 && pb_.centred) {
      ++centred_;
    }
    count_node();

    bool ok = true;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      const int a = std::min(u, v);
      const int b = std::max(u, v);
      const std::size_t idx = static_cast<std::size_t>(a) * n + b;
      const std::uint32_t old = state_[idx];
      const std::uint32_t next = pb_.trie.child[old][v == a ? 0 : 1];
      undo_.emplace_back(idx, old);
      state_[idx] = next;
      const std::uint8_t verdict = pb_.trie.verdict[next];
      if (verdict != kOpen && (verdict == kAdjacent) != static_cast<bool>(pb_.adj[idx])) {
        ok = false;
        break;
      }
    }
    return ok;
  }

  void unplace() {
    const int v = word_.back();
    word_.pop_back();
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    while (undo_.size() > mark) {
      state_[undo_.back().first] = undo_.back().second;
      undo_.pop_back();
    }
    const int slot = --seen_[v];
    if (slot == 0) {
      opening_.pop_back();
      if (pb_.use_autos) {
        stab_.pop_back();
        stab_minimal_.pop_back();
      }
    } else if (slot == pb_.k + 1 && pb_.proper) {
      --closed_;
    } else if (slot == 1 && pb_.centred) {
      --centred_;
    }
  }

  bool prefix_ok() {
    if (!pb_.linear) return true;
    const std::size_t len = word_.size();
    const int every = std::max(1, pb_.options.check_every);
    if (len != total() && len % static_cast<std::size_t>(every) != 0) return true;
    shared_.linear_checks.fetch_add(1, std::memory_order_relaxed);
    return prefix_feasible(word_, pb_.n, pb_.k, pb_.flavor, pb_.options.solver);
  }

  void count_node() {
    if ((++local_nodes_ & 1023) != 0) return;
    shared_.nodes.fetch_add(1024, std::memory_order_relaxed);
    if (shared_.timed_out.load(std::memory_order_relaxed) || Clock::now() > shared_.deadline ||
        (pb_.options.node_limit != 0 && shared_.nodes.load(std::memory_order_relaxed) > pb_.options.node_limit)) {
      shared_.timed_out.store(true);
      aborted_ = true;
    }
    if (shared_.best.load(std::memory_order_relaxed) < index_) aborted_ = true;
  }

 public:
  std::uint64_t leftover_nodes() const { return local_nodes_ & 1023; }

 private:
  void push_stabilizer(std::vector<int> group) {
    std::vector<std::uint8_t> minimal(pb_.n, 1);
    for (int i : group) {
      const auto& p = pb_.autos[i];
      for (int u = 0; u < pb_.n; ++u) {
        if (p[u] < u) minimal[u] = 0;
      }
    }
    stab_.push_back(std::move(group));
    stab_minimal_.push_back(std::move(minimal));
  }

  const Problem& pb_;
  Shared& shared_;
  std::size_t index_ = 0;
  bool aborted_ = false;
  std::uint64_t local_nodes_ = 0;
  std::vector<int> seen_;
  std::vector<int> word_;
  std::vector<int> opening_;
  int closed_ = 0;
  int centred_ = 0;
  std::vector<std::uint32_t> state_;
  std::vector<std::pair<std::size_t, std::uint32_t>> undo_;
  std::vector<std::size_t> marks_;
  std::vector<std::vector<int>> stab_;
  std::vector<std::vector<std::uint8_t>> stab_minimal_;
};

Problem make_problem(const SimpleGraph& g, SemanticsTag tag, FlavorSet flavor, const RecognizeOptions& options,
                     std::string& symmetry) {
  if (tag == SemanticsTag::veto_directed) {
    throw Error(ErrorKind::bad_parameters, "recognition needs an undirected semantics");
  }
  Problem pb;
  pb.n = g.order();
  pb.k = options.mark_count != 0 ? options.mark_count : (tag == SemanticsTag::k_veto ? 2 : 1);
  check_arity(tag, pb.k);
  if (flavor.contains(Flavor::midpoint) && pb.k != 1) {
    throw Error(ErrorKind::bad_parameters, "midpoint flavor needs exactly one mark");
  }
  if (flavor.contains(Flavor::unit)) flavor.insert(Flavor::proper);
  pb.tag = tag;
  pb.flavor = flavor;
  pb.proper = flavor.contains(Flavor::proper);
  pb.centred = pb.proper && flavor.contains(Flavor::midpoint);
  pb.linear = flavor.contains(Flavor::unit) || flavor.contains(Flavor::midpoint);
  pb.g = g;
  pb.options = options;
  pb.trie = PairTrie(pb.k, tag);
  const int n = pb.n;
  pb.adj.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : g.edges()) pb.adj[static_cast<std::size_t>(u) * n + v] = 1;

  symmetry = "none";
  if (!options.use_symmetry || n == 0) return pb;
  if (auto autos = automorphisms(g, options.automorphism_cap)) {
    pb.autos = std::move(*autos);
    pb.use_autos = true;
    symmetry = "automorphisms(" + std::to_string(pb.autos.size()) + ")";
    return pb;
  }
  pb.use_twins = true;
  symmetry = "twins";
  pb.twin.assign(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::vector<int>> nb(n);
  for (int v = 0; v < n; ++v) nb[v] = g.neighbors(v);
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      if (u == w) continue;
      auto a = nb[u];
      auto b = nb[w];
      std::erase(a, w);
      std::erase(b, u);
      pb.twin[static_cast<std::size_t>(u) * n + w] = a == b;
    }
  }
  return pb;
}

Representation witness_for(const Problem& pb, const std::vector<int>& word) {
  OrderingWord w(word, pb.k);
  auto rep = realizable(w, pb.flavor, pb.options.solver);
  if (!rep) throw std::logic_error("accepted word is not realizable");
  if (!validate_representation(*rep).empty() || !(build_graph(*rep, pb.tag) == pb.g)) {
    throw std::logic_error("witness does not reproduce the input graph");
  }
  return *rep;
}

}  // namespace

RecognitionResult recognize(const SimpleGraph& g, SemanticsTag tag, FlavorSet flavor,
                            const RecognizeOptions& options) {
  const auto start = Clock::now();
  RecognitionResult result;
  const Problem pb = make_problem(g, tag, flavor, options, result.stats.symmetry);
  Shared shared;
  shared.deadline = start + options.time_limit;

  auto finish = [&](Verdict verdict, const std::vector<int>* word) {
    result.verdict = verdict;
    if (word) {
      result.word = OrderingWord(*word, pb.k);
      result.witness = witness_for(pb, *word);
    }
    result.stats.nodes = shared.nodes.load();
    result.stats.linear_checks = shared.linear_checks.load();
    result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  };

  if (pb.n == 0) {
    std::vector<int> empty;
    return finish(Verdict::yes, &empty);
  }

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    Search s(pb, shared);
    const bool found = s.run(0);
    shared.nodes += s.leftover_nodes();
    if (found) return finish(Verdict::yes, &s.word());
    return finish(shared.timed_out ? Verdict::timeout : Verdict::no, nullptr);
  }

  // Split the tree at a shallow depth; subtree i only matters while nothing
  // earlier has produced a witness.
  std::vector<std::vector<int>> frontier;
  const std::size_t total = static_cast<std::size_t>(pb.n) * (pb.k + 2);
  for (std::size_t depth = 1;; ++depth) {
    frontier.clear();
    Search probe(pb, shared);
    probe.collect(depth, frontier);
    if (frontier.size() >= static_cast<std::size_t>(threads) * 16 || depth >= total || frontier.empty()) break;
  }

  std::vector<std::vector<int>> found(frontier.size());
  std::vector<std::uint8_t> hit(frontier.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= frontier.size() || i > shared.best.load()) return;
      Search s(pb, shared);
      bool ok = s.replay(frontier[i]);
      ok = ok && s.run(i);
      shared.nodes += s.leftover_nodes();
      if (ok) {
        found[i] = s.word();
        hit[i] = 1;
        std::size_t cur = shared.best.load();
        while (i < cur && !shared.best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  const std::size_t best = shared.best.load();
  if (best < frontier.size() && hit[best]) return finish(Verdict::yes, &found[best]);
  return finish(shared.timed_out ? Verdict::timeout : Verdict::no, nullptr);
}

}  // namespace veto
