#include "veto/random_reps.hpp"

#include <algorithm>
#include <numeric>

namespace veto {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Representation random_rep(std::mt19937_64& rng, int n, int k) {
  const int per = k + 2;
  std::vector<int> ranks(static_cast<std::size_t>(n) * per);
  std::iota(ranks.begin(), ranks.end(), 1);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  Representation rep;
  rep.mark_count = k;
  for (int i = 0; i < n; ++i) {
    auto first = ranks.begin() + static_cast<std::ptrdiff_t>(i) * per;
    std::sort(first, first + per);
    MarkedInterval iv;
    iv.left = *first;
    for (int j = 1; j <= k; ++j) iv.marks.emplace_back(first[j]);
    iv.right = first[per - 1];
    rep.intervals.push_back(std::move(iv));
  }
  return rep;
}

namespace {

constexpr int kGrid = 1000;

// Rejection loop: `draw` fills rep, we retry until points are distinct.
template <typename Draw>
Representation until_distinct(Draw draw) {
  for (;;) {
    Representation rep = draw();
    if (has_distinct_points(rep)) return rep;
  }
}

}  // namespace

Representation random_unit_rep(std::mt19937_64& rng, int n) {
  return until_distinct([&] {
    Representation rep;
    rep.flavor = FlavorSet{Flavor::unit, Flavor::proper};
    const int span = std::max(1, n) * kGrid / 2;
    for (int i = 0; i < n; ++i) {
      const int l = uniform_int(rng, 0, span);
      const int m = l + uniform_int(rng, 1, kGrid - 1);
      rep.intervals.push_back(make_interval(make_rational(l, kGrid), make_rational(m, kGrid), make_rational(l + kGrid, kGrid)));
    }
    return rep;
  });
}

Representation random_midpoint_unit_rep(std::mt19937_64& rng, int n) {
  return until_distinct([&] {
    Representation rep;
    rep.flavor = FlavorSet{Flavor::unit, Flavor::proper, Flavor::midpoint};
    const int span = std::max(1, n) * kGrid / 2;
    for (int i = 0; i < n; ++i) {
      const int l = uniform_int(rng, 0, span);
      rep.intervals.push_back(make_interval(make_rational(l, kGrid), make_rational(2 * l + kGrid, 2 * kGrid),
                                            make_rational(l + kGrid, kGrid)));
    }
    return rep;
  });
}

Representation random_proper_rep(std::mt19937_64& rng, int n) {
  // Endpoint sequence with the i-th R after the i-th L, then one mark dropped
  // into a random gap of each interval; coordinates are ranks.
  std::vector<int> seq;  // vertex ids, sign: >= 0 left, < 0 right (~v)
  int opened = 0;
  int closed = 0;
  while (closed < n) {
    const bool can_open = opened < n;
    const bool can_close = closed < opened;
    if (can_open && (!can_close || uniform_int(rng, 0, 1) == 0)) {
      seq.push_back(opened++);
    } else {
      seq.push_back(~closed++);
    }
  }
  std::vector<int> lpos(n), rpos(n);
  for (int p = 0; p < static_cast<int>(seq.size()); ++p) {
    if (seq[p] >= 0) {
      lpos[seq[p]] = p;
    } else {
      rpos[~seq[p]] = p;
    }
  }
  // Mark of v goes right after endpoint position g, lpos <= g < rpos; ties inside a
  // gap are ordered by vertex, which keeps all points distinct.
  std::vector<std::vector<int>> after(seq.size());
  for (int v = 0; v < n; ++v) after[uniform_int(rng, lpos[v], rpos[v] - 1)].push_back(v);
  Representation rep;
  rep.flavor = FlavorSet{Flavor::proper};
  rep.intervals.resize(n);
  int rank = 0;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    ++rank;
    if (seq[p] >= 0) {
      rep.intervals[seq[p]].left = rank;
    } else {
      rep.intervals[~seq[p]].right = rank;
    }
    std::shuffle(after[p].begin(), after[p].end(), rng);
    for (int v : after[p]) rep.intervals[v].marks = {Rational(++rank)};
  }
  return rep;
}

Representation random_midpoint_proper_rep(std::mt19937_64& rng, int n) {
  return until_distinct([&] {
    Representation rep;
    rep.flavor = FlavorSet{Flavor::proper, Flavor::midpoint};
    long long l = 0;
    long long r = 0;
    for (int i = 0; i < n; ++i) {
      l += uniform_int(rng, 1, 40);
      r = std::max(l + uniform_int(rng, 1, 80), r + uniform_int(rng, 1, 40));
      rep.intervals.push_back(make_interval(Rational(2 * l), Rational(l + r), Rational(2 * r)));
    }
    return rep;
  });
}

Representation tied_rep(std::mt19937_64& rng, int n) {
  Representation rep;
  const bool unit = uniform_int(rng, 0, 2) == 0;
  const int span = std::max(1, n);
  for (int i = 0; i < n; ++i) {
    const int l = uniform_int(rng, 0, span);
    if (unit) {
      rep.intervals.push_back(make_interval(l, l + 1, l + 2));
    } else {
      const int a = uniform_int(rng, 1, 2);
      const int b = uniform_int(rng, 1, 2);
      rep.intervals.push_back(make_interval(l, l + a, l + a + b));
    }
  }
  rep.flavor = flavor_flags(rep);
  return rep;
}

std::vector<PlainInterval> random_plain_intervals(std::mt19937_64& rng, int n) {
  std::vector<int> ranks(2 * static_cast<std::size_t>(n));
  std::iota(ranks.begin(), ranks.end(), 1);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  std::vector<PlainInterval> out;
  for (int i = 0; i < n; ++i) {
    const int a = ranks[2 * i];
    const int b = ranks[2 * i + 1];
    out.push_back({Rational(std::min(a, b)), Rational(std::max(a, b))});
  }
  return out;
}

}  // namespace veto
