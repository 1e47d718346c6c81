#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "veto/analysis.hpp"
#include "veto/error.hpp"
#include "veto/random_reps.hpp"
#include "veto/recognize.hpp"
#include "veto/semantics.hpp"

using namespace veto;

namespace {

MarkedInterval iv(const char* l, const char* m, const char* r) {
  return make_interval(parse_rational(l), parse_rational(m), parse_rational(r));
}

Representation rep_of(std::vector<MarkedInterval> ivs) {
  Representation rep;
  rep.intervals = std::move(ivs);
  return rep;
}

const SemanticsTag kUndirected[] = {SemanticsTag::interval, SemanticsTag::veto, SemanticsTag::point_core,
                                    SemanticsTag::single_approval, SemanticsTag::double_approval};

}  // namespace

TEST_CASE("adjacency examples") {
  CHECK(adjacent(iv("0", "2", "4"), iv("3", "5", "7"), SemanticsTag::veto));
  CHECK_FALSE(adjacent(iv("0", "2", "4"), iv("1", "2.5", "3"), SemanticsTag::veto));
  CHECK(adjacent(iv("-2", "-1", "2"), iv("-4", "-3", "4"), SemanticsTag::single_approval));
  CHECK(adjacent(iv("1", "6", "11"), iv("2", "7", "12"), SemanticsTag::double_approval));
  for (SemanticsTag tag : kUndirected) CHECK_FALSE(adjacent(iv("0", "1", "2"), iv("3", "4", "5"), tag));
  // closed intervals: touching endpoints meet
  CHECK(adjacent(iv("0", "1", "2"), iv("2", "3", "4"), SemanticsTag::veto));
  CHECK(adjacent(iv("0", "1", "2"), iv("2", "3", "4"), SemanticsTag::interval));
}

TEST_CASE("tag names and arity") {
  for (SemanticsTag tag : {SemanticsTag::interval, SemanticsTag::veto, SemanticsTag::veto_directed, SemanticsTag::k_veto,
                           SemanticsTag::point_core, SemanticsTag::single_approval, SemanticsTag::double_approval}) {
    CHECK(parse_tag(tag_name(tag)) == tag);
  }
  CHECK(tag_name(SemanticsTag::k_veto) == "k-veto");
  CHECK_THROWS_AS(parse_tag("approval"), Error);
  CHECK_THROWS_AS(check_arity(SemanticsTag::veto, 2), Error);
  CHECK_THROWS_AS(check_arity(SemanticsTag::k_veto, 1), Error);
  CHECK_NOTHROW(check_arity(SemanticsTag::interval, 3));
  MarkedInterval two{0, {1, 2}, 3};
  try {
    adjacent(two, two, SemanticsTag::single_approval);
    FAIL("expected arity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::arity_mismatch);
  }
}

TEST_CASE("graph builders") {
  const Representation k11 = rep_of({iv("0", "2", "4"), iv("3", "5", "7")});
  CHECK(build_graph(k11, SemanticsTag::veto).edges() == std::set<std::pair<int, int>>{{0, 1}});
  CHECK(build_graph(k11, SemanticsTag::point_core).size() == 0);
  for (SemanticsTag tag : kUndirected) CHECK(build_graph(rep_of({iv("0", "1", "2")}), tag) == SimpleGraph(1));

  const Digraph d = build_digraph(k11);
  CHECK(d.arcs() == std::set<std::pair<int, int>>{{0, 1}});
  const Digraph e = build_digraph(rep_of({iv("3", "5", "7"), iv("0", "2", "4")}));
  CHECK(e.arcs() == std::set<std::pair<int, int>>{{1, 0}});
  CHECK_THROWS_AS(build_digraph(rep_of({iv("0", "2", "4"), iv("4", "5", "7")})), Error);
}

TEST_CASE("set-based predicates match the strict forms on distinct points") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 600; ++t) {
    const int k = 1 + t % 3;
    const Representation rep = random_rep(rng, uniform_int(rng, 1, 7), k);
    if (k == 1) {
      for (SemanticsTag tag : kUndirected) CHECK(build_graph(rep, tag) == oracle::graph_strict(rep, tag));
    } else {
      CHECK(build_graph(rep, SemanticsTag::k_veto) == oracle::graph_strict(rep, SemanticsTag::k_veto));
      CHECK(build_graph(rep, SemanticsTag::interval) == oracle::graph_strict(rep, SemanticsTag::interval));
    }
  }
}

TEST_CASE("directed graph follows the left-intersection rule") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 300; ++t) {
    const Representation rep = random_rep(rng, uniform_int(rng, 1, 8));
    const Digraph d = build_digraph(rep);
    CHECK(d.underlying() == build_graph(rep, SemanticsTag::veto));
    for (auto [a, b] : d.arcs()) {
      const auto& x = rep.intervals[a];
      const auto& y = rep.intervals[b];
      CHECK((x.marks[0] < y.left && y.left < x.right && x.right < y.marks[0]));
    }
    CHECK(oracle::orientation_ok_brute(d));
    CHECK(orientation_ok(d));
  }
}

TEST_CASE("containment rules out veto adjacency") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 300; ++t) {
    const int k = 1 + t % 2;
    const Representation rep = random_rep(rng, uniform_int(rng, 2, 8), k);
    const SemanticsTag tag = k == 1 ? SemanticsTag::veto : SemanticsTag::k_veto;
    const SimpleGraph g = build_graph(rep, tag);
    for (int i = 0; i < rep.size(); ++i) {
      for (int j = 0; j < rep.size(); ++j) {
        const auto& a = rep.intervals[i];
        const auto& b = rep.intervals[j];
        if (i != j && b.left <= a.left && a.right <= b.right) CHECK_FALSE(g.has_edge(i, j));
      }
    }
    CHECK(oracle::triangle_free_brute(g));
  }
}

TEST_CASE("partition identity") {
  const PartitionReport r = partition_check(rep_of({iv("0", "2", "4"), iv("3", "5", "7")}));
  CHECK(r.interval_edges == 1);
  CHECK(r.veto_edges == 1);
  CHECK(r.pc_edges == 0);
  CHECK(r.holds);
  const PartitionReport empty = partition_check(Representation{});
  CHECK(empty.holds);
  CHECK(empty.interval_edges == 0);

  std::mt19937_64 rng(34);
  for (int t = 0; t < 300; ++t) {
    const Representation rep = random_rep(rng, uniform_int(rng, 1, 9));
    const PartitionReport p = partition_check(rep);
    CHECK(p.holds);
    CHECK(p.interval_edges == p.veto_edges + p.pc_edges);
    CHECK(p.pc_edges == p.sa_edges + p.da_edges);
    CHECK(partition_check(random_midpoint_unit_rep(rng, uniform_int(rng, 1, 9))).sa_edges == 0);
  }
  CHECK_THROWS_AS(partition_check(rep_of({iv("0", "2", "4"), iv("4", "5", "7")})), Error);
}

TEST_CASE("splitting and reducing marks") {
  const Representation one = rep_of({iv("0", "2", "4")});
  const Representation split = split_to_k_veto(one, 2);
  REQUIRE(split.mark_count == 2);
  const auto& m = split.intervals[0].marks;
  CHECK(m[0] + m[1] == 4);  // symmetric about the old mark
  CHECK(m[0] > 1);
  CHECK(m[1] < 3);
  CHECK(m[0] < m[1]);

  const Representation k11 = rep_of({iv("0", "2", "4"), iv("3", "5", "7")});
  const Representation dv = split_to_k_veto(k11, 2);
  CHECK(build_graph(dv, SemanticsTag::k_veto).has_edge(0, 1));
  CHECK(split_to_k_veto(dv, 2) == dv);

  Representation three;
  three.mark_count = 3;
  three.intervals.push_back(MarkedInterval{0, {1, 2, 3}, 4});
  const Representation reduced = reduce_to_double(three);
  CHECK(reduced.intervals[0] == MarkedInterval{0, {1, 3}, 4});
  CHECK(reduce_to_double(dv) == dv);

  std::mt19937_64 rng(35);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform_int(rng, 1, 6);
    const Representation base = random_rep(rng, n, 1);
    const SimpleGraph g = build_graph(base, SemanticsTag::veto);
    for (int k = 2; k <= 5; ++k) {
      const Representation up = split_to_k_veto(base, k);
      CHECK(validate_representation(up).empty());
      CHECK(has_distinct_points(up));
      CHECK(build_graph(up, SemanticsTag::k_veto) == g);
      CHECK(build_graph(reduce_to_double(up), SemanticsTag::k_veto) == g);
    }
    const Representation wide = random_rep(rng, n, 4);
    CHECK(build_graph(reduce_to_double(wide), SemanticsTag::k_veto) == build_graph(wide, SemanticsTag::k_veto));
    const Representation dbl = random_rep(rng, n, 2);
    CHECK(build_graph(split_to_k_veto(dbl, 5), SemanticsTag::k_veto) == build_graph(dbl, SemanticsTag::k_veto));
  }
}

TEST_CASE("interval graphs are single approval graphs") {
  const std::vector<PlainInterval> a{{0, 2}, {1, 3}};
  CHECK(build_graph(interval_to_single_approval(a), SemanticsTag::single_approval).has_edge(0, 1));
  const std::vector<PlainInterval> b{{0, 1}, {2, 3}};
  CHECK(build_graph(interval_to_single_approval(b), SemanticsTag::single_approval).size() == 0);
  const std::vector<PlainInterval> tied{{0, 1}, {1, 3}};
  CHECK_THROWS_AS(interval_to_single_approval(tied), Error);

  std::mt19937_64 rng(36);
  for (int t = 0; t < 300; ++t) {
    const auto plain = random_plain_intervals(rng, uniform_int(rng, 1, 10));
    SimpleGraph expect(static_cast<int>(plain.size()));
    for (std::size_t i = 0; i < plain.size(); ++i) {
      for (std::size_t j = i + 1; j < plain.size(); ++j) {
        if (plain[i].left < plain[j].right && plain[j].left < plain[i].right) expect.add_edge(i, j);
      }
    }
    const Representation rep = interval_to_single_approval(plain);
    CHECK(validate_representation(rep).empty());
    CHECK(build_graph(rep, SemanticsTag::single_approval) == expect);
    CHECK(intersection_graph(plain) == expect);
  }
}

TEST_CASE("deleting an interval deletes the vertex") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const Representation rep = random_rep(rng, uniform_int(rng, 2, 8));
    const int v = uniform_int(rng, 0, rep.size() - 1);
    Representation smaller = rep;
    smaller.intervals.erase(smaller.intervals.begin() + v);
    for (SemanticsTag tag : kUndirected) CHECK(build_graph(smaller, tag) == build_graph(rep, tag).without_vertex(v));
  }
}
