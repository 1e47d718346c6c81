#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "veto/analysis.hpp"
#include "veto/error.hpp"
#include "veto/families.hpp"
#include "veto/random_reps.hpp"
#include "veto/recognize.hpp"

using namespace veto;

namespace {

const FlavorSet kMuvi{Flavor::unit, Flavor::proper, Flavor::midpoint};

RecognizeOptions quick() {
  RecognizeOptions o;
  o.time_limit = std::chrono::seconds(60);
  return o;
}

void check_sound(const RecognitionResult& r, const SimpleGraph& g, SemanticsTag tag, FlavorSet flavor) {
  if (r.verdict != Verdict::yes) return;
  REQUIRE(r.witness);
  REQUIRE(r.word);
  CHECK(build_graph(*r.witness, tag) == g);
  CHECK(validate_representation(*r.witness).empty());
  CHECK(flavor_flags(*r.witness).includes(flavor));
  CHECK(ordering_word(*r.witness) == *r.word);
}

}  // namespace

TEST_CASE("recognition examples") {
  CHECK(recognize(complete_graph(3), SemanticsTag::veto, {}, quick()).verdict == Verdict::no);
  const auto c4 = recognize(cycle_graph(4), SemanticsTag::veto, {}, quick());
  CHECK(c4.verdict == Verdict::yes);
  check_sound(c4, cycle_graph(4), SemanticsTag::veto, {});
  CHECK(recognize(lobster5_graph(), SemanticsTag::veto, kMuvi, quick()).verdict == Verdict::no);
  const auto lob = recognize(lobster5_graph(), SemanticsTag::veto, {Flavor::unit}, quick());
  CHECK(lob.verdict == Verdict::yes);
  check_sound(lob, lobster5_graph(), SemanticsTag::veto, {Flavor::unit, Flavor::proper});
  const auto lobm = recognize(lobster5_graph(), SemanticsTag::veto, {Flavor::proper, Flavor::midpoint}, quick());
  CHECK(lobm.verdict == Verdict::yes);
  check_sound(lobm, lobster5_graph(), SemanticsTag::veto, {Flavor::proper, Flavor::midpoint});
  const std::vector<int> k222{2, 2, 2};
  CHECK(recognize(complete_multipartite_graph(k222), SemanticsTag::double_approval, {}, quick()).verdict == Verdict::no);
  const auto cat = caterpillar_graph(std::vector<int>{1, 2, 0, 1});
  const auto r = recognize(cat, SemanticsTag::veto, kMuvi, quick());
  CHECK(r.verdict == Verdict::yes);
  check_sound(r, cat, SemanticsTag::veto, kMuvi);
  CHECK(recognize(SimpleGraph(0), SemanticsTag::veto, {}, quick()).verdict == Verdict::yes);
}

TEST_CASE("agreement with the unpruned search on small graphs") {
  struct Case {
    SemanticsTag tag;
    int k;
    int max_n;
  };
  const Case cases[] = {{SemanticsTag::veto, 1, 4},          {SemanticsTag::single_approval, 1, 4},
                        {SemanticsTag::double_approval, 1, 4}, {SemanticsTag::point_core, 1, 4},
                        {SemanticsTag::interval, 1, 4},        {SemanticsTag::k_veto, 2, 3}};
  for (const auto& c : cases) {
    for (int n = 1; n <= c.max_n; ++n) {
      const auto realised = oracle::realised_graphs(n, c.k, c.tag);
      const std::uint32_t masks = 1u << (n * (n - 1) / 2);
      for (std::uint32_t mask = 0; mask < masks; ++mask) {
        const SimpleGraph g = oracle::graph_from_mask(n, mask);
        RecognizeOptions o = quick();
        o.mark_count = c.k;
        const auto r = recognize(g, c.tag, {}, o);
        INFO(tag_name(c.tag), " n=", n, " mask=", mask);
        CHECK((r.verdict == Verdict::yes) == (realised.count(mask) > 0));
        check_sound(r, g, c.tag, {});
      }
    }
  }
}

TEST_CASE("flavored agreement with filtered enumeration") {
  const FlavorSet flavors[] = {{Flavor::unit}, kMuvi, {Flavor::midpoint}, {Flavor::proper}, {Flavor::proper, Flavor::midpoint}};
  for (const FlavorSet& flavor : flavors) {
    for (int n = 1; n <= 3; ++n) {
      const auto realised = oracle::realised_graphs(n, 1, SemanticsTag::veto, [&](const std::vector<int>& w) {
        return realizable(OrderingWord(w, 1), flavor).has_value();
      });
      for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
        const SimpleGraph g = oracle::graph_from_mask(n, mask);
        const auto r = recognize(g, SemanticsTag::veto, flavor, quick());
        INFO(flavor.to_string(), " n=", n, " mask=", mask);
        CHECK((r.verdict == Verdict::yes) == (realised.count(mask) > 0));
        check_sound(r, g, SemanticsTag::veto, flavor);
      }
    }
  }
}

TEST_CASE("round trip on random representations") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const Representation rep = random_rep(rng, uniform_int(rng, 1, 5));
    const SimpleGraph g = build_graph(rep, SemanticsTag::veto);
    const auto r = recognize(g, SemanticsTag::veto, {}, quick());
    CHECK(r.verdict == Verdict::yes);
    check_sound(r, g, SemanticsTag::veto, {});
  }
  for (int t = 0; t < 60; ++t) {
    const Representation rep = random_midpoint_unit_rep(rng, uniform_int(rng, 1, 6));
    const SimpleGraph g = build_graph(rep, SemanticsTag::veto);
    const auto r = recognize(g, SemanticsTag::veto, kMuvi, quick());
    CHECK(r.verdict == Verdict::yes);
    check_sound(r, g, SemanticsTag::veto, kMuvi);
    const SimpleGraph d = build_graph(rep, SemanticsTag::double_approval);
    const auto rd = recognize(d, SemanticsTag::double_approval, kMuvi, quick());
    CHECK(rd.verdict == Verdict::yes);
    check_sound(rd, d, SemanticsTag::double_approval, kMuvi);
  }
}

TEST_CASE("complete graphs are not veto graphs") {
  for (int n = 3; n <= 6; ++n) CHECK(recognize(complete_graph(n), SemanticsTag::veto, {}, quick()).verdict == Verdict::no);
}

TEST_CASE("symmetry reduction, threads and witness order") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform_int(rng, 2, 5);
    const SimpleGraph g = oracle::graph_from_mask(n, static_cast<std::uint32_t>(rng()) & ((1u << (n * (n - 1) / 2)) - 1));
    const SemanticsTag tag = t % 3 == 0 ? SemanticsTag::double_approval : SemanticsTag::veto;
    RecognizeOptions plain = quick();
    plain.use_symmetry = false;
    RecognizeOptions threaded = quick();
    threaded.threads = 3;
    RecognizeOptions twins = quick();
    twins.automorphism_cap = 1;
    const auto a = recognize(g, tag, {}, quick());
    const auto b = recognize(g, tag, {}, plain);
    const auto c = recognize(g, tag, {}, threaded);
    const auto d = recognize(g, tag, {}, twins);
    CHECK(a.verdict == b.verdict);
    CHECK(a.verdict == c.verdict);
    CHECK(a.verdict == d.verdict);
    // lexicographically least word, with or without pruning by symmetry
    CHECK(a.word == b.word);
    CHECK(a.word == c.word);
    CHECK(a.word == d.word);
  }
}

TEST_CASE("flavors only shrink the class") {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 40; ++t) {
    const int n = uniform_int(rng, 2, 6);
    const SimpleGraph g = build_graph(random_rep(rng, n), SemanticsTag::veto);
    const auto muvi = recognize(g, SemanticsTag::veto, kMuvi, quick());
    const auto uvi = recognize(g, SemanticsTag::veto, {Flavor::unit}, quick());
    const auto mpvi = recognize(g, SemanticsTag::veto, {Flavor::proper, Flavor::midpoint}, quick());
    const auto pvi = recognize(g, SemanticsTag::veto, {Flavor::proper}, quick());
    if (muvi.verdict == Verdict::yes) {
      CHECK(uvi.verdict == Verdict::yes);
      CHECK(mpvi.verdict == Verdict::yes);
    }
    CHECK(uvi.verdict == pvi.verdict);  // proper and unit define the same class
    if (mpvi.verdict == Verdict::yes) CHECK(pvi.verdict == Verdict::yes);
  }
}

TEST_CASE("budgets give timeouts, never wrong answers") {
  RecognizeOptions o;
  o.node_limit = 1;
  const auto r = recognize(lobster5_graph(), SemanticsTag::veto, kMuvi, o);
  CHECK(r.verdict == Verdict::timeout);
  CHECK_FALSE(r.witness);
  RecognizeOptions t;
  t.time_limit = std::chrono::milliseconds(0);
  CHECK(recognize(lobster5_graph(), SemanticsTag::veto, kMuvi, t).verdict == Verdict::timeout);
  CHECK_THROWS_AS(recognize(cycle_graph(4), SemanticsTag::veto_directed, {}, quick()), Error);
  RecognizeOptions two = quick();
  two.mark_count = 2;
  CHECK_THROWS_AS(recognize(cycle_graph(4), SemanticsTag::veto, {}, two), Error);
}

TEST_CASE("orientations") {
  CHECK(orientation_feasible(complete_graph(3)).feasible == 0);
  const OrientationReport c5 = orientation_feasible(cycle_graph(5));
  CHECK(c5.classes.size() == 2);
  CHECK(orientation_feasible(grotzsch_graph(), 24, false).feasible == 0);
  CHECK_THROWS_AS(orientation_feasible(complete_graph(8)), Error);

  std::mt19937_64 rng(64);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform_int(rng, 1, 6);
    const SimpleGraph g = oracle::graph_from_mask(n, static_cast<std::uint32_t>(rng()) & ((1u << (n * (n - 1) / 2)) - 1));
    const auto edges = std::vector<std::pair<int, int>>(g.edges().begin(), g.edges().end());
    std::uint64_t expect = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
      Digraph d(n);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (mask >> e & 1) d.add_arc(edges[e].second, edges[e].first);
        else d.add_arc(edges[e].first, edges[e].second);
      }
      expect += oracle::orientation_ok_brute(d);
    }
    const OrientationReport r = orientation_feasible(g);
    CHECK(r.feasible == expect);
    std::uint64_t total = 0;
    for (auto s : r.class_sizes) total += s;
    CHECK(total == r.feasible);
    if (r.feasible == 0) CHECK(recognize(g, SemanticsTag::veto, {}, quick()).verdict == Verdict::no);
    // the orientation of any witness is one of the survivors
    const auto rec = recognize(g, SemanticsTag::veto, {}, quick());
    if (rec.verdict == Verdict::yes) CHECK(orientation_ok(build_digraph(*rec.witness)));
  }
  const auto c4 = orientation_feasible(cycle_graph(4));
  CHECK(c4.orientations == 16);
  // 16 minus 2 directed cycles minus 8 with a directed path through all four vertices
  CHECK(c4.feasible == 6);
}
