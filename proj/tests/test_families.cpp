#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "veto/analysis.hpp"
#include "veto/error.hpp"
#include "veto/families.hpp"
#include "veto/isomorphism.hpp"
#include "veto/random_reps.hpp"

using namespace veto;

namespace {

MarkedInterval iv(const Rational& l, const Rational& m, const Rational& r) { return make_interval(l, m, r); }

std::vector<int> random_parent(std::mt19937_64& rng, int n) {
  std::vector<int> p(n, -1);
  for (int v = 1; v < n; ++v) p[v] = uniform_int(rng, 0, v - 1);
  return p;
}

// Labelled equality is stronger than isomorphism and what the builders promise.
void check_built(const Representation& rep, SemanticsTag tag, const FamilySpec& spec) {
  INFO(describe(spec));
  CHECK(validate_representation(rep).empty());
  const SimpleGraph target = family_graph(spec);
  CHECK(build_graph(rep, tag) == target);
  const Representation distinct = perturb_distinct(rep);
  CHECK(has_distinct_points(distinct));
  CHECK(build_graph(distinct, tag) == target);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::parse;
}

}  // namespace

TEST_CASE("veto families: literal values") {
  const Representation k23 = vi_family_rep(family::CompleteBipartite{2, 3});
  CHECK(k23.intervals == std::vector<MarkedInterval>{iv(0, 2, 4), iv(0, 2, 4), iv(3, 5, 7), iv(3, 5, 7), iv(3, 5, 7)});
  CHECK(flavor_flags(k23).includes({Flavor::unit, Flavor::midpoint}));
  check_built(k23, SemanticsTag::veto, family::CompleteBipartite{2, 3});

  // spine s1..s3, one leg on s2: leg = (2i-3+i/(k+1), ...) with i = 2, k = 3
  const Representation cat = vi_family_rep(family::Caterpillar{{0, 1, 0}});
  REQUIRE(cat.size() == 4);
  CHECK(cat.intervals[0] == iv(1, 2, 3));
  CHECK(cat.intervals[1] == iv(3, 4, 5));
  CHECK(cat.intervals[2] == iv(5, 6, 7));
  CHECK(cat.intervals[3] == iv(make_rational(3, 2), make_rational(5, 2), make_rational(7, 2)));
  check_built(cat, SemanticsTag::veto, family::Caterpillar{{0, 1, 0}});

  const Representation c9 = vi_family_rep(family::Cycle{9});
  CHECK(c9.intervals[0] == iv(2, 14, 26));
  CHECK(c9.intervals[8] == iv(15, 27, 39));
  CHECK(build_graph(c9, SemanticsTag::veto) == cycle_graph(9));
  CHECK(flavor_flags(c9).includes({Flavor::unit, Flavor::midpoint}));

  check_built(vi_family_rep(family::Path{4}), SemanticsTag::veto, family::Path{4});
}

TEST_CASE("veto families over their ranges") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) check_built(vi_family_rep(family::CompleteBipartite{m, n}), SemanticsTag::veto, family::CompleteBipartite{m, n});
  for (int n = 4; n <= 12; ++n) {
    const Representation rep = vi_family_rep(family::Cycle{n});
    check_built(rep, SemanticsTag::veto, family::Cycle{n});
    CHECK(flavor_flags(rep).includes({Flavor::unit, Flavor::midpoint}));
  }
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto parent = random_parent(rng, uniform_int(rng, 1, 12));
    const Representation rep = vi_family_rep(family::Tree{parent});
    check_built(rep, SemanticsTag::veto, family::Tree{parent});
    CHECK(has_distinct_points(rep));

    std::vector<int> legs(uniform_int(rng, 1, 5));
    for (auto& l : legs) l = uniform_int(rng, 0, 3);
    const Representation cat = vi_family_rep(family::Caterpillar{legs});
    check_built(cat, SemanticsTag::veto, family::Caterpillar{legs});
    CHECK(flavor_flags(cat).includes({Flavor::unit, Flavor::midpoint}));
    CHECK(mpvi_order_check(cat).pass);
  }
  CHECK(kind_of([] { vi_family_rep(family::Cycle{3}); }) == ErrorKind::unsupported_family);
  CHECK(kind_of([] { vi_family_rep(family::Complete{3}); }) == ErrorKind::unsupported_family);
}

TEST_CASE("single approval families") {
  const Representation k4 = sa_family_rep(family::Complete{4});
  CHECK(k4.intervals == std::vector<MarkedInterval>{iv(-2, -1, 2), iv(-4, -3, 4), iv(-6, -5, 6), iv(-8, -7, 8)});
  check_built(k4, SemanticsTag::single_approval, family::Complete{4});

  // C_7 in the zig-zag labelling, then read along the cycle
  const Representation c7 = sa_family_rep(family::Cycle{7});
  std::vector<MarkedInterval> labels{iv(2, 6, 7)};
  for (int i = 2; i <= 6; ++i) labels.push_back(iv(2 * i, 2 * i + 4, 2 * i + 7));
  labels.push_back(iv(14, 20, 21));
  const std::vector<int> walk{1, 2, 4, 6, 7, 5, 3};
  for (int p = 0; p < 7; ++p) CHECK(c7.intervals[p] == labels[walk[p] - 1]);
  check_built(c7, SemanticsTag::single_approval, family::Cycle{7});

  check_built(sa_family_rep(family::CompleteMultipartite{{3, 3, 3}}), SemanticsTag::single_approval,
              family::CompleteMultipartite{{3, 3, 3}});
  for (int n = 1; n <= 6; ++n) check_built(sa_family_rep(family::Complete{n}), SemanticsTag::single_approval, family::Complete{n});
  for (int n = 3; n <= 9; ++n) {
    check_built(sa_family_rep(family::Cycle{n}), SemanticsTag::single_approval, family::Cycle{n});
    check_built(sa_family_rep(family::Wheel{n}), SemanticsTag::single_approval, family::Wheel{n});
  }
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const auto parent = random_parent(rng, uniform_int(rng, 1, 12));
    const Representation rep = sa_family_rep(family::Tree{parent});
    check_built(rep, SemanticsTag::single_approval, family::Tree{parent});
    CHECK(has_distinct_points(rep));
    std::vector<int> parts(uniform_int(rng, 1, 4));
    for (auto& p : parts) p = uniform_int(rng, 1, 3);
    check_built(sa_family_rep(family::CompleteMultipartite{parts}), SemanticsTag::single_approval,
                family::CompleteMultipartite{parts});
  }
  CHECK(kind_of([] { sa_family_rep(family::Cycle{2}); }) == ErrorKind::unsupported_family);
  CHECK(kind_of([] { sa_family_rep(family::K1bc{1, 1}); }) == ErrorKind::unsupported_family);
}

TEST_CASE("double approval families") {
  const Representation k5 = da_family_rep(family::Complete{5});
  for (int i = 1; i <= 5; ++i) CHECK(k5.intervals[i - 1] == iv(i, i + 5, i + 10));
  check_built(k5, SemanticsTag::double_approval, family::Complete{5});

  const Representation k33 = da_family_rep(family::CompleteBipartite{3, 3});
  CHECK(k33.intervals[0] == iv(2, 14, 15));
  CHECK(k33.intervals[3] == iv(8, 9, 20));
  check_built(k33, SemanticsTag::double_approval, family::CompleteBipartite{3, 3});

  const Representation k111 = da_family_rep(family::K1bc{1, 1});
  CHECK(k111.intervals.back() == iv(1, make_rational(11, 2), 9));
  CHECK(build_graph(k111, SemanticsTag::double_approval) == complete_graph(3));

  for (int n = 1; n <= 6; ++n) check_built(da_family_rep(family::Complete{n}), SemanticsTag::double_approval, family::Complete{n});
  for (int n = 3; n <= 12; ++n) check_built(da_family_rep(family::Cycle{n}), SemanticsTag::double_approval, family::Cycle{n});
  for (int n = 3; n <= 9; ++n) check_built(da_family_rep(family::Wheel{n}), SemanticsTag::double_approval, family::Wheel{n});
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      check_built(da_family_rep(family::CompleteBipartite{m, n}), SemanticsTag::double_approval, family::CompleteBipartite{m, n});
  for (int b = 1; b <= 3; ++b)
    for (int c = 1; c <= 3; ++c) check_built(da_family_rep(family::K1bc{b, c}), SemanticsTag::double_approval, family::K1bc{b, c});
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    const auto parent = random_parent(rng, uniform_int(rng, 1, 12));
    const Representation rep = da_family_rep(family::Tree{parent});
    check_built(rep, SemanticsTag::double_approval, family::Tree{parent});
    CHECK(has_distinct_points(rep));
  }
  CHECK(kind_of([] { da_family_rep(family::CompleteMultipartite{{2, 2, 2}}); }) == ErrorKind::unsupported_family);
}

TEST_CASE("named graphs") {
  const SimpleGraph g = grotzsch_graph();
  CHECK(g.order() == 11);
  CHECK(g.size() == 20);
  CHECK(oracle::triangle_free_brute(g));
  CHECK(oracle::chromatic_brute(g) == 4);
  CHECK(g.degree(10) == 5);  // k is the hub

  const SimpleGraph lob = lobster5_graph();
  CHECK(lob.order() == 11);
  CHECK(lob.size() == 10);
  CHECK(lob.degree(0) == 5);

  const SimpleGraph g3 = g_k_graph(3);
  CHECK(g3.order() == 7);
  CHECK(g3.size() == 9);
  CHECK(g_k_graph(10).order() == 56);

  const std::vector<int> jumps{1, 5};
  const SimpleGraph circ = circulant_graph(13, jumps);
  CHECK(circ.order() == 13);
  CHECK(circ.size() == 26);
  const auto autos = automorphisms(circ, 1000);
  REQUIRE(autos.has_value());
  std::set<int> orbit;
  for (const auto& p : *autos) orbit.insert(p[0]);
  CHECK(orbit.size() == 13);

  CHECK(named_graph("complete-multipartite", std::vector<int>{2, 2, 2}).size() == 12);
  CHECK(named_graph("wheel", std::vector<int>{5}) == wheel_graph(5));
  CHECK(kind_of([] { named_graph("petersen", {}); }) == ErrorKind::bad_parameters);
  CHECK(kind_of([] { cycle_graph(2); }) == ErrorKind::bad_parameters);
  CHECK(kind_of([] { tree_graph(std::vector<int>{-1, 2, 1}); }) == ErrorKind::bad_parameters);
  CHECK(kind_of([] { tree_graph(std::vector<int>{0, 0}); }) == ErrorKind::bad_parameters);
}

TEST_CASE("isomorphism against brute force") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform_int(rng, 1, 7);
    const SimpleGraph a = oracle::graph_from_mask(n, static_cast<std::uint32_t>(rng()));
    SimpleGraph b = t % 2 ? a : oracle::graph_from_mask(n, static_cast<std::uint32_t>(rng()));
    if (t % 3 == 0) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      SimpleGraph c(n);
      for (auto [u, v] : a.edges()) c.add_edge(p[u], p[v]);
      b = c;
    }
    const auto phi = find_isomorphism(a, b);
    CHECK(phi.has_value() == oracle::isomorphic_brute(a, b));
    if (phi) {
      for (auto [u, v] : a.edges()) CHECK(b.has_edge((*phi)[u], (*phi)[v]));
    }
  }
}
