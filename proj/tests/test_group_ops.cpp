#include <map>
#include <random>

#include <gtest/gtest.h>

#include "envelope/error.hpp"
#include "envelope/group_ops.hpp"
#include "support/fixtures.hpp"

using envelope::ElementId;
using envelope::Subgroup;
using fixtures::gen;
using fixtures::group;
using fixtures::labels_to_set;
using fixtures::to_set;

namespace {

std::vector<ElementId> ids(const oracle::Set& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(GeneratedSubgroup, Examples) {
  auto s3 = group("catalog:S:3");
  EXPECT_TRUE(envelope::generated_subgroup(s3, {}).is_trivial());
  EXPECT_EQ(to_set(gen(s3, {"(1 2 3)"})), labels_to_set(s3, {"()", "(1 2 3)", "(1 3 2)"}));
  auto d8 = group("catalog:D:8");
  EXPECT_EQ(to_set(gen(d8, {"r^2", "s"})), labels_to_set(d8, {"e", "r^2", "s", "r^2s"}));
}

TEST(GeneratedSubgroup, ClosureOperator) {
  std::mt19937_64 rng(11);
  for (const auto& spec : fixtures::small_specs()) {
    auto g = group(spec);
    auto t = fixtures::table(g);
    for (int trial = 0; trial < 20; ++trial) {
      oracle::Set seed, bigger;
      for (int k = 0; k < 3; ++k) seed.insert(static_cast<int>(rng() % g->order()));
      bigger = seed;
      bigger.insert(static_cast<int>(rng() % g->order()));
      auto h = envelope::generated_subgroup(g, ids(seed));
      EXPECT_EQ(to_set(h), oracle::closure(t, seed)) << spec;
      EXPECT_TRUE(oracle::subset(seed, to_set(h)));
      auto again = envelope::generated_subgroup(g, std::vector<ElementId>(h.members().begin(), h.members().end()));
      EXPECT_EQ(again, h);
      EXPECT_TRUE(h.is_subset_of(envelope::generated_subgroup(g, ids(bigger))));
      EXPECT_NO_THROW(h.validate());
      EXPECT_EQ(g->order() % h.order(), 0u);
    }
  }
}

TEST(Subgroups, ValidateRejectsNonSubgroups) {
  auto s3 = group("catalog:S:3");
  EXPECT_THROW(fixtures::from_set(s3, labels_to_set(s3, {"()", "(1 2)", "(1 3)"})).validate(), envelope::Error);
  EXPECT_THROW(fixtures::from_set(s3, labels_to_set(s3, {"(1 2)"})).validate(), envelope::Error);
}

TEST(Subgroups, DifferentParentsDoNotCompare) {
  auto a = group("catalog:C:2");
  auto b = group("catalog:S:2");
  EXPECT_THROW((void)(Subgroup::whole(a) == Subgroup::whole(b)), envelope::Error);
}

TEST(Centralizer, Examples) {
  auto c4 = group("catalog:C:4");
  EXPECT_EQ(envelope::centralizer(c4, std::vector<ElementId>{1, 2}), Subgroup::whole(c4));
  auto s3 = group("catalog:S:3");
  EXPECT_EQ(to_set(envelope::centralizer(s3, std::vector<ElementId>{fixtures::id(s3, "(1 2 3)")})),
            labels_to_set(s3, {"()", "(1 2 3)", "(1 3 2)"}));
  auto q8 = group("catalog:Q:8");
  EXPECT_EQ(to_set(envelope::centralizer(q8, std::vector<ElementId>{fixtures::id(q8, "x")})),
            labels_to_set(q8, {"e", "x", "x^2", "x^3"}));
}

TEST(Centralizer, MatchesOracleAndIsAnIntersection) {
  std::mt19937_64 rng(5);
  for (const auto& spec : fixtures::small_specs()) {
    auto g = group(spec);
    auto t = fixtures::table(g);
    auto whole = oracle::all(t);
    for (int trial = 0; trial < 30; ++trial) {
      oracle::Set s;
      auto size = 1 + rng() % (trial < 20 ? 3 : 6);
      for (std::size_t k = 0; k < size; ++k) s.insert(static_cast<int>(rng() % g->order()));
      auto c = envelope::centralizer(g, ids(s));
      EXPECT_EQ(to_set(c), oracle::centralizer(t, whole, s)) << spec;
      oracle::Set meet = whole;
      for (int x : s) meet = oracle::intersect(meet, oracle::centralizer(t, whole, {x}));
      EXPECT_EQ(to_set(c), meet);
      auto h = envelope::generated_subgroup(g, ids(s));
      EXPECT_EQ(envelope::centralizer_of(Subgroup::whole(g), h), c) << spec;
    }
  }
}

TEST(Centralizer, DoubleAndTripleCentralizers) {
  for (const auto& spec : fixtures::small_specs()) {
    auto g = group(spec);
    auto t = fixtures::table(g);
    auto whole = Subgroup::whole(g);
    for (const auto& hs : oracle::all_subgroups(t)) {
      auto h = fixtures::from_set(g, hs);
      auto c = envelope::centralizer_of(whole, h);
      auto cc = envelope::centralizer_of(whole, c);
      EXPECT_TRUE(h.is_subset_of(cc));
      EXPECT_EQ(envelope::centralizer_of(whole, cc), c) << spec;
      // Elements of S lie in C(C(S)) when S is a subgroup's member set.
      EXPECT_TRUE(oracle::subset(hs, oracle::centralizer(t, oracle::all(t), to_set(c))));
      if (oracle::is_abelian(t, hs)) EXPECT_TRUE(oracle::is_abelian(t, to_set(cc))) << spec;
    }
  }
}

TEST(Normalizer, Examples) {
  auto s3 = group("catalog:S:3");
  EXPECT_EQ(envelope::normalizer(Subgroup::whole(s3), Subgroup::whole(s3)), Subgroup::whole(s3));
  auto t = gen(s3, {"(1 2)"});
  EXPECT_EQ(envelope::normalizer(Subgroup::whole(s3), t), t);
  auto s4 = group("catalog:S:4");
  auto n = envelope::normalizer(Subgroup::whole(s4), gen(s4, {"(1 2 3 4)"}));
  EXPECT_EQ(n.order(), 8u);
  EXPECT_EQ(envelope::nilpotency_class(n), std::optional<std::uint64_t>(2));
}

TEST(Normalizer, ContainmentChainAgainstOracle) {
  for (const auto& spec : fixtures::small_specs()) {
    auto g = group(spec);
    auto t = fixtures::table(g);
    auto whole = Subgroup::whole(g);
    auto z = envelope::center(whole);
    for (const auto& hs : oracle::all_subgroups(t)) {
      auto h = fixtures::from_set(g, hs);
      auto n = envelope::normalizer(whole, h);
      auto c = envelope::centralizer_of(whole, h);
      EXPECT_EQ(to_set(n), oracle::normalizer(t, oracle::all(t), hs)) << spec;
      EXPECT_TRUE(h.is_subset_of(n));
      EXPECT_TRUE(c.is_subset_of(n));
      EXPECT_TRUE(z.is_subset_of(c));
    }
  }
}

TEST(CommutatorSubgroup, Examples) {
  auto s3 = group("catalog:S:3");
  auto whole = Subgroup::whole(s3);
  EXPECT_EQ(to_set(envelope::commutator_subgroup(whole, whole)), labels_to_set(s3, {"()", "(1 2 3)", "(1 3 2)"}));
  auto d8 = group("catalog:D:8");
  auto dw = Subgroup::whole(d8);
  EXPECT_EQ(to_set(envelope::commutator_subgroup(dw, dw)), labels_to_set(d8, {"e", "r^2"}));
  EXPECT_TRUE(envelope::commutator_subgroup(dw, envelope::center(dw)).is_trivial());
}

TEST(CommutatorSubgroup, MatchesOracle) {
  for (const auto& spec : {"catalog:D:8", "catalog:S:4", "catalog:Q:16", "catalog:C:3 x catalog:S:3"}) {
    auto g = group(spec);
    auto t = fixtures::table(g);
    auto subs = oracle::all_subgroups(t);
    for (std::size_t i = 0; i < subs.size(); i += 3)
      for (std::size_t j = 0; j < subs.size(); j += 5) {
        auto c = envelope::commutator_subgroup(fixtures::from_set(g, subs[i]), fixtures::from_set(g, subs[j]));
        EXPECT_EQ(to_set(c), oracle::commutator_subgroup(t, subs[i], subs[j])) << spec;
      }
  }
}

TEST(DerivedSeries, Examples) {
  auto c6 = envelope::derived_series(group("catalog:C:6"));
  ASSERT_EQ(c6.terms.size(), 2u);
  EXPECT_TRUE(c6.terms[1].is_trivial());
  EXPECT_TRUE(c6.solvable);

  auto s4 = envelope::derived_series(group("catalog:S:4"));
  std::vector<std::size_t> orders;
  for (const auto& x : s4.terms) orders.push_back(x.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{24, 12, 4, 1}));
  EXPECT_TRUE(s4.solvable);

  auto a5 = envelope::derived_series(group("catalog:A:5"));
  ASSERT_EQ(a5.terms.size(), 1u);
  EXPECT_EQ(a5.terms[0].order(), 60u);
  EXPECT_FALSE(a5.solvable);
}

TEST(DerivedSeries, SolvabilityMatchesOracle) {
  for (const auto& spec : fixtures::small_specs()) {
    auto g = group(spec);
    auto t = fixtures::table(g);
    for (const auto& hs : oracle::all_subgroups(t)) {
      auto d = envelope::derived_series(fixtures::from_set(g, hs));
      EXPECT_EQ(d.solvable, oracle::is_solvable(t, hs)) << spec;
      EXPECT_EQ(d.terms.size(), oracle::derived_series(t, hs).size()) << spec;
    }
  }
}

namespace {

// All centralizers of all subsets, by direct enumeration of subsets.
std::set<oracle::Set> lattice_by_subsets(const oracle::Table& t) {
  std::set<oracle::Set> out;
  const int n = static_cast<int>(t.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    oracle::Set s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.insert(i);
    out.insert(oracle::centralizer(t, oracle::all(t), s));
  }
  return out;
}

std::size_t longest_chain(const std::set<oracle::Set>& lattice) {
  std::vector<oracle::Set> v(lattice.begin(), lattice.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::size_t> best(v.size(), 1);
  std::size_t top = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (v[j].size() < v[i].size() && oracle::subset(v[j], v[i])) best[i] = std::max(best[i], best[j] + 1);
    top = std::max(top, best[i]);
  }
  return top;
}

}  // namespace

TEST(CentralizerLattice, Examples) {
  auto c5 = envelope::centralizer_lattice(group("catalog:C:5"));
  ASSERT_EQ(c5.entries.size(), 1u);
  EXPECT_EQ(c5.max_chain_length, 1u);

  auto s3 = group("catalog:S:3");
  auto l = envelope::centralizer_lattice(s3);
  std::set<oracle::Set> got;
  for (const auto& e : l.entries) got.insert(to_set(e.subgroup));
  std::set<oracle::Set> want{oracle::all(fixtures::table(s3)),
                             labels_to_set(s3, {"()", "(1 2 3)", "(1 3 2)"}),
                             labels_to_set(s3, {"()", "(1 2)"}),
                             labels_to_set(s3, {"()", "(1 3)"}),
                             labels_to_set(s3, {"()", "(2 3)"}),
                             labels_to_set(s3, {"()"})};
  EXPECT_EQ(got, want);
  EXPECT_EQ(l.max_chain_length, 3u);
}

TEST(CentralizerLattice, MatchesSubsetEnumeration) {
  for (const auto& spec : {"catalog:D:8", "catalog:Q:8", "catalog:D:12", "catalog:C:2 x catalog:S:3"}) {
    auto g = group(spec);
    auto t = fixtures::table(g);
    auto l = envelope::centralizer_lattice(g);
    std::set<oracle::Set> got;
    for (const auto& e : l.entries) {
      got.insert(to_set(e.subgroup));
      EXPECT_EQ(envelope::centralizer(g, e.witnesses), e.subgroup) << spec;
    }
    auto want = lattice_by_subsets(t);
    EXPECT_EQ(got, want) << spec;
    EXPECT_EQ(l.max_chain_length, longest_chain(want)) << spec;
  }
}

TEST(CentralizerLattice, OrderCap) {
  EXPECT_THROW(envelope::centralizer_lattice(group("catalog:S:4"), 10), envelope::Error);
}
