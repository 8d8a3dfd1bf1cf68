#include <sstream>

#include <gtest/gtest.h>

#include "envelope/error.hpp"
#include "envelope/finite_group.hpp"
#include "envelope/harness.hpp"
#include "support/fixtures.hpp"

using envelope::CheckReport;
using envelope::SmallOrdinal;
using envelope::Subgroup;
using envelope::SubgroupPolicy;
using envelope::Verdict;
using fixtures::gen;
using fixtures::group;

namespace {

const SmallOrdinal kOmega = SmallOrdinal::omega();

std::string describe(const CheckReport& r) { return r.to_json().dump(); }

// SL(2,3) as 2x2 matrices over F_3, multiplied directly.
envelope::GroupPtr special_linear_2_3() {
  using M = std::array<int, 4>;
  std::vector<M> mats;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) mats.push_back({a, b, c, d});
  auto mul = [](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
             (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  envelope::FiniteGroup::Table t(mats.size(), std::vector<envelope::ElementId>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < mats.size(); ++j) {
      auto p = mul(mats[i], mats[j]);
      t[i][j] = static_cast<envelope::ElementId>(std::find(mats.begin(), mats.end(), p) - mats.begin());
    }
  return envelope::FiniteGroup::from_cayley_table(t);
}

// Elements of 2-power order in SL(2,3) form its normal Sylow 2-subgroup.
Subgroup quaternion_in(const envelope::GroupPtr& g) {
  auto t = fixtures::table(g);
  oracle::Set s;
  for (int x = 0; x < static_cast<int>(g->order()); ++x) {
    int o = oracle::element_order(t, x);
    if (o == 1 || o == 2 || o == 4) s.insert(x);
  }
  return fixtures::from_set(g, s);
}

}  // namespace

TEST(DoubleCentralizerAbelian, Examples) {
  auto c6 = group("catalog:C:6");
  for (const auto& h : envelope::enumerate_subgroups(c6, SubgroupPolicy::parse("all")))
    EXPECT_EQ(envelope::check_double_centralizer_abelian(h).verdict, Verdict::Pass);
  auto s3 = group("catalog:S:3");
  EXPECT_EQ(envelope::check_double_centralizer_abelian(gen(s3, {"(1 2 3)"})).verdict, Verdict::Pass);
  auto d8 = group("catalog:D:8");
  EXPECT_EQ(envelope::check_double_centralizer_abelian(gen(d8, {"s"})).verdict, Verdict::Pass);
  auto r = envelope::check_double_centralizer_abelian(Subgroup::whole(d8));
  EXPECT_EQ(r.verdict, Verdict::Skipped);
  EXPECT_EQ(r.parameters["unmet"], "abelian");
  EXPECT_TRUE(envelope::replay_skip(Subgroup::whole(d8), r));
}

TEST(TowerRestriction, EqualSubgroupsPass) {
  for (const char* spec : {"catalog:D:8", "catalog:Q:8", "catalog:S:3", "catalog:C:5"}) {
    auto g = group(spec);
    auto w = Subgroup::whole(g);
    for (SmallOrdinal lambda : {SmallOrdinal(0), SmallOrdinal(1), SmallOrdinal(2), kOmega}) {
      auto r = envelope::check_tower_restriction(w, w, w, lambda);
      EXPECT_EQ(r.verdict, Verdict::Pass) << spec << " " << describe(r);
    }
  }
}

TEST(TowerRestriction, DihedralRotationTowerFailsTheHypothesis) {
  // C(<r^2>) is all of D_8 while Z(D_8) = <r^2>, so the hypothesis breaks at 1.
  auto g = group("catalog:D:8");
  auto c = Subgroup::whole(g), b = gen(g, {"r"}), a = gen(g, {"r^2"});
  auto r = envelope::check_tower_restriction(c, b, a, 1);
  EXPECT_EQ(r.verdict, Verdict::Skipped);
  EXPECT_EQ(r.parameters["unmet"], "hypothesis");
  EXPECT_EQ(r.parameters["alpha"], "1");
  EXPECT_TRUE(envelope::replay_skip(a, r));
  auto direct = oracle::centralizer(fixtures::table(g), fixtures::to_set(c), fixtures::to_set(a));
  EXPECT_EQ(direct.size(), 8u);

  // At lambda = 0 the hypothesis is vacuous and the conclusions hold.
  EXPECT_EQ(envelope::check_tower_restriction(c, b, a, 0).verdict, Verdict::Pass);
}

TEST(TowerRestriction, NotATowerIsSkipped) {
  auto g = group("catalog:D:8");
  auto r = envelope::check_tower_restriction(Subgroup::whole(g), gen(g, {"s"}), gen(g, {"r"}), 1);
  EXPECT_EQ(r.verdict, Verdict::Skipped);
  EXPECT_EQ(r.parameters["unmet"], "tower");
  EXPECT_TRUE(envelope::replay_skip(gen(g, {"r"}), r));
}

TEST(TowerRestriction, EnvelopeTowersPass) {
  for (const char* spec : {"catalog:D:8", "catalog:S:4", "catalog:Q:16", "catalog:A:4"}) {
    auto g = group(spec);
    auto whole = Subgroup::whole(g);
    for (const auto& h : envelope::enumerate_subgroups(g, SubgroupPolicy::parse("representatives"))) {
      auto env = envelope::envelope_chain(whole, h, 6);
      for (std::uint64_t k = 0; k < 4; ++k) {
        auto r = envelope::check_tower_restriction(env.term(k), env.term(k + 1), h, k);
        EXPECT_EQ(r.verdict, Verdict::Pass) << spec << " k=" << k << " " << describe(r);
      }
    }
  }
}

TEST(CentralizerCenterAgreement, Examples) {
  auto d8 = group("catalog:D:8");
  EXPECT_EQ(envelope::check_centralizer_center_agreement(gen(d8, {"s"}), 0).verdict, Verdict::Pass);
  EXPECT_EQ(envelope::check_centralizer_center_agreement(gen(d8, {"s"}), 2).verdict, Verdict::Pass);
  auto s4 = group("catalog:S:4");
  auto sylow = gen(s4, {"(1 2 3 4)", "(1 3)"});
  ASSERT_EQ(sylow.order(), 8u);
  EXPECT_EQ(envelope::check_centralizer_center_agreement(sylow, 3).verdict, Verdict::Pass);
  EXPECT_EQ(envelope::check_centralizer_center_agreement(sylow, kOmega).verdict, Verdict::Pass);
}

TEST(EnvelopeNilpotency, Examples) {
  auto s4 = group("catalog:S:4");
  auto sylow = gen(s4, {"(1 2 3 4)", "(1 3)"});
  auto r = envelope::check_envelope_nilpotency(sylow);
  EXPECT_EQ(r.verdict, Verdict::Pass) << describe(r);
  EXPECT_EQ(r.parameters["class"], 2);
  EXPECT_EQ(r.parameters["hypercentral_degree"], "nilpotency class");
  auto e2 = envelope::envelope_chain(Subgroup::whole(s4), sylow, 2).term(2);
  EXPECT_EQ(envelope::nilpotency_class(e2), std::optional<std::uint64_t>(2));

  auto sl = special_linear_2_3();
  ASSERT_EQ(sl->order(), 24u);
  auto q8 = quaternion_in(sl);
  ASSERT_EQ(q8.order(), 8u);
  EXPECT_EQ(envelope::nilpotency_class(q8), std::optional<std::uint64_t>(2));
  r = envelope::check_envelope_nilpotency(q8);
  EXPECT_EQ(r.verdict, Verdict::Pass) << describe(r);
  auto e = envelope::envelope_chain(Subgroup::whole(sl), q8, 2).term(2);
  EXPECT_EQ(envelope::nilpotency_class(e), std::optional<std::uint64_t>(2));
}

TEST(EnvelopeNilpotency, SkipsOutsideItsPremise) {
  auto s3 = group("catalog:S:3");
  auto r = envelope::check_envelope_nilpotency(Subgroup::whole(s3));
  EXPECT_EQ(r.parameters["unmet"], "nilpotent");
  EXPECT_TRUE(envelope::replay_skip(Subgroup::whole(s3), r));
  auto trivial = gen(s3, {});
  r = envelope::check_envelope_nilpotency(trivial);
  EXPECT_EQ(r.parameters["unmet"], "nontrivial");
  EXPECT_TRUE(envelope::replay_skip(trivial, r));
}

TEST(EnvelopeStabilization, Examples) {
  auto s3 = group("catalog:S:3");
  auto a3 = gen(s3, {"(1 2 3)"});
  EXPECT_EQ(envelope::check_envelope_stabilization(a3, 5).verdict, Verdict::Pass);
  auto env = envelope::envelope_chain(Subgroup::whole(s3), a3, 6);
  for (std::uint64_t j = 1; j <= 6; ++j) EXPECT_EQ(env.term(j), a3);

  auto d16 = group("catalog:D:16");
  auto r = gen(d16, {"r"});
  EXPECT_EQ(envelope::check_envelope_stabilization(r, 5).verdict, Verdict::Pass);
  auto dc = envelope::centralizer_of(Subgroup::whole(d16), envelope::centralizer_of(Subgroup::whole(d16), r));
  EXPECT_EQ(envelope::envelope_chain(Subgroup::whole(d16), r, 6).term(6), dc);

  auto q16 = group("catalog:Q:16");
  EXPECT_EQ(envelope::check_envelope_stabilization(Subgroup::whole(q16)).verdict, Verdict::Pass);
}

TEST(EnvelopeSolvable, Examples) {
  auto s4 = group("catalog:S:4");
  auto v4 = gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  EXPECT_EQ(envelope::check_envelope_solvable(v4).verdict, Verdict::Pass);

  // The outcome for a 5-cycle in S_5 is whatever brute force says.
  auto s5 = group("catalog:S:5");
  auto h = gen(s5, {"(1 2 3 4 5)"});
  auto t = fixtures::table(s5);
  auto e = oracle::envelopes(t, oracle::all(t), fixtures::to_set(h), 2);
  bool solvable = oracle::is_solvable(t, e[2]);
  auto r = envelope::check_envelope_solvable(h);
  EXPECT_EQ(r.verdict, solvable ? Verdict::Pass : Verdict::Fail);
}

TEST(ChainShape, TrivialAndCorpusSubgroupsPass) {
  for (const auto& spec : fixtures::small_specs()) {
    auto g = group(spec);
    EXPECT_EQ(envelope::check_chain_shape(gen(g, {})).verdict, Verdict::Pass) << spec;
    for (const auto& h : envelope::enumerate_subgroups(g, SubgroupPolicy::parse("representatives")))
      EXPECT_EQ(envelope::check_chain_shape(h).verdict, Verdict::Pass) << spec;
  }
}

TEST(ChainShape, CorruptedEnvelopeChainFailsWithReplayableWitness) {
  auto g = group("catalog:D:8");
  auto h = gen(g, {"s"});
  auto whole = Subgroup::whole(g);
  auto env = envelope::envelope_chain(whole, h, 4);
  auto cen = envelope::iterated_centralizer_chain(whole, h, 4);
  ASSERT_EQ(envelope::check_chain_shape(h, env, cen).verdict, Verdict::Pass);
  ASSERT_GE(env.terms().size(), 3u);

  auto bad = env;
  bad.replace(env.terms()[1].index, gen(g, {}));
  auto r = envelope::check_chain_shape(h, bad, cen);
  ASSERT_EQ(r.verdict, Verdict::Fail);
  EXPECT_EQ(r.parameters["relation"], "monotone");
  EXPECT_FALSE(r.witness.empty());
  EXPECT_TRUE(envelope::replay_witness(h, bad, cen, r));
  EXPECT_FALSE(envelope::replay_witness(h, env, cen, r));
}

TEST(ChainShape, CorruptedFirstEntryFailsWithReplayableWitness) {
  auto g = group("catalog:Q:8");
  auto h = gen(g, {"x"});
  auto whole = Subgroup::whole(g);
  auto env = envelope::envelope_chain(whole, h, 4);
  auto cen = envelope::iterated_centralizer_chain(whole, h, 4);
  auto entries = cen.first_entry();
  ASSERT_FALSE(entries.empty());
  entries.begin()->second = kOmega;
  auto bad = cen;
  bad.set_first_entry(entries);
  auto r = envelope::check_chain_shape(h, env, bad);
  ASSERT_EQ(r.verdict, Verdict::Fail);
  EXPECT_EQ(r.parameters["relation"], "first_entry_successor");
  EXPECT_TRUE(envelope::replay_witness(h, env, bad, r));
}

TEST(ChainShape, EnvelopeMissingHFails) {
  auto g = group("catalog:S:3");
  auto h = gen(g, {"(1 2 3)"});
  auto whole = Subgroup::whole(g);
  auto env = envelope::envelope_chain(whole, h, 3);
  auto cen = envelope::iterated_centralizer_chain(whole, h, 3);
  auto bad = env;
  // Keep the chain monotone so only containment of H breaks.
  for (const auto& t : env.terms())
    if (t.index > 0) bad.replace(t.index, gen(g, {}));
  auto r = envelope::check_chain_shape(h, bad, cen);
  ASSERT_EQ(r.verdict, Verdict::Fail);
  EXPECT_EQ(r.parameters["relation"], "contains_h");
  EXPECT_TRUE(envelope::replay_witness(h, bad, cen, r));
}

TEST(HypercenterRelations, PassOnSmallGroups) {
  for (const char* spec : {"catalog:D:8", "catalog:S:4", "catalog:Heis:3"}) {
    auto g = group(spec);
    for (const auto& h : envelope::enumerate_subgroups(g, SubgroupPolicy::parse("representatives"))) {
      EXPECT_EQ(envelope::check_hypercenter_containment(h).verdict, Verdict::Pass) << spec;
      EXPECT_EQ(envelope::check_hypercenter_ascent(h).verdict, Verdict::Pass) << spec;
    }
  }
}

TEST(Replay, PassingReportsDoNotReplay) {
  auto g = group("catalog:D:8");
  auto h = gen(g, {"s"});
  auto r = envelope::check_chain_shape(h);
  EXPECT_FALSE(envelope::replay_witness(h, r));
  EXPECT_FALSE(envelope::replay_skip(h, r));
}

TEST(Replay, ForgedFailsDoNotReplay) {
  auto g = group("catalog:D:8");
  auto h = gen(g, {"s"});
  auto r = envelope::check_double_centralizer_abelian(h);
  r.verdict = Verdict::Fail;
  r.parameters["relation"] = "noncommuting_pair";
  r.witness = {"s", "r^2"};
  EXPECT_FALSE(envelope::replay_witness(h, r));
}

TEST(SubgroupPolicyTest, Parse) {
  EXPECT_EQ(SubgroupPolicy::parse("all").kind, SubgroupPolicy::Kind::All);
  EXPECT_EQ(SubgroupPolicy::parse("representatives").kind, SubgroupPolicy::Kind::Representatives);
  auto p = SubgroupPolicy::parse("random(3, seed=42)");
  EXPECT_EQ(p.kind, SubgroupPolicy::Kind::Random);
  EXPECT_EQ(p.count, 3u);
  EXPECT_EQ(p.seed, 42u);
  EXPECT_EQ(SubgroupPolicy::parse(p.to_string()).to_string(), p.to_string());
  EXPECT_EQ(SubgroupPolicy::parse("random(5,1)").count, 5u);
  for (const char* bad : {"", "All", "random", "random(3)", "random(-1, 2)", "some"}) {
    try {
      SubgroupPolicy::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const envelope::Error& e) {
      EXPECT_EQ(e.code(), envelope::ErrorCode::Config) << bad;
    }
  }
}

TEST(Enumeration, AllMatchesOracle) {
  for (const auto& spec : fixtures::small_specs()) {
    auto g = group(spec);
    auto t = fixtures::table(g);
    auto expected = oracle::all_subgroups(t);
    auto got = envelope::enumerate_subgroups(g, SubgroupPolicy::parse("all"));
    std::set<oracle::Set> got_sets;
    for (const auto& h : got) got_sets.insert(fixtures::to_set(h));
    EXPECT_EQ(got.size(), got_sets.size()) << spec;
    EXPECT_EQ(got_sets, std::set<oracle::Set>(expected.begin(), expected.end())) << spec;
  }
}

TEST(Enumeration, RepresentativesMatchConjugacyClasses) {
  for (const auto& spec : fixtures::small_specs()) {
    auto g = group(spec);
    auto t = fixtures::table(g);
    std::set<std::set<oracle::Set>> classes;
    for (const auto& h : oracle::all_subgroups(t)) {
      std::set<oracle::Set> cls;
      for (int x = 0; x < static_cast<int>(t.size()); ++x) cls.insert(oracle::conjugate(t, h, x));
      classes.insert(cls);
    }
    auto reps = envelope::subgroup_class_representatives(g);
    EXPECT_EQ(reps.size(), classes.size()) << spec;
    std::set<std::set<oracle::Set>> hit;
    for (const auto& h : reps)
      for (const auto& cls : classes)
        if (cls.count(fixtures::to_set(h))) hit.insert(cls);
    EXPECT_EQ(hit.size(), classes.size()) << spec;
  }
}

TEST(Enumeration, KnownCounts) {
  EXPECT_EQ(envelope::enumerate_subgroups(group("catalog:S:4"), SubgroupPolicy::parse("all")).size(), 30u);
  EXPECT_EQ(envelope::subgroup_class_representatives(group("catalog:S:4")).size(), 11u);
  EXPECT_EQ(envelope::enumerate_subgroups(group("catalog:D:8"), SubgroupPolicy::parse("all")).size(), 10u);
  EXPECT_EQ(envelope::enumerate_subgroups(group("catalog:Q:8"), SubgroupPolicy::parse("all")).size(), 6u);
}

TEST(Enumeration, RandomIsSeededAndDeterministic) {
  auto g = group("catalog:D:8");
  auto a = envelope::enumerate_subgroups(g, SubgroupPolicy::parse("random(3, seed=42)"));
  auto b = envelope::enumerate_subgroups(g, SubgroupPolicy::parse("random(3, seed=42)"));
  ASSERT_EQ(a.size(), b.size());
  EXPECT_LE(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Enumeration, LargeGroupsFallBackToSeededSampling) {
  auto g = group("catalog:D:4096");
  auto policy = SubgroupPolicy::parse("representatives");
  policy.seed = 5;
  auto a = envelope::enumerate_subgroups(g, policy);
  auto b = envelope::enumerate_subgroups(g, policy);
  policy.seed = 6;
  auto c = envelope::enumerate_subgroups(g, policy);
  ASSERT_FALSE(a.empty());
  EXPECT_LE(a.size(), envelope::kFallbackSampleCount);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Sweep, CyclicGroupOfOrderSixPassesOrSkips) {
  envelope::SweepOptions opts;
  opts.policy = SubgroupPolicy::parse("all");
  auto reports = envelope::sweep({{"C_6", group("catalog:C:6")}}, opts);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.verdict == Verdict::Pass || r.verdict == Verdict::Skipped) << describe(r);
    EXPECT_EQ(r.group_name, "C_6");
  }
  std::set<std::string> ids;
  for (const auto& r : reports) ids.insert(r.check_id);
  EXPECT_EQ(ids.size(), envelope::all_check_ids().size());
}

TEST(Sweep, DeterministicReportBodies) {
  envelope::SweepOptions opts;
  opts.policy = SubgroupPolicy::parse("random(3, seed=42)");
  std::vector<envelope::NamedGroup> corpus{{"D_8", group("catalog:D:8")}};
  auto body = [&](unsigned threads) {
    opts.threads = threads;
    std::ostringstream out;
    envelope::write_report_lines(out, envelope::sweep(corpus, opts), {{"run", 1}}, false);
    auto text = out.str();
    return text.substr(text.find('\n') + 1);
  };
  auto first = body(1);
  EXPECT_EQ(first, body(1));
  EXPECT_EQ(first, body(4));
}

TEST(Sweep, SelectedChecksOnly) {
  envelope::SweepOptions opts;
  opts.checks = {envelope::check_id::kChainShape};
  auto reports = envelope::sweep({{"S_3", group("catalog:S:3")}}, opts);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_EQ(r.check_id, envelope::check_id::kChainShape);
}

TEST(Sweep, SmallCatalogHasNoFailuresAndSkipsReplay) {
  envelope::SweepOptions opts;
  opts.policy = SubgroupPolicy::parse("all");
  for (const auto& spec : fixtures::small_specs()) {
    auto g = group(spec);
    for (const auto& h : envelope::enumerate_subgroups(g, opts.policy)) {
      for (const auto& r : envelope::run_checks(spec, h, opts)) {
        EXPECT_TRUE(r.verdict == Verdict::Pass || r.verdict == Verdict::Skipped) << spec << " " << describe(r);
        if (r.verdict == Verdict::Skipped) EXPECT_TRUE(envelope::replay_skip(h, r)) << describe(r);
      }
    }
  }
}

TEST(Reports, JsonRoundTripAndSummary) {
  auto g = group("catalog:D:8");
  auto r = envelope::check_tower_restriction(Subgroup::whole(g), gen(g, {"r"}), gen(g, {"r^2"}), 1);
  auto back = CheckReport::from_json(r.to_json());
  EXPECT_EQ(back.to_json(), r.to_json());
  EXPECT_FALSE(r.to_json().contains("runtime_ms"));
  EXPECT_TRUE(r.to_json(true).contains("runtime_ms"));
  for (auto v : {Verdict::Pass, Verdict::Fail, Verdict::Skipped, Verdict::Error})
    EXPECT_EQ(envelope::parse_verdict(envelope::to_string(v)), v);

  std::vector<CheckReport> reports(4);
  reports[1].verdict = Verdict::Skipped;
  reports[2].verdict = Verdict::Fail;
  reports[3].verdict = Verdict::Error;
  auto s = envelope::summarize(reports);
  EXPECT_EQ(s.pass, 1u);
  EXPECT_EQ(s.fail, 1u);
  EXPECT_EQ(s.skipped, 1u);
  EXPECT_EQ(s.error, 1u);
  EXPECT_FALSE(s.ok());

  std::ostringstream out;
  envelope::write_report_lines(out, reports, nlohmann::json::object(), false);
  std::istringstream in(out.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    EXPECT_NO_THROW(nlohmann::json::parse(line));
    ++n;
  }
  EXPECT_EQ(n, reports.size() + 2);
}
