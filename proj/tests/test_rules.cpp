#include <gtest/gtest.h>

#include "dsmt/rules.hpp"
#include "oracle.hpp"
#include "reference_tables.hpp"
#include "support.hpp"

using namespace dsmt;
using testing_support::frame_of;
using testing_support::P;

namespace {

MassAssignment from_column(const Frame& f, const reference::Column& c) {
  MassAssignment m(f);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0.0) m.set(P(f, reference::kRows[i]), c[i]);
  return m;
}

MassAssignment bba(const Frame& f, std::initializer_list<std::pair<const char*, double>> entries,
                   bool smets = false) {
  MassAssignment m(f, smets);
  for (const auto& [e, v] : entries) m.set(P(f, e), v);
  return m;
}

Errc error_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::kInvalidScenario;
}

}  // namespace

TEST(Classic, TwoSingletonsMeet) {
  Frame f = frame_of(2);
  auto r = dsm_classic({bba(f, {{"t1", 0.6}, {"t1|t2", 0.4}}), bba(f, {{"t2", 0.7}, {"t1|t2", 0.3}})});
  EXPECT_DOUBLE_EQ(r.mass(P(f, "t1&t2")), 0.42);
  EXPECT_DOUBLE_EQ(r.mass(P(f, "t1")), 0.18);
  EXPECT_DOUBLE_EQ(r.mass(P(f, "t2")), 0.28);
  EXPECT_DOUBLE_EQ(r.mass(P(f, "t1|t2")), 0.12);
}

TEST(Classic, ReferenceSparseSources) {
  Frame f = frame_of(3);
  auto r = dsm_classic({from_column(f, reference::kSparseM1), from_column(f, reference::kSparseM2)});
  for (std::size_t i = 0; i < 19; ++i)
    EXPECT_NEAR(r.mass(P(f, reference::kRows[i])), reference::kSparseClassic[i], 1e-12)
        << reference::kRows[i];
}

TEST(Classic, MatchesOracleOnThreeSources) {
  Frame f = frame_of(3);
  std::vector<MassAssignment> ms = {bba(f, {{"t1", 0.5}, {"t2|t3", 0.5}}),
                                    bba(f, {{"t1&t2", 0.2}, {"t3", 0.8}}),
                                    bba(f, {{"(t1|t2)&t3", 0.3}, {"t1|t2|t3", 0.7}})};
  auto ours = oracle::from_library(dsm_classic(ms));
  std::vector<oracle::Masses> os;
  for (const auto& m : ms) os.push_back(oracle::from_library(m));
  auto theirs = oracle::classic(3, os);
  for (const auto& [e, v] : theirs) EXPECT_NEAR(oracle::at(ours, e), v, 1e-15);
}

TEST(Classic, InputChecks) {
  Frame f = frame_of(2);
  auto a = bba(f, {{"t1", 1.0}});
  EXPECT_EQ(error_of([&] { dsm_classic({a}); }), Errc::kFewerThanTwoSources);
  EXPECT_EQ(error_of([&] { dsm_classic({a, bba(frame_of(3), {{"t1", 1.0}})}); }),
            Errc::kFrameMismatch);
  EXPECT_EQ(error_of([&] { dsm_classic({a, bba(f, {{"t1", 0.5}})}); }), Errc::kMassSumNotOne);
}

TEST(Hybrid, ReferenceBreakdownM1) {
  Frame f = frame_of(3);
  HybridModel m = build_model(f, {P(f, "t1&t2&t3")});
  auto b = dsm_hybrid({from_column(f, reference::kSparseM1), from_column(f, reference::kSparseM2)}, m);
  auto get = [](const std::map<Proposition, double>& s, const Proposition& p) {
    auto it = s.find(p);
    return it == s.end() ? 0.0 : it->second;
  };
  for (const auto& row : reference::kBreakdownM1) {
    Proposition p = P(f, row.expr);
    EXPECT_EQ(phi(m, p), row.phi) << row.expr;
    EXPECT_NEAR(get(b.s1, p), row.s1, 1e-12) << row.expr;
    EXPECT_NEAR(get(b.s2, p), row.s2, 1e-12) << row.expr;
    EXPECT_NEAR(get(b.s3, p), row.s3, 1e-12) << row.expr;
    EXPECT_NEAR(b.result.mass(p), row.m, 1e-12) << row.expr;
  }
}

TEST(Hybrid, ShaferModelOnTotalConflict) {
  Frame f = frame_of(2);
  HybridModel shafer = build_model(f, {P(f, "t1&t2")});
  auto b = dsm_hybrid({bba(f, {{"t1", 1.0}}), bba(f, {{"t2", 1.0}})}, shafer);
  EXPECT_EQ(b.result.mass(P(f, "t1|t2")), 1.0);
  EXPECT_EQ(b.result.focal().size(), 1u);
}

TEST(Hybrid, EmptyUnionGoesToTotalIgnorance) {
  Frame f = frame_of(3);
  HybridModel m = build_model(f, {P(f, "t1"), P(f, "t2")});
  auto b = dsm_hybrid({bba(f, {{"t1", 1.0}}), bba(f, {{"t2", 1.0}})}, m);
  EXPECT_DOUBLE_EQ(b.s2.at(total_ignorance(f)), 1.0);
  auto c = compress(m, b.result);
  EXPECT_DOUBLE_EQ(c.mass(P(f, "t3")), 1.0);
}

TEST(Hybrid, SmetsMassOnEmptyIsTransferred) {
  Frame f = frame_of(2);
  HybridModel m = free_model(f);
  auto a = bba(f, {{"EMPTY", 0.2}, {"t1", 0.8}}, true);
  auto b = bba(f, {{"t2", 1.0}});
  auto r = dsm_hybrid({a, b}, m).result;
  EXPECT_DOUBLE_EQ(r.mass(empty_proposition(f)), 0.0);
  EXPECT_DOUBLE_EQ(r.mass(P(f, "t1&t2")), 0.8);
  EXPECT_DOUBLE_EQ(r.mass(P(f, "t2")), 0.2);
  EXPECT_NEAR(r.total(), 1.0, 1e-15);
}

TEST(Hybrid, EvaluationStrategiesAgree) {
  Frame f = frame_of(3);
  HybridModel m = build_model(f, {P(f, "(t1|t3)&t2")});
  std::vector<MassAssignment> ms = {from_column(f, reference::kGeneralM1),
                                    from_column(f, reference::kGeneralM2)};
  auto focal = dsm_hybrid(ms, m).result;
  HybridOptions two_step{HybridOptions::Evaluation::kTwoStep};
  HybridOptions dense{HybridOptions::Evaluation::kDense};
  auto a = dsm_hybrid(ms, m, two_step).result;
  auto b = dsm_hybrid(ms, m, dense).result;
  for (const auto& p : enumerate_hpset(f)) {
    EXPECT_NEAR(a.mass(p), focal.mass(p), 1e-15) << to_expression(p);
    EXPECT_NEAR(b.mass(p), focal.mass(p), 1e-15) << to_expression(p);
  }
}

TEST(Hybrid, MatchesOracleWithThreeSources) {
  Frame f = frame_of(3);
  HybridModel m = build_model(f, {P(f, "t1&t2"), P(f, "t3")});
  std::vector<MassAssignment> ms = {bba(f, {{"t1", 0.5}, {"t2&t3", 0.5}}),
                                    bba(f, {{"t2", 0.4}, {"t3", 0.6}}),
                                    bba(f, {{"t1&t3", 0.3}, {"t1|t2", 0.7}})};
  auto ours = dsm_hybrid(ms, m);
  std::vector<oracle::Masses> os;
  for (const auto& x : ms) os.push_back(oracle::from_library(x));
  auto h = oracle::hybrid(3, os, oracle::from_library(P(f, "(t1&t2)|t3")));
  for (const auto& p : enumerate_hpset(f)) {
    auto e = oracle::from_library(p);
    EXPECT_NEAR(ours.result.mass(p), oracle::at(h.result, e), 1e-15) << to_expression(p);
  }
}

TEST(Dempster, NormalizesConflict) {
  Frame f = frame_of(2);
  auto r = dempster({bba(f, {{"t1", 0.9}, {"t2", 0.1}}), bba(f, {{"t1", 0.1}, {"t2", 0.9}})});
  EXPECT_NEAR(r.masses.mass(P(f, "t1")), 0.5, 1e-15);
  EXPECT_NEAR(r.conflict, 0.82, 1e-15);
}

TEST(Dempster, FullContradiction) {
  Frame f = frame_of(2);
  EXPECT_EQ(error_of([&] { dempster({bba(f, {{"t1", 1.0}}), bba(f, {{"t2", 1.0}})}); }),
            Errc::kFullContradiction);
}

TEST(Dempster, RejectsHyperPowerSetSupport) {
  Frame f = frame_of(2);
  EXPECT_EQ(error_of([&] { dempster({bba(f, {{"t1&t2", 1.0}}), bba(f, {{"t2", 1.0}})}); }),
            Errc::kNotPowerSetSupport);
}

TEST(Dempster, ThreeSourcesMatchesSequentialOracle) {
  Frame f = frame_of(3);
  auto a = bba(f, {{"t1", 0.5}, {"t2|t3", 0.5}});
  auto b = bba(f, {{"t2", 0.3}, {"t1|t2", 0.7}});
  auto c = bba(f, {{"t1|t3", 0.4}, {"t1|t2|t3", 0.6}});
  auto r = dempster({a, b, c});
  auto o = oracle::dempster(oracle::dempster(oracle::to_subsets(3, oracle::from_library(a)),
                                             oracle::to_subsets(3, oracle::from_library(b))),
                            oracle::to_subsets(3, oracle::from_library(c)));
  for (const auto& [s, v] : o) EXPECT_NEAR(r.masses.mass(from_shafer_mask(f, s)), v, 1e-15);
}

TEST(Lefevre, YagerSmetsDuboisPrade) {
  Frame f = frame_of(3);
  auto a = bba(f, {{"t1", 0.5}, {"t2", 0.2}, {"t1|t2|t3", 0.3}});
  auto b = bba(f, {{"t2", 0.6}, {"t3", 0.1}, {"t1|t3", 0.3}});
  auto y = yager(a, b);
  EXPECT_NEAR(y.mass(total_ignorance(f)), 0.43, 1e-15);
  EXPECT_NEAR(y.mass(P(f, "t1")), 0.15, 1e-15);
  auto s = smets(a, b);
  EXPECT_TRUE(s.smets_mode());
  EXPECT_NEAR(s.mass(empty_proposition(f)), 0.43, 1e-15);
  auto d = dubois_prade(a, b);
  EXPECT_NEAR(d.mass(P(f, "t1|t2")), 0.30, 1e-15);
  EXPECT_NEAR(d.mass(P(f, "t1|t3")), 0.14, 1e-15);
  EXPECT_NEAR(d.mass(P(f, "t2|t3")), 0.02, 1e-15);
  EXPECT_NEAR(d.total(), 1.0, 1e-15);
}

TEST(Lefevre, WeightsMustBeNormalized) {
  Frame f = frame_of(2);
  auto a = bba(f, {{"t1", 1.0}});
  WeightMap w = {{P(f, "t1"), 0.5}};
  EXPECT_EQ(error_of([&] { lefevre_combine(a, a, w); }), Errc::kWeightsNotNormalized);
  w[P(f, "t2")] = 0.6;
  EXPECT_EQ(error_of([&] { lefevre_combine(a, a, w); }), Errc::kWeightsNotNormalized);
}

TEST(Lefevre, DempsterWeightsFromConjunctive) {
  Frame f = frame_of(2);
  auto a = bba(f, {{"t1", 0.9}, {"t2", 0.1}});
  auto b = bba(f, {{"t1", 0.1}, {"t2", 0.9}});
  auto r = lefevre_combine(a, b, WeightFunction(dempster_weights));
  EXPECT_NEAR(r.mass(P(f, "t1")), 0.5, 1e-15);
  EXPECT_EQ(r.mass(empty_proposition(f)), 0.0);
}

TEST(Mixture, ConvexCombinationOfModels) {
  Frame f = frame_of(2);
  std::vector<MassAssignment> ms = {bba(f, {{"t1", 0.6}, {"t1|t2", 0.4}}),
                                    bba(f, {{"t2", 0.7}, {"t1|t2", 0.3}})};
  MixtureSpec spec{{{free_model(f), 0.3}, {build_model(f, {P(f, "t1&t2")}), 0.7}}};
  auto r = bayesian_mixture(ms, spec);
  EXPECT_NEAR(r.mass(P(f, "t1&t2")), 0.126, 1e-15);
  EXPECT_NEAR(r.mass(P(f, "t1|t2")), 0.414, 1e-15);
  EXPECT_NEAR(r.mass(P(f, "t1")), 0.18, 1e-15);
  EXPECT_NEAR(r.total(), 1.0, 1e-15);

  MixtureSpec bad{{{free_model(f), 0.3}}};
  EXPECT_EQ(error_of([&] { bayesian_mixture(ms, bad); }), Errc::kProbabilitiesNotNormalized);
}
