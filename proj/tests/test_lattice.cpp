#include <gtest/gtest.h>

#include <set>

#include "dsmt/lattice.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace dsmt;
using testing_support::frame_of;
using testing_support::P;

TEST(Frame, RejectsBadNames) {
  auto code = [](std::vector<std::string> names) {
    try {
      build_frame(std::move(names));
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error";
    return Errc::kInvalidScenario;
  };
  EXPECT_EQ(code({}), Errc::kEmptyFrame);
  EXPECT_EQ(code({"a", "a"}), Errc::kDuplicateName);
  EXPECT_EQ(code({"1a"}), Errc::kInvalidIdentifier);
  EXPECT_EQ(code({"a b"}), Errc::kInvalidIdentifier);
  EXPECT_EQ(code({""}), Errc::kInvalidIdentifier);
  EXPECT_EQ(code({"a", "b", "c", "d", "e", "f", "g"}), Errc::kFrameTooLarge);
}

TEST(Frame, NamesAreOneBased) {
  Frame f = build_frame({"red", "green"});
  EXPECT_EQ(f.name(1), "red");
  EXPECT_EQ(f.index_of("green"), 2u);
  EXPECT_EQ(f.index_of("blue"), 0u);
  EXPECT_THROW(f.name(3), Error);
  EXPECT_THROW(singleton(f, 0), Error);
}

TEST(Atoms, OrderedByCardinalityThenLexicographic) {
  std::vector<std::string> labels;
  for (const auto& a : atom_universe(frame_of(3))) labels.push_back(a.label());
  EXPECT_EQ(labels, (std::vector<std::string>{"<1>", "<2>", "<3>", "<12>", "<13>", "<23>", "<123>"}));
}

TEST(Enumeration, SizesMatchDedekindMinusOne) {
  // Up-sets of the non-empty subsets of an n-set: 2, 5, 19, 167.
  const std::size_t expected[] = {0, 2, 5, 19, 167};
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_upsets(n).size(), expected[n]) << n;
}

TEST(Enumeration, MatchesBruteForceUpSets) {
  for (std::size_t n = 1; n <= 4; ++n) {
    Frame f = frame_of(n);
    std::set<oracle::Element> ours, theirs;
    for (const auto& p : enumerate_hpset(f)) ours.insert(oracle::from_library(p));
    for (const auto& e : oracle::hyper_power_set(n)) theirs.insert(e);
    EXPECT_EQ(ours, theirs) << n;
  }
}

TEST(Enumeration, CanonicalOrderIsStrict) {
  auto all = enumerate_hpset(frame_of(3));
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1], all[i]);
  EXPECT_TRUE(all.front().empty());
  EXPECT_EQ(all.back(), total_ignorance(frame_of(3)));
}

TEST(Enumeration, LimitGuardsLargeFrames) {
  Frame f = frame_of(6);
  EXPECT_THROW(enumerate_hpset(f), Error);
  Frame g = frame_of(5);
  EXPECT_EQ(enumerate_hpset(g).size(), 7580u);
}

TEST(Proposition, FromAtomsRequiresUpClosure) {
  Frame f = frame_of(2);
  // atoms: <1> = bit 0, <2> = bit 1, <12> = bit 2
  EXPECT_NO_THROW(Proposition::from_atoms(f, 0b101));
  EXPECT_THROW(Proposition::from_atoms(f, 0b001), Error);
  EXPECT_THROW(Proposition::from_atoms(f, 0b1000), Error);
}

TEST(Proposition, MeetAndJoinFollowRegions) {
  Frame f = frame_of(3);
  auto t1 = singleton(f, 1), t2 = singleton(f, 2), t3 = singleton(f, 3);
  EXPECT_EQ(oracle::from_library(t1 & t2), oracle::meet(oracle::singleton(3, 1), oracle::singleton(3, 2)));
  EXPECT_EQ(oracle::from_library((t1 | t2) & t3),
            oracle::meet(oracle::join(oracle::singleton(3, 1), oracle::singleton(3, 2)),
                         oracle::singleton(3, 3)));
  EXPECT_TRUE(leq(t1 & t2, t1));
  EXPECT_TRUE(leq(t1, t1 | t3));
  EXPECT_FALSE(leq(t1, t2));
  EXPECT_THROW(leq(t1, singleton(frame_of(2), 1)), Error);
}

TEST(Proposition, GeneratorsAreMinimalAtoms) {
  Frame f = frame_of(3);
  auto labels = [](const Proposition& p) {
    std::vector<std::string> out;
    for (const auto& a : p.generators()) out.push_back(a.label());
    return out;
  };
  EXPECT_EQ(labels(P(f, "(t1|t2)&t3")), (std::vector<std::string>{"<13>", "<23>"}));
  EXPECT_EQ(labels(P(f, "t1|(t2&t3)")), (std::vector<std::string>{"<1>", "<23>"}));
  EXPECT_TRUE(empty_proposition(f).generators().empty());
}

TEST(Proposition, FromGenerators) {
  Frame f = frame_of(3);
  EXPECT_EQ(from_generators(f, {0b011, 0b100}), P(f, "(t1&t2)|t3"));
  EXPECT_THROW(from_generators(f, {0b1000}), Error);
}

TEST(UOf, UnionOfSingletonsInMinimalParts) {
  Frame f = frame_of(3);
  EXPECT_EQ(u_of(P(f, "t1&t2")), P(f, "t1|t2"));
  EXPECT_EQ(u_of(P(f, "(t1&t2)|t3")), P(f, "t1|t2|t3"));
  EXPECT_EQ(u_of(P(f, "t1&t2&t3")), P(f, "t1|t2|t3"));
  EXPECT_EQ(u_of(P(f, "t2")), P(f, "t2"));
  EXPECT_TRUE(u_of(empty_proposition(f)).empty());
}

TEST(UOf, AgreesWithOracleOnEveryElement) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_hpset(frame_of(n)))
      EXPECT_EQ(oracle::from_library(u_of(p)), oracle::u(n, oracle::from_library(p))) << to_expression(p);
}

TEST(ToExpression, CanonicalForms) {
  Frame f = frame_of(3);
  EXPECT_EQ(to_expression(empty_proposition(f)), "EMPTY");
  EXPECT_EQ(to_expression(total_ignorance(f)), "t1|t2|t3");
  EXPECT_EQ(to_expression(P(f, "t3&t1")), "t1&t3");
  EXPECT_EQ(to_expression(P(f, "(t1|t2)&t3")), "(t1&t3)|(t2&t3)");
  EXPECT_EQ(to_expression(P(f, "t1|(t2&t3)")), "(t2&t3)|t1");
  EXPECT_EQ(to_expression(P(f, "t1&(t1|t2)")), "t1");
}
