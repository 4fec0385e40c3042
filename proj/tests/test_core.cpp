#include <gtest/gtest.h>

#include "fuzzyaf/format.hpp"
#include "fuzzyaf/framework.hpp"
#include "support/random_faf.hpp"

namespace {

using namespace fuzzyaf;
using fuzzyaf::testing::load_sample;

Degree deg(std::string_view s) { return Degree::from_decimal(s); }

TEST(Degree, ParsesDecimalsExactly) {
  EXPECT_EQ(deg("0.8"), Degree::ratio(4, 5));
  EXPECT_EQ(deg("0.80"), deg("0.8"));
  EXPECT_EQ(deg("1"), Degree::one());
  EXPECT_EQ(deg("1.0000"), Degree::one());
  EXPECT_EQ(deg("0"), Degree::zero());
  EXPECT_EQ(deg(".5"), Degree::half());
  EXPECT_EQ(deg("0.0001"), Degree::ratio(1, 10000));
}

TEST(Degree, RejectsBadDecimals) {
  for (const char* bad : {"", "1.1", "2", "-0.1", "0.12345", "0.", "abc", "0.5x", "1e-1"}) {
    EXPECT_FALSE(Degree::parse_decimal(bad).has_value()) << bad;
  }
  EXPECT_THROW(deg("1.5"), std::invalid_argument);
  EXPECT_THROW(Degree::ratio(3, 2), std::invalid_argument);
  EXPECT_THROW(Degree::ratio(1, 0), std::invalid_argument);
}

TEST(Degree, BoundaryArithmeticIsExact) {
  // 0.4 + 0.6 = 1 must not drift
  EXPECT_EQ(complement(deg("0.4")), deg("0.6"));
  EXPECT_EQ(complement(deg("0.1")), deg("0.9"));
  EXPECT_EQ(complement(deg("0.3333")), deg("0.6667"));
}

TEST(Degree, SerializesMinimally) {
  EXPECT_EQ(deg("0.20").to_string(), "0.2");
  EXPECT_EQ(deg("0.0625").to_string(), "0.0625");
  EXPECT_EQ(Degree::one().to_string(), "1");
  EXPECT_EQ(Degree::zero().to_string(), "0");
  EXPECT_EQ(Degree::ratio(1, 3).to_string(), "1/3");
}

TEST(Degree, TnormExamples) {
  EXPECT_EQ(tnorm(deg("0.8"), deg("0.8")), deg("0.8"));
  EXPECT_EQ(tnorm(deg("0.3"), Degree::one()), deg("0.3"));
  EXPECT_EQ(tnorm(deg("0.3"), deg("0.7")), deg("0.3"));
}

TEST(Degree, ComplementExamples) {
  EXPECT_EQ(complement(deg("0.8")), deg("0.2"));
  EXPECT_EQ(complement(deg("0.5")), deg("0.5"));
  EXPECT_EQ(complement(Degree::zero()), Degree::one());
}

TEST(Parse, MixedOrderStatements) {
  const Framework faf = parse_faf("arg(A,0.8). att(A,B,0.8). arg(B,0.7).");
  EXPECT_EQ(faf.degree(faf.index("A")), deg("0.8"));
  EXPECT_EQ(faf.degree(faf.index("B")), deg("0.7"));
  EXPECT_EQ(faf.rho(faf.index("A"), faf.index("B")), deg("0.8"));
  EXPECT_EQ(faf.rho(faf.index("B"), faf.index("A")), Degree::zero());
}

TEST(Parse, MinimalFramework) {
  const Framework faf = parse_faf("arg(A,1).");
  EXPECT_EQ(faf.argument_count(), 1u);
  EXPECT_TRUE(faf.attacks().empty());
}

TEST(Parse, UndeclaredEndpoint) {
  EXPECT_THROW(parse_faf("att(A,B,0.5)."), ParseError);
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_faf("arg(A,0.8).\narg(B,0.7)\narg(C,0.5).");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GE(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
  try {
    parse_faf("arg(A,0.8).\n  arg(B,1.2).");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Parse, RejectsInvalidContent) {
  EXPECT_THROW(parse_faf("arg(A,0.8). arg(A,0.7)."), ParseError);  // duplicate id
  EXPECT_THROW(parse_faf("arg(A,0)."), ParseError);                // zero degree
  EXPECT_THROW(parse_faf("arg(A,0.5). att(A,A,0)."), ParseError);  // zero attack
  EXPECT_THROW(parse_faf("arg(A,0.5). att(A,A,0.5). att(A,A,0.6)."), ParseError);
  EXPECT_THROW(parse_faf("arg(A-1,0.5)."), ParseError);
  EXPECT_THROW(parse_faf("{\"arguments\": [{\"id\": \"A\", \"degree\": 0.5}]}"), ParseError);
  EXPECT_THROW(parse_faf("{\"arguments\": ["), ParseError);
}

TEST(Parse, CommentsAndWhitespace) {
  const Framework faf = parse_faf("# header\n  arg( A , 0.5 ) . # trailing\n\natt(A,A,1).\n");
  EXPECT_EQ(faf.rho(faf.index("A"), faf.index("A")), Degree::one());
}

TEST(Parse, StructuredMatchesFapx) {
  EXPECT_EQ(load_sample("example2.json"), load_sample("example2.fapx"));
}

TEST(Parse, FuzzySetInputs) {
  const Framework faf = load_sample("example1.fapx");
  const FuzzySet want = faf.make_set({{"A", "0.8"}, {"B", "0.2"}});
  EXPECT_EQ(parse_fuzzy_set("arg(A,0.8). arg(B,0.2).", faf), want);
  EXPECT_EQ(parse_fuzzy_set(R"({"A": "0.8", "B": "0.2", "C": "0"})", faf), want);
  EXPECT_EQ(parse_fuzzy_set(R"({"arguments": [{"id": "A", "degree": "0.8"}, {"id": "B", "degree": "0.2"}]})", faf),
            want);
  EXPECT_EQ(parse_fuzzy_set(R"([{"id": "B", "degree": "0.2"}, {"id": "A", "degree": "0.8"}])", faf), want);
  EXPECT_THROW(parse_fuzzy_set(R"({"Z": "0.1"})", faf), UnknownArgument);
  EXPECT_THROW(parse_fuzzy_set("arg(A,0.8). arg(A,0.2).", faf), ParseError);
  EXPECT_THROW(parse_fuzzy_set("att(A,B,0.8).", faf), ParseError);
}

TEST(FuzzySet, SubsetExamples) {
  const Framework faf = load_sample("example1.fapx");
  EXPECT_TRUE(fuzzy_subset(faf.empty_set(), faf.make_set({{"B", "0.3"}})));
  EXPECT_TRUE(fuzzy_subset(faf.make_set({{"A", "0.2"}}), faf.make_set({{"A", "0.8"}, {"B", "0.1"}})));
  EXPECT_FALSE(fuzzy_subset(faf.make_set({{"A", "0.9"}}), faf.make_set({{"A", "0.8"}})));
}

TEST(FuzzySet, ZeroEntriesDoNotMatter) {
  const Framework faf = load_sample("example1.fapx");
  FuzzySet a = faf.make_set({{"A", "0.8"}});
  FuzzySet b = faf.make_set({{"A", "0.8"}, {"B", "0"}});
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a < b);
  EXPECT_FALSE(b < a);
  EXPECT_TRUE(faf.empty_set() < a);
}

TEST(Restrict, ExampleOneLastComponent) {
  const Framework faf = load_sample("example1.fapx");
  const Framework r = restrict(faf, faf.make_set({{"D", "0.4"}, {"E", "0.6"}, {"F", "0.7"}}));
  ASSERT_EQ(r.attacks().size(), 3u);
  EXPECT_EQ(r.rho(r.index("D"), r.index("E")), deg("0.7"));
  EXPECT_EQ(r.rho(r.index("E"), r.index("F")), deg("0.8"));
  EXPECT_EQ(r.rho(r.index("F"), r.index("D")), deg("0.9"));
  EXPECT_EQ(r.degree(r.index("D")), deg("0.4"));
  EXPECT_EQ(r.argument_count(), 3u);
}

TEST(Restrict, FullAndEmpty) {
  const Framework faf = load_sample("example1.fapx");
  EXPECT_EQ(restrict(faf, faf.args()), faf);
  const Framework none = restrict(faf, faf.empty_set());
  EXPECT_EQ(none.argument_count(), 0u);
  EXPECT_TRUE(none.attacks().empty());
  EXPECT_THROW(restrict(faf, faf.make_set({{"A", "0.9"}})), std::invalid_argument);
}

TEST(Lattice, BreakpointsOfExampleOne) {
  const DegreeLattice lat = breakpoint_lattice(load_sample("example1.fapx"));
  std::vector<Degree> want;
  for (int i = 0; i <= 10; ++i) want.push_back(Degree::ratio(i, 10));
  EXPECT_EQ(std::vector<Degree>(lat.values().begin(), lat.values().end()), want);
}

TEST(Lattice, CrispAndHalf) {
  const DegreeLattice crisp = breakpoint_lattice(parse_faf("arg(A,1). arg(B,1). att(A,B,1)."));
  EXPECT_EQ(std::vector<Degree>(crisp.values().begin(), crisp.values().end()),
            (std::vector<Degree>{Degree::zero(), Degree::half(), Degree::one()}));
  const DegreeLattice half = breakpoint_lattice(parse_faf("arg(A,0.5). att(A,A,0.5)."));
  EXPECT_EQ(half.values().size(), 3u);
}

TEST(Lattice, GridAddsSteps) {
  const Framework faf = parse_faf("arg(A,0.8).");
  const DegreeLattice g = grid_lattice(faf, 3);
  EXPECT_TRUE(g.contains(Degree::ratio(1, 3)));
  EXPECT_TRUE(g.contains(Degree::ratio(2, 3)));
  EXPECT_TRUE(g.contains(deg("0.2")));
  EXPECT_THROW(grid_lattice(faf, 1), std::invalid_argument);
}

TEST(Lattice, RejectsNonClosedValues) {
  EXPECT_THROW(DegreeLattice(std::vector<Degree>{deg("0.3")}), std::invalid_argument);
  const DegreeLattice lat(std::vector<Degree>{deg("0.3"), deg("0.7")});
  EXPECT_EQ(lat.up_to(deg("0.5")).size(), 2u);
  EXPECT_EQ(lat.between(deg("0.3"), deg("0.7")).size(), 2u);
  EXPECT_EQ(lat.between(deg("0.4"), deg("0.5")).size(), 0u);
}

TEST(Builder, RejectsBadInput) {
  FrameworkBuilder b;
  b.argument("A", "0.5");
  EXPECT_THROW(b.argument("A", "0.6"), std::invalid_argument);
  EXPECT_THROW(b.argument("B", "0"), std::invalid_argument);
  b.attack("A", "Q", "0.5");
  EXPECT_THROW(b.build(), std::invalid_argument);
}

TEST(Framework, UnknownName) {
  const Framework faf = load_sample("example1.fapx");
  EXPECT_THROW(faf.index("Z"), std::out_of_range);
}

}  // namespace
