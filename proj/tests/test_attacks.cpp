#include <gtest/gtest.h>

#include "fuzzyaf/attacks.hpp"
#include "fuzzyaf/format.hpp"
#include "support/random_faf.hpp"

namespace {

using namespace fuzzyaf;
using fuzzyaf::testing::load_sample;

Degree deg(std::string_view s) { return Degree::from_decimal(s); }

class ExampleOne : public ::testing::Test {
 protected:
  Framework faf = load_sample("example1.fapx");
  ArgIndex id(const char* n) const { return faf.index(n); }
};

class ExampleTwo : public ::testing::Test {
 protected:
  Framework faf = load_sample("example2.fapx");
  ArgIndex id(const char* n) const { return faf.index(n); }
  FuzzySet e_second() const {
    return faf.make_set({{"A", "0.8"}, {"B", "0.2"}, {"C", "0.5"}, {"D", "0.5"}, {"E", "0.5"},
                         {"F", "0.5"}, {"G", "0.5"}, {"H", "0.5"}, {"I", "0.5"}});
  }
};

TEST(AttackStatus, Examples) {
  EXPECT_EQ(attack_status(deg("0.4"), deg("0.7"), deg("0.6")), AttackStatus::tolerable);
  EXPECT_EQ(attack_status(deg("0.6"), deg("0.8"), deg("0.7")), AttackStatus::sufficient);
  EXPECT_EQ(attack_status(Degree::one(), Degree::one(), Degree::zero()), AttackStatus::tolerable);
  EXPECT_EQ(attack_status(deg("0.5"), deg("0.9"), deg("0.5")), AttackStatus::tolerable);
  EXPECT_EQ(attack_status(deg("0.5"), deg("0.9"), deg("0.5001")), AttackStatus::sufficient);
}

TEST(Weaken, Examples) {
  EXPECT_EQ(weaken(deg("0.8"), deg("0.8"), deg("0.7")), deg("0.2"));
  EXPECT_EQ(weaken(deg("0.6"), deg("0.8"), deg("0.8")), deg("0.4"));
  EXPECT_EQ(weaken(Degree::one(), Degree::one(), Degree::zero()), Degree::zero());
  EXPECT_EQ(weaken(deg("0.3"), deg("0.9"), deg("0.5")), deg("0.5"));
}

TEST_F(ExampleOne, BestWeakening) {
  EXPECT_EQ(best_weakening(faf, faf.make_set({{"A", "0.8"}}), id("B")), deg("0.2"));
  EXPECT_EQ(best_weakening(faf, faf.empty_set(), id("B")), deg("0.7"));
  EXPECT_EQ(best_weakening(faf, faf.make_set({{"F", "0.4"}}), id("D")), deg("0.6"));
  // members that do not attack B leave it alone
  EXPECT_EQ(best_weakening(faf, faf.make_set({{"E", "0.6"}}), id("B")), deg("0.7"));
  EXPECT_THROW(best_weakening(faf, faf.empty_set(), 99), std::out_of_range);
}

TEST_F(ExampleOne, Defends) {
  EXPECT_TRUE(defends(faf, faf.make_set({{"A", "0.8"}}), id("C"), deg("0.6")));
  EXPECT_TRUE(defends(faf, faf.empty_set(), id("D"), Degree::zero()));
  EXPECT_FALSE(defends(faf, faf.empty_set(), id("B"), deg("0.7")));
  EXPECT_THROW(defends(faf, faf.empty_set(), id("A"), deg("0.9")), std::invalid_argument);
}

TEST_F(ExampleTwo, Defends) {
  // With B as C's only attacker, A at 0.8 weakens B to 0.2 and C survives at 0.5.
  const Framework abc = restrict(faf, faf.make_set({{"A", "0.8"}, {"B", "0.8"}, {"C", "0.9"}}));
  EXPECT_TRUE(defends(abc, abc.make_set({{"A", "0.8"}}), abc.index("C"), deg("0.5")));
  // In the whole framework E and F also attack C and nothing in {A} weakens them.
  EXPECT_FALSE(defends(faf, faf.make_set({{"A", "0.8"}}), id("C"), deg("0.5")));
  EXPECT_TRUE(defends(faf, faf.make_set({{"A", "0.8"}, {"D", "0.5"}, {"E", "0.5"}}), id("C"), deg("0.5")));
}

TEST_F(ExampleOne, CharacteristicOfEmptySet) {
  EXPECT_EQ(characteristic(faf, faf.args(), faf.empty_set()),
            faf.make_set({{"A", "0.8"}, {"B", "0.2"}, {"C", "0.3"}, {"D", "0.3"}, {"E", "0.3"}, {"F", "0.4"}}));
}

TEST_F(ExampleOne, CharacteristicFixedPoint) {
  const FuzzySet e =
      faf.make_set({{"A", "0.8"}, {"B", "0.2"}, {"C", "0.6"}, {"D", "0.4"}, {"E", "0.6"}, {"F", "0.4"}});
  EXPECT_EQ(characteristic(faf, faf.args(), e), e);
}

TEST_F(ExampleOne, CharacteristicCappedByC) {
  const FuzzySet some = faf.make_set({{"A", "0.8"}, {"C", "0.6"}});
  EXPECT_EQ(characteristic(faf, faf.empty_set(), some), faf.empty_set());
  EXPECT_EQ(characteristic(faf, faf.make_set({{"A", "0.5"}}), faf.empty_set()), faf.make_set({{"A", "0.5"}}));
  EXPECT_THROW(characteristic(faf, faf.make_set({{"A", "0.9"}}), faf.empty_set()), std::invalid_argument);
}

TEST_F(ExampleOne, Outparents) {
  EXPECT_EQ(outparents(faf, faf.make_set({{"B", "0.7"}, {"C", "0.6"}})), faf.make_set({{"A", "0.8"}}));
  EXPECT_EQ(outparents(faf, faf.make_set({{"A", "0.8"}})), faf.empty_set());
  EXPECT_EQ(outparents(faf, faf.args()), faf.empty_set());
}

TEST_F(ExampleTwo, SufficientlyAttacks) {
  EXPECT_TRUE(set_sufficiently_attacks(faf, e_second(), id("C"), deg("0.6")));
  EXPECT_FALSE(set_sufficiently_attacks(faf, e_second(), id("C"), deg("0.5")));  // strict
  EXPECT_FALSE(set_sufficiently_attacks(faf, faf.empty_set(), id("C"), deg("0.9")));
  EXPECT_FALSE(set_sufficiently_attacks(faf, faf.args(), id("C"), Degree::zero()));
}

}  // namespace
