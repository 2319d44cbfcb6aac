#include <gtest/gtest.h>

#include "oracle.hpp"
#include "shtab/shtab.hpp"

using namespace shtab;

TEST(Enumerate, MatchesBruteForceOnSmallShapes) {
  for (auto& sh : oracle::shapes_up_to(5, 6, true, true)) {
    for (int n = 1; n <= 3; ++n) {
      TableauFamily fam = enumerate(sh, n);
      std::set<std::string> got;
      for (auto& t : fam) got.insert(oracle::row_major_key(t));
      ASSERT_EQ(got.size(), fam.size()) << "duplicates in " << sh.str();
      ASSERT_EQ(got, oracle::brute_force_family(sh, n)) << sh.str() << " n=" << n;
      ASSERT_EQ(count(sh, n), fam.size());
    }
  }
}

TEST(Enumerate, EveryMemberIsValid) {
  for (auto& sh : oracle::staircase_shapes(4)) {
    for (auto& t : enumerate(sh, 4)) ASSERT_TRUE(is_valid(t)) << render_compact(t);
  }
}

TEST(Enumerate, SortedByReadingWordAndIndexed) {
  SkewShape sh{StrictPartition({3, 1})};
  TableauFamily fam = enumerate(sh, 3);
  for (std::size_t k = 0; k + 1 < fam.size(); ++k) {
    EXPECT_LT(reading_word(fam[k]), reading_word(fam[k + 1]));
  }
  for (std::size_t k = 0; k < fam.size(); ++k) EXPECT_EQ(fam.index_of(fam[k]), k);
  EXPECT_FALSE(fam.index_of(parse_tableau("1 1 1\n. 2", 4)).has_value());
}

// Small counts worked out by hand. A single row in canonical form has no
// primes, so it is a multiset of letters.
TEST(Enumerate, HandCounts) {
  EXPECT_EQ(count(SkewShape{StrictPartition({1})}, 1), 1u);
  EXPECT_EQ(count(SkewShape{StrictPartition({1})}, 3), 3u);
  EXPECT_EQ(count(SkewShape{StrictPartition({2})}, 2), 3u);     // 11 12 22
  EXPECT_EQ(count(SkewShape{StrictPartition({2, 1})}, 2), 2u);  // 11/2 12'/2
  EXPECT_EQ(count(SkewShape{StrictPartition({2, 1})}, 1), 0u);
  EXPECT_EQ(count(SkewShape{StrictPartition({3, 1})}, 2), 4u);
}

TEST(Enumerate, EmptyShapeHasOneMember) {
  TableauFamily fam = enumerate(SkewShape{}, 2);
  EXPECT_EQ(fam.size(), 1u);
  EXPECT_THROW(enumerate(SkewShape{}, 0), TableauError);
}

TEST(Enumerate, FamilyOfFigureShape) {
  TableauFamily fam = enumerate(SkewShape{StrictPartition({3, 1}), StrictPartition({1})}, 4);
  EXPECT_EQ(fam.size(), oracle::brute_force_family(fam.shape(), 4).size());
  EXPECT_TRUE(fam.index_of(parse_tableau(". 1 3\n. 2", 4)).has_value());
}
