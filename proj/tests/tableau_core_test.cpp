#include <gtest/gtest.h>

#include "oracle.hpp"
#include "shtab/shtab.hpp"

using namespace shtab;

TEST(Entry, PrimedOrder) {
  EXPECT_LT(Entry::primed(1), Entry::plain(1));
  EXPECT_LT(Entry::plain(1), Entry::primed(2));
  EXPECT_LT(Entry::primed(2), Entry::plain(2));
  EXPECT_EQ(Entry::parse("3'"), Entry::primed(3));
  EXPECT_EQ(Entry::parse("12").value(), 12);
  EXPECT_EQ(Entry::primed(4).str(), "4'");
  EXPECT_THROW(Entry::parse("0"), std::invalid_argument);
  EXPECT_THROW(Entry::parse("x'"), std::invalid_argument);
  EXPECT_THROW(Entry::parse("'"), std::invalid_argument);
}

TEST(Shape, StrictPartitionRules) {
  EXPECT_THROW(StrictPartition({2, 2}), TableauError);
  EXPECT_THROW(StrictPartition({1, 3}), TableauError);
  EXPECT_THROW(StrictPartition({3, -1}), TableauError);
  EXPECT_EQ(StrictPartition({3, 0}), StrictPartition({3}));  // trailing zeros dropped
  StrictPartition p({4, 2, 1});
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(p.str(), "(4,2,1)");
  EXPECT_TRUE(p.has_cell({2, 3}));
  EXPECT_FALSE(p.has_cell({2, 4}));
  EXPECT_FALSE(p.has_cell({2, 1}));
  EXPECT_EQ(StrictPartition::staircase(3), StrictPartition({3, 2, 1}));
}

TEST(Shape, SkewCellsAndReadingOrder) {
  SkewShape sh{StrictPartition({3, 1}), StrictPartition({1})};
  EXPECT_EQ(sh.size(), 3);
  EXPECT_EQ(sh.str(), "(3,1)/(1)");
  std::vector<Cell> reading = sh.reading_cells();
  ASSERT_EQ(reading.size(), 3u);
  EXPECT_EQ(reading[0], (Cell{2, 2}));
  EXPECT_EQ(reading[1], (Cell{1, 2}));
  EXPECT_EQ(reading[2], (Cell{1, 3}));
  EXPECT_THROW(SkewShape(StrictPartition({2}), StrictPartition({3})), TableauError);
}

TEST(Shape, ComplementInStaircase) {
  EXPECT_EQ(StrictPartition({3, 1}).complement(4), StrictPartition({4, 2}));
  EXPECT_EQ(StrictPartition().complement(3), StrictPartition({3, 2, 1}));
  EXPECT_EQ(StrictPartition({3, 2, 1}).complement(3), StrictPartition());
}

TEST(TextIo, ParseRenderRoundTrip) {
  const std::string text = "1 1 2' 2\n. 2 3'\n. . 3";
  Tableau t = parse_tableau(text);
  EXPECT_EQ(t.shape().str(), "(4,2,1)");
  EXPECT_EQ(t.max_letter(), 3);
  EXPECT_EQ(render(t), text);
  EXPECT_EQ(render_compact(t), "1 1 2' 2 / . 2 3' / . . 3");
  EXPECT_EQ(parse_tableau(render_compact(t)), t);
}

TEST(TextIo, SkewInnerDots) {
  Tableau t = parse_tableau(". 1' 2\n. 1");
  EXPECT_EQ(t.shape().str(), "(3,1)/(1)");
  EXPECT_EQ(t.at({2, 2}), Entry::plain(1));
}

TEST(TextIo, Rejections) {
  EXPECT_THROW(parse_tableau("1 2\n2"), TableauError);        // missing shift dot
  EXPECT_THROW(parse_tableau("1 . 2"), TableauError);         // dot after a letter
  EXPECT_THROW(parse_tableau("1 1'"), TableauError);          // row decreases
  EXPECT_THROW(parse_tableau("1' 2"), TableauError);          // not canonical
  EXPECT_THROW(parse_tableau("1 2\n. 2"), TableauError);      // 2 over 2
  EXPECT_THROW(parse_tableau("1 2' 2'"), TableauError);       // 2' twice in a row
  EXPECT_THROW(parse_tableau("1 3", 2), TableauError);        // beyond n
  EXPECT_THROW(parse_tableau("1 x"), TableauError);
  EXPECT_NO_THROW(parse_tableau("1 2'\n. 2"));
}

TEST(TextIo, JsonRoundTrip) {
  Tableau t = parse_tableau(". 1' 2\n. 1", 4);
  auto j = to_json(t);
  EXPECT_EQ(j["outer"], nlohmann::ordered_json({3, 1}));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(tableau_from_json(j), t);
}

TEST(Tableau, ReadingWordAndWeightOfWorkedExample) {
  Tableau t = parse_tableau("1 1 2' 2\n. 2 3'\n. . 3");
  EXPECT_EQ(word_string(reading_word(t)), "323'112'2");
  EXPECT_EQ(weight(t), Weight({2, 3, 2}));
}

// The skew example (6,3,1)/(3,1) is stated with row 2 reading "2 2'", which
// breaks the row rule; the word and weight are still defined on the filling.
TEST(Tableau, ReadingWordOfRawSkewFilling) {
  Tableau f = parse_filling(". . . 1 1 2'\n. . 2 2'\n. . 3");
  EXPECT_EQ(f.shape().str(), "(6,3,1)/(3,1)");
  EXPECT_EQ(word_string(reading_word(f)), "322'112'");
  EXPECT_EQ(weight(f), Weight({2, 3, 1}));
  auto v = find_violation(f);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->cell, (Cell{2, 4}));
  EXPECT_EQ(v->rule, "row not weakly increasing");
}

TEST(Tableau, CanonicalizeUnprimesFirstOccurrence) {
  Tableau f = parse_filling("1' 1 2'\n. 2'");
  Tableau c = canonicalize(f);
  EXPECT_EQ(render_compact(c), "1 1 2' / . 2");
  EXPECT_TRUE(is_valid(c));
}

TEST(Tableau, StandardizationRoundTrip) {
  for (auto& sh : oracle::shapes_up_to(4, 5, true, true)) {
    for (auto& t : enumerate(sh, 3)) {
      Standardization s = standardize(t);
      EXPECT_EQ(destandardize(s.standard, s.alphabet, t.max_letter()), t) << render_compact(t);
    }
  }
}

TEST(Tableau, IntervalSplitReassembles) {
  Tableau t = parse_tableau("1 1 2' 2 3\n. 2 3' 3\n. . 3");
  IntervalSplit s = restrict_interval(t, 2, 2);
  EXPECT_EQ(s.prefix.size(), 2);
  EXPECT_EQ(s.band.size(), 3);
  EXPECT_EQ(s.suffix.size(), 4);
  EXPECT_EQ(reassemble(s), t);
}

TEST(Weight, Operations) {
  Weight w({2, 3, 1});
  EXPECT_EQ(w.reversed(), Weight({1, 3, 2}));
  EXPECT_EQ(w.swapped(1), Weight({3, 2, 1}));
  EXPECT_EQ(Weight({1, 2, 3, 4}).reversed_between(2, 4), Weight({1, 4, 3, 2}));
  EXPECT_EQ(w.total(), 6);
  EXPECT_EQ(w.str(), "(2,3,1)");
}
