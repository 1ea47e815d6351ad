#include <gtest/gtest.h>

#include <random>

#include <nwunion/permutation.hpp>

using namespace nwunion;

namespace {

// Brute-force oracle: count the 1s of the partial permutation matrix in the
// northwest i x j corner.
int count_ones(const PartialPermutation& p, int i, int j) {
  int total = 0;
  for (int r = 1; r <= i; ++r)
    for (int c = 1; c <= j; ++c)
      if (p(r) == c) ++total;
  return total;
}

int inversions(const PartialPermutation& p) {
  int inv = 0;
  for (int a = 1; a <= p.size(); ++a)
    for (int b = a + 1; b <= p.size(); ++b)
      if (*p(a) > *p(b)) ++inv;
  return inv;
}

PartialPermutation random_partial(std::mt19937_64& rng, int n) {
  std::vector<std::optional<int>> v;
  for (int i = 1; i <= n; ++i) v.emplace_back(i);
  std::shuffle(v.begin(), v.end(), rng);
  std::bernoulli_distribution drop(0.3);
  for (auto& x : v)
    if (drop(rng)) x.reset();
  return PartialPermutation(std::move(v));
}

}  // namespace

TEST(ParseOneLine, AcceptsSeparatorsAndStars) {
  EXPECT_EQ(parse_one_line("2 1 4 3").label(), "2143");
  EXPECT_EQ(parse_one_line("2,1,4,3").label(), "2143");
  EXPECT_EQ(parse_one_line("1 2 3"), PartialPermutation::identity(3));
  const auto p = parse_one_line("2 * 1");
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p(1), 2);
  EXPECT_FALSE(p(2).has_value());
  EXPECT_EQ(p(3), 1);
  EXPECT_FALSE(p.is_honest());
  EXPECT_EQ(p.one_line(), "2 * 1");
}

TEST(ParseOneLine, RejectsBadInput) {
  EXPECT_THROW(parse_one_line(""), std::invalid_argument);
  EXPECT_THROW(parse_one_line("   "), std::invalid_argument);
  EXPECT_THROW(parse_one_line("1 1 2"), std::invalid_argument);
  EXPECT_THROW(parse_one_line("1 4 2"), std::invalid_argument);
  EXPECT_THROW(parse_one_line("0 1"), std::invalid_argument);
  EXPECT_THROW(parse_one_line("1 x"), std::invalid_argument);
  EXPECT_THROW(parse_one_line("213"), std::invalid_argument);  // one token, out of range
}

TEST(RankMatrix, Of15432) {
  const auto r = rank_matrix(parse_one_line("1 5 4 3 2"));
  const std::vector<std::vector<int>> expected{
      {1, 1, 1, 1, 1}, {1, 1, 1, 1, 2}, {1, 1, 1, 2, 3}, {1, 1, 2, 3, 4}, {1, 2, 3, 4, 5}};
  EXPECT_EQ(r.rows(), expected);
}

TEST(RankMatrix, IdentityIsMinOfIndices) {
  const auto r = rank_matrix(PartialPermutation::identity(3));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(r(i, j), std::min(i, j));
}

TEST(RankMatrix, MatchesBruteForceCount) {
  const auto p = parse_one_line("2 3 1");
  const auto r = rank_matrix(p);
  EXPECT_EQ(r.rows(), (std::vector<std::vector<int>>{{0, 1, 1}, {0, 1, 2}, {1, 2, 3}}));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(r(i, j), count_ones(p, i, j));
}

TEST(RankMatrix, InvariantsOnRandomPartialPermutations) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto p = random_partial(rng, n);
    const auto r = rank_matrix(p);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        ASSERT_EQ(r(i, j), count_ones(p, i, j));
        ASSERT_LE(r(i, j), std::min(i, j));
        if (i > 1) {
          ASSERT_GE(r(i, j), r(i - 1, j));
          ASSERT_LE(r(i, j) - r(i - 1, j), 1);
        }
        if (j > 1) {
          ASSERT_GE(r(i, j), r(i, j - 1));
          ASSERT_LE(r(i, j) - r(i, j - 1), 1);
        }
      }
    }
    if (p.is_honest()) {
      for (int k = 1; k <= n; ++k) {
        EXPECT_EQ(r(n, k), k);
        EXPECT_EQ(r(k, n), k);
      }
    }
  }
}

TEST(RotheDiagram, Of2143And15432) {
  EXPECT_EQ(rothe_diagram(parse_one_line("2 1 4 3")), (CellList{{1, 1}, {3, 3}}));
  EXPECT_EQ(rothe_diagram(parse_one_line("1 5 4 3 2")),
            (CellList{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}));
  EXPECT_TRUE(rothe_diagram(PartialPermutation::identity(4)).empty());
}

TEST(RotheDiagram, PartialPermutation) {
  // 2 * 1: row 2 and column 3 carry no 1, so (2,3) survives alongside (1,1), (2,1).
  EXPECT_EQ(rothe_diagram(parse_one_line("2 * 1")), (CellList{{1, 1}, {2, 1}, {2, 3}}));
}

TEST(RotheDiagram, SizeIsLengthAndContainsEssentialSet) {
  for (int n : {3, 4}) {
    for (const auto& p : all_permutations(n)) {
      const auto d = rothe_diagram(p);
      EXPECT_EQ(static_cast<int>(d.size()), inversions(p)) << p.label();
      // Honest-permutation characterization.
      for (const Cell& c : d) {
        EXPECT_GT(*p(c.row), c.col);
        EXPECT_GT(*p.inverse(c.col), c.row);
      }
      for (const auto& e : essential_set(p)) EXPECT_TRUE(std::binary_search(d.begin(), d.end(), e.cell));
    }
  }
}

TEST(EssentialSet, Of2143And15432WithRanks) {
  EXPECT_EQ(essential_set(parse_one_line("2 1 4 3")),
            (std::vector<EssentialBox>{{{1, 1}, 0}, {{3, 3}, 2}}));
  EXPECT_EQ(essential_set(parse_one_line("1 5 4 3 2")),
            (std::vector<EssentialBox>{{{2, 4}, 1}, {{3, 3}, 1}, {{4, 2}, 1}}));
  EXPECT_TRUE(essential_set(PartialPermutation::identity(5)).empty());
}

TEST(EssentialSet, SubsetOfDiagramForPartialPermutations) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_partial(rng, 1 + static_cast<int>(rng() % 6));
    const auto d = rothe_diagram(p);
    for (const auto& e : essential_set(p)) EXPECT_TRUE(std::binary_search(d.begin(), d.end(), e.cell));
  }
}

TEST(RenderDiagram, MarksOnesEssentialBoxesAndDiagram) {
  EXPECT_EQ(render_diagram(parse_one_line("2 1 4 3")),
            "e 1 . .\n"
            "1 . . .\n"
            ". . e 1\n"
            ". . 1 .\n");
}
