#include <gtest/gtest.h>

#include <nwunion/groebner.hpp>
#include <nwunion/nw_ideal.hpp>

using namespace nwunion;

namespace {

Polynomial var(int r, int c) { return Polynomial::variable(Cell{r, c}); }

std::vector<CellList> cells_of(const std::vector<Antidiagonal>& v) {
  std::vector<CellList> out;
  for (const auto& a : v) out.push_back(a.cells());
  return out;
}

// Binomial coefficient oracle for generator counts.
int choose(int m, int k) {
  if (k < 0 || k > m) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace

TEST(SpecFromPermutation, EssentialConditions) {
  const auto s2143 = spec_from_permutation(parse_one_line("2 1 4 3"));
  EXPECT_EQ(s2143.n, 4);
  EXPECT_EQ(s2143.label, "2143");
  EXPECT_EQ(s2143.conditions, (std::vector<RankCondition>{{1, 1, 0}, {3, 3, 2}}));
  EXPECT_EQ(spec_from_permutation(parse_one_line("2 3 1")).conditions, (std::vector<RankCondition>{{2, 1, 0}}));
  EXPECT_TRUE(spec_from_permutation(PartialPermutation::identity(4)).conditions.empty());
}

TEST(SpecFromPermutation, RankMatrixConstructionListsEveryCell) {
  const auto s = spec_from_rank_matrix(parse_one_line("2 3 1"));
  ASSERT_EQ(s.conditions.size(), 9u);
  EXPECT_EQ(s.conditions[0], (RankCondition{1, 1, 0}));
  EXPECT_EQ(s.conditions[3], (RankCondition{2, 1, 0}));
  EXPECT_TRUE(s.conditions[8].vacuous());
}

TEST(Subsets, LexicographicOrder) {
  EXPECT_EQ(subsets(4, 2), (std::vector<IndexSet>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(subsets(3, 3), (std::vector<IndexSet>{{1, 2, 3}}));
  EXPECT_EQ(subsets(3, 0), (std::vector<IndexSet>{{}}));
  EXPECT_TRUE(subsets(2, 3).empty());
  for (int m = 0; m <= 6; ++m)
    for (int k = 0; k <= m; ++k) EXPECT_EQ(static_cast<int>(subsets(m, k).size()), choose(m, k));
}

TEST(FultonGenerators, Of231) {
  EXPECT_EQ(fulton_polynomials(spec_from_permutation(parse_one_line("2 3 1"))),
            (std::vector<Polynomial>{var(1, 1), var(2, 1)}));
}

TEST(FultonGenerators, VacuousConditionContributesNothing) {
  EXPECT_TRUE(fulton_generators(RankConditionSpec{3, {{2, 2, 2}}, ""}).empty());
  EXPECT_TRUE(fulton_generators(RankConditionSpec{3, {}, ""}).empty());
}

TEST(FultonGenerators, Of2143) {
  const auto gens = fulton_generators(spec_from_permutation(parse_one_line("2 1 4 3")));
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].poly, var(1, 1));
  EXPECT_EQ(gens[1].poly, determinant({1, 2, 3}, {1, 2, 3}));
  EXPECT_EQ(gens[1].source, (RankCondition{3, 3, 2}));
}

TEST(FultonGenerators, ShapeInvariants) {
  for (int n : {3, 4}) {
    for (const auto& p : all_permutations(n)) {
      const auto spec = spec_from_rank_matrix(p);
      std::size_t expected = 0;
      for (const auto& c : spec.conditions)
        if (!c.vacuous()) expected += static_cast<std::size_t>(choose(c.i, c.r + 1) * choose(c.j, c.r + 1));
      const auto gens = fulton_generators(spec);
      EXPECT_EQ(gens.size(), expected);
      for (const auto& g : gens) {
        EXPECT_EQ(static_cast<int>(g.rows.size()), g.source.r + 1);
        EXPECT_EQ(g.cols.size(), g.rows.size());
        EXPECT_LE(g.rows.back(), g.source.i);
        EXPECT_LE(g.cols.back(), g.source.j);
        EXPECT_EQ(g.poly.leading_monomial(), g.antidiag.term());
      }
    }
  }
}

TEST(FultonGenerators, RejectsInvalidConditions) {
  EXPECT_THROW(fulton_generators(RankConditionSpec{3, {{4, 1, 0}}, ""}), std::invalid_argument);
  EXPECT_THROW(fulton_generators(RankConditionSpec{3, {{2, 2, 3}}, ""}), std::invalid_argument);
  EXPECT_THROW(fulton_generators(RankConditionSpec{3, {{2, 2, -1}}, ""}), std::invalid_argument);
  EXPECT_THROW(fulton_generators(RankConditionSpec{0, {}, ""}), std::invalid_argument);
}

TEST(AntidiagonalsOfSpec, Examples) {
  EXPECT_EQ(cells_of(antidiagonals_of_spec(spec_from_permutation(parse_one_line("2 3 1")))),
            (std::vector<CellList>{{{1, 1}}, {{2, 1}}}));
  EXPECT_EQ(cells_of(antidiagonals_of_spec(spec_from_permutation(parse_one_line("3 1 2")))),
            (std::vector<CellList>{{{1, 1}}, {{1, 2}}}));
  EXPECT_EQ(cells_of(antidiagonals_of_spec(spec_from_permutation(parse_one_line("2 1 4 3")))),
            (std::vector<CellList>{{{1, 1}}, {{1, 3}, {2, 2}, {3, 1}}}));
}

TEST(AntidiagonalsOfSpec, DeduplicatesAcrossConditions) {
  const RankConditionSpec spec{3, {{1, 1, 0}, {2, 2, 0}, {1, 1, 0}}, ""};
  EXPECT_EQ(fulton_generators(spec).size(), 6u);
  EXPECT_EQ(antidiagonals_of_spec(spec).size(), 4u);
}

TEST(SpecJson, ParsesBothForms) {
  const auto a = spec_from_json(nlohmann::json::parse(R"({"n":4,"label":"X","conditions":[{"i":3,"j":3,"r":2}]})"));
  EXPECT_EQ(a.n, 4);
  EXPECT_EQ(a.label, "X");
  EXPECT_EQ(a.conditions, (std::vector<RankCondition>{{3, 3, 2}}));

  const auto b = spec_from_json(nlohmann::json::parse(R"({"n":4,"permutation":"1 4 2 3"})"));
  EXPECT_EQ(b.label, "1423");
  EXPECT_EQ(b.conditions, spec_from_permutation(parse_one_line("1 4 2 3")).conditions);

  const auto c = spec_from_json(nlohmann::json::parse(R"({"permutation":"2 * 1","construction":"all-rank-matrix"})"));
  EXPECT_EQ(c.conditions.size(), 9u);

  EXPECT_EQ(spec_from_json(to_json(a)).conditions, a.conditions);
}

TEST(SpecJson, Errors) {
  auto parse = [](const char* text) { return spec_from_json(nlohmann::json::parse(text)); };
  EXPECT_THROW(parse("[]"), std::invalid_argument);
  EXPECT_THROW(parse(R"({"conditions":[]})"), std::invalid_argument);
  EXPECT_THROW(parse(R"({"n":3,"permutation":"1 4 2 3"})"), std::invalid_argument);
  EXPECT_THROW(parse(R"({"permutation":"1 2","construction":"minimal"})"), std::invalid_argument);
  EXPECT_THROW(parse(R"({"n":2,"conditions":[{"i":3,"j":1,"r":0}]})"), std::invalid_argument);
  EXPECT_THROW(parse(R"({"permutation":"1 1"})"), std::invalid_argument);
  EXPECT_THROW(load_spec("/nonexistent/spec.json"), std::invalid_argument);
}

TEST(FultonTheorem, EssentialConditionsMatchRankMatrix) {
  for (int n : {3, 4}) {
    for (const auto& p : all_permutations(n)) {
      EXPECT_TRUE(
          ideals_equal(fulton_polynomials(spec_from_permutation(p)), fulton_polynomials(spec_from_rank_matrix(p))))
          << p.label();
    }
  }
}

TEST(FultonTheorem, EssentialConditionsOnPartialPermutations) {
  // Partial permutations of size 3 with at least one undefined entry.
  for (const char* text : {"2 * 1", "* 1 *", "* * 1", "3 * *", "* 3 1", "1 * 2", "* * *", "2 3 *"}) {
    const auto p = parse_one_line(text);
    EXPECT_TRUE(
        ideals_equal(fulton_polynomials(spec_from_permutation(p)), fulton_polynomials(spec_from_rank_matrix(p))))
        << text;
  }
}

TEST(KnutsonMiller, FultonGeneratorsAreGroebner) {
  for (int n : {3, 4})
    for (const auto& p : all_permutations(n)) EXPECT_TRUE(is_groebner(fulton_polynomials(spec_from_permutation(p)))) << p.label();
}
