#include <gtest/gtest.h>

#include <random>
#include <set>

#include <nwunion/groebner.hpp>
#include <nwunion/union_synth.hpp>
#include <nwunion/verify.hpp>

using namespace nwunion;

namespace {

Antidiagonal ad(CellList cells) { return Antidiagonal(std::move(cells)); }

struct Shape {
  IndexSet rows;
  IndexSet cols;
  friend bool operator==(const Shape&, const Shape&) = default;
};

std::vector<Shape> shapes(const GeneratorProduct& g) {
  std::vector<Shape> out;
  for (const auto& f : g.factors) out.push_back({f.rows(), f.cols()});
  return out;
}

std::vector<CellList> cells_of(const std::vector<Antidiagonal>& v) {
  std::vector<CellList> out;
  for (const auto& a : v) out.push_back(a.cells());
  return out;
}

// Oracle for the longest chain: enumerate all subsets of a small cell set.
std::size_t brute_longest(const CellList& cells) {
  std::size_t best = 0;
  const std::size_t n = cells.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    CellList pick;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) pick.push_back(cells[i]);
    std::sort(pick.begin(), pick.end());
    bool chain = true;
    for (std::size_t i = 0; i + 1 < pick.size(); ++i)
      chain = chain && pick[i].row < pick[i + 1].row && pick[i].col > pick[i + 1].col;
    if (chain) best = std::max(best, pick.size());
  }
  return best;
}

PartialPermutation perm(const char* s) { return parse_one_line(s); }

}  // namespace

TEST(Components, DisjointAntidiagonals) {
  const auto d = ColoredDiagram::from({ad({{1, 2}, {2, 1}}), ad({{1, 4}, {3, 1}})});
  const auto comps = components(d);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].cells, (CellList{{1, 2}, {2, 1}}));
  EXPECT_EQ(comps[1].cells, (CellList{{1, 4}, {3, 1}}));
}

TEST(Components, SingleAndShared) {
  EXPECT_EQ(components(ColoredDiagram::from({ad({{1, 3}, {2, 2}, {3, 1}})})).size(), 1u);
  const auto shared = components(ColoredDiagram::from({ad({{1, 3}, {2, 2}}), ad({{2, 2}, {3, 1}})}));
  ASSERT_EQ(shared.size(), 1u);
  EXPECT_EQ(shared[0].colors.at(Cell{2, 2}), (std::vector<int>{0, 1}));
}

TEST(Components, PartitionOccupiedCells) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = ColoredDiagram::from(random_antidiagonal_list(rng, 5, 4));
    std::set<Cell> seen;
    for (const auto& comp : components(d))
      for (const Cell& c : comp.cells) EXPECT_TRUE(seen.insert(c).second);
    const auto all = d.cells();
    EXPECT_EQ(std::vector<Cell>(seen.begin(), seen.end()), all);
  }
}

TEST(LongestAntidiagonal, TieBreakPrefersNorthwest) {
  const auto green = ad({{1, 4}, {2, 3}, {3, 2}});
  const auto red = ad({{1, 4}, {4, 3}, {5, 2}});
  const auto comps = components(ColoredDiagram::from({green, red}));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(longest_antidiagonal(comps[0]), green);
}

TEST(LongestAntidiagonal, SingleAntidiagonalIsItself) {
  const CellList cells{{1, 5}, {2, 3}, {4, 2}};
  EXPECT_EQ(longest_antidiagonal(cells).cells(), cells);
  EXPECT_THROW(longest_antidiagonal(CellList{}), std::invalid_argument);
}

TEST(LongestAntidiagonal, MatchesBruteForceLength) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cells = ColoredDiagram::from(random_antidiagonal_list(rng, 5, 3)).cells();
    if (cells.size() > 14) continue;
    const auto chain = longest_antidiagonal(cells);
    EXPECT_EQ(chain.size(), brute_longest(cells));
    for (const Cell& c : chain.cells()) EXPECT_TRUE(std::binary_search(cells.begin(), cells.end(), c));
  }
}

TEST(ExtractFactors, Examples) {
  // Disjoint antidiagonals give one factor per component.
  const auto a = ad({{1, 2}, {2, 1}});
  const auto b = ad({{1, 4}, {3, 1}});
  EXPECT_EQ(generator({a, b}).factors, (std::vector<Antidiagonal>{a, b}));

  // Two overlapping antidiagonals whose union is an antidiagonal X.
  const auto x = ad({{1, 4}, {2, 3}, {3, 2}, {4, 1}});
  EXPECT_EQ(generator({ad({{1, 4}, {2, 3}, {3, 2}}), ad({{2, 3}, {3, 2}, {4, 1}})}).factors,
            (std::vector<Antidiagonal>{x}));

  // Tie example: the green chain, then what is left of red.
  const auto green = ad({{1, 4}, {2, 3}, {3, 2}});
  const auto red = ad({{1, 4}, {4, 3}, {5, 2}});
  const auto d = ColoredDiagram::from({green, red});
  EXPECT_EQ(cells_of(extract_factors(components(d)[0], d)),
            (std::vector<CellList>{{{1, 4}, {2, 3}, {3, 2}}, {{4, 3}, {5, 2}}}));
}

TEST(Generator, TieExampleWithThreeColors) {
  const auto g = generator({ad({{1, 2}, {2, 1}}), ad({{1, 4}, {2, 3}, {3, 2}}), ad({{1, 4}, {4, 3}, {5, 2}})});
  EXPECT_EQ(shapes(g), (std::vector<Shape>{{{1, 2}, {1, 2}}, {{1, 2, 3}, {2, 3, 4}}, {{4, 5}, {2, 3}}}));
  EXPECT_EQ(g.poly, determinant({1, 2}, {1, 2}) * determinant({1, 2, 3}, {2, 3, 4}) * determinant({4, 5}, {2, 3}));
}

TEST(Generator, FifthExampleLeavesSingleton) {
  const auto g = generator({ad({{1, 2}, {2, 1}}), ad({{2, 4}, {3, 2}, {4, 1}}), ad({{1, 5}, {2, 4}, {5, 1}})});
  EXPECT_EQ(shapes(g), (std::vector<Shape>{{{1, 2}, {1, 2}}, {{1, 2, 3, 4}, {1, 2, 4, 5}}, {{5}, {1}}}));
}

TEST(Generator, SmallCases) {
  const Polynomial m11 = Polynomial::variable(Cell{1, 1});
  const Polynomial m12 = Polynomial::variable(Cell{1, 2});
  EXPECT_EQ(generator({ad({{1, 1}}), ad({{1, 2}})}).poly, m11 * m12);
  EXPECT_EQ(generator({ad({{1, 1}}), ad({{1, 1}})}).poly, m11);
  const auto a = ad({{1, 3}, {2, 1}});
  EXPECT_EQ(generator({a}).poly, determinant({1, 2}, {1, 3}));
  EXPECT_EQ(generator({}).poly, Polynomial(Rational(1)));
  EXPECT_TRUE(generator({}).factors.empty());
}

TEST(Generator, CellPartitionAndInitInvariants) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inputs = random_antidiagonal_list(rng, 5, 4);
    const auto g = generator(inputs);
    CellList from_factors;
    for (const auto& f : g.factors)
      from_factors.insert(from_factors.end(), f.cells().begin(), f.cells().end());
    std::sort(from_factors.begin(), from_factors.end());
    const auto occupied = ColoredDiagram::from(inputs).cells();
    EXPECT_EQ(from_factors, occupied);
    EXPECT_EQ(g.poly.leading_monomial(), Monomial::product_of(occupied));
    EXPECT_TRUE(g.poly.leading_monomial().is_squarefree());
    EXPECT_EQ(std::abs(static_cast<int>(g.poly.leading_coeff())), 1);
  }
}

TEST(UnionBasis, Of231And312) {
  const auto basis = union_basis({spec_from_permutation(perm("2 3 1")), spec_from_permutation(perm("3 1 2"))});
  std::vector<std::string> text;
  for (const auto& g : basis) text.push_back(to_string(g.poly));
  EXPECT_EQ(text, (std::vector<std::string>{"1*m[1,1]", "1*m[1,1]*m[1,2]", "1*m[1,1]*m[2,1]", "1*m[1,2]*m[2,1]"}));
}

TEST(UnionBasis, SingleSpecReturnsFultonGenerators) {
  for (const auto& p : all_permutations(4)) {
    // Overlapping essential conditions can repeat a minor; keep first occurrences.
    const auto spec = spec_from_permutation(p);
    std::vector<Polynomial> distinct;
    for (const auto& f : fulton_polynomials(spec))
      if (std::find(distinct.begin(), distinct.end(), f) == distinct.end()) distinct.push_back(f);
    EXPECT_EQ(polynomials_of(union_basis({spec})), distinct) << p.label();
  }
}

TEST(UnionBasis, Of1423And1342MatchesNineShapes) {
  const auto basis = union_basis({spec_from_permutation(perm("1 4 2 3")), spec_from_permutation(perm("1 3 4 2"))});
  const std::vector<std::vector<Shape>> expected{
      {{{1, 2}, {1, 2}}},
      {{{1, 2}, {1, 2}}, {{3}, {1}}},
      {{{1, 2}, {1, 2}}, {{2, 3}, {1, 2}}},
      {{{1, 2}, {1, 2}}, {{1}, {3}}},
      {{{1, 3}, {1, 2}}, {{1, 2}, {1, 3}}},
      {{{1, 2}, {1, 3}}, {{2, 3}, {1, 2}}},
      {{{1, 2}, {1, 2}}, {{1, 2}, {2, 3}}},
      {{{1, 3}, {1, 2}}, {{1, 2}, {2, 3}}},
      {{{1, 2, 3}, {1, 2, 3}}},
  };
  ASSERT_EQ(basis.size(), expected.size());
  for (std::size_t k = 0; k < basis.size(); ++k) EXPECT_EQ(shapes(basis[k]), expected[k]) << "generator " << k;
}

TEST(UnionBasis, WholeSpaceAndErrors) {
  const auto id = spec_from_permutation(PartialPermutation::identity(3));
  EXPECT_TRUE(union_basis({id, spec_from_permutation(perm("2 3 1"))}).empty());
  EXPECT_THROW(union_basis({}), std::invalid_argument);
  EXPECT_THROW(union_basis({spec_from_permutation(perm("2 1")), spec_from_permutation(perm("2 3 1"))}),
               std::invalid_argument);
}

TEST(UnionBasis, DeduplicatesSelfIntersection) {
  const auto s = spec_from_permutation(perm("2 1 4 3"));
  EXPECT_EQ(polynomials_of(union_basis({s, s})).size(), 3u);
  EXPECT_TRUE(ideals_equal(polynomials_of(union_basis({s, s})), fulton_polynomials(s)));
}

TEST(Render, DeterminantAndFactors) {
  EXPECT_EQ(render_determinant(ad({{1, 2}, {2, 1}})), "|m[1,1] m[1,2]; m[2,1] m[2,2]|");
  EXPECT_EQ(render_determinant(ad({{3, 1}})), "|m[3,1]|");
  GeneratorProduct empty;
  EXPECT_EQ(render_factors(empty), "1");
}

TEST(GeneratorJson, RoundTrip) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = generator(random_antidiagonal_list(rng, 4, 3));
    const auto back = generator_from_json(nlohmann::json::parse(to_json(g).dump()));
    EXPECT_EQ(back.factors, g.factors);
    EXPECT_EQ(back.poly, g.poly);
  }
  const auto g = generator({ad({{1, 1}}), ad({{1, 2}})});
  EXPECT_EQ(to_json(g).dump(),
            R"({"factors":[{"cols":[1],"rows":[1]},{"cols":[2],"rows":[1]}],"poly":[{"coeff":"1","monomial":[[1,1,1],[1,2,1]]}]})");
  auto bad = to_json(g);
  bad["poly"] = to_json(Polynomial::variable(Cell{1, 1}));
  EXPECT_THROW(generator_from_json(bad), std::invalid_argument);
}

TEST(PropertySuites, GluingLemma) {
  const auto r = suite_gluing(20240101, 200, 5);
  EXPECT_TRUE(r.ok()) << (r.messages.empty() ? "" : r.messages.front());
  EXPECT_GE(r.cases, 200u);
}

TEST(PropertySuites, InitLemma) {
  const auto r = suite_init_lemma(20240101, 200, 5);
  EXPECT_TRUE(r.ok()) << (r.messages.empty() ? "" : r.messages.front());
}

TEST(PropertySuites, MembershipAndFirstFactorDomination) {
  const auto r = suite_membership(20240101, 200, 5);
  EXPECT_TRUE(r.ok()) << (r.messages.empty() ? "" : r.messages.front());
}
