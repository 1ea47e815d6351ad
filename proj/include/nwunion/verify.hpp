#pragma once

// Packaged property suites: each runs a family of seeded or exhaustive cases
// against the Gröbner oracle and reports per-case failures.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "groebner.hpp"
#include "nw_ideal.hpp"
#include "permutation.hpp"
#include "poly_io.hpp"
#include "union_synth.hpp"

namespace nwunion {

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages{};  ///< one line per failing case
  double seconds = 0;

  bool ok() const { return failures == 0 && cases > 0; }

  void fail(std::string msg) {
    ++failures;
    if (messages.size() < 20) messages.push_back(std::move(msg));
  }
};

/// Cache of reduced Gröbner bases of single northwest rank conditions.
class ConditionBases {
 public:
  const std::vector<Polynomial>& get(const RankCondition& c) {
    std::lock_guard lock(mu_);
    auto key = std::make_tuple(c.i, c.j, c.r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    RankConditionSpec spec{std::max(c.i, c.j), {c}, ""};
    return cache_.emplace(key, buchberger(fulton_polynomials(spec))).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, std::vector<Polynomial>> cache_;
};

/// Smallest northwest condition containing det(A): the |A|-minors of the
/// northwest (max row of A) x (max col of A) sub-matrix.
inline RankCondition condition_of(const Antidiagonal& a) {
  return {a.cells().back().row, a.cells().front().col, static_cast<int>(a.size()) - 1};
}

/// Random antidiagonal in an n x n grid of length 1..max_len.
template <class Rng>
Antidiagonal random_antidiagonal(Rng& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, std::min(n, max_len));
  const int k = len_dist(rng);
  auto pick = [&] {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(k));
    return all;
  };
  return antidiagonal_of(pick(), pick());
}

template <class Rng>
PartialPermutation random_permutation(Rng& rng, int n) {
  std::vector<std::optional<int>> v;
  for (int i = 1; i <= n; ++i) v.emplace_back(i);
  std::shuffle(v.begin(), v.end(), rng);
  return PartialPermutation(std::move(v));
}

namespace detail {

inline std::string labels(const std::vector<RankConditionSpec>& specs) {
  std::string out;
  for (const auto& s : specs) out += (out.empty() ? "" : " | ") + s.label;
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

}  // namespace detail

struct UnionCheck {
  bool groebner = true;
  bool equal = true;
  bool membership = true;
  bool init_theorem = true;
};

/// Full oracle comparison of the synthesized union basis with the
/// elimination intersection.
inline UnionCheck check_union(const std::vector<RankConditionSpec>& specs, bool with_init_theorem = false) {
  UnionCheck out;
  const auto basis = polynomials_of(union_basis(specs));
  std::vector<std::vector<Polynomial>> ideals;
  for (const auto& s : specs) ideals.push_back(fulton_polynomials(s));

  std::vector<std::vector<Polynomial>> bases;
  for (const auto& ideal : ideals) bases.push_back(buchberger(ideal));
  for (const auto& g : basis)
    for (const auto& b : bases)
      if (!b.empty() && !reduces_to_zero(g, b)) out.membership = false;

  out.groebner = is_groebner(basis);
  const auto oracle = intersect_all(ideals);
  out.equal = ideals_equal(basis, oracle);
  if (with_init_theorem) {
    MonomialIdeal lhs = initial_ideal(oracle);
    bool first = true;
    MonomialIdeal rhs;
    for (const auto& b : bases) {
      MonomialIdeal init = initial_ideal(b);
      rhs = first ? init : intersect(rhs, init);
      first = false;
    }
    out.init_theorem = (lhs == rhs);
  }
  return out;
}

inline void record_union_case(SuiteReport& report, const std::vector<RankConditionSpec>& specs, bool init_theorem) {
  ++report.cases;
  const UnionCheck c = check_union(specs, init_theorem);
  std::string what;
  if (!c.membership) what += " membership";
  if (!c.groebner) what += " groebner";
  if (!c.equal) what += " equality";
  if (!c.init_theorem) what += " init-theorem";
  if (!what.empty()) report.fail(detail::labels(specs) + ":" + what);
}

/// All ordered pairs of permutations in S_3.
inline SuiteReport suite_s3_exhaustive() {
  detail::Timer timer;
  SuiteReport r{"s3-exhaustive"};
  const auto perms = all_permutations(3);
  for (const auto& a : perms)
    for (const auto& b : perms) record_union_case(r, {spec_from_permutation(a), spec_from_permutation(b)}, true);
  r.seconds = timer.seconds();
  return r;
}

/// Fixed pairs 1423/1342 and 2143/1432 plus `samples` seeded random pairs
/// from S_4, including the initial-ideal intersection check.
inline SuiteReport suite_s4_sampled(std::uint64_t seed, std::size_t samples = 25) {
  detail::Timer timer;
  SuiteReport r{"s4-sampled"};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<PartialPermutation, PartialPermutation>> pairs{
      {parse_one_line("1 4 2 3"), parse_one_line("1 3 4 2")},
      {parse_one_line("2 1 4 3"), parse_one_line("1 4 3 2")},
  };
  for (std::size_t k = 0; k < samples; ++k) pairs.emplace_back(random_permutation(rng, 4), random_permutation(rng, 4));
  for (const auto& [a, b] : pairs) record_union_case(r, {spec_from_permutation(a), spec_from_permutation(b)}, true);
  r.seconds = timer.seconds();
  return r;
}

/// Seeded random triples, all from S_3 or all from S_4.
inline SuiteReport suite_triples(std::uint64_t seed, std::size_t samples = 10) {
  detail::Timer timer;
  SuiteReport r{"triples"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(3, 4);
  for (std::size_t k = 0; k < samples; ++k) {
    const int n = size_dist(rng);
    std::vector<RankConditionSpec> specs;
    for (int t = 0; t < 3; ++t) specs.push_back(spec_from_permutation(random_permutation(rng, n)));
    record_union_case(r, specs, false);
  }
  r.seconds = timer.seconds();
  return r;
}

/// det(A ∪ B) lies in the ideal of each of A and B whenever A, B overlap and
/// their union is again an antidiagonal.
inline SuiteReport suite_gluing(std::uint64_t seed, std::size_t samples = 200, int max_n = 5) {
  detail::Timer timer;
  SuiteReport r{"gluing"};
  std::mt19937_64 rng(seed);
  ConditionBases bases;
  std::uniform_int_distribution<int> n_dist(2, max_n);
  while (r.cases < samples) {
    const int n = n_dist(rng);
    const Antidiagonal x = random_antidiagonal(rng, n, n);
    if (x.size() < 2) continue;
    // Each cell goes to A only, B only or both; at least one shared cell.
    std::uniform_int_distribution<int> side(0, 2);
    CellList a, b;
    bool shared = false;
    for (const Cell& c : x.cells()) {
      const int s = side(rng);
      if (s != 1) a.push_back(c);
      if (s != 0) b.push_back(c);
      shared = shared || s == 2;
    }
    if (!shared) continue;
    ++r.cases;
    const Polynomial det_x = determinant(x);
    for (const auto& part : {Antidiagonal(a), Antidiagonal(b)}) {
      if (!reduces_to_zero(det_x, bases.get(condition_of(part)))) {
        std::ostringstream os;
        os << "det of";
        for (const Cell& c : x.cells()) os << ' ' << c;
        os << " not in the ideal of";
        for (const Cell& c : part.cells()) os << ' ' << c;
        r.fail(os.str());
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

/// Random colored diagrams of up to `max_colors` antidiagonals.
template <class Rng>
std::vector<Antidiagonal> random_antidiagonal_list(Rng& rng, int n, int max_colors) {
  std::uniform_int_distribution<int> count(1, max_colors);
  std::vector<Antidiagonal> out;
  const int r = count(rng);
  for (int k = 0; k < r; ++k) out.push_back(random_antidiagonal(rng, n, n));
  return out;
}

/// Leading monomial of each synthesized generator is the squarefree product
/// of the occupied cells, and the factors partition those cells.
inline SuiteReport suite_init_lemma(std::uint64_t seed, std::size_t samples = 200, int max_n = 5) {
  detail::Timer timer;
  SuiteReport r{"init-lemma"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(2, max_n);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto ads = random_antidiagonal_list(rng, n_dist(rng), 3);
    ++r.cases;
    const GeneratorProduct g = generator(ads);
    const CellList occupied = ColoredDiagram::from(ads).cells();
    CellList covered;
    for (const auto& f : g.factors) covered.insert(covered.end(), f.cells().begin(), f.cells().end());
    std::sort(covered.begin(), covered.end());
    const Monomial expected = Monomial::product_of(occupied);
    if (covered != occupied) r.fail("factors do not partition the occupied cells: " + render_factors(g));
    if (!(g.poly.leading_monomial() == expected) || !expected.is_squarefree())
      r.fail("leading monomial " + to_string(g.poly.leading_monomial()) + " != " + to_string(expected));
  }
  r.seconds = timer.seconds();
  return r;
}

/// Every synthesized generator lies in the ideal of each input antidiagonal,
/// and the first factor touching A_i is at least as long as A_i with at least
/// |A_i| of its cells northwest of A_i's corner.
inline SuiteReport suite_membership(std::uint64_t seed, std::size_t samples = 200, int max_n = 5) {
  detail::Timer timer;
  SuiteReport r{"membership"};
  std::mt19937_64 rng(seed);
  ConditionBases bases;
  std::uniform_int_distribution<int> n_dist(2, max_n);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto ads = random_antidiagonal_list(rng, n_dist(rng), 3);
    ++r.cases;
    const GeneratorProduct g = generator(ads);
    for (const auto& a : ads) {
      const RankCondition cond = condition_of(a);
      if (!reduces_to_zero(g.poly, bases.get(cond))) r.fail("generator " + render_factors(g) + " not in an input ideal");
      auto first = std::find_if(g.factors.begin(), g.factors.end(), [&](const Antidiagonal& f) {
        return std::any_of(f.cells().begin(), f.cells().end(), [&](const Cell& c) { return a.contains(c); });
      });
      if (first == g.factors.end()) {
        r.fail("no factor meets an input antidiagonal");
        continue;
      }
      const auto inside = std::count_if(first->cells().begin(), first->cells().end(), [&](const Cell& c) {
        return c.row <= cond.i && c.col <= cond.j;
      });
      if (first->size() < a.size() || static_cast<std::size_t>(inside) < a.size())
        r.fail("first factor " + render_determinant(*first) + " does not dominate an input antidiagonal");
    }
  }
  r.seconds = timer.seconds();
  return r;
}

/// The leading term of a random minor is its antidiagonal term.
inline SuiteReport suite_antidiagonal_order(std::uint64_t seed, std::size_t samples = 200, int max_n = 5) {
  detail::Timer timer;
  SuiteReport r{"antidiagonal-order"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(1, max_n);
  for (std::size_t k = 0; k < samples; ++k) {
    const Antidiagonal a = random_antidiagonal(rng, n_dist(rng), max_n);
    ++r.cases;
    const Polynomial d = determinant(a.rows(), a.cols());
    if (!(d.leading_monomial() == a.term())) r.fail("minor " + render_determinant(a) + " leads with " + to_string(d.leading_monomial()));
  }
  r.seconds = timer.seconds();
  return r;
}

/// Fulton generators of every permutation in S_3 and S_4 are a Gröbner basis.
inline SuiteReport suite_knutson_miller() {
  detail::Timer timer;
  SuiteReport r{"knutson-miller"};
  for (int n : {3, 4}) {
    for (const auto& p : all_permutations(n)) {
      ++r.cases;
      if (!is_groebner(fulton_polynomials(spec_from_permutation(p)))) r.fail(p.label() + ": Fulton generators fail the S-pair test");
    }
  }
  r.seconds = timer.seconds();
  return r;
}

/// Essential-box conditions cut out the same ideal as the whole rank matrix.
inline SuiteReport suite_fulton_essential() {
  detail::Timer timer;
  SuiteReport r{"fulton-essential"};
  for (int n : {3, 4}) {
    for (const auto& p : all_permutations(n)) {
      ++r.cases;
      if (!ideals_equal(fulton_polynomials(spec_from_permutation(p)), fulton_polynomials(spec_from_rank_matrix(p))))
        r.fail(p.label() + ": essential conditions differ from the rank matrix");
    }
  }
  r.seconds = timer.seconds();
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"antidiagonal-order", "gluing",         "init-lemma",
                                              "membership",         "knutson-miller", "fulton-essential",
                                              "s3-exhaustive",      "s4-sampled",     "triples"};
  return names;
}

/// Runs one named suite; "all" is expanded by the caller.
inline SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "antidiagonal-order") return suite_antidiagonal_order(seed);
  if (name == "gluing") return suite_gluing(seed);
  if (name == "init-lemma") return suite_init_lemma(seed);
  if (name == "membership") return suite_membership(seed);
  if (name == "knutson-miller") return suite_knutson_miller();
  if (name == "fulton-essential") return suite_fulton_essential();
  if (name == "s3-exhaustive") return suite_s3_exhaustive();
  if (name == "s4-sampled") return suite_s4_sampled(seed);
  if (name == "triples") return suite_triples(seed);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace nwunion
