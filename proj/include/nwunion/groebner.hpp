#pragma once

// Exact Buchberger engine used as an independent check on synthesized bases:
// normal forms, Gröbner bases, initial ideals, ideal intersection by
// elimination and ideal equality.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "polynomial.hpp"

namespace nwunion {

/// Remainder of multivariate division of f by basis: no term of the result is
/// divisible by a leading monomial of the basis. Zero basis elements are ignored.
template <class Order>
BasicPolynomial<Order> normal_form(const BasicPolynomial<Order>& f, const std::vector<BasicPolynomial<Order>>& basis) {
  using Poly = BasicPolynomial<Order>;
  std::vector<const Poly*> divisors;
  for (const auto& g : basis)
    if (!g.is_zero()) divisors.push_back(&g);

  std::vector<Term> remainder;
  Poly h = f;
  while (!h.is_zero()) {
    const Term& lead = h.leading_term();
    const Poly* divisor = nullptr;
    for (const Poly* g : divisors) {
      if (g->leading_monomial().divides(lead.mono)) {
        divisor = g;
        break;
      }
    }
    if (divisor) {
      const Rational c = -lead.coeff / divisor->leading_coeff();
      const Monomial m = lead.mono / divisor->leading_monomial();
      h = h.add_scaled(c, m, *divisor);
    } else {
      remainder.push_back(lead);
      h = h.add_scaled(Rational(-1), Monomial{}, Poly(lead.coeff, lead.mono));
    }
  }
  return Poly::from_terms(std::move(remainder));
}

template <class Order>
BasicPolynomial<Order> s_polynomial(const BasicPolynomial<Order>& f, const BasicPolynomial<Order>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  using Poly = BasicPolynomial<Order>;
  return Poly{}
      .add_scaled(Rational(1) / f.leading_coeff(), l / f.leading_monomial(), f)
      .add_scaled(Rational(-1) / g.leading_coeff(), l / g.leading_monomial(), g);
}

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t zero_reductions = 0;
};

/// Sorts by leading monomial, smallest first, then by the remaining terms.
template <class Order>
void sort_basis(std::vector<BasicPolynomial<Order>>& g) {
  std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
}

/// Reduced Gröbner basis of the ideal generated by gens: monic, minimal,
/// inter-reduced and sorted by leading monomial. Pairs are taken by the
/// normal strategy (smallest lcm degree, then smallest lcm) and skipped by
/// the coprime and chain criteria.
template <class Order>
std::vector<BasicPolynomial<Order>> buchberger(const std::vector<BasicPolynomial<Order>>& gens,
                                               BuchbergerStats* stats = nullptr) {
  using Poly = BasicPolynomial<Order>;
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  std::vector<Poly> g;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    Poly h = normal_form(f.monic(), g).monic();
    if (!h.is_zero()) g.push_back(std::move(h));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
  };
  std::vector<Pair> pending;
  // done[i][j] (i < j) once the pair has been handled or discarded.
  std::vector<std::vector<bool>> done;

  auto grow = [&] {
    for (auto& row : done) row.push_back(false);
    done.emplace_back(g.size(), false);
  };
  auto is_done = [&](std::size_t a, std::size_t b) { return a < b ? done[a][b] : done[b][a]; };

  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lcm(g[i].leading_monomial(), g[j].leading_monomial());
      const int d = l.degree();
      pending.push_back({i, j, std::move(l), d});
    }
  };

  for (std::size_t j = 0; j < g.size(); ++j) grow();
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return Order::compare(a.lcm, b.lcm) < 0;
    });
    const Pair p = *best;
    pending.erase(best);
    ++st.pairs_considered;

    const Monomial& li = g[p.i].leading_monomial();
    const Monomial& lj = g[p.j].leading_monomial();
    bool skip = false;
    if (coprime(li, lj)) {
      ++st.coprime_skipped;
      skip = true;
    } else {
      for (std::size_t k = 0; k < g.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (g[k].leading_monomial().divides(p.lcm) && is_done(p.i, k) && is_done(p.j, k)) {
          ++st.chain_skipped;
          skip = true;
        }
      }
    }
    done[p.i][p.j] = true;
    if (skip) continue;

    ++st.pairs_reduced;
    Poly h = normal_form(s_polynomial(g[p.i], g[p.j]), g);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    g.push_back(h.monic());
    grow();
    add_pairs_for(g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Poly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = g[a].leading_monomial();
      const auto& lb = g[b].leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  // Inter-reduce tails.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Poly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    const Term lead = minimal[a].leading_term();
    Poly tail = minimal[a] - Poly(lead.coeff, lead.mono);
    minimal[a] = (Poly(lead.coeff, lead.mono) + normal_form(tail, others)).monic();
  }
  sort_basis(minimal);
  return minimal;
}

/// True iff every S-polynomial of gens reduces to zero modulo gens. Pairs
/// with coprime leading monomials always do and are not reduced.
template <class Order>
bool is_groebner(const std::vector<BasicPolynomial<Order>>& gens) {
  std::vector<BasicPolynomial<Order>> g;
  for (const auto& f : gens)
    if (!f.is_zero()) g.push_back(f);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
    }
  }
  return true;
}

/// f lies in the ideal whose Gröbner basis is `basis`.
template <class Order>
bool reduces_to_zero(const BasicPolynomial<Order>& f, const std::vector<BasicPolynomial<Order>>& basis) {
  return normal_form(f, basis).is_zero();
}

/// A monomial ideal stored by its minimal generators (an antichain under
/// divisibility), sorted ascending under Order.
template <class Order = AntidiagonalLex>
class BasicMonomialIdeal {
 public:
  BasicMonomialIdeal() = default;

  explicit BasicMonomialIdeal(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return Order::compare(a, b) < 0;
    });
    for (auto& m : gens) {
      if (std::none_of(gens_.begin(), gens_.end(), [&](const Monomial& k) { return k.divides(m); }))
        gens_.push_back(std::move(m));
    }
    std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) { return Order::compare(a, b) < 0; });
  }

  const std::vector<Monomial>& minimal_generators() const { return gens_; }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& k) { return k.divides(m); });
  }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
  }

  /// Intersection via pairwise lcms of minimal generators.
  friend BasicMonomialIdeal intersect(const BasicMonomialIdeal& a, const BasicMonomialIdeal& b) {
    std::vector<Monomial> l;
    for (const auto& x : a.gens_)
      for (const auto& y : b.gens_) l.push_back(lcm(x, y));
    return BasicMonomialIdeal(std::move(l));
  }

  friend bool operator==(const BasicMonomialIdeal&, const BasicMonomialIdeal&) = default;

 private:
  std::vector<Monomial> gens_;
};

using MonomialIdeal = BasicMonomialIdeal<AntidiagonalLex>;

/// Leading-term ideal of <gens>; a Gröbner basis is computed first.
template <class Order>
BasicMonomialIdeal<Order> initial_ideal(const std::vector<BasicPolynomial<Order>>& gens) {
  std::vector<Monomial> lead;
  for (const auto& g : buchberger(gens)) lead.push_back(g.leading_monomial());
  return BasicMonomialIdeal<Order>(std::move(lead));
}

/// Generators of I ∩ J (both given by generators in the antidiagonal order):
/// the t-free part of a Gröbner basis of t*I + (1-t)*J under the elimination
/// order. The result is itself a reduced Gröbner basis of I ∩ J. An empty
/// generator list is the zero ideal.
inline std::vector<Polynomial> intersect(const std::vector<Polynomial>& i_gens, const std::vector<Polynomial>& j_gens,
                                         BuchbergerStats* stats = nullptr) {
  auto nonzero = [](const std::vector<Polynomial>& v) {
    return std::any_of(v.begin(), v.end(), [](const Polynomial& p) { return !p.is_zero(); });
  };
  if (!nonzero(i_gens) || !nonzero(j_gens)) return {};
  const Variable t = Variable::aux();
  const EliminationPolynomial tp = EliminationPolynomial::variable(t);
  const EliminationPolynomial one_minus_t = EliminationPolynomial(Rational(1)) - tp;
  std::vector<EliminationPolynomial> gens;
  for (const auto& f : i_gens) {
    if (f.involves(t)) throw std::invalid_argument("input already uses the auxiliary variable");
    gens.push_back(tp * f.reorder<EliminationOrder>());
  }
  for (const auto& g : j_gens) {
    if (g.involves(t)) throw std::invalid_argument("input already uses the auxiliary variable");
    gens.push_back(one_minus_t * g.reorder<EliminationOrder>());
  }
  std::vector<Polynomial> out;
  for (const auto& g : buchberger(gens, stats))
    if (!g.involves(t)) out.push_back(g.reorder<AntidiagonalLex>());
  sort_basis(out);
  return out;
}

/// Left fold of intersect over several ideals.
inline std::vector<Polynomial> intersect_all(const std::vector<std::vector<Polynomial>>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  std::vector<Polynomial> acc = buchberger(ideals.front());
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k]);
  return acc;
}

/// <a> == <b>, checked by mutual membership against each side's Gröbner basis.
template <class Order>
bool ideals_equal(const std::vector<BasicPolynomial<Order>>& a, const std::vector<BasicPolynomial<Order>>& b) {
  const auto ga = buchberger(a);
  const auto gb = buchberger(b);
  return std::all_of(a.begin(), a.end(), [&](const auto& f) { return reduces_to_zero(f, gb); }) &&
         std::all_of(b.begin(), b.end(), [&](const auto& f) { return reduces_to_zero(f, ga); });
}

}  // namespace nwunion
