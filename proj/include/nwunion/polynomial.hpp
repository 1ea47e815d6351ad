#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monomial.hpp"

namespace nwunion {

using Rational = boost::multiprecision::cpp_rational;

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q. Terms are nonzero, pairwise distinct and sorted
/// from largest to smallest monomial under Order, so equality is structural.
template <class Order>
class BasicPolynomial {
 public:
  using order_type = Order;

  BasicPolynomial() = default;

  /// Constant polynomial.
  explicit BasicPolynomial(Rational c) {
    if (c != 0) terms_.push_back({std::move(c), Monomial{}});
  }

  BasicPolynomial(Rational c, Monomial m) {
    if (c != 0) terms_.push_back({std::move(c), std::move(m)});
  }

  static BasicPolynomial variable(Cell c) { return BasicPolynomial(Rational(1), Monomial::of(c)); }
  static BasicPolynomial variable(Variable v) { return BasicPolynomial(Rational(1), Monomial::of(v)); }

  /// Builds from arbitrary terms; duplicates are combined and zeros dropped.
  static BasicPolynomial from_terms(std::vector<Term> terms) {
    BasicPolynomial p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Largest term under Order. Throws on the zero polynomial.
  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool involves(Variable v) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.degree_of(v) > 0; });
  }

  /// Scaled so the leading coefficient is 1. Zero stays zero.
  BasicPolynomial monic() const {
    if (is_zero()) return *this;
    BasicPolynomial r = *this;
    const Rational lc = leading_coeff();
    for (auto& t : r.terms_) t.coeff /= lc;
    return r;
  }

  /// Returns *this + c * m * g. Multiplying by a monomial preserves the order
  /// of g's terms, so this is a single merge.
  BasicPolynomial add_scaled(const Rational& c, const Monomial& m, const BasicPolynomial& g) const {
    BasicPolynomial r;
    if (c == 0) return *this;
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
      if (b == g.terms_.end()) {
        r.terms_.push_back(*a++);
        continue;
      }
      Monomial bm = b->mono * m;
      auto cmp = a == terms_.end() ? std::strong_ordering::less : Order::compare(a->mono, bm);
      if (cmp > 0) {
        r.terms_.push_back(*a++);
      } else if (cmp < 0) {
        r.terms_.push_back({c * b->coeff, std::move(bm)});
        ++b;
      } else {
        Rational s = a->coeff + c * b->coeff;
        if (s != 0) r.terms_.push_back({std::move(s), std::move(bm)});
        ++a;
        ++b;
      }
    }
    return r;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& f, const BasicPolynomial& g) {
    return f.add_scaled(Rational(1), Monomial{}, g);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& f, const BasicPolynomial& g) {
    return f.add_scaled(Rational(-1), Monomial{}, g);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& f) { return BasicPolynomial{}.add_scaled(Rational(-1), Monomial{}, f); }

  friend BasicPolynomial operator*(const BasicPolynomial& f, const BasicPolynomial& g) {
    std::vector<Term> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) out.push_back({a.coeff * b.coeff, a.mono * b.mono});
    return from_terms(std::move(out));
  }

  friend BasicPolynomial operator*(const Rational& c, const BasicPolynomial& f) {
    return BasicPolynomial{}.add_scaled(c, Monomial{}, f);
  }

  BasicPolynomial& operator+=(const BasicPolynomial& g) { return *this = *this + g; }
  BasicPolynomial& operator-=(const BasicPolynomial& g) { return *this = *this - g; }
  BasicPolynomial& operator*=(const BasicPolynomial& g) { return *this = *this * g; }

  /// Evaluates with `value(variable)` supplying each variable's value.
  template <class Value, class Fn>
  Value evaluate(Fn&& value) const {
    Value total = 0;
    for (const auto& t : terms_) {
      Value prod = static_cast<Value>(t.coeff);
      for (const auto& f : t.mono.factors())
        for (int e = 0; e < f.exp; ++e) prod *= value(f.var);
      total += prod;
    }
    return total;
  }

  /// Re-sorts under another order.
  template <class Other>
  BasicPolynomial<Other> reorder() const {
    return BasicPolynomial<Other>::from_terms(terms_);
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return Order::compare(a.mono, b.mono) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coeff += t.coeff;
      } else {
        if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

using Polynomial = BasicPolynomial<AntidiagonalLex>;
using EliminationPolynomial = BasicPolynomial<EliminationOrder>;

/// (coefficient, monomial) of the largest term.
template <class Order>
std::pair<Rational, Monomial> leading_term(const BasicPolynomial<Order>& f) {
  const Term& t = f.leading_term();
  return {t.coeff, t.mono};
}

/// Total order on polynomials used for deterministic sorting: compare terms
/// from the top, by monomial then coefficient; a proper prefix sorts first.
template <class Order>
bool canonical_less(const BasicPolynomial<Order>& a, const BasicPolynomial<Order>& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (auto c = Order::compare(ta[i].mono, tb[i].mono); c != 0) return c < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

}  // namespace nwunion
