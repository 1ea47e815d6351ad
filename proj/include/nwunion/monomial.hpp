#pragma once

// Monomials in the matrix variables m[i,j] (plus one auxiliary elimination
// variable t) and the two term orders the library needs.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <boost/container/small_vector.hpp>

#include "cell.hpp"

namespace nwunion {

/// The variable m[row,col]. The auxiliary variable t used for ideal
/// intersection is the reserved cell (0,0).
struct Variable {
  Cell cell;

  static constexpr Variable aux() { return Variable{Cell{0, 0}}; }
  constexpr bool is_aux() const { return cell.row == 0 && cell.col == 0; }

  friend constexpr bool operator==(const Variable&, const Variable&) = default;
};

/// Strict "greater variable first" ordering: m[1,n] > m[1,n-1] > ... > m[1,1]
/// > m[2,n] > ... > m[n,1], with t above everything (row 0).
struct VariableGreater {
  constexpr bool operator()(const Variable& a, const Variable& b) const {
    if (a.cell.row != b.cell.row) return a.cell.row < b.cell.row;
    return a.cell.col > b.cell.col;
  }
};

/// Product of variables with positive exponents. Factors are kept sorted from
/// greatest to smallest variable so lexicographic comparison is a linear scan.
class Monomial {
 public:
  struct Factor {
    Variable var;
    int exp = 0;
    friend constexpr bool operator==(const Factor&, const Factor&) = default;
  };
  using Storage = boost::container::small_vector<Factor, 6>;

  Monomial() = default;

  static Monomial of(Variable v, int exp = 1) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) m.factors_.push_back({v, exp});
    return m;
  }
  static Monomial of(Cell c, int exp = 1) { return of(Variable{c}, exp); }

  /// Product over a list of cells (repeats raise exponents).
  template <class Range>
  static Monomial product_of(const Range& cells) {
    Monomial m;
    for (const Cell& c : cells) m = m * of(c);
    return m;
  }

  const Storage& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.exp;
    return d;
  }

  int degree_of(Variable v) const {
    for (const auto& f : factors_)
      if (f.var == v) return f.exp;
    return 0;
  }

  bool is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp == 1; });
  }

  /// Factors in row-major ascending order, the canonical printing order.
  Storage row_major() const {
    Storage out = factors_;
    std::sort(out.begin(), out.end(),
              [](const Factor& a, const Factor& b) { return a.var.cell < b.var.cell; });
    return out;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    merge(a, b, r, [](int x, int y) { return x + y; });
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    merge(a, b, r, [](int x, int y) { return std::max(x, y); });
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    merge(a, b, r, [](int x, int y) { return std::min(x, y); });
    return r;
  }

  /// True iff *this divides b.
  bool divides(const Monomial& b) const {
    auto it = b.factors_.begin();
    const VariableGreater greater;
    for (const auto& f : factors_) {
      while (it != b.factors_.end() && greater(it->var, f.var)) ++it;
      if (it == b.factors_.end() || !(it->var == f.var) || it->exp < f.exp) return false;
      ++it;
    }
    return true;
  }

  /// Exact quotient a / b; throws if b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::invalid_argument("monomial division is not exact");
    Monomial r;
    merge(a, b, r, [](int x, int y) { return x - y; });
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  template <class Op>
  static void merge(const Monomial& a, const Monomial& b, Monomial& out, Op op) {
    const VariableGreater greater;
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    auto push = [&](Variable v, int e) {
      if (e != 0) out.factors_.push_back({v, e});
    };
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
      if (ib == b.factors_.end() || (ia != a.factors_.end() && greater(ia->var, ib->var))) {
        push(ia->var, op(ia->exp, 0));
        ++ia;
      } else if (ia == a.factors_.end() || greater(ib->var, ia->var)) {
        push(ib->var, op(0, ib->exp));
        ++ib;
      } else {
        push(ia->var, op(ia->exp, ib->exp));
        ++ia;
        ++ib;
      }
    }
  }

  Storage factors_;
};

/// Runtime tag for the supported orders.
enum class TermOrder {
  kAntidiagonalLex,  ///< lex in VariableGreater order
  kElimination,      ///< t-degree first, then kAntidiagonalLex on the m-block
};

/// Lexicographic order for m[1,n] > m[1,n-1] > ... > m[n,1]. Every minor of
/// the generic matrix has its antidiagonal term as leading term.
struct AntidiagonalLex {
  static constexpr TermOrder kind = TermOrder::kAntidiagonalLex;

  static std::strong_ordering compare(const Monomial& a, const Monomial& b) {
    return compare_factors(a.factors().begin(), a.factors().end(), b.factors().begin(), b.factors().end());
  }

  using Iter = Monomial::Storage::const_iterator;

  static std::strong_ordering compare_factors(Iter a, Iter a_end, Iter b, Iter b_end) {
    const VariableGreater greater;
    for (; a != a_end && b != b_end; ++a, ++b) {
      if (!(a->var == b->var))
        return greater(a->var, b->var) ? std::strong_ordering::greater : std::strong_ordering::less;
      if (a->exp != b->exp) return a->exp <=> b->exp;
    }
    if (a != a_end) return std::strong_ordering::greater;
    if (b != b_end) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
};

/// Block order: compare the degree in t, then AntidiagonalLex on the rest.
struct EliminationOrder {
  static constexpr TermOrder kind = TermOrder::kElimination;

  static std::strong_ordering compare(const Monomial& a, const Monomial& b) {
    const Variable t = Variable::aux();
    if (auto c = a.degree_of(t) <=> b.degree_of(t); c != 0) return c;
    // t sorts first among the factors when present.
    auto skip = [&](const Monomial& m) {
      auto it = m.factors().begin();
      if (it != m.factors().end() && it->var == t) ++it;
      return it;
    };
    return AntidiagonalLex::compare_factors(skip(a), a.factors().end(), skip(b), b.factors().end());
  }
};

inline std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b) {
  switch (order) {
    case TermOrder::kAntidiagonalLex:
      return AntidiagonalLex::compare(a, b);
    case TermOrder::kElimination:
      return EliminationOrder::compare(a, b);
  }
  throw std::logic_error("unknown term order");
}

template <class Order>
struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return Order::compare(a, b) > 0; }
};

}  // namespace nwunion
