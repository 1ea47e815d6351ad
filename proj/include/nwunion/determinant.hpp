#pragma once

// Antidiagonals and minors of the generic matrix M = (m[i,j]).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cell.hpp"
#include "polynomial.hpp"

namespace nwunion {

using IndexSet = std::vector<int>;

/// NE to SW chain of cells: rows strictly increasing, columns strictly
/// decreasing. The antidiagonal of the minor on rows(A) x cols(A).
class Antidiagonal {
 public:
  Antidiagonal() = default;

  explicit Antidiagonal(CellList cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("antidiagonal must be nonempty");
    for (std::size_t i = 1; i < cells_.size(); ++i) {
      if (cells_[i].row <= cells_[i - 1].row || cells_[i].col >= cells_[i - 1].col)
        throw std::invalid_argument("cells do not form a NE-to-SW antidiagonal");
    }
    for (const Cell& c : cells_)
      if (c.row < 1 || c.col < 1) throw std::invalid_argument("antidiagonal cell out of range");
  }

  const CellList& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  IndexSet rows() const {
    IndexSet r;
    for (const Cell& c : cells_) r.push_back(c.row);
    return r;
  }

  /// Columns in ascending order.
  IndexSet cols() const {
    IndexSet r;
    for (auto it = cells_.rbegin(); it != cells_.rend(); ++it) r.push_back(it->col);
    return r;
  }

  bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

  /// The antidiagonal term: product of the variables on the cells.
  Monomial term() const { return Monomial::product_of(cells_); }

  friend auto operator<=>(const Antidiagonal&, const Antidiagonal&) = default;
  friend bool operator==(const Antidiagonal&, const Antidiagonal&) = default;

 private:
  CellList cells_;
};

namespace detail {

inline void check_minor_indices(const IndexSet& rows, const IndexSet& cols, int n) {
  if (rows.empty() || rows.size() != cols.size())
    throw std::invalid_argument("minor needs equally many rows and columns (at least one)");
  auto check = [n](const IndexSet& s, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || (n > 0 && s[i] > n))
        throw std::invalid_argument(std::string(what) + " index " + std::to_string(s[i]) + " out of range");
      if (i > 0 && s[i] <= s[i - 1])
        throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
    }
  };
  check(rows, "row");
  check(cols, "column");
}

inline IndexSet sorted(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// Cells (r_1,c_k), (r_2,c_{k-1}), ..., (r_k,c_1) for ascending rows and cols.
/// `n` bounds the indices when positive.
inline Antidiagonal antidiagonal_of(IndexSet rows, IndexSet cols, int n = 0) {
  rows = detail::sorted(std::move(rows));
  cols = detail::sorted(std::move(cols));
  detail::check_minor_indices(rows, cols, n);
  CellList cells;
  const std::size_t k = rows.size();
  for (std::size_t i = 0; i < k; ++i) cells.push_back({rows[i], cols[k - 1 - i]});
  return Antidiagonal(std::move(cells));
}

/// Full signed expansion of the minor of M on the given rows and columns,
/// by Laplace expansion along the top row with memoized sub-minors.
template <class Order = AntidiagonalLex>
BasicPolynomial<Order> determinant(IndexSet rows, IndexSet cols, int n = 0) {
  using Poly = BasicPolynomial<Order>;
  rows = detail::sorted(std::move(rows));
  cols = detail::sorted(std::move(cols));
  detail::check_minor_indices(rows, cols, n);
  const int k = static_cast<int>(rows.size());
  if (k > 20) throw std::invalid_argument("minor too large");

  // Key: bitmask of the columns still available; the current row is implied
  // by how many columns have been used.
  std::map<std::uint32_t, Poly> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> Poly {
    const int used = k - std::popcount(mask);
    if (used == k) return Poly(Rational(1));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Poly acc;
    int sign = 1;
    for (int j = 0; j < k; ++j) {
      if (!(mask & (1u << j))) continue;
      const Poly entry = Poly::variable(Cell{rows[static_cast<std::size_t>(used)], cols[static_cast<std::size_t>(j)]});
      acc += Rational(sign) * (entry * self(self, mask & ~(1u << j)));
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (1u << k) - 1);
}

template <class Order = AntidiagonalLex>
BasicPolynomial<Order> determinant(const Antidiagonal& a) {
  return determinant<Order>(a.rows(), a.cols());
}

}  // namespace nwunion
