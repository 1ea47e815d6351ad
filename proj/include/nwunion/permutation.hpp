#pragma once

// Partial permutations and their combinatorial shadows: permutation matrices,
// Rothe diagrams, essential sets and rank matrices.

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cell.hpp"

namespace nwunion {

/// A permutation of 1..n in one-line notation where some images may be
/// undefined (written `*`). Undefined entries contribute nothing to ranks.
class PartialPermutation {
 public:
  PartialPermutation() = default;

  /// Images are 1-based column indices; std::nullopt marks an undefined entry.
  explicit PartialPermutation(std::vector<std::optional<int>> images)
      : images_(std::move(images)) {
    const int n = size();
    if (n == 0) throw std::invalid_argument("partial permutation must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& v : images_) {
      if (!v) continue;
      if (*v < 1 || *v > n)
        throw std::invalid_argument("permutation value " + std::to_string(*v) +
                                    " out of range 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(*v)])
        throw std::invalid_argument("duplicate permutation value " + std::to_string(*v));
      seen[static_cast<std::size_t>(*v)] = true;
    }
  }

  static PartialPermutation identity(int n) {
    std::vector<std::optional<int>> v;
    for (int i = 1; i <= n; ++i) v.emplace_back(i);
    return PartialPermutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }

  /// pi(i) for 1 <= i <= n.
  std::optional<int> operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  const std::vector<std::optional<int>>& images() const { return images_; }

  bool is_honest() const {
    return std::all_of(images_.begin(), images_.end(), [](const auto& v) { return v.has_value(); });
  }

  /// Row holding the 1 in column j, if any.
  std::optional<int> inverse(int j) const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) == j) return i;
    return std::nullopt;
  }

  /// Space separated one-line notation, e.g. "2 * 1".
  std::string one_line() const {
    std::string out;
    for (const auto& v : images_) {
      if (!out.empty()) out += ' ';
      out += v ? std::to_string(*v) : std::string("*");
    }
    return out;
  }

  /// Compact label: digits run together when n < 10 ("2143"), else one_line().
  std::string label() const {
    if (size() >= 10) return one_line();
    std::string out;
    for (const auto& v : images_) out += v ? static_cast<char>('0' + *v) : '*';
    return out;
  }

  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;

 private:
  std::vector<std::optional<int>> images_;
};

/// Parses whitespace or comma separated tokens; `*` is an undefined entry.
inline PartialPermutation parse_one_line(std::string_view text) {
  std::vector<std::optional<int>> images;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token == "*") {
      images.emplace_back(std::nullopt);
    } else {
      if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad permutation token '" + token + "'");
      int v = 0;
      try {
        v = std::stoi(token);
      } catch (const std::out_of_range&) {
        throw std::invalid_argument("permutation value '" + token + "' out of range");
      }
      images.emplace_back(v);
    }
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (images.empty()) throw std::invalid_argument("empty permutation");
  return PartialPermutation(std::move(images));
}

/// n x n grid of ranks, 1-based accessors.
class RankMatrix {
 public:
  explicit RankMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n), 0) {}

  int size() const { return n_; }
  int operator()(int i, int j) const { return data_[index(i, j)]; }
  int& operator()(int i, int j) { return data_[index(i, j)]; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) out[static_cast<std::size_t>(i - 1)].push_back((*this)(i, j));
    return out;
  }

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }

  int n_;
  std::vector<int> data_;
};

/// Entry (i,j) is the number of defined k <= i with pi(k) <= j.
inline RankMatrix rank_matrix(const PartialPermutation& p) {
  const int n = p.size();
  RankMatrix r(n);
  for (int i = 1; i <= n; ++i) {
    const auto v = p(i);
    for (int j = 1; j <= n; ++j) {
      const int above = i > 1 ? r(i - 1, j) : 0;
      r(i, j) = above + ((v && *v <= j) ? 1 : 0);
    }
  }
  return r;
}

/// Cells not crossed out by any 1: nothing weakly above in the same column and
/// nothing weakly left in the same row. Row-major order.
inline CellList rothe_diagram(const PartialPermutation& p) {
  const int n = p.size();
  CellList cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      bool crossed = false;
      for (int k = 1; k <= i && !crossed; ++k) crossed = (p(k) == j);
      for (int k = 1; k <= j && !crossed; ++k) crossed = (p(i) == k);
      if (!crossed) cells.push_back({i, j});
    }
  }
  return cells;
}

struct EssentialBox {
  Cell cell;
  int rank = 0;

  friend bool operator==(const EssentialBox&, const EssentialBox&) = default;
};

/// Diagram cells with no diagram cell immediately south or east, each with
/// its rank-matrix entry. Row-major order.
inline std::vector<EssentialBox> essential_set(const PartialPermutation& p) {
  const auto diagram = rothe_diagram(p);
  const auto ranks = rank_matrix(p);
  auto in_diagram = [&](Cell c) { return std::binary_search(diagram.begin(), diagram.end(), c); };
  std::vector<EssentialBox> out;
  for (const Cell& c : diagram) {
    if (in_diagram({c.row + 1, c.col}) || in_diagram({c.row, c.col + 1})) continue;
    out.push_back({c, ranks(c.row, c.col)});
  }
  return out;
}

/// ASCII picture: `1` for a permutation entry, `e` for an essential box,
/// `o` for any other diagram box and `.` for crossed-out cells.
inline std::string render_diagram(const PartialPermutation& p) {
  const int n = p.size();
  const auto diagram = rothe_diagram(p);
  const auto ess = essential_set(p);
  std::ostringstream os;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      char ch = '.';
      if (p(i) == j) {
        ch = '1';
      } else if (std::any_of(ess.begin(), ess.end(), [&](const EssentialBox& e) { return e.cell == Cell{i, j}; })) {
        ch = 'e';
      } else if (std::binary_search(diagram.begin(), diagram.end(), Cell{i, j})) {
        ch = 'o';
      }
      if (j > 1) os << ' ';
      os << ch;
    }
    os << '\n';
  }
  return os.str();
}

/// All permutations of 1..n in lexicographic order.
inline std::vector<PartialPermutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::vector<PartialPermutation> out;
  do {
    out.emplace_back(std::vector<std::optional<int>>(v.begin(), v.end()));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace nwunion
