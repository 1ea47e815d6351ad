#pragma once

// Gröbner basis for an intersection of northwest-rank-condition ideals, built
// as products of determinants.
//
// For one antidiagonal A_i per input ideal: place a dot of color i on every
// cell of A_i, join consecutive dots of the same color, and treat dots on the
// same cell as joined. In each connected component, take the longest NE-to-SW
// chain of occupied cells (ties: lexicographically least cell sequence, i.e.
// the most northwest chain), multiply its determinant into the generator,
// delete its cells and recurse on what remains. After a deletion, the
// surviving dots of one color stay joined in their original order.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "determinant.hpp"
#include "nw_ideal.hpp"
#include "poly_io.hpp"

namespace nwunion {

/// Colored dots: color k occupies the cells of colors[k], listed NE to SW.
class ColoredDiagram {
 public:
  ColoredDiagram() = default;

  explicit ColoredDiagram(std::vector<CellList> colors) : colors_(std::move(colors)) {
    colors_.erase(std::remove_if(colors_.begin(), colors_.end(), [](const CellList& c) { return c.empty(); }),
                  colors_.end());
    for (const auto& c : colors_) (void)Antidiagonal(c);  // validates the chain shape
  }

  static ColoredDiagram from(const std::vector<Antidiagonal>& antidiags) {
    std::vector<CellList> colors;
    for (const auto& a : antidiags) colors.push_back(a.cells());
    return ColoredDiagram(std::move(colors));
  }

  const std::vector<CellList>& colors() const { return colors_; }

  /// Occupied cells, sorted.
  CellList cells() const {
    std::set<Cell> s;
    for (const auto& c : colors_) s.insert(c.begin(), c.end());
    return {s.begin(), s.end()};
  }

  /// Colors occupying `c`, in color order.
  std::vector<int> colors_at(Cell c) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < colors_.size(); ++k)
      if (std::find(colors_[k].begin(), colors_[k].end(), c) != colors_[k].end()) out.push_back(static_cast<int>(k));
    return out;
  }

  /// Same colors with `removed` cells deleted; consecutive survivors stay joined.
  ColoredDiagram without(const CellList& removed) const {
    std::vector<CellList> out;
    for (const auto& color : colors_) {
      CellList kept;
      for (const Cell& c : color)
        if (std::find(removed.begin(), removed.end(), c) == removed.end()) kept.push_back(c);
      out.push_back(std::move(kept));
    }
    return ColoredDiagram(std::move(out));
  }

  /// Colors restricted to a set of cells (a union of whole colors).
  ColoredDiagram restricted_to(const CellList& cells) const {
    std::vector<CellList> out;
    for (const auto& color : colors_) {
      if (!color.empty() && std::binary_search(cells.begin(), cells.end(), color.front())) out.push_back(color);
    }
    return ColoredDiagram(std::move(out));
  }

 private:
  std::vector<CellList> colors_;
};

struct Component {
  CellList cells;                          ///< sorted by (row, col)
  std::map<Cell, std::vector<int>> colors;  ///< colors present on each cell
};

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Northeast-most cell: smallest row, then largest column.
inline Cell northeast_most(const CellList& cells) {
  return *std::min_element(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
}

}  // namespace detail

/// Connected components of the diagram, ordered by their northeast-most cell.
inline std::vector<Component> components(const ColoredDiagram& diagram) {
  const CellList cells = diagram.cells();
  auto index = [&](Cell c) {
    return static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), c) - cells.begin());
  };
  detail::DisjointSets sets(cells.size());
  for (const auto& color : diagram.colors())
    for (std::size_t k = 1; k < color.size(); ++k) sets.unite(index(color[k - 1]), index(color[k]));

  std::map<std::size_t, CellList> groups;
  for (std::size_t k = 0; k < cells.size(); ++k) groups[sets.find(k)].push_back(cells[k]);

  std::vector<Component> out;
  for (auto& [root, members] : groups) {
    Component comp{members, {}};
    for (const Cell& c : members) comp.colors[c] = diagram.colors_at(c);
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return detail::northeast_most(a.cells) < detail::northeast_most(b.cells);
  });
  return out;
}

/// Longest chain of the given cells with strictly increasing rows and
/// strictly decreasing columns. Among longest chains, the lexicographically
/// least sequence of (row, col) pairs read NE to SW.
inline Antidiagonal longest_antidiagonal(CellList cells) {
  if (cells.empty()) throw std::invalid_argument("longest antidiagonal of an empty component");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  const std::size_t m = cells.size();
  auto follows = [&](std::size_t a, std::size_t b) {
    return cells[b].row > cells[a].row && cells[b].col < cells[a].col;
  };
  // best[a]: length of the longest chain starting at cell a.
  std::vector<int> best(m, 1);
  for (std::size_t a = m; a-- > 0;)
    for (std::size_t b = a + 1; b < m; ++b)
      if (follows(a, b)) best[a] = std::max(best[a], best[b] + 1);

  const int length = *std::max_element(best.begin(), best.end());
  CellList chain;
  // Cells are sorted, so the first admissible index is the lexicographically
  // least choice at every step.
  std::size_t cur = 0;
  while (best[cur] != length) ++cur;
  chain.push_back(cells[cur]);
  for (int need = length - 1; need > 0; --need) {
    std::size_t next = cur + 1;
    while (!(follows(cur, next) && best[next] == need)) ++next;
    chain.push_back(cells[next]);
    cur = next;
  }
  return Antidiagonal(std::move(chain));
}

inline Antidiagonal longest_antidiagonal(const Component& comp) { return longest_antidiagonal(comp.cells); }

/// Repeated longest-chain extraction on one component of `diagram`.
inline std::vector<Antidiagonal> extract_factors(const Component& comp, const ColoredDiagram& diagram) {
  if (comp.cells.empty()) throw std::invalid_argument("cannot extract factors from an empty component");
  const ColoredDiagram local = diagram.restricted_to(comp.cells);
  const Antidiagonal b = longest_antidiagonal(comp);
  std::vector<Antidiagonal> factors{b};
  const ColoredDiagram rest = local.without(b.cells());
  for (const auto& sub : components(rest)) {
    auto more = extract_factors(sub, rest);
    factors.insert(factors.end(), more.begin(), more.end());
  }
  return factors;
}

struct GeneratorProduct {
  std::vector<Antidiagonal> inputs;
  std::vector<Antidiagonal> factors;  ///< extraction order
  Polynomial poly;
};

/// g_{A_1..A_r}: product of det(B) over every extracted chain B.
inline GeneratorProduct generator(const std::vector<Antidiagonal>& antidiags) {
  GeneratorProduct g{antidiags, {}, Polynomial(Rational(1))};
  const ColoredDiagram diagram = ColoredDiagram::from(antidiags);
  for (const auto& comp : components(diagram)) {
    for (auto& b : extract_factors(comp, diagram)) {
      g.poly *= determinant(b);
      g.factors.push_back(std::move(b));
    }
  }
  return g;
}

/// One generator per choice of a Fulton antidiagonal from each spec, in
/// odometer order (last spec varies fastest), keeping the first of any
/// generators with equal polynomials. A spec with no nontrivial condition is
/// the whole matrix space, so the union is too and the basis is empty.
inline std::vector<GeneratorProduct> union_basis(const std::vector<RankConditionSpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("union needs at least one spec");
  for (const auto& s : specs) {
    s.validate();
    if (s.n != specs.front().n) throw std::invalid_argument("specs have different ambient sizes");
  }
  std::vector<std::vector<Antidiagonal>> lists;
  for (const auto& s : specs) {
    lists.push_back(antidiagonals_of_spec(s));
    if (lists.back().empty()) return {};
  }
  std::vector<GeneratorProduct> out;
  std::vector<std::size_t> pick(lists.size(), 0);
  while (true) {
    std::vector<Antidiagonal> chosen;
    for (std::size_t k = 0; k < lists.size(); ++k) chosen.push_back(lists[k][pick[k]]);
    GeneratorProduct g = generator(chosen);
    if (std::none_of(out.begin(), out.end(), [&](const GeneratorProduct& h) { return h.poly == g.poly; }))
      out.push_back(std::move(g));
    std::size_t k = lists.size();
    while (k > 0) {
      --k;
      if (++pick[k] < lists[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
  }
}

inline std::vector<Polynomial> polynomials_of(const std::vector<GeneratorProduct>& basis) {
  std::vector<Polynomial> out;
  for (const auto& g : basis) out.push_back(g.poly);
  return out;
}

// ---- output ----------------------------------------------------------------

/// |m[1,1] m[1,2]; m[2,1] m[2,2]|
inline std::string render_determinant(const Antidiagonal& a) {
  std::string out = "|";
  const auto rows = a.rows();
  const auto cols = a.cols();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += "; ";
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j > 0) out += ' ';
      out += "m[" + std::to_string(rows[i]) + ',' + std::to_string(cols[j]) + ']';
    }
  }
  return out + "|";
}

inline std::string render_factors(const GeneratorProduct& g) {
  std::string out;
  for (const auto& b : g.factors) {
    if (!out.empty()) out += ' ';
    out += render_determinant(b);
  }
  return out.empty() ? "1" : out;
}

inline nlohmann::json to_json(const Antidiagonal& a) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : a.cells()) cells.push_back({c.row, c.col});
  return cells;
}

inline nlohmann::json to_json(const GeneratorProduct& g) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& b : g.factors) factors.push_back({{"rows", b.rows()}, {"cols", b.cols()}});
  return {{"factors", factors}, {"poly", to_json(g.poly)}};
}

/// Rebuilds a generator from its JSON form; the polynomial is re-expanded
/// from the factors and must match the stored one.
inline GeneratorProduct generator_from_json(const nlohmann::json& j) {
  GeneratorProduct g{{}, {}, Polynomial(Rational(1))};
  for (const auto& f : j.at("factors")) {
    auto b = antidiagonal_of(f.at("rows").get<IndexSet>(), f.at("cols").get<IndexSet>());
    g.poly *= determinant(b);
    g.factors.push_back(std::move(b));
  }
  if (j.contains("poly") && polynomial_from_json(j.at("poly")) != g.poly)
    throw std::invalid_argument("generator polynomial does not match its factors");
  return g;
}

}  // namespace nwunion
