#pragma once

// Schemes cut out by northwest rank conditions and their Fulton generators.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "determinant.hpp"
#include "permutation.hpp"
#include "poly_io.hpp"

namespace nwunion {

/// rank of the northwest i x j sub-matrix is at most r.
struct RankCondition {
  int i = 0;
  int j = 0;
  int r = 0;

  bool vacuous() const { return r >= std::min(i, j); }

  friend auto operator<=>(const RankCondition&, const RankCondition&) = default;
};

struct RankConditionSpec {
  int n = 0;
  std::vector<RankCondition> conditions;
  std::string label;

  void validate() const {
    if (n < 1) throw std::invalid_argument("ambient size must be positive");
    for (const auto& c : conditions) {
      if (c.i < 1 || c.i > n || c.j < 1 || c.j > n)
        throw std::invalid_argument("rank condition (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                                    ") outside the " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
      if (c.r < 0 || c.r > std::min(c.i, c.j))
        throw std::invalid_argument("rank bound " + std::to_string(c.r) + " invalid for a " +
                                    std::to_string(c.i) + "x" + std::to_string(c.j) + " sub-matrix");
    }
  }
};

struct FultonGenerator {
  IndexSet rows;
  IndexSet cols;
  Polynomial poly;
  Antidiagonal antidiag;
  RankCondition source;
};

/// One condition per essential box, with the box's rank.
inline RankConditionSpec spec_from_permutation(const PartialPermutation& p) {
  RankConditionSpec spec{p.size(), {}, p.label()};
  for (const auto& e : essential_set(p)) spec.conditions.push_back({e.cell.row, e.cell.col, e.rank});
  return spec;
}

/// One condition per cell of the rank matrix, vacuous ones included.
inline RankConditionSpec spec_from_rank_matrix(const PartialPermutation& p) {
  const auto ranks = rank_matrix(p);
  RankConditionSpec spec{p.size(), {}, p.label()};
  for (int i = 1; i <= p.size(); ++i)
    for (int j = 1; j <= p.size(); ++j) spec.conditions.push_back({i, j, ranks(i, j)});
  return spec;
}

/// All k-element subsets of 1..m in lexicographic order.
inline std::vector<IndexSet> subsets(int m, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > m) return out;
  IndexSet cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t) cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

/// Minors of size r+1 of each northwest i x j sub-matrix, conditions in list
/// order, rows outer and cols inner, both in lexicographic subset order.
inline std::vector<FultonGenerator> fulton_generators(const RankConditionSpec& spec) {
  spec.validate();
  std::vector<FultonGenerator> out;
  for (const auto& c : spec.conditions) {
    if (c.vacuous()) continue;
    const auto row_sets = subsets(c.i, c.r + 1);
    const auto col_sets = subsets(c.j, c.r + 1);
    for (const auto& rows : row_sets) {
      for (const auto& cols : col_sets) {
        out.push_back({rows, cols, determinant(rows, cols, spec.n), antidiagonal_of(rows, cols, spec.n), c});
      }
    }
  }
  return out;
}

inline std::vector<Polynomial> fulton_polynomials(const RankConditionSpec& spec) {
  std::vector<Polynomial> out;
  for (auto& g : fulton_generators(spec)) out.push_back(std::move(g.poly));
  return out;
}

/// Distinct antidiagonals of the Fulton generators, in first-seen order.
inline std::vector<Antidiagonal> antidiagonals_of_spec(const RankConditionSpec& spec) {
  std::vector<Antidiagonal> out;
  for (const auto& g : fulton_generators(spec))
    if (std::find(out.begin(), out.end(), g.antidiag) == out.end()) out.push_back(g.antidiag);
  return out;
}

// ---- spec files ------------------------------------------------------------
//
//   {"n":4, "label":"X", "conditions":[{"i":3,"j":3,"r":2}, ...]}
//   {"n":4, "permutation":"1 4 2 3"}
//   {"permutation":"2 * 1", "construction":"all-rank-matrix"}
//
// "construction" is "essential" (default) or "all-rank-matrix".

inline RankConditionSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("spec must be a JSON object");
  RankConditionSpec spec;
  if (j.contains("permutation")) {
    const auto p = parse_one_line(j.at("permutation").get<std::string>());
    const std::string construction = j.value("construction", std::string("essential"));
    if (construction == "essential") {
      spec = spec_from_permutation(p);
    } else if (construction == "all-rank-matrix") {
      spec = spec_from_rank_matrix(p);
    } else {
      throw std::invalid_argument("unknown construction '" + construction + "'");
    }
    if (j.contains("n") && j.at("n").get<int>() != p.size())
      throw std::invalid_argument("spec n does not match the permutation length");
  } else {
    if (!j.contains("n")) throw std::invalid_argument("spec needs \"n\"");
    spec.n = j.at("n").get<int>();
    for (const auto& c : j.value("conditions", nlohmann::json::array()))
      spec.conditions.push_back({c.at("i").get<int>(), c.at("j").get<int>(), c.at("r").get<int>()});
  }
  if (j.contains("label")) spec.label = j.at("label").get<std::string>();
  spec.validate();
  return spec;
}

inline nlohmann::json to_json(const RankConditionSpec& spec) {
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& c : spec.conditions) conds.push_back({{"i", c.i}, {"j", c.j}, {"r", c.r}});
  return {{"n", spec.n}, {"label", spec.label}, {"conditions", conds}};
}

inline RankConditionSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("spec file '" + path + "': " + e.what());
  }
  return spec_from_json(j);
}

}  // namespace nwunion
