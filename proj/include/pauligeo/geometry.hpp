// Copyright 2026 The pauligeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "pauligeo/cliques.hpp"
#include "pauligeo/graph.hpp"
#include "pauligeo/independent.hpp"
#include "pauligeo/pauli_operator.hpp"

namespace pauligeo {

inline constexpr int kGeometryDimensionCap = 32;

/// Commutation graph over a fixed operator list: vertex i is operators[i],
/// edges join commuting pairs.
inline Graph pauli_graph(const SystemSpec& spec,
                         const std::vector<PauliOperator>& operators) {
  Graph g(static_cast<int>(operators.size()));
  for (size_t i = 0; i < operators.size(); ++i) {
    for (size_t j = i + 1; j < operators.size(); ++j) {
      if (commutes(operators[i], operators[j], spec)) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

/// Point-line geometry of a system: points are the non-identity operators in
/// canonical order, lines the maximum-size maximal commuting sets.
struct IncidenceGeometry {
  SystemSpec spec;
  std::vector<PauliOperator> points;
  Graph commutation;
  std::vector<std::vector<int>> lines;  // ascending point indices, list lexicographic

  int line_size() const { return lines.empty() ? 0 : static_cast<int>(lines.front().size()); }

  bool point_on_line(int point, int line) const {
    const auto& l = lines.at(line);
    return std::binary_search(l.begin(), l.end(), point);
  }

  /// Index of an operator in the canonical point order.
  int point_index(const PauliOperator& op) const {
    auto it = std::lower_bound(points.begin(), points.end(), op);
    if (it == points.end() || *it != op) {
      throw std::invalid_argument("point_index: operator is not a point");
    }
    return static_cast<int>(it - points.begin());
  }

  /// Indices of the lines through a point, ascending.
  std::vector<int> lines_through(int point) const {
    std::vector<int> out;
    for (size_t l = 0; l < lines.size(); ++l) {
      if (point_on_line(point, static_cast<int>(l))) out.push_back(static_cast<int>(l));
    }
    return out;
  }
};

inline IncidenceGeometry build_geometry(const SystemSpec& spec,
                                        int dimension_cap = kGeometryDimensionCap) {
  if (spec.total_dim() > dimension_cap) {
    throw std::domain_error("build_geometry: dimension " +
                            std::to_string(spec.total_dim()) + " exceeds cap " +
                            std::to_string(dimension_cap));
  }
  auto points = enumerate_operators(spec);
  Graph commutation = pauli_graph(spec, points);
  auto cliques = maximal_cliques(commutation);
  size_t best = 0;
  for (const auto& c : cliques) best = std::max(best, c.size());
  std::vector<std::vector<int>> lines;
  for (auto& c : cliques) {
    if (c.size() == best) lines.push_back(std::move(c));
  }
  return IncidenceGeometry{spec, std::move(points), std::move(commutation),
                           std::move(lines)};
}

inline std::vector<int> line_intersection(const std::vector<int>& a,
                                          const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Dual view: one vertex per line, edges between concurrent lines weighted
/// by the number of shared points. Pencils are the deduplicated sets of at
/// least two lines through a common point.
struct DualGeometry {
  Graph adjacency;
  std::vector<std::vector<int>> pencils;
};

inline DualGeometry dual_graph(const IncidenceGeometry& geo) {
  const int m = static_cast<int>(geo.lines.size());
  Graph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto shared = line_intersection(geo.lines[i], geo.lines[j]);
      if (!shared.empty()) g.add_edge(i, j, static_cast<int>(shared.size()));
    }
  }
  std::set<std::vector<int>> pencil_set;
  for (size_t p = 0; p < geo.points.size(); ++p) {
    auto through = geo.lines_through(static_cast<int>(p));
    if (through.size() >= 2) pencil_set.insert(std::move(through));
  }
  return DualGeometry{std::move(g),
                      {pencil_set.begin(), pencil_set.end()}};
}

struct MultiLinePair {
  int first_line;
  int second_line;
  std::vector<int> shared_points;
  friend bool operator==(const MultiLinePair&, const MultiLinePair&) = default;
};

/// Line pairs sharing at least two points, ascending by (first, second).
inline std::vector<MultiLinePair> multi_line_pairs(const IncidenceGeometry& geo) {
  std::vector<MultiLinePair> out;
  const int m = static_cast<int>(geo.lines.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto shared = line_intersection(geo.lines[i], geo.lines[j]);
      if (shared.size() >= 2) out.push_back(MultiLinePair{i, j, std::move(shared)});
    }
  }
  return out;
}

/// For every anti-flag (point not on line): the number of lines through the
/// point meeting the line. Flags are excluded from the map.
inline std::map<std::pair<int, int>, int> anti_flag_connection_numbers(
    const IncidenceGeometry& geo) {
  std::map<std::pair<int, int>, int> out;
  std::vector<std::vector<int>> through(geo.points.size());
  for (size_t p = 0; p < geo.points.size(); ++p) {
    through[p] = geo.lines_through(static_cast<int>(p));
  }
  for (size_t p = 0; p < geo.points.size(); ++p) {
    for (size_t l = 0; l < geo.lines.size(); ++l) {
      if (geo.point_on_line(static_cast<int>(p), static_cast<int>(l))) continue;
      int count = 0;
      for (int k : through[p]) {
        if (!line_intersection(geo.lines[k], geo.lines[l]).empty()) ++count;
      }
      out.emplace(std::make_pair(static_cast<int>(p), static_cast<int>(l)), count);
    }
  }
  return out;
}

/// Geometric hyperplane test: every line lies inside the subset or meets it
/// in exactly one point.
inline bool is_hyperplane(const IncidenceGeometry& geo, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (const auto& line : geo.lines) {
    const auto hits = line_intersection(line, s);
    if (hits.size() != 1 && hits.size() != line.size()) return false;
  }
  return true;
}

/// A maximal bundle of lines through a shared point set of size >= 2.
struct MultiLineFamily {
  std::vector<int> shared_points;  // the common set, ascending
  std::vector<int> lines;          // every line containing it, ascending
  bool hyperplane_closed = false;  // union of the lines passes is_hyperplane
};

/// Census of all multi-line families: one family per distinct pairwise
/// intersection of size >= 2, carrying every line that contains the shared
/// set and whether the union of those lines is a geometric hyperplane.
inline std::vector<MultiLineFamily> multi_line_families(const IncidenceGeometry& geo) {
  std::set<std::vector<int>> keys;
  for (const auto& pair : multi_line_pairs(geo)) keys.insert(pair.shared_points);
  std::vector<MultiLineFamily> out;
  for (const auto& key : keys) {
    MultiLineFamily fam;
    fam.shared_points = key;
    for (size_t l = 0; l < geo.lines.size(); ++l) {
      if (std::includes(geo.lines[l].begin(), geo.lines[l].end(), key.begin(), key.end())) {
        fam.lines.push_back(static_cast<int>(l));
      }
    }
    std::vector<int> covered;
    for (int l : fam.lines) {
      covered.insert(covered.end(), geo.lines[l].begin(), geo.lines[l].end());
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    fam.hyperplane_closed = is_hyperplane(geo, covered);
    out.push_back(std::move(fam));
  }
  return out;
}

/// The families whose line unions are geometric hyperplanes.
inline std::vector<MultiLineFamily> multi_line_hyperplanes(const IncidenceGeometry& geo) {
  std::vector<MultiLineFamily> out;
  for (auto& fam : multi_line_families(geo)) {
    if (fam.hyperplane_closed) out.push_back(std::move(fam));
  }
  return out;
}

/// The dual point together with its neighbors, ascending.
inline std::vector<int> perp_set(const DualGeometry& dual, int dual_point) {
  std::vector<int> out = dual.adjacency.neighbors(dual_point);
  out.push_back(dual_point);
  std::sort(out.begin(), out.end());
  return out;
}

/// Maximum sets of pairwise non-concurrent dual points.
inline std::vector<std::vector<int>> find_ovoids(const DualGeometry& dual) {
  return maximum_independent_sets(dual.adjacency);
}

/// Maximum sets of pairwise disjoint lines: the mutually unbiased bases
/// correspond one-to-one with these when the geometry is a full system.
inline std::vector<std::vector<int>> mub_line_sets(const IncidenceGeometry& geo) {
  const int m = static_cast<int>(geo.lines.size());
  Graph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!line_intersection(geo.lines[i], geo.lines[j]).empty()) g.add_edge(i, j);
    }
  }
  return maximum_independent_sets(g);
}

/// cells[r][c] is a dual point; rows and columns are cliques, everything
/// else non-adjacent (an induced rook's-graph embedding).
struct GridConfiguration {
  std::vector<std::vector<int>> cells;
};

struct GridSearchOptions {
  std::optional<int> required_weight;  // row/column edges must carry this weight
  std::size_t max_results = static_cast<std::size_t>(-1);
};

/// Exhaustive search for rows x cols grids in the dual adjacency: distinct
/// dual points arranged so every row and every column is a clique (of the
/// required weight, when one is set). Cells outside a common row or column
/// are unconstrained; at the two-qutrit dual they can never be adjacent (the
/// dual is triangle-free across pencils), while at the three-qubit dual they
/// typically share a point. Configurations are deduplicated up to row/column
/// permutation (and transposition when square); the returned list is
/// lexicographic by cells.
inline std::vector<GridConfiguration> find_grids(const DualGeometry& dual, int rows,
                                                 int cols,
                                                 const GridSearchOptions& opts = {}) {
  if (rows < 2 || cols < 2) {
    throw std::invalid_argument("find_grids: grid sides must be at least 2");
  }
  const Graph& g = dual.adjacency;
  const int n = g.vertex_count();

  auto line_edge_ok = [&](int u, int v) {
    if (!g.adjacent(u, v)) return false;
    return !opts.required_weight || g.weight(u, v) == *opts.required_weight;
  };

  using Key = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;
  auto canonical_key = [&](const std::vector<std::vector<int>>& cells) {
    std::vector<std::vector<int>> row_sets(rows), col_sets(cols);
    for (int r = 0; r < rows; ++r) {
      row_sets[r] = cells[r];
      std::sort(row_sets[r].begin(), row_sets[r].end());
    }
    for (int c = 0; c < cols; ++c) {
      for (int r = 0; r < rows; ++r) col_sets[c].push_back(cells[r][c]);
      std::sort(col_sets[c].begin(), col_sets[c].end());
    }
    std::sort(row_sets.begin(), row_sets.end());
    std::sort(col_sets.begin(), col_sets.end());
    Key key{row_sets, col_sets};
    if (rows == cols) {
      Key swapped{col_sets, row_sets};
      if (swapped < key) key = swapped;
    }
    return key;
  };

  std::vector<std::vector<int>> cells(rows, std::vector<int>(cols, -1));
  std::vector<bool> used(n, false);
  std::set<Key> seen;
  std::vector<GridConfiguration> out;
  bool done = false;

  auto place = [&](auto&& self, int k) -> void {
    if (done) return;
    if (k == rows * cols) {
      auto key = canonical_key(cells);
      if (seen.insert(std::move(key)).second) {
        out.push_back(GridConfiguration{cells});
        if (out.size() >= opts.max_results) done = true;
      }
      return;
    }
    const int r = k / cols, c = k % cols;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      // symmetry pruning: first row and first column ascending, and for
      // square grids cells[0][1] < cells[1][0] to cut the transpose
      if (r == 0 && c > 0 && v <= cells[0][c - 1]) continue;
      if (c == 0 && r > 0 && v <= cells[r - 1][0]) continue;
      if (rows == cols && r == 1 && c == 0 && v <= cells[0][1]) continue;
      bool ok = true;
      for (int j = 0; j < c && ok; ++j) ok = line_edge_ok(cells[r][j], v);
      for (int i = 0; i < r && ok; ++i) ok = line_edge_ok(cells[i][c], v);
      if (!ok) continue;
      cells[r][c] = v;
      used[v] = true;
      self(self, k + 1);
      cells[r][c] = -1;
      used[v] = false;
      if (done) return;
    }
  };
  place(place, 0);
  std::sort(out.begin(), out.end(),
            [](const GridConfiguration& a, const GridConfiguration& b) {
              return a.cells < b.cells;
            });
  return out;
}

/// Intersection bookkeeping for one grid: for each row and each column, the
/// pairwise intersection sizes of its lines (pairs in lexicographic order)
/// and the size of the union of those pairwise intersections.
struct GridSharingReport {
  struct LineClass {
    std::vector<int> pairwise_sizes;
    int union_size = 0;
  };
  std::vector<LineClass> rows;
  std::vector<LineClass> columns;
};

inline GridSharingReport grid_sharing_report(const IncidenceGeometry& geo,
                                             const GridConfiguration& grid) {
  auto study = [&](const std::vector<int>& line_ids) {
    GridSharingReport::LineClass cls;
    std::set<int> pooled;
    for (size_t i = 0; i < line_ids.size(); ++i) {
      for (size_t j = i + 1; j < line_ids.size(); ++j) {
        auto shared = line_intersection(geo.lines.at(line_ids[i]), geo.lines.at(line_ids[j]));
        cls.pairwise_sizes.push_back(static_cast<int>(shared.size()));
        pooled.insert(shared.begin(), shared.end());
      }
    }
    cls.union_size = static_cast<int>(pooled.size());
    return cls;
  };
  GridSharingReport report;
  for (const auto& row : grid.cells) report.rows.push_back(study(row));
  if (!grid.cells.empty()) {
    for (size_t c = 0; c < grid.cells.front().size(); ++c) {
      std::vector<int> col;
      for (const auto& row : grid.cells) col.push_back(row.at(c));
      report.columns.push_back(study(col));
    }
  }
  return report;
}

}  // namespace pauligeo
