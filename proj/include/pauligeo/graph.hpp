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

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pauligeo {

/// Undirected graph on vertices 0..n-1. No self-loops, no parallel edges.
/// Edges may carry a positive integer weight (an intersection multiplicity);
/// a graph is weighted as soon as one weighted edge is added.
class Graph {
 public:
  explicit Graph(int vertex_count)
      : n_(vertex_count),
        words_(static_cast<size_t>((vertex_count + 63) / 64)),
        rows_(static_cast<size_t>(vertex_count) * words_, 0) {
    if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
  }

  int vertex_count() const { return n_; }
  int words_per_row() const { return static_cast<int>(words_); }

  void add_edge(int u, int v) {
    insert_edge(u, v);
  }

  void add_edge(int u, int v, int weight) {
    if (weight <= 0) throw std::invalid_argument("Graph: edge weight must be positive");
    insert_edge(u, v);
    weighted_ = true;
    weights_[ordered(u, v)] = weight;
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
  }

  bool has_weights() const { return weighted_; }

  /// Weight of an existing edge; unweighted edges count as 1.
  int weight(int u, int v) const {
    if (!adjacent(u, v)) throw std::invalid_argument("Graph: weight of a non-edge");
    auto it = weights_.find(ordered(u, v));
    return it == weights_.end() ? 1 : it->second;
  }

  std::size_t edge_count() const { return edge_count_; }

  /// Edges as (u, v) with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u) {
      for (int v : neighbors(u)) {
        if (v > u) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* row = rows_.data() + static_cast<size_t>(v) * words_;
    for (size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        out.push_back(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
    return out;
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* row = rows_.data() + static_cast<size_t>(v) * words_;
    for (size_t w = 0; w < words_; ++w) d += std::popcount(row[w]);
    return d;
  }

  std::span<const std::uint64_t> row_words(int v) const {
    check_vertex(v);
    return {rows_.data() + static_cast<size_t>(v) * words_, words_};
  }

 private:
  static std::pair<int, int> ordered(int u, int v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  void insert_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    if (!adjacent(u, v)) ++edge_count_;
    rows_[static_cast<size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[static_cast<size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }

  int n_;
  size_t words_;
  std::vector<std::uint64_t> rows_;
  std::map<std::pair<int, int>, int> weights_;
  bool weighted_ = false;
  std::size_t edge_count_ = 0;
};

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  return out;
}

/// The common degree if the graph is regular.
inline std::optional<int> is_regular(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const int k = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

struct StronglyRegularParams {
  int n, k, lambda, mu;
  friend bool operator==(const StronglyRegularParams&, const StronglyRegularParams&) = default;
};

inline int common_neighbor_count(const Graph& g, int u, int v) {
  auto ru = g.row_words(u);
  auto rv = g.row_words(v);
  int c = 0;
  for (size_t w = 0; w < ru.size(); ++w) c += std::popcount(ru[w] & rv[w]);
  return c;
}

/// (n, k, lambda, mu) when every adjacent pair has lambda common neighbors
/// and every non-adjacent pair mu; requires regularity. Complete and empty
/// graphs report the vacuous parameter as 0.
inline std::optional<StronglyRegularParams> strongly_regular_parameters(const Graph& g) {
  const auto k = is_regular(g);
  if (!k) return std::nullopt;
  const int n = g.vertex_count();
  std::optional<int> lambda, mu;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int c = common_neighbor_count(g, u, v);
      std::optional<int>& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        return std::nullopt;
      }
    }
  }
  return StronglyRegularParams{n, *k, lambda.value_or(0), mu.value_or(0)};
}

inline Graph complete_bipartite(int m, int n) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("complete_bipartite: sides must be positive");
  Graph g(m + n);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  }
  return g;
}

/// Vertices of the line graph are the edges of g in ascending (u, v) order;
/// two are adjacent when the underlying edges share an endpoint.
inline Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  Graph lg(static_cast<int>(es.size()));
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      const auto& [a, b] = es[i];
      const auto& [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) {
        lg.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return lg;
}

inline Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

}  // namespace pauligeo
