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
#include <bit>
#include <cstdint>
#include <vector>

#include "pauligeo/graph.hpp"

namespace pauligeo {

namespace detail {

using Words = std::vector<std::uint64_t>;

inline int first_bit(const Words& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
  }
  return -1;
}

inline int popcount(const Words& w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

inline bool any_bit(const Words& w) {
  for (auto x : w) {
    if (x) return true;
  }
  return false;
}

inline void clear_bit(Words& w, int v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
inline bool test_bit(const Words& w, int v) { return (w[v / 64] >> (v % 64)) & 1u; }

}  // namespace detail

/// All inclusion-maximal cliques of size >= min_size. Exhaustive
/// Bron-Kerbosch with pivoting; each clique is ascending and the list is in
/// lexicographic order, so results are reproducible run to run.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g, int min_size = 1) {
  using detail::Words;
  const int n = g.vertex_count();
  const size_t words = static_cast<size_t>(g.words_per_row());
  std::vector<Words> adj(n, Words(words, 0));
  for (int v = 0; v < n; ++v) {
    auto row = g.row_words(v);
    std::copy(row.begin(), row.end(), adj[v].begin());
  }

  std::vector<std::vector<int>> found;
  std::vector<int> current;

  auto intersect_count = [&](const Words& a, const Words& b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
  };

  auto bk = [&](auto&& self, Words p, Words x) -> void {
    if (!detail::any_bit(p) && !detail::any_bit(x)) {
      if (static_cast<int>(current.size()) >= min_size) found.push_back(current);
      return;
    }
    // pivot: vertex of P union X covering the most of P (ties to lowest index)
    int pivot = -1, best = -1;
    for (size_t i = 0; i < p.size(); ++i) {
      std::uint64_t bits = p[i] | x[i];
      while (bits) {
        const int u = static_cast<int>(i * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        const int c = intersect_count(p, adj[u]);
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
    }
    Words cand(p.size());
    for (size_t i = 0; i < p.size(); ++i) cand[i] = p[i] & ~adj[pivot][i];
    for (int v = detail::first_bit(cand); v != -1; v = detail::first_bit(cand)) {
      detail::clear_bit(cand, v);
      Words np(p.size()), nx(p.size());
      for (size_t i = 0; i < p.size(); ++i) {
        np[i] = p[i] & adj[v][i];
        nx[i] = x[i] & adj[v][i];
      }
      current.push_back(v);
      self(self, std::move(np), std::move(nx));
      current.pop_back();
      detail::clear_bit(p, v);
      x[v / 64] |= std::uint64_t{1} << (v % 64);
    }
  };

  if (n > 0) {
    Words p(words, 0);
    for (int v = 0; v < n; ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
    bk(bk, std::move(p), Words(words, 0));
  }
  for (auto& c : found) std::sort(c.begin(), c.end());
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace pauligeo
