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
#include <cstdint>
#include <numeric>
#include <vector>

#include "pauligeo/cliques.hpp"

namespace pauligeo {

namespace detail {

// Branch and bound over vertices reordered by descending degree (ties by
// index). Phase one finds the independence number, phase two collects every
// set of that size. Exhaustive: the exclude branch is always explored unless
// the |current| + |candidates| bound rules it out.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : n_(g.vertex_count()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
    const size_t words = static_cast<size_t>((n_ + 63) / 64);
    adj_.assign(n_, Words(words, 0));
    for (int u = 0; u < n_; ++u) {
      for (int v : g.neighbors(u)) {
        adj_[pos[u]][static_cast<size_t>(pos[v]) / 64] |=
            std::uint64_t{1} << (pos[v] % 64);
      }
    }
  }

  std::vector<std::vector<int>> all_maximum() {
    if (n_ == 0) return {{}};
    Words full(adj_[0].size(), 0);
    for (int v = 0; v < n_; ++v) full[v / 64] |= std::uint64_t{1} << (v % 64);

    best_ = 0;
    collect_ = false;
    search(full, 0);
    collect_ = true;
    search(full, 0);

    std::vector<std::vector<int>> out;
    out.reserve(found_.size());
    for (const auto& s : found_) {
      std::vector<int> orig;
      orig.reserve(s.size());
      for (int v : s) orig.push_back(order_[v]);
      std::sort(orig.begin(), orig.end());
      out.push_back(std::move(orig));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int best() const { return best_; }

 private:
  using Words = std::vector<std::uint64_t>;

  void search(Words cand, int size) {
    const int v = first_bit(cand);
    if (v < 0) {
      if (!collect_) {
        best_ = std::max(best_, size);
      } else if (size == best_) {
        found_.push_back(current_);
      }
      return;
    }
    // phase one only needs to beat best_, phase two to reach it
    const int attainable = size + popcount(cand);
    if (collect_ ? attainable < best_ : attainable <= best_) return;
    // include v
    Words next = cand;
    clear_bit(next, v);
    for (size_t i = 0; i < next.size(); ++i) next[i] &= ~adj_[v][i];
    current_.push_back(v);
    search(std::move(next), size + 1);
    current_.pop_back();
    // exclude v
    clear_bit(cand, v);
    search(std::move(cand), size);
  }

  int n_;
  std::vector<int> order_;
  std::vector<Words> adj_;
  int best_ = 0;
  bool collect_ = false;
  std::vector<int> current_;
  std::vector<std::vector<int>> found_;
};

}  // namespace detail

/// Every maximum independent set (each ascending, list lexicographic).
inline std::vector<std::vector<int>> maximum_independent_sets(const Graph& g) {
  detail::IndependentSetSearch s(g);
  return s.all_maximum();
}

inline int independence_number(const Graph& g) {
  detail::IndependentSetSearch s(g);
  auto sets = s.all_maximum();
  return sets.empty() ? 0 : static_cast<int>(sets.front().size());
}

}  // namespace pauligeo
