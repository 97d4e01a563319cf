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
#include <stdexcept>
#include <vector>

#include "pauligeo/graph.hpp"

namespace pauligeo {

namespace detail {

// Joint iterated neighborhood refinement. Colors are comparable across the
// two graphs because each round renumbers signatures through one shared map.
// Edge weights participate when both graphs carry them.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(
    const Graph& g, const Graph& h, bool use_weights) {
  std::vector<int> cg(g.vertex_count(), 0), ch(h.vertex_count(), 0);
  int color_count = 1;
  for (int round = 0; round < g.vertex_count() + 1; ++round) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    auto signature = [&](const Graph& gr, const std::vector<int>& colors, int v) {
      Signature s{colors[v], {}};
      for (int u : gr.neighbors(v)) {
        s.second.emplace_back(use_weights ? gr.weight(v, u) : 1, colors[u]);
      }
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::map<Signature, int> ids;
    std::vector<Signature> sg(g.vertex_count()), sh(h.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) sg[v] = signature(g, cg, v);
    for (int v = 0; v < h.vertex_count(); ++v) sh[v] = signature(h, ch, v);
    for (const auto& s : sg) ids.emplace(s, 0);
    for (const auto& s : sh) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < g.vertex_count(); ++v) cg[v] = ids[sg[v]];
    for (int v = 0; v < h.vertex_count(); ++v) ch[v] = ids[sh[v]];
    if (next == color_count) break;
    color_count = next;
  }
  return {cg, ch};
}

}  // namespace detail

/// Certified graph isomorphism. Returns a bijection mapping to h-vertices,
/// indexed by g-vertex, that carries edges exactly onto edges (and matches
/// edge weights when both graphs are weighted); nullopt when none exists.
/// The certificate is re-validated over every vertex pair before returning.
inline std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  const bool use_weights = g.has_weights() && h.has_weights();

  auto [cg, ch] = detail::refine_colors(g, h, use_weights);
  {
    auto mg = cg, mh = ch;
    std::sort(mg.begin(), mg.end());
    std::sort(mh.begin(), mh.end());
    if (mg != mh) return std::nullopt;
  }

  // most-constrained-first static order: small color classes early
  std::map<int, int> class_size;
  for (int c : cg) ++class_size[c];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_pair(class_size[cg[a]], cg[a]) <
           std::make_pair(class_size[cg[b]], cg[b]);
  });

  std::vector<int> mapping(n, -1);
  std::vector<bool> used(n, false);

  auto consistent = [&](int gv, int hv) {
    if (cg[gv] != ch[hv]) return false;
    for (int i = 0; i < n; ++i) {
      if (mapping[i] < 0) continue;
      const bool eg = g.adjacent(gv, i);
      if (eg != h.adjacent(hv, mapping[i])) return false;
      if (eg && use_weights && g.weight(gv, i) != h.weight(hv, mapping[i])) return false;
    }
    return true;
  };

  auto backtrack = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int gv = order[depth];
    for (int hv = 0; hv < n; ++hv) {
      if (used[hv] || !consistent(gv, hv)) continue;
      mapping[gv] = hv;
      used[hv] = true;
      if (self(self, depth + 1)) return true;
      mapping[gv] = -1;
      used[hv] = false;
    }
    return false;
  };

  if (!backtrack(backtrack, 0)) return std::nullopt;

  // re-validate the certificate pair by pair before handing it out
  std::vector<bool> hit(n, false);
  for (int v : mapping) {
    if (v < 0 || v >= n || hit[v]) throw std::logic_error("isomorphism: mapping is not a bijection");
    hit[v] = true;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool eg = g.adjacent(u, v);
      if (eg != h.adjacent(mapping[u], mapping[v])) {
        throw std::logic_error("isomorphism: certificate fails adjacency check");
      }
      if (eg && use_weights && g.weight(u, v) != h.weight(mapping[u], mapping[v])) {
        throw std::logic_error("isomorphism: certificate fails weight check");
      }
    }
  }
  return mapping;
}

}  // namespace pauligeo
