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

#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "pauligeo/cliques.hpp"
#include "pauligeo/graph.hpp"
#include "pauligeo/independent.hpp"
#include "pauligeo/isomorphism.hpp"
#include "pauligeo/spectrum.hpp"

using namespace pauligeo;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 2);
  g.add_edge(2, 0);  // duplicate, idempotent
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK_FALSE(g.has_weights());
  CHECK(g.weight(0, 2) == 1);  // unweighted edges read as weight 1
  CHECK_THROWS_AS(g.weight(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(0, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);

  g.add_edge(1, 3, 7);
  CHECK(g.has_weights());
  CHECK(g.weight(1, 3) == 7);
  CHECK(g.weight(3, 1) == 7);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  CHECK(g.neighbors(0) == std::vector<int>{2});
  CHECK(g.degree(0) == 1);
}

TEST_CASE("degree helpers") {
  const auto c5 = cycle(5);
  CHECK(degree_sequence(c5) == std::vector<int>(5, 2));
  CHECK(is_regular(c5) == 2);
  CHECK_FALSE(is_regular(path(4)).has_value());
}

TEST_CASE("complete bipartite and line graph") {
  const auto k43 = complete_bipartite(4, 3);
  CHECK(k43.vertex_count() == 7);
  CHECK(k43.edge_count() == 12);
  const auto lg = line_graph(k43);
  CHECK(lg.vertex_count() == 12);
  CHECK(lg.edge_count() == 30);
  CHECK(is_regular(lg) == 5);
  CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)).edge_count() == 0);
  const auto c5 = cycle(5);
  CHECK(is_isomorphic(complement(c5), c5).has_value());  // C5 is self-complementary
}

TEST_CASE("characteristic polynomial is exact") {
  // triangle: det(xI - A) = x^3 - 3x - 2
  const auto p = characteristic_polynomial(complete(3));
  REQUIRE(p.size() == 4);
  CHECK(p[0] == -2);
  CHECK(p[1] == -3);
  CHECK(p[2] == 0);
  CHECK(p[3] == 1);
}

TEST_CASE("integer spectra of model graphs") {
  CHECK(spectrum_exact(complete(5)).to_string() == "{-1:4, 4:1}");
  CHECK(spectrum_exact(Graph(4)).to_string() == "{0:4}");
  CHECK(spectrum_exact(complete_bipartite(2, 2)).to_string() == "{-2:1, 0:2, 2:1}");
  CHECK(spectrum_exact(line_graph(complete_bipartite(4, 3))).to_string() ==
        "{-2:6, 1:3, 2:2, 5:1}");
}

TEST_CASE("irrational part is reported as a residual factor") {
  // C5 eigenvalues are 2 and two conjugate pairs of golden-ratio surds
  const auto s5 = spectrum_exact(cycle(5));
  CHECK(s5.eigenvalues == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(s5.residual_factor == std::vector<mpz_class>{1, -2, -1, 2, 1});
  CHECK(s5.to_string() == "{2:1}; residual [1, -2, -1, 2, 1]");

  // P3 eigenvalues are 0 and +-sqrt(2); the zero root is still split off
  const auto s3 = spectrum_exact(path(3));
  CHECK(s3.eigenvalues == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(s3.residual_factor == std::vector<mpz_class>{-2, 0, 1});
}

TEST_CASE("spectrum respects its vertex cap") {
  CHECK_THROWS_AS(spectrum_exact(Graph(10), 9), std::domain_error);
}

TEST_CASE("strongly regular parameters") {
  const auto k5 = strongly_regular_parameters(complete(5));
  REQUIRE(k5.has_value());
  CHECK(*k5 == StronglyRegularParams{5, 4, 3, 0});

  const auto c5 = strongly_regular_parameters(cycle(5));
  REQUIRE(c5.has_value());
  CHECK(*c5 == StronglyRegularParams{5, 2, 0, 1});

  const auto petersen = complement(line_graph(complete(5)));
  const auto pp = strongly_regular_parameters(petersen);
  REQUIRE(pp.has_value());
  CHECK(*pp == StronglyRegularParams{10, 3, 0, 1});
  CHECK(spectrum_exact(petersen).to_string() == "{-2:4, 1:5, 3:1}");

  CHECK_FALSE(strongly_regular_parameters(path(4)).has_value());
  CHECK_FALSE(strongly_regular_parameters(cycle(6)).has_value());
}

TEST_CASE("maximal cliques") {
  const auto all = maximal_cliques(complete(5));
  REQUIRE(all.size() == 1);
  CHECK(all.front() == std::vector<int>{0, 1, 2, 3, 4});

  const auto c5 = maximal_cliques(cycle(5));
  CHECK(c5.size() == 5);
  for (const auto& c : c5) CHECK(c.size() == 2);
  CHECK(maximal_cliques(cycle(5), 3).empty());

  const auto petersen = complement(line_graph(complete(5)));
  CHECK(maximal_cliques(petersen).size() == 15);  // its edges
}

TEST_CASE("maximum independent sets") {
  const auto petersen = complement(line_graph(complete(5)));
  const auto mis = maximum_independent_sets(petersen);
  CHECK(independence_number(petersen) == 4);
  CHECK(mis.size() == 5);
  for (const auto& s : mis) {
    REQUIRE(s.size() == 4);
    for (size_t i = 0; i < s.size(); ++i) {
      for (size_t j = i + 1; j < s.size(); ++j) CHECK_FALSE(petersen.adjacent(s[i], s[j]));
    }
  }
  CHECK(independence_number(cycle(5)) == 2);
  CHECK(maximum_independent_sets(cycle(5)).size() == 5);
  CHECK(maximum_independent_sets(complete(4)).size() == 4);
  CHECK(independence_number(Graph(3)) == 3);
}

TEST_CASE("isomorphism finds a certified mapping") {
  const auto c5 = cycle(5);
  Graph shuffled(5);
  const int perm[5] = {3, 0, 4, 1, 2};
  for (const auto& [u, v] : c5.edges()) shuffled.add_edge(perm[u], perm[v]);
  const auto mapping = is_isomorphic(c5, shuffled);
  REQUIRE(mapping.has_value());
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      CHECK(c5.adjacent(u, v) == shuffled.adjacent((*mapping)[u], (*mapping)[v]));
    }
  }
}

TEST_CASE("isomorphism rejects non-isomorphic graphs") {
  CHECK_FALSE(is_isomorphic(cycle(5), path(5)).has_value());
  CHECK_FALSE(is_isomorphic(cycle(6), complete_bipartite(3, 3)).has_value());
  CHECK(is_isomorphic(complete_bipartite(3, 3), complete_bipartite(3, 3)).has_value());
  // same degree sequence, different structure: two triangles vs C6
  Graph twotri(6);
  twotri.add_edge(0, 1);
  twotri.add_edge(1, 2);
  twotri.add_edge(0, 2);
  twotri.add_edge(3, 4);
  twotri.add_edge(4, 5);
  twotri.add_edge(3, 5);
  CHECK_FALSE(is_isomorphic(twotri, cycle(6)).has_value());
}

TEST_CASE("isomorphism honours edge weights when both graphs carry them") {
  auto weighted_triangle = [](int w01, int w12, int w02) {
    Graph g(3);
    g.add_edge(0, 1, w01);
    g.add_edge(1, 2, w12);
    g.add_edge(0, 2, w02);
    return g;
  };
  const auto a = weighted_triangle(1, 2, 3);
  CHECK(is_isomorphic(a, weighted_triangle(3, 2, 1)).has_value());
  CHECK_FALSE(is_isomorphic(a, weighted_triangle(1, 2, 2)).has_value());
  // weights are ignored when either side is unweighted
  Graph plain(3);
  plain.add_edge(0, 1);
  plain.add_edge(1, 2);
  plain.add_edge(0, 2);
  CHECK(is_isomorphic(a, plain).has_value());
}
