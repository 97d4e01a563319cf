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

#include "pauligeo/geometry.hpp"
#include "pauligeo/labels.hpp"
#include "pauligeo/spectrum.hpp"

using namespace pauligeo;

namespace {

const IncidenceGeometry& geo9() {
  static const auto g = build_geometry(SystemSpec({3, 3}));
  return g;
}

const DualGeometry& dual9() {
  static const auto d = dual_graph(geo9());
  return d;
}

}  // namespace

TEST_CASE("two-qutrit counts and regularity") {
  const auto& geo = geo9();
  CHECK(geo.points.size() == 80);
  CHECK(geo.lines.size() == 40);
  CHECK(geo.line_size() == 8);
  CHECK(is_regular(geo.commutation) == 25);
  CHECK(spectrum_exact(geo.commutation).to_string() == "{-7:15, -1:40, 5:24, 25:1}");
  // each point lies on exactly four lines
  for (size_t p = 0; p < geo.points.size(); ++p) {
    CHECK(geo.lines_through(static_cast<int>(p)).size() == 4);
  }
}

TEST_CASE("two-qutrit lines are closed under the operator product") {
  const auto& geo = geo9();
  for (size_t l = 0; l < geo.lines.size(); ++l) {
    for (int p : geo.lines[l]) {
      for (int q : geo.lines[l]) {
        const auto prod = product(geo.points[p], geo.points[q], geo.spec);
        if (prod.is_identity()) continue;
        CHECK(geo.point_on_line(geo.point_index(prod), static_cast<int>(l)));
      }
    }
  }
}

TEST_CASE("two-qutrit dual spectrum, uniform weights, perps, pencils") {
  const auto& dual = dual9();
  CHECK(dual.adjacency.vertex_count() == 40);
  CHECK(is_regular(dual.adjacency) == 12);
  CHECK(spectrum_exact(dual.adjacency).to_string() == "{-4:15, 2:24, 12:1}");
  for (const auto& [u, v] : dual.adjacency.edges()) {
    CHECK(dual.adjacency.weight(u, v) == 2);
  }
  for (int v = 0; v < dual.adjacency.vertex_count(); ++v) {
    CHECK(perp_set(dual, v).size() == 13);
  }
  REQUIRE(dual.pencils.size() == 40);
  for (const auto& p : dual.pencils) CHECK(p.size() == 4);
}

TEST_CASE("two-qutrit multi-line families are quadruples without strict closure") {
  const auto& geo = geo9();
  const auto families = multi_line_families(geo);
  REQUIRE(families.size() == 40);
  for (const auto& f : families) {
    CHECK(f.lines.size() == 4);
    CHECK(f.shared_points.size() == 2);
    // second point of the pair is the square of the first
    const auto sq = product(geo.points[f.shared_points[0]], geo.points[f.shared_points[0]],
                            geo.spec);
    CHECK(geo.point_index(sq) == f.shared_points[1]);
    CHECK_FALSE(f.hyperplane_closed);
  }
  CHECK(multi_line_hyperplanes(geo).empty());
  CHECK(multi_line_pairs(geo).size() == 40 * 6);  // 4 lines of a family give 6 pairs
}

TEST_CASE("two-qutrit families anchored on the second factor") {
  const auto& geo = geo9();
  const auto scheme = reference_labels(geo);
  const auto families = multi_line_families(geo);
  std::set<std::set<std::string>> anchored;
  for (const auto& f : families) {
    bool pure_second = true;
    for (int p : f.shared_points) {
      pure_second = pure_second && geo.points[p].factors[0] == FactorExponents{} &&
                    !(geo.points[p].factors[1] == FactorExponents{});
    }
    if (!pure_second) continue;
    std::set<std::string> labels;
    for (int p : f.shared_points) labels.insert(scheme.point_labels[p]);
    anchored.insert(labels);
  }
  CHECK(anchored == std::set<std::set<std::string>>{
                        {"1", "5"}, {"2", "6"}, {"3", "7"}, {"4", "8"}});
}

TEST_CASE("two-qutrit maximum disjoint line sets partition the points") {
  const auto& geo = geo9();
  const auto sets = mub_line_sets(geo);
  CHECK(sets.size() == 36);  // the search is exhaustive
  for (const auto& s : sets) {
    REQUIRE(s.size() == 10);
    std::set<int> covered;
    for (int l : s) covered.insert(geo.lines[l].begin(), geo.lines[l].end());
    CHECK(covered.size() == 80);
  }
}

TEST_CASE("two-qutrit labels follow the catalog encoding") {
  const auto& geo = geo9();
  const auto scheme = reference_labels(geo);
  REQUIRE(scheme.reference);
  auto op_of = [&](const std::string& label) {
    return geo.points[scheme.label_index(label)];
  };
  CHECK(op_of("1") == PauliOperator{{{0, 0}, {0, 1}}});   // I (x) Z
  CHECK(op_of("8") == PauliOperator{{{0, 0}, {2, 1}}});   // I (x) X^2Z
  CHECK(op_of("a") == PauliOperator{{{0, 1}, {0, 0}}});   // Z (x) I
  CHECK(op_of("h") == PauliOperator{{{2, 1}, {0, 0}}});   // X^2Z (x) I
  CHECK(op_of("9") == PauliOperator{{{0, 1}, {0, 1}}});   // Z (x) Z
  CHECK(op_of("15") == PauliOperator{{{0, 1}, {2, 2}}});  // Z (x) X^2Z^2
  CHECK(op_of("72") == PauliOperator{{{2, 1}, {2, 1}}});  // X^2Z (x) X^2Z
}

TEST_CASE("the printed eighth Y line is a genuine line") {
  const auto& geo = geo9();
  const auto scheme = reference_labels(geo);
  const std::vector<std::string> printed{"15", "18", "29", "40", "43", "54", "57", "68"};
  std::vector<int> pts;
  for (const auto& s : printed) pts.push_back(scheme.label_index(s));
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      CHECK(commutes(geo.points[pts[i]], geo.points[pts[j]], geo.spec));
    }
  }
  std::sort(pts.begin(), pts.end());
  CHECK(std::find(geo.lines.begin(), geo.lines.end(), pts) != geo.lines.end());
}

TEST_CASE("two-qutrit computed lines match the printed catalog exactly") {
  const auto& geo = geo9();
  const auto scheme = reference_labels(geo);
  const auto names = line_names(geo, scheme);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == 40);
  CHECK(catalog_diff(geo, scheme).empty());
}

TEST_CASE("two-qutrit dual holds the reference 4x4 grid") {
  const auto& geo = geo9();
  const auto scheme = reference_labels(geo);
  const auto names = line_names(geo, scheme);
  const auto grids = find_grids(dual9(), 4, 4);
  CHECK(grids.size() == 45);
  std::set<int> reference_cells;
  for (size_t l = 0; l < names.size(); ++l) {
    const char c = names[l].front();
    if (c == 'L' || c == 'M' || c == 'N' || c == 'P') {
      reference_cells.insert(static_cast<int>(l));
    }
  }
  bool found = false;
  for (const auto& g : grids) {
    std::set<int> cells;
    for (const auto& row : g.cells) cells.insert(row.begin(), row.end());
    found = found || cells == reference_cells;
  }
  CHECK(found);
}

TEST_CASE("two-qutrit ovoids coincide with disjoint line sets") {
  const auto& geo = geo9();
  const auto ovoids = find_ovoids(dual9());
  const auto sets = mub_line_sets(geo);
  CHECK(ovoids == sets);
}
