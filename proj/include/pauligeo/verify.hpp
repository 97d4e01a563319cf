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
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pauligeo/dense_matrix.hpp"
#include "pauligeo/geometry.hpp"
#include "pauligeo/isomorphism.hpp"
#include "pauligeo/labels.hpp"
#include "pauligeo/rings.hpp"
#include "pauligeo/spectrum.hpp"

namespace pauligeo {

struct VerifyCheck {
  std::string name;
  bool ok;
  std::string detail;
};

struct VerifyReport {
  std::string title;
  std::vector<VerifyCheck> checks;
  std::vector<std::string> notes;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.ok; });
  }

  std::string text() const {
    std::string out = "== " + title + " ==\n";
    for (const auto& c : checks) {
      out += (c.ok ? "ok    " : "FAIL  ") + c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += "\n";
    }
    for (const auto& n : notes) out += "note  " + n + "\n";
    out += std::string("result: ") + (ok() ? "PASS" : "FAIL") + " (" +
           std::to_string(checks.size()) + " checks)\n";
    return out;
  }
};

namespace detail {

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  template <typename T, typename U>
  bool eq(const std::string& name, const T& got, const U& want) {
    const bool ok = (got == static_cast<T>(want));
    std::string detail = show(got);
    if (!ok) detail += " (expected " + show(static_cast<T>(want)) + ")";
    report_.checks.push_back(VerifyCheck{name, ok, detail});
    return ok;
  }

  bool truth(const std::string& name, bool ok, const std::string& detail = "") {
    report_.checks.push_back(VerifyCheck{name, ok, detail});
    return ok;
  }

  void note(const std::string& text) { report_.notes.push_back(text); }

 private:
  static std::string show(const std::string& v) { return v; }
  static std::string show(bool v) { return v ? "true" : "false"; }
  template <typename T>
  static std::string show(const T& v) {
    return std::to_string(v);
  }

  VerifyReport& report_;
};

// every unordered pair agrees between the residue test and the matrix oracle
inline std::pair<std::size_t, std::size_t> oracle_agreement(const SystemSpec& spec) {
  const auto ops = enumerate_operators(spec);
  std::size_t pairs = 0, agree = 0;
  for (size_t i = 0; i < ops.size(); ++i) {
    for (size_t j = i + 1; j < ops.size(); ++j) {
      ++pairs;
      if (commutes(ops[i], ops[j], spec) == matrix_commutes(ops[i], ops[j], spec)) {
        ++agree;
      }
    }
  }
  return {agree, pairs};
}

// family shared set consists of operators acting on the last factor alone
inline bool anchored_on_last_factor(const IncidenceGeometry& geo,
                                    const MultiLineFamily& fam) {
  for (int p : fam.shared_points) {
    const auto& op = geo.points[p];
    for (size_t k = 0; k + 1 < op.factors.size(); ++k) {
      if (!(op.factors[k] == FactorExponents{})) return false;
    }
    if (op.factors.back() == FactorExponents{}) return false;
  }
  return true;
}

inline std::string spectrum_or_residual(const Graph& g) {
  return spectrum_exact(g).to_string();
}

}  // namespace detail

/// The printed addition and multiplication tables for Z_2 x Z_3 in primed
/// element order. Cross-check target for ring_tables.
inline CayleyTables reference_ring_tables_z2xz3() {
  CayleyTables t;
  t.addition = {{0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4},
                {3, 4, 5, 0, 1, 2}, {4, 5, 3, 1, 2, 0}, {5, 3, 4, 2, 0, 1}};
  t.multiplication = {{0, 0, 0, 0, 0, 0}, {0, 1, 2, 0, 1, 2}, {0, 2, 1, 0, 2, 1},
                      {0, 0, 0, 3, 3, 3}, {0, 1, 2, 3, 4, 5}, {0, 2, 1, 3, 5, 4}};
  return t;
}

/// Full verification of the dimension-6 system: counts, oracle, spectra,
/// multi-line structure, bases, and the ring-line isomorphism.
inline VerifyReport verify_qubit_qutrit() {
  VerifyReport report{"verification: system 2,3", {}, {}};
  detail::Checker ck(report);

  const SystemSpec spec({2, 3});
  const auto geo = build_geometry(spec);
  ck.eq("operator count", geo.points.size(), 35u);

  const auto [agree, pairs] = detail::oracle_agreement(spec);
  ck.truth("commutation oracle agreement", agree == pairs && pairs == 595,
           std::to_string(agree) + "/" + std::to_string(pairs) + " pairs");

  ck.eq("line count", geo.lines.size(), 12u);
  ck.eq("line size", geo.line_size(), 5);
  std::size_t incidences = 0;
  for (const auto& l : geo.lines) incidences += l.size();
  ck.eq("point-line incidences", incidences, 60u);
  ck.truth("every point on a line",
           [&] {
             for (size_t p = 0; p < geo.points.size(); ++p) {
               if (geo.lines_through(static_cast<int>(p)).empty()) return false;
             }
             return true;
           }());

  ck.truth("commutation graph is irregular", !is_regular(geo.commutation).has_value());
  {
    auto degs = degree_sequence(geo.commutation);
    std::map<int, int> hist;
    for (int d : degs) ++hist[d];
    const std::map<int, int> want{{4, 24}, {10, 8}, {16, 3}};
    std::string got;
    for (auto [d, c] : hist) got += std::to_string(d) + "x" + std::to_string(c) + " ";
    ck.truth("degree histogram", hist == want, got);
  }

  const auto dual = dual_graph(geo);
  ck.eq("dual vertex count", dual.adjacency.vertex_count(), 12);
  ck.eq("dual edge count", dual.adjacency.edge_count(), 30u);
  ck.eq("dual spectrum", spectrum_exact(dual.adjacency).to_string(),
        std::string("{-2:6, 1:3, 2:2, 5:1}"));
  ck.truth("dual is the line graph of the complete bipartite (4,3)",
           is_isomorphic(dual.adjacency, line_graph(complete_bipartite(4, 3))).has_value());

  {
    const auto families = multi_line_families(geo);
    bool shape = families.size() == 4;
    bool closed = true;
    for (const auto& f : families) {
      shape = shape && f.lines.size() == 3 && f.shared_points.size() == 2;
      closed = closed && f.hyperplane_closed;
    }
    ck.truth("multi-line families: four triples through point pairs", shape,
             std::to_string(families.size()) + " families");
    ck.truth("multi-line family unions are geometric hyperplanes", closed);
    ck.eq("hyperplane-closed families", multi_line_hyperplanes(geo).size(), 4u);
  }

  {
    const auto af = anti_flag_connection_numbers(geo);
    bool law = true;
    for (const auto& [key, v] : af) law = law && (v == 0 || v == 1);
    ck.truth("anti-flag connection numbers in {0, 1}", law,
             std::to_string(af.size()) + " anti-flags");
  }

  {
    const auto mubs = mub_line_sets(geo);
    ck.eq("maximum disjoint line sets: size", mubs.empty() ? 0u : mubs.front().size(), 3u);
    ck.eq("maximum disjoint line sets: witnesses", mubs.size(), 24u);
  }

  {
    const auto grids = find_grids(dual, 3, 4);
    ck.eq("3x4 grid configurations in the dual", grids.size(), 1u);
    if (!grids.empty()) {
      std::set<int> cells;
      for (const auto& row : grids.front().cells) cells.insert(row.begin(), row.end());
      ck.truth("the 3x4 grid is the whole dual", cells.size() == 12);
    }
  }

  {
    const auto scheme = reference_labels(geo);
    const auto diffs = catalog_diff(geo, scheme);
    ck.truth("printed line catalog diff", diffs.size() == 1 && diffs.front().name == "M4",
             diffs.empty() ? "no differences" : "differs at " + diffs.front().name);
    for (const auto& d : diffs) {
      std::string printed, computed;
      for (const auto& s : d.catalog_points) printed += s + " ";
      for (const auto& s : d.computed_points) computed += s + " ";
      ck.note("catalog " + d.name + ": printed { " + printed + "} computed { " + computed + "}");
    }
  }

  // ring line over Z_2 x Z_3
  {
    const ProductRing ring({2, 3});
    const auto cls = classify_elements(ring);
    ck.eq("ring units", cls.units.size(), 2u);
    ck.eq("ring zero divisors (zero included)", cls.zero_divisors.size(), 4u);
    const auto tables = ring_tables(ring);
    const auto printed = reference_ring_tables_z2xz3();
    ck.truth("addition table matches the printed table",
             tables.addition == printed.addition);
    ck.truth("multiplication table matches the printed table",
             tables.multiplication == printed.multiplication);
    const auto points = projective_line(ring);
    ck.eq("projective line point count", points.size(), 12u);
    const auto counts = classify_points(ring, points);
    ck.truth("point type census 8/2/2",
             counts.one_unit == 8 && counts.both_units == 2 && counts.both_zero_divisors == 2,
             std::to_string(counts.one_unit) + "/" + std::to_string(counts.both_units) +
                 "/" + std::to_string(counts.both_zero_divisors));
    ck.truth("dual graph is the ring-line neighbor graph",
             is_isomorphic(dual.adjacency, neighbor_graph(ring)).has_value());
  }

  return report;
}

/// Full verification of the dimension-9 system.
inline VerifyReport verify_two_qutrit() {
  VerifyReport report{"verification: system 3,3", {}, {}};
  detail::Checker ck(report);

  const SystemSpec spec({3, 3});
  const auto geo = build_geometry(spec);
  ck.eq("operator count", geo.points.size(), 80u);

  const auto [agree, pairs] = detail::oracle_agreement(spec);
  ck.truth("commutation oracle agreement", agree == pairs && pairs == 3160,
           std::to_string(agree) + "/" + std::to_string(pairs) + " pairs");

  ck.eq("line count", geo.lines.size(), 40u);
  ck.eq("line size", geo.line_size(), 8);
  std::size_t incidences = 0;
  for (const auto& l : geo.lines) incidences += l.size();
  ck.eq("point-line incidences", incidences, 320u);

  ck.eq("commutation graph regular of degree", is_regular(geo.commutation).value_or(-1), 25);
  ck.eq("commutation spectrum", spectrum_exact(geo.commutation).to_string(),
        std::string("{-7:15, -1:40, 5:24, 25:1}"));

  const auto dual = dual_graph(geo);
  ck.eq("dual vertex count", dual.adjacency.vertex_count(), 40);
  ck.eq("dual spectrum", spectrum_exact(dual.adjacency).to_string(),
        std::string("{-4:15, 2:24, 12:1}"));
  {
    bool all2 = true;
    for (const auto& [u, v] : dual.adjacency.edges()) {
      all2 = all2 && dual.adjacency.weight(u, v) == 2;
    }
    ck.truth("every concurrent line pair shares exactly two points", all2,
             std::to_string(dual.adjacency.edge_count()) + " edges");
  }
  {
    bool all13 = true;
    for (int v = 0; v < dual.adjacency.vertex_count(); ++v) {
      all13 = all13 && perp_set(dual, v).size() == 13;
    }
    ck.truth("every perp set has 13 dual points", all13);
  }
  {
    bool pencil_shape = dual.pencils.size() == 40;
    for (const auto& p : dual.pencils) pencil_shape = pencil_shape && p.size() == 4;
    ck.truth("40 pencils of four lines", pencil_shape,
             std::to_string(dual.pencils.size()) + " pencils");
    // each pencil is the line set of exactly two points (an operator and
    // its square)
    std::map<std::vector<int>, int> sources;
    for (size_t p = 0; p < geo.points.size(); ++p) {
      auto through = geo.lines_through(static_cast<int>(p));
      if (through.size() >= 2) ++sources[through];
    }
    bool two_each = sources.size() == 40;
    for (const auto& [k, c] : sources) two_each = two_each && c == 2;
    ck.truth("each pencil arises from exactly two operators", two_each);
  }

  {
    const auto families = multi_line_families(geo);
    ck.eq("multi-line families", families.size(), 40u);
    bool quads = true;
    for (const auto& f : families) {
      quads = quads && f.lines.size() == 4 && f.shared_points.size() == 2;
    }
    ck.truth("every family is four lines through a point pair", quads);
    ck.eq("hyperplane-closed families under the strict reading",
          multi_line_hyperplanes(geo).size(), 0u);
    std::vector<MultiLineFamily> anchored;
    for (const auto& f : families) {
      if (detail::anchored_on_last_factor(geo, f)) anchored.push_back(f);
    }
    bool anchored_shape = anchored.size() == 4;
    for (const auto& f : anchored) anchored_shape = anchored_shape && f.lines.size() == 4;
    ck.truth("four families anchored on second-factor point pairs", anchored_shape,
             std::to_string(anchored.size()) + " anchored families");
  }

  {
    const auto mubs = mub_line_sets(geo);
    ck.eq("maximum disjoint line sets: size", mubs.empty() ? 0u : mubs.front().size(), 10u);
    bool partitions = !mubs.empty();
    for (const auto& witness : mubs) {
      std::set<int> covered;
      for (int l : witness) covered.insert(geo.lines[l].begin(), geo.lines[l].end());
      partitions = partitions && covered.size() == 80;
    }
    ck.truth("every maximum disjoint line set partitions the points", partitions,
             std::to_string(mubs.size()) + " witnesses");
    ck.eq("maximum disjoint line sets: witnesses", mubs.size(), 36u);
  }

  {
    const auto scheme = reference_labels(geo);
    const auto names = line_names(geo, scheme);
    const auto grids = find_grids(dual, 4, 4);
    ck.eq("4x4 grid configurations in the dual", grids.size(), 45u);
    // the reference grid: all sixteen lines through first-factor operators
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
    ck.truth("the reference-line 4x4 grid is among them", found);

    const auto diffs = catalog_diff(geo, scheme);
    ck.truth("printed line catalog diff", diffs.empty(),
             diffs.empty() ? "no differences"
                           : std::to_string(diffs.size()) + " differing entries");
    for (const auto& d : diffs) {
      std::string printed, computed;
      for (const auto& s : d.catalog_points) printed += s + " ";
      for (const auto& s : d.computed_points) computed += s + " ";
      ck.note("catalog " + d.name + ": printed { " + printed + "} computed { " + computed + "}");
    }
  }

  return report;
}

/// Verification of the three-qubit system.
inline VerifyReport verify_three_qubit() {
  VerifyReport report{"verification: system 2,2,2", {}, {}};
  detail::Checker ck(report);

  const SystemSpec spec({2, 2, 2});
  const auto geo = build_geometry(spec);
  ck.eq("operator count", geo.points.size(), 63u);

  const auto [agree, pairs] = detail::oracle_agreement(spec);
  ck.truth("commutation oracle agreement", agree == pairs && pairs == 1953,
           std::to_string(agree) + "/" + std::to_string(pairs) + " pairs");

  ck.eq("line count", geo.lines.size(), 135u);
  ck.eq("line size", geo.line_size(), 7);

  ck.eq("commutation graph regular of degree", is_regular(geo.commutation).value_or(-1), 30);
  ck.eq("commutation spectrum", spectrum_exact(geo.commutation).to_string(),
        std::string("{-5:27, 3:35, 30:1}"));
  {
    const auto srg = strongly_regular_parameters(geo.commutation);
    ck.truth("commutation graph is strongly regular",
             srg.has_value() && *srg == StronglyRegularParams{63, 30, 13, 15},
             srg ? "(" + std::to_string(srg->n) + "," + std::to_string(srg->k) + "," +
                       std::to_string(srg->lambda) + "," + std::to_string(srg->mu) + ")"
                 : "not strongly regular");
  }

  const auto dual = dual_graph(geo);
  ck.eq("dual vertex count", dual.adjacency.vertex_count(), 135);
  {
    std::map<int, int> weights;
    for (const auto& [u, v] : dual.adjacency.edges()) {
      ++weights[dual.adjacency.weight(u, v)];
    }
    ck.truth("concurrent lines share one or three points",
             weights == std::map<int, int>{{1, 3780}, {3, 945}},
             "3780 edges of weight one, 945 of weight three");
  }

  {
    GridSearchOptions opts;
    opts.required_weight = 3;
    opts.max_results = 1;
    const auto grids = find_grids(dual, 3, 3, opts);
    ck.truth("a 3x3 grid of weight-three adjacency exists", !grids.empty());
    if (!grids.empty()) {
      const auto report_grid = grid_sharing_report(geo, grids.front());
      auto render = [](const GridSharingReport::LineClass& c) {
        std::string s = "pairwise [";
        for (size_t i = 0; i < c.pairwise_sizes.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(c.pairwise_sizes[i]);
        }
        s += "] union " + std::to_string(c.union_size);
        return s;
      };
      for (size_t r = 0; r < report_grid.rows.size(); ++r) {
        ck.note("grid row " + std::to_string(r) + " sharing: " + render(report_grid.rows[r]));
      }
      for (size_t c = 0; c < report_grid.columns.size(); ++c) {
        ck.note("grid column " + std::to_string(c) + " sharing: " +
                render(report_grid.columns[c]));
      }
    }
  }

  return report;
}

/// Verification of the two-qubit control system: no multi-lines, self-dual.
inline VerifyReport verify_two_qubit() {
  VerifyReport report{"verification: system 2,2", {}, {}};
  detail::Checker ck(report);

  const SystemSpec spec({2, 2});
  const auto geo = build_geometry(spec);
  ck.eq("operator count", geo.points.size(), 15u);
  ck.eq("line count", geo.lines.size(), 15u);
  ck.eq("line size", geo.line_size(), 3);
  ck.eq("multi-line pairs", multi_line_pairs(geo).size(), 0u);

  const auto dual = dual_graph(geo);
  ck.truth("operator and line pictures are isomorphic (self-dual)",
           is_isomorphic(geo.commutation, dual.adjacency).has_value());

  return report;
}

/// Generic report for systems without frozen expectations: structural
/// statistics only.
inline VerifyReport verify_generic(const std::vector<int>& dims) {
  SystemSpec spec(dims);
  VerifyReport report{"verification: system " + spec.to_string(), {}, {}};
  detail::Checker ck(report);
  const auto geo = build_geometry(spec);
  const long long d = spec.total_dim();
  ck.eq("operator count", static_cast<long long>(geo.points.size()), d * d - 1);
  ck.note("line count: " + std::to_string(geo.lines.size()));
  ck.note("line size: " + std::to_string(geo.line_size()));
  ck.note("multi-line pairs: " + std::to_string(multi_line_pairs(geo).size()));
  return report;
}

inline VerifyReport verify_dims(const std::vector<int>& dims) {
  if (dims == std::vector<int>{2, 3}) return verify_qubit_qutrit();
  if (dims == std::vector<int>{3, 3}) return verify_two_qutrit();
  if (dims == std::vector<int>{2, 2, 2}) return verify_three_qubit();
  if (dims == std::vector<int>{2, 2}) return verify_two_qubit();
  return verify_generic(dims);
}

/// The four standard systems in sequence.
inline std::vector<VerifyReport> verify_all() {
  return {verify_qubit_qutrit(), verify_two_qutrit(), verify_three_qubit(),
          verify_two_qubit()};
}

inline std::string render_reports(const std::vector<VerifyReport>& reports) {
  std::string out;
  bool ok = true;
  for (const auto& r : reports) {
    out += r.text() + "\n";
    ok = ok && r.ok();
  }
  out += std::string("overall: ") + (ok ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace pauligeo
