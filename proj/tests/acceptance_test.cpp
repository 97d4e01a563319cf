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

// End-to-end gate: one line per criterion, PASS or FAIL, nothing hidden.
// argv[1] is the path to the command line binary for the determinism checks.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "pauligeo/pauligeo.hpp"

using namespace pauligeo;

namespace {

int failures = 0;

void criterion(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

void note(const std::string& text) { std::cout << "note  " << text << "\n"; }

std::size_t agreeing_pairs(const SystemSpec& spec) {
  const auto ops = enumerate_operators(spec);
  std::size_t agree = 0;
  for (size_t i = 0; i < ops.size(); ++i) {
    for (size_t j = i + 1; j < ops.size(); ++j) {
      if (commutes(ops[i], ops[j], spec) == matrix_commutes(ops[i], ops[j], spec)) {
        ++agree;
      }
    }
  }
  return agree;
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::set<std::set<std::string>> shared_label_sets(const IncidenceGeometry& geo,
                                                  const LabelScheme& scheme,
                                                  const std::vector<MultiLineFamily>& fams) {
  std::set<std::set<std::string>> out;
  for (const auto& f : fams) {
    std::set<std::string> labels;
    for (int p : f.shared_points) labels.insert(scheme.point_labels[p]);
    out.insert(labels);
  }
  return out;
}

const std::set<std::set<std::string>> kDigitPairs{
    {"1", "5"}, {"2", "6"}, {"3", "7"}, {"4", "8"}};

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  const SystemSpec spec6({2, 3}), spec9({3, 3}), spec8({2, 2, 2}), spec4({2, 2});
  const auto geo6 = build_geometry(spec6);
  const auto geo9 = build_geometry(spec9);
  const auto geo8 = build_geometry(spec8);
  const auto geo4 = build_geometry(spec4);
  const auto dual6 = dual_graph(geo6);
  const auto dual9 = dual_graph(geo9);
  const auto dual8 = dual_graph(geo8);
  const auto dual4 = dual_graph(geo4);
  const auto scheme6 = reference_labels(geo6);
  const auto scheme9 = reference_labels(geo9);

  // 1: operator counts
  criterion(1, "operator counts 35 / 80 / 63",
            geo6.points.size() == 35 && geo9.points.size() == 80 && geo8.points.size() == 63,
            std::to_string(geo6.points.size()) + " / " + std::to_string(geo9.points.size()) +
                " / " + std::to_string(geo8.points.size()));

  // 2: residue rule vs matrix oracle on every pair
  {
    const auto a6 = agreeing_pairs(spec6);
    const auto a9 = agreeing_pairs(spec9);
    const auto a8 = agreeing_pairs(spec8);
    criterion(2, "commutation oracle agreement 595 / 3160 / 1953 pairs",
              a6 == 595 && a9 == 3160 && a8 == 1953,
              std::to_string(a6) + " / " + std::to_string(a9) + " / " + std::to_string(a8));
  }

  // 3: line systems and catalog naming
  {
    const bool counts = geo6.lines.size() == 12 && geo6.line_size() == 5 &&
                        geo9.lines.size() == 40 && geo9.line_size() == 8 &&
                        geo8.lines.size() == 135 && geo8.line_size() == 7;
    const auto diff6 = catalog_diff(geo6, scheme6);
    const auto diff9 = catalog_diff(geo9, scheme9);
    const bool diffs =
        diff6.size() == 1 && diff6.front().name == "M4" && diff9.empty();
    criterion(3, "line systems 12x5 / 40x8 / 135x7 and catalog naming", counts && diffs,
              std::to_string(geo6.lines.size()) + "x" + std::to_string(geo6.line_size()) +
                  " / " + std::to_string(geo9.lines.size()) + "x" +
                  std::to_string(geo9.line_size()) + " / " +
                  std::to_string(geo8.lines.size()) + "x" + std::to_string(geo8.line_size()) +
                  ", catalog defects " + std::to_string(diff6.size()) + " / " +
                  std::to_string(diff9.size()));
    for (const auto& d : diff6) {
      std::string printed, computed;
      for (const auto& s : d.catalog_points) printed += s + " ";
      for (const auto& s : d.computed_points) computed += s + " ";
      note("catalog " + d.name + ": printed { " + printed + "} computed { " + computed +
           "}");
    }
  }

  // 4: exact spectra
  {
    std::map<int, int> hist6;
    for (int d : degree_sequence(geo6.commutation)) ++hist6[d];
    const bool p6 = !is_regular(geo6.commutation).has_value() &&
                    hist6 == std::map<int, int>{{4, 24}, {10, 8}, {16, 3}};
    const bool p9 =
        spectrum_exact(geo9.commutation).to_string() == "{-7:15, -1:40, 5:24, 25:1}";
    const bool p8 =
        spectrum_exact(geo8.commutation).to_string() == "{-5:27, 3:35, 30:1}";
    const bool w6 = spectrum_exact(dual6.adjacency).to_string() == "{-2:6, 1:3, 2:2, 5:1}";
    const bool w9 = spectrum_exact(dual9.adjacency).to_string() == "{-4:15, 2:24, 12:1}";
    criterion(4, "spectra: degree histogram and four exact integer spectra",
              p6 && p9 && p8 && w6 && w9,
              std::string("p6 ") + (p6 ? "ok" : "bad") + ", p9 " + (p9 ? "ok" : "bad") +
                  ", p8 " + (p8 ? "ok" : "bad") + ", w6 " + (w6 ? "ok" : "bad") + ", w9 " +
                  (w9 ? "ok" : "bad"));
  }

  // 5: strong regularity of the three-qubit graph
  {
    const auto srg = strongly_regular_parameters(geo8.commutation);
    criterion(5, "three-qubit graph is strongly regular (63,30,13,15)",
              srg.has_value() && *srg == StronglyRegularParams{63, 30, 13, 15});
  }

  // 6: the qubit-qutrit dual is the line graph of K(4,3)
  criterion(6, "dual of the qubit-qutrit geometry is L(K(4,3))",
            is_isomorphic(dual6.adjacency, line_graph(complete_bipartite(4, 3))).has_value());

  // 7: the ring line over Z2 x Z3
  {
    const ProductRing ring({2, 3});
    const auto tables = ring_tables(ring);
    const auto printed = reference_ring_tables_z2xz3();
    const auto points = projective_line(ring);
    const auto counts = classify_points(ring, points);
    const bool ok = tables.addition == printed.addition &&
                    tables.multiplication == printed.multiplication &&
                    points.size() == 12 && counts.one_unit == 8 && counts.both_units == 2 &&
                    counts.both_zero_divisors == 2 &&
                    is_isomorphic(dual6.adjacency, neighbor_graph(ring)).has_value();
    criterion(7, "ring tables, 12-point projective line (8/2/2), neighbor graph", ok,
              std::to_string(points.size()) + " points, census " +
                  std::to_string(counts.one_unit) + "/" + std::to_string(counts.both_units) +
                  "/" + std::to_string(counts.both_zero_divisors));
  }

  // 8: maximum disjoint line sets
  {
    const auto sets6 = mub_line_sets(geo6);
    const auto sets9 = mub_line_sets(geo9);
    bool partitions = !sets9.empty();
    for (const auto& s : sets9) {
      std::set<int> covered;
      for (int l : s) covered.insert(geo9.lines[l].begin(), geo9.lines[l].end());
      partitions = partitions && s.size() == 10 && covered.size() == 80;
    }
    const bool six = !sets6.empty() && sets6.front().size() == 3;
    criterion(8, "disjoint line maxima: three for dimension six, ten for dimension nine",
              six && partitions,
              "sizes " + std::to_string(sets6.empty() ? 0 : sets6.front().size()) + " / " +
                  std::to_string(sets9.empty() ? 0 : sets9.front().size()));
    note("disjoint line set witnesses: " + std::to_string(sets6.size()) +
         " at dimension six, " + std::to_string(sets9.size()) + " at dimension nine");
  }

  // 9: anti-flag connection numbers of the qubit-qutrit geometry
  {
    const auto af = anti_flag_connection_numbers(geo6);
    bool ok = af.size() == 360;
    for (const auto& [key, v] : af) ok = ok && (v == 0 || v == 1);
    criterion(9, "qubit-qutrit anti-flag connection numbers lie in {0,1}", ok,
              std::to_string(af.size()) + " anti-flags");
  }

  // 10: multi-line families
  {
    const auto fams6 = multi_line_families(geo6);
    bool six = fams6.size() == 4;
    for (const auto& f : fams6) {
      six = six && f.lines.size() == 3 && f.shared_points.size() == 2 && f.hyperplane_closed;
    }
    six = six && shared_label_sets(geo6, scheme6, fams6) == kDigitPairs;

    const auto fams9 = multi_line_families(geo9);
    bool nine = fams9.size() == 40;
    std::vector<MultiLineFamily> anchored;
    for (const auto& f : fams9) {
      nine = nine && f.lines.size() == 4 && f.shared_points.size() == 2;
      bool pure_second = true;
      for (int p : f.shared_points) {
        pure_second = pure_second && geo9.points[p].factors[0] == FactorExponents{} &&
                      !(geo9.points[p].factors[1] == FactorExponents{});
      }
      if (pure_second) anchored.push_back(f);
    }
    nine = nine && anchored.size() == 4 &&
           shared_label_sets(geo9, scheme9, anchored) == kDigitPairs;
    criterion(10,
              "multi-line families: four closed triples at six, forty quadruples with four "
              "second-factor anchors at nine",
              six && nine,
              std::to_string(fams6.size()) + " / " + std::to_string(fams9.size()) +
                  " families, " + std::to_string(anchored.size()) + " anchored");
    note("strict hyperplane closure at dimension nine: " +
         std::to_string(multi_line_hyperplanes(geo9).size()) + " of 40 families");
  }

  // 11: perp sets in the two-qutrit dual
  {
    bool ok = dual9.adjacency.vertex_count() == 40;
    for (int v = 0; v < dual9.adjacency.vertex_count(); ++v) {
      ok = ok && perp_set(dual9, v).size() == 13;
    }
    criterion(11, "every perp set of the two-qutrit dual has 13 points", ok);
  }

  // 12: three-qubit dual sharing weights and the weight-three grid
  {
    std::set<int> weights;
    for (const auto& [u, v] : dual8.adjacency.edges()) {
      weights.insert(dual8.adjacency.weight(u, v));
    }
    GridSearchOptions opts;
    opts.required_weight = 3;
    opts.max_results = 1;
    const auto grids = find_grids(dual8, 3, 3, opts);
    criterion(12, "three-qubit line sharing is {1,3} and a weight-three 3x3 grid exists",
              weights == std::set<int>{1, 3} && !grids.empty());
    if (!grids.empty()) {
      const auto report = grid_sharing_report(geo8, grids.front());
      auto render = [](const GridSharingReport::LineClass& c) {
        std::string s = "pairwise [";
        for (size_t i = 0; i < c.pairwise_sizes.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(c.pairwise_sizes[i]);
        }
        return s + "] union " + std::to_string(c.union_size);
      };
      for (size_t r = 0; r < report.rows.size(); ++r) {
        note("grid row " + std::to_string(r) + ": " + render(report.rows[r]));
      }
      for (size_t c = 0; c < report.columns.size(); ++c) {
        note("grid column " + std::to_string(c) + ": " + render(report.columns[c]));
      }
    }
  }

  // 13: the two-qubit control system
  criterion(13, "two-qubit control: 15 operators, 15 lines of 3, no multi-lines, self-dual",
            geo4.points.size() == 15 && geo4.lines.size() == 15 && geo4.line_size() == 3 &&
                multi_line_pairs(geo4).empty() &&
                is_isomorphic(geo4.commutation, dual4.adjacency).has_value());

  // 14: command line determinism
  {
    bool ok = !cli.empty();
    std::string detail = cli.empty() ? "no cli path given" : "";
    if (ok) {
      const std::string f1 = "acceptance_cli_a.tmp", f2 = "acceptance_cli_b.tmp";
      const std::string v1 = "acceptance_cli_v1.tmp", v2 = "acceptance_cli_v2.tmp";
      const std::string graph_cmd = " graph --dims 3,3 --target dual --format json --out ";
      const std::string verify_cmd = " verify --dims 2,2 --out ";
      ok = run_command(cli + graph_cmd + f1) == 0 && run_command(cli + graph_cmd + f2) == 0 &&
           run_command(cli + verify_cmd + v1) == 0 && run_command(cli + verify_cmd + v2) == 0;
      if (!ok) {
        detail = "a cli invocation failed";
      } else {
        const auto g1 = read_file(f1), g2 = read_file(f2);
        const auto r1 = read_file(v1), r2 = read_file(v2);
        ok = !g1.empty() && g1 == g2 && !r1.empty() && r1 == r2 &&
             r1.find("result: PASS") != std::string::npos;
        detail = ok ? "byte-identical across runs" : "outputs differ or verify failed";
      }
      std::remove(f1.c_str());
      std::remove(f2.c_str());
      std::remove(v1.c_str());
      std::remove(v2.c_str());
    }
    criterion(14, "cli output is byte-deterministic and verify passes", ok, detail);
  }

  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << failures
            << " of 14 criteria failed)\n";
  return failures == 0 ? 0 : 1;
}
