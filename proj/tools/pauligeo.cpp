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

// Command line front end. Every command writes byte-deterministic output so
// repeated runs can be compared verbatim.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pauligeo/pauligeo.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pauligeo;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad dimension list '" + s + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("bad dimension list '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty dimension list");
  return out;
}

GraphFormat require_format(const std::string& format, const std::set<GraphFormat>& allowed,
                           const std::string& command) {
  const auto parsed = parse_format(format);
  if (!parsed) throw std::invalid_argument("unknown format '" + format + "'");
  if (!allowed.contains(*parsed)) {
    throw std::invalid_argument("format '" + format + "' is not available for '" +
                                command + "'");
  }
  return *parsed;
}

std::string dims_tag(const SystemSpec& spec) {
  std::string tag = spec.to_string();
  for (auto& c : tag) {
    if (c == ',') c = '_';
  }
  return tag;
}

std::string pair_label(const ProductRing& ring, const std::pair<int, int>& p) {
  (void)ring;
  return "(" + primed_label(p.first) + "," + primed_label(p.second) + ")";
}

std::string cmd_operators(const SystemSpec& spec, GraphFormat format) {
  const auto geo = build_geometry(spec);
  const auto scheme = reference_labels(geo);
  if (format == GraphFormat::json) {
    ordered_json j;
    j["system"] = spec.to_string();
    j["operators"] = ordered_json::array();
    for (size_t p = 0; p < geo.points.size(); ++p) {
      ordered_json row;
      row["index"] = p;
      row["label"] = scheme.point_labels[p];
      row["operator"] = to_string(geo.points[p]);
      j["operators"].push_back(row);
    }
    return j.dump(2) + "\n";
  }
  if (format == GraphFormat::csv) {
    std::string out = "index,label,operator\n";
    for (size_t p = 0; p < geo.points.size(); ++p) {
      out += std::to_string(p) + "," + scheme.point_labels[p] + "," +
             to_string(geo.points[p]) + "\n";
    }
    return out;
  }
  std::string out = std::to_string(geo.points.size()) + " operators for system " +
                    spec.to_string() + "\n";
  for (size_t p = 0; p < geo.points.size(); ++p) {
    out += std::to_string(p) + "\t" + scheme.point_labels[p] + "\t" +
           to_string(geo.points[p]) + "\n";
  }
  return out;
}

std::string cmd_graph(const SystemSpec& spec, const std::string& target,
                      GraphFormat format) {
  const auto geo = build_geometry(spec);
  const auto scheme = reference_labels(geo);
  if (target == "pauli") {
    return export_graph(geo.commutation, format, scheme.point_labels,
                        "pauli_" + dims_tag(spec));
  }
  if (target == "dual") {
    const auto dual = dual_graph(geo);
    return export_graph(dual.adjacency, format, line_names(geo, scheme),
                        "dual_" + dims_tag(spec));
  }
  throw std::invalid_argument("unknown target '" + target + "' (use pauli or dual)");
}

std::string cmd_lines(const SystemSpec& spec, GraphFormat format) {
  const auto geo = build_geometry(spec);
  const auto scheme = reference_labels(geo);
  const auto names = line_names(geo, scheme);
  if (format == GraphFormat::json) {
    ordered_json j;
    j["system"] = spec.to_string();
    j["line_size"] = geo.line_size();
    j["lines"] = ordered_json::array();
    for (size_t l = 0; l < geo.lines.size(); ++l) {
      ordered_json row;
      row["name"] = names[l];
      row["points"] = ordered_json::array();
      for (int p : geo.lines[l]) row["points"].push_back(scheme.point_labels[p]);
      j["lines"].push_back(row);
    }
    return j.dump(2) + "\n";
  }
  if (format == GraphFormat::csv) {
    std::string out = "name,points\n";
    for (size_t l = 0; l < geo.lines.size(); ++l) {
      out += names[l] + ",";
      for (size_t i = 0; i < geo.lines[l].size(); ++i) {
        if (i) out += " ";
        out += scheme.point_labels[geo.lines[l][i]];
      }
      out += "\n";
    }
    return out;
  }
  std::string out = std::to_string(geo.lines.size()) + " lines of size " +
                    std::to_string(geo.line_size()) + " for system " + spec.to_string() +
                    "\n";
  for (size_t l = 0; l < geo.lines.size(); ++l) {
    out += names[l] + ":";
    for (int p : geo.lines[l]) out += " " + scheme.point_labels[p];
    out += "\n";
  }
  return out;
}

std::string cmd_spectrum(const SystemSpec& spec, const std::string& target,
                         GraphFormat format) {
  const auto geo = build_geometry(spec);
  Spectrum s;
  if (target == "pauli") {
    s = spectrum_exact(geo.commutation);
  } else if (target == "dual") {
    s = spectrum_exact(dual_graph(geo).adjacency);
  } else {
    throw std::invalid_argument("unknown target '" + target + "' (use pauli or dual)");
  }
  if (format == GraphFormat::json) {
    ordered_json j;
    j["system"] = spec.to_string();
    j["graph"] = target;
    j["eigenvalues"] = ordered_json::array();
    for (auto [v, m] : s.eigenvalues) j["eigenvalues"].push_back({v, m});
    j["residual"] = ordered_json::array();
    for (const auto& c : s.residual_factor) j["residual"].push_back(c.get_str());
    return j.dump(2) + "\n";
  }
  return "spectrum of the " + target + " graph for system " + spec.to_string() + "\n" +
         s.to_string() + "\n";
}

std::string cmd_mubs(const SystemSpec& spec, GraphFormat format) {
  const auto geo = build_geometry(spec);
  const auto scheme = reference_labels(geo);
  const auto names = line_names(geo, scheme);
  const auto sets = mub_line_sets(geo);
  const size_t size = sets.empty() ? 0 : sets.front().size();
  if (format == GraphFormat::json) {
    ordered_json j;
    j["system"] = spec.to_string();
    j["set_size"] = size;
    j["witness_count"] = sets.size();
    j["witnesses"] = ordered_json::array();
    for (const auto& w : sets) {
      ordered_json row = ordered_json::array();
      for (int l : w) row.push_back(names[l]);
      j["witnesses"].push_back(row);
    }
    return j.dump(2) + "\n";
  }
  std::string out = "maximum pairwise-disjoint line sets for system " + spec.to_string() +
                    ": size " + std::to_string(size) + ", " + std::to_string(sets.size()) +
                    " witnesses\n";
  for (const auto& w : sets) {
    out += "{";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += ", ";
      out += names[w[i]];
    }
    out += "}\n";
  }
  return out;
}

std::string cmd_hyperplanes(const SystemSpec& spec, GraphFormat format) {
  const auto geo = build_geometry(spec);
  const auto scheme = reference_labels(geo);
  const auto names = line_names(geo, scheme);
  const auto families = multi_line_families(geo);
  if (format == GraphFormat::json) {
    ordered_json j;
    j["system"] = spec.to_string();
    j["families"] = ordered_json::array();
    for (const auto& f : families) {
      ordered_json row;
      row["shared_points"] = ordered_json::array();
      for (int p : f.shared_points) row["shared_points"].push_back(scheme.point_labels[p]);
      row["lines"] = ordered_json::array();
      for (int l : f.lines) row["lines"].push_back(names[l]);
      row["hyperplane"] = f.hyperplane_closed;
      j["families"].push_back(row);
    }
    return j.dump(2) + "\n";
  }
  std::string out = std::to_string(families.size()) + " multi-line families for system " +
                    spec.to_string() + "\n";
  for (const auto& f : families) {
    out += "shared {";
    for (size_t i = 0; i < f.shared_points.size(); ++i) {
      if (i) out += ", ";
      out += scheme.point_labels[f.shared_points[i]];
    }
    out += "} lines {";
    for (size_t i = 0; i < f.lines.size(); ++i) {
      if (i) out += ", ";
      out += names[f.lines[i]];
    }
    out += std::string("} hyperplane ") + (f.hyperplane_closed ? "yes" : "no") + "\n";
  }
  return out;
}

std::string cmd_ringline(const std::vector<int>& moduli, GraphFormat format) {
  const ProductRing ring(moduli);
  const auto cls = classify_elements(ring);
  const auto points = projective_line(ring);
  const auto counts = classify_points(ring, points);
  const auto graph = neighbor_graph(ring);
  std::string tag = "Z" + std::to_string(moduli.front());
  for (size_t k = 1; k < moduli.size(); ++k) tag += "xZ" + std::to_string(moduli[k]);

  if (format == GraphFormat::json) {
    ordered_json j;
    j["ring"] = tag;
    j["elements"] = ring.size();
    j["units"] = ordered_json::array();
    for (int u : cls.units) j["units"].push_back(primed_label(u));
    j["zero_divisors"] = ordered_json::array();
    for (int z : cls.zero_divisors) j["zero_divisors"].push_back(primed_label(z));
    j["points"] = ordered_json::array();
    for (const auto& p : points) {
      ordered_json row;
      row["representative"] = pair_label(ring, p.representative);
      row["members"] = ordered_json::array();
      for (const auto& m : p.members) row["members"].push_back(pair_label(ring, m));
      j["points"].push_back(row);
    }
    j["types"] = {{"one_unit", counts.one_unit},
                  {"both_units", counts.both_units},
                  {"both_zero_divisors", counts.both_zero_divisors}};
    j["neighbor_edges"] = graph.edge_count();
    return j.dump(2) + "\n";
  }
  std::string out = "ring " + tag + ": " + std::to_string(ring.size()) + " elements\n";
  out += "units:";
  for (int u : cls.units) out += " " + primed_label(u);
  out += "\nzero divisors (zero included):";
  for (int z : cls.zero_divisors) out += " " + primed_label(z);
  out += "\nprojective line: " + std::to_string(points.size()) + " points\n";
  for (size_t i = 0; i < points.size(); ++i) {
    out += "  " + std::to_string(i) + ": " + pair_label(ring, points[i].representative) +
           " {";
    for (size_t m = 0; m < points[i].members.size(); ++m) {
      if (m) out += " ";
      out += pair_label(ring, points[i].members[m]);
    }
    out += "}\n";
  }
  out += "point types: one-unit " + std::to_string(counts.one_unit) + ", both-units " +
         std::to_string(counts.both_units) + ", both-zero-divisors " +
         std::to_string(counts.both_zero_divisors) + "\n";
  out += "neighbor graph: " + std::to_string(graph.vertex_count()) + " vertices, " +
         std::to_string(graph.edge_count()) + " edges\n";
  return out;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << content;
  if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commutation geometry of multipartite Pauli operators"};
  app.require_subcommand(1);

  std::string dims = "2,3";
  std::string moduli = "2,3";
  std::string format = "text";
  std::string target = "pauli";
  std::string out_path;
  std::string verify_dims_str;

  auto add_common = [&](CLI::App* sub, bool with_target = false) {
    sub->add_option("--dims", dims, "factor dimensions, comma separated")
        ->capture_default_str();
    sub->add_option("--format", format, "output format")->capture_default_str();
    sub->add_option("--out", out_path, "write to a file instead of stdout");
    if (with_target) {
      sub->add_option("--target", target, "pauli or dual")->capture_default_str();
    }
    return sub;
  };

  auto* sub_operators = add_common(app.add_subcommand(
      "operators", "list the non-identity generalized Pauli operators"));
  auto* sub_graph = add_common(
      app.add_subcommand("graph", "export the commutation graph or its dual"), true);
  auto* sub_lines =
      add_common(app.add_subcommand("lines", "list the maximum commuting lines"));
  auto* sub_spectrum = add_common(
      app.add_subcommand("spectrum", "exact adjacency spectrum of a graph"), true);
  auto* sub_mubs = add_common(app.add_subcommand(
      "mubs", "maximum sets of pairwise disjoint lines (mutually unbiased bases)"));
  auto* sub_hyperplanes = add_common(app.add_subcommand(
      "hyperplanes", "multi-line families and their hyperplane closure"));
  auto* sub_ringline = app.add_subcommand(
      "ringline", "projective line over a product of modular rings");
  sub_ringline->add_option("--moduli", moduli, "ring moduli, comma separated")
      ->capture_default_str();
  sub_ringline->add_option("--format", format, "output format")->capture_default_str();
  sub_ringline->add_option("--out", out_path, "write to a file instead of stdout");
  auto* sub_verify = app.add_subcommand(
      "verify", "check the frozen combinatorial facts for the standard systems");
  sub_verify->add_option("--dims", verify_dims_str,
                         "verify one system instead of all four");
  sub_verify->add_option("--out", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    static const std::set<GraphFormat> kAll{GraphFormat::dot, GraphFormat::json,
                                            GraphFormat::csv, GraphFormat::text};
    static const std::set<GraphFormat> kTabular{GraphFormat::json, GraphFormat::csv,
                                                GraphFormat::text};
    static const std::set<GraphFormat> kStructured{GraphFormat::json, GraphFormat::text};

    if (sub_operators->parsed()) {
      const SystemSpec spec(parse_int_list(dims));
      emit(out_path, cmd_operators(spec, require_format(format, kTabular, "operators")));
    } else if (sub_graph->parsed()) {
      const SystemSpec spec(parse_int_list(dims));
      emit(out_path, cmd_graph(spec, target, require_format(format, kAll, "graph")));
    } else if (sub_lines->parsed()) {
      const SystemSpec spec(parse_int_list(dims));
      emit(out_path, cmd_lines(spec, require_format(format, kTabular, "lines")));
    } else if (sub_spectrum->parsed()) {
      const SystemSpec spec(parse_int_list(dims));
      emit(out_path,
           cmd_spectrum(spec, target, require_format(format, kStructured, "spectrum")));
    } else if (sub_mubs->parsed()) {
      const SystemSpec spec(parse_int_list(dims));
      emit(out_path, cmd_mubs(spec, require_format(format, kStructured, "mubs")));
    } else if (sub_hyperplanes->parsed()) {
      const SystemSpec spec(parse_int_list(dims));
      emit(out_path,
           cmd_hyperplanes(spec, require_format(format, kStructured, "hyperplanes")));
    } else if (sub_ringline->parsed()) {
      emit(out_path, cmd_ringline(parse_int_list(moduli),
                                  require_format(format, kStructured, "ringline")));
    } else if (sub_verify->parsed()) {
      std::vector<VerifyReport> reports;
      if (verify_dims_str.empty()) {
        reports = verify_all();
      } else {
        reports.push_back(verify_dims(parse_int_list(verify_dims_str)));
      }
      emit(out_path, render_reports(reports));
      for (const auto& r : reports) {
        if (!r.ok()) return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
