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
#include <stdexcept>
#include <string>
#include <vector>

#include "pauligeo/geometry.hpp"

namespace pauligeo {

namespace detail {

// Single-factor operator tables in classic catalog order. The qubit order is
// Z, X, Y (the letter blocks); the qutrit order is Z, X, Y, V, Z^2, X^2,
// Y^2, V^2 with Y = XZ and V = XZ^2, all modulo phase.
inline const std::vector<FactorExponents>& qubit_block_order() {
  static const std::vector<FactorExponents> t = {{0, 1}, {1, 0}, {1, 1}};
  return t;
}

inline const std::vector<FactorExponents>& qutrit_block_order() {
  static const std::vector<FactorExponents> t = {{0, 1}, {1, 0}, {1, 1}, {1, 2},
                                                 {0, 2}, {2, 0}, {2, 2}, {2, 1}};
  return t;
}

}  // namespace detail

/// Point labels for a geometry. The two-factor systems of dimension 6 and 9
/// use the classic digit/letter catalog: digits for second-factor operators,
/// letters for first-factor ones, numbers in blocks of 8 for the mixed
/// products. Everything else falls back to canonical exponent strings.
struct LabelScheme {
  std::vector<std::string> point_labels;
  bool reference = false;  // true when the digit/letter catalog applies

  int label_index(const std::string& label) const {
    auto it = std::find(point_labels.begin(), point_labels.end(), label);
    if (it == point_labels.end()) {
      throw std::invalid_argument("label_index: unknown label " + label);
    }
    return static_cast<int>(it - point_labels.begin());
  }
};

inline LabelScheme reference_labels(const IncidenceGeometry& geo) {
  LabelScheme scheme;
  scheme.point_labels.resize(geo.points.size());
  const auto& dims = geo.spec.factor_dims();
  const bool catalog = (dims == std::vector<int>{2, 3}) || (dims == std::vector<int>{3, 3});
  if (!catalog) {
    for (size_t i = 0; i < geo.points.size(); ++i) {
      scheme.point_labels[i] = to_string(geo.points[i]);
    }
    return scheme;
  }
  scheme.reference = true;
  const auto& first_block =
      dims[0] == 2 ? detail::qubit_block_order() : detail::qutrit_block_order();
  const auto& second_block = detail::qutrit_block_order();
  auto label_of = [&](const PauliOperator& op) -> std::string {
    const bool first_id = (op.factors[0] == FactorExponents{});
    const bool second_id = (op.factors[1] == FactorExponents{});
    if (first_id) {
      // digits 1..8 for pure second-factor operators
      auto it = std::find(second_block.begin(), second_block.end(), op.factors[1]);
      return std::to_string(1 + (it - second_block.begin()));
    }
    auto first_it = std::find(first_block.begin(), first_block.end(), op.factors[0]);
    const int i = static_cast<int>(first_it - first_block.begin());
    if (second_id) {
      return std::string(1, static_cast<char>('a' + i));
    }
    auto second_it = std::find(second_block.begin(), second_block.end(), op.factors[1]);
    const int j = static_cast<int>(second_it - second_block.begin());
    return std::to_string(9 + 8 * i + j);
  };
  for (size_t p = 0; p < geo.points.size(); ++p) {
    scheme.point_labels[p] = label_of(geo.points[p]);
  }
  return scheme;
}

struct ReferenceLine {
  std::string name;
  std::vector<std::string> point_labels;
};

/// The classic printed line catalog for the dimension-6 and dimension-9
/// two-factor systems, verbatim. Empty for any other system. Serves as a
/// cross-check target; the computed cliques are the ground truth and
/// catalog_diff reports where the print deviates from them.
inline std::vector<ReferenceLine> reference_line_catalog(const SystemSpec& spec) {
  const auto& dims = spec.factor_dims();
  auto mk = [](const char* name, std::vector<std::string> pts) {
    return ReferenceLine{name, std::move(pts)};
  };
  if (dims == std::vector<int>{2, 3}) {
    return {
        mk("L1", {"1", "5", "a", "9", "13"}),  mk("L2", {"2", "6", "a", "10", "14"}),
        mk("L3", {"3", "7", "a", "11", "15"}), mk("L4", {"4", "8", "a", "12", "16"}),
        mk("M1", {"1", "5", "b", "17", "21"}), mk("M2", {"2", "6", "b", "18", "22"}),
        mk("M3", {"3", "7", "b", "19", "23"}), mk("M4", {"4", "8", "b", "19", "24"}),
        mk("N1", {"1", "5", "c", "25", "29"}), mk("N2", {"2", "6", "c", "26", "30"}),
        mk("N3", {"3", "7", "c", "27", "31"}), mk("N4", {"4", "8", "c", "28", "32"}),
    };
  }
  if (dims == std::vector<int>{3, 3}) {
    auto line = [&](const char* name, std::initializer_list<const char*> pts) {
      std::vector<std::string> v;
      for (const char* p : pts) v.emplace_back(p);
      return mk(name, std::move(v));
    };
    return {
        line("L1", {"1", "5", "a", "9", "13", "e", "41", "45"}),
        line("L2", {"2", "6", "a", "10", "14", "e", "42", "46"}),
        line("L3", {"3", "7", "a", "11", "15", "e", "43", "47"}),
        line("L4", {"4", "8", "a", "12", "16", "e", "44", "48"}),
        line("M1", {"1", "5", "b", "17", "21", "f", "49", "53"}),
        line("M2", {"2", "6", "b", "18", "22", "f", "50", "54"}),
        line("M3", {"3", "7", "b", "19", "23", "f", "51", "55"}),
        line("M4", {"4", "8", "b", "20", "24", "f", "52", "56"}),
        line("N1", {"1", "5", "c", "25", "29", "g", "57", "61"}),
        line("N2", {"2", "6", "c", "26", "30", "g", "58", "62"}),
        line("N3", {"3", "7", "c", "27", "31", "g", "59", "63"}),
        line("N4", {"4", "8", "c", "28", "32", "g", "60", "64"}),
        line("P1", {"1", "5", "d", "33", "37", "h", "65", "69"}),
        line("P2", {"2", "6", "d", "34", "38", "h", "66", "70"}),
        line("P3", {"3", "7", "d", "35", "39", "h", "67", "71"}),
        line("P4", {"4", "8", "d", "36", "40", "h", "68", "72"}),
        line("X1", {"9", "22", "32", "39", "45", "50", "60", "67"}),
        line("X2", {"10", "17", "27", "40", "46", "53", "63", "68"}),
        line("X3", {"11", "20", "30", "33", "47", "56", "58", "69"}),
        line("X4", {"12", "23", "25", "34", "48", "51", "61", "70"}),
        line("X5", {"13", "18", "28", "35", "41", "54", "64", "71"}),
        line("X6", {"14", "21", "31", "36", "42", "49", "59", "72"}),
        line("X7", {"15", "24", "26", "37", "43", "52", "62", "65"}),
        line("X8", {"16", "19", "29", "38", "44", "55", "57", "66"}),
        line("Y1", {"9", "23", "30", "40", "45", "51", "58", "68"}),
        line("Y2", {"10", "19", "32", "33", "46", "55", "60", "69"}),
        line("Y3", {"11", "22", "25", "36", "47", "50", "61", "72"}),
        line("Y4", {"12", "17", "26", "39", "48", "53", "62", "67"}),
        line("Y5", {"13", "20", "27", "34", "41", "56", "63", "70"}),
        line("Y6", {"14", "23", "28", "37", "42", "51", "64", "65"}),
        line("Y7", {"15", "18", "29", "40", "43", "54", "57", "68"}),
        line("Y8", {"16", "21", "30", "35", "44", "49", "58", "71"}),
        line("Z1", {"9", "24", "31", "38", "45", "52", "59", "66"}),
        line("Z2", {"10", "24", "25", "35", "46", "52", "61", "71"}),
        line("Z3", {"11", "17", "28", "38", "47", "53", "64", "66"}),
        line("Z4", {"12", "18", "31", "33", "48", "54", "59", "69"}),
        line("Z5", {"13", "19", "26", "36", "41", "55", "62", "72"}),
        line("Z6", {"14", "20", "29", "39", "42", "56", "57", "67"}),
        line("Z7", {"15", "21", "32", "34", "43", "49", "60", "70"}),
        line("Z8", {"16", "22", "27", "37", "44", "50", "63", "65"}),
    };
  }
  return {};
}

namespace detail {

inline std::vector<std::string> line_label_set(const IncidenceGeometry& geo,
                                               const LabelScheme& scheme, int line) {
  std::vector<std::string> out;
  for (int p : geo.lines.at(line)) out.push_back(scheme.point_labels.at(p));
  std::sort(out.begin(), out.end());
  return out;
}

// overlap size between a computed line and a catalog entry, as label sets
inline int catalog_overlap(const std::vector<std::string>& computed,
                           const std::vector<std::string>& printed) {
  int c = 0;
  for (const auto& p : printed) {
    if (std::binary_search(computed.begin(), computed.end(), p)) ++c;
  }
  return c;
}

}  // namespace detail

/// Names for the computed lines. With a reference catalog each computed line
/// takes the name of the catalog entry it matches best (unique by
/// construction at these systems); otherwise names are "line00", "line01"...
inline std::vector<std::string> line_names(const IncidenceGeometry& geo,
                                           const LabelScheme& scheme) {
  const auto catalog = reference_line_catalog(geo.spec);
  std::vector<std::string> names(geo.lines.size());
  if (catalog.empty() || !scheme.reference) {
    for (size_t l = 0; l < geo.lines.size(); ++l) {
      std::string n = std::to_string(l);
      if (n.size() < 2) n.insert(n.begin(), '0');
      names[l] = "line" + n;
    }
    return names;
  }
  if (catalog.size() != geo.lines.size()) {
    throw std::logic_error("line_names: catalog size mismatch");
  }
  std::vector<bool> taken(catalog.size(), false);
  for (size_t l = 0; l < geo.lines.size(); ++l) {
    const auto computed = detail::line_label_set(geo, scheme, static_cast<int>(l));
    int best = -1, best_overlap = -1;
    for (size_t k = 0; k < catalog.size(); ++k) {
      if (taken[k]) continue;
      auto printed = catalog[k].point_labels;
      std::sort(printed.begin(), printed.end());
      const int o = detail::catalog_overlap(computed, printed);
      if (o > best_overlap) {
        best_overlap = o;
        best = static_cast<int>(k);
      }
    }
    // every computed line must agree with its catalog entry on all but at
    // most one point, or the naming would be guesswork
    if (best < 0 || best_overlap + 1 < static_cast<int>(computed.size())) {
      throw std::logic_error("line_names: no close catalog match for a computed line");
    }
    taken[best] = true;
    names[l] = catalog[best].name;
  }
  return names;
}

struct CatalogDiff {
  std::string name;
  std::vector<std::string> catalog_points;   // sorted
  std::vector<std::string> computed_points;  // sorted
};

/// Catalog entries that differ from the matching computed line. The computed
/// cliques are authoritative; entries listed here are printing defects.
inline std::vector<CatalogDiff> catalog_diff(const IncidenceGeometry& geo,
                                             const LabelScheme& scheme) {
  const auto catalog = reference_line_catalog(geo.spec);
  std::vector<CatalogDiff> out;
  if (catalog.empty() || !scheme.reference) return out;
  const auto names = line_names(geo, scheme);
  std::map<std::string, std::vector<std::string>> computed_by_name;
  for (size_t l = 0; l < geo.lines.size(); ++l) {
    computed_by_name[names[l]] = detail::line_label_set(geo, scheme, static_cast<int>(l));
  }
  for (const auto& entry : catalog) {
    auto printed = entry.point_labels;
    std::sort(printed.begin(), printed.end());
    const auto& computed = computed_by_name.at(entry.name);
    if (printed != computed) {
      out.push_back(CatalogDiff{entry.name, printed, computed});
    }
  }
  return out;
}

}  // namespace pauligeo
