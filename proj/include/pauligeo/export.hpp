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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pauligeo/graph.hpp"

namespace pauligeo {

enum class GraphFormat { dot, json, csv, text };

inline std::optional<GraphFormat> parse_format(const std::string& s) {
  if (s == "dot") return GraphFormat::dot;
  if (s == "json") return GraphFormat::json;
  if (s == "csv") return GraphFormat::csv;
  if (s == "text") return GraphFormat::text;
  return std::nullopt;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Undirected DOT. Node ids are vertex indices with the label attached;
/// weighted graphs annotate every edge with weight=k.
inline std::string export_graph_dot(const Graph& g,
                                    const std::vector<std::string>& node_labels,
                                    const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" +
           detail::dot_escape(node_labels.at(v)) + "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v);
    if (g.has_weights()) out += " [weight=" + std::to_string(g.weight(u, v)) + "]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

/// {"nodes": [...labels...], "edges": [[u, v, w], ...]} with edges ascending
/// by (u, v); unweighted edges export w = 1.
inline std::string export_graph_json(const Graph& g,
                                     const std::vector<std::string>& node_labels) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) j["nodes"].push_back(node_labels.at(v));
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) {
    j["edges"].push_back({u, v, g.weight(u, v)});
  }
  return j.dump(2) + "\n";
}

/// Header u,v,w then one edge per row; just the header for an empty graph.
inline std::string export_graph_csv(const Graph& g) {
  std::string out = "u,v,w\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + "," + std::to_string(v) + "," +
           std::to_string(g.weight(u, v)) + "\n";
  }
  return out;
}

/// Summary plus labeled edge list; the human-readable form.
inline std::string export_graph_text(const Graph& g,
                                     const std::vector<std::string>& node_labels,
                                     const std::string& name) {
  std::string out = "graph " + name + ": " + std::to_string(g.vertex_count()) +
                    " vertices, " + std::to_string(g.edge_count()) + " edges\n";
  for (const auto& [u, v] : g.edges()) {
    out += node_labels.at(u) + " -- " + node_labels.at(v);
    if (g.has_weights()) out += " [weight=" + std::to_string(g.weight(u, v)) + "]";
    out += "\n";
  }
  return out;
}

inline std::string export_graph(const Graph& g, GraphFormat format,
                                const std::vector<std::string>& node_labels,
                                const std::string& name) {
  switch (format) {
    case GraphFormat::dot:
      return export_graph_dot(g, node_labels, name);
    case GraphFormat::json:
      return export_graph_json(g, node_labels);
    case GraphFormat::csv:
      return export_graph_csv(g);
    case GraphFormat::text:
      return export_graph_text(g, node_labels, name);
  }
  throw std::logic_error("export_graph: unknown format");
}

/// Rebuilds a graph from its JSON export. Edges of weight 1 come back
/// unweighted, which re-exports to identical bytes.
inline Graph import_graph_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Graph g(static_cast<int>(j.at("nodes").size()));
  for (const auto& e : j.at("edges")) {
    const int u = e.at(0).get<int>();
    const int v = e.at(1).get<int>();
    const int w = e.at(2).get<int>();
    if (w == 1) {
      g.add_edge(u, v);
    } else {
      g.add_edge(u, v, w);
    }
  }
  return g;
}

}  // namespace pauligeo
