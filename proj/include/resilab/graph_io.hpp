#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "resilab/graph.hpp"

// Edge-list text format:
//
//   # optional comments
//   n <vertex-count>
//   u v          (one line per edge, u < v)
//
// Metadata (label, generator parameters, seed, ...) lives in a sibling
// "<file>.meta.json".
namespace resilab::io {

using nlohmann::json;

struct EdgeListFile {
  int n = 0;
  std::vector<Edge> edges;
};

inline EdgeListFile parse_edge_list(std::istream& in, const std::string& source = "<stream>") {
  EdgeListFile out;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error(source + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!have_header) {
      if (first != "n") fail("expected header 'n <vertex-count>'");
      if (!(fields >> out.n) || out.n < 0) fail("bad vertex count");
      have_header = true;
      continue;
    }
    Edge e;
    try {
      e.u = std::stoi(first);
    } catch (const std::exception&) {
      fail("bad vertex id '" + first + "'");
    }
    if (!(fields >> e.v)) fail("edge line needs two vertex ids");
    if (e.u >= e.v) fail("edge endpoints must satisfy u < v");
    if (e.v >= out.n) fail("vertex id out of range");
    std::string extra;
    if (fields >> extra) fail("trailing data on edge line");
    out.edges.push_back(e);
  }
  if (!have_header) throw std::runtime_error(source + ": missing 'n' header");
  return out;
}

inline Graph read_graph(std::istream& in, const std::string& source = "<stream>") {
  EdgeListFile file = parse_edge_list(in, source);
  return Graph::from_edges(file.n, file.edges);
}

inline void write_edge_list(std::ostream& out, int n, std::span<const Edge> edges,
                            const std::string& comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "n " << n << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

inline void write_graph(std::ostream& out, const Graph& g) {
  write_edge_list(out, g.order(), g.edges(), g.label());
}

inline std::string metadata_path(const std::string& path) { return path + ".meta.json"; }

inline json read_metadata(const std::string& path) {
  std::ifstream in(metadata_path(path));
  if (!in) return json::object();
  return json::parse(in);
}

inline void write_metadata(const std::string& path, const json& meta) {
  std::ofstream out(metadata_path(path));
  if (!out) throw std::runtime_error("cannot write " + metadata_path(path));
  out << meta.dump(2) << '\n';
}

/// Reads a graph file; the label comes from the metadata when present.
inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  Graph g = read_graph(in, path);
  json meta = read_metadata(path);
  std::string label = meta.contains("label") ? meta["label"].get<std::string>()
                                             : std::filesystem::path(path).filename().string();
  return g.with_label(std::move(label));
}

inline void save_graph(const std::string& path, const Graph& g, json meta = json::object()) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file " + path);
  write_graph(out, g);
  if (!out) throw std::runtime_error("write failed for " + path);
  meta["label"] = g.label();
  meta["n"] = g.order();
  meta["edges"] = g.edge_count();
  write_metadata(path, meta);
}

}  // namespace resilab::io
