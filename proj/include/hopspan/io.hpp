#pragma once

// File formats. Points: CSV, one point per line, '#' comments. Trees: JSON
// {n, root, parent, weight}. Graphs: "# n <count>" then one "u v w" line per
// edge. Doubles are written with %.17g so every file round-trips exactly.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopspan/core.hpp"

namespace hopspan {

using json = nlohmann::json;

inline std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& tok, const std::string& where) {
  const std::string t = trim(tok);
  char* end = nullptr;
  const double x = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size())
    throw Error("parse_error", where + ": not a number: '" + t + "'");
  return x;
}

inline long parse_long(const std::string& tok, const std::string& where) {
  const std::string t = trim(tok);
  char* end = nullptr;
  const long x = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size())
    throw Error("parse_error", where + ": not an integer: '" + t + "'");
  return x;
}

inline std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io_error", "cannot open " + path);
  return in;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io_error", "cannot write " + path);
  return out;
}

// ---------------------------------------------------------------------------
// Points

inline void write_points(std::ostream& out, const PointSet& pts) {
  out << "# schema: points-v1\n";
  for (int i = 0; i < pts.size(); ++i) {
    auto p = pts[i];
    for (int a = 0; a < pts.dim(); ++a) out << (a ? "," : "") << fmt_double(p[a]);
    out << '\n';
  }
}

inline PointSet read_points(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ','))
      row.push_back(detail::parse_double(tok, "line " + std::to_string(lineno)));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("parse_error", "no points");
  const int dim = static_cast<int>(rows.front().size());
  return PointSet(dim, std::move(rows));
}

// ---------------------------------------------------------------------------
// Trees

inline json tree_to_json(const RootedWeightedTree& t) {
  json j;
  j["n"] = t.size();
  j["root"] = t.size() ? t.root() : kNone;
  std::vector<int> parent(t.size());
  std::vector<double> weight(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    parent[v] = t.parent(v);
    weight[v] = t.weight(v);
  }
  j["parent"] = parent;
  j["weight"] = weight;
  return j;
}

inline RootedWeightedTree tree_from_json(const json& j) {
  try {
    auto parent = j.at("parent").get<std::vector<Vertex>>();
    auto weight = j.at("weight").get<std::vector<double>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(parent.size()))
      throw Error("parse_error", "tree: n does not match parent array");
    RootedWeightedTree t(std::move(parent), std::move(weight));
    if (j.contains("root") && j.at("root").get<int>() != t.root())
      throw Error("parse_error", "tree: root does not match parent array");
    return t;
  } catch (const json::exception& e) {
    throw Error("parse_error", std::string("tree: ") + e.what());
  }
}

inline void write_tree(std::ostream& out, const RootedWeightedTree& t) {
  out << tree_to_json(t).dump() << '\n';
}

inline RootedWeightedTree read_tree(std::istream& in) {
  json j;
  try {
    j = json::parse(detail::slurp(in));
  } catch (const json::exception& e) {
    throw Error("parse_error", std::string("tree: ") + e.what());
  }
  return tree_from_json(j);
}

// ---------------------------------------------------------------------------
// Graphs

inline void write_graph(std::ostream& out, const SpannerGraph& g) {
  out << "# n " << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << fmt_double(e.w) << '\n';
}

inline SpannerGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  SpannerGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (t[0] == '#') {
      std::istringstream ss(t.substr(1));
      std::string key, value;
      if (ss >> key >> value && key == "n" && n < 0) {
        n = static_cast<int>(detail::parse_long(value, where));
        if (n < 0) throw Error("parse_error", where + ": negative n");
        g = SpannerGraph(n);
      }
      continue;
    }
    if (n < 0) throw Error("parse_error", where + ": edge before '# n' header");
    std::istringstream ss(t);
    std::string a, b, w, extra;
    if (!(ss >> a >> b >> w) || (ss >> extra))
      throw Error("parse_error", where + ": expected 'u v w'");
    const long u = detail::parse_long(a, where), v = detail::parse_long(b, where);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw Error("parse_error", where + ": bad endpoints");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), detail::parse_double(w, where));
  }
  if (n < 0) throw Error("parse_error", "graph: missing '# n' header");
  return g;
}

// JSON with sorted keys, two-space indent, trailing newline.
inline void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace hopspan
