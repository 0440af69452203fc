#ifndef RCOVER_DOT_HPP
#define RCOVER_DOT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "rcover/atoms.hpp"
#include "rcover/blocks.hpp"
#include "rcover/graph.hpp"
#include "rcover/reduction.hpp"

namespace rcover {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string edge_style(const Graph& g, int e) {
  std::string s;
  switch (g.type[e]) {
    case EdgeType::halvable: s = "style=dashed, dir=none"; break;
    case EdgeType::undirected: s = "dir=none"; break;
    case EdgeType::directed: s = "dir=forward"; break;
  }
  if (g.color[e] != 0) s += ", label=" + dot_quote(std::to_string(g.color[e]));
  return s;
}

}  // namespace detail

// Vertices listed in highlight are filled. Free ends (pendants, half-edges)
// end in anonymous point nodes.
inline std::string to_dot(const Graph& g, const std::vector<int>& highlight = {}) {
  std::ostringstream o;
  o << "digraph G {\n  node [shape=circle];\n";
  std::vector<char> hl(g.num_vertices(), 0);
  for (int v : highlight) hl[v] = 1;
  for (int v = 0; v < g.num_vertices(); ++v) {
    o << "  n" << v << " [label=" << detail::dot_quote(g.vertex_names[v]);
    if (hl[v]) o << ", style=filled, fillcolor=lightblue";
    o << "];\n";
  }
  auto point = [&](int h) {
    std::string p = "p" + std::to_string(h);
    o << "  " << p << " [shape=point, label=\"\"];\n";
    return p;
  };
  auto end = [&](int h) { return g.vert[h] >= 0 ? "n" + std::to_string(g.vert[h]) : point(h); };
  for (int e : g.edge_ids()) {
    int m = g.mate[e];
    int a = e, b = m;
    if (g.type[e] == EdgeType::directed) a = g.tail_dart(e), b = g.mate[a];
    std::string x = end(a);
    std::string y = m == e ? point(e) : end(b);
    o << "  " << x << " -> " << y << " [" << detail::edge_style(g, e) << "];\n";
  }
  o << "}\n";
  return o.str();
}

inline std::string to_dot(const BlockTree& bt, const Graph& g) {
  std::ostringstream o;
  o << "graph blocks {\n";
  for (int b = 0; b < bt.num_blocks(); ++b) {
    std::string label = std::string(to_string(bt.blocks[b].kind)) + "\\n{";
    for (std::size_t i = 0; i < bt.blocks[b].vertices.size(); ++i)
      label += (i ? "," : "") + g.vertex_names[bt.blocks[b].vertices[i]];
    label += "}";
    o << "  b" << b << " [shape=box, label=\"" << label << "\"";
    if (bt.center == b) o << ", penwidth=3";
    o << "];\n";
  }
  for (std::size_t i = 0; i < bt.articulations.size(); ++i) {
    int x = bt.num_blocks() + static_cast<int>(i);
    o << "  a" << i << " [shape=ellipse, label=" << detail::dot_quote(g.vertex_names[bt.articulations[i]]);
    if (bt.center == x) o << ", penwidth=3";
    o << "];\n";
  }
  for (std::size_t i = 0; i < bt.articulations.size(); ++i)
    for (int b : bt.adj[bt.num_blocks() + static_cast<int>(i)]) o << "  a" << i << " -- b" << b << ";\n";
  o << "}\n";
  return o.str();
}

inline std::string to_dot(const ReductionSeries& rs) {
  std::ostringstream o;
  o << "digraph reduction {\n  node [shape=box];\n";
  o << "  t0 [label=\"G" << rs.length() << " " << to_string(rs.primitive.tag) << "\", penwidth=3];\n";
  for (std::size_t i = 1; i < rs.tree.size(); ++i) {
    const TreeNode& n = rs.tree[i];
    const ReductionStep& st = rs.steps[n.level];
    const Atom& a = st.atoms[n.atom];
    o << "  t" << i << " [label=\"level " << n.level << " atom " << n.atom << "\\n" << to_string(a.kind);
    if (!a.is_block()) o << " " << to_string(a.symmetry);
    o << "\\nclass " << st.atom_class[n.atom] << "\"];\n";
  }
  for (std::size_t i = 1; i < rs.tree.size(); ++i) o << "  t" << rs.tree[i].parent << " -> t" << i << ";\n";
  o << "}\n";
  return o.str();
}

}  // namespace rcover

#endif  // RCOVER_DOT_HPP
