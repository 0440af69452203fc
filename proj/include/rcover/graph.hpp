#ifndef RCOVER_GRAPH_HPP
#define RCOVER_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rcover {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EdgeType : std::uint8_t { halvable = 0, undirected = 1, directed = 2 };

inline const char* to_string(EdgeType t) {
  switch (t) {
    case EdgeType::halvable: return "halvable";
    case EdgeType::undirected: return "undirected";
    case EdgeType::directed: return "directed";
  }
  return "?";
}

inline std::optional<EdgeType> parse_edge_type(std::string_view s) {
  if (s == "halvable") return EdgeType::halvable;
  if (s == "undirected") return EdgeType::undirected;
  if (s == "directed") return EdgeType::directed;
  return std::nullopt;
}

enum class EdgeKind { standard, loop, pendant, free_edge, half_edge, free_half_edge };

inline const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::standard: return "edge";
    case EdgeKind::loop: return "loop";
    case EdgeKind::pendant: return "pendant";
    case EdgeKind::free_edge: return "free";
    case EdgeKind::half_edge: return "halfedge";
    case EdgeKind::free_half_edge: return "free-halfedge";
  }
  return "?";
}

// Half-edge multigraph. Darts are indexed 0..num_darts()-1, vertices
// 0..num_vertices()-1. Per-dart attributes of the two darts of an edge agree
// except for dir, which is +1 on the tail dart and -1 on the head dart of a
// directed edge and 0 everywhere else.
struct Graph {
  std::vector<std::string> vertex_names;
  std::vector<int> mate;
  std::vector<int> vert;
  std::vector<EdgeType> type;
  std::vector<int> color;
  std::vector<std::int8_t> dir;
  std::vector<std::string> edge_names;

  bool operator==(const Graph&) const = default;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_darts() const { return static_cast<int>(mate.size()); }

  int num_edges() const {
    int e = 0;
    for (int h = 0; h < num_darts(); ++h) e += (mate[h] > h);
    return e;
  }

  int num_half_edges() const {
    int c = 0;
    for (int h = 0; h < num_darts(); ++h) c += (mate[h] == h);
    return c;
  }

  // Edge identifier: the smaller dart of the lambda-orbit.
  int edge_of(int h) const { return std::min(h, mate[h]); }
  bool is_edge_rep(int h) const { return mate[h] >= h; }

  std::vector<int> edge_ids() const {
    std::vector<int> out;
    for (int h = 0; h < num_darts(); ++h)
      if (is_edge_rep(h)) out.push_back(h);
    return out;
  }

  EdgeKind kind(int h) const {
    int m = mate[h];
    if (m == h) return vert[h] >= 0 ? EdgeKind::half_edge : EdgeKind::free_half_edge;
    bool a = vert[h] >= 0, b = vert[m] >= 0;
    if (a && b) return vert[h] == vert[m] ? EdgeKind::loop : EdgeKind::standard;
    if (a || b) return EdgeKind::pendant;
    return EdgeKind::free_edge;
  }

  int add_vertex(std::string name = {}) {
    int v = num_vertices();
    vertex_names.push_back(name.empty() ? "v" + std::to_string(v) : std::move(name));
    return v;
  }

  // Appends a two-dart edge; returns the first dart. For directed edges the
  // first dart is the tail.
  int add_edge(int u, int v, EdgeType t = EdgeType::undirected, int c = 0, std::string name = {}) {
    if (name.empty()) name = "e" + std::to_string(num_darts());
    int h = push_dart(u, t, c, t == EdgeType::directed ? 1 : 0, name);
    push_dart(v, t, c, t == EdgeType::directed ? -1 : 0, name);
    mate[h] = h + 1;
    mate[h + 1] = h;
    return h;
  }

  int add_loop(int v, EdgeType t = EdgeType::undirected, int c = 0, std::string name = {}) {
    return add_edge(v, v, t, c, std::move(name));
  }

  // Pendant edge with its defined end at v. For a directed pendant edge,
  // tail_at_vertex selects which end is the tail.
  int add_pendant(int v, int c = 0, std::string name = {}, EdgeType t = EdgeType::undirected,
                  bool tail_at_vertex = true) {
    int h = add_edge(v, -1, t, c, std::move(name));
    if (t == EdgeType::directed && !tail_at_vertex) {
      dir[h] = -1;
      dir[h + 1] = 1;
    }
    return h;
  }

  int add_half_edge(int v, int c = 0, std::string name = {}) {
    int h = push_dart(v, EdgeType::halvable, c, 0, name);
    mate[h] = h;
    return h;
  }

  int add_free_edge(int c = 0, EdgeType t = EdgeType::undirected, std::string name = {}) {
    return add_edge(-1, -1, t, c, std::move(name));
  }

  std::vector<std::vector<int>> darts_at() const {
    std::vector<std::vector<int>> out(num_vertices());
    for (int h = 0; h < num_darts(); ++h)
      if (vert[h] >= 0) out[vert[h]].push_back(h);
    return out;
  }

  int degree(int v) const {
    if (v < 0 || v >= num_vertices()) throw InputError("unknown vertex " + std::to_string(v));
    return static_cast<int>(std::count(vert.begin(), vert.end(), v));
  }

  // Tail dart of a directed edge containing h.
  int tail_dart(int h) const { return dir[h] > 0 ? h : mate[h]; }

 private:
  int push_dart(int v, EdgeType t, int c, int d, const std::string& name) {
    int h = num_darts();
    mate.push_back(h);
    vert.push_back(v);
    type.push_back(t);
    color.push_back(c);
    dir.push_back(static_cast<std::int8_t>(d));
    edge_names.push_back(name.empty() ? "e" + std::to_string(h) : name);
    return h;
  }
};

// Vertex and edge subset of a parent graph. Edges are stored as edge ids.
struct SubgraphRef {
  std::vector<int> vertices;
  std::vector<int> edges;

  bool operator==(const SubgraphRef&) const = default;
};

// Darts of g at vertices of sub whose edge is not part of sub.
inline std::vector<int> leaving_darts(const Graph& g, const SubgraphRef& sub) {
  std::vector<char> inv(g.num_vertices(), 0), ine(g.num_darts(), 0);
  for (int v : sub.vertices) inv[v] = 1;
  for (int e : sub.edges) ine[g.edge_of(e)] = 1;
  std::vector<int> out;
  for (int h = 0; h < g.num_darts(); ++h)
    if (g.vert[h] >= 0 && inv[g.vert[h]] && !ine[g.edge_of(h)]) out.push_back(h);
  return out;
}

inline std::vector<std::string> validate(const Graph& g) {
  std::vector<std::string> out;
  const int n = g.num_darts();
  auto sized = [&](std::size_t s, const char* what) {
    if (s != static_cast<std::size_t>(n)) out.push_back(std::string(what) + " array has wrong size");
    return s == static_cast<std::size_t>(n);
  };
  if (!(sized(g.vert.size(), "incidence") && sized(g.type.size(), "type") &&
        sized(g.color.size(), "color") && sized(g.dir.size(), "direction") &&
        sized(g.edge_names.size(), "edge name")))
    return out;
  for (int h = 0; h < n; ++h) {
    int m = g.mate[h];
    if (m < 0 || m >= n) {
      out.push_back("dart " + std::to_string(h) + ": pairing out of range");
      continue;
    }
    if (g.mate[m] != h) {
      out.push_back("dart " + std::to_string(h) + ": pairing not involutive");
      continue;
    }
    if (g.vert[h] < -1 || g.vert[h] >= g.num_vertices())
      out.push_back("dart " + std::to_string(h) + ": dangling vertex " + std::to_string(g.vert[h]));
    if (g.color[h] < 0) out.push_back("dart " + std::to_string(h) + ": missing color");
    if (m < h) continue;
    if (g.type[h] != g.type[m]) out.push_back("edge " + g.edge_names[h] + ": darts disagree on type");
    if (g.color[h] != g.color[m]) out.push_back("edge " + g.edge_names[h] + ": darts disagree on color");
    if (g.type[h] == EdgeType::directed) {
      if (m == h)
        out.push_back("edge " + g.edge_names[h] + ": directed half-edge");
      else if (!((g.dir[h] == 1 && g.dir[m] == -1) || (g.dir[h] == -1 && g.dir[m] == 1)))
        out.push_back("edge " + g.edge_names[h] + ": directed edge without a tail");
    } else if (g.dir[h] != 0 || g.dir[m] != 0) {
      out.push_back("edge " + g.edge_names[h] + ": direction on non-directed edge");
    }
  }
  return out;
}

inline void require_valid(const Graph& g) {
  auto v = validate(g);
  if (!v.empty()) throw InputError("invalid graph: " + v.front());
}

inline std::vector<SubgraphRef> connected_components(const Graph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int h = 0; h < g.num_darts(); ++h) {
    int a = g.vert[h], b = g.vert[g.mate[h]];
    if (a >= 0 && b >= 0) parent[find(a)] = find(b);
  }
  std::vector<int> comp_of(g.num_vertices(), -1);
  std::vector<SubgraphRef> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = find(v);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[comp_of[r]].vertices.push_back(v);
  }
  for (int e : g.edge_ids()) {
    int a = g.vert[e] >= 0 ? g.vert[e] : g.vert[g.mate[e]];
    if (a >= 0) {
      out[comp_of[find(a)]].edges.push_back(e);
    } else {
      out.push_back(SubgraphRef{{}, {e}});
    }
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

// A standalone copy of a subgraph with maps back to the parent.
struct Extracted {
  Graph graph;
  std::vector<int> vertex_to_parent;
  std::vector<int> dart_to_parent;
  std::vector<int> parent_to_vertex;
};

inline Extracted extract(const Graph& g, const SubgraphRef& sub) {
  Extracted x;
  x.parent_to_vertex.assign(g.num_vertices(), -1);
  std::vector<int> vs = sub.vertices;
  std::sort(vs.begin(), vs.end());
  for (int v : vs) {
    x.parent_to_vertex[v] = x.graph.add_vertex(g.vertex_names[v]);
    x.vertex_to_parent.push_back(v);
  }
  std::vector<int> es = sub.edges;
  for (int& e : es) e = g.edge_of(e);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  Graph& out = x.graph;
  for (int e : es) {
    int m = g.mate[e];
    auto local = [&](int h) { return g.vert[h] >= 0 ? x.parent_to_vertex[g.vert[h]] : -1; };
    if (m == e) {
      int h = out.add_half_edge(local(e), g.color[e], g.edge_names[e]);
      out.type[h] = g.type[e];
      x.dart_to_parent.push_back(e);
      continue;
    }
    int h = out.add_edge(local(e), local(m), g.type[e], g.color[e], g.edge_names[e]);
    out.dir[h] = g.dir[e];
    out.dir[h + 1] = g.dir[m];
    x.dart_to_parent.push_back(e);
    x.dart_to_parent.push_back(m);
  }
  return x;
}

// Renumbers darts so that the darts of every edge are consecutive, ordered by
// smallest original dart. Within an edge the dart at a vertex precedes a free
// dart, and the tail precedes the head of a directed loop. new_index[h] is the
// new position of dart h.
struct Compacted {
  Graph graph;
  std::vector<int> new_index;
};

inline Compacted compact(const Graph& g) {
  Compacted c;
  c.graph.vertex_names = g.vertex_names;
  c.new_index.assign(g.num_darts(), -1);
  for (int h = 0; h < g.num_darts(); ++h) {
    if (c.new_index[h] >= 0) continue;
    int m = g.mate[h];
    int first = h, second = m;
    if (m != h) {
      if (g.vert[first] < 0 && g.vert[second] >= 0) std::swap(first, second);
      if (g.kind(h) == EdgeKind::loop && g.dir[first] < 0) std::swap(first, second);
    }
    for (int d : {first, second}) {
      if (c.new_index[d] >= 0) continue;
      c.new_index[d] = c.graph.num_darts();
      c.graph.mate.push_back(-1);
      c.graph.vert.push_back(g.vert[d]);
      c.graph.type.push_back(g.type[d]);
      c.graph.color.push_back(g.color[d]);
      c.graph.dir.push_back(g.dir[d]);
      c.graph.edge_names.push_back(g.edge_names[d]);
    }
  }
  for (int h = 0; h < g.num_darts(); ++h) c.graph.mate[c.new_index[h]] = c.new_index[g.mate[h]];
  return c;
}

// Removes degree-1 vertices (unless the graph is K2) by turning the edge at
// such a vertex into a pendant edge.
inline Graph normalize(const Graph& g) {
  require_valid(g);
  if (!is_connected(g)) throw InputError("normalize: graph is disconnected");
  if (g.num_vertices() == 2 && g.num_darts() == 2 && g.kind(0) == EdgeKind::standard) return g;
  auto at = g.darts_at();
  std::vector<char> removed(g.num_vertices(), 0);
  Graph out = g;
  for (int w = 0; w < g.num_vertices(); ++w) {
    if (at[w].size() != 1) continue;
    int h = at[w][0], m = g.mate[h];
    if (m == h || g.vert[m] < 0 || g.vert[m] == w) continue;
    removed[w] = 1;
    out.vert[h] = -1;
  }
  if (std::none_of(removed.begin(), removed.end(), [](char c) { return c != 0; })) return g;
  std::vector<int> renum(g.num_vertices(), -1);
  out.vertex_names.clear();
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!removed[v]) {
      renum[v] = out.num_vertices();
      out.vertex_names.push_back(g.vertex_names[v]);
    }
  for (int& v : out.vert)
    if (v >= 0) v = renum[v];
  return compact(out).graph;
}

}  // namespace rcover

#endif  // RCOVER_GRAPH_HPP
