#ifndef RCOVER_ATOMS_HPP
#define RCOVER_ATOMS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "rcover/blocks.hpp"
#include "rcover/graph.hpp"
#include "rcover/groups.hpp"
#include "rcover/iso.hpp"

namespace rcover {

enum class AtomKind { star_block, non_star_block, proper, dipole };
enum class Symmetry { halvable, symmetric, asymmetric };

inline const char* to_string(AtomKind k) {
  switch (k) {
    case AtomKind::star_block: return "star-block";
    case AtomKind::non_star_block: return "block";
    case AtomKind::proper: return "proper";
    case AtomKind::dipole: return "dipole";
  }
  return "?";
}

inline const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::halvable: return "halvable";
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::asymmetric: return "asymmetric";
  }
  return "?";
}

struct Atom {
  AtomKind kind;
  std::vector<int> vertices;  // sorted, boundary included
  std::vector<int> edges;     // edge ids, sorted
  std::vector<int> boundary;  // sorted; one vertex for block atoms, two otherwise
  Symmetry symmetry = Symmetry::symmetric;
  CanonicalForm form;         // boundary-marked form of the atom graph

  bool is_block() const { return kind == AtomKind::star_block || kind == AtomKind::non_star_block; }

  std::vector<int> interior_vertices() const {
    std::vector<int> out;
    std::set_difference(vertices.begin(), vertices.end(), boundary.begin(), boundary.end(),
                        std::back_inserter(out));
    return out;
  }

  SubgraphRef subgraph() const { return {vertices, edges}; }
};

// The atom as a standalone graph; boundary holds local vertex ids in the
// same order as Atom::boundary.
struct AtomGraph {
  Graph graph;
  std::vector<int> boundary;
  std::vector<int> vertex_to_parent;
  std::vector<int> dart_to_parent;
};

inline AtomGraph atom_graph(const Graph& g, const Atom& a) {
  Extracted x = extract(g, a.subgraph());
  AtomGraph ag;
  ag.graph = std::move(x.graph);
  for (int b : a.boundary) ag.boundary.push_back(x.parent_to_vertex[b]);
  ag.vertex_to_parent = std::move(x.vertex_to_parent);
  ag.dart_to_parent = std::move(x.dart_to_parent);
  return ag;
}

namespace detail {

inline bool remains_connected(const Graph& g, const std::vector<char>& removed) {
  const int n = g.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int h = 0; h < g.num_darts(); ++h) {
    int a = g.vert[h], b = g.vert[g.mate[h]];
    if (a >= 0 && b >= 0 && !removed[a] && !removed[b]) parent[find(a)] = find(b);
  }
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    if (root < 0) root = find(v);
    else if (find(v) != root) return false;
  }
  return true;
}

}  // namespace detail

// Drops every pendant edge that is the only pendant edge at its vertex.
inline Graph strip_single_pendants(const Graph& g) {
  std::vector<int> count(g.num_vertices(), 0);
  for (int e : g.edge_ids())
    if (g.kind(e) == EdgeKind::pendant) ++count[g.vert[e] >= 0 ? g.vert[e] : g.vert[g.mate[e]]];
  SubgraphRef s;
  for (int v = 0; v < g.num_vertices(); ++v) s.vertices.push_back(v);
  for (int e : g.edge_ids())
    if (!(g.kind(e) == EdgeKind::pendant && count[g.vert[e] >= 0 ? g.vert[e] : g.vert[g.mate[e]]] == 1))
      s.edges.push_back(e);
  return extract(g, s).graph;
}

inline bool is_cycle_graph(const Graph& g) {
  if (g.num_vertices() < 2 || !is_connected(g)) return false;
  for (int e : g.edge_ids())
    if (g.kind(e) != EdgeKind::standard) return false;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

inline bool is_three_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 4 || !is_connected(g)) return false;
  for (int e : g.edge_ids())
    if (g.kind(e) != EdgeKind::standard) return false;
  std::vector<char> removed(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      removed[a] = removed[b] = 1;
      bool ok = detail::remains_connected(g, removed);
      removed[a] = removed[b] = 0;
      if (!ok) return false;
    }
  return true;
}

inline bool is_essentially_cycle(const Graph& g) { return is_cycle_graph(strip_single_pendants(g)); }
inline bool is_essentially_three_connected(const Graph& g) { return is_three_connected(strip_single_pendants(g)); }

// Semiregular involutions of an atom graph exchanging boundary vertices u and
// v. With representatives_only, one involution is returned per vertex
// involution and per choice of how many edges of each self-mapped class are
// halved; involutions differing by a boundary-fixing automorphism that fixes
// every vertex are not repeated.
inline std::vector<Perm> boundary_swapping_involutions(const Graph& a, int u, int v, bool stop_at_first = false,
                                                       const IsoLimits& lim = {}) {
  std::vector<Perm> out;
  for (const auto& phi : vertex_automorphisms(a, Marking{{u, v}, false}, lim)) {
    if (phi[u] != v) continue;
    bool ok = true;
    for (int x = 0; x < a.num_vertices(); ++x) ok &= phi[x] != x && phi[phi[x]] == x;
    if (!ok) continue;
    auto classes = detail::match_classes(a, a, phi);
    if (!classes) continue;
    Perm base(a.num_darts(), -1);
    std::vector<const EdgeClassMatch*> self;
    for (const auto& c : *classes) {
      std::vector<int> f = c.from, t = c.to;
      std::sort(f.begin(), f.end());
      std::sort(t.begin(), t.end());
      if (f == t) {
        self.push_back(&c);
        continue;
      }
      for (std::size_t i = 0; i < c.from.size(); ++i) detail::map_edge(a, a, phi, c.from[i], c.to[i], false, base);
    }
    // Choices of the number of halved edges per self-mapped class.
    std::vector<std::vector<int>> options;
    for (const auto* c : self) {
      int m = static_cast<int>(c->from.size());
      bool halvable = a.type[c->from[0]] == EdgeType::halvable;
      std::vector<int> fs;
      for (int f = m % 2; f <= m; f += 2)
        if (f == 0 || halvable) fs.push_back(f);
      options.push_back(fs);
    }
    if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) continue;
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      Perm p = base;
      for (std::size_t i = 0; i < self.size(); ++i) {
        const auto& es = self[i]->from;
        int f = options[i][pick[i]];
        for (int j = 0; j < static_cast<int>(es.size()); ++j) {
          int e = es[j];
          if (j < f) {
            p[e] = a.mate[e];
            p[a.mate[e]] = e;
          } else if ((j - f) % 2 == 0) {
            int b = es[j + 1];
            detail::map_edge(a, a, phi, e, b, false, p);
            detail::map_edge(a, a, phi, b, e, false, p);
          }
        }
      }
      out.push_back(std::move(p));
      if (stop_at_first) return out;
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return out;
}

inline Symmetry symmetry_of(const Graph& a, int u, int v, const IsoLimits& lim = {}) {
  auto autos = vertex_automorphisms(a, Marking{{u, v}, false}, lim);
  bool swaps = std::any_of(autos.begin(), autos.end(), [&](const auto& phi) { return phi[u] == v; });
  if (!swaps) return Symmetry::asymmetric;
  return boundary_swapping_involutions(a, u, v, true, lim).empty() ? Symmetry::symmetric : Symmetry::halvable;
}

inline Symmetry atom_symmetry_type(const Graph& g, const Atom& atom, const IsoLimits& lim = {}) {
  if (atom.is_block()) throw InputError("symmetry type is defined for proper atoms and dipoles only");
  auto ag = atom_graph(g, atom);
  return symmetry_of(ag.graph, ag.boundary[0], ag.boundary[1], lim);
}

// A+ : the proper atom with an extra undirected edge joining its boundary.
inline Graph extended_atom(const Graph& g, const Atom& atom) {
  if (atom.kind != AtomKind::proper) throw InputError("extended atom: not a proper atom");
  auto ag = atom_graph(g, atom);
  ag.graph.add_edge(ag.boundary[0], ag.boundary[1], EdgeType::undirected, 0, "boundary_edge");
  return ag.graph;
}

// Pointwise stabilizer of the boundary in Aut(A).
inline Group fix_group(const Graph& g, const Atom& atom, std::size_t max_order = 200, const IsoLimits& lim = {}) {
  auto ag = atom_graph(g, atom);
  return automorphism_group(ag.graph, max_order, Marking{ag.boundary, true}, lim);
}

inline std::uint64_t fix_order(const Graph& g, const Atom& atom, const IsoLimits& lim = {}) {
  auto ag = atom_graph(g, atom);
  return automorphism_count(ag.graph, Marking{ag.boundary, true}, lim);
}

namespace detail {

struct Part {
  AtomKind kind;
  std::vector<char> vmask;
  std::vector<char> emask;  // indexed by edge id
  std::vector<int> boundary;

  bool within(const Part& o) const {
    for (std::size_t i = 0; i < vmask.size(); ++i)
      if (vmask[i] && !o.vmask[i]) return false;
    for (std::size_t i = 0; i < emask.size(); ++i)
      if (emask[i] && !o.emask[i]) return false;
    return true;
  }
};

}  // namespace detail

inline std::vector<Atom> find_atoms(const Graph& g, const IsoLimits& lim = {}) {
  const BlockTree bt = block_tree(g);
  const int n = g.num_vertices(), nd = g.num_darts();
  std::vector<detail::Part> parts;
  auto add_part = [&](AtomKind k, const SubgraphRef& s, std::vector<int> boundary) {
    detail::Part p{k, std::vector<char>(n, 0), std::vector<char>(nd, 0), std::move(boundary)};
    for (int v : s.vertices) p.vmask[v] = 1;
    for (int e : s.edges) p.emask[g.edge_of(e)] = 1;
    std::sort(p.boundary.begin(), p.boundary.end());
    for (const auto& q : parts)
      if (q.vmask == p.vmask && q.emask == p.emask) return;
    parts.push_back(std::move(p));
  };

  // Block parts: subtrees hanging off the center.
  const int nodes = static_cast<int>(bt.adj.size());
  for (int x = 0; x < nodes; ++x) {
    if (x == bt.center && bt.central_block()) continue;
    SubgraphRef s = bt.subgraph(x);
    if (s.edges.size() == 1 && g.kind(s.edges[0]) != EdgeKind::standard) continue;
    if (s.edges.empty()) continue;
    int root = bt.is_block_node(x) ? bt.articulation_vertex(bt.parent[x]) : bt.articulation_vertex(x);
    bool star = true;
    for (int y : bt.subtree(x))
      if (bt.is_block_node(y) && !bt.blocks[y].is_leaf_edge()) star = false;
    add_part(star ? AtomKind::star_block : AtomKind::non_star_block, s, {root});
  }

  // Proper parts from non-trivial 2-cuts of blocks.
  const int center_articulation = bt.central_block() ? -1 : bt.articulation_vertex(bt.center);
  for (int bi = 0; bi < bt.num_blocks(); ++bi) {
    const Block& B = bt.blocks[bi];
    if (B.kind != BlockKind::biconnected || B.vertices.size() < 4) continue;
    std::vector<int> degB(n, 0);
    std::vector<char> inB(n, 0);
    for (int v : B.vertices) inB[v] = 1;
    for (int e : B.edges) ++degB[g.vert[e]], ++degB[g.vert[g.mate[e]]];
    for (std::size_t i = 0; i < B.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < B.vertices.size(); ++j) {
        int u = B.vertices[i], v = B.vertices[j];
        if (degB[u] < 3 || degB[v] < 3) continue;
        // Components of G minus {u, v}.
        std::vector<int> comp(n, -1);
        int nc = 0;
        auto at = g.darts_at();
        for (int s = 0; s < n; ++s) {
          if (s == u || s == v || comp[s] >= 0) continue;
          std::vector<int> stack{s};
          comp[s] = nc;
          while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int h : at[x]) {
              int y = g.vert[g.mate[h]];
              if (y < 0 || y == u || y == v || comp[y] >= 0) continue;
              comp[y] = nc;
              stack.push_back(y);
            }
          }
          ++nc;
        }
        std::set<int> touched;
        for (int w : B.vertices)
          if (w != u && w != v) touched.insert(comp[w]);
        if (touched.size() < 2) continue;
        for (int c : touched) {
          if (center_articulation >= 0 && center_articulation != u && center_articulation != v &&
              comp[center_articulation] == c)
            continue;
          SubgraphRef s;
          s.vertices = {u, v};
          for (int w = 0; w < n; ++w)
            if (w != u && w != v && comp[w] == c) s.vertices.push_back(w);
          for (int e : g.edge_ids()) {
            int a = g.vert[e], b = g.vert[g.mate[e]];
            bool a_in = a >= 0 && a != u && a != v && comp[a] == c;
            bool b_in = b >= 0 && b != u && b != v && comp[b] == c;
            if (a_in || b_in) s.edges.push_back(e);
          }
          if (bt.central_block()) {
            std::set<int> es(s.edges.begin(), s.edges.end());
            const auto& cb = bt.blocks[bt.center].edges;
            if (std::all_of(cb.begin(), cb.end(), [&](int e) { return es.count(e) > 0; })) continue;
          }
          std::sort(s.vertices.begin(), s.vertices.end());
          add_part(AtomKind::proper, s, {u, v});
        }
      }
  }

  // Dipoles.
  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (int e : g.edge_ids())
    if (g.kind(e) == EdgeKind::standard) {
      int a = g.vert[e], b = g.vert[g.mate[e]];
      parallel[{std::min(a, b), std::max(a, b)}].push_back(e);
    }
  for (const auto& [uv, es] : parallel) {
    if (es.size() < 2 || g.degree(uv.first) < 3 || g.degree(uv.second) < 3) continue;
    add_part(AtomKind::dipole, SubgraphRef{{uv.first, uv.second}, es}, {uv.first, uv.second});
  }

  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < parts.size() && minimal; ++j)
      if (j != i && parts[j].within(parts[i])) minimal = false;
    if (!minimal) continue;
    Atom a;
    a.kind = parts[i].kind;
    a.boundary = parts[i].boundary;
    for (int v = 0; v < n; ++v)
      if (parts[i].vmask[v]) a.vertices.push_back(v);
    for (int e = 0; e < nd; ++e)
      if (parts[i].emask[e]) a.edges.push_back(e);
    auto ag = atom_graph(g, a);
    a.form = canonical_form(ag.graph, Marking{ag.boundary, false}, lim);
    a.symmetry = a.is_block() ? Symmetry::symmetric : symmetry_of(ag.graph, ag.boundary[0], ag.boundary[1], lim);
    atoms.push_back(std::move(a));
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (a.form != b.form) return a.form < b.form;
    return a.vertices < b.vertices;
  });
  return atoms;
}

enum class PrimitiveTag { not_primitive, three_connected, cycle, k2, k1, unclassified };

inline const char* to_string(PrimitiveTag t) {
  switch (t) {
    case PrimitiveTag::not_primitive: return "not-primitive";
    case PrimitiveTag::three_connected: return "three-connected";
    case PrimitiveTag::cycle: return "cycle";
    case PrimitiveTag::k2: return "K2";
    case PrimitiveTag::k1: return "K1";
    case PrimitiveTag::unclassified: return "unclassified";
  }
  return "?";
}

struct PrimitiveClass {
  PrimitiveTag tag = PrimitiveTag::not_primitive;
  int cycle_length = 0;
  bool pendant_decoration = false;
  bool central_articulation = false;
};

inline PrimitiveClass classify_primitive(const Graph& g, const IsoLimits& lim = {}) {
  PrimitiveClass pc;
  if (!find_atoms(g, lim).empty()) return pc;
  const BlockTree bt = block_tree(g);
  if (!bt.central_block()) {
    pc.central_articulation = true;
    pc.pendant_decoration = g.num_darts() > 0;
    pc.tag = g.num_vertices() == 1 ? PrimitiveTag::k1 : PrimitiveTag::unclassified;
    return pc;
  }
  for (int b = 0; b < bt.num_blocks(); ++b)
    if (b != bt.center && !bt.blocks[b].is_leaf_edge()) {
      pc.tag = PrimitiveTag::unclassified;
      return pc;
    }
  pc.pendant_decoration = bt.num_blocks() > 1;
  const Block& B = bt.blocks[bt.center];
  Graph core = extract(g, SubgraphRef{B.vertices, B.edges}).graph;
  if (B.kind == BlockKind::bridge) pc.tag = PrimitiveTag::k2;
  else if (is_cycle_graph(core)) pc.tag = PrimitiveTag::cycle, pc.cycle_length = core.num_vertices();
  else if (is_three_connected(core)) pc.tag = PrimitiveTag::three_connected;
  else pc.tag = PrimitiveTag::unclassified;
  return pc;
}

}  // namespace rcover

#endif  // RCOVER_ATOMS_HPP
