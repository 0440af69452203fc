#ifndef RCOVER_REDUCTION_HPP
#define RCOVER_REDUCTION_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rcover/atoms.hpp"
#include "rcover/blocks.hpp"
#include "rcover/graph.hpp"
#include "rcover/groups.hpp"
#include "rcover/iso.hpp"

namespace rcover {

// Colors allocated by the reduction: level i, class rank k gets
// kReductionColorBase + i * kReductionColorStride + k. Input colors must stay
// below kReductionColorBase.
inline constexpr int kReductionColorBase = 1 << 16;
inline constexpr int kReductionColorStride = 1 << 12;

inline int reduction_color(int level, int rank) {
  if (rank >= kReductionColorStride) throw SizeLimitError("too many atom classes on one level");
  return kReductionColorBase + level * kReductionColorStride + rank;
}

// Level of a reduction color, or -1 for input colors.
inline int color_level(int color) {
  return color < kReductionColorBase ? -1 : (color - kReductionColorBase) / kReductionColorStride;
}

struct AtomClass {
  int color = 0;
  AtomKind kind = AtomKind::proper;
  Symmetry symmetry = Symmetry::symmetric;
  CanonicalForm form;
  Graph representative;       // canonical relabeling of a member
  std::vector<int> boundary;  // representative vertices; boundary[0] is the tail role
  std::vector<int> members;   // atom indices
};

struct ReductionStep {
  int level = 0;
  Graph source;
  Graph target;
  std::vector<Atom> atoms;
  std::vector<int> atom_class;
  std::vector<AtomClass> classes;
  std::vector<std::vector<int>> role_boundary;  // per atom, source vertices in role order
  std::vector<std::array<int, 2>> replacement;  // per atom, target darts at role 0 and role 1 (or free end)
  std::vector<int> vertex_map;                  // source vertex -> target vertex, -1 for interiors
  std::vector<int> dart_map;                    // source dart -> target dart, -1 inside atoms
};

namespace detail {

inline void copy_edge(const Graph& src, int e, Graph& dst, const std::vector<int>& vmap, std::vector<int>& dart_map,
                      const std::string& name) {
  int m = src.mate[e];
  auto mv = [&](int h) { return src.vert[h] >= 0 ? vmap[src.vert[h]] : -1; };
  if (m == e) {
    int h = dst.add_half_edge(mv(e), src.color[e], name);
    dst.type[h] = src.type[e];
    dart_map[e] = h;
    return;
  }
  int h = dst.add_edge(mv(e), mv(m), src.type[e], src.color[e], name);
  dst.dir[h] = src.dir[e];
  dst.dir[h + 1] = src.dir[m];
  dart_map[e] = h;
  dart_map[m] = h + 1;
}

}  // namespace detail

inline ReductionStep reduce_step(const Graph& g, int level = 0, const IsoLimits& lim = {}) {
  ReductionStep st;
  st.level = level;
  st.source = g;
  st.atoms = find_atoms(g, lim);
  if (st.atoms.empty()) throw InputError("reduce: graph is primitive");
  const int na = static_cast<int>(st.atoms.size());

  std::map<CanonicalForm, int> class_of_form;
  for (const auto& a : st.atoms) class_of_form.emplace(a.form, 0);
  int rank = 0;
  for (auto& [f, idx] : class_of_form) idx = rank++;
  st.classes.resize(class_of_form.size());
  st.atom_class.resize(na);
  st.role_boundary.resize(na);
  for (int i = 0; i < na; ++i) {
    const Atom& a = st.atoms[i];
    int c = class_of_form.at(a.form);
    st.atom_class[i] = c;
    auto ag = atom_graph(g, a);
    Marking mk{ag.boundary, false};
    std::vector<int> label;
    Graph rep = canonical_graph(ag.graph, mk, &label, lim);
    std::vector<int> roles = ag.boundary;
    std::sort(roles.begin(), roles.end(), [&](int x, int y) { return label[x] < label[y]; });
    for (int r : roles) st.role_boundary[i].push_back(ag.vertex_to_parent[r]);
    AtomClass& cls = st.classes[c];
    if (cls.members.empty()) {
      cls.color = reduction_color(level, c);
      cls.kind = a.kind;
      cls.symmetry = a.symmetry;
      cls.form = a.form;
      cls.representative = std::move(rep);
      for (int r : roles) cls.boundary.push_back(label[r]);
    }
    cls.members.push_back(i);
  }

  std::vector<char> gone_v(g.num_vertices(), 0), gone_e(g.num_darts(), 0);
  for (const auto& a : st.atoms) {
    for (int v : a.interior_vertices()) gone_v[v] = 1;
    for (int e : a.edges) gone_e[e] = gone_e[g.mate[e]] = 1;
  }
  Graph& t = st.target;
  st.vertex_map.assign(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!gone_v[v]) st.vertex_map[v] = t.add_vertex(g.vertex_names[v]);
  st.dart_map.assign(g.num_darts(), -1);
  std::set<std::string> names;
  for (int e : g.edge_ids())
    if (!gone_e[e]) {
      detail::copy_edge(g, e, t, st.vertex_map, st.dart_map, g.edge_names[e]);
      names.insert(g.edge_names[e]);
    }
  st.replacement.resize(na);
  for (int i = 0; i < na; ++i) {
    const Atom& a = st.atoms[i];
    const AtomClass& cls = st.classes[st.atom_class[i]];
    std::string name = "r" + std::to_string(level) + "_" + std::to_string(i);
    while (names.count(name)) name += "_";
    names.insert(name);
    const auto& rb = st.role_boundary[i];
    int h;
    if (a.is_block()) {
      h = t.add_pendant(st.vertex_map[rb[0]], cls.color, name);
    } else {
      EdgeType ty = cls.symmetry == Symmetry::halvable    ? EdgeType::halvable
                    : cls.symmetry == Symmetry::symmetric ? EdgeType::undirected
                                                          : EdgeType::directed;
      h = t.add_edge(st.vertex_map[rb[0]], st.vertex_map[rb[1]], ty, cls.color, name);
    }
    st.replacement[i] = {h, h + 1};
  }
  return st;
}

// Phi: Aut(source) -> Aut(target).
inline Perm reduction_epimorphism(const ReductionStep& st, const Perm& pi) {
  const Graph& g = st.source;
  if (!is_automorphism(g, pi)) throw InputError("reduction epimorphism: not an automorphism of the source");
  auto va = *vertex_action(g, pi);
  std::vector<int> atom_of(g.num_darts(), -1);
  for (int i = 0; i < static_cast<int>(st.atoms.size()); ++i)
    for (int e : st.atoms[i].edges) atom_of[e] = atom_of[g.mate[e]] = i;
  Perm q(st.target.num_darts(), -1);
  for (int h = 0; h < g.num_darts(); ++h)
    if (st.dart_map[h] >= 0) q[st.dart_map[h]] = st.dart_map[pi[h]];
  for (int i = 0; i < static_cast<int>(st.atoms.size()); ++i) {
    int j = atom_of[pi[st.atoms[i].edges.front()]];
    const auto& ri = st.replacement[i];
    const auto& rj = st.replacement[j];
    if (st.atoms[i].is_block() || va[st.role_boundary[i][0]] == st.role_boundary[j][0]) {
      q[ri[0]] = rj[0];
      q[ri[1]] = rj[1];
    } else {
      q[ri[0]] = rj[1];
      q[ri[1]] = rj[0];
    }
  }
  return q;
}

// Product of the Fix(A) orders, the order of the kernel of Phi.
inline std::uint64_t kernel_order(const ReductionStep& st, const IsoLimits& lim = {}) {
  std::uint64_t k = 1;
  for (const auto& a : st.atoms)
    if (__builtin_mul_overflow(k, fix_order(st.source, a, lim), &k))
      throw SizeLimitError("kernel order overflows 64 bits");
  return k;
}

// Kernel computed element-wise from Aut(source).
inline Group kernel(const ReductionStep& st, std::size_t max_order = 200, const IsoLimits& lim = {}) {
  Group aut = automorphism_group(st.source, max_order, {}, lim);
  std::vector<Perm> ker;
  for (const auto& p : aut.elements)
    if (is_identity(reduction_epimorphism(st, p))) ker.push_back(p);
  return make_group(st.source.num_darts(), std::move(ker));
}

// Whether the central block of the target is the central block of the source
// with its atoms replaced. Sources with a central articulation return false.
inline bool center_preserved(const ReductionStep& st) {
  BlockTree a = block_tree(st.source), b = block_tree(st.target);
  if (!a.central_block() || !b.central_block()) return false;
  std::set<int> expect;
  std::set<int> cb(a.blocks[a.center].edges.begin(), a.blocks[a.center].edges.end());
  for (int e : cb)
    if (st.dart_map[e] >= 0) expect.insert(st.target.edge_of(st.dart_map[e]));
  for (std::size_t i = 0; i < st.atoms.size(); ++i)
    for (int e : st.atoms[i].edges)
      if (cb.count(e)) {
        expect.insert(st.target.edge_of(st.replacement[i][0]));
        break;
      }
  std::set<int> got(b.blocks[b.center].edges.begin(), b.blocks[b.center].edges.end());
  return expect == got;
}

struct TreeNode {
  int level = -1;  // -1 for the root
  int atom = -1;
  int parent = -1;
  std::vector<int> children;
};

struct ReductionSeries {
  std::vector<Graph> graphs;  // G_0 .. G_r
  std::vector<ReductionStep> steps;
  PrimitiveClass primitive;
  std::vector<TreeNode> tree;  // node 0 is the root G_r

  int length() const { return static_cast<int>(steps.size()); }
  const Graph& primitive_graph() const { return graphs.back(); }
};

inline ReductionSeries reduction_series(const Graph& g, const IsoLimits& lim = {}) {
  ReductionSeries rs;
  rs.graphs.push_back(g);
  while (true) {
    const Graph& cur = rs.graphs.back();
    if (find_atoms(cur, lim).empty()) break;
    ReductionStep st = reduce_step(cur, rs.length(), lim);
    if (st.target.num_darts() >= cur.num_darts()) throw std::logic_error("reduction did not shrink the graph");
    rs.graphs.push_back(st.target);
    rs.steps.push_back(std::move(st));
  }
  rs.primitive = classify_primitive(rs.graphs.back(), lim);

  rs.tree.push_back(TreeNode{});
  std::vector<std::vector<int>> node_of(rs.length());
  for (int i = 0; i < rs.length(); ++i)
    for (std::size_t a = 0; a < rs.steps[i].atoms.size(); ++a) {
      node_of[i].push_back(static_cast<int>(rs.tree.size()));
      rs.tree.push_back(TreeNode{i, static_cast<int>(a), -1, {}});
    }
  const int r = rs.length();
  for (int i = 0; i < r; ++i)
    for (std::size_t a = 0; a < rs.steps[i].atoms.size(); ++a) {
      int d = rs.steps[i].replacement[a][0];
      int parent = 0;
      for (int j = i + 1; j < r; ++j) {
        const auto& sj = rs.steps[j];
        int e = sj.source.edge_of(d);
        int owner = -1;
        for (std::size_t b = 0; b < sj.atoms.size() && owner < 0; ++b)
          if (std::binary_search(sj.atoms[b].edges.begin(), sj.atoms[b].edges.end(), e)) owner = static_cast<int>(b);
        if (owner >= 0) {
          parent = node_of[j][owner];
          break;
        }
        d = sj.dart_map[d];
      }
      int self = node_of[i][a];
      rs.tree[self].parent = parent;
      rs.tree[parent].children.push_back(self);
    }
  return rs;
}

}  // namespace rcover

#endif  // RCOVER_REDUCTION_HPP
