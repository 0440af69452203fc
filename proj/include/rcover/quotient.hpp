#ifndef RCOVER_QUOTIENT_HPP
#define RCOVER_QUOTIENT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rcover/atoms.hpp"
#include "rcover/graph.hpp"
#include "rcover/groups.hpp"
#include "rcover/iso.hpp"
#include "rcover/reduction.hpp"

namespace rcover {

struct Quotient {
  Graph graph;
  std::vector<int> vertex_proj;  // vertex of G -> vertex of G/Gamma
  std::vector<int> dart_proj;    // dart of G -> dart of G/Gamma
};

// G/Gamma for a semiregular group of automorphisms. Vertex and edge names are
// taken from the smallest member of each orbit.
inline Quotient quotient(const Graph& g, const Group& grp) {
  if (grp.degree != g.num_darts()) throw InputError("quotient: group degree does not match the graph");
  for (const auto& p : grp.elements)
    if (!is_automorphism(g, p)) throw InputError("quotient: group element is not an automorphism");
  if (!is_semiregular(g, grp)) throw InputError("quotient: group is not semiregular");
  auto vorb = orbits(g, grp, Domain::vertices);
  auto dorb = orbits(g, grp, Domain::darts);
  Quotient q;
  q.vertex_proj.assign(g.num_vertices(), -1);
  q.dart_proj.assign(g.num_darts(), -1);
  Graph raw;
  for (std::size_t k = 0; k < vorb.size(); ++k) {
    raw.add_vertex(g.vertex_names[vorb[k][0]]);
    for (int v : vorb[k]) q.vertex_proj[v] = static_cast<int>(k);
  }
  for (std::size_t k = 0; k < dorb.size(); ++k)
    for (int h : dorb[k]) q.dart_proj[h] = static_cast<int>(k);
  for (std::size_t k = 0; k < dorb.size(); ++k) {
    int h = dorb[k][0];
    int mk = q.dart_proj[g.mate[h]];
    bool half = mk == static_cast<int>(k);
    if (half && g.type[h] != EdgeType::halvable)
      throw InputError("quotient: a " + std::string(to_string(g.type[h])) + " edge would become a half-edge");
    int name_dart = std::min(h, dorb[mk][0]);
    raw.mate.push_back(mk);
    raw.vert.push_back(g.vert[h] >= 0 ? q.vertex_proj[g.vert[h]] : -1);
    raw.type.push_back(g.type[h]);
    raw.color.push_back(g.color[h]);
    raw.dir.push_back(half ? 0 : g.dir[h]);
    raw.edge_names.push_back(g.edge_names[g.edge_of(name_dart)]);
  }
  Compacted c = compact(raw);
  q.graph = std::move(c.graph);
  for (int& d : q.dart_proj) d = c.new_index[d];
  return q;
}

enum class ProjectionType { edge, loop, half_edge };

inline const char* to_string(ProjectionType t) {
  switch (t) {
    case ProjectionType::edge: return "edge";
    case ProjectionType::loop: return "loop";
    case ProjectionType::half_edge: return "half-edge";
  }
  return "?";
}

// How the atom A projects into G/Gamma.
inline ProjectionType atom_projection_type(const Graph& g, const Atom& a, const Group& grp, const Quotient& q) {
  if (a.is_block()) return ProjectionType::edge;
  std::set<int> es(a.edges.begin(), a.edges.end());
  for (const auto& p : grp.elements) {
    if (is_identity(p)) continue;
    bool keeps = true;
    for (int e : a.edges) keeps &= es.count(g.edge_of(p[e])) > 0;
    if (keeps) return ProjectionType::half_edge;
  }
  return q.vertex_proj[a.boundary[0]] == q.vertex_proj[a.boundary[1]] ? ProjectionType::loop : ProjectionType::edge;
}

// Quotient of an atom together with the images of its boundary roles.
struct AtomQuotient {
  Graph graph;
  std::vector<int> boundary;  // images of the roles; one entry for loop and half quotients
};

struct AtomQuotientSet {
  AtomQuotient edge;
  std::optional<AtomQuotient> loop;
  std::vector<AtomQuotient> halves;  // pairwise non-isomorphic, sorted by marked form
};

// Quotients of an atom graph a with boundary roles (role 0 first).
inline AtomQuotientSet atom_quotients(const Graph& a, const std::vector<int>& boundary, const IsoLimits& lim = {}) {
  AtomQuotientSet s;
  s.edge = AtomQuotient{a, boundary};
  if (boundary.size() != 2) return s;
  const int u = boundary[0], v = boundary[1];

  Graph lp = a;
  std::vector<int> renum(a.num_vertices());
  lp.vertex_names.clear();
  for (int x = 0; x < a.num_vertices(); ++x) {
    if (x == v) continue;
    renum[x] = lp.num_vertices();
    lp.vertex_names.push_back(a.vertex_names[x]);
  }
  renum[v] = renum[u];
  for (int& x : lp.vert)
    if (x >= 0) x = renum[x];
  s.loop = AtomQuotient{std::move(lp), {renum[u]}};

  std::map<CanonicalForm, AtomQuotient> halves;
  for (const auto& tau : boundary_swapping_involutions(a, u, v, false, lim)) {
    Quotient q = quotient(a, make_group(a.num_darts(), {identity_perm(a.num_darts()), tau}));
    int p = q.vertex_proj[u];
    auto f = canonical_form(q.graph, Marking{{p}, true}, lim);
    halves.emplace(f, AtomQuotient{std::move(q.graph), {p}});
  }
  for (auto& [f, aq] : halves) s.halves.push_back(std::move(aq));
  return s;
}

// Substitution data for the classes of one reduction level.
struct LevelExpansion {
  std::vector<AtomClass> classes;
  std::vector<AtomQuotientSet> quotients;
  std::map<int, int> class_of_color;
};

inline LevelExpansion level_expansion(const std::vector<AtomClass>& classes, const IsoLimits& lim = {}) {
  LevelExpansion lx;
  lx.classes = classes;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const AtomClass& c = classes[k];
    if (c.kind == AtomKind::star_block || c.kind == AtomKind::non_star_block) {
      lx.quotients.push_back(AtomQuotientSet{AtomQuotient{c.representative, c.boundary}, std::nullopt, {}});
    } else {
      lx.quotients.push_back(atom_quotients(c.representative, c.boundary, lim));
    }
    lx.class_of_color[c.color] = static_cast<int>(k);
  }
  return lx;
}

namespace detail {

// Copies piece into out, identifying piece vertices with out vertices as
// given by attach.
inline void glue(Graph& out, const Graph& piece, const std::vector<std::pair<int, int>>& attach) {
  std::vector<int> vmap(piece.num_vertices(), -1);
  for (auto [p, o] : attach) vmap[p] = o;
  for (int x = 0; x < piece.num_vertices(); ++x)
    if (vmap[x] < 0) vmap[x] = out.add_vertex(piece.vertex_names[x]);
  std::vector<int> dm(piece.num_darts(), -1);
  for (int e : piece.edge_ids()) copy_edge(piece, e, out, vmap, dm, piece.edge_names[e]);
}

// Appends primes to repeated vertex and edge names.
inline void uniquify_names(Graph& g) {
  std::set<std::string> used;
  for (auto& n : g.vertex_names) {
    while (!used.insert(n).second) n += "'";
  }
  used.clear();
  for (int e : g.edge_ids()) {
    std::string n = g.edge_names[e];
    while (!used.insert(n).second) n += "'";
    g.edge_names[e] = g.edge_names[g.mate[e]] = n;
  }
}

}  // namespace detail

// All graphs H_i obtained from H_{i+1} by replacing the colored edges of this
// level with atom quotients.
inline std::vector<Graph> expand_step(const Graph& h, const LevelExpansion& lx) {
  Graph base;
  for (const auto& n : h.vertex_names) base.add_vertex(n);
  std::vector<std::pair<int, int>> halves;  // (vertex, class)
  std::vector<int> dm(h.num_darts(), -1);
  std::vector<int> ident(h.num_vertices());
  for (int x = 0; x < h.num_vertices(); ++x) ident[x] = x;
  for (int e : h.edge_ids()) {
    auto it = lx.class_of_color.find(h.color[e]);
    if (it == lx.class_of_color.end()) {
      detail::copy_edge(h, e, base, ident, dm, h.edge_names[e]);
      continue;
    }
    const int k = it->second;
    const AtomQuotientSet& qs = lx.quotients[k];
    const bool block = lx.classes[k].kind == AtomKind::star_block || lx.classes[k].kind == AtomKind::non_star_block;
    const std::string where = "expand: edge " + h.edge_names[e] + ": ";
    switch (h.kind(e)) {
      case EdgeKind::pendant: {
        if (!block) throw InputError(where + "pendant edge carries a two-boundary atom color");
        int d = h.vert[e] >= 0 ? e : h.mate[e];
        detail::glue(base, qs.edge.graph, {{qs.edge.boundary[0], h.vert[d]}});
        break;
      }
      case EdgeKind::standard: {
        if (block) throw InputError(where + "edge carries a block atom color");
        int t = h.type[e] == EdgeType::directed ? h.tail_dart(e) : e;
        detail::glue(base, qs.edge.graph,
                     {{qs.edge.boundary[0], h.vert[t]}, {qs.edge.boundary[1], h.vert[h.mate[t]]}});
        break;
      }
      case EdgeKind::loop: {
        if (!qs.loop) throw InputError(where + "loop carries a block atom color");
        detail::glue(base, qs.loop->graph, {{qs.loop->boundary[0], h.vert[e]}});
        break;
      }
      case EdgeKind::half_edge: {
        if (qs.halves.empty()) throw InputError(where + "half-edge of a class without half quotients");
        halves.emplace_back(h.vert[e], k);
        break;
      }
      default: throw InputError(where + "unexpected edge kind " + std::string(to_string(h.kind(e))));
    }
  }
  std::vector<Graph> out;
  std::vector<std::size_t> pick(halves.size(), 0);
  while (true) {
    Graph g = base;
    for (std::size_t i = 0; i < halves.size(); ++i) {
      const AtomQuotient& aq = lx.quotients[halves[i].second].halves[pick[i]];
      detail::glue(g, aq.graph, {{aq.boundary[0], halves[i].first}});
    }
    g = compact(g).graph;
    detail::uniquify_names(g);
    out.push_back(std::move(g));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == lx.quotients[halves[k].second].halves.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

// Graphs kept once per isomorphism class, in canonical form order.
struct GraphSet {
  std::map<CanonicalForm, Graph> by_form;

  bool insert(Graph g, const IsoLimits& lim = {}) {
    auto f = canonical_form(g, {}, lim);
    return by_form.emplace(std::move(f), std::move(g)).second;
  }
  std::size_t size() const { return by_form.size(); }
  std::vector<Graph> graphs() const {
    std::vector<Graph> out;
    for (const auto& [f, g] : by_form) out.push_back(g);
    return out;
  }
  std::vector<CanonicalForm> forms() const {
    std::vector<CanonicalForm> out;
    for (const auto& [f, g] : by_form) out.push_back(f);
    return out;
  }
};

// Expands quotients of G_r down to quotients of G_0.
inline GraphSet expand_all(const ReductionSeries& rs, const std::vector<Graph>& top, const IsoLimits& lim = {}) {
  GraphSet cur;
  for (const auto& h : top) cur.insert(h, lim);
  for (int i = rs.length() - 1; i >= 0; --i) {
    LevelExpansion lx = level_expansion(rs.steps[i].classes, lim);
    GraphSet next;
    for (const auto& [f, h] : cur.by_form)
      for (auto& g : expand_step(h, lx)) next.insert(std::move(g), lim);
    cur = std::move(next);
  }
  return cur;
}

enum class Via { bruteforce, reduction };

inline std::vector<Graph> quotients_of(const Graph& g, const SemiregularLimits& lim = {}) {
  std::vector<Graph> out;
  for (const auto& grp : semiregular_subgroups(g, std::nullopt, lim)) out.push_back(quotient(g, grp).graph);
  return out;
}

// Every regular quotient of normalize(g), up to isomorphism.
inline GraphSet all_quotients(const Graph& g, Via via, const SemiregularLimits& lim = {}) {
  Graph n = normalize(g);
  if (via == Via::bruteforce) {
    GraphSet s;
    for (auto& h : quotients_of(n, lim)) s.insert(std::move(h), lim.iso);
    return s;
  }
  ReductionSeries rs = reduction_series(n, lim.iso);
  return expand_all(rs, quotients_of(rs.primitive_graph(), lim), lim.iso);
}

struct CoverResult {
  bool covers = false;
  int order = 0;  // |Gamma| when covers
  std::optional<Group> witness;
  std::optional<Quotient> quotient;
  std::vector<int> iso_dart_map;  // G/Gamma -> H
  std::string reason;
};

// Whether normalize(g) regularly covers normalize(h).
inline CoverResult regular_cover_test(const Graph& g, const Graph& h, const SemiregularLimits& lim = {}) {
  CoverResult r;
  Graph G = normalize(g), H = normalize(h);
  if (H.num_vertices() == 0 || G.num_vertices() % H.num_vertices() != 0) {
    r.reason = "vertex count not divisible";
    return r;
  }
  const int k = G.num_vertices() / H.num_vertices();
  if (G.num_darts() != k * H.num_darts()) {
    r.reason = "dart count not divisible";
    return r;
  }
  for (const auto& grp : semiregular_subgroups(G, k, lim)) {
    Quotient q = quotient(G, grp);
    IsoResult iso = are_isomorphic(q.graph, H, {}, {}, lim.iso);
    if (iso.isomorphic) {
      r.covers = true;
      r.order = k;
      r.witness = grp;
      r.quotient = std::move(q);
      r.iso_dart_map = iso.dart_map;
      return r;
    }
  }
  r.reason = "no semiregular subgroup of order " + std::to_string(k) + " has a matching quotient";
  return r;
}

}  // namespace rcover

#endif  // RCOVER_QUOTIENT_HPP
