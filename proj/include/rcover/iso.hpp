#ifndef RCOVER_ISO_HPP
#define RCOVER_ISO_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rcover/graph.hpp"

namespace rcover {

// Distinguished vertices. Unordered markings must be mapped setwise, ordered
// markings pointwise.
struct Marking {
  std::vector<int> vertices;
  bool ordered = false;
};

struct CanonicalForm {
  std::vector<int> code;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(code.size() * 8);
    for (int x : code) {
      auto u = static_cast<std::uint32_t>(x);
      for (int i = 7; i >= 0; --i) s.push_back(digits[(u >> (4 * i)) & 15]);
    }
    return s;
  }
};

struct IsoLimits {
  int max_vertices = 24;
  std::size_t max_leaves = 2000000;
};

namespace detail {

using ItemKey = std::array<int, 6>;

// Description of the edge with representative dart e under vertex labels L.
inline ItemKey item_key(const Graph& g, int e, const std::vector<int>& L) {
  int m = g.mate[e];
  int t = static_cast<int>(g.type[e]), c = g.color[e];
  auto lab = [&](int h) { return L[g.vert[h]]; };
  switch (g.kind(e)) {
    case EdgeKind::standard:
      if (g.type[e] == EdgeType::directed) {
        int tl = g.tail_dart(e);
        return {1, lab(tl), lab(g.mate[tl]), t, c, 0};
      }
      return {0, std::min(lab(e), lab(m)), std::max(lab(e), lab(m)), t, c, 0};
    case EdgeKind::loop: return {2, lab(e), lab(e), t, c, 0};
    case EdgeKind::pendant: {
      int hv = g.vert[e] >= 0 ? e : m;
      return {3, lab(hv), -1, t, c, g.dir[hv]};
    }
    case EdgeKind::half_edge: return {4, lab(e), -1, t, c, 0};
    case EdgeKind::free_edge: return {5, -1, -1, t, c, 0};
    case EdgeKind::free_half_edge: return {6, -1, -1, t, c, 0};
  }
  return {};
}

inline std::vector<int> encode(const Graph& g, const std::vector<int>& L, const Marking& mk) {
  std::vector<ItemKey> items;
  for (int e : g.edge_ids()) items.push_back(item_key(g, e, L));
  std::sort(items.begin(), items.end());
  std::vector<int> code;
  code.reserve(3 + mk.vertices.size() + items.size() * 6);
  code.push_back(g.num_vertices());
  code.push_back(static_cast<int>(mk.vertices.size()));
  std::vector<int> ml;
  for (int v : mk.vertices) ml.push_back(L[v]);
  if (!mk.ordered) std::sort(ml.begin(), ml.end());
  code.insert(code.end(), ml.begin(), ml.end());
  code.push_back(static_cast<int>(items.size()));
  for (const auto& it : items) code.insert(code.end(), it.begin(), it.end());
  return code;
}

class Labeler {
 public:
  Labeler(const Graph& g, const Marking& mk, const IsoLimits& lim) : g_(g), mk_(mk), lim_(lim) {
    if (g.num_vertices() > lim.max_vertices)
      throw SizeLimitError("graph has " + std::to_string(g.num_vertices()) + " vertices; limit is " +
                           std::to_string(lim.max_vertices));
    at_ = g.darts_at();
  }

  void run(bool keep_automorphisms) {
    keep_ = keep_automorphisms;
    std::vector<int> col(g_.num_vertices(), 0);
    for (std::size_t i = 0; i < mk_.vertices.size(); ++i)
      col[mk_.vertices[i]] = mk_.ordered ? static_cast<int>(i) + 1 : 1;
    search(col);
  }

  std::vector<int> best_code;
  std::vector<int> best_labeling;
  std::vector<std::vector<int>> best_leaves;

 private:
  using Sig = std::array<int, 5>;

  std::vector<int> refine(std::vector<int> col) const {
    const int n = g_.num_vertices();
    std::vector<std::pair<int, std::vector<Sig>>> key(n);
    std::vector<int> order(n);
    int cells = -1;
    while (true) {
      for (int x = 0; x < n; ++x) {
        auto& s = key[x].second;
        s.clear();
        key[x].first = col[x];
        for (int h : at_[x]) {
          int m = g_.mate[h];
          int kindc, other = -1;
          if (m == h) kindc = 3;
          else if (g_.vert[m] < 0) kindc = 2;
          else if (g_.vert[m] == x) kindc = 1, other = col[x];
          else kindc = 0, other = col[g_.vert[m]];
          s.push_back({kindc, static_cast<int>(g_.type[h]), g_.color[h], g_.dir[h], other});
        }
        std::sort(s.begin(), s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
      std::vector<int> nc(n);
      int rank = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && key[order[i]] != key[order[i - 1]]) ++rank;
        nc[order[i]] = rank;
      }
      int count = n == 0 ? 0 : rank + 1;
      col.swap(nc);
      if (count == cells) break;
      cells = count;
    }
    return col;
  }

  void search(const std::vector<int>& start) {
    std::vector<int> col = refine(start);
    const int n = g_.num_vertices();
    // First smallest non-singleton cell.
    std::vector<int> size(n + 1, 0);
    for (int c : col) ++size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(col);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      std::vector<int> next(n);
      for (int x = 0; x < n; ++x) next[x] = 2 * col[x] + ((col[x] == target && x != v) ? 1 : 0);
      search(next);
    }
  }

  void leaf(const std::vector<int>& lab) {
    if (++leaves_ > lim_.max_leaves)
      throw SizeLimitError("canonical labeling search exceeded " + std::to_string(lim_.max_leaves) + " leaves");
    std::vector<int> code = encode(g_, lab, mk_);
    if (best_code.empty() || code < best_code) {
      best_code = std::move(code);
      best_labeling = lab;
      best_leaves.assign(1, lab);
    } else if (code == best_code && keep_) {
      best_leaves.push_back(lab);
    }
  }

  const Graph& g_;
  const Marking& mk_;
  const IsoLimits& lim_;
  std::vector<std::vector<int>> at_;
  std::size_t leaves_ = 0;
  bool keep_ = false;
};

}  // namespace detail

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> labeling;  // vertex -> canonical label
};

inline CanonicalLabeling canonical_labeling(const Graph& g, const Marking& mk = {}, const IsoLimits& lim = {}) {
  detail::Labeler lb(g, mk, lim);
  lb.run(false);
  return {CanonicalForm{lb.best_code}, lb.best_labeling};
}

inline CanonicalForm canonical_form(const Graph& g, const Marking& mk = {}, const IsoLimits& lim = {}) {
  return canonical_labeling(g, mk, lim).form;
}

// All vertex permutations induced by automorphisms (respecting the marking).
inline std::vector<std::vector<int>> vertex_automorphisms(const Graph& g, const Marking& mk = {},
                                                          const IsoLimits& lim = {}) {
  detail::Labeler lb(g, mk, lim);
  lb.run(true);
  const int n = g.num_vertices();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[lb.best_labeling[v]] = v;
  std::vector<std::vector<int>> out;
  for (const auto& L : lb.best_leaves) {
    // alpha = best^{-1} o L maps x to the vertex with label L[x] under best.
    std::vector<int> a(n);
    for (int x = 0; x < n; ++x) a[x] = inv[L[x]];
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Dart-level matching of two graphs along a vertex bijection phi: for every
// class of interchangeable edges of g1 (same item key after mapping by phi),
// the corresponding class of g2.
struct EdgeClassMatch {
  std::vector<int> from;  // edge ids of g1
  std::vector<int> to;    // edge ids of g2
  bool flippable;         // undirected or halvable loop / free edge
};

namespace detail {

inline std::optional<std::vector<EdgeClassMatch>> match_classes(const Graph& g1, const Graph& g2,
                                                                const std::vector<int>& phi) {
  std::vector<int> id(g2.num_vertices());
  std::iota(id.begin(), id.end(), 0);
  std::map<ItemKey, EdgeClassMatch> classes;
  for (int e : g1.edge_ids()) classes[item_key(g1, e, phi)].from.push_back(e);
  for (int e : g2.edge_ids()) {
    auto it = classes.find(item_key(g2, e, id));
    if (it == classes.end()) return std::nullopt;
    it->second.to.push_back(e);
  }
  std::vector<EdgeClassMatch> out;
  for (auto& [k, c] : classes) {
    if (c.from.size() != c.to.size()) return std::nullopt;
    c.flippable = (k[0] == 2 || k[0] == 5) && k[3] != static_cast<int>(EdgeType::directed);
    out.push_back(std::move(c));
  }
  return out;
}

// Writes the dart images for edge a of g1 mapped onto edge b of g2.
inline void map_edge(const Graph& g1, const Graph& g2, const std::vector<int>& phi, int a, int b, bool flip,
                     std::vector<int>& perm) {
  int am = g1.mate[a], bm = g2.mate[b];
  if (am == a) {
    perm[a] = b;
    return;
  }
  switch (g1.kind(a)) {
    case EdgeKind::standard:
      if (g1.type[a] == EdgeType::directed) {
        int ta = g1.tail_dart(a), tb = g2.tail_dart(b);
        perm[ta] = tb;
        perm[g1.mate[ta]] = g2.mate[tb];
      } else if (g2.vert[b] == phi[g1.vert[a]]) {
        perm[a] = b, perm[am] = bm;
      } else {
        perm[a] = bm, perm[am] = b;
      }
      return;
    case EdgeKind::pendant: {
      int va = g1.vert[a] >= 0 ? a : am, vb = g2.vert[b] >= 0 ? b : bm;
      perm[va] = vb;
      perm[g1.mate[va]] = g2.mate[vb];
      return;
    }
    default:
      if (g1.type[a] == EdgeType::directed) {
        int ta = g1.tail_dart(a), tb = g2.tail_dart(b);
        perm[ta] = tb;
        perm[g1.mate[ta]] = g2.mate[tb];
      } else if (!flip) {
        perm[a] = b, perm[am] = bm;
      } else {
        perm[a] = bm, perm[am] = b;
      }
  }
}

}  // namespace detail

// Some dart bijection g1 -> g2 extending the vertex bijection phi, if any.
inline std::optional<std::vector<int>> extend_to_darts(const Graph& g1, const Graph& g2, const std::vector<int>& phi) {
  auto classes = detail::match_classes(g1, g2, phi);
  if (!classes) return std::nullopt;
  std::vector<int> perm(g1.num_darts(), -1);
  for (const auto& c : *classes)
    for (std::size_t i = 0; i < c.from.size(); ++i) detail::map_edge(g1, g2, phi, c.from[i], c.to[i], false, perm);
  return perm;
}

// Calls f(perm) for every dart bijection g1 -> g2 extending phi; stops when f
// returns false. Returns false if stopped early.
template <class F>
bool for_each_dart_extension(const Graph& g1, const Graph& g2, const std::vector<int>& phi, F&& f) {
  auto classes = detail::match_classes(g1, g2, phi);
  if (!classes) return true;
  std::vector<int> perm(g1.num_darts(), -1);
  const auto& cs = *classes;
  std::vector<std::vector<int>> order(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    order[i].resize(cs[i].from.size());
    std::iota(order[i].begin(), order[i].end(), 0);
  }
  std::function<bool(std::size_t)> rec = [&](std::size_t ci) -> bool {
    if (ci == cs.size()) return f(static_cast<const std::vector<int>&>(perm));
    const auto& c = cs[ci];
    auto& ord = order[ci];
    std::sort(ord.begin(), ord.end());
    const std::size_t m = ord.size();
    const std::uint64_t flips = c.flippable ? (std::uint64_t{1} << m) : 1;
    do {
      for (std::uint64_t mask = 0; mask < flips; ++mask) {
        for (std::size_t i = 0; i < m; ++i)
          detail::map_edge(g1, g2, phi, c.from[i], c.to[ord[i]], (mask >> i) & 1, perm);
        if (!rec(ci + 1)) return false;
      }
    } while (std::next_permutation(ord.begin(), ord.end()));
    return true;
  };
  return rec(0);
}

// Number of automorphisms fixing every vertex.
inline std::uint64_t vertex_trivial_automorphism_count(const Graph& g) {
  std::vector<int> id(g.num_vertices());
  std::iota(id.begin(), id.end(), 0);
  auto classes = detail::match_classes(g, g, id);
  std::uint64_t total = 1;
  auto mul = [&](std::uint64_t x) {
    if (__builtin_mul_overflow(total, x, &total)) throw SizeLimitError("automorphism count overflows 64 bits");
  };
  for (const auto& c : *classes)
    for (std::size_t i = 1; i <= c.from.size(); ++i) mul(c.flippable ? 2 * i : i);
  return total;
}

inline std::uint64_t automorphism_count(const Graph& g, const Marking& mk = {}, const IsoLimits& lim = {}) {
  std::uint64_t v = vertex_automorphisms(g, mk, lim).size();
  std::uint64_t k = vertex_trivial_automorphism_count(g), out;
  if (__builtin_mul_overflow(v, k, &out)) throw SizeLimitError("automorphism count overflows 64 bits");
  return out;
}

// Calls f(perm) for every automorphism (as a dart permutation).
template <class F>
bool for_each_automorphism(const Graph& g, F&& f, const Marking& mk = {}, const IsoLimits& lim = {}) {
  for (const auto& phi : vertex_automorphisms(g, mk, lim))
    if (!for_each_dart_extension(g, g, phi, f)) return false;
  return true;
}

inline std::vector<int> random_automorphism(const Graph& g, std::mt19937_64& rng, const Marking& mk = {},
                                            const IsoLimits& lim = {}) {
  auto autos = vertex_automorphisms(g, mk, lim);
  const auto& phi = autos[std::uniform_int_distribution<std::size_t>(0, autos.size() - 1)(rng)];
  auto classes = detail::match_classes(g, g, phi);
  std::vector<int> perm(g.num_darts(), -1);
  for (const auto& c : *classes) {
    std::vector<int> to = c.to;
    std::shuffle(to.begin(), to.end(), rng);
    for (std::size_t i = 0; i < to.size(); ++i)
      detail::map_edge(g, g, phi, c.from[i], to[i], c.flippable && (rng() & 1), perm);
  }
  return perm;
}

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> vertex_map;
  std::vector<int> dart_map;
};

inline IsoResult are_isomorphic(const Graph& g1, const Graph& g2, const Marking& m1 = {}, const Marking& m2 = {},
                                const IsoLimits& lim = {}) {
  IsoResult r;
  if (g1.num_vertices() != g2.num_vertices() || g1.num_darts() != g2.num_darts()) return r;
  if (m1.vertices.size() != m2.vertices.size() || m1.ordered != m2.ordered) return r;
  auto c1 = canonical_labeling(g1, m1, lim), c2 = canonical_labeling(g2, m2, lim);
  if (c1.form != c2.form) return r;
  const int n = g1.num_vertices();
  std::vector<int> inv2(n);
  for (int v = 0; v < n; ++v) inv2[c2.labeling[v]] = v;
  r.vertex_map.resize(n);
  for (int v = 0; v < n; ++v) r.vertex_map[v] = inv2[c1.labeling[v]];
  auto darts = extend_to_darts(g1, g2, r.vertex_map);
  if (!darts) return r;
  r.isomorphic = true;
  r.dart_map = std::move(*darts);
  return r;
}

// Checks directly that dart_map is an isomorphism g1 -> g2.
inline bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& dart_map) {
  if (g1.num_darts() != g2.num_darts() || g1.num_vertices() != g2.num_vertices()) return false;
  if (static_cast<int>(dart_map.size()) != g1.num_darts()) return false;
  std::vector<char> seen(g2.num_darts(), 0);
  std::vector<int> vmap(g1.num_vertices(), -1);
  for (int h = 0; h < g1.num_darts(); ++h) {
    int x = dart_map[h];
    if (x < 0 || x >= g2.num_darts() || seen[x]) return false;
    seen[x] = 1;
    if (dart_map[g1.mate[h]] != g2.mate[x]) return false;
    if (g1.type[h] != g2.type[x] || g1.color[h] != g2.color[x] || g1.dir[h] != g2.dir[x]) return false;
    if ((g1.vert[h] < 0) != (g2.vert[x] < 0)) return false;
    if (g1.vert[h] >= 0) {
      int& t = vmap[g1.vert[h]];
      if (t >= 0 && t != g2.vert[x]) return false;
      t = g2.vert[x];
    }
  }
  std::vector<char> hit(g2.num_vertices(), 0);
  for (int v : vmap)
    if (v >= 0) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
  return true;
}

// Graph relabeled into canonical order: vertex i has canonical label i and
// edges are sorted by their canonical description.
inline Graph canonical_graph(const Graph& g, const Marking& mk = {}, std::vector<int>* vertex_label = nullptr,
                             const IsoLimits& lim = {}) {
  auto cl = canonical_labeling(g, mk, lim);
  if (vertex_label) *vertex_label = cl.labeling;
  Graph out;
  for (int i = 0; i < g.num_vertices(); ++i) out.add_vertex("x" + std::to_string(i));
  std::vector<std::pair<detail::ItemKey, int>> items;
  for (int e : g.edge_ids()) items.push_back({detail::item_key(g, e, cl.labeling), e});
  std::sort(items.begin(), items.end());
  for (const auto& [k, e] : items) {
    std::string name = "f" + std::to_string(out.num_darts());
    int m = g.mate[e];
    auto lab = [&](int h) { return g.vert[h] >= 0 ? cl.labeling[g.vert[h]] : -1; };
    switch (g.kind(e)) {
      case EdgeKind::standard:
        if (g.type[e] == EdgeType::directed) {
          int t = g.tail_dart(e);
          out.add_edge(lab(t), lab(g.mate[t]), g.type[e], g.color[e], name);
        } else {
          out.add_edge(k[1], k[2], g.type[e], g.color[e], name);
        }
        break;
      case EdgeKind::loop: out.add_loop(k[1], g.type[e], g.color[e], name); break;
      case EdgeKind::pendant: {
        int hv = g.vert[e] >= 0 ? e : m;
        out.add_pendant(lab(hv), g.color[e], name, g.type[e], g.dir[hv] >= 0);
        break;
      }
      case EdgeKind::half_edge: {
        int h = out.add_half_edge(k[1], g.color[e], name);
        out.type[h] = g.type[e];
        break;
      }
      case EdgeKind::free_edge: out.add_free_edge(g.color[e], g.type[e], name); break;
      case EdgeKind::free_half_edge: {
        int h = out.add_half_edge(-1, g.color[e], name);
        out.type[h] = g.type[e];
        break;
      }
    }
  }
  return out;
}

}  // namespace rcover

#endif  // RCOVER_ISO_HPP
