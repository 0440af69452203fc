#ifndef RCOVER_GROUPS_HPP
#define RCOVER_GROUPS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "rcover/graph.hpp"
#include "rcover/iso.hpp"

namespace rcover {

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a * b)(x) = a(b(x)): apply b first.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline int perm_order(const Perm& p) {
  Perm q = p;
  int k = 1;
  while (!is_identity(q)) {
    q = compose(p, q);
    ++k;
  }
  return k;
}

// Vertex permutation induced by a dart permutation, or nullopt if the darts
// at some vertex do not go to a single vertex.
inline std::optional<std::vector<int>> vertex_action(const Graph& g, const Perm& p) {
  std::vector<int> v(g.num_vertices(), -1);
  for (int h = 0; h < g.num_darts(); ++h) {
    if (g.vert[h] < 0) continue;
    int t = g.vert[p[h]];
    if (t < 0) return std::nullopt;
    int& slot = v[g.vert[h]];
    if (slot >= 0 && slot != t) return std::nullopt;
    slot = t;
  }
  // Isolated vertices only occur in K1.
  for (int x = 0; x < g.num_vertices(); ++x)
    if (v[x] < 0) v[x] = x;
  return v;
}

inline bool is_automorphism(const Graph& g, const Perm& p) {
  return static_cast<int>(p.size()) == g.num_darts() && is_isomorphism(g, g, p);
}

// Semiregularity of a single element: no fixed vertex or dart, and an edge is
// mapped onto itself only if it is halvable and its darts are swapped.
inline bool is_semiregular_element(const Graph& g, const Perm& p) {
  if (is_identity(p)) return true;
  auto va = vertex_action(g, p);
  if (!va) return false;
  for (int x = 0; x < g.num_vertices(); ++x)
    if ((*va)[x] == x) return false;
  for (int h = 0; h < g.num_darts(); ++h) {
    if (p[h] == h) return false;
    if (p[h] == g.mate[h] && g.type[h] != EdgeType::halvable) return false;
  }
  return true;
}

struct Group {
  int degree = 0;              // number of darts acted on
  std::vector<Perm> elements;  // sorted; identity first

  std::size_t order() const { return elements.size(); }
  bool contains(const Perm& p) const { return std::binary_search(elements.begin(), elements.end(), p); }
  bool operator==(const Group&) const = default;
};

inline Group make_group(int degree, std::vector<Perm> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Group{degree, std::move(elems)};
}

inline Group trivial_group(int degree) { return Group{degree, {identity_perm(degree)}}; }

inline bool is_closed(const Group& grp) {
  if (grp.elements.empty() || !is_identity(grp.elements.front())) return false;
  for (const auto& a : grp.elements) {
    if (!grp.contains(inverse(a))) return false;
    for (const auto& b : grp.elements)
      if (!grp.contains(compose(a, b))) return false;
  }
  return true;
}

// Closure of a set of generators.
inline Group generate(int degree, const std::vector<Perm>& gens, std::size_t max_order = 100000) {
  std::set<Perm> elems{identity_perm(degree)};
  std::vector<Perm> frontier{identity_perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        Perm y = compose(s, x);
        if (elems.insert(y).second) {
          if (elems.size() > max_order) throw SizeLimitError("generated group exceeds order limit");
          next.push_back(std::move(y));
        }
      }
    frontier.swap(next);
  }
  return Group{degree, std::vector<Perm>(elems.begin(), elems.end())};
}

inline Group automorphism_group(const Graph& g, std::size_t max_order = 200, const Marking& mk = {},
                                const IsoLimits& lim = {}) {
  std::uint64_t n = automorphism_count(g, mk, lim);
  if (n > max_order)
    throw SizeLimitError("automorphism group has order " + std::to_string(n) + "; limit is " +
                         std::to_string(max_order));
  std::vector<Perm> elems;
  for_each_automorphism(g, [&](const Perm& p) {
    elems.push_back(p);
    return true;
  }, mk, lim);
  return make_group(g.num_darts(), std::move(elems));
}

inline bool is_semiregular(const Graph& g, const Group& grp) {
  return std::all_of(grp.elements.begin(), grp.elements.end(),
                     [&](const Perm& p) { return is_semiregular_element(g, p); });
}

// Subgroups stored as sorted index lists into the parent group's elements.
struct SubgroupLattice {
  std::vector<std::vector<int>> subgroups;
  std::vector<int> conjugacy_class;  // class id per subgroup
  int num_classes = 0;
};

inline SubgroupLattice all_subgroups(const Group& grp, std::size_t max_order = 200) {
  const int n = static_cast<int>(grp.order());
  if (grp.order() > max_order)
    throw SizeLimitError("group of order " + std::to_string(grp.order()) + " exceeds subgroup limit");
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[grp.elements[i]] = i;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) {
    inv[i] = index.at(inverse(grp.elements[i]));
    for (int j = 0; j < n; ++j) mul[i][j] = index.at(compose(grp.elements[i], grp.elements[j]));
  }
  auto close = [&](std::vector<char> in) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (in[i]) members.push_back(i);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = 0; b <= a; ++b)
        for (int p : {mul[members[a]][members[b]], mul[members[b]][members[a]]})
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
          }
    std::sort(members.begin(), members.end());
    return members;
  };
  SubgroupLattice lat;
  std::set<std::vector<int>> seen;
  lat.subgroups.push_back({0});
  seen.insert({0});
  for (std::size_t s = 0; s < lat.subgroups.size(); ++s) {
    std::vector<char> in(n, 0);
    for (int x : lat.subgroups[s]) in[x] = 1;
    for (int g = 0; g < n; ++g) {
      if (in[g]) continue;
      std::vector<char> ext = in;
      ext[g] = 1;
      auto t = close(ext);
      if (seen.insert(t).second) lat.subgroups.push_back(std::move(t));
    }
  }
  std::sort(lat.subgroups.begin(), lat.subgroups.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::map<std::vector<int>, int> pos;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) pos[lat.subgroups[i]] = static_cast<int>(i);
  lat.conjugacy_class.assign(lat.subgroups.size(), -1);
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (lat.conjugacy_class[i] >= 0) continue;
    int id = lat.num_classes++;
    for (int x = 0; x < n; ++x) {
      std::vector<int> conj;
      for (int s : lat.subgroups[i]) conj.push_back(mul[mul[x][s]][inv[x]]);
      std::sort(conj.begin(), conj.end());
      lat.conjugacy_class[pos.at(conj)] = id;
    }
  }
  return lat;
}

inline Group subgroup(const Group& grp, const std::vector<int>& idx) {
  std::vector<Perm> e;
  for (int i : idx) e.push_back(grp.elements[i]);
  return make_group(grp.degree, std::move(e));
}

// Number of conjugacy classes of subgroups, keyed by subgroup order.
inline std::map<std::size_t, int> subgroup_class_counts(const SubgroupLattice& lat) {
  std::map<std::size_t, int> out;
  std::set<int> done;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    if (done.insert(lat.conjugacy_class[i]).second) ++out[lat.subgroups[i].size()];
  return out;
}

struct SemiregularLimits {
  std::uint64_t max_candidates = 20000000;
  IsoLimits iso;
};

// All automorphisms generating a semiregular cyclic group.
inline std::vector<Perm> semiregular_elements(const Graph& g, const SemiregularLimits& lim = {}) {
  std::vector<Perm> out{identity_perm(g.num_darts())};
  std::uint64_t tried = 0;
  for (const auto& phi : vertex_automorphisms(g, {}, lim.iso)) {
    bool moves_all = true;
    for (int x = 0; x < g.num_vertices(); ++x) moves_all &= phi[x] != x;
    if (!moves_all || g.num_vertices() == 0) continue;
    for_each_dart_extension(g, g, phi, [&](const Perm& p) {
      if (++tried > lim.max_candidates) throw SizeLimitError("too many automorphisms to scan for semiregularity");
      if (!is_semiregular_element(g, p)) return true;
      Perm q = compose(p, p);
      while (!is_identity(q)) {
        if (!is_semiregular_element(g, q)) return true;
        q = compose(p, q);
      }
      out.push_back(p);
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every semiregular subgroup (optionally only those of a given order),
// deduplicated as subgroups and sorted by (order, elements).
inline std::vector<Group> semiregular_subgroups(const Graph& g, std::optional<int> order = std::nullopt,
                                                const SemiregularLimits& lim = {}) {
  const auto elems = semiregular_elements(g, lim);
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const std::size_t bound = std::max<std::size_t>(g.num_vertices(), 2);
  auto close = [&](std::vector<int> members) -> std::optional<std::vector<int>> {
    std::set<int> in(members.begin(), members.end());
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = 0; b <= a; ++b)
        for (const Perm& p : {compose(elems[members[a]], elems[members[b]]),
                              compose(elems[members[b]], elems[members[a]])}) {
          auto it = index.find(p);
          if (it == index.end()) return std::nullopt;
          if (in.insert(it->second).second) {
            if (in.size() > bound) return std::nullopt;
            members.push_back(it->second);
          }
        }
    return std::vector<int>(in.begin(), in.end());
  };
  std::vector<std::vector<int>> subs{{index.at(identity_perm(g.num_darts()))}};
  std::set<std::vector<int>> seen(subs.begin(), subs.end());
  for (std::size_t s = 0; s < subs.size(); ++s) {
    std::set<int> in(subs[s].begin(), subs[s].end());
    for (int x = 0; x < static_cast<int>(elems.size()); ++x) {
      if (in.count(x)) continue;
      std::vector<int> m = subs[s];
      m.push_back(x);
      auto t = close(m);
      if (t && seen.insert(*t).second) subs.push_back(std::move(*t));
    }
  }
  std::vector<Group> out;
  for (const auto& s : subs) {
    if (order && static_cast<int>(s.size()) != *order) continue;
    std::vector<Perm> e;
    for (int i : s) e.push_back(elems[i]);
    out.push_back(make_group(g.num_darts(), std::move(e)));
  }
  std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
  });
  return out;
}

enum class Domain { darts, vertices };

// Orbits as sorted lists, ordered by smallest member.
inline std::vector<std::vector<int>> orbits(const Graph& g, const Group& grp, Domain d) {
  const int n = d == Domain::darts ? g.num_darts() : g.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : grp.elements) {
    if (d == Domain::darts) {
      for (int h = 0; h < n; ++h) parent[find(h)] = find(p[h]);
    } else {
      auto va = vertex_action(g, p);
      if (!va) throw InputError("orbits: element does not act on vertices");
      for (int x = 0; x < n; ++x) parent[find(x)] = find((*va)[x]);
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (int x = 0; x < n; ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : by_root) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rcover

#endif  // RCOVER_GROUPS_HPP
