#ifndef RCOVER_SIDECAR_HPP
#define RCOVER_SIDECAR_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcover/atoms.hpp"
#include "rcover/reduction.hpp"
#include "rcover/text_format.hpp"

namespace rcover {

// JSON description of a reduction series; see README for the layout.
inline constexpr const char* kSidecarSchema = "rcover-reduction";
inline constexpr int kSidecarVersion = 1;

inline nlohmann::json reduction_to_json(const ReductionSeries& rs) {
  using nlohmann::json;
  json j;
  j["schema"] = kSidecarSchema;
  j["version"] = kSidecarVersion;
  j["input"] = serialize(rs.graphs.front());
  j["levels"] = json::array();
  for (const auto& st : rs.steps) {
    json lv;
    lv["level"] = st.level;
    lv["graph"] = serialize(st.source);
    lv["classes"] = json::array();
    for (const auto& c : st.classes) {
      lv["classes"].push_back({{"color", c.color},
                               {"kind", to_string(c.kind)},
                               {"symmetry", to_string(c.symmetry)},
                               {"form", c.form.hex()},
                               {"representative", serialize(c.representative)},
                               {"boundary", c.boundary},
                               {"members", c.members}});
    }
    lv["atoms"] = json::array();
    for (std::size_t i = 0; i < st.atoms.size(); ++i) {
      const Atom& a = st.atoms[i];
      json boundary = json::array(), verts = json::array();
      for (int v : st.role_boundary[i]) boundary.push_back(st.source.vertex_names[v]);
      for (int v : a.vertices) verts.push_back(st.source.vertex_names[v]);
      lv["atoms"].push_back({{"class", st.atom_class[i]},
                             {"kind", to_string(a.kind)},
                             {"boundary", boundary},
                             {"vertices", verts},
                             {"replacement", st.target.edge_names[st.replacement[i][0]]}});
    }
    j["levels"].push_back(std::move(lv));
  }
  j["primitive"] = {{"tag", to_string(rs.primitive.tag)},
                    {"cycle_length", rs.primitive.cycle_length},
                    {"pendant_decoration", rs.primitive.pendant_decoration},
                    {"central_articulation", rs.primitive.central_articulation}};
  j["primitive_graph"] = serialize(rs.primitive_graph());
  j["tree"] = json::array();
  for (const auto& n : rs.tree) j["tree"].push_back({{"level", n.level}, {"atom", n.atom}, {"parent", n.parent}});
  return j;
}

inline AtomKind parse_atom_kind(const std::string& s) {
  for (AtomKind k : {AtomKind::star_block, AtomKind::non_star_block, AtomKind::proper, AtomKind::dipole})
    if (s == to_string(k)) return k;
  throw InputError("sidecar: unknown atom kind '" + s + "'");
}

inline Symmetry parse_symmetry(const std::string& s) {
  for (Symmetry y : {Symmetry::halvable, Symmetry::symmetric, Symmetry::asymmetric})
    if (s == to_string(y)) return y;
  throw InputError("sidecar: unknown symmetry '" + s + "'");
}

// What expand needs from a sidecar: the primitive graph and, per level, the
// atom classes.
struct SidecarData {
  Graph primitive_graph;
  std::vector<std::vector<AtomClass>> levels;
};

inline SidecarData sidecar_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<std::string>() != kSidecarSchema) throw InputError("sidecar: wrong schema");
    if (j.at("version").get<int>() != kSidecarVersion) throw InputError("sidecar: unsupported version");
    SidecarData d;
    d.primitive_graph = parse_graph(j.at("primitive_graph").get<std::string>());
    for (const auto& lv : j.at("levels")) {
      std::vector<AtomClass> classes;
      for (const auto& c : lv.at("classes")) {
        AtomClass ac;
        ac.color = c.at("color").get<int>();
        ac.kind = parse_atom_kind(c.at("kind").get<std::string>());
        ac.symmetry = parse_symmetry(c.at("symmetry").get<std::string>());
        ac.representative = parse_graph(c.at("representative").get<std::string>());
        ac.boundary = c.at("boundary").get<std::vector<int>>();
        ac.members = c.at("members").get<std::vector<int>>();
        for (int b : ac.boundary)
          if (b < 0 || b >= ac.representative.num_vertices()) throw InputError("sidecar: boundary out of range");
        classes.push_back(std::move(ac));
      }
      d.levels.push_back(std::move(classes));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("sidecar: ") + e.what());
  }
}

}  // namespace rcover

#endif  // RCOVER_SIDECAR_HPP
