// rcover: command-line front end for the regular-cover library.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rcover/rcover.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rcover;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kSizeLimit = 3;

struct Options {
  bool halvable_input = false;
  int max_vertices = 24;
  std::size_t max_group_order = 200;
  std::uint64_t seed = 1;
};

Options opt;

IsoLimits iso_limits() {
  IsoLimits l;
  l.max_vertices = opt.max_vertices;
  return l;
}

SemiregularLimits sr_limits() {
  SemiregularLimits l;
  l.iso = iso_limits();
  return l;
}

Graph load_raw(const std::string& path) {
  Graph g = read_graph_file(path);
  if (opt.halvable_input) g = families::halvable(g);
  require_valid(g);
  return g;
}

Graph load(const std::string& path) {
  Graph g = normalize(load_raw(path));
  if (g.num_vertices() > opt.max_vertices)
    throw SizeLimitError(path + ": " + std::to_string(g.num_vertices()) + " vertices exceeds --max-vertices " +
                         std::to_string(opt.max_vertices));
  return g;
}

void check_group_order(const Graph& g, const std::string& what) {
  std::uint64_t n = automorphism_count(g, {}, iso_limits());
  if (n > opt.max_group_order)
    throw SizeLimitError(what + ": automorphism group of order " + std::to_string(n) + " exceeds --max-group-order " +
                         std::to_string(opt.max_group_order));
}

std::string digest(const CanonicalForm& f) {
  std::uint64_t h = 1469598103934665603ull;
  for (int x : f.code) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string names(const Graph& g, const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.vertex_names[vs[i]];
  return s + "}";
}

std::string vertex_perm(const Graph& g, const Perm& p) {
  auto va = *vertex_action(g, p);
  std::string s;
  for (int v = 0; v < g.num_vertices(); ++v)
    s += (v ? " " : "") + g.vertex_names[v] + "->" + g.vertex_names[va[v]];
  return s;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw InputError("cannot write '" + p.string() + "'");
  out << text;
}

void ensure_dir(const std::string& d) {
  std::error_code ec;
  fs::create_directories(d, ec);
  if (ec) throw InputError("cannot create directory '" + d + "': " + ec.message());
}

int cmd_validate(const std::string& file) {
  Graph g = read_graph_file(file);
  auto v = validate(g);
  if (!v.empty()) {
    for (const auto& s : v) std::cerr << "invalid: " << s << "\n";
    return kInputError;
  }
  std::cout << "ok: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges, " << g.num_half_edges()
            << " half-edges, " << (is_connected(g) ? "connected" : "disconnected") << "\n";
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
  Graph g1 = load(a), g2 = load(b);
  auto r = are_isomorphic(g1, g2, {}, {}, iso_limits());
  if (!r.isomorphic) {
    std::cout << "not isomorphic\n";
    return kNegative;
  }
  std::cout << "isomorphic\n";
  for (int v = 0; v < g1.num_vertices(); ++v)
    std::cout << "  " << g1.vertex_names[v] << " -> " << g2.vertex_names[r.vertex_map[v]] << "\n";
  return kOk;
}

int cmd_aut(const std::string& file, int semiregular) {
  Graph g = load(file);
  std::uint64_t n = automorphism_count(g, {}, iso_limits());
  std::cout << "order " << n << "\n";
  auto vauts = vertex_automorphisms(g, {}, iso_limits());
  std::vector<int> parent(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& phi : vauts)
    for (int v = 0; v < g.num_vertices(); ++v) parent[find(v)] = find(phi[v]);
  std::map<int, std::vector<int>> orb;
  for (int v = 0; v < g.num_vertices(); ++v) orb[find(v)].push_back(v);
  std::cout << "vertex orbits";
  for (const auto& [r, vs] : orb) std::cout << " " << names(g, vs);
  std::cout << "\n";
  if (semiregular > 0) {
    check_group_order(g, file);
    auto subs = semiregular_subgroups(g, semiregular, sr_limits());
    std::cout << subs.size() << " semiregular subgroup(s) of order " << semiregular << "\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
      std::cout << "subgroup " << i << "\n";
      for (const auto& p : subs[i].elements) std::cout << "  " << vertex_perm(g, p) << "\n";
    }
  }
  return kOk;
}

int cmd_blocks(const std::string& file, bool dot) {
  Graph g = load(file);
  BlockTree bt = block_tree(g);
  if (dot) {
    std::cout << to_dot(bt, g);
    return kOk;
  }
  for (int b = 0; b < bt.num_blocks(); ++b)
    std::cout << "block " << b << " " << to_string(bt.blocks[b].kind) << " " << names(g, bt.blocks[b].vertices)
              << (bt.center == b ? " center" : "") << "\n";
  for (std::size_t i = 0; i < bt.articulations.size(); ++i)
    std::cout << "articulation " << g.vertex_names[bt.articulations[i]]
              << (bt.center == bt.num_blocks() + static_cast<int>(i) ? " center" : "") << "\n";
  return kOk;
}

int cmd_atoms(const std::string& file, bool dot) {
  Graph g = load(file);
  auto atoms = find_atoms(g, iso_limits());
  if (dot) {
    std::vector<int> interior;
    for (const auto& a : atoms)
      for (int v : a.interior_vertices()) interior.push_back(v);
    std::cout << to_dot(g, interior);
    return kOk;
  }
  std::cout << atoms.size() << " atom(s)\n";
  for (const auto& a : atoms) {
    std::cout << to_string(a.kind) << " boundary " << names(g, a.boundary) << " vertices " << names(g, a.vertices);
    if (!a.is_block()) std::cout << " " << to_string(a.symmetry);
    std::cout << "\n";
  }
  if (atoms.empty()) std::cout << "primitive: " << to_string(classify_primitive(g, iso_limits()).tag) << "\n";
  return kOk;
}

int cmd_reduce(const std::string& file, const std::string& out, bool dot) {
  Graph g = load(file);
  ReductionSeries rs = reduction_series(g, iso_limits());
  if (dot) {
    std::cout << to_dot(rs);
    return kOk;
  }
  for (const auto& st : rs.steps) {
    std::cout << "level " << st.level << ": " << st.atoms.size() << " atom(s) in " << st.classes.size()
              << " class(es)\n";
    for (const auto& c : st.classes)
      std::cout << "  color " << c.color << " " << to_string(c.kind)
                << (c.kind == AtomKind::proper || c.kind == AtomKind::dipole ? std::string(" ") + to_string(c.symmetry)
                                                                             : std::string())
                << " x" << c.members.size() << "\n";
  }
  const Graph& top = rs.primitive_graph();
  std::cout << "primitive G" << rs.length() << ": " << to_string(rs.primitive.tag) << ", " << top.num_vertices()
            << " vertices, " << top.num_edges() << " edges\n";
  if (!out.empty()) {
    ensure_dir(out);
    for (int i = 1; i <= rs.length(); ++i) write_text(fs::path(out) / ("G" + std::to_string(i) + ".g"), serialize(rs.graphs[i]));
    write_text(fs::path(out) / "reduction.json", reduction_to_json(rs).dump(2) + "\n");
  }
  return kOk;
}

void write_quotients(const std::vector<Graph>& qs, const std::vector<CanonicalForm>& forms, const std::string& out,
                     const std::string& via) {
  ensure_dir(out);
  json idx;
  idx["via"] = via;
  idx["count"] = qs.size();
  idx["quotients"] = json::array();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "q%03zu.g", i);
    write_text(fs::path(out) / name, serialize(qs[i]));
    idx["quotients"].push_back({{"file", name},
                                {"vertices", qs[i].num_vertices()},
                                {"edges", qs[i].num_edges()},
                                {"half_edges", qs[i].num_half_edges()},
                                {"form", forms[i].hex()}});
  }
  write_text(fs::path(out) / "index.json", idx.dump(2) + "\n");
}

void print_quotients(const std::vector<Graph>& qs, const std::vector<CanonicalForm>& forms) {
  std::cout << qs.size() << " quotient(s)\n";
  for (std::size_t i = 0; i < qs.size(); ++i)
    std::cout << "  " << i << ": " << qs[i].num_vertices() << " vertices, " << qs[i].num_edges() << " edges, "
              << qs[i].num_half_edges() << " half-edges, form " << digest(forms[i]) << "\n";
}

int cmd_quotients(const std::string& file, const std::string& via, const std::string& out) {
  Graph g = load(file);
  Via v = via == "bruteforce" ? Via::bruteforce : Via::reduction;
  if (v == Via::bruteforce) check_group_order(g, file);
  else check_group_order(reduction_series(g, iso_limits()).primitive_graph(), file + " (primitive graph)");
  GraphSet s = all_quotients(g, v, sr_limits());
  auto qs = s.graphs();
  auto forms = s.forms();
  print_quotients(qs, forms);
  if (!out.empty()) write_quotients(qs, forms, out, via);
  return kOk;
}

int cmd_expand(const std::string& sidecar, int which, const std::string& out) {
  std::ifstream in(sidecar);
  if (!in) throw InputError("cannot open '" + sidecar + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(sidecar + ": " + e.what());
  }
  SidecarData d = sidecar_from_json(j);
  check_group_order(d.primitive_graph, "primitive graph");
  GraphSet top;
  for (auto& q : quotients_of(d.primitive_graph, sr_limits())) top.insert(std::move(q), iso_limits());
  auto tops = top.graphs();
  if (which < 0 || which >= static_cast<int>(tops.size()))
    throw InputError("--quotient " + std::to_string(which) + " out of range; the primitive graph has " +
                     std::to_string(tops.size()) + " quotient(s)");
  GraphSet cur;
  cur.insert(tops[which], iso_limits());
  for (int i = static_cast<int>(d.levels.size()) - 1; i >= 0; --i) {
    LevelExpansion lx = level_expansion(d.levels[i], iso_limits());
    GraphSet next;
    for (const auto& [f, h] : cur.by_form)
      for (auto& g : expand_step(h, lx)) next.insert(std::move(g), iso_limits());
    cur = std::move(next);
  }
  auto qs = cur.graphs();
  auto forms = cur.forms();
  print_quotients(qs, forms);
  if (!out.empty()) write_quotients(qs, forms, out, "expand");
  return kOk;
}

int cmd_cover(const std::string& a, const std::string& b) {
  Graph g = load(a), h = load(b);
  check_group_order(g, a);
  CoverResult r = regular_cover_test(g, h, sr_limits());
  if (!r.covers) {
    std::cout << "no (" << r.reason << ")\n";
    return kNegative;
  }
  std::cout << "yes, |Gamma| = " << r.order << "\n";
  for (const auto& p : r.witness->elements) std::cout << "  " << vertex_perm(g, p) << "\n";
  return kOk;
}

int cmd_dot(const std::string& file) {
  std::cout << to_dot(load_raw(file));
  return kOk;
}

// Fixture corpus: <dir>/manifest.json lists cases with expected values.
std::string fixture_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* e = std::getenv("RCOVER_FIXTURES")) return e;
#ifdef RCOVER_FIXTURE_DIR
  return RCOVER_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

json read_manifest(const std::string& dir) {
  std::ifstream in(fs::path(dir) / "manifest.json");
  if (!in) throw InputError("no manifest.json in '" + dir + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("manifest.json: ") + e.what());
  }
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> order(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Graph out;
  std::vector<int> to(g.num_vertices());
  for (int v : order) to[v] = out.add_vertex(g.vertex_names[v]);
  std::vector<int> edges = g.edge_ids(), dm(g.num_darts());
  std::shuffle(edges.begin(), edges.end(), rng);
  for (int e : edges) detail::copy_edge(g, e, out, to, dm, g.edge_names[e]);
  return out;
}

// Returns a list of mismatches for one case.
std::vector<std::string> run_case(const std::string& dir, const json& c, std::mt19937_64& rng) {
  std::vector<std::string> bad;
  Graph g = normalize(read_graph_file((fs::path(dir) / c.at("file").get<std::string>()).string()));
  if (c.value("halvable", false)) g = families::halvable(g);
  const json& ex = c.at("expect");
  auto check = [&](const std::string& key, const json& got) {
    if (ex.contains(key) && ex.at(key) != got)
      bad.push_back(key + ": expected " + ex.at(key).dump() + ", got " + got.dump());
  };
  for (const Graph& x : {g, shuffled(g, rng)}) {
    if (ex.contains("aut_order")) check("aut_order", automorphism_count(x, {}, iso_limits()));
    ReductionSeries rs = reduction_series(x, iso_limits());
    check("reduction_length", rs.length());
    check("primitive", to_string(rs.primitive.tag));
    if (ex.contains("atoms")) check("atoms", find_atoms(x, iso_limits()).size());
    if (ex.contains("quotients")) check("quotients", all_quotients(x, Via::reduction, sr_limits()).size());
  }
  if (c.contains("covers")) {
    Graph h = normalize(read_graph_file((fs::path(dir) / c.at("covers").at("file").get<std::string>()).string()));
    if (c.value("halvable", false)) h = families::halvable(h);
    bool want = c.at("covers").at("yes").get<bool>();
    if (regular_cover_test(g, h, sr_limits()).covers != want) bad.push_back("covers: expected " + std::string(want ? "yes" : "no"));
  }
  return bad;
}

int cmd_fixtures(const std::string& action, const std::string& dirflag) {
  std::string dir = fixture_dir(dirflag);
  json m = read_manifest(dir);
  if (action == "list") {
    for (const auto& c : m.at("cases"))
      std::cout << c.at("name").get<std::string>() << "  " << c.at("file").get<std::string>() << "  ("
                << c.value("origin", "") << ")\n";
    return kOk;
  }
  std::mt19937_64 rng(opt.seed);
  int failed = 0, total = 0;
  for (const auto& c : m.at("cases")) {
    ++total;
    auto bad = run_case(dir, c, rng);
    std::cout << (bad.empty() ? "PASS " : "FAIL ") << c.at("name").get<std::string>() << "\n";
    for (const auto& b : bad) std::cout << "    " << b << "\n";
    failed += !bad.empty();
  }
  std::cout << (total - failed) << "/" << total << " fixture case(s) passed\n";
  return failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular graph covers via 3-connected reduction"};
  app.require_subcommand(1);
  app.add_flag("--halvable-input", opt.halvable_input, "Treat undirected input edges as halvable");
  app.add_option("--max-vertices", opt.max_vertices, "Vertex limit after normalization")->capture_default_str();
  app.add_option("--max-group-order", opt.max_group_order, "Limit on enumerated group orders")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized checks")->capture_default_str();

  std::string f1, f2, out, via = "reduction", action, dir;
  bool dot = false;
  int k = 0;
  auto* validate_c = app.add_subcommand("validate", "Parse and validate a graph file");
  validate_c->add_option("file", f1)->required();
  auto* iso_c = app.add_subcommand("iso", "Test two graphs for isomorphism");
  iso_c->add_option("a", f1)->required();
  iso_c->add_option("b", f2)->required();
  auto* aut_c = app.add_subcommand("aut", "Automorphism group order and vertex orbits");
  aut_c->add_option("file", f1)->required();
  aut_c->add_option("--semiregular", k, "List semiregular subgroups of this order");
  auto* blocks_c = app.add_subcommand("blocks", "Block tree and center");
  blocks_c->add_option("file", f1)->required();
  blocks_c->add_flag("--dot", dot);
  auto* atoms_c = app.add_subcommand("atoms", "List atoms");
  atoms_c->add_option("file", f1)->required();
  atoms_c->add_flag("--dot", dot);
  auto* reduce_c = app.add_subcommand("reduce", "Reduction series");
  reduce_c->add_option("file", f1)->required();
  reduce_c->add_option("--out", out, "Directory for G_i files and reduction.json");
  reduce_c->add_flag("--dot", dot, "Render the reduction tree");
  auto* quot_c = app.add_subcommand("quotients", "All regular quotients");
  quot_c->add_option("file", f1)->required();
  quot_c->add_option("--via", via)->check(CLI::IsMember({"bruteforce", "reduction"}))->capture_default_str();
  quot_c->add_option("--out", out, "Directory for quotient files and index.json");
  auto* expand_c = app.add_subcommand("expand", "Expand a quotient of the primitive graph from a sidecar");
  expand_c->add_option("sidecar", f1)->required();
  expand_c->add_option("--quotient", k, "Index of the primitive quotient")->capture_default_str();
  expand_c->add_option("--out", out, "Directory for expanded quotients");
  auto* cover_c = app.add_subcommand("cover", "Does G regularly cover H?");
  cover_c->add_option("G", f1)->required();
  cover_c->add_option("H", f2)->required();
  auto* dot_c = app.add_subcommand("dot", "Graphviz rendering of a graph");
  dot_c->add_option("file", f1)->required();
  auto* fix_c = app.add_subcommand("fixtures", "Fixture corpus");
  fix_c->add_option("action", action)->required()->check(CLI::IsMember({"list", "run"}));
  fix_c->add_option("--dir", dir, "Fixture directory (default: RCOVER_FIXTURES or the built-in corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*validate_c) return cmd_validate(f1);
    if (*iso_c) return cmd_iso(f1, f2);
    if (*aut_c) return cmd_aut(f1, k);
    if (*blocks_c) return cmd_blocks(f1, dot);
    if (*atoms_c) return cmd_atoms(f1, dot);
    if (*reduce_c) return cmd_reduce(f1, out, dot);
    if (*quot_c) return cmd_quotients(f1, via, out);
    if (*expand_c) return cmd_expand(f1, k, out);
    if (*cover_c) return cmd_cover(f1, f2);
    if (*dot_c) return cmd_dot(f1);
    if (*fix_c) return cmd_fixtures(action, dir);
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
