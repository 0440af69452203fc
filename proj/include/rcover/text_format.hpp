#ifndef RCOVER_TEXT_FORMAT_HPP
#define RCOVER_TEXT_FORMAT_HPP

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rcover/graph.hpp"

namespace rcover {

class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& msg)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

struct Token {
  std::string text;
  int column;
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace detail

// Text graph format, one item per line:
//   vertex <name>
//   edge <name> <u> <v> type=<halvable|undirected|directed> color=<int> [tail=<u|v>]
//   loop <name> <v> type=... color=<int> [tail=<v>]
//   pendant <name> <v> color=<int> [type=...] [tail=<v>|tail=*]
//   halfedge <name> <v> color=<int>
//   free <name> color=<int> [type=halvable|undirected]
inline Graph parse_graph(std::istream& in) {
  Graph g;
  std::map<std::string, int> vid;
  std::set<std::string> enames;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::tokenize(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0].text;
    auto fail = [&](const detail::Token& t, const std::string& msg) -> void {
      throw ParseError(lineno, t.column, msg);
    };
    auto need = [&](std::size_t count) {
      if (tok.size() < count)
        throw ParseError(lineno, static_cast<int>(line.size()) + 1, "too few fields for '" + kw + "'");
    };
    auto vertex_ref = [&](const detail::Token& t) {
      auto it = vid.find(t.text);
      if (it == vid.end()) fail(t, "unknown vertex '" + t.text + "'");
      return it->second;
    };
    if (kw == "vertex") {
      need(2);
      if (tok.size() > 2) fail(tok[2], "unexpected field");
      if (vid.count(tok[1].text)) fail(tok[1], "duplicate vertex name '" + tok[1].text + "'");
      vid[tok[1].text] = g.add_vertex(tok[1].text);
      continue;
    }
    std::size_t positional = 0;
    if (kw == "edge") positional = 4;
    else if (kw == "loop" || kw == "pendant" || kw == "halfedge") positional = 3;
    else if (kw == "free") positional = 2;
    else fail(tok[0], "unknown item '" + kw + "'");
    need(positional);
    const detail::Token& name = tok[1];
    if (enames.count(name.text)) fail(name, "duplicate edge name '" + name.text + "'");
    enames.insert(name.text);

    std::optional<EdgeType> type;
    std::optional<int> color;
    const detail::Token* tail = nullptr;
    const detail::Token* type_tok = nullptr;
    for (std::size_t i = positional; i < tok.size(); ++i) {
      const auto& t = tok[i];
      auto eq = t.text.find('=');
      if (eq == std::string::npos) fail(t, "expected key=value, got '" + t.text + "'");
      std::string key = t.text.substr(0, eq), val = t.text.substr(eq + 1);
      if (key == "type") {
        if (type) fail(t, "repeated attribute 'type'");
        type = parse_edge_type(val);
        type_tok = &t;
        if (!type) fail(t, "unknown edge type '" + val + "'");
      } else if (key == "color") {
        if (color) fail(t, "repeated attribute 'color'");
        int c = -1;
        auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), c);
        if (ec != std::errc() || p != val.data() + val.size() || c < 0)
          fail(t, "color must be a non-negative integer");
        color = c;
      } else if (key == "tail") {
        if (tail) fail(t, "repeated attribute 'tail'");
        tail = &t;
      } else {
        fail(t, "unknown attribute '" + key + "'");
      }
    }
    auto tail_value = [&]() { return tail->text.substr(5); };
    if (!color) throw ParseError(lineno, static_cast<int>(line.size()) + 1, "missing color");

    if (kw == "edge" || kw == "loop") {
      if (!type) throw ParseError(lineno, static_cast<int>(line.size()) + 1, "missing type");
      int u = vertex_ref(tok[2]);
      int v = kw == "edge" ? vertex_ref(tok[3]) : u;
      if (kw == "edge" && u == v) fail(tok[3], "edge endpoints coincide; use 'loop'");
      if (*type == EdgeType::directed) {
        if (!tail) throw ParseError(lineno, static_cast<int>(line.size()) + 1, "directed edge without tail");
        auto tv = tail_value();
        bool at_u = tv == tok[2].text;
        bool at_v = kw == "edge" ? tv == tok[3].text : at_u;
        if (!at_u && !at_v) fail(*tail, "tail '" + tv + "' is not an endpoint");
        int h = g.add_edge(u, v, *type, *color, name.text);
        if (!at_u) {
          g.dir[h] = -1;
          g.dir[h + 1] = 1;
        }
      } else {
        if (tail) fail(*tail, "tail on a non-directed edge");
        g.add_edge(u, v, *type, *color, name.text);
      }
    } else if (kw == "pendant") {
      int v = vertex_ref(tok[2]);
      EdgeType t = type.value_or(EdgeType::undirected);
      if (t == EdgeType::directed) {
        if (!tail) throw ParseError(lineno, static_cast<int>(line.size()) + 1, "directed edge without tail");
        auto tv = tail_value();
        if (tv != tok[2].text && tv != "*") fail(*tail, "tail must be the vertex or '*'");
        g.add_pendant(v, *color, name.text, t, tv != "*");
      } else {
        if (tail) fail(*tail, "tail on a non-directed edge");
        g.add_pendant(v, *color, name.text, t);
      }
    } else if (kw == "halfedge") {
      int v = vertex_ref(tok[2]);
      if (type && *type != EdgeType::halvable) fail(*type_tok, "half-edges are halvable");
      if (tail) fail(*tail, "tail on a half-edge");
      g.add_half_edge(v, *color, name.text);
    } else {
      EdgeType t = type.value_or(EdgeType::undirected);
      if (t == EdgeType::directed) fail(*type_tok, "free edges cannot be directed");
      if (tail) fail(*tail, "tail on a non-directed edge");
      g.add_free_edge(*color, t, name.text);
    }
  }
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_graph(in);
}

inline std::string serialize(const Graph& g) {
  std::ostringstream out;
  for (const auto& n : g.vertex_names) out << "vertex " << n << "\n";
  const Graph c = compact(g).graph;
  for (int h = 0; h < c.num_darts(); ++h) {
    int m = c.mate[h];
    if (m < h) continue;
    const std::string& nm = c.edge_names[h];
    auto vn = [&](int d) { return c.vertex_names[c.vert[d]]; };
    switch (c.kind(h)) {
      case EdgeKind::standard:
      case EdgeKind::loop:
        out << (c.kind(h) == EdgeKind::loop ? "loop " : "edge ") << nm << " " << vn(h);
        if (c.kind(h) == EdgeKind::standard) out << " " << vn(m);
        out << " type=" << to_string(c.type[h]) << " color=" << c.color[h];
        if (c.type[h] == EdgeType::directed) out << " tail=" << vn(c.tail_dart(h));
        break;
      case EdgeKind::pendant:
        out << "pendant " << nm << " " << vn(h) << " color=" << c.color[h];
        if (c.type[h] != EdgeType::undirected) out << " type=" << to_string(c.type[h]);
        if (c.type[h] == EdgeType::directed) out << " tail=" << (c.dir[h] > 0 ? vn(h) : std::string("*"));
        break;
      case EdgeKind::half_edge:
        out << "halfedge " << nm << " " << vn(h) << " color=" << c.color[h];
        break;
      case EdgeKind::free_edge:
        out << "free " << nm << " color=" << c.color[h];
        if (c.type[h] != EdgeType::undirected) out << " type=" << to_string(c.type[h]);
        break;
      case EdgeKind::free_half_edge:
        throw InputError("free half-edges have no text representation");
    }
    out << "\n";
  }
  return out.str();
}

inline void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << serialize(g);
}

}  // namespace rcover

#endif  // RCOVER_TEXT_FORMAT_HPP
