#include "xhtpy/io.hpp"

#include <fstream>
#include <sstream>

namespace xhtpy {
namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back({number, t});
    if (nl == std::string_view::npos) break;
  }
  return out;
}

bool starts_with_word(std::string_view s, std::string_view word) {
  return s.size() > word.size() && s.substr(0, word.size()) == word &&
         (s[word.size()] == ' ' || s[word.size()] == '\t');
}

std::string_view after_key(const Line& line, std::string_view key) {
  if (line.text.substr(0, key.size()) != key) fail(line.number, "expected '" + std::string(key) + "'");
  return line.text.substr(key.size());
}

}  // namespace

const Graph& Document::graph(std::string_view name) const {
  for (const auto& g : graphs)
    if (g.name == name) return g.graph;
  throw Error(Errc::BadParameter, "no graph named '" + std::string(name) + "'");
}

const NamedMap& Document::named_map(std::string_view name) const {
  for (const auto& m : maps)
    if (m.name == name) return m;
  throw Error(Errc::BadParameter, "no map named '" + std::string(name) + "'");
}

const GraphMap& Document::map(std::string_view name) const { return named_map(name).map; }

bool Document::has_graph(std::string_view name) const {
  for (const auto& g : graphs)
    if (g.name == name) return true;
  return false;
}

bool Document::has_map(std::string_view name) const {
  for (const auto& m : maps)
    if (m.name == name) return true;
  return false;
}

void Document::add_graph(std::string name, Graph g) {
  if (has_graph(name)) throw Error(Errc::BadParameter, "duplicate graph name '" + name + "'");
  graphs.push_back({std::move(name), std::move(g)});
}

void Document::add_map(std::string name, std::string domain_name, std::string codomain_name,
                       GraphMap m) {
  if (has_map(name)) throw Error(Errc::BadParameter, "duplicate map name '" + name + "'");
  if (!(graph(domain_name) == m.domain()) || !(graph(codomain_name) == m.codomain()))
    throw Error(Errc::SignatureMismatch, "map '" + name + "' does not match its named graphs");
  maps.push_back({std::move(name), std::move(domain_name), std::move(codomain_name), std::move(m)});
}

Document parse_document(std::string_view text) {
  Document doc;
  auto lines = content_lines(text);
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (starts_with_word(head.text, "graph")) {
      auto words = split_ws(head.text);
      if (words.size() != 2) fail(head.number, "expected 'graph <name>'");
      if (i + 1 >= lines.size()) fail(head.number, "graph block without vertices line");
      auto verts = split_ws(after_key(lines[i + 1], "vertices:"));
      std::vector<LabelEdge> edges;
      i += 2;
      if (i < lines.size() && lines[i].text.substr(0, 6) == "edges:") {
        for (const auto& tok : split_ws(after_key(lines[i], "edges:"))) {
          auto dash = tok.find('-');
          if (dash == std::string::npos || tok.find('-', dash + 1) != std::string::npos ||
              dash == 0 || dash + 1 == tok.size())
            fail(lines[i].number, "bad edge token '" + tok + "'");
          edges.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
        }
        ++i;
      }
      try {
        doc.add_graph(words[1], Graph::make(std::move(verts), edges));
      } catch (const Error& e) {
        fail(head.number, e.what());
      }
    } else if (starts_with_word(head.text, "map")) {
      // map <name> : <dom> -> <cod>
      auto words = split_ws(head.text);
      if (words.size() != 6 || words[2] != ":" || words[4] != "->")
        fail(head.number, "expected 'map <name> : <graph> -> <graph>'");
      std::map<VertexId, VertexId> assignment;
      ++i;
      while (i < lines.size()) {
        auto parts = split_ws(lines[i].text);
        const bool arrow = parts.size() == 3 && parts[1] == "->";
        if (!arrow && (starts_with_word(lines[i].text, "graph") ||
                       starts_with_word(lines[i].text, "map")))
          break;
        if (!arrow) fail(lines[i].number, "expected '<v> -> <w>'");
        if (!assignment.emplace(parts[0], parts[2]).second)
          fail(lines[i].number, "vertex '" + parts[0] + "' assigned twice");
        ++i;
      }
      try {
        GraphMap m = GraphMap::from_labels(doc.graph(words[3]), doc.graph(words[5]), assignment);
        doc.add_map(words[1], words[3], words[5], std::move(m));
      } catch (const Error& e) {
        fail(head.number, e.what());
      }
    } else {
      fail(head.number, "expected a 'graph' or 'map' block");
    }
  }
  return doc;
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadParameter, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

Graph parse_graph(std::string_view text) {
  Document doc = parse_document(text);
  if (doc.graphs.size() != 1) throw Error(Errc::ParseError, "expected exactly one graph block");
  return doc.graphs.front().graph;
}

std::string serialize_graph(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + "\nvertices:";
  for (const auto& l : g.labels()) out += " " + l;
  out += "\nedges:";
  for (const auto& [u, v] : g.label_edges()) out += " " + u + "-" + v;
  out += "\n";
  return out;
}

std::string serialize_map(const GraphMap& m, std::string_view name, std::string_view domain_name,
                          std::string_view codomain_name) {
  std::string out = "map " + std::string(name) + " : " + std::string(domain_name) + " -> " +
                    std::string(codomain_name) + "\n";
  for (Vertex v = 0; v < m.domain().order(); ++v)
    out += m.domain().label(v) + " -> " + m.codomain().label(m(v)) + "\n";
  return out;
}

std::string serialize_document(const Document& doc) {
  std::string out;
  for (const auto& g : doc.graphs) {
    if (!out.empty()) out += "\n";
    out += serialize_graph(g.graph, g.name);
  }
  for (const auto& m : doc.maps) {
    if (!out.empty()) out += "\n";
    out += serialize_map(m.map, m.name, m.domain_name, m.codomain_name);
  }
  return out;
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + dot_quote(name) + " {\n";
  for (const auto& l : g.labels()) out += "  " + dot_quote(l) + ";\n";
  for (const auto& [u, v] : g.label_edges())
    out += "  " + dot_quote(u) + " -- " + dot_quote(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace xhtpy
