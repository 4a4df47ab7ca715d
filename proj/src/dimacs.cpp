#include "wrd/dimacs.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wrd/errors.hpp"

namespace wrd {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& tok, std::size_t line) {
  if (tok.text.empty() || tok.text.size() > 18) throw ParseError(line, tok.column, "bad integer");
  std::size_t value = 0;
  for (char c : tok.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line, tok.column, "expected non-negative integer, got '" + std::string(tok.text) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

bool blank(std::string_view line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

DimacsDocument parse_dimacs(std::string_view text) {
  enum class Stage { comments, vertices, edges };
  Stage stage = Stage::comments;
  DimacsDocument doc;
  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::vector<Rational> weights;
  std::vector<bool> seen_vertex;
  std::size_t vertex_lines = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> adj;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (blank(line)) continue;

    auto toks = tokenize(line);
    const auto& tag = toks[0];
    auto expect_fields = [&](std::size_t count) {
      if (toks.size() != count)
        throw ParseError(line_no, toks.size() > count ? toks[count].column : line.size() + 1,
                         "expected " + std::to_string(count) + " fields");
    };

    if (tag.text == "c") {
      if (stage != Stage::comments || have_header)
        throw ParseError(line_no, tag.column, "comment after header");
      auto body = line.substr(tag.column);  // past "c"
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      doc.comments.emplace_back(body);
    } else if (tag.text == "p") {
      if (have_header) throw ParseError(line_no, tag.column, "duplicate header");
      expect_fields(4);
      if (toks[1].text != "wrd") throw ParseError(line_no, toks[1].column, "expected format 'wrd'");
      n = parse_count(toks[2], line_no);
      m = parse_count(toks[3], line_no);
      if (m > n * (n - (n > 0 ? 1 : 0)) / 2) throw ParseError(line_no, toks[3].column, "too many edges for n");
      have_header = true;
      stage = Stage::vertices;
      weights.assign(n, Rational(0));
      seen_vertex.assign(n, false);
      adj.assign(n, {});
    } else if (tag.text == "v") {
      if (!have_header) throw ParseError(line_no, tag.column, "vertex line before header");
      if (stage != Stage::vertices) throw ParseError(line_no, tag.column, "vertex line after edge lines");
      expect_fields(3);
      std::size_t id = parse_count(toks[1], line_no);
      if (id < 1 || id > n) throw ParseError(line_no, toks[1].column, "vertex id out of range");
      if (seen_vertex[id - 1]) throw ParseError(line_no, toks[1].column, "duplicate vertex line");
      Rational w;
      try {
        w = parse_rational(toks[2].text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, toks[2].column, e.what());
      }
      if (sgn(w) <= 0) throw ParseError(line_no, toks[2].column, "weight must be positive");
      weights[id - 1] = w;
      seen_vertex[id - 1] = true;
      ++vertex_lines;
    } else if (tag.text == "e") {
      if (!have_header) throw ParseError(line_no, tag.column, "edge line before header");
      if (vertex_lines != n) throw ParseError(line_no, tag.column, "edge line before all vertex lines");
      stage = Stage::edges;
      expect_fields(3);
      std::size_t u = parse_count(toks[1], line_no);
      std::size_t v = parse_count(toks[2], line_no);
      if (u < 1 || u > n) throw ParseError(line_no, toks[1].column, "vertex id out of range");
      if (v < 1 || v > n) throw ParseError(line_no, toks[2].column, "vertex id out of range");
      if (u == v) throw ParseError(line_no, toks[2].column, "loop edge");
      if (u > v) throw ParseError(line_no, toks[2].column, "edge endpoints must satisfy u < v");
      auto& nu = adj[u - 1];
      for (Vertex x : nu)
        if (x == v - 1) throw ParseError(line_no, tag.column, "duplicate edge");
      nu.push_back(v - 1);
      edges.emplace_back(u - 1, v - 1);
      if (edges.size() > m) throw ParseError(line_no, tag.column, "more edge lines than declared");
    } else {
      throw ParseError(line_no, tag.column, "unknown line type '" + std::string(tag.text) + "'");
    }
  }

  if (!have_header) throw ParseError(line_no, 1, "missing 'p wrd' header");
  if (vertex_lines != n)
    throw ParseError(line_no, 1, "expected " + std::to_string(n) + " vertex lines, got " + std::to_string(vertex_lines));
  if (edges.size() != m)
    throw ParseError(line_no, 1, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(edges.size()));

  doc.graph = build_graph(n, edges, weights);
  return doc;
}

DimacsDocument read_dimacs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str());
}

std::string serialize_dimacs(const DimacsDocument& doc) {
  std::string out;
  for (const auto& c : doc.comments) out += c.empty() ? "c\n" : "c " + c + "\n";
  const auto& g = doc.graph;
  out += "p wrd " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (Vertex v = 0; v < g.size(); ++v) out += "v " + std::to_string(v + 1) + " " + to_string(g.weight(v)) + "\n";
  for (const auto& [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string serialize_dimacs(const WeightedGraph& g) { return serialize_dimacs(DimacsDocument{{}, g}); }

void write_dimacs_file(const std::string& path, const DimacsDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_dimacs(doc);
}

}  // namespace wrd
