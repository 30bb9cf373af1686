#include "qq/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "checked.hpp"
#include "qq/error.hpp"

namespace qq {
namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

struct Section {
  std::size_t line = 0;
  std::vector<Line> lines;
};

bool is_id(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

// Splits into sections; data lines keep their whitespace-separated tokens.
std::map<std::string, Section> split_sections(std::string_view text,
                                              const std::set<std::string>& allowed) {
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < raw.size()) {
      const auto c = static_cast<unsigned char>(raw[i]);
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c < 0x20 || c == 0x7f) throw ParseError(number, i + 1, "control character");
      const auto begin = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      tokens.push_back({std::string(raw.substr(begin, i - begin)), begin + 1});
    }
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const auto& first = tokens.front().text;
    if (first.front() == '[') {
      if (tokens.size() != 1 || first.back() != ']' || first.size() < 3) {
        throw ParseError(number, tokens.front().column, "malformed section header");
      }
      const auto name = first.substr(1, first.size() - 2);
      if (!allowed.contains(name)) {
        throw ParseError(number, tokens.front().column, "unknown section [" + name + "]");
      }
      auto [it, fresh] = sections.try_emplace(name);
      if (!fresh) {
        throw ParseError(number, tokens.front().column,
                         "duplicate section [" + name + "] (first at line " +
                             std::to_string(it->second.line) + ")");
      }
      it->second.line = number;
      current = &it->second;
    } else {
      if (!current) {
        throw ParseError(number, tokens.front().column, "data line outside of any section");
      }
      current->lines.push_back({number, std::move(tokens)});
    }
    if (end == text.size()) break;
  }
  return sections;
}

const Section* find_section(const std::map<std::string, Section>& s, const std::string& n) {
  auto it = s.find(n);
  return it == s.end() ? nullptr : &it->second;
}

long parse_int(const Line& line, const Token& tok, long min) {
  const auto& s = tok.text;
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(line.number, tok.column, "expected an integer, got '" + s + "'");
  }
  if (s.size() > 6 || std::stol(s) > kMaxFileInteger) {
    throw ParseError(line.number, tok.column,
                     "integer " + s + " exceeds " + std::to_string(kMaxFileInteger));
  }
  const auto v = std::stol(s);
  if (v < min) {
    throw ParseError(line.number, tok.column,
                     "expected an integer >= " + std::to_string(min) + ", got " + s);
  }
  return v;
}

const std::string& parse_id(const Line& line, const Token& tok) {
  if (!is_id(tok.text)) {
    throw ParseError(line.number, tok.column,
                     "invalid id '" + tok.text + "' (expected [A-Za-z0-9_]+)");
  }
  return tok.text;
}

void expect_arity(const Line& line, std::size_t n, const char* shape) {
  if (line.tokens.size() == n) return;
  const auto col = line.tokens.size() > n ? line.tokens[n].column : line.tokens.back().column;
  throw ParseError(line.number, col, std::string("expected '") + shape + "'");
}

std::vector<Block> parse_blocks(const Section* section) {
  std::vector<Block> blocks;
  if (!section) return blocks;
  std::map<std::string, std::size_t> seen;
  for (const auto& line : section->lines) {
    expect_arity(line, 2, "ID SIZE");
    const auto& id = parse_id(line, line.tokens[0]);
    const auto size = parse_int(line, line.tokens[1], 1);
    if (auto [it, fresh] = seen.emplace(id, line.number); !fresh) {
      throw ParseError(line.number, line.tokens[0].column,
                       "duplicate id '" + id + "' (first at line " +
                           std::to_string(it->second) + ")");
    }
    blocks.push_back({id, static_cast<int>(size)});
  }
  return blocks;
}

std::size_t resolve(const AlgebraShape& shape, const Line& line, const Token& tok,
                    const char* what) {
  if (auto i = shape.find(tok.text)) return *i;
  throw ParseError(line.number, tok.column,
                   std::string("unknown ") + what + " id '" + tok.text + "'");
}

OrderTable parse_orders(const Section* section, const AlgebraShape& vs,
                        const AlgebraShape& es) {
  OrderTable table(vs, es);
  if (!section) return table;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (const auto& line : section->lines) {
    expect_arity(line, 3, "VERTEX EDGE ORDER");
    parse_id(line, line.tokens[0]);
    parse_id(line, line.tokens[1]);
    const auto order = parse_int(line, line.tokens[2], 1);
    const auto v = resolve(vs, line, line.tokens[0], "vertex");
    const auto a = resolve(es, line, line.tokens[1], "edge");
    if (auto [it, fresh] = seen.emplace(std::pair{v, a}, line.number); !fresh) {
      throw ParseError(line.number, line.tokens[0].column,
                       "duplicate entry for " + vs.id(v) + " " + es.id(a) +
                           " (first at line " + std::to_string(it->second) + ")");
    }
    table.set(v, a, static_cast<int>(order));
  }
  return table;
}

void check_unitality(const OrderTable& table,
                     const std::map<std::string, std::size_t>& edge_lines, const char* name) {
  auto check = validate(table);
  if (check.ok()) return;
  const auto& first = check.violations.front();
  const auto line = edge_lines.at(table.codomain().id(first.edge));
  throw ParseError(line, 1, std::string(name) + " is not unital: " + check.describe(table));
}

RegularEmbedding parse_embedding(const Section* section, const OrderTable& table,
                                 const char* name) {
  if (!section) return canonical_embedding(table);
  const auto& vs = table.domain();
  const auto& es = table.codomain();
  std::vector<std::vector<int>> offsets(vs.block_count() * es.block_count());
  std::set<std::pair<std::size_t, std::size_t>> given;
  for (const auto& line : section->lines) {
    if (line.tokens.size() < 3) {
      throw ParseError(line.number, line.tokens.back().column,
                       "expected 'VERTEX EDGE OFFSET...'");
    }
    parse_id(line, line.tokens[0]);
    parse_id(line, line.tokens[1]);
    const auto v = resolve(vs, line, line.tokens[0], "vertex");
    const auto a = resolve(es, line, line.tokens[1], "edge");
    if (!given.emplace(v, a).second) {
      throw ParseError(line.number, line.tokens[0].column,
                       "duplicate entry for " + vs.id(v) + " " + es.id(a));
    }
    auto& list = offsets[v * es.block_count() + a];
    for (std::size_t k = 2; k < line.tokens.size(); ++k) {
      list.push_back(static_cast<int>(parse_int(line, line.tokens[k], 0)));
    }
    if (static_cast<int>(list.size()) != table.at(v, a)) {
      throw ParseError(line.number, line.tokens[0].column,
                       std::to_string(list.size()) + " offsets given for " + vs.id(v) + " " +
                           es.id(a) + " but the " + name + " order is " +
                           std::to_string(table.at(v, a)));
    }
  }
  for (std::size_t v = 0; v < vs.block_count(); ++v) {
    for (std::size_t a = 0; a < es.block_count(); ++a) {
      if (table.at(v, a) > 0 && !given.contains({v, a})) {
        throw ParseError(section->line, 1,
                         "[embedding." + std::string(name) + "] has no offsets for " +
                             vs.id(v) + " " + es.id(a) + " (order " +
                             std::to_string(table.at(v, a)) + ")");
      }
    }
  }
  try {
    return RegularEmbedding(table, std::move(offsets));
  } catch (const ValidationError& e) {
    throw ParseError(section->line, 1, e.what());
  }
}

}  // namespace

QuantumQuiver parse_qq(std::string_view text) {
  const auto sections = split_sections(
      text, {"vertices", "edges", "source", "range", "embedding.source", "embedding.range"});
  const auto* vsec = find_section(sections, "vertices");
  if (!vsec) throw ParseError(1, 1, "missing [vertices] section");
  const auto* esec = find_section(sections, "edges");
  AlgebraShape vs(parse_blocks(vsec));
  AlgebraShape es(parse_blocks(esec));
  std::map<std::string, std::size_t> edge_lines;
  if (esec) {
    for (const auto& line : esec->lines) edge_lines[line.tokens[0].text] = line.number;
  }

  const auto* ssec = find_section(sections, "source");
  const auto* rsec = find_section(sections, "range");
  const auto s = parse_orders(ssec, vs, es);
  const auto r = parse_orders(rsec, vs, es);
  check_unitality(s, edge_lines, "source");
  check_unitality(r, edge_lines, "range");
  auto se = parse_embedding(find_section(sections, "embedding.source"), s, "source");
  auto re = parse_embedding(find_section(sections, "embedding.range"), r, "range");
  return QuantumQuiver(std::move(se), std::move(re));
}

std::string emit_qq(const QuantumQuiver& quiver) {
  const auto& vs = quiver.vertex_shape();
  const auto& es = quiver.edge_shape();
  std::ostringstream out;
  out << "[vertices]\n";
  for (const auto& b : vs.blocks()) out << b.id << " " << b.size << "\n";
  out << "\n[edges]\n";
  for (const auto& b : es.blocks()) out << b.id << " " << b.size << "\n";
  auto orders = [&](const char* name, const RegularEmbedding& emb) {
    out << "\n[" << name << "]\n";
    for (std::size_t v = 0; v < vs.block_count(); ++v) {
      for (std::size_t a = 0; a < es.block_count(); ++a) {
        if (const int o = emb.table().at(v, a); o > 0) {
          out << vs.id(v) << " " << es.id(a) << " " << o << "\n";
        }
      }
    }
  };
  auto embedding = [&](const char* name, const RegularEmbedding& emb) {
    if (emb == canonical_embedding(emb.table())) return;
    out << "\n[embedding." << name << "]\n";
    for (std::size_t v = 0; v < vs.block_count(); ++v) {
      for (std::size_t a = 0; a < es.block_count(); ++a) {
        const auto offs = emb.offsets(v, a);
        if (offs.empty()) continue;
        out << vs.id(v) << " " << es.id(a);
        for (int o : offs) out << " " << o;
        out << "\n";
      }
    }
  };
  orders("source", quiver.source());
  orders("range", quiver.range());
  embedding("source", quiver.source());
  embedding("range", quiver.range());
  return out.str();
}

DirectedGraph parse_graph(std::string_view text) {
  const auto sections = split_sections(text, {"vertices", "edges"});
  const auto* vsec = find_section(sections, "vertices");
  if (!vsec) throw ParseError(1, 1, "missing [vertices] section");
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t> seen;
  for (const auto& line : vsec->lines) {
    expect_arity(line, 1, "ID");
    const auto& id = parse_id(line, line.tokens[0]);
    if (!seen.emplace(id, line.number).second) {
      throw ParseError(line.number, line.tokens[0].column, "duplicate vertex id '" + id + "'");
    }
    vertices.push_back(id);
  }
  std::vector<GraphEdge> edges;
  std::set<std::string> edge_ids;
  if (const auto* esec = find_section(sections, "edges")) {
    for (const auto& line : esec->lines) {
      expect_arity(line, 3, "ID SOURCE RANGE");
      const auto& id = parse_id(line, line.tokens[0]);
      for (std::size_t k = 1; k < 3; ++k) {
        parse_id(line, line.tokens[k]);
        if (!seen.contains(line.tokens[k].text)) {
          throw ParseError(line.number, line.tokens[k].column,
                           "unknown vertex id '" + line.tokens[k].text + "'");
        }
      }
      if (!edge_ids.insert(id).second) {
        throw ParseError(line.number, line.tokens[0].column, "duplicate edge id '" + id + "'");
      }
      edges.push_back({id, line.tokens[1].text, line.tokens[2].text});
    }
  }
  return DirectedGraph(std::move(vertices), std::move(edges));
}

std::string emit_graph(const DirectedGraph& graph) {
  std::ostringstream out;
  out << "[vertices]\n";
  for (const auto& v : graph.vertices()) out << v << "\n";
  out << "\n[edges]\n";
  for (const auto& e : graph.edges()) out << e.id << " " << e.source << " " << e.range << "\n";
  return out.str();
}

namespace {

class ExprParser {
 public:
  ExprParser(const MonoidPresentation& p, std::string_view text) : p_(p), text_(text) {}

  MonoidElement run() {
    MonoidElement x(p_.generators.size(), 0);
    skip();
    if (at_end()) fail("empty expression");
    if (peek() == '0') {
      const auto save = pos_;
      ++pos_;
      skip();
      if (at_end()) return x;
      pos_ = save;
    }
    term(x);
    while (true) {
      skip();
      if (at_end()) break;
      if (peek() != '+') fail("expected '+'");
      ++pos_;
      term(x);
    }
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(1, pos_ + 1, msg); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void term(MonoidElement& x) {
    skip();
    if (at_end()) fail("expected a term");
    std::int64_t coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto start = pos_;
      std::int64_t value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + (peek() - '0');
        if (value > 1000000000) {
          pos_ = start;
          fail("coefficient too large");
        }
        ++pos_;
      }
      coeff = value;
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip();
      }
    }
    const auto g = atom();
    x[g] = detail::checked_add(x[g], coeff);
  }

  std::size_t atom() {
    if (at_end()) fail("expected 'I' or 'P(id)'");
    if (peek() == 'I') {
      if (!p_.has_free) fail("this presentation has no free generator I");
      ++pos_;
      return p_.free_index();
    }
    if (peek() != 'P') fail("expected 'I' or 'P(id)'");
    ++pos_;
    skip();
    if (at_end() || peek() != '(') fail("expected '('");
    ++pos_;
    skip();
    const auto start = pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    const std::string id(text_.substr(start, pos_ - start));
    if (id.empty()) fail("expected a vertex id");
    skip();
    if (at_end() || peek() != ')') fail("expected ')'");
    ++pos_;
    for (std::size_t v = 0; v < p_.vertex_ids.size(); ++v) {
      if (p_.vertex_ids[v] == id) return p_.vertex_index(v);
    }
    throw ParseError(1, start + 1, "unknown vertex id '" + id + "'");
  }

  const MonoidPresentation& p_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonoidElement parse_element(const MonoidPresentation& p, std::string_view text) {
  return ExprParser(p, text).run();
}

}  // namespace qq
