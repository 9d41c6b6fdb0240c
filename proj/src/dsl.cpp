#include "gbsknot/dsl.hpp"

#include "gbsknot/error.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gbsknot {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Position {
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const char c = line[pos];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
    tokens.push_back({line.substr(start, pos - start), start + 1});
  }
  return tokens;
}

class Parser {
 public:
  LabeledGraph parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      parse_line(line_no, tokenize(line));
      if (end == text.size()) break;
      start = end + 1;
    }
    try {
      return LabeledGraph::validate(std::move(description_));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      const auto it = declared_.find(e.element());
      const Position at = it != declared_.end() ? it->second : Position{1, 1};
      throw ParseError(e.code(), at.line, at.column, e.what(), e.element());
    }
  }

 private:
  void parse_line(std::size_t line, const std::vector<Token>& tokens) {
    if (tokens.empty()) return;
    const Token& keyword = tokens[0];
    if (keyword.text == "vertex") {
      expect_arity(line, tokens, 2, "vertex <id>");
      const std::string id = checked_id(line, tokens[1]);
      if (explicit_vertices_.count(id)) {
        throw ParseError(ErrorCode::DuplicateId, line, tokens[1].column,
                         "vertex '" + id + "' declared twice", id);
      }
      explicit_vertices_.insert(id);
      declare(id, line, tokens[1].column);
      description_.vertices.push_back(id);
    } else if (keyword.text == "edge") {
      expect_arity(line, tokens, 6, "edge <id> <v0> <label0> <v1> <label1>");
      Edge e;
      e.id = checked_id(line, tokens[1]);
      if (edge_ids_.count(e.id)) {
        throw ParseError(ErrorCode::DuplicateId, line, tokens[1].column,
                         "edge '" + e.id + "' declared twice", e.id);
      }
      edge_ids_.insert(e.id);
      e.source = checked_id(line, tokens[2]);
      e.source_label = label(line, tokens[3], e.id);
      e.target = checked_id(line, tokens[4]);
      e.target_label = label(line, tokens[5], e.id);
      declare(e.id, line, tokens[1].column);
      declare(e.source, line, tokens[2].column);
      declare(e.target, line, tokens[4].column);
      description_.edges.push_back(std::move(e));
    } else {
      throw ParseError(ErrorCode::Parse, line, keyword.column,
                       "expected 'vertex' or 'edge', found '" + std::string(keyword.text) + "'");
    }
  }

  static void expect_arity(std::size_t line, const std::vector<Token>& tokens, std::size_t n,
                           const char* usage) {
    if (tokens.size() == n) return;
    const std::size_t column = tokens.size() > n ? tokens[n].column : tokens.back().column;
    throw ParseError(ErrorCode::Parse, line, column,
                     std::string("expected '") + usage + "' with " + std::to_string(n - 1) +
                         " arguments, found " + std::to_string(tokens.size() - 1));
  }

  static std::string checked_id(std::size_t line, const Token& token) {
    if (!is_valid_id(token.text)) {
      throw ParseError(ErrorCode::InvalidId, line, token.column,
                       "invalid identifier '" + std::string(token.text) + "'",
                       std::string(token.text));
    }
    return std::string(token.text);
  }

  static Integer label(std::size_t line, const Token& token, const std::string& edge) {
    auto value = parse_integer(token.text);
    if (!value) {
      throw ParseError(ErrorCode::Parse, line, token.column,
                       "expected an integer label, found '" + std::string(token.text) + "'");
    }
    if (*value == 0) {
      throw ParseError(ErrorCode::ZeroLabel, line, token.column,
                       "edge '" + edge + "' has a zero label", edge);
    }
    return *value;
  }

  void declare(const std::string& id, std::size_t line, std::size_t column) {
    declared_.emplace(id, Position{line, column});
  }

  GraphDescription description_;
  std::set<std::string> explicit_vertices_;
  std::set<std::string> edge_ids_;
  std::map<std::string, Position> declared_;
};

}  // namespace

LabeledGraph parse_graph(std::string_view text) { return Parser().parse(text); }

LabeledGraph parse_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ErrorCode::Parse, 0, 0, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const LabeledGraph& graph) {
  std::ostringstream out;
  for (const auto& v : graph.vertices()) out << "vertex " << v << '\n';
  for (const auto& e : graph.edges()) {
    out << "edge " << e.id << ' ' << e.source << ' ' << e.source_label << ' ' << e.target << ' '
        << e.target_label << '\n';
  }
  return out.str();
}

}  // namespace gbsknot
