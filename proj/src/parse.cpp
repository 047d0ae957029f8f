#include <qnormal/errors.hpp>
#include <qnormal/triangulation.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace qnormal {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_index(const Token& tok, std::size_t line) {
  std::size_t value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, tok.column, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
  std::optional<std::size_t> count;
  std::vector<GluingSpec> gluings;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!count) {
      if (tokens[0].text != "tets") {
        throw ParseError(line_no, tokens[0].column, "expected 'tets N' before any other statement");
      }
      if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "'tets' takes exactly one argument");
      count = parse_index(tokens[1], line_no);
      if (*count == 0) throw ParseError(line_no, tokens[1].column, "tetrahedron count must be positive");
    } else if (tokens[0].text == "glue") {
      if (tokens.size() != 6) {
        throw ParseError(line_no, tokens[0].column, "'glue' takes five arguments: A f B g p0p1p2p3");
      }
      GluingSpec g;
      g.tet_a = parse_index(tokens[1], line_no);
      const std::size_t fa = parse_index(tokens[2], line_no);
      g.tet_b = parse_index(tokens[3], line_no);
      const std::size_t fb = parse_index(tokens[4], line_no);
      const std::string where = "line " + std::to_string(line_no) + ": ";
      if (g.tet_a >= *count || g.tet_b >= *count) {
        throw IndexOutOfRangeError(where + "tetrahedron index out of range (have " + std::to_string(*count) + ")");
      }
      if (fa > 3 || fb > 3) throw IndexOutOfRangeError(where + "face index out of range (expected 0..3)");
      g.face_a = static_cast<int>(fa);
      g.face_b = static_cast<int>(fb);
      const auto& ptok = tokens[5];
      if (ptok.text.size() != 4 || ptok.text.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError(line_no, ptok.column, "expected a permutation of four digits, got '" +
                                                   std::string(ptok.text) + "'");
      }
      const auto perm = Permutation4::parse(ptok.text);
      if (!perm) throw InvalidGluingError(where + "'" + std::string(ptok.text) + "' is not a permutation of 0123");
      g.perm = *perm;
      gluings.push_back(g);
    } else if (tokens[0].text == "tets") {
      throw ParseError(line_no, tokens[0].column, "duplicate 'tets' statement");
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown statement '" + std::string(tokens[0].text) + "'");
    }
    if (end == text.size()) break;
  }
  if (!count) throw ParseError(line_no, 1, "missing 'tets N' statement");
  return Triangulation::from_gluings(*count, gluings);
}

Triangulation load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open triangulation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triangulation(buf.str());
}

}  // namespace qnormal
