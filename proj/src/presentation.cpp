#include "kpalg/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace kpalg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                         message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_id_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_id_char);
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string expect_id(const Token& t, std::size_t line) {
  if (!is_identifier(t.text)) {
    throw ParseError(line, t.column, "invalid identifier '" + std::string(t.text) + "'");
  }
  return std::string(t.text);
}

int expect_int(const Token& t, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

void expect_arity(const std::vector<Token>& toks, std::size_t want, std::size_t line,
                  std::string_view usage) {
  if (toks.size() == want) return;
  std::size_t col = toks.size() > want ? toks[want].column : 0;
  throw ParseError(line, col, "expected '" + std::string(usage) + "'");
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_k = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    for (std::size_t i = 0; i < line.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(line[i]);
      if (c != '\t' && (c < 0x20 || c > 0x7e)) {
        throw ParseError(line_no, i + 1, "non-printable or non-ASCII character");
      }
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::string_view directive = toks[0].text;
    if (directive == "k") {
      expect_arity(toks, 2, line_no, "k <int>");
      if (have_k) throw ParseError(line_no, 1, "duplicate 'k' declaration");
      p.k = expect_int(toks[1], line_no);
      have_k = true;
    } else if (directive == "vertex") {
      expect_arity(toks, 2, line_no, "vertex <id>");
      p.vertices.push_back({expect_id(toks[1], line_no), line_no});
    } else if (directive == "edge") {
      expect_arity(toks, 5, line_no, "edge <id> <color> <range-id> <source-id>");
      EdgeDecl e;
      e.id = expect_id(toks[1], line_no);
      e.color = expect_int(toks[2], line_no);
      e.range = expect_id(toks[3], line_no);
      e.source = expect_id(toks[4], line_no);
      e.line = line_no;
      p.edges.push_back(std::move(e));
    } else if (directive == "square") {
      expect_arity(toks, 6, line_no, "square <g> <h> = <h'> <g'>");
      if (toks[3].text != "=") throw ParseError(line_no, toks[3].column, "expected '='");
      SquareDecl s;
      s.g = expect_id(toks[1], line_no);
      s.h = expect_id(toks[2], line_no);
      s.h2 = expect_id(toks[4], line_no);
      s.g2 = expect_id(toks[5], line_no);
      s.line = line_no;
      p.squares.push_back(std::move(s));
    } else {
      throw ParseError(line_no, toks[0].column, "unknown directive '" + std::string(directive) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_k) throw ParseError(line_no, 0, "missing 'k' declaration");
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "k " << p.k << '\n';
  for (const auto& v : p.vertices) os << "vertex " << v.id << '\n';
  for (const auto& e : p.edges) {
    os << "edge " << e.id << ' ' << e.color << ' ' << e.range << ' ' << e.source << '\n';
  }
  for (const auto& s : p.squares) {
    os << "square " << s.g << ' ' << s.h << " = " << s.h2 << ' ' << s.g2 << '\n';
  }
  return os.str();
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::BadArity: return "bad-arity";
    case ViolationKind::DuplicateId: return "duplicate-id";
    case ViolationKind::DanglingEndpoint: return "dangling-endpoint";
    case ViolationKind::BadColor: return "bad-color";
    case ViolationKind::BadSquare: return "bad-square";
    case ViolationKind::MissingFactorization: return "missing-factorization";
    case ViolationKind::DuplicateFactorization: return "duplicate-factorization";
    case ViolationKind::HexagonFailure: return "hexagon-failure";
    case ViolationKind::Source: return "source";
  }
  return "unknown";
}

bool ValidationReport::only_sources() const {
  return std::all_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.kind == ViolationKind::Source; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << kpalg::to_string(v.kind) << ": " << v.message << '\n';
  return os.str();
}

namespace {

struct EdgeInfo {
  int color;
  std::string range;
  std::string source;
};

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

ValidationReport validate(const Presentation& p) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string msg) {
    report.violations.push_back({kind, std::move(msg)});
  };

  if (p.k < 1) add(ViolationKind::BadArity, "k must be at least 1, got " + std::to_string(p.k));

  std::set<std::string> vertex_ids;
  for (const auto& v : p.vertices) {
    if (!vertex_ids.insert(v.id).second) {
      add(ViolationKind::DuplicateId, "duplicate vertex id '" + v.id + "' (line " +
                                          std::to_string(v.line) + ")");
    }
  }

  // Edges that survive the id, color and endpoint checks.
  std::map<std::string, EdgeInfo> edges;
  std::set<std::string> seen_edges;
  for (const auto& e : p.edges) {
    const std::string where = " (line " + std::to_string(e.line) + ")";
    if (!seen_edges.insert(e.id).second) {
      add(ViolationKind::DuplicateId, "duplicate edge id '" + e.id + "'" + where);
      continue;
    }
    bool ok = true;
    if (vertex_ids.count(e.id)) {
      add(ViolationKind::DuplicateId, "id '" + e.id + "' names both a vertex and an edge" + where);
      ok = false;
    }
    if (e.color < 1 || e.color > p.k) {
      add(ViolationKind::BadColor, "edge '" + e.id + "' has color " + std::to_string(e.color) +
                                       " outside 1.." + std::to_string(p.k) + where);
      ok = false;
    }
    for (const auto* end : {&e.range, &e.source}) {
      if (!vertex_ids.count(*end)) {
        add(ViolationKind::DanglingEndpoint,
            "edge '" + e.id + "' refers to unknown vertex '" + *end + "'" + where);
        ok = false;
      }
    }
    if (ok) edges.emplace(e.id, EdgeInfo{e.color, e.range, e.source});
  }

  // incoming[(v, color)] = edges with range v, sorted by id
  std::map<std::pair<std::string, int>, std::vector<std::string>> incoming;
  for (const auto& [id, info] : edges) incoming[{info.range, info.color}].push_back(id);
  auto into = [&](const std::string& v, int color) -> const std::vector<std::string>& {
    static const std::vector<std::string> none;
    auto it = incoming.find({v, color});
    return it == incoming.end() ? none : it->second;
  };

  std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, std::string>>>
      first_side;
  std::map<std::pair<std::string, std::string>, int> second_side;
  for (const auto& s : p.squares) {
    const std::string where = " (line " + std::to_string(s.line) + ")";
    bool known = true;
    for (const auto* id : {&s.g, &s.h, &s.h2, &s.g2}) {
      if (!edges.count(*id)) {
        add(ViolationKind::DanglingEndpoint, "square refers to unknown edge '" + *id + "'" + where);
        known = false;
      }
    }
    if (!known) continue;
    const auto& g = edges.at(s.g);
    const auto& h = edges.at(s.h);
    const auto& h2 = edges.at(s.h2);
    const auto& g2 = edges.at(s.g2);
    std::string problem;
    if (!(g.color == g2.color && h.color == h2.color && g.color < h.color)) {
      problem = "colors must satisfy color(g) = color(g') < color(h) = color(h')";
    } else if (h.range != g.source) {
      problem = "g and h are not composable";
    } else if (g2.range != h2.source) {
      problem = "h' and g' are not composable";
    } else if (g.range != h2.range || h.source != g2.source) {
      problem = "the two factorizations have different range or source";
    }
    if (!problem.empty()) {
      add(ViolationKind::BadSquare, "square " + s.g + " " + s.h + " = " + s.h2 + " " + s.g2 +
                                        ": " + problem + where);
      continue;
    }
    first_side[{s.g, s.h}].push_back({s.h2, s.g2});
    ++second_side[{s.h2, s.g2}];
  }

  // The squares must biject color-i-then-j composable pairs with color-j-then-i
  // composable pairs for every i < j.
  for (const auto& [gid, g] : edges) {
    for (int j = 1; j <= p.k; ++j) {
      if (j == g.color) continue;
      for (const auto& hid : into(g.source, j)) {
        if (g.color < j) {
          auto it = first_side.find({gid, hid});
          std::size_t n = it == first_side.end() ? 0 : it->second.size();
          if (n == 0) {
            add(ViolationKind::MissingFactorization, "no factorization for pair " + pair_name(gid, hid));
          } else if (n > 1) {
            add(ViolationKind::DuplicateFactorization,
                "duplicate factorization for pair " + pair_name(gid, hid));
          }
        } else {
          auto it = second_side.find({gid, hid});
          int n = it == second_side.end() ? 0 : it->second;
          if (n == 0) {
            add(ViolationKind::MissingFactorization, "no factorization for pair " + pair_name(gid, hid));
          } else if (n > 1) {
            add(ViolationKind::DuplicateFactorization,
                "duplicate factorization for pair " + pair_name(gid, hid));
          }
        }
      }
    }
  }

  // Hexagon: for x y z with strictly increasing colors, the two ways of
  // reversing the color order must agree.
  if (p.k >= 3) {
    auto swap = [&](const std::string& a, const std::string& b)
        -> std::optional<std::pair<std::string, std::string>> {
      auto it = first_side.find({a, b});
      if (it == first_side.end() || it->second.size() != 1) return std::nullopt;
      return it->second.front();
    };
    for (const auto& [xid, x] : edges) {
      for (int cy = x.color + 1; cy <= p.k; ++cy) {
        for (const auto& yid : into(x.source, cy)) {
          const auto& y = edges.at(yid);
          for (int cz = cy + 1; cz <= p.k; ++cz) {
            for (const auto& zid : into(y.source, cz)) {
              std::vector<std::string> a{xid, yid, zid};
              std::vector<std::string> b = a;
              bool complete = true;
              auto step = [&](std::vector<std::string>& w, int at) {
                auto r = swap(w[at], w[at + 1]);
                if (!r) {
                  complete = false;
                  return;
                }
                w[at] = r->first;
                w[at + 1] = r->second;
              };
              for (int at : {0, 1, 0}) {
                if (complete) step(a, at);
              }
              for (int at : {1, 0, 1}) {
                if (complete) step(b, at);
              }
              if (complete && a != b) {
                add(ViolationKind::HexagonFailure,
                    "hexagon failure for path " + xid + "." + yid + "." + zid + ": " + a[0] + "." +
                        a[1] + "." + a[2] + " vs " + b[0] + "." + b[1] + "." + b[2]);
              }
            }
          }
        }
      }
    }
  }

  std::set<std::string> sorted_vertices(vertex_ids);
  for (const auto& v : sorted_vertices) {
    for (int c = 1; c <= p.k; ++c) {
      if (into(v, c).empty()) {
        add(ViolationKind::Source,
            "source vertex '" + v + "': no edges of color " + std::to_string(c));
      }
    }
  }
  return report;
}

}  // namespace kpalg
