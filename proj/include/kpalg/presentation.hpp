#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kpalg {

/// Raised for malformed text input. Line and column are 1-based; column 0
/// means the whole line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

struct VertexDecl {
  std::string id;
  std::size_t line = 0;
};

struct EdgeDecl {
  std::string id;
  int color = 0;  // 1-based, as written
  std::string range;
  std::string source;
  std::size_t line = 0;
};

/// `square g h = h2 g2`: g∘h = h2∘g2 with color(g) = color(g2) < color(h) = color(h2).
struct SquareDecl {
  std::string g;
  std::string h;
  std::string h2;
  std::string g2;
  std::size_t line = 0;
};

/// A k-graph as written in a `.kg` file, before any checking beyond syntax.
struct Presentation {
  int k = 0;
  std::vector<VertexDecl> vertices;
  std::vector<EdgeDecl> edges;
  std::vector<SquareDecl> squares;
};

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);

enum class ViolationKind {
  BadArity,
  DuplicateId,
  DanglingEndpoint,
  BadColor,
  BadSquare,
  MissingFactorization,
  DuplicateFactorization,
  HexagonFailure,
  Source,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  /// True when every violation is a source vertex; such presentations are
  /// still k-graphs and load under SourcePolicy::Allow.
  bool only_sources() const;
  std::string to_string() const;
};

/// Checks ids, endpoints, colors, the square bijection for every color pair,
/// the hexagon condition (k >= 3) and the no-sources condition. Never throws.
ValidationReport validate(const Presentation& p);

}  // namespace kpalg
