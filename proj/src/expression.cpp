#include <cctype>
#include <sstream>

#include "kpalg/algebra.hpp"

namespace kpalg {

namespace {

std::string factor_text(const KGraph& g, const PathPair& key) {
  if (key.alpha.is_vertex() && key.beta.is_vertex()) return "p(" + g.format_path(key.alpha) + ")";
  if (key.beta.is_vertex()) return "s(" + g.format_path(key.alpha) + ")";
  if (key.alpha.is_vertex()) return "st(" + g.format_path(key.beta) + ")";
  return "s(" + g.format_path(key.alpha) + ")*st(" + g.format_path(key.beta) + ")";
}

class ExpressionParser {
 public:
  ExpressionParser(const GraphPtr& g, const RingSpec& spec, std::string_view text)
      : graph_(g), spec_(spec), text_(text) {}

  AlgebraElement parse() {
    skip_space();
    AlgebraElement result = zero(graph_, spec_);
    if (rest_is("0")) return result;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      advance();
    }
    while (true) {
      AlgebraElement t = term();
      result = negate ? result - t : result + t;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+', '-' or end of expression");
      negate = peek() == '-';
      advance();
    }
    return result;
  }

 private:
  AlgebraElement term() {
    skip_space();
    RingValue coeff = RingValue::one(spec_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      skip_space();
      expect('*');
    }
    AlgebraElement product = factor();
    while (true) {
      skip_space();
      if (peek() != '*') break;
      advance();
      product = product * factor();
    }
    return coeff * product;
  }

  RingValue coefficient() {
    const std::size_t start = pos_;
    mpz_class num(digits());
    mpz_class den(1);
    skip_space();
    if (peek() == '/') {
      advance();
      skip_space();
      den = mpz_class(digits());
    }
    try {
      return RingValue::fraction(spec_, num, den);
    } catch (const RingError& e) {
      fail_at(start, e.what());
    }
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (pos_ == start) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  AlgebraElement factor() {
    skip_space();
    const std::size_t start = pos_;
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      name += peek();
      advance();
    }
    if (name != "p" && name != "s" && name != "st") fail_at(start, "expected p(...), s(...) or st(...)");
    skip_space();
    expect('(');
    skip_space();
    const std::size_t path_start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                         peek() == '.' || peek() == ' ' || peek() == '\t')) {
      advance();
    }
    std::string path_text;
    for (char c : text_.substr(path_start, pos_ - path_start)) {
      if (c != ' ' && c != '\t') path_text += c;
    }
    expect(')');
    if (path_text.empty()) fail_at(path_start, "empty path");
    try {
      if (name == "p") {
        return projection(graph_, spec_, graph_->vertex_named(path_text));
      }
      Path path = graph_->parse_path(path_text);
      return name == "s" ? path_element(graph_, spec_, path) : ghost_element(graph_, spec_, path);
    } catch (const GraphError& e) {
      fail_at(path_start, e.what());
    }
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void advance() { ++pos_; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool rest_is(std::string_view s) const {
    std::string_view rest = text_.substr(pos_);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
    return rest == s;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(1, pos + 1, msg);
  }

  GraphPtr graph_;
  RingSpec spec_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const AlgebraElement& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : a.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    os << c.abs().to_string() << '*' << factor_text(a.graph(), key);
    first = false;
  }
  return os.str();
}

AlgebraElement parse_element(const GraphPtr& g, const RingSpec& spec, std::string_view text) {
  return ExpressionParser(g, spec, text).parse();
}

}  // namespace kpalg
