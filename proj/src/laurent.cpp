#include <sstream>

#include "kpalg/analysis.hpp"

namespace kpalg {

void LaurentPolynomial::add(const GradeDegree& exponent, const RingValue& c) {
  if (exponent.arity() != k_) throw AlgebraError("exponent has wrong arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out(spec_, k_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.add(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add(e, c);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < k_; ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += k_ == 1 ? "x" : "x" + std::to_string(i + 1);
      if (e[i] != 1) monomial += "^" + std::to_string(e[i]);
    }
    const RingValue magnitude = c.abs();
    if (monomial.empty()) {
      os << magnitude.to_string();
    } else if (magnitude.is_one()) {
      os << monomial;
    } else {
      os << magnitude.to_string() << '*' << monomial;
    }
  }
  return os.str();
}

LaurentIsomorphism::LaurentIsomorphism(const GraphPtr& g) : graph_(g) {
  if (!is_commutative_graph(*g)) {
    throw GraphError("not a commutative graph: every edge must be a loop, one per color per vertex");
  }
  loops_.resize(g->vertex_count());
  for (VertexId v = 0; v < g->vertex_count(); ++v) {
    for (std::uint32_t c = 0; c < g->rank(); ++c) loops_[v].push_back(g->incoming(v, c).front());
  }
}

std::vector<LaurentPolynomial> LaurentIsomorphism::apply(const AlgebraElement& a) const {
  if (&a.graph() != graph_.get()) throw AlgebraError("element belongs to a different graph");
  std::vector<LaurentPolynomial> out(graph_->vertex_count(),
                                     LaurentPolynomial(a.spec(), graph_->rank()));
  for (const auto& [key, c] : a.terms()) {
    out[key.alpha.range()].add(GradeDegree::difference(key.alpha.degree(), key.beta.degree()), c);
  }
  return out;
}

}  // namespace kpalg
