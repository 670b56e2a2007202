#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "kpalg/kgraph.hpp"
#include "kpalg/ring.hpp"

namespace kpalg {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The index (α, β) of a spanning element s_α s_{β*}, with s(α) = s(β).
struct PathPair {
  Path alpha;
  Path beta;

  friend bool operator==(const PathPair&, const PathPair&) = default;
  friend std::strong_ordering operator<=>(const PathPair& a, const PathPair& b) {
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.beta <=> b.beta;
  }
};

/// A finite R-linear combination Σ r s_α s_{β*} in KP_R(Λ). Zero coefficients
/// are never stored. Terms may have different ghost degrees d(β) until
/// `normalize` is applied, so two unequal term maps can denote the same
/// element; compare with `equal`.
class AlgebraElement {
 public:
  using TermMap = std::map<PathPair, RingValue>;

  AlgebraElement(GraphPtr graph, RingSpec spec);

  const KGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const RingSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds c · s_α s_{β*}; requires s(α) = s(β).
  void add_term(const Path& alpha, const Path& beta, const RingValue& c);

  /// Throws AlgebraError unless both operands share graph and ring.
  void require_compatible(const AlgebraElement& other) const;

 private:
  GraphPtr graph_;
  RingSpec spec_;
  TermMap terms_;
};

// ---- generators ------------------------------------------------------

AlgebraElement projection(const GraphPtr& g, const RingSpec& spec, VertexId v);  // p(v)
AlgebraElement path_element(const GraphPtr& g, const RingSpec& spec, const Path& lambda);   // s(λ)
AlgebraElement ghost_element(const GraphPtr& g, const RingSpec& spec, const Path& lambda);  // s(λ*)
/// Σ_v p(v), the identity of KP_R(Λ) for finite Λ⁰.
AlgebraElement identity(const GraphPtr& g, const RingSpec& spec);
AlgebraElement zero(const GraphPtr& g, const RingSpec& spec);

// ---- arithmetic ------------------------------------------------------

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a);
AlgebraElement operator*(const RingValue& r, const AlgebraElement& a);
/// Product, expanding s_{β*} s_γ over the minimal common extensions of β, γ.
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// The anti-involution s_α s_{β*} ↦ s_β s_{α*}, coefficients fixed.
AlgebraElement star(const AlgebraElement& a);

// ---- normal form -----------------------------------------------------

/// Largest ghost degree present (componentwise join); zero for the empty map.
MultiDegree ghost_degree(const AlgebraElement& a);

/// Rewrites every term at ghost degree m using (KP4):
/// s_α s_{β*} = Σ_{μ ∈ s(α)Λ^{m-d(β)}} s_{αμ} s_{(βμ)*}. Requires d(β) <= m
/// for every term.
AlgebraElement reshape(const AlgebraElement& a, const MultiDegree& m);

/// The normal form: reshaped to `ghost_degree(a)`, with terms whose common
/// source is a degenerate vertex (only possible in graphs with sources)
/// removed. All remaining spanning elements are linearly independent.
AlgebraElement normalize(const AlgebraElement& a);

bool is_zero(const AlgebraElement& a);
/// Equality in KP_R(Λ), i.e. normalize(a - b) has no terms.
bool equal(const AlgebraElement& a, const AlgebraElement& b);

// ---- grading ---------------------------------------------------------

AlgebraElement graded_component(const AlgebraElement& a, const GradeDegree& g);
/// The common grade d(α) - d(β) of all terms, nullopt if the terms disagree.
/// The zero element reports the zero grade.
std::optional<GradeDegree> homogeneous_degree(const AlgebraElement& a);
/// Every nonzero graded component, keyed by grade.
std::map<GradeDegree, AlgebraElement> graded_components(const AlgebraElement& a);

// ---- text form -------------------------------------------------------

/// Terms in stored order, e.g. "1*s(a)*st(b) - 1/2*p(v)"; "0" when empty.
std::string format(const AlgebraElement& a);

/// Parses the element grammar:
///   element := ['+'|'-'] term (('+'|'-') term)* | '0'
///   term    := [coeff '*'] factor ('*' factor)*
///   factor  := 'p(' vertex ')' | 's(' path ')' | 'st(' path ')'
///   path    := id ('.' id)*
///   coeff   := integer | integer '/' integer
/// Whitespace is ignored. Throws ParseError (line 1, column of the problem).
AlgebraElement parse_element(const GraphPtr& g, const RingSpec& spec, std::string_view text);

}  // namespace kpalg
