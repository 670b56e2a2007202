#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kpalg/algebra.hpp"
#include "kpalg/kgraph.hpp"

namespace kpalg {

/// A vertex v and degrees m != n for which no path in vΛ separates the
/// shifted segments (within the search bound, for bounded probes).
struct PeriodicWitness {
  VertexId vertex = 0;
  MultiDegree m;
  MultiDegree n;
};

struct Aperiodicity {
  enum class Verdict { Aperiodic, NoPeriodicityUpToBound, Periodic };
  enum class Mode { Exact, Bounded };

  Verdict verdict = Verdict::Aperiodic;
  Mode mode = Mode::Exact;
  unsigned bound = 0;
  std::optional<PeriodicWitness> witness;

  /// Aperiodic, or no periodicity found up to the bound.
  bool presumed_aperiodic() const { return verdict != Verdict::Periodic; }
};

std::string to_string(Aperiodicity::Verdict v);
std::string to_string(Aperiodicity::Mode m);

struct PropertyReport {
  bool has_closed_path = false;
  bool cofinal = false;
  Aperiodicity aperiodicity;
  bool commutative_graph = false;
  std::vector<std::vector<VertexId>> components;
};

/// True iff the skeleton has a directed cycle.
bool has_closed_path(const KGraph& g);

/// Strongly connected components of the digraph v -> s(e) for e ∈ vΛ^{e_i},
/// each sorted, listed by smallest vertex.
std::vector<std::vector<VertexId>> strong_components(const KGraph& g);

/// Components containing, for every color, an edge with both ends inside;
/// these are exactly the possible tails of infinite paths.
std::vector<std::vector<VertexId>> tail_components(const KGraph& g);

/// Cofinality for finite Λ⁰: every vertex reaches every tail-capable SCC.
/// Throws GraphError when the graph has sources.
bool is_cofinal(const KGraph& g);

/// Independent check of cofinality by enumeration: for every closed edge walk
/// of length <= max_cycle_len covering all colors (the periodic part of an
/// infinite path ρ·γ^∞), every vertex must reach a vertex of the walk.
bool eventually_periodic_cofinality_oracle(const KGraph& g, unsigned max_cycle_len);

/// k = 1: exact entrance criterion. k >= 2: witness search with m, n <=
/// (B,...,B) and d(λ) <= m∨n + (B,...,B).
Aperiodicity aperiodicity(const KGraph& g, unsigned bound, unsigned threads = 1);

/// The bounded witness search on its own, for any k.
Aperiodicity aperiodicity_search(const KGraph& g, unsigned bound, unsigned threads = 1);

/// Whether some λ ∈ vΛ with m∨n <= d(λ) <= m∨n + (extra,...,extra) has
/// λ(m, m+d(λ)-(m∨n)) != λ(n, n+d(λ)-(m∨n)).
bool has_aperiodicity_witness(const KGraph& g, VertexId v, const MultiDegree& m,
                              const MultiDegree& n, unsigned extra);

/// Every edge is a loop and every vertex receives exactly one edge per color.
bool is_commutative_graph(const KGraph& g);

/// Weakly connected components, each sorted, listed by smallest vertex.
std::vector<std::vector<VertexId>> components(const KGraph& g);

PropertyReport analyze(const KGraph& g, unsigned bound, unsigned threads = 1);

/// Laurent polynomial in x_1..x_k: exponent vector -> nonzero coefficient.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(RingSpec spec, std::size_t k) : spec_(spec), k_(k) {}

  const RingSpec& spec() const { return spec_; }
  std::size_t arity() const { return k_; }
  const std::map<GradeDegree, RingValue>& terms() const { return terms_; }
  void add(const GradeDegree& exponent, const RingValue& c);

  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  /// Highest exponent first, e.g. "x^2 + 2" (k = 1) or "x1*x2^-1 - 3" (k > 1).
  std::string to_string() const;

 private:
  RingSpec spec_;
  std::size_t k_;
  std::map<GradeDegree, RingValue> terms_;
};

/// The isomorphism KP_R(Λ) ≅ ⊕_v R[x_1^±, ..., x_k^±] of a commutative graph:
/// s(f_i^v) ↦ x_i, st(f_i^v) ↦ x_i^{-1}, p(v) ↦ 1 in the v-th summand.
class LaurentIsomorphism {
 public:
  /// Throws GraphError unless is_commutative_graph(g).
  explicit LaurentIsomorphism(const GraphPtr& g);

  /// The loop f_i^v.
  EdgeId loop(VertexId v, std::uint32_t color) const { return loops_.at(v).at(color); }

  /// One polynomial per vertex (= component); zero summands included.
  std::vector<LaurentPolynomial> apply(const AlgebraElement& a) const;

 private:
  GraphPtr graph_;
  std::vector<std::vector<EdgeId>> loops_;
};

}  // namespace kpalg
