#pragma once

#include <string>
#include <vector>

#include "kpalg/algebra.hpp"
#include "kpalg/analysis.hpp"

namespace kpalg {

/// The normal-form subspace V(w): s_α s_{β*} with d(β) = ghost, d(α) <= cap.
struct Window {
  MultiDegree ghost;
  MultiDegree cap;

  /// Throws AlgebraError unless ghost <= cap and both have arity k.
  void check(const KGraph& g) const;
  std::string to_string() const;
  friend bool operator==(const Window&, const Window&) = default;
};

struct CenterResult {
  Window window;
  RingSpec spec = RingSpec::rationals();
  std::size_t window_size = 0;
  /// Kernel basis: RREF over a field, Hermite basis over Z. Each normalized.
  std::vector<AlgebraElement> basis;
  std::size_t rank() const { return basis.size(); }
};

/// Pairs (α, β) spanning V(w), sorted. Pairs whose common source is a
/// degenerate vertex are omitted (they vanish in the algebra).
std::vector<PathPair> window_basis(const KGraph& g, const Window& w);

/// p(v) for every vertex, then s(e) and st(e) for every edge, with labels.
std::vector<std::pair<std::string, AlgebraElement>> generators(const GraphPtr& g,
                                                               const RingSpec& spec);

/// Z(KP_R(Λ)) ∩ V(w), exactly.
CenterResult central_in_window(const GraphPtr& g, const RingSpec& spec, const Window& w,
                               unsigned threads = 1);

/// Labels of the generators x fails to commute with; empty iff x is central.
std::vector<std::string> noncommuting_generators(const AlgebraElement& x);
inline bool is_central(const AlgebraElement& x) { return noncommuting_generators(x).empty(); }

struct FilterReport {
  bool range_match = false;     // (1) r(α) = r(β) for every term
  bool reach_closed = false;    // (2) W = {r(β)}: s(μ) ∈ W implies r(μ) ∈ W
  bool range_cover = false;     // (3) each s(σ) is r(α) = r(β) of some term
  bool beta_cycle = false;      // (4) the β's chain into a cycle
  bool cycle_degenerate = false;  // (4) was met by vertices only (ghost 0)
  bool all() const { return range_match && reach_closed && range_cover && beta_cycle; }
};

/// Necessary conditions for centrality. Throws AlgebraError when a is zero or
/// not in normal form.
FilterReport central_filters(const AlgebraElement& a);

struct ElementDiagnostic {
  bool ranges_cover = false;  // {r(β)} = Λ⁰
  bool diagonal = false;      // α = β for every term
  bool uniform = false;       // diagonal with one common coefficient
};

std::vector<ElementDiagnostic> diagnostics(const CenterResult& result);

enum class Verdict { Verified, Refuted, Inconclusive, HypothesesUnmet, NotApplicable };
std::string to_string(Verdict v);

struct WindowOutcome {
  Window window;
  std::size_t window_size = 0;
  std::size_t rank = 0;
  bool scalar = false;  // center = R·1 in this window
  bool filters_pass = true;
  std::vector<ElementDiagnostic> diagnostics;
};

struct TheoremReport {
  PropertyReport properties;
  std::vector<WindowOutcome> windows;
  Verdict simple = Verdict::NotApplicable;       // cofinal + aperiodic => R·1
  Verdict commutative = Verdict::NotApplicable;  // commutative graph => everything central
  Verdict acyclic = Verdict::NotApplicable;      // no closed paths => {0}
  bool filters_pass = true;
};

/// Every window with ghost <= max.ghost and ghost <= cap <= max.cap.
std::vector<Window> windows_up_to(const Window& max);

TheoremReport verify_theorems(const GraphPtr& g, const RingSpec& spec, const Window& max,
                              unsigned aperiodicity_bound = 3, unsigned threads = 1);

}  // namespace kpalg
