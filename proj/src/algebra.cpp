#include "kpalg/algebra.hpp"

#include <algorithm>

namespace kpalg {

AlgebraElement::AlgebraElement(GraphPtr graph, RingSpec spec)
    : graph_(std::move(graph)), spec_(spec) {
  if (!graph_) throw AlgebraError("algebra element without a graph");
}

void AlgebraElement::add_term(const Path& alpha, const Path& beta, const RingValue& c) {
  if (alpha.source() != beta.source()) {
    throw AlgebraError("s_alpha s_beta* needs s(alpha) = s(beta): " + graph_->format_path(alpha) +
                       ", " + graph_->format_path(beta));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(PathPair{alpha, beta}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::require_compatible(const AlgebraElement& other) const {
  if (graph_ != other.graph_) throw AlgebraError("elements belong to different graphs");
  if (!(spec_ == other.spec_)) {
    throw AlgebraError("elements have different coefficient rings: " + spec_.to_string() + " vs " +
                       other.spec_.to_string());
  }
}

AlgebraElement projection(const GraphPtr& g, const RingSpec& spec, VertexId v) {
  AlgebraElement out(g, spec);
  Path p = g->vertex_path(v);
  out.add_term(p, p, RingValue::one(spec));
  return out;
}

AlgebraElement path_element(const GraphPtr& g, const RingSpec& spec, const Path& lambda) {
  AlgebraElement out(g, spec);
  out.add_term(lambda, g->vertex_path(lambda.source()), RingValue::one(spec));
  return out;
}

AlgebraElement ghost_element(const GraphPtr& g, const RingSpec& spec, const Path& lambda) {
  AlgebraElement out(g, spec);
  out.add_term(g->vertex_path(lambda.source()), lambda, RingValue::one(spec));
  return out;
}

AlgebraElement identity(const GraphPtr& g, const RingSpec& spec) {
  AlgebraElement out(g, spec);
  for (VertexId v = 0; v < g->vertex_count(); ++v) {
    Path p = g->vertex_path(v);
    out.add_term(p, p, RingValue::one(spec));
  }
  return out;
}

AlgebraElement zero(const GraphPtr& g, const RingSpec& spec) { return AlgebraElement(g, spec); }

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_compatible(b);
  AlgebraElement out = a;
  for (const auto& [key, c] : b.terms()) out.add_term(key.alpha, key.beta, c);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement out(a.graph_ptr(), a.spec());
  for (const auto& [key, c] : a.terms()) out.add_term(key.alpha, key.beta, -c);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_compatible(b);
  AlgebraElement out = a;
  for (const auto& [key, c] : b.terms()) out.add_term(key.alpha, key.beta, -c);
  return out;
}

AlgebraElement operator*(const RingValue& r, const AlgebraElement& a) {
  if (!(r.spec() == a.spec())) throw AlgebraError("scalar from a different ring");
  AlgebraElement out(a.graph_ptr(), a.spec());
  for (const auto& [key, c] : a.terms()) out.add_term(key.alpha, key.beta, r * c);
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_compatible(b);
  const KGraph& g = a.graph();
  AlgebraElement out(a.graph_ptr(), a.spec());
  // (s_α s_{β*})(s_γ s_{δ*}) = Σ_{(ρ,τ) ∈ Λ^min(β,γ)} s_{αρ} s_{(δτ)*}
  std::map<std::pair<Path, Path>, std::vector<std::pair<Path, Path>>> extensions;
  for (const auto& [left, c1] : a.terms()) {
    for (const auto& [right, c2] : b.terms()) {
      if (left.beta.range() != right.alpha.range()) continue;
      auto key = std::make_pair(left.beta, right.alpha);
      auto it = extensions.find(key);
      if (it == extensions.end()) {
        it = extensions.emplace(key, g.min_common_extensions(left.beta, right.alpha)).first;
      }
      if (it->second.empty()) continue;
      const RingValue c = c1 * c2;
      if (c.is_zero()) continue;
      for (const auto& [rho, tau] : it->second) {
        out.add_term(g.compose(left.alpha, rho), g.compose(right.beta, tau), c);
      }
    }
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement star(const AlgebraElement& a) {
  AlgebraElement out(a.graph_ptr(), a.spec());
  for (const auto& [key, c] : a.terms()) out.add_term(key.beta, key.alpha, c);
  return out;
}

MultiDegree ghost_degree(const AlgebraElement& a) {
  MultiDegree m = a.graph().zero_degree();
  for (const auto& [key, c] : a.terms()) m = m.join(key.beta.degree());
  return m;
}

AlgebraElement reshape(const AlgebraElement& a, const MultiDegree& m) {
  const KGraph& g = a.graph();
  if (m.arity() != g.rank()) throw AlgebraError("reshape degree has wrong arity");
  AlgebraElement out(a.graph_ptr(), a.spec());
  for (const auto& [key, c] : a.terms()) {
    if (!key.beta.degree().leq(m)) {
      throw AlgebraError("cannot reshape to " + m.to_string() + ": term with ghost degree " +
                         key.beta.degree().to_string());
    }
    const MultiDegree extra = m - key.beta.degree();
    if (extra.is_zero()) {
      out.add_term(key.alpha, key.beta, c);
      continue;
    }
    for (const Path& mu : g.paths_from(key.alpha.source(), extra)) {
      out.add_term(g.compose(key.alpha, mu), g.compose(key.beta, mu), c);
    }
  }
  return out;
}

AlgebraElement normalize(const AlgebraElement& a) {
  AlgebraElement reshaped = reshape(a, ghost_degree(a));
  const KGraph& g = a.graph();
  if (!g.has_sources()) return reshaped;
  AlgebraElement out(a.graph_ptr(), a.spec());
  for (const auto& [key, c] : reshaped.terms()) {
    if (!g.is_degenerate(key.alpha.source())) out.add_term(key.alpha, key.beta, c);
  }
  return out;
}

bool is_zero(const AlgebraElement& a) { return normalize(a).empty(); }

bool equal(const AlgebraElement& a, const AlgebraElement& b) { return is_zero(a - b); }

namespace {

GradeDegree grade_of(const PathPair& key) {
  return GradeDegree::difference(key.alpha.degree(), key.beta.degree());
}

}  // namespace

AlgebraElement graded_component(const AlgebraElement& a, const GradeDegree& grade) {
  AlgebraElement out(a.graph_ptr(), a.spec());
  for (const auto& [key, c] : a.terms()) {
    if (grade_of(key) == grade) out.add_term(key.alpha, key.beta, c);
  }
  return out;
}

std::optional<GradeDegree> homogeneous_degree(const AlgebraElement& a) {
  if (a.empty()) return GradeDegree(a.graph().rank());
  GradeDegree first = grade_of(a.terms().begin()->first);
  for (const auto& [key, c] : a.terms()) {
    if (grade_of(key) != first) return std::nullopt;
  }
  return first;
}

std::map<GradeDegree, AlgebraElement> graded_components(const AlgebraElement& a) {
  std::map<GradeDegree, AlgebraElement> out;
  for (const auto& [key, c] : a.terms()) {
    auto it = out.try_emplace(grade_of(key), a.graph_ptr(), a.spec()).first;
    it->second.add_term(key.alpha, key.beta, c);
  }
  return out;
}

}  // namespace kpalg
