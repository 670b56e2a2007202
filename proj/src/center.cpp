#include "kpalg/center.hpp"

#include <algorithm>
#include <set>

#include "kpalg/parallel.hpp"

namespace kpalg {

void Window::check(const KGraph& g) const {
  if (ghost.arity() != g.rank() || cap.arity() != g.rank()) {
    throw AlgebraError("window degrees must have " + std::to_string(g.rank()) + " entries");
  }
  if (!ghost.leq(cap)) {
    throw AlgebraError("window needs ghost <= cap, got ghost " + ghost.to_string() + ", cap " +
                       cap.to_string());
  }
}

std::string Window::to_string() const {
  return "ghost " + ghost.to_string() + " cap " + cap.to_string();
}

std::vector<PathPair> window_basis(const KGraph& g, const Window& w) {
  w.check(g);
  std::vector<std::vector<Path>> by_source(g.vertex_count());
  for (const auto& d : degree_box(g.zero_degree(), w.cap)) {
    for (Path& p : g.paths_of_degree(d)) by_source[p.source()].push_back(std::move(p));
  }
  std::vector<PathPair> out;
  for (const Path& beta : g.paths_of_degree(w.ghost)) {
    if (g.is_degenerate(beta.source())) continue;
    for (const Path& alpha : by_source[beta.source()]) out.push_back({alpha, beta});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, AlgebraElement>> generators(const GraphPtr& g,
                                                               const RingSpec& spec) {
  std::vector<std::pair<std::string, AlgebraElement>> out;
  for (VertexId v = 0; v < g->vertex_count(); ++v) {
    out.emplace_back("p(" + g->vertex(v).id + ")", projection(g, spec, v));
  }
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    out.emplace_back("s(" + g->edge(e).id + ")", path_element(g, spec, g->edge_path(e)));
  }
  for (EdgeId e = 0; e < g->edge_count(); ++e) {
    out.emplace_back("st(" + g->edge(e).id + ")", ghost_element(g, spec, g->edge_path(e)));
  }
  return out;
}

CenterResult central_in_window(const GraphPtr& g, const RingSpec& spec, const Window& w,
                               unsigned threads) {
  const auto pairs = window_basis(*g, w);
  std::vector<AlgebraElement> basis;
  basis.reserve(pairs.size());
  for (const auto& key : pairs) {
    AlgebraElement b(g, spec);
    b.add_term(key.alpha, key.beta, RingValue::one(spec));
    basis.push_back(std::move(b));
  }
  const auto gens = generators(g, spec);

  // One block of rows per generator: the coefficients of [b_i, gen] for all i,
  // all brought to one ghost degree so the spanning elements are independent.
  auto blocks = parallel_map(gens.size(), threads, [&](std::size_t gi) {
    const AlgebraElement& gen = gens[gi].second;
    std::vector<AlgebraElement> comms;
    comms.reserve(basis.size());
    MultiDegree top = g->zero_degree();
    for (const auto& b : basis) {
      comms.push_back(b * gen - gen * b);
      top = top.join(ghost_degree(comms.back()));
    }
    std::map<PathPair, SparseRow> rows;
    for (std::size_t i = 0; i < comms.size(); ++i) {
      const AlgebraElement reshaped = reshape(comms[i], top);
      for (const auto& [key, c] : reshaped.terms()) {
        if (g->is_degenerate(key.alpha.source())) continue;
        rows[key].emplace_back(i, c.value());
      }
    }
    std::vector<SparseRow> out;
    for (auto& [key, row] : rows) out.push_back(std::move(row));
    return out;
  });
  std::vector<SparseRow> system;
  for (auto& block : blocks) {
    for (auto& row : block) system.push_back(std::move(row));
  }

  CenterResult result;
  result.window = w;
  result.spec = spec;
  result.window_size = pairs.size();
  for (const Vector& v : kernel(spec, pairs.size(), system)) {
    AlgebraElement x(g, spec);
    for (std::size_t i = 0; i < v.size(); ++i) x.add_term(pairs[i].alpha, pairs[i].beta, v[i]);
    result.basis.push_back(normalize(x));
  }
  return result;
}

std::vector<std::string> noncommuting_generators(const AlgebraElement& x) {
  std::vector<std::string> out;
  for (const auto& [label, gen] : generators(x.graph_ptr(), x.spec())) {
    if (!is_zero(x * gen - gen * x)) out.push_back(label);
  }
  return out;
}

FilterReport central_filters(const AlgebraElement& a) {
  const KGraph& g = a.graph();
  if (a.empty()) throw AlgebraError("filters need a nonzero element");
  const MultiDegree m = a.terms().begin()->first.beta.degree();
  for (const auto& [key, c] : a.terms()) {
    if (key.beta.degree() != m || g.is_degenerate(key.alpha.source())) {
      throw AlgebraError("filters need an element in normal form");
    }
  }

  FilterReport r;
  r.range_match = std::all_of(a.terms().begin(), a.terms().end(), [](const auto& t) {
    return t.first.alpha.range() == t.first.beta.range();
  });

  std::vector<bool> in_w(g.vertex_count(), false);
  for (const auto& [key, c] : a.terms()) in_w[key.beta.range()] = true;
  r.reach_closed = std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return in_w[e.source] && !in_w[e.range];
  });

  r.range_cover = std::all_of(a.terms().begin(), a.terms().end(), [&](const auto& t) {
    const VertexId v = t.first.alpha.source();
    return std::any_of(a.terms().begin(), a.terms().end(), [&](const auto& u) {
      return u.first.alpha.range() == v && u.first.beta.range() == v;
    });
  });

  // β -> β' when r(β') = s(β): a cycle of β's is a cycle in the vertex digraph
  // with one arc r(β) -> s(β) per β.
  std::set<std::pair<VertexId, VertexId>> arcs;
  for (const auto& [key, c] : a.terms()) arcs.emplace(key.beta.range(), key.beta.source());
  std::vector<std::size_t> indegree(g.vertex_count(), 0);
  for (const auto& [from, to] : arcs) ++indegree[to];
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (auto it = arcs.lower_bound({v, 0}); it != arcs.end() && it->first == v; ++it) {
      if (--indegree[it->second] == 0) ready.push_back(it->second);
    }
  }
  r.beta_cycle = removed < g.vertex_count();
  r.cycle_degenerate = r.beta_cycle && m.is_zero();
  return r;
}

std::vector<ElementDiagnostic> diagnostics(const CenterResult& result) {
  std::vector<ElementDiagnostic> out;
  for (const auto& b : result.basis) {
    ElementDiagnostic d;
    std::set<VertexId> ranges;
    for (const auto& [key, c] : b.terms()) ranges.insert(key.beta.range());
    d.ranges_cover = !b.empty() && ranges.size() == b.graph().vertex_count();
    d.diagonal = std::all_of(b.terms().begin(), b.terms().end(),
                             [](const auto& t) { return t.first.alpha == t.first.beta; });
    d.uniform = d.diagonal && std::all_of(b.terms().begin(), b.terms().end(), [&](const auto& t) {
      return t.second == b.terms().begin()->second;
    });
    out.push_back(d);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "VERIFIED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::HypothesesUnmet: return "HYPOTHESES_UNMET";
    case Verdict::NotApplicable: return "N/A";
  }
  return "?";
}

std::vector<Window> windows_up_to(const Window& max) {
  std::vector<Window> out;
  for (const auto& m : degree_box(MultiDegree(max.ghost.arity()), max.ghost)) {
    if (!m.leq(max.cap)) continue;
    for (const auto& d : degree_box(m, max.cap)) out.push_back({m, d});
  }
  return out;
}

TheoremReport verify_theorems(const GraphPtr& g, const RingSpec& spec, const Window& max,
                              unsigned aperiodicity_bound, unsigned threads) {
  max.check(*g);
  TheoremReport report;
  report.properties = analyze(*g, aperiodicity_bound, threads);
  const AlgebraElement one = identity(g, spec);

  bool all_scalar = true, all_full = true, all_zero = true;
  for (const Window& w : windows_up_to(max)) {
    CenterResult result = central_in_window(g, spec, w, threads);
    WindowOutcome o;
    o.window = w;
    o.window_size = result.window_size;
    o.rank = result.rank();
    o.scalar = o.rank == 1 && equal(result.basis.front(), one);
    for (const auto& b : result.basis) {
      if (!central_filters(b).all()) o.filters_pass = false;
    }
    o.diagnostics = diagnostics(result);
    all_scalar = all_scalar && o.scalar;
    all_full = all_full && o.rank == o.window_size;
    all_zero = all_zero && o.rank == 0;
    report.filters_pass = report.filters_pass && o.filters_pass;
    report.windows.push_back(std::move(o));
  }

  const PropertyReport& p = report.properties;
  const bool exact = p.aperiodicity.mode == Aperiodicity::Mode::Exact;
  if (p.cofinal && p.aperiodicity.presumed_aperiodic() && !g->has_sources()) {
    if (!exact) {
      report.simple = Verdict::Inconclusive;
    } else {
      report.simple = all_scalar ? Verdict::Verified : Verdict::Refuted;
    }
  } else {
    report.simple = Verdict::HypothesesUnmet;
  }
  if (p.commutative_graph) report.commutative = all_full ? Verdict::Verified : Verdict::Refuted;
  if (!p.has_closed_path) report.acyclic = all_zero ? Verdict::Verified : Verdict::Refuted;
  return report;
}

}  // namespace kpalg
