#include "kpalg/analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "kpalg/parallel.hpp"

namespace kpalg {

std::string to_string(Aperiodicity::Verdict v) {
  switch (v) {
    case Aperiodicity::Verdict::Aperiodic: return "aperiodic";
    case Aperiodicity::Verdict::NoPeriodicityUpToBound: return "no-periodicity-up-to-bound";
    case Aperiodicity::Verdict::Periodic: return "periodic";
  }
  return "?";
}

std::string to_string(Aperiodicity::Mode m) {
  return m == Aperiodicity::Mode::Exact ? "exact" : "bounded";
}

namespace {

/// successors[v] = { s(e) : r(e) = v }, deduplicated and sorted.
std::vector<std::vector<VertexId>> successors(const KGraph& g) {
  std::vector<std::set<VertexId>> sets(g.vertex_count());
  for (const auto& e : g.edges()) sets[e.range].insert(e.source);
  std::vector<std::vector<VertexId>> out;
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

void tarjan(const std::vector<std::vector<VertexId>>& graph, VertexId v, std::vector<int>& index,
            std::vector<int>& low, std::vector<bool>& on_stack, std::vector<VertexId>& stack,
            int& counter, std::vector<std::vector<VertexId>>& out) {
  index[v] = low[v] = counter++;
  stack.push_back(v);
  on_stack[v] = true;
  for (VertexId w : graph[v]) {
    if (index[w] < 0) {
      tarjan(graph, w, index, low, on_stack, stack, counter, out);
      low[v] = std::min(low[v], low[w]);
    } else if (on_stack[w]) {
      low[v] = std::min(low[v], index[w]);
    }
  }
  if (low[v] == index[v]) {
    std::vector<VertexId> scc;
    VertexId w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = false;
      scc.push_back(w);
    } while (w != v);
    std::sort(scc.begin(), scc.end());
    out.push_back(std::move(scc));
  }
}

/// reach[v][w]: w is the source of some path with range v (degree 0 included).
std::vector<std::vector<bool>> reachability(const KGraph& g) {
  const auto succ = successors(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (VertexId v = 0; v < n; ++v) {
    std::deque<VertexId> queue{v};
    reach[v][v] = true;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : succ[u]) {
        if (!reach[v][w]) {
          reach[v][w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return reach;
}

bool cofinal_by_tails(const KGraph& g) {
  const auto tails = tail_components(g);
  const auto reach = reachability(g);
  for (const auto& tail : tails) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      bool hits = std::any_of(tail.begin(), tail.end(), [&](VertexId w) { return reach[v][w]; });
      if (!hits) return false;
    }
  }
  return true;
}

Aperiodicity exact_one_graph(const KGraph& g) {
  // A cycle without an entrance is a cycle of the predecessor map restricted
  // to vertices that receive exactly one edge.
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<VertexId>> pred(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto& in = g.incoming(v, 0);
    if (in.size() == 1) pred[v] = g.edge(in.front()).source;
  }
  std::optional<std::vector<VertexId>> best;
  for (VertexId start = 0; start < n; ++start) {
    std::vector<VertexId> walk;
    std::vector<int> position(n, -1);
    VertexId at = start;
    while (pred[at] && position[at] < 0) {
      position[at] = static_cast<int>(walk.size());
      walk.push_back(at);
      at = *pred[at];
    }
    if (position[at] < 0) continue;
    std::vector<VertexId> cycle(walk.begin() + position[at], walk.end());
    std::sort(cycle.begin(), cycle.end());
    if (!best || cycle.front() < best->front()) best = cycle;
  }
  Aperiodicity out;
  out.mode = Aperiodicity::Mode::Exact;
  if (!best) {
    out.verdict = Aperiodicity::Verdict::Aperiodic;
    return out;
  }
  out.verdict = Aperiodicity::Verdict::Periodic;
  out.witness = PeriodicWitness{best->front(), MultiDegree(std::vector<std::uint32_t>{
                                                   static_cast<std::uint32_t>(best->size())}),
                                MultiDegree(1)};
  return out;
}

}  // namespace

bool has_closed_path(const KGraph& g) {
  for (const auto& e : g.edges()) {
    if (e.range == e.source) return true;
  }
  for (const auto& scc : strong_components(g)) {
    if (scc.size() > 1) return true;
  }
  return false;
}

std::vector<std::vector<VertexId>> strong_components(const KGraph& g) {
  const auto succ = successors(g);
  const std::size_t n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  int counter = 0;
  std::vector<std::vector<VertexId>> out;
  for (VertexId v = 0; v < n; ++v) {
    if (index[v] < 0) tarjan(succ, v, index, low, on_stack, stack, counter, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> tail_components(const KGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<int> comp_of(g.vertex_count(), -1);
  const auto sccs = strong_components(g);
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    for (VertexId v : sccs[c]) comp_of[v] = static_cast<int>(c);
  }
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    std::vector<bool> colors(g.rank(), false);
    for (const auto& e : g.edges()) {
      if (comp_of[e.range] == static_cast<int>(c) && comp_of[e.source] == static_cast<int>(c)) {
        colors[e.color] = true;
      }
    }
    if (std::all_of(colors.begin(), colors.end(), [](bool b) { return b; })) out.push_back(sccs[c]);
  }
  return out;
}

bool is_cofinal(const KGraph& g) {
  if (g.has_sources()) throw GraphError("cofinality is only decided for graphs without sources");
  return cofinal_by_tails(g);
}

bool eventually_periodic_cofinality_oracle(const KGraph& g, unsigned max_cycle_len) {
  // Plain breadth-first reachability, kept separate from the SCC machinery.
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> frontier{v};
    reach[v][v] = true;
    while (!frontier.empty()) {
      std::vector<VertexId> next;
      for (VertexId u : frontier) {
        for (std::uint32_t c = 0; c < g.rank(); ++c) {
          for (EdgeId e : g.incoming(u, c)) {
            VertexId w = g.edge(e).source;
            if (!reach[v][w]) {
              reach[v][w] = true;
              next.push_back(w);
            }
          }
        }
      }
      frontier = std::move(next);
    }
  }

  bool ok = true;
  std::vector<EdgeId> walk;
  auto check_walk = [&] {
    std::vector<bool> colors(g.rank(), false);
    for (EdgeId e : walk) colors[g.edge(e).color] = true;
    if (!std::all_of(colors.begin(), colors.end(), [](bool b) { return b; })) return;
    for (VertexId v = 0; v < n; ++v) {
      bool hits = std::any_of(walk.begin(), walk.end(),
                              [&](EdgeId e) { return reach[v][g.edge(e).range]; });
      if (!hits) ok = false;
    }
  };
  auto extend = [&](auto&& self, VertexId start) -> void {
    if (!ok) return;
    VertexId at = g.edge(walk.back()).source;
    if (at == start) check_walk();
    if (walk.size() >= max_cycle_len) return;
    for (std::uint32_t c = 0; c < g.rank(); ++c) {
      for (EdgeId e : g.incoming(at, c)) {
        walk.push_back(e);
        self(self, start);
        walk.pop_back();
      }
    }
  };
  for (EdgeId e = 0; e < g.edge_count() && ok; ++e) {
    walk.assign(1, e);
    extend(extend, g.edge(e).range);
  }
  return ok;
}

bool has_aperiodicity_witness(const KGraph& g, VertexId v, const MultiDegree& m,
                              const MultiDegree& n, unsigned extra) {
  const MultiDegree top = m.join(n);
  auto degrees = degree_box(top, top + MultiDegree::uniform(g.rank(), extra));
  std::stable_sort(degrees.begin(), degrees.end(),
                   [](const auto& a, const auto& b) { return a.total() < b.total(); });
  for (const auto& d : degrees) {
    const MultiDegree t = d - top;
    for (const Path& lambda : g.paths_from(v, d)) {
      if (g.segment(lambda, m, m + t) != g.segment(lambda, n, n + t)) return true;
    }
  }
  return false;
}

Aperiodicity aperiodicity_search(const KGraph& g, unsigned bound, unsigned threads) {
  struct Triple {
    VertexId v;
    MultiDegree m;
    MultiDegree n;
  };
  const auto box = degree_box(g.zero_degree(), MultiDegree::uniform(g.rank(), bound));
  std::vector<Triple> triples;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < box.size(); ++i) {
      for (std::size_t j = i + 1; j < box.size(); ++j) triples.push_back({v, box[j], box[i]});
    }
  }
  auto found = parallel_map(triples.size(), threads, [&](std::size_t i) -> char {
    return has_aperiodicity_witness(g, triples[i].v, triples[i].m, triples[i].n, bound) ? 1 : 0;
  });
  Aperiodicity out;
  out.mode = Aperiodicity::Mode::Bounded;
  out.bound = bound;
  out.verdict = Aperiodicity::Verdict::NoPeriodicityUpToBound;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!found[i]) {
      out.verdict = Aperiodicity::Verdict::Periodic;
      out.witness = PeriodicWitness{triples[i].v, triples[i].m, triples[i].n};
      break;
    }
  }
  return out;
}

Aperiodicity aperiodicity(const KGraph& g, unsigned bound, unsigned threads) {
  if (g.rank() == 1) {
    Aperiodicity out = exact_one_graph(g);
    out.bound = bound;
    return out;
  }
  return aperiodicity_search(g, bound, threads);
}

bool is_commutative_graph(const KGraph& g) {
  for (const auto& e : g.edges()) {
    if (e.range != e.source) return false;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t c = 0; c < g.rank(); ++c) {
      if (g.incoming(v, c).size() != 1) return false;
    }
  }
  return true;
}

std::vector<std::vector<VertexId>> components(const KGraph& g) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    VertexId a = find(e.range), b = find(e.source);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<VertexId, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < g.vertex_count(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

PropertyReport analyze(const KGraph& g, unsigned bound, unsigned threads) {
  PropertyReport r;
  r.has_closed_path = has_closed_path(g);
  r.cofinal = cofinal_by_tails(g);
  r.aperiodicity = aperiodicity(g, bound, threads);
  r.commutative_graph = is_commutative_graph(g);
  r.components = components(g);
  return r;
}

}  // namespace kpalg
