#pragma once

#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kpalg/algebra.hpp"
#include "kpalg/kgraph.hpp"
#include "kpalg/presentation.hpp"

namespace testing {

using namespace kpalg;

inline std::string fixture_path(const std::string& name) {
  return std::string(KPALG_FIXTURE_DIR) + "/" + name + ".kg";
}

inline GraphPtr fixture(const std::string& name, SourcePolicy policy = SourcePolicy::Reject) {
  return KGraph::load(fixture_path(name), policy);
}

inline const std::vector<std::string>& valid_fixtures() {
  static const std::vector<std::string> names{"G_N1", "G_N2", "G_L2", "G_L3", "G_C2",
                                              "G_D2", "G_F2", "G_N3"};
  return names;
}

/// Square moves read straight from the presentation file: both directions of
/// every declared square, keyed by the adjacent edge pair.
class SquareMoves {
 public:
  SquareMoves(const KGraph& g, const Presentation& p) : g_(g) {
    for (const auto& s : p.squares) {
      EdgeId a = g.edge_named(s.g), b = g.edge_named(s.h);
      EdgeId c = g.edge_named(s.h2), d = g.edge_named(s.g2);
      forward_[{a, b}] = {c, d};
      backward_[{c, d}] = {a, b};
    }
  }

  /// Every word obtained by one move that puts a higher color after a lower.
  std::vector<std::vector<EdgeId>> sorting_moves(const std::vector<EdgeId>& w) const {
    std::vector<std::vector<EdgeId>> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (g_.edge(w[i]).color <= g_.edge(w[i + 1]).color) continue;
      auto it = backward_.find({w[i], w[i + 1]});
      if (it == backward_.end()) continue;
      auto next = w;
      next[i] = it->second.first;
      next[i + 1] = it->second.second;
      out.push_back(next);
    }
    return out;
  }

  /// Every word reachable by moves in either direction: all edge words of
  /// the same morphism.
  std::set<std::vector<EdgeId>> morphism_class(const std::vector<EdgeId>& w) const {
    std::set<std::vector<EdgeId>> seen{w};
    std::deque<std::vector<EdgeId>> queue{w};
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        for (const auto* table : {&forward_, &backward_}) {
          auto it = table->find({cur[i], cur[i + 1]});
          if (it == table->end()) continue;
          auto next = cur;
          next[i] = it->second.first;
          next[i + 1] = it->second.second;
          if (seen.insert(next).second) queue.push_back(next);
        }
      }
    }
    return seen;
  }

  /// All terminal words of all maximal sorting-rewrite sequences.
  std::set<std::vector<EdgeId>> normal_forms(const std::vector<EdgeId>& w) const {
    std::set<std::vector<EdgeId>> seen{w}, terminal;
    std::deque<std::vector<EdgeId>> queue{w};
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      auto moves = sorting_moves(cur);
      if (moves.empty()) terminal.insert(cur);
      for (auto& m : moves) {
        if (seen.insert(m).second) queue.push_back(m);
      }
    }
    return terminal;
  }

 private:
  const KGraph& g_;
  std::map<std::pair<EdgeId, EdgeId>, std::pair<EdgeId, EdgeId>> forward_, backward_;
};

/// All composable edge words of exactly `len` edges, by brute force.
inline std::vector<std::vector<EdgeId>> composable_words(const KGraph& g, std::size_t len) {
  std::vector<std::vector<EdgeId>> out{{}};
  for (std::size_t step = 0; step < len; ++step) {
    std::vector<std::vector<EdgeId>> next;
    for (const auto& w : out) {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!w.empty() && g.edge(w.back()).source != g.edge(e).range) continue;
        auto x = w;
        x.push_back(e);
        next.push_back(x);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline MultiDegree word_degree(const KGraph& g, const std::vector<EdgeId>& w) {
  MultiDegree d = g.zero_degree();
  for (EdgeId e : w) d[g.edge(e).color] += 1;
  return d;
}

/// Segment by brute force: find every word of the morphism whose first
/// letters have degree p and next letters degree q - p; the middle pieces
/// must all canonicalize to one path.
inline std::set<std::vector<EdgeId>> segment_oracle(const KGraph& g, const SquareMoves& moves,
                                                    const Path& lambda, const MultiDegree& p,
                                                    const MultiDegree& q) {
  std::set<std::vector<EdgeId>> out;
  const std::size_t a = p.total(), b = q.total();
  for (const auto& w : moves.morphism_class(lambda.word())) {
    std::vector<EdgeId> head(w.begin(), w.begin() + a), mid(w.begin() + a, w.begin() + b);
    if (word_degree(g, head) != p || word_degree(g, mid) != q - p) continue;
    out.insert(g.canonicalize(mid, head.empty() ? lambda.range() : g.edge(head.back()).source).word());
  }
  return out;
}

/// Minimal common extensions by enumeration and morphism-class comparison.
inline std::set<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> mce_oracle(
    const KGraph& g, const SquareMoves& moves, const Path& mu, const Path& nu) {
  std::set<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> out;
  if (mu.range() != nu.range()) return out;
  const MultiDegree top = mu.degree().join(nu.degree());
  const std::size_t len_a = (top - mu.degree()).total(), len_b = (top - nu.degree()).total();
  auto extensions = [&](const Path& base, std::size_t len, const MultiDegree& d) {
    std::vector<std::vector<EdgeId>> ws;
    for (auto& w : composable_words(g, len)) {
      if (word_degree(g, w) != d) continue;
      if (!w.empty() && g.edge(w.front()).range != base.source()) continue;
      ws.push_back(w);
    }
    return ws;
  };
  for (const auto& alpha : extensions(mu, len_a, top - mu.degree())) {
    std::vector<EdgeId> left = mu.word();
    left.insert(left.end(), alpha.begin(), alpha.end());
    const auto cls = moves.morphism_class(left);
    for (const auto& beta : extensions(nu, len_b, top - nu.degree())) {
      std::vector<EdgeId> right = nu.word();
      right.insert(right.end(), beta.begin(), beta.end());
      if (left.empty() && right.empty()) {
        if (mu.source() == nu.source()) out.insert({alpha, beta});
        continue;
      }
      if (cls.count(right)) {
        out.insert({g.canonicalize(alpha, mu.source()).word(), g.canonicalize(beta, nu.source()).word()});
      }
    }
  }
  return out;
}

/// All paths of degree <= cap, any range.
inline std::vector<Path> paths_up_to(const KGraph& g, const MultiDegree& cap) {
  std::vector<Path> out;
  for (const auto& d : degree_box(g.zero_degree(), cap)) {
    for (auto& p : g.paths_of_degree(d)) out.push_back(std::move(p));
  }
  return out;
}

/// A random element with up to `max_terms` terms, d(α) <= alpha_cap and
/// d(β) <= ghost_cap, small integer coefficients.
inline AlgebraElement random_element(const GraphPtr& g, const RingSpec& spec, std::mt19937& rng,
                                     std::size_t max_terms, unsigned alpha_cap, unsigned ghost_cap) {
  // Keyed by the owning pointer so a freed graph's address is never reused.
  static thread_local std::map<std::pair<GraphPtr, unsigned>, std::vector<Path>> cache;
  auto pool = [&](unsigned cap) -> const std::vector<Path>& {
    auto key = std::make_pair(g, cap);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, paths_up_to(*g, MultiDegree::uniform(g->rank(), cap))).first;
    }
    return it->second;
  };
  const auto& betas = pool(ghost_cap);
  const auto& alphas = pool(alpha_cap);
  AlgebraElement x(g, spec);
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<long> coeff(-3, 3);
  const std::size_t n = nterms(rng);
  for (std::size_t t = 0; t < n; ++t) {
    const Path& beta = betas[std::uniform_int_distribution<std::size_t>(0, betas.size() - 1)(rng)];
    std::vector<const Path*> matching;
    for (const auto& a : alphas) {
      if (a.source() == beta.source()) matching.push_back(&a);
    }
    const Path& alpha = *matching[std::uniform_int_distribution<std::size_t>(0, matching.size() - 1)(rng)];
    x.add_term(alpha, beta, RingValue(spec, coeff(rng)));
  }
  return x;
}

/// Random k = 1 graph without sources: 1..4 vertices, at most 6 edges.
inline GraphPtr random_one_graph(std::mt19937& rng) {
  while (true) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const int m = std::uniform_int_distribution<int>(n, 6)(rng);
    Presentation p;
    p.k = 1;
    for (int v = 0; v < n; ++v) p.vertices.push_back({"v" + std::to_string(v), 0});
    std::vector<bool> receives(n, false);
    for (int e = 0; e < m; ++e) {
      int r = std::uniform_int_distribution<int>(0, n - 1)(rng);
      int s = std::uniform_int_distribution<int>(0, n - 1)(rng);
      receives[r] = true;
      p.edges.push_back({"e" + std::to_string(e), 1, "v" + std::to_string(r), "v" + std::to_string(s), 0});
    }
    if (std::all_of(receives.begin(), receives.end(), [](bool b) { return b; })) return KGraph::build(p);
  }
}

}  // namespace testing
