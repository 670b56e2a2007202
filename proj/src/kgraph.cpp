#include "kpalg/kgraph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace kpalg {

std::shared_ptr<const KGraph> KGraph::build(const Presentation& p, SourcePolicy policy) {
  ValidationReport report = validate(p);
  bool acceptable = report.valid() || (policy == SourcePolicy::Allow && report.only_sources());
  if (!acceptable) {
    throw GraphError("invalid k-graph presentation:\n" + report.to_string());
  }

  std::shared_ptr<KGraph> g(new KGraph());
  g->k_ = static_cast<std::size_t>(p.k);

  std::vector<std::string> vids;
  for (const auto& v : p.vertices) vids.push_back(v.id);
  std::sort(vids.begin(), vids.end());
  for (VertexId i = 0; i < vids.size(); ++i) {
    g->vertex_index_.emplace(vids[i], i);
    g->vertices_.push_back({vids[i]});
  }

  std::vector<const EdgeDecl*> decls;
  for (const auto& e : p.edges) decls.push_back(&e);
  std::sort(decls.begin(), decls.end(), [](auto* a, auto* b) { return a->id < b->id; });
  for (EdgeId i = 0; i < decls.size(); ++i) {
    const auto& d = *decls[i];
    g->edge_index_.emplace(d.id, i);
    g->edges_.push_back({d.id, static_cast<std::uint32_t>(d.color - 1),
                         g->vertex_index_.at(d.range), g->vertex_index_.at(d.source)});
  }

  g->incoming_.assign(g->vertices_.size() * g->k_, {});
  for (EdgeId e = 0; e < g->edges_.size(); ++e) {
    const auto& ed = g->edges_[e];
    g->incoming_[ed.range * g->k_ + ed.color].push_back(e);
  }

  for (const auto& s : p.squares) {
    EdgeId gg = g->edge_index_.at(s.g), hh = g->edge_index_.at(s.h);
    EdgeId h2 = g->edge_index_.at(s.h2), g2 = g->edge_index_.at(s.g2);
    g->forward_.emplace(pair_key(gg, hh), std::make_pair(h2, g2));
    g->backward_.emplace(pair_key(h2, g2), std::make_pair(gg, hh));
  }
  g->square_count_ = p.squares.size();

  const std::size_t n = g->vertices_.size();
  g->degenerate_.assign(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (g->degenerate_[v]) continue;
      for (std::uint32_t c = 0; c < g->k_; ++c) {
        const auto& in = g->incoming_[v * g->k_ + c];
        bool dies = std::all_of(in.begin(), in.end(), [&](EdgeId e) {
          return g->degenerate_[g->edges_[e].source];
        });
        if (dies) {
          g->degenerate_[v] = true;
          changed = true;
          break;
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (std::uint32_t c = 0; c < g->k_; ++c) {
      if (g->incoming_[v * g->k_ + c].empty()) g->has_sources_ = true;
    }
  }
  return g;
}

std::shared_ptr<const KGraph> KGraph::parse(std::string_view text, SourcePolicy policy) {
  return build(parse_presentation(text), policy);
}

std::shared_ptr<const KGraph> KGraph::load(const std::string& path, SourcePolicy policy) {
  return build(load_presentation(path), policy);
}

std::optional<VertexId> KGraph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> KGraph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId KGraph::vertex_named(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw GraphError("unknown vertex '" + std::string(id) + "'");
}

EdgeId KGraph::edge_named(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw GraphError("unknown edge '" + std::string(id) + "'");
}

const std::vector<EdgeId>& KGraph::incoming(VertexId v, std::uint32_t color) const {
  return incoming_.at(v * k_ + color);
}

Path KGraph::vertex_path(VertexId v) const {
  if (v >= vertices_.size()) throw GraphError("vertex index out of range");
  return Path({}, v, v, zero_degree());
}

Path KGraph::edge_path(EdgeId e) const {
  const auto& ed = edges_.at(e);
  return Path({e}, ed.range, ed.source, MultiDegree::unit(k_, ed.color));
}

std::pair<EdgeId, EdgeId> KGraph::exchange(EdgeId left, EdgeId right) const {
  const auto& l = edges_[left];
  const auto& r = edges_[right];
  assert(l.color != r.color);
  const auto& table = l.color < r.color ? forward_ : backward_;
  auto it = table.find(pair_key(left, right));
  if (it == table.end()) {
    throw GraphError("no factorization square for " + l.id + "." + r.id);
  }
  return it->second;
}

Path KGraph::canonicalize(std::span<const EdgeId> word, std::optional<VertexId> empty_range) const {
  if (word.empty()) {
    if (!empty_range) throw GraphError("empty word needs a vertex");
    return vertex_path(*empty_range);
  }
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (word[t] >= edges_.size()) throw GraphError("edge index out of range");
    if (t > 0 && edges_[word[t]].range != edges_[word[t - 1]].source) {
      throw GraphError("word is not composable at " + edges_[word[t - 1]].id + "." +
                       edges_[word[t]].id);
    }
  }
  std::vector<EdgeId> w(word.begin(), word.end());
  // Insertion sort on colors, each adjacent transposition realised by a square.
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && edges_[w[j - 1]].color > edges_[w[j]].color; --j) {
      auto [a, b] = exchange(w[j - 1], w[j]);
      w[j - 1] = a;
      w[j] = b;
    }
  }
  MultiDegree d(k_);
  for (EdgeId e : w) ++d[edges_[e].color];
  VertexId r = edges_[w.front()].range;
  VertexId s = edges_[w.back()].source;
  return Path(std::move(w), r, s, std::move(d));
}

Path KGraph::compose(const Path& lambda, const Path& mu) const {
  if (lambda.source() != mu.range()) {
    throw GraphError("cannot compose " + format_path(lambda) + " with " + format_path(mu) +
                     ": source " + vertices_[lambda.source()].id + " != range " +
                     vertices_[mu.range()].id);
  }
  if (mu.is_vertex()) return lambda;
  if (lambda.is_vertex()) return mu;
  std::vector<EdgeId> w = lambda.word();
  w.insert(w.end(), mu.word().begin(), mu.word().end());
  return canonicalize(w);
}

std::vector<EdgeId> KGraph::arrange(std::span<const EdgeId> word,
                                    std::span<const std::uint32_t> colors) const {
  std::vector<EdgeId> w(word.begin(), word.end());
  assert(colors.size() == w.size());
  for (std::size_t t = 0; t < w.size(); ++t) {
    std::size_t j = t;
    while (j < w.size() && edges_[w[j]].color != colors[t]) ++j;
    if (j == w.size()) throw GraphError("color pattern is not a permutation of the word's colors");
    for (; j > t; --j) {
      auto [a, b] = exchange(w[j - 1], w[j]);
      w[j - 1] = a;
      w[j] = b;
    }
  }
  return w;
}

Path KGraph::segment(const Path& lambda, const MultiDegree& p, const MultiDegree& q) const {
  if (!(p.leq(q) && q.leq(lambda.degree()))) {
    throw GraphError("segment bounds violate 0 <= p <= q <= d(lambda): p=" + p.to_string() +
                     " q=" + q.to_string() + " d=" + lambda.degree().to_string());
  }
  if (p.is_zero() && q == lambda.degree()) return lambda;
  std::vector<std::uint32_t> colors = p.canonical_colors();
  auto mid = (q - p).canonical_colors();
  auto tail = (lambda.degree() - q).canonical_colors();
  colors.insert(colors.end(), mid.begin(), mid.end());
  colors.insert(colors.end(), tail.begin(), tail.end());
  std::vector<EdgeId> w = arrange(lambda.word(), colors);

  const std::size_t from = p.total();
  const std::size_t to = q.total();
  VertexId start = from == 0 ? lambda.range() : edges_[w[from - 1]].source;
  if (from == to) return vertex_path(start);
  std::vector<EdgeId> sub(w.begin() + from, w.begin() + to);
  VertexId end = edges_[sub.back()].source;
  return Path(std::move(sub), start, end, q - p);
}

std::vector<Path> KGraph::paths_from(VertexId v, const MultiDegree& n) const {
  if (n.arity() != k_) throw GraphError("degree has wrong arity");
  std::vector<Path> out;
  const auto colors = n.canonical_colors();
  if (colors.empty()) {
    out.push_back(vertex_path(v));
    return out;
  }
  std::vector<EdgeId> word;
  word.reserve(colors.size());
  // Depth-first over canonical words; edges are visited in id order so the
  // output is lexicographic.
  auto dfs = [&](auto&& self, VertexId at) -> void {
    if (word.size() == colors.size()) {
      out.push_back(Path(word, v, at, n));
      return;
    }
    for (EdgeId e : incoming(at, colors[word.size()])) {
      word.push_back(e);
      self(self, edges_[e].source);
      word.pop_back();
    }
  };
  dfs(dfs, v);
  return out;
}

std::vector<Path> KGraph::paths_of_degree(const MultiDegree& n) const {
  std::vector<Path> out;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    auto part = paths_from(v, n);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<std::pair<Path, Path>> KGraph::min_common_extensions(const Path& mu,
                                                                 const Path& nu) const {
  std::vector<std::pair<Path, Path>> out;
  if (mu.range() != nu.range()) return out;
  const MultiDegree top = mu.degree().join(nu.degree());
  for (const Path& alpha : paths_from(mu.source(), top - mu.degree())) {
    Path whole = compose(mu, alpha);
    if (segment(whole, zero_degree(), nu.degree()) != nu) continue;
    out.emplace_back(alpha, segment(whole, nu.degree(), top));
  }
  return out;
}

std::string KGraph::format_path(const Path& p) const {
  if (p.is_vertex()) return vertices_[p.range()].id;
  std::string out;
  for (std::size_t i = 0; i < p.word().size(); ++i) {
    if (i) out += '.';
    out += edges_[p.word()[i]].id;
  }
  return out;
}

Path KGraph::parse_path(std::string_view text) const {
  std::vector<std::string_view> ids;
  std::size_t pos = 0;
  while (true) {
    std::size_t dot = text.find('.', pos);
    ids.push_back(text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos));
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  if (ids.size() == 1) {
    if (auto v = find_vertex(ids[0])) return vertex_path(*v);
  }
  std::vector<EdgeId> word;
  for (auto id : ids) {
    if (id.empty()) throw GraphError("empty id in path '" + std::string(text) + "'");
    word.push_back(edge_named(id));
  }
  return canonicalize(word);
}

}  // namespace kpalg
