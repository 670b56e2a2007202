#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kpalg/multidegree.hpp"
#include "kpalg/presentation.hpp"

namespace kpalg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Domain error in graph or path arithmetic (bad composition, bad bounds,
/// unknown ids, invalid presentation).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vertex {
  std::string id;
};

struct Edge {
  std::string id;
  std::uint32_t color = 0;  // 0-based internally
  VertexId range = 0;
  VertexId source = 0;
};

/// A morphism of the k-graph, stored as its color-canonical edge word
/// g1 g2 ... gn (colors nondecreasing, s(g_t) = r(g_{t+1})). The empty word
/// is the vertex `range`.
class Path {
 public:
  Path() = default;

  const std::vector<EdgeId>& word() const { return word_; }
  VertexId range() const { return range_; }
  VertexId source() const { return source_; }
  const MultiDegree& degree() const { return degree_; }
  bool is_vertex() const { return word_.empty(); }
  std::size_t length() const { return word_.size(); }
  bool is_closed() const { return range_ == source_; }

  friend bool operator==(const Path& a, const Path& b) {
    return a.range_ == b.range_ && a.word_ == b.word_;
  }
  /// Lexicographic by edge word (edges are indexed in id order), vertices
  /// first, ties between vertices broken by vertex index.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.word_ <=> b.word_; c != 0) return c;
    return a.range_ <=> b.range_;
  }

 private:
  friend class KGraph;
  Path(std::vector<EdgeId> word, VertexId range, VertexId source, MultiDegree degree)
      : word_(std::move(word)), range_(range), source_(source), degree_(std::move(degree)) {}

  std::vector<EdgeId> word_;
  VertexId range_ = 0;
  VertexId source_ = 0;
  MultiDegree degree_;
};

enum class SourcePolicy { Reject, Allow };

/// A finite k-graph given by its coloured skeleton and factorization squares.
/// Vertices and edges are indexed in id order. Immutable after construction.
class KGraph {
 public:
  /// Validates and builds. Throws GraphError listing the violations when the
  /// presentation is invalid; with SourcePolicy::Allow, source vertices alone
  /// do not make it invalid.
  static std::shared_ptr<const KGraph> build(const Presentation& p,
                                             SourcePolicy policy = SourcePolicy::Reject);
  static std::shared_ptr<const KGraph> parse(std::string_view text,
                                             SourcePolicy policy = SourcePolicy::Reject);
  static std::shared_ptr<const KGraph> load(const std::string& path,
                                            SourcePolicy policy = SourcePolicy::Reject);

  std::size_t rank() const { return k_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t square_count() const { return square_count_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view id) const;
  std::optional<EdgeId> find_edge(std::string_view id) const;
  VertexId vertex_named(std::string_view id) const;  // throws GraphError
  EdgeId edge_named(std::string_view id) const;      // throws GraphError

  /// Edges of the given color with range v (vΛ^{e_i}), sorted by id.
  const std::vector<EdgeId>& incoming(VertexId v, std::uint32_t color) const;

  bool has_sources() const { return has_sources_; }
  /// Vertices whose projection vanishes once (KP4) is applied at sources:
  /// some color has no edges into v, or every edge of some color into v
  /// starts at such a vertex. Always false for graphs without sources.
  bool is_degenerate(VertexId v) const { return degenerate_[v]; }

  MultiDegree zero_degree() const { return MultiDegree(k_); }

  // ---- path arithmetic -------------------------------------------------

  Path vertex_path(VertexId v) const;
  Path edge_path(EdgeId e) const;

  /// The canonical path equal to an arbitrary composable edge word. `empty_range`
  /// names the vertex when the word is empty.
  Path canonicalize(std::span<const EdgeId> word,
                    std::optional<VertexId> empty_range = std::nullopt) const;

  /// λμ; requires r(μ) = s(λ).
  Path compose(const Path& lambda, const Path& mu) const;

  /// The middle factor ν of λ = μνρ with d(μ) = p, d(ν) = q - p.
  Path segment(const Path& lambda, const MultiDegree& p, const MultiDegree& q) const;

  /// vΛ^n in lexicographic order.
  std::vector<Path> paths_from(VertexId v, const MultiDegree& n) const;
  /// Λ^n, grouped by range vertex in vertex order.
  std::vector<Path> paths_of_degree(const MultiDegree& n) const;

  /// All (α, β) with μα = νβ and d(μα) = d(μ) ∨ d(ν), ordered by α.
  std::vector<std::pair<Path, Path>> min_common_extensions(const Path& mu, const Path& nu) const;

  /// Rewrites a word into the factorization whose color sequence is
  /// `colors` (a permutation of the word's colors).
  std::vector<EdgeId> arrange(std::span<const EdgeId> word,
                              std::span<const std::uint32_t> colors) const;

  /// The other factorization of the two-edge path left∘right, whose colors
  /// must differ.
  std::pair<EdgeId, EdgeId> exchange(EdgeId left, EdgeId right) const;

  /// "a.b.c" or the vertex id for a vertex.
  std::string format_path(const Path& p) const;
  /// Parses "id(.id)*" into a canonical path; a single vertex id is a vertex.
  Path parse_path(std::string_view text) const;

 private:
  KGraph() = default;

  static std::uint64_t pair_key(EdgeId a, EdgeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::size_t k_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::size_t square_count_ = 0;
  std::vector<std::vector<EdgeId>> incoming_;  // [v * k + color]
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  // (g, h) -> (h2, g2) for color(g) < color(h), and the inverse.
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> forward_;
  std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> backward_;
  bool has_sources_ = false;
  std::vector<bool> degenerate_;
};

using GraphPtr = std::shared_ptr<const KGraph>;

}  // namespace kpalg
