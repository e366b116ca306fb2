#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliquepack {

using Vertex = int;

/// Strictly increasing list of pairwise adjacent vertices.
using Clique = std::vector<Vertex>;

/// Undirected edge stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Fixed-capacity set of vertices backed by 64-bit words.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int capacity)
      : words_(static_cast<std::size_t>((capacity + 63) / 64), 0) {}

  bool contains(Vertex v) const {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const;
  /// Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const;
  Vertex first() const { return next(-1); }
  bool intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Removes every member <= v.
  void clear_up_to(Vertex v);

  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<Vertex> to_vector() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
  std::vector<std::uint64_t> words_;
};

inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

/// Finite simple undirected graph on {0, ..., n-1}. Immutable once built.
class Graph {
public:
  Graph() = default;
  /// Throws PreconditionError on self-loops, duplicates or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  static Graph empty(int n) { return Graph(n, {}); }

  int order() const { return n_; }
  long edge_count() const { return m_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// True iff every pair of listed vertices is adjacent.
  bool is_clique(std::span<const Vertex> vertices) const;
  bool is_independent(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_ = 0;
  long m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Part sizes of a complete multipartite graph, positive and non-increasing.
class MultipartiteProfile {
public:
  MultipartiteProfile() = default;
  /// Sorts the sizes; throws PreconditionError on a non-positive part.
  explicit MultipartiteProfile(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i]; }
  int order() const { return n_; }
  /// (n^2 - sum of squared part sizes) / 2.
  long edge_count() const;
  /// Drops the largest part.
  MultipartiteProfile without_largest() const;

  std::string to_string() const;

  friend bool operator==(const MultipartiteProfile&, const MultipartiteProfile&) = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// t_r(n): edges of the balanced complete r-partite graph on n vertices.
long turan_edge_count(int n, int r);
MultipartiteProfile turan_profile(int n, int r);

/// Parts occupy consecutive vertex blocks in profile order.
Graph complete_multipartite(const MultipartiteProfile& profile);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();
/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Every r-clique exactly once, in lexicographic order.
std::vector<Clique> enumerate_cliques(const Graph& g, int r);

/// Maximal classes of pairwise clones (non-adjacent, equal neighbourhoods).
/// Classes are sorted internally and ordered by their smallest vertex.
std::vector<std::vector<Vertex>> clone_classes(const Graph& g);

/// Profile of g when g is complete multipartite (up to relabelling).
std::optional<MultipartiteProfile> multipartite_profile(const Graph& g);

/// Text format: "n m", then m lines "u v". Lines starting with '#' are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace cliquepack
