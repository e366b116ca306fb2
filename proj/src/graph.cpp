#include "cliquepack/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cliquepack/rational.hpp"

namespace cliquepack {

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexSet::next(Vertex v) const {
  const int start = v + 1;
  auto idx = static_cast<std::size_t>(start >> 6);
  if (idx >= words_.size()) return -1;
  std::uint64_t w = words_[idx] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w != 0) return static_cast<Vertex>(idx * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    if (++idx >= words_.size()) return -1;
    w = words_[idx];
  }
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void VertexSet::clear_up_to(Vertex v) {
  const auto full = static_cast<std::size_t>((v + 1) >> 6);
  for (std::size_t i = 0; i < full && i < words_.size(); ++i) words_[i] = 0;
  if (full < words_.size()) words_[full] &= ~std::uint64_t{0} << ((v + 1) & 63);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for (Vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
      throw PreconditionError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    const auto& nb = neighbors(u);
    for (Vertex v = nb.next(u); v >= 0; v = nb.next(v)) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::is_clique(std::span<const Vertex> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool Graph::is_independent(std::span<const Vertex> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

MultipartiteProfile::MultipartiteProfile(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw PreconditionError("profile parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

long MultipartiteProfile::edge_count() const {
  long squares = 0;
  for (int p : parts_) squares += static_cast<long>(p) * p;
  return (static_cast<long>(n_) * n_ - squares) / 2;
}

MultipartiteProfile MultipartiteProfile::without_largest() const {
  if (parts_.empty()) throw PreconditionError("empty profile has no largest part");
  return MultipartiteProfile(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string MultipartiteProfile::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

MultipartiteProfile turan_profile(int n, int r) {
  if (r < 1) throw PreconditionError("Turan graph needs r >= 1");
  if (n < 0) throw PreconditionError("negative vertex count");
  std::vector<int> parts;
  for (int i = 0; i < r; ++i) {
    const int size = n / r + (i < n % r ? 1 : 0);
    if (size > 0) parts.push_back(size);
  }
  return MultipartiteProfile(std::move(parts));
}

long turan_edge_count(int n, int r) { return turan_profile(n, r).edge_count(); }

Graph complete_multipartite(const MultipartiteProfile& profile) {
  const int n = profile.order();
  std::vector<int> block(n);
  int v = 0;
  for (int i = 0; i < profile.part_count(); ++i) {
    for (int j = 0; j < profile.part(i); ++j) block[v++] = i;
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (block[a] != block[b]) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

Graph complete_graph(int n) { return complete_multipartite(MultipartiteProfile(std::vector<int>(n, 1))); }

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex j = (i + 1) % n;
    edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  return Graph(n, edges);
}

Graph petersen_graph() {
  auto ordered = [](Vertex a, Vertex b) { return Edge{std::min(a, b), std::max(a, b)}; };
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(ordered(i, (i + 1) % 5));
    edges.push_back(ordered(i, i + 5));
    edges.push_back(ordered(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

// ---------------------------------------------------------------------------

namespace {

void extend_cliques(const Graph& g, int r, Clique& current, const VertexSet& candidates,
                    std::vector<Clique>& out) {
  if (static_cast<int>(current.size()) == r) {
    out.push_back(current);
    return;
  }
  for (Vertex v = candidates.first(); v >= 0; v = candidates.next(v)) {
    VertexSet next = candidates & g.neighbors(v);
    next.clear_up_to(v);
    if (next.size() + 1 < r - static_cast<int>(current.size())) continue;
    current.push_back(v);
    extend_cliques(g, r, current, next, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Clique> enumerate_cliques(const Graph& g, int r) {
  if (r < 1) throw PreconditionError("clique order must be positive");
  std::vector<Clique> out;
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all.insert(v);
  Clique current;
  extend_cliques(g, r, current, all, out);
  return out;
}

std::vector<std::vector<Vertex>> clone_classes(const Graph& g) {
  // Equal neighbourhoods already force non-adjacency (no self-loops).
  std::map<VertexSet, std::size_t> index;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto [it, inserted] = index.try_emplace(g.neighbors(v), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

std::optional<MultipartiteProfile> multipartite_profile(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const auto classes = clone_classes(g);
  std::vector<int> parts;
  for (const auto& cls : classes) {
    // Complete multipartite iff every vertex sees exactly the vertices outside its class.
    if (g.degree(cls.front()) != g.order() - static_cast<int>(cls.size())) return std::nullopt;
    parts.push_back(static_cast<int>(cls.size()));
  }
  return MultipartiteProfile(std::move(parts));
}

// ---------------------------------------------------------------------------

namespace {

bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) throw ParseError("missing header line 'n m'");
  long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'n m'");
    }
  }
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("line " + std::to_string(line_no) + ": invalid edge");
    }
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
  }
  if (next_data_line(in, line, line_no)) {
    throw ParseError("line " + std::to_string(line_no) + ": trailing data after edge list");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParseError("duplicate edge in edge list");
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace cliquepack
