#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliquepack/graph.hpp"
#include "cliquepack/packing.hpp"
#include "cliquepack/rational.hpp"

namespace cliquepack {

/// Edge surpluses of a complete multipartite G and of H = G minus its largest
/// part, all scaled by n^2 (x1 = |V1| / n).
struct PackingScalars {
  int n = 0;
  int r = 0;
  MultipartiteProfile profile;
  long e_G = 0;
  long e_H = 0;
  Rational x1;
  Rational k_G;    ///< e(G) - (1 - 1/(r-1)) n^2 / 2
  Rational t_H;    ///< e(H) - (1 - 1/(r-2)) (1 - x1)^2 n^2 / 2; e(H) when r = 3
  Rational k_H;    ///< e(H) - (1 - 1/(r-1)) (1 - x1)^2 n^2 / 2
  Rational alpha;  ///< min(1/(n x1), (r-2)/(n (1 - x1))); 1/(n x1) when x1 = 1
};

/// Evaluates the closed forms and checks t_H, k_H against direct edge counts
/// of H (InvariantViolation on mismatch). Requires r >= 3 and s >= 1.
PackingScalars compute_scalars(const MultipartiteProfile& profile, int r);

/// Packing of complete_multipartite(profile) whose weight depends only on the
/// set of parts a clique meets. Keys are sorted part indices.
struct PartTypedPacking {
  int r = 0;
  std::map<std::vector<int>, Rational> weights;

  Rational value(const MultipartiteProfile& profile) const;
  /// Load on any edge between parts i < j.
  std::map<std::pair<int, int>, Rational> part_loads(const MultipartiteProfile& profile) const;
  /// Per-clique form over the vertex labelling of complete_multipartite(profile).
  FractionalPacking expand(const MultipartiteProfile& profile) const;
};

/// Uniform weight 1 / (product of the r-2 largest parts) on every r-clique of a
/// complete r-partite graph; value parts[r-2] * parts[r-1]. Requires s == r.
FractionalPacking uniform_r_partite_packing(const MultipartiteProfile& profile, int r);

/// Weight 1 on every edge of g, viewed as a 2-clique packing.
FractionalPacking identity_edge_packing(const Graph& g);

/// Extends an (r-1)-clique packing h of H = complete_multipartite(profile
/// without its largest part) to G by f'(Q + v) = alpha h(Q) for each v in the
/// largest part. H's vertex i is G's vertex i + parts[0]. Throws
/// PreconditionError when h is not a feasible (r-1)-clique packing of H.
FractionalPacking lift_packing(const MultipartiteProfile& profile, int r, const FractionalPacking& h);

enum class ConstructionCase {
  too_few_parts,  ///< s <= r - 1: empty packing
  r_partite,      ///< s == r: uniform packing
  lifted,         ///< f' alone reaches 2k_G / r
  combined,       ///< f' + (1 - n x1 alpha) g
};

const char* to_string(ConstructionCase c);

struct Construction {
  PartTypedPacking packing;
  ConstructionCase branch = ConstructionCase::too_few_parts;
  Rational value;
  Rational bound;  ///< 2 k_G / r
};

/// Recursive packer on part types. Throws InvariantViolation if the result
/// falls below 2 k_G / r at any level of the recursion. Requires r >= 3.
Construction construct_typed_packing(const MultipartiteProfile& profile, int r);

/// Per-clique packing of complete_multipartite(profile) with value >= 2 k_G / r.
FractionalPacking construct_packing(const MultipartiteProfile& profile, int r);

/// Moves one vertex from part j to part i (dropping j if it empties) and
/// re-sorts. Requires i != j and parts[i] >= parts[j].
MultipartiteProfile merge_step(const MultipartiteProfile& profile, int i, int j);

/// Applies merge_step until every part but at most one equals the largest.
/// Returns all intermediate profiles, starting with the input.
std::vector<MultipartiteProfile> merge_to_largest(const MultipartiteProfile& profile);

/// Complete multipartite graph with parts A, B, C where A is also a clique:
/// |A| = t, |B| = n/2 - t/6, |C| = n/2 - 5t/6, A ∪ C completely joined to B.
struct AbcExample {
  int n = 0;
  int t = 0;
  int size_a = 0;
  int size_b = 0;
  int size_c = 0;
  long edges = 0;
  long k_integral = 0;  ///< e - t_2(n)
  Rational k_formula;   ///< 17 t^2 / 36 - t / 2
  Rational f_t;         ///< (t^2/2 + t n/2 - t^2/6) / 3
  long triangles = 0;
  long edges_in_triangles = 0;
  bool bc_edges_in_no_triangle = false;
};

/// Builds the graph and checks the edge-count identity and the B-C structure.
/// Requires n, t divisible by 6 and 0 <= t <= 3n/5.
AbcExample concluding_example(int n, int t);
Graph abc_graph(int n, int t);

/// All profiles with order n (and at most max_parts parts), parts non-increasing,
/// in reverse lexicographic order.
std::vector<MultipartiteProfile> all_profiles(int n, int max_parts);

}  // namespace cliquepack
