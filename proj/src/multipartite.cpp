#include "cliquepack/multipartite.hpp"

#include <algorithm>
#include <numeric>

namespace cliquepack {

PackingScalars compute_scalars(const MultipartiteProfile& profile, int r) {
  if (r < 3) throw PreconditionError("compute_scalars requires r >= 3");
  if (profile.part_count() < 1) throw PreconditionError("compute_scalars requires a nonempty profile");
  PackingScalars s;
  s.n = profile.order();
  s.r = r;
  s.profile = profile;
  s.e_G = profile.edge_count();
  s.e_H = profile.part_count() > 1 ? profile.without_largest().edge_count() : 0;

  const Rational nn(static_cast<long>(s.n) * s.n);
  const Rational rr(r);
  s.x1 = make_rational(profile.part(0), s.n);
  const Rational rest = 1 - s.x1;

  s.k_G = continuous_surplus(s.n, s.e_G, r);
  s.t_H = s.k_G + nn / (2 * (rr - 1) * (rr - 2)) - s.x1 * nn / (rr - 2) +
          s.x1 * s.x1 * (rr - 1) * nn / (2 * (rr - 2));
  s.k_H = s.k_G - s.x1 * nn / (rr - 1) + rr * s.x1 * s.x1 * nn / (2 * (rr - 1));

  const Rational direct_t_H = Rational(s.e_H) - (1 - 1 / (rr - 2)) * rest * rest * nn / 2;
  const Rational direct_k_H = Rational(s.e_H) - (1 - 1 / (rr - 1)) * rest * rest * nn / 2;
  if (direct_t_H != s.t_H || direct_k_H != s.k_H) {
    throw InvariantViolation("closed forms for t_H/k_H disagree with e(H) for profile " +
                             profile.to_string());
  }

  const Rational by_largest = 1 / (s.n * s.x1);
  s.alpha = sgn(rest) == 0 ? by_largest : std::min<Rational>(by_largest, (rr - 2) / (s.n * rest));
  return s;
}

// ---------------------------------------------------------------------------

namespace {

Rational product_of_parts(const MultipartiteProfile& profile, const std::vector<int>& type,
                          int skip_a = -1, int skip_b = -1) {
  Rational out = 1;
  for (int k : type) {
    if (k != skip_a && k != skip_b) out *= profile.part(k);
  }
  return out;
}

void expand_type(const std::vector<int>& type, const std::vector<int>& offsets,
                 const MultipartiteProfile& profile, const Rational& w, std::size_t depth,
                 Clique& current, FractionalPacking& out) {
  if (depth == type.size()) {
    out.weights.emplace(current, w);
    return;
  }
  const int part = type[depth];
  for (int v = offsets[part]; v < offsets[part] + profile.part(part); ++v) {
    current.push_back(v);
    expand_type(type, offsets, profile, w, depth + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Rational PartTypedPacking::value(const MultipartiteProfile& profile) const {
  Rational total;
  for (const auto& [type, w] : weights) total += w * product_of_parts(profile, type);
  return total;
}

std::map<std::pair<int, int>, Rational> PartTypedPacking::part_loads(
    const MultipartiteProfile& profile) const {
  std::map<std::pair<int, int>, Rational> loads;
  for (const auto& [type, w] : weights) {
    for (std::size_t a = 0; a < type.size(); ++a) {
      for (std::size_t b = a + 1; b < type.size(); ++b) {
        loads[{type[a], type[b]}] += w * product_of_parts(profile, type, type[a], type[b]);
      }
    }
  }
  return loads;
}

FractionalPacking PartTypedPacking::expand(const MultipartiteProfile& profile) const {
  std::vector<int> offsets(static_cast<std::size_t>(profile.part_count()) + 1, 0);
  std::partial_sum(profile.parts().begin(), profile.parts().end(), offsets.begin() + 1);
  FractionalPacking out;
  out.r = r;
  Clique current;
  for (const auto& [type, w] : weights) {
    if (sgn(w) != 0) expand_type(type, offsets, profile, w, 0, current, out);
  }
  return out;
}

namespace {

PartTypedPacking uniform_typed(const MultipartiteProfile& profile, int r) {
  if (profile.part_count() != r) {
    throw PreconditionError("uniform packing needs exactly r parts, profile " + profile.to_string() +
                            " has " + std::to_string(profile.part_count()));
  }
  PartTypedPacking out;
  out.r = r;
  std::vector<int> all(static_cast<std::size_t>(r));
  std::iota(all.begin(), all.end(), 0);
  const std::vector<int> largest(all.begin(), all.end() - 2);
  out.weights.emplace(all, 1 / product_of_parts(profile, largest));
  return out;
}

// Every pair of parts, weight 1: the identity map on E(H) as a 2-clique packing.
PartTypedPacking identity_typed(const MultipartiteProfile& profile) {
  PartTypedPacking out;
  out.r = 2;
  for (int i = 0; i < profile.part_count(); ++i) {
    for (int j = i + 1; j < profile.part_count(); ++j) out.weights.emplace(std::vector<int>{i, j}, 1);
  }
  return out;
}

// Shifts every part index of a packing of H = G - V1 by one into G's indexing.
std::vector<int> shifted(const std::vector<int>& type, bool prepend_largest) {
  std::vector<int> out;
  if (prepend_largest) out.push_back(0);
  for (int k : type) out.push_back(k + 1);
  return out;
}

Construction construct_rec(const MultipartiteProfile& profile, int r) {
  Construction out;
  out.packing.r = r;
  const int s = profile.part_count();
  if (r == 2) {
    // Only reached as the inner packing h for r = 3.
    out.packing = identity_typed(profile);
    out.branch = ConstructionCase::lifted;
    out.value = profile.edge_count();
    return out;
  }
  const PackingScalars sc = compute_scalars(profile, r);
  out.bound = 2 * sc.k_G / r;

  if (s <= r - 1) {
    out.branch = ConstructionCase::too_few_parts;
  } else if (s == r) {
    out.packing = uniform_typed(profile, r);
    out.branch = ConstructionCase::r_partite;
  } else {
    const MultipartiteProfile rest = profile.without_largest();
    const Construction inner = construct_rec(rest, r - 1);
    for (const auto& [type, w] : inner.packing.weights) {
      out.packing.weights[shifted(type, true)] += sc.alpha * w;
    }
    out.branch = ConstructionCase::lifted;
    out.value = out.packing.value(profile);
    if (out.value < out.bound) {
      const Rational coefficient = 1 - profile.part(0) * sc.alpha;
      if (sgn(coefficient) > 0 && sgn(sc.k_H) > 0) {
        const Construction g = construct_rec(rest, r);
        for (const auto& [type, w] : g.packing.weights) {
          out.packing.weights[shifted(type, false)] += coefficient * w;
        }
      }
      out.branch = ConstructionCase::combined;
    }
  }
  out.value = out.packing.value(profile);
  if (out.value < out.bound) {
    throw InvariantViolation("constructed packing of " + profile.to_string() + " at r=" +
                             std::to_string(r) + " has value " + to_string(out.value) +
                             " below 2k/r = " + to_string(out.bound));
  }
  return out;
}

}  // namespace

const char* to_string(ConstructionCase c) {
  switch (c) {
    case ConstructionCase::too_few_parts: return "too_few_parts";
    case ConstructionCase::r_partite: return "r_partite";
    case ConstructionCase::lifted: return "lifted";
    case ConstructionCase::combined: return "combined";
  }
  return "unknown";
}

Construction construct_typed_packing(const MultipartiteProfile& profile, int r) {
  if (r < 3) throw PreconditionError("construct_packing requires r >= 3");
  return construct_rec(profile, r);
}

FractionalPacking construct_packing(const MultipartiteProfile& profile, int r) {
  return construct_typed_packing(profile, r).packing.expand(profile);
}

FractionalPacking uniform_r_partite_packing(const MultipartiteProfile& profile, int r) {
  if (r < 2) throw PreconditionError("uniform packing requires r >= 2");
  return uniform_typed(profile, r).expand(profile);
}

FractionalPacking identity_edge_packing(const Graph& g) {
  FractionalPacking out;
  out.r = 2;
  for (auto [u, v] : g.edges()) out.weights.emplace(Clique{u, v}, 1);
  return out;
}

FractionalPacking lift_packing(const MultipartiteProfile& profile, int r, const FractionalPacking& h) {
  if (r < 3) throw PreconditionError("lift_packing requires r >= 3");
  if (profile.part_count() < 2) throw PreconditionError("lift_packing needs at least two parts");
  if (h.r != r - 1 && !h.weights.empty()) {
    throw PreconditionError("lift_packing expects an (r-1)-clique packing");
  }
  const MultipartiteProfile rest = profile.without_largest();
  if (auto check = verify_packing(complete_multipartite(rest), FractionalPacking{r - 1, h.weights}); !check) {
    throw PreconditionError("h is not a packing of H: " + check.message);
  }
  const Rational alpha = compute_scalars(profile, r).alpha;
  const int largest = profile.part(0);
  FractionalPacking out;
  out.r = r;
  for (const auto& [q, w] : h.weights) {
    for (Vertex v = 0; v < largest; ++v) {
      Clique k{v};
      for (Vertex u : q) k.push_back(u + largest);
      out.add(k, alpha * w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

MultipartiteProfile merge_step(const MultipartiteProfile& profile, int i, int j) {
  const int s = profile.part_count();
  if (i < 0 || j < 0 || i >= s || j >= s) throw PreconditionError("merge_step index out of range");
  if (i == j) throw PreconditionError("merge_step needs two distinct parts");
  if (profile.part(j) < 1) throw PreconditionError("merge_step source part is empty");
  if (profile.part(i) < profile.part(j)) throw PreconditionError("merge_step needs parts[i] >= parts[j]");
  std::vector<int> parts = profile.parts();
  parts[i] += 1;
  parts[j] -= 1;
  if (parts[j] == 0) parts.erase(parts.begin() + j);
  return MultipartiteProfile(std::move(parts));
}

std::vector<MultipartiteProfile> merge_to_largest(const MultipartiteProfile& profile) {
  std::vector<MultipartiteProfile> chain{profile};
  if (profile.part_count() == 0) return chain;
  const int cap = profile.part(0);
  while (true) {
    const auto& cur = chain.back();
    const auto first_small = std::find_if(cur.parts().begin(), cur.parts().end(),
                                          [cap](int p) { return p < cap; });
    const int i = static_cast<int>(first_small - cur.parts().begin());
    const int j = cur.part_count() - 1;
    if (i >= j) break;  // at most one part below the cap
    chain.push_back(merge_step(cur, i, j));
  }
  return chain;
}

// ---------------------------------------------------------------------------

Graph abc_graph(int n, int t) {
  if (n <= 0 || n % 6 != 0 || t < 0 || t % 6 != 0 || 5 * t > 3 * n) {
    throw PreconditionError("(n, t) = (" + std::to_string(n) + ", " + std::to_string(t) +
                            ") is not realizable: need 6 | n, 6 | t, 0 <= t <= 3n/5");
  }
  const int a = t;
  const int b = n / 2 - t / 6;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = u + 1; v < a; ++v) edges.emplace_back(u, v);
  }
  for (Vertex u = 0; u < n; ++u) {
    if (u >= a && u < a + b) continue;  // u in B
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

AbcExample concluding_example(int n, int t) {
  const Graph g = abc_graph(n, t);
  AbcExample ex;
  ex.n = n;
  ex.t = t;
  ex.size_a = t;
  ex.size_b = n / 2 - t / 6;
  ex.size_c = n / 2 - 5 * t / 6;
  ex.edges = g.edge_count();
  ex.k_integral = ex.edges - turan_edge_count(n, 2);
  const Rational tt(t), nq(n);
  ex.k_formula = 17 * tt * tt / 36 - tt / 2;
  ex.f_t = (tt * tt / 2 + tt * nq / 2 - tt * tt / 6) / 3;

  const Rational closed_edges = tt * (tt - 1) / 2 + nq * nq / 4 - tt * tt / 36;
  if (closed_edges != ex.edges) {
    throw InvariantViolation("edge count " + std::to_string(ex.edges) + " differs from closed form " +
                             to_string(closed_edges));
  }
  if (Rational(ex.k_integral) != ex.k_formula) {
    throw InvariantViolation("k from edge count differs from 17t^2/36 - t/2");
  }

  for (auto [u, v] : g.edges()) {
    VertexSet common = g.neighbors(u) & g.neighbors(v);
    if (common.empty()) continue;
    ++ex.edges_in_triangles;
    common.clear_up_to(v);
    ex.triangles += common.size();
  }

  ex.bc_edges_in_no_triangle = true;
  const int b_begin = ex.size_a, c_begin = ex.size_a + ex.size_b;
  for (Vertex b = b_begin; b < c_begin && ex.bc_edges_in_no_triangle; ++b) {
    for (Vertex c = c_begin; c < n; ++c) {
      if (!g.adjacent(b, c) || g.neighbors(b).intersects(g.neighbors(c))) {
        ex.bc_edges_in_no_triangle = false;
        break;
      }
    }
  }
  if (!ex.bc_edges_in_no_triangle) throw InvariantViolation("a B-C edge lies in a triangle");
  if (Rational(ex.edges_in_triangles) > 3 * ex.f_t) {
    throw InvariantViolation("edges lying in triangles exceed 3 f(t)");
  }
  return ex;
}

// ---------------------------------------------------------------------------

namespace {

void profiles_rec(int remaining, int max_part, int max_parts, std::vector<int>& current,
                  std::vector<MultipartiteProfile>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (static_cast<int>(current.size()) == max_parts) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    profiles_rec(remaining - p, p, max_parts, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<MultipartiteProfile> all_profiles(int n, int max_parts) {
  std::vector<MultipartiteProfile> out;
  if (n <= 0) return out;
  std::vector<int> current;
  profiles_rec(n, n, max_parts, current, out);
  return out;
}

}  // namespace cliquepack
