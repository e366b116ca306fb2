#include <doctest.h>

#include <sstream>

#include "cliquepack/graph.hpp"
#include "cliquepack/lab.hpp"
#include "cliquepack/multipartite.hpp"
#include "cliquepack/rational.hpp"
#include "oracles.hpp"

using namespace cliquepack;

TEST_CASE("turan_edge_count small cases") {
  CHECK(turan_edge_count(5, 2) == 6);
  CHECK(turan_edge_count(7, 3) == 16);
  CHECK(turan_edge_count(6, 6) == 15);
  CHECK(turan_edge_count(0, 3) == 0);
  CHECK(turan_edge_count(3, 5) == 3);
  CHECK_THROWS_AS(turan_edge_count(5, 0), PreconditionError);
}

TEST_CASE("turan_edge_count sits within the density bounds") {
  for (int n = 0; n <= 200; ++n) {
    for (int r = 1; r <= 10; ++r) {
      const Rational density_edges = make_rational(r - 1, r) * n * n / 2;
      const Rational t(turan_edge_count(n, r));
      CHECK(t <= density_edges);
      CHECK(t >= density_edges - make_rational(r, 8));
    }
  }
}

TEST_CASE("complete_multipartite examples") {
  CHECK(complete_multipartite(MultipartiteProfile({2, 2, 2})).edge_count() == 12);
  const Graph single = complete_multipartite(MultipartiteProfile({3}));
  CHECK(single.order() == 3);
  CHECK(single.edge_count() == 0);
  CHECK(complete_multipartite(MultipartiteProfile({3, 2, 2})).edge_count() == turan_edge_count(7, 3));
  // largest part first: vertices 0..2
  const Graph g = complete_multipartite(MultipartiteProfile({2, 3}));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 3));
  CHECK_THROWS_AS(MultipartiteProfile({2, 0}), PreconditionError);
}

TEST_CASE("multipartite edge count formula and degree sum") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : all_profiles(n, n)) {
      const Graph g = complete_multipartite(p);
      long squares = 0;
      for (int x : p.parts()) squares += x * x;
      CHECK(g.edge_count() == (n * n - squares) / 2);
      CHECK(g.edge_count() == p.edge_count());
      long degree_sum = 0;
      for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
      CHECK(degree_sum == 2 * g.edge_count());
      REQUIRE(multipartite_profile(g).has_value());
      CHECK(*multipartite_profile(g) == p);
    }
  }
}

TEST_CASE("enumerate_cliques examples") {
  CHECK(enumerate_cliques(complete_graph(4), 3).size() == 4);
  CHECK(enumerate_cliques(cycle_graph(5), 3).empty());
  const Graph octahedron = complete_multipartite(MultipartiteProfile({2, 2, 2}));
  const auto triangles = enumerate_cliques(octahedron, 3);
  CHECK(triangles.size() == 8);
  CHECK(triangles == oracle::cliques_by_subsets(octahedron, 3));
}

TEST_CASE("enumerate_cliques matches subset enumeration on random graphs") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const Graph g = random_gnp(n, make_rational(1 + static_cast<long>(rng.below(3)), 4), rng);
    for (int r = 2; r <= 5; ++r) {
      const auto got = enumerate_cliques(g, r);
      CHECK(got == oracle::cliques_by_subsets(g, r));
      for (const auto& q : got) CHECK(g.is_clique(q));
    }
  }
}

TEST_CASE("clone_classes examples") {
  const auto parts = clone_classes(complete_multipartite(MultipartiteProfile({3, 2, 2})));
  CHECK(parts == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4}, {5, 6}});
  CHECK(clone_classes(cycle_graph(5)).size() == 5);
  CHECK(clone_classes(complete_graph(4)).size() == 4);
}

TEST_CASE("clone_classes agrees with the definition") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const Graph g = oracle::graph_with_clones(n, rng);
    const auto classes = clone_classes(g);
    CHECK(classes == oracle::clones_by_definition(g));
    int covered = 0;
    for (const auto& cls : classes) {
      covered += static_cast<int>(cls.size());
      CHECK(g.is_independent(cls));
      for (Vertex v : cls) CHECK(g.neighbors(v) == g.neighbors(cls.front()));
    }
    CHECK(covered == n);
  }
}

TEST_CASE("graph construction rejects bad edges") {
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), PreconditionError);
  std::vector<Edge> dup{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(Graph(3, dup), PreconditionError);
  std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(Graph(3, range), PreconditionError);
}

TEST_CASE("graph text format") {
  std::istringstream ok("# a comment\n3 2\n0 1\n\n# another\n2 1\n");
  const Graph g = read_graph(ok);
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 2));

  std::ostringstream out;
  write_graph(out, petersen_graph());
  std::istringstream back(out.str());
  CHECK(read_graph(back) == petersen_graph());

  for (const char* bad : {"", "3\n", "3 1\n0 0\n", "3 1\n0 5\n", "3 2\n0 1\n1 0\n", "3 2\n0 1\n",
                          "3 1\n0 1\n1 2\n", "3 1\n0 1 2\n", "3 1\n0 x\n", "-1 0\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_graph(in), ParseError);
  }
}

TEST_CASE("named graphs") {
  const Graph p = petersen_graph();
  CHECK(p.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(enumerate_cliques(p, 3).empty());
  const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(two.edge_count() == 6);
  CHECK_FALSE(two.adjacent(2, 3));
  CHECK_FALSE(multipartite_profile(two).has_value());
}

TEST_CASE("rational text form") {
  CHECK(to_string(make_rational(2)) == "2/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("-7") == -7);
  for (const char* bad : {"", "1/0", "1.5", "a/b", "1/-2", "/3", "3/"}) {
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
  SplitMix64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Rational q = make_rational(static_cast<long>(rng.below(2001)) - 1000, 1 + static_cast<long>(rng.below(999)));
    CHECK(parse_rational(to_string(q)) == q);
  }
}
