#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "instances.hpp"
#include "orthopoly/graph.hpp"

using namespace orthopoly;

TEST_CASE("parse edge-list text") {
  std::string doc = "8 12\n";
  for (auto [u, v] : cube_graph().edges) doc += std::to_string(u) + " " + std::to_string(v) + "\n";
  auto g = parse_graph(doc);
  CHECK(g.n == 8);
  CHECK(g.m() == 12);
  CHECK(g.edges == cube_graph().edges);
}

TEST_CASE("parse rejects self loops and duplicates") {
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0\n"), doctest::Contains("SelfLoop"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n1 0\n"), doctest::Contains("DuplicateEdge"), Error);
  CHECK_THROWS_AS(parse_graph("nonsense"), Error);
}

TEST_CASE("parse json document") {
  auto g = parse_graph(R"({"n": 3, "edges": [[0,1],[1,2]], "rotations": [[1],[0,2],[1]]})");
  CHECK(g.n == 3);
  CHECK(g.m() == 2);
  REQUIRE(g.input_rotations.size() == 3);
  CHECK(g.input_rotations[1] == std::vector<int>{0, 2});
}

TEST_CASE("check_cubic") {
  CHECK(check_cubic(cube_graph()));
  CHECK(check_cubic(k4_graph()));
  CHECK_FALSE(check_cubic(make_graph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("bipartition splits the cube into its two tetrahedral classes") {
  auto bip = bipartition(cube_graph());
  CHECK(bip.side[0] == 0);
  for (auto [u, v] : cube_graph().edges) CHECK(bip.side[u] != bip.side[v]);
  int pop = 0;
  for (int v = 0; v < 8; ++v) pop += bip.side[v];
  CHECK(pop == 4);
}

TEST_CASE("bipartition rejects K4 with an odd cycle witness") {
  CHECK_THROWS_WITH_AS(bipartition(k4_graph()), doctest::Contains("odd cycle"), Error);
}

TEST_CASE("bipartition of the hexagonal prism") {
  auto bip = bipartition(hex_prism_graph());
  for (auto [u, v] : hex_prism_graph().edges) CHECK(bip.side[u] != bip.side[v]);
}

TEST_CASE("connectivity helpers") {
  CHECK(is_connected(cube_graph()));
  CHECK(is_biconnected(cube_graph()));
  auto two = make_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two));
  auto chain = cube_chain_graph(2);
  CHECK(is_biconnected(chain));
}

TEST_CASE("two_cut_components on the cube stays at two") {
  auto rep = two_cut_components(cube_graph());
  CHECK(rep.max_components == 2);
}

TEST_CASE("two_cut_components flags the hub pair of the three-cube join") {
  auto rep = two_cut_components(three_cube_hub_graph());
  CHECK(rep.max_components == 3);
  CHECK(((rep.u == 24 && rep.v == 25) || (rep.u == 25 && rep.v == 24)));
}

TEST_CASE("two_cut_components on a 2-connected chain of cubes") {
  auto rep = two_cut_components(cube_chain_graph(2));
  CHECK(rep.max_components == 2);
}
