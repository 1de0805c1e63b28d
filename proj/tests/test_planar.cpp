#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "instances.hpp"
#include "orthopoly/planar.hpp"

using namespace orthopoly;

static void check_embedding_invariants(const PlanarEmbedding& emb) {
  size_t total = 0;
  for (const auto& f : emb.faces) total += f.size();
  CHECK(total == (size_t)emb.dart_count());
  CHECK((int)emb.faces.size() == emb.g.m() - emb.g.n + 2);
  // every dart appears in exactly one face
  std::vector<int> seen(emb.dart_count(), 0);
  for (const auto& f : emb.faces)
    for (int d : f) seen[d]++;
  for (int c : seen) CHECK(c == 1);
}

TEST_CASE("cube embeds with six quadrilateral faces") {
  auto emb = embed_planar(cube_graph());
  check_embedding_invariants(emb);
  CHECK(emb.faces.size() == 6);
  for (const auto& f : emb.faces) CHECK(f.size() == 4);
}

TEST_CASE("K33 is rejected") {
  CHECK_THROWS_WITH_AS(embed_planar(k33_graph()), doctest::Contains("NonPlanar"), Error);
}

TEST_CASE("K5 is rejected") {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) e.push_back({u, v});
  CHECK_THROWS_AS(embed_planar(make_graph(5, e)), Error);
}

TEST_CASE("truncated octahedron: six squares and eight hexagons") {
  auto emb = embed_planar(truncated_octahedron_graph());
  check_embedding_invariants(emb);
  int quads = 0, hexes = 0;
  for (const auto& f : emb.faces) {
    if (f.size() == 4) ++quads;
    if (f.size() == 6) ++hexes;
  }
  CHECK(quads == 6);
  CHECK(hexes == 8);
  CHECK(emb.faces.size() == 14);
}

TEST_CASE("embedding respects a supplied rotation system") {
  auto g = cube_graph();
  auto emb0 = embed_planar(g);
  g.input_rotations.assign(8, {});
  for (int v = 0; v < 8; ++v)
    for (int d : emb0.rotations[v]) g.input_rotations[v].push_back(emb0.head(d));
  auto emb1 = embed_planar(g);
  check_embedding_invariants(emb1);
  CHECK(emb1.faces.size() == 6);
  for (int v = 0; v < 8; ++v) CHECK(emb1.rotations[v] == emb0.rotations[v]);
}

TEST_CASE("a torus rotation system is rejected") {
  // K4 with rotations forced so that tracing gives genus 1
  auto g = k4_graph();
  g.input_rotations = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  bool planar_ok = true;
  try {
    auto emb = embed_planar(g);
    (void)emb;
  } catch (const Error& e) {
    planar_ok = false;
    CHECK(e.kind() == ErrorKind::NonPlanar);
  }
  CHECK_FALSE(planar_ok);
}

TEST_CASE("hexagonal prism and larger bipartite cubic graphs embed with even faces") {
  for (const auto& g : {hex_prism_graph(), truncated_octahedron_graph(), cube_graph()}) {
    auto emb = embed_planar(g);
    check_embedding_invariants(emb);
    for (const auto& f : emb.faces) CHECK(f.size() % 2 == 0);
  }
}

TEST_CASE("three_edge_coloring of the cube is canonical and proper") {
  auto g = cube_graph();
  auto emb = embed_planar(g);
  auto bip = bipartition(g);
  auto col = three_edge_coloring(emb, bip);
  // proper at vertices
  auto inc = g.incidence();
  for (int v = 0; v < g.n; ++v) {
    std::set<int> c;
    for (auto [w, e] : inc[v]) c.insert(col.edge_color[e]);
    CHECK(c.size() == 3);
  }
  // faces alternate exactly two colors
  for (const auto& f : emb.faces) {
    std::set<int> c;
    for (int d : f) c.insert(col.edge_color[PlanarEmbedding::edge_of(d)]);
    CHECK(c.size() == 2);
  }
  // canonical: faces at vertex 0 are colored X,Y,Z in rotation order
  for (int i = 0; i < 3; ++i) CHECK(col.face_color[emb.face_of_dart[emb.rotations[0][i]]] == i);
  // cube: opposite faces share a color, so each color class has 2 faces
  std::map<int, int> count;
  for (int c : col.face_color) count[c]++;
  for (auto [c, k] : count) CHECK(k == 2);
}

TEST_CASE("three_edge_coloring of the hexagonal prism") {
  auto g = hex_prism_graph();
  auto emb = embed_planar(g);
  auto col = three_edge_coloring(emb, bipartition(g));
  // the two hexagonal faces carry one color, squares alternate the other two
  std::vector<int> hex_faces;
  for (size_t f = 0; f < emb.faces.size(); ++f)
    if (emb.faces[f].size() == 6) hex_faces.push_back((int)f);
  REQUIRE(hex_faces.size() == 2);
  CHECK(col.face_color[hex_faces[0]] == col.face_color[hex_faces[1]]);
  std::set<int> square_colors;
  for (size_t f = 0; f < emb.faces.size(); ++f)
    if (emb.faces[f].size() == 4) square_colors.insert(col.face_color[f]);
  CHECK(square_colors.size() == 2);
  CHECK(square_colors.count(col.face_color[hex_faces[0]]) == 0);
}

TEST_CASE("three_edge_coloring refuses K4") {
  auto g = k4_graph();
  auto emb = embed_planar(g);
  VertexBipartition fake{std::vector<int>(4, 0)};
  CHECK_THROWS_AS(three_edge_coloring(emb, fake), Error);
}

TEST_CASE("embedding is deterministic") {
  auto a = embed_planar(truncated_octahedron_graph());
  auto b = embed_planar(truncated_octahedron_graph());
  CHECK(a.rotations == b.rotations);
  CHECK(a.outer_face == b.outer_face);
}
