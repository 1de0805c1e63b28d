#pragma once

#include <array>
#include <string>
#include <vector>

#include "orthopoly/planar.hpp"

namespace orthopoly {

// Dual of a 3-connected cubic bipartite plane graph: a maximal planar graph
// with all degrees even, triangle 2-coloring, and rainbow edge colors.
// Components split off at separating triangles use the same type; parent_*
// map their features back to the triangulation they came from.
struct EulerianTriangulation {
  int k = 0;

  struct DEdge {
    int u, v;
    int color;         // rainbow color 0..2
    int primal_edge;   // -1 when not backed by a primal edge
    int tri[2] = {-1, -1};
    int pos_u = -1, pos_v = -1;  // positions in rot[u] / rot[v]
  };
  std::vector<DEdge> edges;

  struct DTri {
    std::array<int, 3> corner;  // cyclic, consistent with rotations
    std::array<int, 3> edge;    // edge[i] joins corner[i] and corner[(i+1)%3]
    bool white = false;
    int primal_vertex = -1;
  };
  std::vector<DTri> tris;

  std::vector<std::vector<int>> rot;  // per vertex: incident edge ids, cyclic
  int root_triangle = 0;

  // back-pointers for packaged components
  std::vector<int> parent_vertex;
  std::vector<int> parent_edge;

  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int other_end(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
  int edge_pos(int e, int v) const { return edges[e].u == v ? edges[e].pos_u : edges[e].pos_v; }
  int other_tri(int e, int t) const { return edges[e].tri[0] == t ? edges[e].tri[1] : edges[e].tri[0]; }
  int tri_corner_index(int t, int v) const {
    for (int i = 0; i < 3; ++i)
      if (tris[t].corner[i] == v) return i;
    return -1;
  }
  int apex(int t, int e) const;          // corner of t not on edge e
  int edge_between(int u, int v) const;  // -1 if absent
  void rebuild_positions();
  void retrace_faces();  // rebuild tris/edge.tri from rotations (keeps colors by corner set)
};

EulerianTriangulation dualize(const PlanarEmbedding& emb, const VertexBipartition& bip,
                              const EdgeColoring3& col, int root_vertex);

// Ingest a maximal planar graph with even degrees as an Eulerian
// triangulation: embeds it, derives the rainbow partition from the unique
// 3-vertex-coloring, and 2-colors faces with the root face white.
EulerianTriangulation triangulation_from_planar_graph(const UndirectedGraph& g,
                                                      const std::array<int, 3>* root_verts = nullptr);

// The cubic graph dual to a triangulation (vertices = faces of d).
UndirectedGraph dual_graph(const EulerianTriangulation& d);

struct TriangleRef {
  std::array<int, 3> verts;  // sorted
  std::array<int, 3> edges;
  bool is_face = false;
  int face_id = -1;  // when is_face
};

// All 3-cycles; the non-face ones are the separating triangles.
std::vector<TriangleRef> enumerate_triangles(const EulerianTriangulation& d);

struct SeparatingTriangleTree {
  struct SepTriangle {
    std::array<int, 3> verts;
    std::array<int, 3> edges;
    int inside_node = -1, outside_node = -1;
    bool inside_incident_white = false;  // color of the three inside-incident faces
  };
  struct Node {
    std::vector<int> faces;      // region face ids of the parent triangulation
    int bounding_sep = -1;       // index into seps; -1 for the default-root node
    std::vector<int> child_seps;
  };
  std::vector<SepTriangle> seps;
  std::vector<Node> nodes;
  std::vector<int> node_of_face;
  std::vector<int> scc_of_vertex;  // strongly connected component ids (diagnostic)
  int default_root_node = 0;
};

SeparatingTriangleTree separating_tree(const EulerianTriangulation& d);

enum class Parity { Even, Odd };

// Parity of a separating triangle relative to a chosen root face; throws
// NotSeparating when the triple spans a face.
Parity triangle_parity(const EulerianTriangulation& d, const SeparatingTriangleTree& tree,
                       const std::array<int, 3>& sep_verts, int root_face);

// One packaged 4-connected component per tree node, re-rooted so that the
// component on the path toward root_face exposes its boundary triangle (or
// root_face itself) as a white outer face.
struct PackagedComponent {
  EulerianTriangulation tri;        // parent_vertex/parent_edge filled in
  int node = -1;
  int outer_is_sep = -1;            // index into tree.seps, or -1 for the root component
};
std::vector<PackagedComponent> package_components(const EulerianTriangulation& d,
                                                  const SeparatingTriangleTree& tree,
                                                  int root_face);

struct RainbowReport {
  std::vector<std::string> violations;
  bool clean() const { return violations.empty(); }
};
RainbowReport check_rainbow(const EulerianTriangulation& d);

// Diagnostic dump format (vertex/edge/triangle tables) used by the oracle
// subcommand.
std::string dump_triangulation(const EulerianTriangulation& d);
EulerianTriangulation load_triangulation(const std::string& text);

}  // namespace orthopoly
