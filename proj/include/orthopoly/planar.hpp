#pragma once

#include <vector>

#include "orthopoly/graph.hpp"

namespace orthopoly {

// Darts: edge e yields darts 2e (as stored, u->v) and 2e+1 (v->u).
// rotations[v] holds the out-darts of v in cyclic order; faces are the orbits
// of d |-> rotation-successor of twin(d), each face kept to the same side of
// all its darts.
struct PlanarEmbedding {
  UndirectedGraph g;
  std::vector<std::vector<int>> rotations;
  std::vector<int> rot_next;  // per dart: next out-dart at the same tail
  std::vector<int> rot_prev;
  std::vector<std::vector<int>> faces;  // dart cycles
  std::vector<int> face_of_dart;
  int outer_face = 0;

  int dart_count() const { return 2 * g.m(); }
  int tail(int d) const { return d & 1 ? g.edges[d >> 1].second : g.edges[d >> 1].first; }
  int head(int d) const { return tail(d ^ 1); }
  static int twin(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int next_in_face(int d) const { return rot_next[twin(d)]; }

  int degree(int v) const { return static_cast<int>(rotations[v].size()); }
  // dart from u to v, or -1
  int dart_between(int u, int v) const;
};

// Planarity test + combinatorial embedding (left-right algorithm). Uses the
// rotation system supplied with the graph when present. Throws NonPlanar.
PlanarEmbedding embed_planar(const UndirectedGraph& g);

struct EdgeColoring3 {
  std::vector<int> edge_color;  // per edge: 0=X, 1=Y, 2=Z
  std::vector<int> face_color;  // per face of the embedding used to derive it
};

// Proper 3-edge-coloring of a 3-connected cubic bipartite plane graph via the
// unique 3-coloring of its faces. Canonical: the three faces at vertex 0 get
// colors X,Y,Z in rotation order. Throws FaceColoringFailed when the
// precondition does not hold.
EdgeColoring3 three_edge_coloring(const PlanarEmbedding& e, const VertexBipartition& bip);

}  // namespace orthopoly
