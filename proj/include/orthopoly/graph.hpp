#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthopoly/error.hpp"

namespace orthopoly {

// Simple undirected graph with vertex ids 0..n-1. No loops or parallel edges.
struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  // Optional embedding data carried from a structured input document.
  // rotations[v] lists the neighbors of v in cyclic order, when supplied.
  std::vector<std::vector<int>> input_rotations;
  std::optional<std::pair<int, int>> input_outer_dart;

  int m() const { return static_cast<int>(edges.size()); }
  std::vector<std::vector<int>> adjacency() const;
  // adjacency with edge ids: per vertex, list of (neighbor, edge index)
  std::vector<std::vector<std::pair<int, int>>> incidence() const;
};

// Accepts either the edge-list text format ("n m" header then "u v" lines)
// or a JSON document {"n":..,"edges":[[u,v],..],...}.
UndirectedGraph parse_graph(const std::string& text);

bool check_cubic(const UndirectedGraph& g);

struct VertexBipartition {
  std::vector<int> side;  // 0 = A, 1 = B; side[0] == 0 by convention
};

// 2-colors a connected graph; throws NotBipartite with an odd cycle witness
// in the message.
VertexBipartition bipartition(const UndirectedGraph& g);

bool is_connected(const UndirectedGraph& g);
bool is_biconnected(const UndirectedGraph& g);

struct TwoCutReport {
  int max_components = 0;  // counting edge uv as an extra component if present
  int u = -1, v = -1;      // witnessing pair
};

// Exhaustive diagnostic over all vertex pairs. Quadratic-to-cubic; intended
// for desk-scale inputs.
TwoCutReport two_cut_components(const UndirectedGraph& g);

}  // namespace orthopoly
