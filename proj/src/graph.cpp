#include "orthopoly/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace orthopoly {

std::vector<std::vector<int>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<std::vector<std::pair<int, int>>> UndirectedGraph::incidence() const {
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int e = 0; e < m(); ++e) {
    auto [u, v] = edges[e];
    inc[u].push_back({v, e});
    inc[v].push_back({u, e});
  }
  return inc;
}

namespace {

void add_edge_checked(UndirectedGraph& g, long long u, long long v,
                      std::unordered_set<long long>& seen) {
  if (u < 0 || v < 0 || u >= g.n || v >= g.n)
    fail(ErrorKind::MalformedInput, "vertex id out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
  if (u == v) fail(ErrorKind::SelfLoop, "edge " + std::to_string(u) + "-" + std::to_string(v));
  long long key = std::min(u, v) * (long long)g.n + std::max(u, v);
  if (!seen.insert(key).second)
    fail(ErrorKind::DuplicateEdge, "edge " + std::to_string(u) + "-" + std::to_string(v));
  g.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
}

UndirectedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n, m;
  if (!(in >> n >> m)) fail(ErrorKind::MalformedInput, "missing 'n m' header");
  if (n < 0 || m < 0 || n > (1 << 28)) fail(ErrorKind::MalformedInput, "bad sizes in header");
  UndirectedGraph g;
  g.n = static_cast<int>(n);
  g.edges.reserve(m);
  std::unordered_set<long long> seen;
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) fail(ErrorKind::MalformedInput, "expected " + std::to_string(m) + " edges");
    add_edge_checked(g, u, v, seen);
  }
  return g;
}

UndirectedGraph parse_json_doc(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("bad json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    fail(ErrorKind::MalformedInput, "document needs \"n\" and \"edges\"");
  UndirectedGraph g;
  g.n = doc["n"].get<int>();
  if (g.n < 0) fail(ErrorKind::MalformedInput, "negative n");
  std::unordered_set<long long> seen;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) fail(ErrorKind::MalformedInput, "edge entries are pairs");
    add_edge_checked(g, e[0].get<long long>(), e[1].get<long long>(), seen);
  }
  if (doc.contains("rotations") && !doc["rotations"].is_null()) {
    const auto& rots = doc["rotations"];
    if (!rots.is_array() || (int)rots.size() != g.n)
      fail(ErrorKind::MalformedInput, "rotations must list all vertices");
    g.input_rotations.resize(g.n);
    for (int v = 0; v < g.n; ++v)
      for (const auto& w : rots[v]) g.input_rotations[v].push_back(w.get<int>());
  }
  if (doc.contains("outer_face") && !doc["outer_face"].is_null()) {
    const auto& d = doc["outer_face"];
    if (!d.is_array() || d.size() != 2) fail(ErrorKind::MalformedInput, "outer_face is a dart [u,v]");
    g.input_outer_dart = {d[0].get<int>(), d[1].get<int>()};
  }
  return g;
}

}  // namespace

UndirectedGraph parse_graph(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_doc(text);
    break;
  }
  return parse_edge_list(text);
}

bool check_cubic(const UndirectedGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    deg[u]++;
    deg[v]++;
  }
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != 3) return false;
  return true;
}

VertexBipartition bipartition(const UndirectedGraph& g) {
  auto adj = g.adjacency();
  std::vector<int> side(g.n, -1), parent(g.n, -1);
  std::queue<int> q;
  if (g.n == 0) return {side};
  side[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (side[w] == -1) {
        side[w] = side[u] ^ 1;
        parent[w] = u;
        q.push(w);
      } else if (side[w] == side[u]) {
        // Reconstruct an odd cycle through u and w as a witness.
        std::vector<int> pu, pw;
        for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
        for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
        std::reverse(pu.begin(), pu.end());
        std::reverse(pw.begin(), pw.end());
        size_t k = 0;
        while (k + 1 < pu.size() && k + 1 < pw.size() && pu[k + 1] == pw[k + 1]) ++k;
        std::string cyc;
        for (size_t i = pu.size(); i-- > k;) cyc += std::to_string(pu[i]) + " ";
        for (size_t i = k; i < pw.size(); ++i) cyc += std::to_string(pw[i]) + " ";
        fail(ErrorKind::NotBipartite, "odd cycle: " + cyc);
      }
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (side[v] == -1) fail(ErrorKind::NotConnected, "vertex " + std::to_string(v) + " unreachable");
  return {side};
}

bool is_connected(const UndirectedGraph& g) {
  if (g.n == 0) return true;
  auto adj = g.adjacency();
  std::vector<char> vis(g.n, 0);
  std::vector<int> stack = {0};
  vis[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n;
}

bool is_biconnected(const UndirectedGraph& g) {
  if (g.n < 3) return false;
  if (!is_connected(g)) return false;
  auto adj = g.adjacency();
  std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1);
  // iterative articulation-point scan
  std::vector<std::pair<int, size_t>> st;
  int timer = 0;
  int root_children = 0;
  st.push_back({0, 0});
  disc[0] = low[0] = timer++;
  while (!st.empty()) {
    auto& [u, idx] = st.back();
    if (idx < adj[u].size()) {
      int w = adj[u][idx++];
      if (disc[w] == -1) {
        parent[w] = u;
        if (u == 0) ++root_children;
        disc[w] = low[w] = timer++;
        st.push_back({w, 0});
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
    } else {
      st.pop_back();
      if (!st.empty()) {
        int p = st.back().first;
        low[p] = std::min(low[p], low[u]);
        if (p != 0 && low[u] >= disc[p]) return false;  // p is an articulation point
      }
    }
  }
  return root_children <= 1;
}

TwoCutReport two_cut_components(const UndirectedGraph& g) {
  auto adj = g.adjacency();
  TwoCutReport rep;
  std::vector<int> comp(g.n);
  std::vector<int> stack;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      std::fill(comp.begin(), comp.end(), -1);
      comp[u] = comp[v] = -2;
      int ncomp = 0;
      for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        ++ncomp;
        comp[s] = ncomp;
        stack.push_back(s);
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int w : adj[x])
            if (comp[w] == -1) {
              comp[w] = ncomp;
              stack.push_back(w);
            }
        }
      }
      bool uv_edge = false;
      for (int w : adj[u])
        if (w == v) uv_edge = true;
      int total = ncomp + (uv_edge ? 1 : 0);
      if (total > rep.max_components) {
        rep.max_components = total;
        rep.u = u;
        rep.v = v;
      }
    }
  }
  return rep;
}

}  // namespace orthopoly
