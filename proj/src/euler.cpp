#include "orthopoly/euler.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace orthopoly {

namespace {
long long vkey(int u, int v, int k) {
  return (long long)std::min(u, v) * k + std::max(u, v);
}
const char* color_names[3] = {"X", "Y", "Z"};
int color_from_name(const std::string& s) {
  for (int c = 0; c < 3; ++c)
    if (s == color_names[c]) return c;
  fail(ErrorKind::MalformedInput, "bad color " + s);
}
}  // namespace

int EulerianTriangulation::apex(int t, int e) const {
  for (int i = 0; i < 3; ++i) {
    int c = tris[t].corner[i];
    if (c != edges[e].u && c != edges[e].v) return c;
  }
  fail(ErrorKind::InternalInvariantViolation, "degenerate triangle");
}

int EulerianTriangulation::edge_between(int u, int v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  for (int e : rot[u])
    if (other_end(e, u) == v) return e;
  return -1;
}

void EulerianTriangulation::rebuild_positions() {
  for (int v = 0; v < k; ++v) {
    for (int i = 0; i < (int)rot[v].size(); ++i) {
      auto& e = edges[rot[v][i]];
      if (e.u == v)
        e.pos_u = i;
      else
        e.pos_v = i;
    }
  }
}

void EulerianTriangulation::retrace_faces() {
  // Faces are orbits of (edge, endpoint) darts: from edge e arriving at v,
  // continue along the rotation-successor at v.
  rebuild_positions();
  std::map<std::array<int, 3>, std::pair<bool, int>> old_colors;
  for (const auto& t : tris) {
    auto key = t.corner;
    std::sort(key.begin(), key.end());
    old_colors[key] = {t.white, t.primal_vertex};
  }
  for (auto& e : edges) e.tri[0] = e.tri[1] = -1;
  std::vector<DTri> newtris;
  // dart = 2*edge + side, side 0 means "traverse from u to v"
  std::vector<char> seen(2 * edges.size(), 0);
  for (int d0 = 0; d0 < (int)(2 * edges.size()); ++d0) {
    if (seen[d0]) continue;
    std::vector<int> cyc_v, cyc_e;
    int d = d0;
    do {
      seen[d] = 1;
      int e = d >> 1;
      int from = (d & 1) ? edges[e].v : edges[e].u;
      int to = other_end(e, from);
      cyc_v.push_back(from);
      cyc_e.push_back(e);
      // continue: at `to`, take rotation successor of e
      int pos = edge_pos(e, to);
      int ne = rot[to][(pos + 1) % rot[to].size()];
      d = 2 * ne + (edges[ne].u == to ? 0 : 1);
    } while (d != d0);
    if (cyc_v.size() != 3)
      fail(ErrorKind::InternalInvariantViolation,
           "non-triangular orbit of length " + std::to_string(cyc_v.size()));
    DTri t;
    t.corner = {cyc_v[0], cyc_v[1], cyc_v[2]};
    t.edge = {cyc_e[0], cyc_e[1], cyc_e[2]};
    auto key = t.corner;
    std::sort(key.begin(), key.end());
    auto it = old_colors.find(key);
    if (it != old_colors.end()) {
      t.white = it->second.first;
      t.primal_vertex = it->second.second;
    }
    int id = (int)newtris.size();
    for (int e : t.edge) {
      if (edges[e].tri[0] == -1)
        edges[e].tri[0] = id;
      else
        edges[e].tri[1] = id;
    }
    newtris.push_back(t);
  }
  tris = std::move(newtris);
}

EulerianTriangulation dualize(const PlanarEmbedding& emb, const VertexBipartition& bip,
                              const EdgeColoring3& col, int root_vertex) {
  EulerianTriangulation d;
  d.k = static_cast<int>(emb.faces.size());
  if (root_vertex < 0 || root_vertex >= emb.g.n)
    fail(ErrorKind::MalformedInput, "root vertex out of range");

  std::unordered_set<long long> seen;
  d.edges.resize(emb.g.m());
  for (int e = 0; e < emb.g.m(); ++e) {
    int fa = emb.face_of_dart[2 * e], fb = emb.face_of_dart[2 * e + 1];
    if (fa == fb)
      fail(ErrorKind::NotPolyhedral, "self-loop in the dual: graph has a cut vertex");
    if (!seen.insert(vkey(fa, fb, d.k)).second)
      fail(ErrorKind::NotPolyhedral, "parallel dual edges: graph has a 2-cut");
    d.edges[e] = {fa, fb, col.edge_color[e], e};
  }
  d.rot.assign(d.k, {});
  for (int f = 0; f < d.k; ++f)
    for (int dart : emb.faces[f]) d.rot[f].push_back(PlanarEmbedding::edge_of(dart));
  d.rebuild_positions();

  d.tris.resize(emb.g.n);
  for (int v = 0; v < emb.g.n; ++v) {
    if (emb.degree(v) != 3) fail(ErrorKind::NotPolyhedral, "dual face of degree != 3");
    EulerianTriangulation::DTri t;
    for (int i = 0; i < 3; ++i) {
      int dart = emb.rotations[v][i];
      t.corner[i] = emb.face_of_dart[dart];
      t.edge[i] = PlanarEmbedding::edge_of(emb.rotations[v][(i + 1) % 3]);
    }
    t.white = bip.side[v] == bip.side[root_vertex];
    t.primal_vertex = v;
    d.tris[v] = t;
    for (int e : t.edge) {
      if (d.edges[e].tri[0] == -1)
        d.edges[e].tri[0] = v;
      else if (d.edges[e].tri[1] == -1)
        d.edges[e].tri[1] = v;
      else
        fail(ErrorKind::InternalInvariantViolation, "edge on three triangles");
    }
  }
  for (int v = 0; v < d.k; ++v)
    if (d.degree(v) % 2 != 0) fail(ErrorKind::NotPolyhedral, "odd dual degree");
  d.root_triangle = root_vertex;
  d.parent_vertex.clear();
  d.parent_edge.clear();
  return d;
}

EulerianTriangulation triangulation_from_planar_graph(const UndirectedGraph& g,
                                                      const std::array<int, 3>* root_verts) {
  auto emb = embed_planar(g);
  EulerianTriangulation d;
  d.k = g.n;
  d.edges.resize(g.m());
  for (int e = 0; e < g.m(); ++e) d.edges[e] = {g.edges[e].first, g.edges[e].second, -1, -1};
  d.rot.assign(d.k, {});
  for (int v = 0; v < d.k; ++v) {
    if (emb.degree(v) % 2 != 0) fail(ErrorKind::MalformedInput, "odd degree; not Eulerian");
    for (int dart : emb.rotations[v]) d.rot[v].push_back(PlanarEmbedding::edge_of(dart));
  }
  d.retrace_faces();
  if ((int)d.tris.size() != 2 * d.k - 4)
    fail(ErrorKind::MalformedInput, "graph is not a maximal planar triangulation");

  // vertex 3-coloring by triangle closure; unique for Eulerian triangulations
  std::vector<int> vc(d.k, -1);
  vc[d.edges[0].u] = 0;
  vc[d.edges[0].v] = 1;
  std::queue<int> work;
  for (int t = 0; t < (int)d.tris.size(); ++t) work.push(t);
  int rounds = 0;
  while (!work.empty()) {
    if (++rounds > 16 * (int)d.tris.size())
      fail(ErrorKind::MalformedInput, "3-coloring did not converge; not Eulerian");
    int t = work.front();
    work.pop();
    int colored = 0, missing = -1, mask = 0;
    for (int i = 0; i < 3; ++i) {
      int c = vc[d.tris[t].corner[i]];
      if (c != -1) {
        ++colored;
        mask |= 1 << c;
      } else {
        missing = i;
      }
    }
    if (colored == 3) {
      if (mask != 7) fail(ErrorKind::MalformedInput, "graph is not 3-chromatic");
    } else if (colored == 2) {
      if ((mask & (mask - 1)) == 0) fail(ErrorKind::MalformedInput, "graph is not 3-chromatic");
      int c = 0;
      while (mask & (1 << c)) ++c;
      int v = d.tris[t].corner[missing];
      vc[v] = c;
      for (int e : d.rot[v]) {
        work.push(d.edges[e].tri[0]);
        work.push(d.edges[e].tri[1]);
      }
    } else if (colored == 1 || colored == 0) {
      // will be revisited once a neighbor forces progress
    }
  }
  for (int v = 0; v < d.k; ++v)
    if (vc[v] == -1) fail(ErrorKind::MalformedInput, "3-coloring incomplete");
  for (auto& e : d.edges) e.color = 3 - vc[e.u] - vc[e.v];

  // root face
  d.root_triangle = 0;
  if (root_verts) {
    std::array<int, 3> want = *root_verts;
    std::sort(want.begin(), want.end());
    d.root_triangle = -1;
    for (int t = 0; t < (int)d.tris.size(); ++t) {
      auto key = d.tris[t].corner;
      std::sort(key.begin(), key.end());
      if (key == want) d.root_triangle = t;
    }
    if (d.root_triangle == -1) fail(ErrorKind::MalformedInput, "requested root is not a face");
  }
  // face 2-coloring, root white
  std::vector<int> fc(d.tris.size(), -1);
  fc[d.root_triangle] = 1;
  std::vector<int> stack = {d.root_triangle};
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int e : d.tris[t].edge) {
      int o = d.other_tri(e, t);
      if (fc[o] == -1) {
        fc[o] = fc[t] ^ 1;
        stack.push_back(o);
      } else if (fc[o] == fc[t]) {
        fail(ErrorKind::MalformedInput, "face 2-coloring failed; not Eulerian");
      }
    }
  }
  for (int t = 0; t < (int)d.tris.size(); ++t) d.tris[t].white = fc[t] == 1;
  return d;
}

UndirectedGraph dual_graph(const EulerianTriangulation& d) {
  UndirectedGraph g;
  g.n = static_cast<int>(d.tris.size());
  for (const auto& e : d.edges) g.edges.push_back({e.tri[0], e.tri[1]});
  return g;
}

std::vector<TriangleRef> enumerate_triangles(const EulerianTriangulation& d) {
  std::unordered_map<long long, int> edge_ids;
  for (int e = 0; e < (int)d.edges.size(); ++e)
    edge_ids[vkey(d.edges[e].u, d.edges[e].v, d.k)] = e;
  std::map<std::array<int, 3>, int> faces;
  for (int t = 0; t < (int)d.tris.size(); ++t) {
    auto key = d.tris[t].corner;
    std::sort(key.begin(), key.end());
    faces[key] = t;
  }
  std::vector<TriangleRef> out;
  for (const auto& e : d.edges) {
    int u = e.u, v = e.v;
    // scan the smaller rotation for common neighbors above both endpoints
    int s = d.degree(u) <= d.degree(v) ? u : v;
    int o = s == u ? v : u;
    for (int ee : d.rot[s]) {
      int w = d.other_end(ee, s);
      if (w <= std::max(u, v)) continue;
      int e2 = d.edge_between(w, o);
      if (e2 == -1) continue;
      TriangleRef tr;
      tr.verts = {std::min(u, v), std::max(u, v), w};
      tr.edges = {edge_ids[vkey(u, v, d.k)], ee, e2};
      auto it = faces.find(tr.verts);
      if (it != faces.end()) {
        tr.is_face = true;
        tr.face_id = it->second;
      }
      out.push_back(tr);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TriangleRef& a, const TriangleRef& b) { return a.verts < b.verts; });
  return out;
}

SeparatingTriangleTree separating_tree(const EulerianTriangulation& d) {
  SeparatingTriangleTree tree;
  auto all = enumerate_triangles(d);
  std::vector<char> edge_on_sep(d.edges.size(), 0);
  for (const auto& t : all) {
    if (t.is_face) continue;
    SeparatingTriangleTree::SepTriangle s;
    s.verts = t.verts;
    s.edges = t.edges;
    tree.seps.push_back(s);
    for (int e : t.edges) edge_on_sep[e] = 1;
  }

  // Regions: connected components of the face adjacency graph with every
  // separating-triangle edge cut.
  tree.node_of_face.assign(d.tris.size(), -1);
  for (int f0 = 0; f0 < (int)d.tris.size(); ++f0) {
    if (tree.node_of_face[f0] != -1) continue;
    int id = (int)tree.nodes.size();
    tree.nodes.push_back({});
    std::vector<int> stack = {f0};
    tree.node_of_face[f0] = id;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      tree.nodes[id].faces.push_back(f);
      for (int e : d.tris[f].edge) {
        if (edge_on_sep[e]) continue;
        int g = d.other_tri(e, f);
        if (g != -1 && tree.node_of_face[g] == -1) {
          tree.node_of_face[g] = id;
          stack.push_back(g);
        }
      }
    }
  }

  // Face-distance from the root face decides which side of a separating
  // triangle faces the default root.
  std::vector<int> dist(d.tris.size(), -1);
  std::queue<int> bfs;
  bfs.push(d.root_triangle);
  dist[d.root_triangle] = 0;
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (int e : d.tris[f].edge) {
      int g = d.other_tri(e, f);
      if (g != -1 && dist[g] == -1) {
        dist[g] = dist[f] + 1;
        bfs.push(g);
      }
    }
  }

  // Directed graph from the triangle-containment rule, bidirected elsewhere;
  // its strongly connected components are the region interiors.
  {
    std::vector<std::vector<int>> arcs(d.k);
    std::set<std::pair<int, int>> directed;  // (inside u -> corner v): drop reverse arc
    auto orient_triangle = [&](const std::array<int, 3>& verts, const std::array<int, 3>& tedges,
                               bool outer) {
      // find, per edge, the inside face; walk each corner's inside arc
      for (int i = 0; i < 3; ++i) {
        int corner = verts[i];
        // the two triangle edges at this corner
        std::vector<int> at;
        for (int e : tedges)
          if (d.edges[e].u == corner || d.edges[e].v == corner) at.push_back(e);
        if (at.size() != 2) fail(ErrorKind::InternalInvariantViolation, "triangle corner edges");
        int p1 = d.edge_pos(at[0], corner), p2 = d.edge_pos(at[1], corner);
        int deg = d.degree(corner);
        // decide which arc (p1->p2 or p2->p1) is the inside side: check the
        // face just after at[0]
        int f_after = -1;
        {
          int e_next = d.rot[corner][(p1 + 1) % deg];
          int t0 = d.edges[at[0]].tri[0], t1 = d.edges[at[0]].tri[1];
          auto has_edge = [&](int t, int e) {
            return t != -1 && (d.tris[t].edge[0] == e || d.tris[t].edge[1] == e ||
                               d.tris[t].edge[2] == e);
          };
          f_after = has_edge(t0, e_next) ? t0 : t1;
        }
        // inside face at at[0]: the one of its two faces on the far side from
        // the root face (larger distance), or simply not the outer root face
        int ft0 = d.edges[at[0]].tri[0], ft1 = d.edges[at[0]].tri[1];
        int inside_face;
        if (outer)
          inside_face = (ft0 == d.root_triangle) ? ft1 : ft0;
        else
          inside_face = dist[ft0] < dist[ft1] ? ft1 : ft0;
        bool after_is_inside = (f_after == inside_face);
        int from = after_is_inside ? p1 : p2;
        int to = after_is_inside ? p2 : p1;
        for (int p = (from + 1) % deg; p != to; p = (p + 1) % deg) {
          int u = d.other_end(d.rot[corner][p], corner);
          directed.insert({u, corner});
        }
      }
    };
    for (auto& s : tree.seps) orient_triangle(s.verts, s.edges, false);
    {
      auto& rt = d.tris[d.root_triangle];
      auto verts = rt.corner;
      orient_triangle({verts[0], verts[1], verts[2]}, rt.edge, true);
    }
    // arc lists: directed holds (inside vertex -> containing corner) pairs,
    // which suppress the reverse arc; everything else is bidirected
    for (const auto& e : d.edges) {
      if (directed.count({e.u, e.v})) {
        arcs[e.u].push_back(e.v);
      } else if (directed.count({e.v, e.u})) {
        arcs[e.v].push_back(e.u);
      } else {
        arcs[e.u].push_back(e.v);
        arcs[e.v].push_back(e.u);
      }
    }
    // iterative Tarjan SCC
    tree.scc_of_vertex.assign(d.k, -1);
    std::vector<int> low(d.k, -1), num(d.k, -1), st;
    std::vector<char> on(d.k, 0);
    int timer = 0, comps = 0;
    struct F {
      int v;
      size_t i;
    };
    for (int s0 = 0; s0 < d.k; ++s0) {
      if (num[s0] != -1) continue;
      std::vector<F> fs{{s0, 0}};
      num[s0] = low[s0] = timer++;
      st.push_back(s0);
      on[s0] = 1;
      while (!fs.empty()) {
        F& f = fs.back();
        if (f.i < arcs[f.v].size()) {
          int w = arcs[f.v][f.i++];
          if (num[w] == -1) {
            num[w] = low[w] = timer++;
            st.push_back(w);
            on[w] = 1;
            fs.push_back({w, 0});
          } else if (on[w]) {
            low[f.v] = std::min(low[f.v], num[w]);
          }
        } else {
          int v = f.v;
          if (low[v] == num[v]) {
            while (true) {
              int w = st.back();
              st.pop_back();
              on[w] = 0;
              tree.scc_of_vertex[w] = comps;
              if (w == v) break;
            }
            ++comps;
          }
          fs.pop_back();
          if (!fs.empty()) low[fs.back().v] = std::min(low[fs.back().v], low[v]);
        }
      }
    }
  }

  tree.default_root_node = tree.node_of_face[d.root_triangle];
  // hook each separating triangle to the regions on its two sides
  for (int si = 0; si < (int)tree.seps.size(); ++si) {
    auto& s = tree.seps[si];
    int e0 = s.edges[0];
    int ft0 = d.edges[e0].tri[0], ft1 = d.edges[e0].tri[1];
    int f_out = dist[ft0] < dist[ft1] ? ft0 : ft1;
    int f_in = f_out == ft0 ? ft1 : ft0;
    s.outside_node = tree.node_of_face[f_out];
    s.inside_node = tree.node_of_face[f_in];
    s.inside_incident_white = d.tris[f_in].white;
    tree.nodes[s.inside_node].bounding_sep = si;
    tree.nodes[s.outside_node].child_seps.push_back(si);
  }
  return tree;
}

namespace {
// Path of separating triangles from a node up to the default root node.
std::vector<int> chain_to_root(const SeparatingTriangleTree& tree, int node) {
  std::vector<int> chain;
  int guard = 0;
  while (tree.nodes[node].bounding_sep != -1) {
    int s = tree.nodes[node].bounding_sep;
    chain.push_back(s);
    node = tree.seps[s].outside_node;
    if (++guard > (int)tree.seps.size() + 1)
      fail(ErrorKind::InternalInvariantViolation, "separating-triangle nesting is not a tree");
  }
  return chain;
}
}  // namespace

Parity triangle_parity(const EulerianTriangulation& d, const SeparatingTriangleTree& tree,
                       const std::array<int, 3>& sep_verts, int root_face) {
  auto key = sep_verts;
  std::sort(key.begin(), key.end());
  int si = -1;
  for (int i = 0; i < (int)tree.seps.size(); ++i)
    if (tree.seps[i].verts == key) si = i;
  if (si == -1) fail(ErrorKind::NotSeparating, "triangle is a face or absent");
  const auto& s = tree.seps[si];
  // side of the triangle away from the root face
  int rnode = tree.node_of_face[root_face];
  bool root_inside = false;
  for (int c : chain_to_root(tree, rnode))
    if (c == si) root_inside = true;
  bool away_white = root_inside ? !s.inside_incident_white : s.inside_incident_white;
  bool root_white = d.tris[root_face].white;
  return away_white == root_white ? Parity::Even : Parity::Odd;
}

std::vector<PackagedComponent> package_components(const EulerianTriangulation& d,
                                                  const SeparatingTriangleTree& tree,
                                                  int root_face) {
  int rnode = tree.node_of_face[root_face];
  auto root_chain = chain_to_root(tree, rnode);
  std::vector<char> on_chain(tree.seps.size(), 0);
  for (int c : root_chain) on_chain[c] = 1;

  std::vector<PackagedComponent> out;
  for (int ni = 0; ni < (int)tree.nodes.size(); ++ni) {
    const auto& node = tree.nodes[ni];
    PackagedComponent pc;
    pc.node = ni;
    // boundary triangles incident to this node
    std::vector<int> boundary = node.child_seps;
    if (node.bounding_sep != -1) boundary.push_back(node.bounding_sep);
    // outer triangle after re-rooting toward root_face: the boundary triangle
    // whose far side leads to the root node, or root_face itself.
    int outer_sep = -1;
    if (ni != rnode) {
      for (int s : boundary) {
        bool toward_root;
        if (s == node.bounding_sep)
          toward_root = !on_chain[s];  // the root lies outside unless it is nested in us
        else
          toward_root = on_chain[s];  // child triangle on the chain: root nested inside
        if (toward_root) {
          outer_sep = s;
          break;
        }
      }
      if (outer_sep == -1)
        fail(ErrorKind::InternalInvariantViolation, "no boundary triangle toward the root");
    }
    pc.outer_is_sep = outer_sep;

    // collect vertices
    std::vector<int> vmap(d.k, -1);
    EulerianTriangulation& c = pc.tri;
    auto touch = [&](int v) {
      if (vmap[v] == -1) {
        vmap[v] = c.k++;
        c.parent_vertex.push_back(v);
      }
    };
    for (int f : node.faces)
      for (int v : d.tris[f].corner) touch(v);
    for (int s : boundary)
      for (int v : tree.seps[s].verts) touch(v);

    // edges: those of included faces plus boundary triangle edges
    std::vector<int> emap(d.edges.size(), -1);
    auto touch_edge = [&](int e) {
      if (emap[e] == -1) {
        emap[e] = (int)c.edges.size();
        EulerianTriangulation::DEdge de;
        de.u = vmap[d.edges[e].u];
        de.v = vmap[d.edges[e].v];
        de.color = d.edges[e].color;
        de.primal_edge = d.edges[e].primal_edge;
        c.edges.push_back(de);
        c.parent_edge.push_back(e);
      }
    };
    for (int f : node.faces)
      for (int e : d.tris[f].edge) touch_edge(e);
    for (int s : boundary)
      for (int e : tree.seps[s].edges) touch_edge(e);

    // rotations: parent cyclic order restricted to included edges
    c.rot.assign(c.k, {});
    for (int cv = 0; cv < c.k; ++cv) {
      int v = c.parent_vertex[cv];
      for (int e : d.rot[v])
        if (emap[e] != -1) c.rot[cv].push_back(emap[e]);
    }
    c.retrace_faces();

    // face colors: copy for region faces; boundary faces get forced colors
    std::map<std::array<int, 3>, std::pair<bool, int>> color_of;
    for (int f : node.faces) {
      std::array<int, 3> key;
      for (int i = 0; i < 3; ++i) key[i] = vmap[d.tris[f].corner[i]];
      std::sort(key.begin(), key.end());
      color_of[key] = {d.tris[f].white, d.tris[f].primal_vertex};
    }
    int outer_id = -1;
    std::array<int, 3> outer_key;
    if (outer_sep == -1) {
      for (int i = 0; i < 3; ++i) outer_key[i] = vmap[d.tris[root_face].corner[i]];
    } else {
      for (int i = 0; i < 3; ++i) outer_key[i] = vmap[tree.seps[outer_sep].verts[i]];
    }
    std::sort(outer_key.begin(), outer_key.end());
    std::vector<int> known(c.tris.size(), 0);
    for (int t = 0; t < (int)c.tris.size(); ++t) {
      std::array<int, 3> key = c.tris[t].corner;
      std::sort(key.begin(), key.end());
      auto it = color_of.find(key);
      if (it != color_of.end()) {
        c.tris[t].white = it->second.first;
        c.tris[t].primal_vertex = it->second.second;
        known[t] = 1;
      } else {
        c.tris[t].primal_vertex = -1;
      }
      if (key == outer_key) outer_id = t;
    }
    if (outer_id == -1)
      fail(ErrorKind::InternalInvariantViolation, "outer face missing from component");
    // force boundary-face colors from neighbors across their edges
    bool changed = true;
    while (changed) {
      changed = false;
      for (int t = 0; t < (int)c.tris.size(); ++t) {
        if (known[t]) continue;
        for (int e : c.tris[t].edge) {
          int o = c.other_tri(e, t);
          if (o != -1 && known[o]) {
            c.tris[t].white = !c.tris[o].white;
            known[t] = 1;
            changed = true;
            break;
          }
        }
      }
    }
    // normalize: outer face white
    if (!c.tris[outer_id].white)
      for (auto& t : c.tris) t.white = !t.white;
    c.root_triangle = outer_id;
    out.push_back(std::move(pc));
  }
  return out;
}

RainbowReport check_rainbow(const EulerianTriangulation& d) {
  RainbowReport rep;
  // monochromatic subgraphs are 2-connected
  for (int col = 0; col < 3; ++col) {
    std::vector<int> map(d.k, -1);
    UndirectedGraph sub;
    for (const auto& e : d.edges) {
      if (e.color != col) continue;
      for (int v : {e.u, e.v})
        if (map[v] == -1) map[v] = sub.n++;
      sub.edges.push_back({map[e.u], map[e.v]});
    }
    if (sub.n == 0 || !is_biconnected(sub))
      rep.violations.push_back(std::string("monochromatic subgraph ") + color_names[col] +
                               " is not biconnected");
  }
  // every triangle carries all three colors; vertices alternate two colors
  for (const auto& t : d.tris) {
    int mask = 0;
    for (int e : t.edge) mask |= 1 << d.edges[e].color;
    if (mask != 7) rep.violations.push_back("triangle without all three colors");
  }
  for (int v = 0; v < d.k; ++v) {
    for (int i = 0; i < d.degree(v); ++i) {
      int a = d.rot[v][i], b = d.rot[v][(i + 2) % d.degree(v)];
      if (d.edges[a].color != d.edges[b].color) {
        rep.violations.push_back("colors do not alternate around vertex " + std::to_string(v));
        break;
      }
    }
  }
  // 4-cycles are monochromatic or two adjacent colors in the x-x-y-y pattern
  for (int u = 0; u < d.k; ++u) {
    for (int w = u + 1; w < d.k; ++w) {
      std::vector<std::pair<int, int>> common;  // (mid vertex, pair of edges)
      for (int e : d.rot[u]) {
        int a = d.other_end(e, u);
        int e2 = d.edge_between(a, w);
        if (e2 != -1) common.push_back({e, e2});
      }
      for (size_t i = 0; i < common.size(); ++i)
        for (size_t j = i + 1; j < common.size(); ++j) {
          int c1 = d.edges[common[i].first].color, c2 = d.edges[common[i].second].color;
          int c3 = d.edges[common[j].second].color, c4 = d.edges[common[j].first].color;
          // cycle colors in order: u -e1- a -e2- w -e3- b -e4- u
          bool mono = c1 == c2 && c2 == c3 && c3 == c4;
          bool twotwo = (c1 == c2 && c3 == c4 && c1 != c3) ||
                        (c2 == c3 && c4 == c1 && c2 != c4);
          if (!mono && !twotwo) {
            rep.violations.push_back("4-cycle with an invalid color pattern");
          }
        }
    }
  }
  // separating triangles are rainbow and their split sides stay Eulerian
  auto tree = separating_tree(d);
  for (const auto& s : tree.seps) {
    int mask = 0;
    for (int e : s.edges) mask |= 1 << d.edges[e].color;
    if (mask != 7) rep.violations.push_back("separating triangle missing a color");
  }
  for (const auto& pc : package_components(d, tree, d.root_triangle)) {
    for (int v = 0; v < pc.tri.k; ++v)
      if (pc.tri.degree(v) % 2 != 0) {
        rep.violations.push_back("split component is not Eulerian");
        break;
      }
  }
  return rep;
}

std::string dump_triangulation(const EulerianTriangulation& d) {
  nlohmann::json doc;
  doc["k"] = d.k;
  std::vector<std::pair<std::pair<int, int>, int>> es;
  for (const auto& e : d.edges)
    es.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, e.color});
  std::sort(es.begin(), es.end());
  auto edges = nlohmann::json::array();
  for (const auto& [uv, c] : es) edges.push_back({uv.first, uv.second, color_names[c]});
  doc["edges"] = std::move(edges);
  // faces with corners rotated smallest-first, sorted; orientation preserved
  auto canon = [](std::array<int, 3> c) {
    int r = 0;
    for (int i = 1; i < 3; ++i)
      if (c[i] < c[r]) r = i;
    return std::array<int, 3>{c[r], c[(r + 1) % 3], c[(r + 2) % 3]};
  };
  std::vector<std::pair<std::array<int, 3>, bool>> fs;
  for (const auto& t : d.tris) fs.push_back({canon(t.corner), t.white});
  std::sort(fs.begin(), fs.end());
  auto faces = nlohmann::json::array();
  for (const auto& [c, w] : fs) faces.push_back({c[0], c[1], c[2], w ? "white" : "blue"});
  doc["faces"] = std::move(faces);
  auto rc = canon(d.tris[d.root_triangle].corner);
  doc["root"] = {rc[0], rc[1], rc[2]};
  return doc.dump(1);
}

EulerianTriangulation load_triangulation(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("bad json: ") + e.what());
  }
  EulerianTriangulation d;
  if (!doc.contains("k") || !doc.contains("edges") || !doc.contains("faces"))
    fail(ErrorKind::MalformedInput, "dump needs k, edges, faces");
  d.k = doc["k"].get<int>();
  std::unordered_map<long long, int> eid;
  for (const auto& je : doc["edges"]) {
    EulerianTriangulation::DEdge e;
    e.u = je[0].get<int>();
    e.v = je[1].get<int>();
    e.color = color_from_name(je[2].get<std::string>());
    e.primal_edge = -1;
    if (e.u < 0 || e.v < 0 || e.u >= d.k || e.v >= d.k)
      fail(ErrorKind::MalformedInput, "edge endpoint out of range");
    eid[vkey(e.u, e.v, d.k)] = (int)d.edges.size();
    d.edges.push_back(e);
  }
  // rotations from oriented face corners: around each vertex, faces give the
  // successor relation between its incident edges
  std::vector<std::map<int, int>> succ(d.k);
  for (const auto& jf : doc["faces"]) {
    std::array<int, 3> cr = {jf[0].get<int>(), jf[1].get<int>(), jf[2].get<int>()};
    for (int i = 0; i < 3; ++i) {
      int prev = cr[(i + 2) % 3], v = cr[i], next = cr[(i + 1) % 3];
      auto it1 = eid.find(vkey(prev, v, d.k));
      auto it2 = eid.find(vkey(v, next, d.k));
      if (it1 == eid.end() || it2 == eid.end())
        fail(ErrorKind::MalformedInput, "face uses a missing edge");
      succ[v][it1->second] = it2->second;
    }
  }
  d.rot.assign(d.k, {});
  for (int v = 0; v < d.k; ++v) {
    if (succ[v].empty()) fail(ErrorKind::MalformedInput, "isolated vertex in dump");
    int e0 = succ[v].begin()->first, e = e0;
    do {
      d.rot[v].push_back(e);
      auto it = succ[v].find(e);
      if (it == succ[v].end()) fail(ErrorKind::MalformedInput, "broken rotation in dump");
      e = it->second;
    } while (e != e0 && (int)d.rot[v].size() <= (int)succ[v].size());
    if ((int)d.rot[v].size() != (int)succ[v].size())
      fail(ErrorKind::MalformedInput, "rotation does not close");
  }
  d.retrace_faces();
  // colors from the dump (retrace cannot know them)
  std::map<std::array<int, 3>, bool> white;
  for (const auto& jf : doc["faces"]) {
    std::array<int, 3> key = {jf[0].get<int>(), jf[1].get<int>(), jf[2].get<int>()};
    std::sort(key.begin(), key.end());
    white[key] = jf[3].get<std::string>() == "white";
  }
  for (auto& t : d.tris) {
    auto key = t.corner;
    std::sort(key.begin(), key.end());
    auto it = white.find(key);
    if (it == white.end()) fail(ErrorKind::MalformedInput, "traced face missing from dump");
    t.white = it->second;
  }
  if (doc.contains("root")) {
    std::array<int, 3> rk = {doc["root"][0].get<int>(), doc["root"][1].get<int>(),
                             doc["root"][2].get<int>()};
    std::sort(rk.begin(), rk.end());
    d.root_triangle = -1;
    for (int t = 0; t < (int)d.tris.size(); ++t) {
      auto key = d.tris[t].corner;
      std::sort(key.begin(), key.end());
      if (key == rk) d.root_triangle = t;
    }
    if (d.root_triangle == -1) fail(ErrorKind::MalformedInput, "root is not a face");
  }
  return d;
}

}  // namespace orthopoly
