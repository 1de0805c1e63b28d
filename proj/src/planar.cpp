#include "orthopoly/planar.hpp"

#include <algorithm>
#include <queue>

namespace orthopoly {

int PlanarEmbedding::dart_between(int u, int v) const {
  for (int d : rotations[u])
    if (head(d) == v) return d;
  return -1;
}

namespace {

// ---------------------------------------------------------------------------
// Left-right planarity test with embedding extraction. Oriented edges are
// dart ids (2e / 2e+1); only the orientation chosen by the DFS is used.
// ---------------------------------------------------------------------------
class LeftRight {
 public:
  explicit LeftRight(const UndirectedGraph& g)
      : g_(g),
        n_(g.n),
        m_(g.m()),
        inc_(g.incidence()),
        height_(n_, -1),
        parent_edge_(n_, -1),
        oriented_(m_, -1),
        lowpt_(2 * m_, 0),
        lowpt2_(2 * m_, 0),
        nesting_(2 * m_, 0),
        ref_(2 * m_, -1),
        side_(2 * m_, 1),
        lowpt_edge_(2 * m_, -1),
        stack_bottom_(2 * m_, 0),
        dg_(n_) {}

  bool run() {
    if (n_ > 2 && m_ > 3 * n_ - 6) return false;
    orient();
    for (int v = 0; v < n_; ++v) {
      order_adjacency(v);
    }
    for (int r : roots_)
      if (!test_dfs(r)) return false;
    for (int v = 0; v < n_; ++v)
      for (int oe : dg_[v]) nesting_[oe] *= resolve_sign(oe);
    for (int v = 0; v < n_; ++v) order_adjacency(v);
    build_embedding();
    return true;
  }

  // rotation lists after a successful run
  std::vector<std::vector<int>> rotations() const {
    std::vector<std::vector<int>> rot(n_);
    for (int v = 0; v < n_; ++v) {
      int start = first_he_[v];
      if (start == -1) continue;
      int d = start;
      do {
        rot[v].push_back(d);
        d = next_he_[d];
      } while (d != start);
    }
    return rot;
  }

 private:
  int tail(int oe) const { return oe & 1 ? g_.edges[oe >> 1].second : g_.edges[oe >> 1].first; }
  int head(int oe) const { return tail(oe ^ 1); }

  void orient() {
    std::vector<std::pair<int, size_t>> st;
    for (int r = 0; r < n_; ++r) {
      if (height_[r] != -1) continue;
      roots_.push_back(r);
      height_[r] = 0;
      st.push_back({r, 0});
      while (!st.empty()) {
        auto& [v, idx] = st.back();
        if (idx < inc_[v].size()) {
          auto [w, e] = inc_[v][idx++];
          if (oriented_[e] != -1) continue;
          int oe = 2 * e + (g_.edges[e].first == v ? 0 : 1);
          oriented_[e] = oe;
          dg_[v].push_back(oe);
          lowpt_[oe] = height_[v];
          lowpt2_[oe] = height_[v];
          if (height_[w] == -1) {
            parent_edge_[w] = oe;
            height_[w] = height_[v] + 1;
            st.push_back({w, 0});
          } else {
            lowpt_[oe] = height_[w];
            finish_edge(oe, v);
          }
        } else {
          int v_done = v;
          st.pop_back();
          int pe = parent_edge_[v_done];
          if (pe != -1) finish_edge(pe, tail(pe));
        }
      }
    }
  }

  void finish_edge(int oe, int v) {
    nesting_[oe] = 2 * lowpt_[oe];
    if (lowpt2_[oe] < height_[v]) nesting_[oe] += 1;  // chordal
    int pe = parent_edge_[v];
    if (pe != -1) {
      if (lowpt_[oe] < lowpt_[pe]) {
        lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[oe]);
        lowpt_[pe] = lowpt_[oe];
      } else if (lowpt_[oe] > lowpt_[pe]) {
        lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[oe]);
      } else {
        lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[oe]);
      }
    }
  }

  void order_adjacency(int v) {
    std::sort(dg_[v].begin(), dg_[v].end(),
              [&](int a, int b) { return nesting_[a] < nesting_[b]; });
  }

  struct Interval {
    int low = -1, high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };
  struct ConflictPair {
    Interval L, R;
    void swap_sides() { std::swap(L, R); }
  };

  bool conflicting(const Interval& I, int b) const {
    return !I.empty() && lowpt_[I.high] > lowpt_[b];
  }

  int pair_lowest(const ConflictPair& P) const {
    if (P.L.empty()) return lowpt_[P.R.low];
    if (P.R.empty()) return lowpt_[P.L.low];
    return std::min(lowpt_[P.L.low], lowpt_[P.R.low]);
  }

  bool test_dfs(int root) {
    struct Frame {
      int v;
      size_t idx = 0;
      bool after_child = false;
    };
    std::vector<Frame> st;
    st.push_back({root});
    while (!st.empty()) {
      Frame& f = st.back();
      int v = f.v;
      int e = parent_edge_[v];
      if (f.idx < dg_[v].size()) {
        int ei = dg_[v][f.idx];
        if (!f.after_child) {
          stack_bottom_[ei] = S_.size();
          if (ei == parent_edge_[head(ei)]) {
            f.after_child = true;
            st.push_back({head(ei)});
            continue;
          }
          lowpt_edge_[ei] = ei;
          ConflictPair P;
          P.R = {ei, ei};
          S_.push_back(P);
        }
        f.after_child = false;
        if (lowpt_[ei] < height_[v]) {  // ei has a return edge
          if (f.idx == 0) {
            lowpt_edge_[e] = lowpt_edge_[ei];
          } else if (!add_constraints(ei, e)) {
            return false;
          }
        }
        ++f.idx;
      } else {
        st.pop_back();
        if (e != -1) remove_back_edges(e);
      }
    }
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair P;
    // merge return edges of ei into P.R
    while (true) {
      ConflictPair Q = S_.back();
      S_.pop_back();
      if (!Q.L.empty()) Q.swap_sides();
      if (!Q.L.empty()) return false;
      if (lowpt_[Q.R.low] > lowpt_[e]) {
        if (P.R.empty())
          P.R.high = Q.R.high;
        else
          ref_[P.R.low] = Q.R.high;
        P.R.low = Q.R.low;
      } else {
        ref_[Q.R.low] = lowpt_edge_[e];
      }
      if (S_.size() == stack_bottom_[ei]) break;
    }
    // merge conflicting return edges of earlier siblings into P.L
    while (!S_.empty() && (conflicting(S_.back().L, ei) || conflicting(S_.back().R, ei))) {
      ConflictPair Q = S_.back();
      S_.pop_back();
      if (conflicting(Q.R, ei)) Q.swap_sides();
      if (conflicting(Q.R, ei)) return false;
      ref_[P.R.low] = Q.R.high;
      if (Q.R.low != -1) P.R.low = Q.R.low;
      if (P.L.empty())
        P.L.high = Q.L.high;
      else
        ref_[P.L.low] = Q.L.high;
      P.L.low = Q.L.low;
    }
    if (!(P.L.empty() && P.R.empty())) S_.push_back(P);
    return true;
  }

  void remove_back_edges(int e) {
    int u = tail(e);
    while (!S_.empty() && pair_lowest(S_.back()) == height_[u]) {
      ConflictPair P = S_.back();
      S_.pop_back();
      if (P.L.low != -1) side_[P.L.low] = -1;
    }
    if (!S_.empty()) {
      ConflictPair P = S_.back();
      S_.pop_back();
      while (P.L.high != -1 && head(P.L.high) == u) P.L.high = ref_[P.L.high];
      if (P.L.high == -1 && P.L.low != -1) {
        ref_[P.L.low] = P.R.low;
        side_[P.L.low] = -1;
        P.L.low = -1;
      }
      while (P.R.high != -1 && head(P.R.high) == u) P.R.high = ref_[P.R.high];
      if (P.R.high == -1 && P.R.low != -1) {
        ref_[P.R.low] = P.L.low;
        side_[P.R.low] = -1;
        P.R.low = -1;
      }
      S_.push_back(P);
    }
    if (lowpt_[e] < height_[u]) {  // e has a return edge
      int hl = S_.back().L.high;
      int hr = S_.back().R.high;
      if (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr]))
        ref_[e] = hl;
      else
        ref_[e] = hr;
    }
  }

  int resolve_sign(int oe) {
    // unwind the ref chain, then fold signs back
    chain_.clear();
    int x = oe;
    while (x != -1 && ref_[x] != -1) {
      chain_.push_back(x);
      x = ref_[x];
    }
    for (size_t i = chain_.size(); i-- > 0;) {
      int y = chain_[i];
      side_[y] = side_[y] * side_[ref_[y]];
      ref_[y] = -1;
    }
    return side_[oe];
  }

  // -- embedding construction ------------------------------------------------
  void he_add_first(int v, int he) {
    if (first_he_[v] == -1) {
      first_he_[v] = he;
      next_he_[he] = prev_he_[he] = he;
      return;
    }
    he_insert_before(v, he, first_he_[v]);
    first_he_[v] = he;
  }
  void he_insert_after(int he, int ref) {
    int nx = next_he_[ref];
    next_he_[ref] = he;
    prev_he_[he] = ref;
    next_he_[he] = nx;
    prev_he_[nx] = he;
  }
  void he_insert_before(int v, int he, int ref) {
    he_insert_after(he, prev_he_[ref]);
    (void)v;
  }

  void build_embedding() {
    first_he_.assign(n_, -1);
    next_he_.assign(2 * m_, -1);
    prev_he_.assign(2 * m_, -1);
    left_ref_.assign(n_, -1);
    right_ref_.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      int prev = -1;
      for (int oe : dg_[v]) {
        if (prev == -1)
          he_add_first(v, oe);
        else
          he_insert_after(oe, prev);
        prev = oe;
      }
    }
    struct Frame {
      int v;
      size_t idx = 0;
    };
    std::vector<Frame> st;
    for (int r : roots_) {
      st.push_back({r});
      while (!st.empty()) {
        Frame& f = st.back();
        int v = f.v;
        if (f.idx < dg_[v].size()) {
          int ei = dg_[v][f.idx++];
          int w = head(ei);
          if (ei == parent_edge_[w]) {
            he_add_first(w, ei ^ 1);
            left_ref_[v] = ei;
            right_ref_[v] = ei;
            st.push_back({w});
          } else {
            if (side_[ei] == 1) {
              he_insert_after(ei ^ 1, right_ref_[w]);
            } else {
              he_insert_before(w, ei ^ 1, left_ref_[w]);
              left_ref_[w] = ei ^ 1;
            }
          }
        } else {
          st.pop_back();
        }
      }
    }
  }

  const UndirectedGraph& g_;
  int n_, m_;
  std::vector<std::vector<std::pair<int, int>>> inc_;
  std::vector<int> height_, parent_edge_, oriented_;
  std::vector<int> lowpt_, lowpt2_, nesting_, ref_;
  std::vector<int8_t> side_;
  std::vector<int> lowpt_edge_;
  std::vector<size_t> stack_bottom_;
  std::vector<std::vector<int>> dg_;
  std::vector<ConflictPair> S_;
  std::vector<int> roots_;
  std::vector<int> chain_;
  std::vector<int> first_he_, next_he_, prev_he_, left_ref_, right_ref_;
};

void trace_faces(PlanarEmbedding& emb) {
  int nd = emb.dart_count();
  emb.rot_next.assign(nd, -1);
  emb.rot_prev.assign(nd, -1);
  for (int v = 0; v < emb.g.n; ++v) {
    const auto& rot = emb.rotations[v];
    int k = static_cast<int>(rot.size());
    for (int i = 0; i < k; ++i) {
      emb.rot_next[rot[i]] = rot[(i + 1) % k];
      emb.rot_prev[rot[i]] = rot[(i + k - 1) % k];
    }
  }
  emb.faces.clear();
  emb.face_of_dart.assign(nd, -1);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (emb.face_of_dart[d0] != -1) continue;
    int fid = static_cast<int>(emb.faces.size());
    emb.faces.push_back({});
    int d = d0;
    do {
      emb.face_of_dart[d] = fid;
      emb.faces[fid].push_back(d);
      d = emb.next_in_face(d);
    } while (d != d0);
  }
}

void verify_planar_euler(const PlanarEmbedding& emb) {
  long long n = emb.g.n, m = emb.g.m(), f = emb.faces.size();
  if (n - m + f != 2)
    fail(ErrorKind::NonPlanar, "rotation system has genus > 0 (n-m+f = " +
                                   std::to_string(n - m + f) + ")");
}

PlanarEmbedding embed_from_rotations(const UndirectedGraph& g) {
  PlanarEmbedding emb;
  emb.g = g;
  emb.rotations.assign(g.n, {});
  // map (u,v) -> dart id for building rotation lists from neighbor lists
  std::vector<std::vector<std::pair<int, int>>> inc = g.incidence();
  for (int v = 0; v < g.n; ++v) {
    auto& given = g.input_rotations[v];
    if (given.size() != inc[v].size())
      fail(ErrorKind::MalformedInput, "rotation of vertex " + std::to_string(v) +
                                          " does not list its neighbors");
    std::vector<char> used(inc[v].size(), 0);
    for (int w : given) {
      bool found = false;
      for (size_t i = 0; i < inc[v].size(); ++i) {
        if (!used[i] && inc[v][i].first == w) {
          used[i] = 1;
          int e = inc[v][i].second;
          emb.rotations[v].push_back(2 * e + (g.edges[e].first == v ? 0 : 1));
          found = true;
          break;
        }
      }
      if (!found)
        fail(ErrorKind::MalformedInput,
             "rotation of vertex " + std::to_string(v) + " mentions non-neighbor");
    }
  }
  trace_faces(emb);
  verify_planar_euler(emb);
  return emb;
}

}  // namespace

PlanarEmbedding embed_planar(const UndirectedGraph& g) {
  if (!is_connected(g)) fail(ErrorKind::NotConnected, "embedding needs a connected graph");
  if (!g.input_rotations.empty()) {
    PlanarEmbedding emb = embed_from_rotations(g);
    if (g.input_outer_dart) {
      int d = emb.dart_between(g.input_outer_dart->first, g.input_outer_dart->second);
      if (d == -1) fail(ErrorKind::MalformedInput, "outer_face dart is not an edge");
      emb.outer_face = emb.face_of_dart[d];
    } else {
      emb.outer_face = g.m() > 0 ? emb.face_of_dart[0] : 0;
    }
    return emb;
  }
  LeftRight lr(g);
  if (!lr.run()) fail(ErrorKind::NonPlanar, "left-right test rejected the graph");
  PlanarEmbedding emb;
  emb.g = g;
  emb.rotations = lr.rotations();
  trace_faces(emb);
  verify_planar_euler(emb);
  emb.outer_face = g.m() > 0 ? emb.face_of_dart[0] : 0;
  return emb;
}

EdgeColoring3 three_edge_coloring(const PlanarEmbedding& emb, const VertexBipartition& bip) {
  (void)bip;
  const int F = static_cast<int>(emb.faces.size());
  for (const auto& f : emb.faces)
    if (f.size() % 2 != 0)
      fail(ErrorKind::FaceColoringFailed, "odd face; graph is not bipartite");
  for (int v = 0; v < emb.g.n; ++v)
    if (emb.degree(v) != 3) fail(ErrorKind::FaceColoringFailed, "graph is not cubic");

  std::vector<int> fc(F, -1);
  // Seed the three faces at vertex 0 with X,Y in rotation order; everything
  // else is forced by triangle closure in the dual.
  if (emb.g.n == 0) fail(ErrorKind::FaceColoringFailed, "empty graph");
  int d0 = emb.rotations[0][0], d1 = emb.rotations[0][1];
  fc[emb.face_of_dart[d0]] = 0;
  fc[emb.face_of_dart[d1]] = 1;
  if (emb.face_of_dart[d0] == emb.face_of_dart[d1])
    fail(ErrorKind::FaceColoringFailed, "repeated face around a vertex");

  // Worklist over primal vertices: each sees three faces; two colored force
  // the third. Vertices re-enter the queue whenever one of their faces gets
  // a color.
  std::queue<int> work;
  for (int d : emb.faces[emb.face_of_dart[d0]]) work.push(emb.tail(d));
  for (int d : emb.faces[emb.face_of_dart[d1]]) work.push(emb.tail(d));
  std::vector<int> vf(3);
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    for (int i = 0; i < 3; ++i) vf[i] = emb.face_of_dart[emb.rotations[v][i]];
    int colored = 0, missing = -1, mask = 0;
    for (int i = 0; i < 3; ++i) {
      if (fc[vf[i]] != -1) {
        ++colored;
        mask |= 1 << fc[vf[i]];
      } else {
        missing = i;
      }
    }
    if (colored == 3) {
      if (mask != 7) fail(ErrorKind::FaceColoringFailed, "clashing face colors at a vertex");
    } else if (colored == 2) {
      int c = 0;
      while (mask & (1 << c)) ++c;
      if (c > 2) fail(ErrorKind::FaceColoringFailed, "clashing face colors at a vertex");
      fc[vf[missing]] = c;
      for (int d : emb.faces[vf[missing]]) work.push(emb.tail(d));
    }
  }
  for (int f = 0; f < F; ++f)
    if (fc[f] == -1) fail(ErrorKind::FaceColoringFailed, "face coloring incomplete");

  EdgeColoring3 col;
  col.face_color = fc;
  col.edge_color.assign(emb.g.m(), -1);
  for (int e = 0; e < emb.g.m(); ++e) {
    int fa = emb.face_of_dart[2 * e], fb = emb.face_of_dart[2 * e + 1];
    if (fc[fa] == fc[fb]) fail(ErrorKind::FaceColoringFailed, "equal colors across an edge");
    col.edge_color[e] = 3 - fc[fa] - fc[fb];
  }
  return col;
}

}  // namespace orthopoly
