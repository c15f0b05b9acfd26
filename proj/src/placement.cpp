#include "lamina/placement.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace lamina {

TracedCurve trace_curve(const Curve& c) {
  const Multicurve& mc = c.as_multicurve();
  detail::Resolved r = detail::resolve_points(mc);
  const Triangulation& T = *r.T;
  std::vector<Triangulation::EdgeUse> uses(T.n_edges);
  for (int e = 0; e < T.n_edges; ++e) uses[e] = T.uses(e);

  TracedCurve tc;
  tc.T = &T;
  tc.surface = mc.surface;
  tc.weights = mc.w;
  long long total = mc.total_weight();
  tc.len = (int)total;
  tc.step_at.resize(T.n_edges);
  for (int e = 0; e < T.n_edges; ++e) tc.step_at[e].assign(mc.w[e], -1);

  int e0 = -1;
  for (int e = 0; e < T.n_edges && e0 < 0; ++e)
    if (mc.w[e]) e0 = e;
  require(e0 >= 0, ErrorKind::Internal, "tracing an empty curve");
  int e = e0;
  long long i = 0;
  int u = 0;
  do {
    int j = (int)tc.edge.size();
    tc.edge.push_back(e);
    tc.pos.push_back(i);
    tc.step_at[e][i] = j;
    const auto& ln = r.by_use[u][e][i];
    int tri = (u == 0) ? uses[e].tri_fwd : uses[e].tri_bwd;
    tc.tri_after.push_back(tri);
    tc.side_in_after.push_back(ln.side_self);
    tc.side_out_after.push_back(ln.side_other);
    int e2 = ln.edge;
    long long i2 = ln.idx;
    int u2;
    if (uses[e2].tri_fwd == tri && uses[e2].tri_bwd != tri) u2 = 1;
    else if (uses[e2].tri_bwd == tri && uses[e2].tri_fwd != tri) u2 = 0;
    else u2 = (uses[e2].side_fwd == ln.side_other) ? 1 : 0;
    e = e2;
    i = i2;
    u = u2;
  } while (!(e == e0 && i == 0 && u == 0));
  require((long long)tc.edge.size() == total, ErrorKind::Internal,
          "trace covered a proper subset; curve is not connected");
  return tc;
}

// ---------------------------------------------------------------------------
// ray-order intersection count

namespace {

struct Ray {
  const TracedCurve* tc;
  int step; // on edge[step]
  int dir;  // +1: subsequent crossings step+1,..; -1: step-1,..

  int tri() const {
    return dir > 0 ? tc->tri_after[step] : tc->tri_after[tc->prev(step)];
  }
  int side_in() const {
    return dir > 0 ? tc->side_in_after[step] : tc->side_out_after[tc->prev(step)];
  }
  int side_out() const {
    return dir > 0 ? tc->side_out_after[step] : tc->side_in_after[tc->prev(step)];
  }
  void advance() { step = tc->step_shift(step, dir); }
};

// Order of two rays entering the same triangle across the same side, by
// side-ccw position on that side: +1 if p sits at the larger position.
// Divergence transfers unchanged across hops (corner nesting reverses once,
// crossing to the next triangle's side reverses again). 0 = parallel.
int ray_cmp_entering(Ray p, Ray q, long long limit) {
  for (long long it = 0; it < limit; ++it) {
    int s = p.side_in();
    int po = p.side_out(), qo = q.side_out();
    if (po != qo) return po == (s + 1) % 3 ? +1 : -1;
    p.advance();
    q.advance();
  }
  return 0;
}

struct ChordEnd {
  int side;
  Ray ray; // exiting the triangle across `side`
};

// order of two chord ends on the boundary of one triangle; 0 = parallel tie
int cmp_end(const ChordEnd& x, const ChordEnd& y, long long limit) {
  if (x.side != y.side) return x.side < y.side ? -1 : +1;
  // exiting rays: compare on the far side of the edge, then flip (the two
  // sides traverse the edge in opposite directions)
  int r = ray_cmp_entering(x.ray, y.ray, limit);
  return -r;
}

bool chords_cross(const ChordEnd& a1, const ChordEnd& a2, const ChordEnd& b1,
                  const ChordEnd& b2, long long limit, bool& tie) {
  int c_a = cmp_end(a1, a2, limit);
  int c_b1a1 = cmp_end(b1, a1, limit), c_b1a2 = cmp_end(b1, a2, limit);
  int c_b2a1 = cmp_end(b2, a1, limit), c_b2a2 = cmp_end(b2, a2, limit);
  if (!c_a || !c_b1a1 || !c_b1a2 || !c_b2a1 || !c_b2a2) {
    tie = true; // a shared asymptotic end: realizable without a crossing
    return false;
  }
  tie = false;
  // x lies in the ccw boundary interval (a1 -> a2)?
  auto inside = [&](int c_x_a1, int c_x_a2) {
    if (c_a < 0) return c_x_a1 > 0 && c_x_a2 < 0;
    return c_x_a1 > 0 || c_x_a2 < 0;
  };
  return inside(c_b1a1, c_b1a2) != inside(c_b2a1, c_b2a2);
}

} // namespace

long long intersection_number(const Curve& a, const Curve& b) {
  require(a.surface() == b.surface(), ErrorKind::Domain,
          "intersection of curves on different surfaces");
  if (a == b) return 0;
  TracedCurve ta = trace_curve(a), tb = trace_curve(b);
  const Triangulation& T = *ta.T;
  long long limit = ta.len + tb.len + 8;

  std::vector<std::vector<int>> chords_a(T.tris.size()), chords_b(T.tris.size());
  for (int j = 0; j < ta.len; ++j) chords_a[ta.tri_after[j]].push_back(j);
  for (int j = 0; j < tb.len; ++j) chords_b[tb.tri_after[j]].push_back(j);

  long long count = 0;
  for (int t = 0; t < (int)T.tris.size(); ++t) {
    for (int ja : chords_a[t]) {
      int in_a = ta.side_in_after[ja];
      ChordEnd a1{in_a, Ray{&ta, ja, -1}};
      ChordEnd a2{ta.side_out_after[ja], Ray{&ta, ta.next(ja), +1}};
      for (int jb : chords_b[t]) {
        // A linked pair of strands is witnessed in every triangle of their
        // shared edge stretch; charge the crossing only at the stretch end
        // behind a's traversal (where b does not touch a's entry side).
        if (tb.side_in_after[jb] == in_a || tb.side_out_after[jb] == in_a)
          continue;
        ChordEnd b1{tb.side_in_after[jb], Ray{&tb, jb, -1}};
        ChordEnd b2{tb.side_out_after[jb], Ray{&tb, tb.next(jb), +1}};
        bool tie = false;
        if (chords_cross(a1, a2, b1, b2, limit, tie)) ++count;
      }
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// JointPosition

JointPosition JointPosition::build(std::vector<TracedCurve> curves) {
  require(!curves.empty(), ErrorKind::Usage, "no curves to place");
  JointPosition jp;
  jp.curves_ = std::move(curves);
  const Triangulation& T = *jp.curves_[0].T;
  for (const auto& c : jp.curves_)
    require(c.T == &T, ErrorKind::Domain, "curves on different surfaces");
  jp.order_.assign(T.n_edges, {});
  jp.idx_.resize(jp.curves_.size());
  for (int k = 0; k < (int)jp.curves_.size(); ++k)
    jp.idx_[k].assign(jp.curves_[k].len, -1);
  for (int e = 0; e < T.n_edges; ++e) {
    for (int k = 0; k < (int)jp.curves_.size(); ++k) {
      const auto& tc = jp.curves_[k];
      for (long long i = 0; i < tc.weights[e]; ++i) {
        int step = tc.step_at[e][i];
        jp.idx_[k][step] = (long long)jp.order_[e].size();
        jp.order_[e].push_back({k, step});
      }
    }
  }
  jp.initial_crossings();
  return jp;
}

void JointPosition::initial_crossings() {
  const Triangulation& T = *curves_[0].T;
  xs_.clear();
  on_chord_.clear();

  long long big = 2;
  for (auto& o : order_) big = std::max(big, (long long)o.size() + 2);
  const long long M = 3 * big;

  auto bpos = [&](int t, int k, int step, bool out_end) -> long long {
    const TracedCurve& tc = curves_[k];
    int side, edge_step;
    if (!out_end) {
      side = tc.side_in_after[step];
      edge_step = step;
    } else {
      side = tc.side_out_after[step];
      edge_step = tc.next(step);
    }
    int e = tc.edge[edge_step];
    long long q = idx_[k][edge_step];
    bool fwd = T.tris[t][side].fwd;
    long long ccw = fwd ? q : (long long)order_[e].size() - 1 - q;
    return side * big + ccw;
  };

  std::vector<std::vector<std::pair<int, int>>> chords(T.tris.size());
  for (int k = 0; k < (int)curves_.size(); ++k)
    for (int j = 0; j < curves_[k].len; ++j)
      chords[curves_[k].tri_after[j]].push_back({k, j});

  struct PerChord {
    std::vector<std::pair<long long, int>> hits; // (cyclic key, crossing id)
  };
  std::map<std::pair<int, int>, PerChord> per;

  for (int t = 0; t < (int)T.tris.size(); ++t) {
    const auto& ch = chords[t];
    for (size_t u = 0; u < ch.size(); ++u) {
      auto [ka, ja] = ch[u];
      long long p1 = bpos(t, ka, ja, false), p2 = bpos(t, ka, ja, true);
      for (size_t v = u + 1; v < ch.size(); ++v) {
        auto [kb, jb] = ch[v];
        if (kb == ka) continue;
        long long q1 = bpos(t, kb, jb, false), q2 = bpos(t, kb, jb, true);
        auto inside = [&](long long x) {
          return ((x - p1 + M) % M) < ((p2 - p1 + M) % M) && x != p1;
        };
        bool i1 = inside(q1), i2 = inside(q2);
        if (i1 == i2) continue;
        int id = (int)xs_.size();
        xs_.push_back({id, ka, ja, kb, jb, true});
        long long qin = i1 ? q1 : q2;
        long long pin = i1 ? p1 : p2; // the b-end inside (p1,p2) vs (p2,p1)
        (void)pin;
        per[{ka, ja}].hits.push_back({(qin - p1 + M) % M, id});
        long long pa_in = ((i1 ? p1 : p2)); // a-end inside (q1->q2)?
        (void)pa_in;
        auto insideb = [&](long long x) {
          return ((x - q1 + M) % M) < ((q2 - q1 + M) % M) && x != q1;
        };
        long long pin_b = insideb(p1) ? p1 : p2;
        per[{kb, jb}].hits.push_back({(pin_b - q1 + M) % M, id});
      }
    }
  }
  for (auto& [key, pc] : per) {
    std::sort(pc.hits.begin(), pc.hits.end());
    auto& lst = on_chord_[key];
    for (auto& [_, id] : pc.hits) lst.push_back(id);
  }
}

std::vector<int> JointPosition::crossings_along(int k) const {
  std::vector<int> seq;
  for (int j = 0; j < curves_[k].len; ++j) {
    auto it = on_chord_.find({k, j});
    if (it == on_chord_.end()) continue;
    for (int id : it->second)
      if (xs_[id].alive) seq.push_back(id);
  }
  return seq;
}

long long JointPosition::crossings_between(int a, int b) const {
  long long n = 0;
  for (const auto& x : xs_)
    if (x.alive && ((x.curve_a == a && x.curve_b == b) ||
                    (x.curve_a == b && x.curve_b == a)))
      ++n;
  return n;
}

long long JointPosition::total_crossings() const {
  long long n = 0;
  for (const auto& x : xs_)
    if (x.alive) ++n;
  return n;
}

namespace {
// chord of crossing x on curve k
int chord_of(const JointPosition::Crossing& x, int k) {
  if (x.curve_a == k) return x.step_a;
  return x.step_b;
}
bool involves(const JointPosition::Crossing& x, int k) {
  return x.curve_a == k || x.curve_b == k;
}
} // namespace

int JointPosition::next_crossing(int k, int xid) const {
  const auto& tc = curves_[k];
  int j = chord_of(xs_[xid], k);
  auto it = on_chord_.find({k, j});
  const auto& lst = it->second;
  size_t r = 0;
  while (lst[r] != xid) ++r;
  for (size_t s = r + 1; s < lst.size(); ++s)
    if (xs_[lst[s]].alive) return lst[s];
  for (int step = 1; step <= tc.len; ++step) {
    int jj = (j + step) % tc.len;
    auto it2 = on_chord_.find({k, jj});
    if (it2 == on_chord_.end()) continue;
    for (int id : it2->second)
      if (xs_[id].alive) return id;
  }
  return xid;
}

int JointPosition::prev_crossing(int k, int xid) const {
  const auto& tc = curves_[k];
  int j = chord_of(xs_[xid], k);
  auto it = on_chord_.find({k, j});
  const auto& lst = it->second;
  size_t r = 0;
  while (lst[r] != xid) ++r;
  for (int s = (int)r - 1; s >= 0; --s)
    if (xs_[lst[s]].alive) return lst[s];
  for (int step = 1; step <= tc.len; ++step) {
    int jj = ((j - step) % tc.len + tc.len) % tc.len;
    auto it2 = on_chord_.find({k, jj});
    if (it2 == on_chord_.end()) continue;
    const auto& l2 = it2->second;
    for (int s = (int)l2.size() - 1; s >= 0; --s)
      if (xs_[l2[s]].alive) return l2[s];
  }
  return xid;
}

std::vector<int> JointPosition::word_between(int k, int xid, int yid) const {
  const auto& tc = curves_[k];
  int jx = chord_of(xs_[xid], k), jy = chord_of(xs_[yid], k);
  std::vector<int> w;
  int steps = (jy - jx + tc.len) % tc.len;
  if (steps == 0 && xid != yid) {
    // same chord: nothing strictly between
    return w;
  }
  for (int d = 1; d <= steps; ++d) w.push_back(tc.edge[tc.step_shift(jx, d)]);
  return w;
}

bool JointPosition::try_bigon(int xid, int yid) {
  if (xid == yid) return false;
  auto &X = xs_[xid], &Y = xs_[yid];
  if (!X.alive || !Y.alive) return false;
  // same unordered pair of curves
  std::pair<int, int> pa = std::minmax(X.curve_a, X.curve_b);
  std::pair<int, int> pb = std::minmax(Y.curve_a, Y.curve_b);
  if (pa != pb || pa.first == pa.second) return false;
  int ka = pa.first, kb = pa.second;

  // canonicalize so that y follows x along ka
  int x = xid, y = yid;
  if (next_crossing(ka, x) != y) {
    std::swap(x, y);
    if (next_crossing(ka, x) != y) return false;
  }
  const auto& ta = curves_[ka];
  const auto& tb = curves_[kb];
  int jxa = chord_of(xs_[x], ka), jya = chord_of(xs_[y], ka);
  int jxb = chord_of(xs_[x], kb), jyb = chord_of(xs_[y], kb);
  int L = (jya - jxa + ta.len) % ta.len;
  // in-between points along ka: steps jxa+1 .. jxa+L
  // direction along kb: forward (y follows x) or backward
  bool fwd_ok = false, bwd_ok = false;
  int Lb_f = (jyb - jxb + tb.len) % tb.len;
  int Lb_b = (jxb - jyb + tb.len) % tb.len;
  if (next_crossing(kb, x) == y && Lb_f == L) {
    fwd_ok = true;
    for (int d = 1; d <= L && fwd_ok; ++d)
      if (ta.edge[ta.step_shift(jxa, d)] != tb.edge[tb.step_shift(jxb, d)])
        fwd_ok = false;
  }
  if (!fwd_ok && next_crossing(kb, y) == x && Lb_b == L) {
    bwd_ok = true;
    for (int d = 1; d <= L && bwd_ok; ++d)
      if (ta.edge[ta.step_shift(jxa, d)] != tb.edge[tb.step_shift(jxb, 1 - d)])
        bwd_ok = false;
  }
  if (!fwd_ok && !bwd_ok) return false;

  // swap the paired points along the stretch
  for (int d = 1; d <= L; ++d) {
    int sa = ta.step_shift(jxa, d);
    int sb = fwd_ok ? tb.step_shift(jxb, d) : tb.step_shift(jxb, 1 - d);
    int e = ta.edge[sa];
    require(tb.edge[sb] == e, ErrorKind::Internal, "bigon word mismatch");
    long long ia = idx_[ka][sa], ib = idx_[kb][sb];
    require(ia + 1 == ib || ib + 1 == ia, ErrorKind::Internal,
            "bigon strands are not adjacent on edge");
    std::swap(order_[e][ia], order_[e][ib]);
    idx_[ka][sa] = ib;
    idx_[kb][sb] = ia;
  }
  // delete the two crossings
  for (int id : {x, y}) {
    auto& C = xs_[id];
    C.alive = false;
    for (auto key : {std::pair<int, int>{C.curve_a, C.step_a},
                     std::pair<int, int>{C.curve_b, C.step_b}}) {
      auto& lst = on_chord_[key];
      lst.erase(std::remove(lst.begin(), lst.end(), id), lst.end());
      if (lst.empty()) on_chord_.erase(key);
    }
  }
  return true;
}

void JointPosition::reduce() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < curve_count() && !changed; ++k) {
      auto seq = crossings_along(k);
      for (size_t i = 0; i < seq.size() && !changed; ++i) {
        int x = seq[i], y = seq[(i + 1) % seq.size()];
        if (try_bigon(x, y)) changed = true;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// complementary cell structure

std::vector<JointPosition::Face> JointPosition::faces() const {
  const Triangulation& T = *curves_[0].T;
  int n_tris = (int)T.tris.size();

  // global faces via union-find over per-triangle cells
  std::vector<int> uf_parent;
  std::vector<long long> uf_chi;
  std::vector<std::vector<int>> uf_punc;
  std::vector<std::set<int>> uf_curves;
  std::function<int(int)> find = [&](int a) -> int {
    while (uf_parent[a] != a) a = uf_parent[a] = uf_parent[uf_parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      uf_chi[a] -= 1;
      return;
    }
    uf_parent[b] = a;
    uf_chi[a] += uf_chi[b] - 1;
    for (int p : uf_punc[b]) uf_punc[a].push_back(p);
    uf_curves[a].insert(uf_curves[b].begin(), uf_curves[b].end());
  };

  // per-triangle: local planar subdivision; record for each (side, arc index)
  // the global face id on its inner side, and assign punctures/labels
  // arc index along side s runs 0..m (m = points on that side)
  std::vector<std::vector<std::vector<int>>> side_arc_face(n_tris);

  for (int t = 0; t < n_tris; ++t) {
    // --- collect boundary points per side (side-ccw order)
    struct BPoint {
      int curve, step; // the crossing point (curve, edge-step)
      bool out_end;    // whether it is the out-end of chord (curve, step_prev)
      int node = -1;
    };
    std::vector<std::vector<BPoint>> pts(3);
    std::vector<std::pair<int, int>> chs; // chords in this triangle
    for (int k = 0; k < (int)curves_.size(); ++k)
      for (int j = 0; j < curves_[k].len; ++j)
        if (curves_[k].tri_after[j] == t) chs.push_back({k, j});
    for (auto [k, j] : chs) {
      const auto& tc = curves_[k];
      pts[tc.side_in_after[j]].push_back({k, j, false});
      pts[tc.side_out_after[j]].push_back({k, tc.next(j), true});
    }
    for (int s = 0; s < 3; ++s) {
      int e = T.tris[t][s].edge;
      bool fwd = T.tris[t][s].fwd;
      auto ccw_of = [&](const BPoint& p) {
        long long q = idx_[p.curve][p.step];
        return fwd ? q : (long long)order_[e].size() - 1 - q;
      };
      std::sort(pts[s].begin(), pts[s].end(),
                [&](const BPoint& a, const BPoint& b) {
                  return ccw_of(a) < ccw_of(b);
                });
    }

    // --- nodes: 3 corners, boundary points, crossings
    int n_nodes = 3;
    for (int s = 0; s < 3; ++s)
      for (auto& p : pts[s]) p.node = n_nodes++;
    std::map<int, int> xnode; // crossing id -> node
    for (auto [k, j] : chs) {
      auto it = on_chord_.find({k, j});
      if (it == on_chord_.end()) continue;
      for (int id : it->second)
        if (xs_[id].alive && !xnode.count(id)) xnode[id] = n_nodes++;
    }

    // --- edges (undirected), each with (u, v); half-edge h_out = 2*idx (u->v)
    struct GEdge {
      int u, v;
      int curve = -1; // owning curve for chord segments; -1 for boundary
      int side = -1;  // side for boundary arcs
      int arc_ix = -1;
    };
    std::vector<GEdge> ge;
    // rotation lists: ccw order of outgoing half-edges per node
    std::vector<std::vector<int>> rot(n_nodes);

    // boundary arcs, per side: corner_s, pts..., corner_{s+1}
    std::vector<std::vector<int>> side_arcs(3);
    for (int s = 0; s < 3; ++s) {
      std::vector<int> nodes;
      nodes.push_back(s); // corner s = start of side s
      for (auto& p : pts[s]) nodes.push_back(p.node);
      nodes.push_back((s + 1) % 3);
      for (size_t a = 0; a + 1 < nodes.size(); ++a) {
        int id = (int)ge.size();
        ge.push_back({nodes[a], nodes[a + 1], -1, s, (int)a});
        side_arcs[s].push_back(id);
      }
    }
    // chord segments: split each chord at its crossings (already ordered)
    // endpoint nodes of the chord:
    auto end_node = [&](int k, int j, bool out_end) {
      const auto& tc = curves_[k];
      int s = out_end ? tc.side_out_after[j] : tc.side_in_after[j];
      int stp = out_end ? tc.next(j) : j;
      for (auto& p : pts[s])
        if (p.curve == k && p.step == stp && p.out_end == out_end) return p.node;
      fail(ErrorKind::Internal, "chord endpoint not found");
    };
    std::map<std::pair<int, int>, std::vector<int>> chord_segs;
    for (auto [k, j] : chs) {
      std::vector<int> nodes;
      nodes.push_back(end_node(k, j, false));
      auto it = on_chord_.find({k, j});
      if (it != on_chord_.end())
        for (int id : it->second)
          if (xs_[id].alive) nodes.push_back(xnode[id]);
      nodes.push_back(end_node(k, j, true));
      auto& segs = chord_segs[{k, j}];
      for (size_t a = 0; a + 1 < nodes.size(); ++a) {
        int id = (int)ge.size();
        ge.push_back({nodes[a], nodes[a + 1], k, -1, -1});
        segs.push_back(id);
      }
    }

    // --- rotations
    // corners: [outgoing along side s, outgoing backward along side s-1]
    for (int s = 0; s < 3; ++s) {
      int sp = (s + 2) % 3;
      rot[s].push_back(2 * side_arcs[s].front());      // corner -> first
      rot[s].push_back(2 * side_arcs[sp].back() + 1);  // corner -> back along prev side
    }
    // boundary points: [forward along side, chord inward, backward]
    for (int s = 0; s < 3; ++s) {
      for (size_t i = 0; i < pts[s].size(); ++i) {
        int nd = pts[s][i].node;
        int arc_before = side_arcs[s][i];     // ends at nd
        int arc_after = side_arcs[s][i + 1];  // starts at nd
        // the chord segment incident to nd: first or last segment of its chord
        const BPoint& p = pts[s][i];
        int k = p.curve;
        int j = p.out_end ? curves_[k].prev(p.step) : p.step;
        auto& segs = chord_segs[{k, j}];
        int seg = p.out_end ? segs.back() : segs.front();
        int seg_out = (ge[seg].u == nd) ? 2 * seg : 2 * seg + 1;
        rot[nd].push_back(2 * arc_after);
        rot[nd].push_back(seg_out);
        rot[nd].push_back(2 * arc_before + 1);
      }
    }
    // crossings: ccw order [->a2, ->b2, ->a1, ->b1] with b1 inside ccw arc a1->a2
    {
      long long big = 2;
      for (auto& o : order_) big = std::max(big, (long long)o.size() + 2);
      const long long M = 3 * big;
      auto bpos2 = [&](int k, int step, bool out_end, int j) -> long long {
        const auto& tc = curves_[k];
        int side = out_end ? tc.side_out_after[j] : tc.side_in_after[j];
        int es = out_end ? tc.next(j) : j;
        int e = tc.edge[es];
        long long q = idx_[k][es];
        bool fwd = T.tris[t][side].fwd;
        long long ccw = fwd ? q : (long long)order_[e].size() - 1 - q;
        return side * big + ccw;
      };
      for (auto& [id, nd] : xnode) {
        const auto& X = xs_[id];
        int ka = X.curve_a, ja = X.step_a, kb = X.curve_b, jb = X.step_b;
        long long p1 = bpos2(ka, ja, false, ja), p2 = bpos2(ka, ja, true, ja);
        long long q1 = bpos2(kb, jb, false, jb);
        bool b1_inside = ((q1 - p1 + M) % M) < ((p2 - p1 + M) % M);
        // segment neighbors of nd along each chord
        auto seg_dir = [&](int k, int j, int rank_hint_id) -> std::pair<int, int> {
          auto& segs = chord_segs[{k, j}];
          auto& lst = on_chord_.at({k, j});
          int r = 0;
          {
            int rr = 0;
            for (int q : lst)
              if (xs_[q].alive) {
                if (q == rank_hint_id) break;
                ++rr;
              }
            r = rr;
          }
          // segs[r] ends at nd (toward in-end side), segs[r+1] starts at nd
          int toward_in = segs[r];
          int toward_out = segs[r + 1];
          int h_in = (ge[toward_in].u == nd) ? 2 * toward_in : 2 * toward_in + 1;
          int h_out = (ge[toward_out].u == nd) ? 2 * toward_out : 2 * toward_out + 1;
          return {h_in, h_out}; // outgoing half-edges toward chord start / end
        };
        auto [a_to_1, a_to_2] = seg_dir(ka, ja, id);
        auto [b_to_1, b_to_2] = seg_dir(kb, jb, id);
        if (b1_inside)
          rot[nd] = {a_to_2, b_to_2, a_to_1, b_to_1};
        else
          rot[nd] = {a_to_2, b_to_1, a_to_1, b_to_2};
      }
    }

    // --- face orbits: next(h) = rotation-predecessor of twin(h)
    int H = 2 * (int)ge.size();
    std::vector<int> rot_pos(H, -1), rot_node(H, -1);
    for (int nd = 0; nd < n_nodes; ++nd)
      for (size_t i = 0; i < rot[nd].size(); ++i) {
        rot_pos[rot[nd][i]] = (int)i;
        rot_node[rot[nd][i]] = nd;
      }
    auto nxt = [&](int h) {
      int tw = h ^ 1;
      int nd = rot_node[tw];
      int i = rot_pos[tw];
      int m = (int)rot[nd].size();
      return rot[nd][(i - 1 + m) % m];
    };
    std::vector<int> face_of(H, -1);
    int n_faces = 0;
    for (int h = 0; h < H; ++h) {
      if (face_of[h] != -1) continue;
      int cur = h;
      do {
        face_of[cur] = n_faces;
        cur = nxt(cur);
      } while (cur != h);
      ++n_faces;
    }
    // outer face: left face of the reversed first boundary arc of side 0
    int outer = face_of[2 * side_arcs[0][0] + 1];

    // map local interior faces to global uf cells
    std::vector<int> global_of(n_faces, -1);
    for (int f = 0; f < n_faces; ++f) {
      if (f == outer) continue;
      global_of[f] = (int)uf_parent.size();
      uf_parent.push_back((int)uf_parent.size());
      uf_chi.push_back(1);
      uf_punc.push_back({});
      uf_curves.push_back({});
    }

    // record side-arc faces for cross-edge gluing
    side_arc_face[t].assign(3, {});
    for (int s = 0; s < 3; ++s) {
      for (int a = 0; a < (int)side_arcs[s].size(); ++a) {
        int f = face_of[2 * side_arcs[s][a]];
        require(f != outer, ErrorKind::Internal, "inner face marked outer");
        side_arc_face[t][s].push_back(global_of[f]);
      }
    }
    // punctures at corners: the face left of the first arc of side s
    for (int s = 0; s < 3; ++s) {
      int f = face_of[2 * side_arcs[s][0]];
      uf_punc[global_of[f]].push_back(T.corners[t][s]);
    }
    // curve labels from chord segments
    for (auto& [key, segs] : chord_segs) {
      for (int sgid : segs) {
        for (int h : {2 * sgid, 2 * sgid + 1}) {
          int f = face_of[h];
          if (f != outer) uf_curves[global_of[f]].insert(key.first);
        }
      }
    }
  }

  // --- glue across edges
  for (int e = 0; e < T.n_edges; ++e) {
    auto u = T.uses(e);
    long long n = (long long)order_[e].size();
    auto& fa = side_arc_face[u.tri_fwd][u.side_fwd];
    auto& fb = side_arc_face[u.tri_bwd][u.side_bwd];
    require((long long)fa.size() == n + 1 && (long long)fb.size() == n + 1,
            ErrorKind::Internal, "arc count mismatch across edge");
    for (long long i = 0; i <= n; ++i) unite(fa[i], fb[n - i]);
  }

  // --- collect. The glued complex has the cells as faces, the gluing
  // intervals as edges, and the punctures as interior vertices (interval
  // endpoints on curve strands lie on the region boundary), so the compact
  // Euler characteristic of a region is cells - gluings + punctures.
  std::vector<Face> out;
  std::map<int, int> root_ix;
  for (int a = 0; a < (int)uf_parent.size(); ++a) {
    int r = find(a);
    if (!root_ix.count(r)) {
      root_ix[r] = (int)out.size();
      Face f;
      auto& ps = uf_punc[r];
      std::sort(ps.begin(), ps.end());
      ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
      f.punctures = ps;
      f.chi = uf_chi[r] + (long long)ps.size();
      f.curves = uf_curves[r];
      out.push_back(std::move(f));
    }
  }
  return out;
}

} // namespace lamina
