#include "lamina/curve.hpp"

#include <algorithm>

namespace lamina {

void validate_coords(SurfaceKind s, const std::vector<long long>& w) {
  const Triangulation& T = triangulation_for(s);
  require((int)w.size() == T.n_edges, ErrorKind::Validation,
          "expected " + std::to_string(T.n_edges) + " coordinates for " + s.name());
  for (long long x : w)
    require(x >= 0, ErrorKind::Validation, "negative normal coordinate");
  for (const auto& tri : T.tris) {
    long long a = w[tri[0].edge], b = w[tri[1].edge], c = w[tri[2].edge];
    require((a + b + c) % 2 == 0, ErrorKind::Validation,
            "odd weight sum in a triangle");
    require(a <= b + c && b <= a + c && c <= a + b, ErrorKind::Validation,
            "triangle inequality violated in normal coordinates");
  }
}

namespace detail {

Resolved resolve_points(const Multicurve& mc) {
  const Triangulation& T = triangulation_for(mc.surface);
  validate_coords(mc.surface, mc.w);
  Resolved r;
  r.T = &T;
  r.w = mc.w;
  for (int u = 0; u < 2; ++u) {
    r.by_use[u].resize(T.n_edges);
    for (int e = 0; e < T.n_edges; ++e) r.by_use[u][e].assign(mc.w[e], {});
  }
  for (int t = 0; t < (int)T.tris.size(); ++t) {
    const auto& tri = T.tris[t];
    long long a[3] = {mc.w[tri[0].edge], mc.w[tri[1].edge], mc.w[tri[2].edge]};
    for (int k = 0; k < 3; ++k) {
      int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
      long long n = (a[k] + a[k1] - a[k2]) / 2; // arcs cutting corner (k,k1)
      for (long long m = 0; m < n; ++m) {
        long long j1 = a[k] - 1 - m;  // side-ccw position on side k
        long long j2 = m;             // side-ccw position on side k1
        int e1 = tri[k].edge, e2 = tri[k1].edge;
        long long p1 = tri[k].fwd ? j1 : a[k] - 1 - j1;
        long long p2 = tri[k1].fwd ? j2 : a[k1] - 1 - j2;
        r.by_use[tri[k].fwd ? 0 : 1][e1][p1] = {e2, p2, k, k1};
        r.by_use[tri[k1].fwd ? 0 : 1][e2][p2] = {e1, p1, k1, k};
      }
    }
  }
  return r;
}

} // namespace detail

std::vector<Multicurve> components(const Multicurve& mc) {
  detail::Resolved r = detail::resolve_points(mc);
  const Triangulation& T = *r.T;
  std::vector<Triangulation::EdgeUse> uses(T.n_edges);
  for (int e = 0; e < T.n_edges; ++e) uses[e] = T.uses(e);
  std::vector<std::vector<char>> seen(T.n_edges);
  for (int e = 0; e < T.n_edges; ++e) seen[e].assign(r.w[e], 0);

  std::vector<Multicurve> out;
  for (int e0 = 0; e0 < T.n_edges; ++e0) {
    for (long long i0 = 0; i0 < r.w[e0]; ++i0) {
      if (seen[e0][i0]) continue;
      Multicurve comp{mc.surface, std::vector<long long>(T.n_edges, 0)};
      int e = e0;
      long long i = i0;
      int u = 0; // cross into the fwd-use triangle first
      do {
        seen[e][i] = 1;
        ++comp.w[e];
        const auto& ln = r.by_use[u][e][i];
        int tri_crossed = (u == 0) ? uses[e].tri_fwd : uses[e].tri_bwd;
        int e2 = ln.edge;
        long long i2 = ln.idx;
        int u2;
        if (uses[e2].tri_fwd == tri_crossed && uses[e2].tri_bwd != tri_crossed)
          u2 = 1;
        else if (uses[e2].tri_bwd == tri_crossed && uses[e2].tri_fwd != tri_crossed)
          u2 = 0;
        else
          u2 = (uses[e2].side_fwd == ln.side_other) ? 1 : 0;
        e = e2;
        i = i2;
        u = u2;
      } while (!(e == e0 && i == i0 && u == 0));
      out.push_back(std::move(comp));
    }
  }
  return out;
}

std::optional<int> peripheral_about(const Multicurve& comp) {
  const Triangulation& T = triangulation_for(comp.surface);
  for (int v = 0; v < T.n_vertices; ++v)
    if (comp.w == T.link(v)) return v;
  return std::nullopt;
}

std::optional<Curve> Curve::try_from_coords(SurfaceKind s,
                                            std::vector<long long> w) {
  Multicurve mc{s, std::move(w)};
  try {
    validate_coords(s, mc.w);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (mc.empty()) return std::nullopt;
  auto comps = components(mc);
  if (comps.size() != 1) return std::nullopt;
  if (peripheral_about(comps[0])) return std::nullopt;
  return Curve(std::move(mc));
}

Curve Curve::from_coords(SurfaceKind s, std::vector<long long> w) {
  Multicurve mc{s, w};
  validate_coords(s, mc.w);
  require(!mc.empty(), ErrorKind::Validation, "empty curve");
  auto comps = components(mc);
  require(comps.size() == 1, ErrorKind::Validation,
          "multicurve has " + std::to_string(comps.size()) +
              " components; expected a single curve");
  require(!peripheral_about(comps[0]), ErrorKind::Validation,
          "curve is puncture-parallel, not essential");
  return Curve(std::move(mc));
}

std::string curve_key(const Curve& c) {
  std::string k = std::to_string(c.surface().genus) + "," +
                  std::to_string(c.surface().punctures) + ":";
  for (long long x : c.coords()) k += std::to_string(x) + ",";
  return k;
}

} // namespace lamina
