#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lamina/errors.hpp"

namespace lamina {

// Supported surfaces. Boundary components are treated as punctures; the
// annulus tag exists only to name annular subsurfaces, it carries no
// triangulation.
struct SurfaceKind {
  int genus = 0;
  int punctures = 0;

  bool operator==(const SurfaceKind&) const = default;
  auto operator<=>(const SurfaceKind&) const = default;

  bool is_annulus() const { return genus == 0 && punctures == 2; }
  int euler_characteristic() const { return 2 - 2 * genus - punctures; }
  std::string name() const {
    return "S_{" + std::to_string(genus) + "," + std::to_string(punctures) + "}";
  }
};

inline constexpr SurfaceKind kFiveHoledSphere{0, 5};
inline constexpr SurfaceKind kFourHoledSphere{0, 4};
inline constexpr SurfaceKind kThreeHoledSphere{0, 3};
inline constexpr SurfaceKind kAnnulus{0, 2};
inline constexpr SurfaceKind kOncePuncturedTorus{1, 1};

// One side of an ideal triangle: an edge index and whether the side
// traverses the edge in its intrinsic direction.
struct TriSide {
  int edge;
  bool fwd;
};

// Fixed reference ideal triangulation of a punctured surface. Triangles are
// listed with ccw sides; corner[k] is the puncture at the start of side k.
struct Triangulation {
  SurfaceKind surface;
  int n_edges;
  int n_vertices;
  std::vector<std::array<TriSide, 3>> tris;
  std::vector<std::array<int, 3>> corners;
  std::vector<std::array<int, 2>> edge_ends; // edge -> (tail, head)

  // number of ends of each edge at vertex v (the normal coordinates of the
  // puncture link circle)
  std::vector<long long> link(int v) const {
    std::vector<long long> out(n_edges, 0);
    for (int e = 0; e < n_edges; ++e) {
      if (edge_ends[e][0] == v) ++out[e];
      if (edge_ends[e][1] == v) ++out[e];
    }
    return out;
  }

  // locate side usages of an edge: (tri, side) traversing forward, then backward
  struct EdgeUse { int tri_fwd, side_fwd, tri_bwd, side_bwd; };
  EdgeUse uses(int e) const {
    EdgeUse u{-1, -1, -1, -1};
    for (int t = 0; t < (int)tris.size(); ++t)
      for (int k = 0; k < 3; ++k)
        if (tris[t][k].edge == e) {
          if (tris[t][k].fwd) { u.tri_fwd = t; u.side_fwd = k; }
          else { u.tri_bwd = t; u.side_bwd = k; }
        }
    return u;
  }
};

// Reference triangulations (punctures on a circle, fan diagonals; the
// labeling convention is fixed once and documented in the README).
const Triangulation& triangulation_for(SurfaceKind s);

inline bool has_triangulation(SurfaceKind s) {
  return s == kFiveHoledSphere || s == kFourHoledSphere ||
         s == kOncePuncturedTorus;
}

} // namespace lamina
