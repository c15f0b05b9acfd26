#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamina/surface.hpp"

namespace lamina {

// A disjoint union of simple closed curves (possibly peripheral), in normal
// coordinates on the reference triangulation of its surface. Immutable by
// convention: operations return new values.
struct Multicurve {
  SurfaceKind surface;
  std::vector<long long> w;

  bool operator==(const Multicurve&) const = default;
  auto operator<=>(const Multicurve&) const = default;
  bool empty() const {
    for (long long x : w) if (x) return false;
    return true;
  }
  long long total_weight() const {
    long long s = 0;
    for (long long x : w) s += x;
    return s;
  }
};

// Throws Validation if w violates the matching/triangle conditions.
void validate_coords(SurfaceKind s, const std::vector<long long>& w);

// Splits into connected components (each a single closed curve).
std::vector<Multicurve> components(const Multicurve& mc);

// The puncture whose link this single closed curve is, if it is peripheral.
std::optional<int> peripheral_about(const Multicurve& component);

// A canonical essential simple closed curve: exactly one component, not
// puncture-parallel. The coordinate vector itself is the canonical form.
class Curve {
public:
  // Validates: admissible coordinates, one component, essential.
  static Curve from_coords(SurfaceKind s, std::vector<long long> w);
  // Same checks, but returns nullopt instead of throwing.
  static std::optional<Curve> try_from_coords(SurfaceKind s,
                                              std::vector<long long> w);

  const SurfaceKind& surface() const { return mc_.surface; }
  const std::vector<long long>& coords() const { return mc_.w; }
  const Multicurve& as_multicurve() const { return mc_; }

  bool operator==(const Curve&) const = default;
  auto operator<=>(const Curve&) const = default;

private:
  explicit Curve(Multicurve mc) : mc_(std::move(mc)) {}
  Multicurve mc_;
};

std::string curve_key(const Curve& c); // stable map key

namespace detail {

// Point-level structure of a multicurve: crossing points indexed 0..w[e]-1
// along each edge (tail to head); within each triangle, nested corner arcs
// pair points up.
struct Resolved {
  const Triangulation* T;
  std::vector<long long> w;
  struct Link {
    int edge = -1;
    long long idx = -1;
    int side_self = -1;  // side of the crossed triangle carrying this point
    int side_other = -1; // side carrying the partner
  };
  // by_use[u][e][i]: partner across the fwd (u=0) / bwd (u=1) triangle of e
  std::vector<std::vector<Link>> by_use[2];
};

Resolved resolve_points(const Multicurve& mc);

} // namespace detail

} // namespace lamina
