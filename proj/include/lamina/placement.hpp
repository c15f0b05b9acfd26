#pragma once
#include <map>
#include <set>
#include <vector>

#include "lamina/curve.hpp"

namespace lamina {

// Cyclic edge-crossing sequence of a single closed curve, with the triangle
// strip between consecutive crossings.
struct TracedCurve {
  const Triangulation* T = nullptr;
  SurfaceKind surface;
  std::vector<long long> weights;        // crossings per edge
  int len = 0;                           // total number of crossings
  std::vector<int> edge;                 // step -> edge
  std::vector<long long> pos;            // step -> own index along that edge
  std::vector<int> tri_after;            // triangle crossed between step j, j+1
  std::vector<int> side_in_after;        // its side holding step j
  std::vector<int> side_out_after;       // its side holding step j+1
  std::vector<std::vector<int>> step_at; // [edge][own idx] -> step

  int next(int j) const { return j + 1 < len ? j + 1 : 0; }
  int prev(int j) const { return j ? j - 1 : len - 1; }
  int step_shift(int j, int d) const { return ((j + d) % len + len) % len; }
};

TracedCurve trace_curve(const Curve& c);

// Geometric intersection number, computed by counting ray-linked chord pairs
// per triangle (each essential crossing is witnessed in exactly one triangle).
long long intersection_number(const Curve& a, const Curve& b);

// A joint position of several single closed curves on the reference
// triangulation: explicit per-edge orderings, crossings between curves,
// iterative bigon removal to minimal position, and the complementary cell
// structure. This is the tracing/bigon-reduction path; it shares nothing with
// the ray-order count above.
class JointPosition {
public:
  struct PointRef {
    int curve;
    int step;
    bool operator==(const PointRef&) const = default;
    auto operator<=>(const PointRef&) const = default;
  };
  struct Crossing {
    int id = -1;
    int curve_a = -1, step_a = -1; // chord (curve_a, step_a) -- strand step_a -> step_a+1
    int curve_b = -1, step_b = -1;
    bool alive = true;
  };
  struct Face {
    long long chi = 0;          // Euler characteristic (compact, with boundary)
    std::vector<int> punctures; // puncture ids interior to the face
    std::set<int> curves;       // input curves appearing on the boundary
  };

  static JointPosition build(std::vector<TracedCurve> curves);

  void reduce(); // remove curve-curve bigons until none remain

  long long crossings_between(int a, int b) const;
  long long total_crossings() const;

  int curve_count() const { return (int)curves_.size(); }
  const TracedCurve& curve(int k) const { return curves_[k]; }

  std::vector<int> crossings_along(int k) const;
  const Crossing& crossing(int id) const { return xs_[id]; }
  // edge word of curve k strictly between two crossings consecutive along k
  std::vector<int> word_between(int k, int xid, int yid) const;

  std::vector<Face> faces() const;

private:
  std::vector<TracedCurve> curves_;
  std::vector<std::vector<PointRef>> order_; // per edge, tail -> head
  std::vector<std::vector<long long>> idx_;  // [curve][step] -> index in order_
  std::vector<Crossing> xs_;
  std::map<std::pair<int, int>, std::vector<int>> on_chord_;

  void initial_crossings();
  // (next crossing, steps walked) after crossing x along curve k
  int next_crossing(int k, int xid) const;
  int prev_crossing(int k, int xid) const;
  bool try_bigon(int xid, int yid);
};

} // namespace lamina
