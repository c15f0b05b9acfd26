#include "doctest.h"

#include "lamina/curve.hpp"
#include "lamina/mcg.hpp"
#include "lamina/placement.hpp"

using namespace lamina;

TEST_CASE("triangulation tables are consistent") {
  for (SurfaceKind s : {kFiveHoledSphere, kFourHoledSphere, kOncePuncturedTorus}) {
    const Triangulation& T = triangulation_for(s);
    CHECK(T.n_edges == -3 * s.euler_characteristic());
    CHECK((int)T.tris.size() == -2 * s.euler_characteristic());
    std::vector<int> fwd(T.n_edges, 0), bwd(T.n_edges, 0);
    for (int t = 0; t < (int)T.tris.size(); ++t)
      for (int k = 0; k < 3; ++k) {
        const auto& sd = T.tris[t][k];
        (sd.fwd ? fwd : bwd)[sd.edge]++;
        // corner consistency
        int a = T.corners[t][k], b = T.corners[t][(k + 1) % 3];
        if (sd.fwd) {
          CHECK(T.edge_ends[sd.edge][0] == a);
          CHECK(T.edge_ends[sd.edge][1] == b);
        } else {
          CHECK(T.edge_ends[sd.edge][0] == b);
          CHECK(T.edge_ends[sd.edge][1] == a);
        }
      }
    for (int e = 0; e < T.n_edges; ++e) {
      CHECK(fwd[e] == 1);
      CHECK(bwd[e] == 1);
    }
  }
}

TEST_CASE("coordinate validation") {
  CHECK_THROWS_AS(Curve::from_coords(kFiveHoledSphere, {1, 0, 0, 0, 0, 0, 0, 0, 0}),
                  Error);
  CHECK_THROWS_AS(Curve::from_coords(kFiveHoledSphere, {0, 0, 0}), Error);
  // peripheral link of a puncture is rejected as inessential
  const Triangulation& T = triangulation_for(kFiveHoledSphere);
  for (int v = 0; v < 5; ++v)
    CHECK_THROWS_AS(Curve::from_coords(kFiveHoledSphere, T.link(v)), Error);
}

TEST_CASE("standard curves are canonical single curves") {
  for (int i = 0; i < 5; ++i) {
    Curve c = standard_curve(kFiveHoledSphere, i);
    auto comps = components(c.as_multicurve());
    CHECK(comps.size() == 1);
    CHECK(!peripheral_about(comps[0]));
  }
}

TEST_CASE("component split of a union") {
  Curve a = standard_curve(kFiveHoledSphere, 0); // around {p0,p1}
  Curve b = standard_curve(kFiveHoledSphere, 2); // around {p2,p3}
  Multicurve u{kFiveHoledSphere, {}};
  u.w.resize(9);
  for (int i = 0; i < 9; ++i) u.w[i] = a.coords()[i] + b.coords()[i];
  auto comps = components(u);
  CHECK(comps.size() == 2);
  CHECK(((comps[0].w == a.coords() && comps[1].w == b.coords()) ||
         (comps[0].w == b.coords() && comps[1].w == a.coords())));
}

TEST_CASE("trace covers the curve") {
  Curve a = standard_curve(kFiveHoledSphere, 1);
  TracedCurve tc = trace_curve(a);
  CHECK(tc.len == (int)a.as_multicurve().total_weight());
  // consecutive steps share the recorded triangle
  for (int j = 0; j < tc.len; ++j) {
    int t = tc.tri_after[j];
    const auto& tri = tc.T->tris[t];
    CHECK(tri[tc.side_in_after[j]].edge == tc.edge[j]);
    CHECK(tri[tc.side_out_after[j]].edge == tc.edge[tc.next(j)]);
  }
}

TEST_CASE("intersection numbers of standard curves") {
  auto c = [](int i) { return standard_curve(kFiveHoledSphere, i); };
  // adjacent pairs share one puncture: i = 2; disjoint pairs: 0
  CHECK(intersection_number(c(0), c(0)) == 0);
  CHECK(intersection_number(c(0), c(1)) == 2);
  CHECK(intersection_number(c(0), c(2)) == 0);
  CHECK(intersection_number(c(0), c(3)) == 0);
  CHECK(intersection_number(c(0), c(4)) == 2);
  CHECK(intersection_number(c(1), c(2)) == 2);
  CHECK(intersection_number(c(2), c(4)) == 0);
  // symmetry
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(intersection_number(c(i), c(j)) == intersection_number(c(j), c(i)));
}

TEST_CASE("joint position agrees on standard pairs") {
  auto c = [](int i) { return standard_curve(kFiveHoledSphere, i); };
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      auto jp = JointPosition::build({trace_curve(c(i)), trace_curve(c(j))});
      jp.reduce();
      CHECK(jp.crossings_between(0, 1) == intersection_number(c(i), c(j)));
    }
}

TEST_CASE("faces of a single separating curve") {
  Curve a = standard_curve(kFiveHoledSphere, 0);
  auto jp = JointPosition::build({trace_curve(a)});
  jp.reduce();
  auto fs = jp.faces();
  REQUIRE(fs.size() == 2);
  // both pieces are disks with punctures: one S_{0,3} side (2 punctures), one
  // S_{0,4} side (3 punctures)
  long long chi_sum = 0;
  size_t punc_total = 0;
  std::set<size_t> sizes;
  for (auto& f : fs) {
    CHECK(f.chi == 1); // compact pieces are disks
    chi_sum += f.chi - (long long)f.punctures.size();
    punc_total += f.punctures.size();
    sizes.insert(f.punctures.size());
    CHECK(f.curves == std::set<int>{0});
  }
  CHECK(punc_total == 5);
  CHECK(sizes == std::set<size_t>{2, 3});
  CHECK(chi_sum == -3); // chi(S_{0,5}) with punctures removed
}
