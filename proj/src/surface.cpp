#include "lamina/surface.hpp"

namespace lamina {
namespace {

Triangulation make_five() {
  // edges: 0:E01 1:E12 2:E23 3:E34 4:E40 5:U02 6:U03 7:L02 8:L03
  Triangulation t;
  t.surface = kFiveHoledSphere;
  t.n_edges = 9;
  t.n_vertices = 5;
  t.edge_ends = {{0,1},{1,2},{2,3},{3,4},{4,0},{0,2},{0,3},{0,2},{0,3}};
  t.tris = {
      {{{0,true},{1,true},{5,false}}},
      {{{5,true},{2,true},{6,false}}},
      {{{6,true},{3,true},{4,true}}},
      {{{7,true},{1,false},{0,false}}},
      {{{2,false},{7,false},{8,true}}},
      {{{4,false},{3,false},{8,false}}},
  };
  t.corners = {
      {{0,1,2}}, {{0,2,3}}, {{0,3,4}},
      {{0,2,1}}, {{3,2,0}}, {{0,4,3}},
  };
  return t;
}

Triangulation make_four() {
  // edges: 0:E01 1:E12 2:E23 3:E30 4:U02 5:L02
  Triangulation t;
  t.surface = kFourHoledSphere;
  t.n_edges = 6;
  t.n_vertices = 4;
  t.edge_ends = {{0,1},{1,2},{2,3},{3,0},{0,2},{0,2}};
  t.tris = {
      {{{0,true},{1,true},{4,false}}},
      {{{4,true},{2,true},{3,true}}},
      {{{5,true},{1,false},{0,false}}},
      {{{3,false},{2,false},{5,false}}},
  };
  t.corners = {
      {{0,1,2}}, {{0,2,3}}, {{0,2,1}}, {{0,3,2}},
  };
  return t;
}

Triangulation make_torus() {
  // edges: 0:a 1:b 2:diagonal; single puncture
  Triangulation t;
  t.surface = kOncePuncturedTorus;
  t.n_edges = 3;
  t.n_vertices = 1;
  t.edge_ends = {{0,0},{0,0},{0,0}};
  t.tris = {
      {{{0,true},{1,true},{2,false}}},
      {{{2,true},{0,false},{1,false}}},
  };
  t.corners = {{{0,0,0}}, {{0,0,0}}};
  return t;
}

} // namespace

const Triangulation& triangulation_for(SurfaceKind s) {
  static const Triangulation five = make_five();
  static const Triangulation four = make_four();
  static const Triangulation torus = make_torus();
  if (s == kFiveHoledSphere) return five;
  if (s == kFourHoledSphere) return four;
  if (s == kOncePuncturedTorus) return torus;
  fail(ErrorKind::Domain, "no reference triangulation for " + s.name());
}

} // namespace lamina
