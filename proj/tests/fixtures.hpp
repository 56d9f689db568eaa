#pragma once

#include "cayley/polytope.hpp"

namespace fixtures {

using namespace cayley;

inline std::vector<Point> pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Point> out;
  for (auto r : rows) {
    Point p;
    for (long x : r) p.push_back(Rational(x));
    out.push_back(p);
  }
  return out;
}

inline PureCollection two_triangles() {
  return PureCollection(2, {Polytope(2, pts({{0, 0}, {1, 0}, {0, 1}})), Polytope(2, pts({{0, 0}, {-1, 0}, {0, -1}}))});
}

inline PureCollection three_triangles() {
  return PureCollection(2, {Polytope(2, pts({{0, 0}, {1, 0}, {0, 1}})), Polytope(2, pts({{0, 0}, {-1, 0}, {0, -1}})),
                            Polytope(2, pts({{0, 0}, {2, 1}, {1, 3}}))});
}

inline PureCollection two_segments() {
  return PureCollection(1, {Polytope(1, pts({{0}, {1}})), Polytope(1, pts({{0}, {3}}))});
}

inline PureCollection two_squares() {
  const Polytope sq(2, pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  return PureCollection(2, {sq, sq});
}

inline PureCollection single(const Polytope& p) { return PureCollection(p.ambient_dim(), {p}); }

}  // namespace fixtures
