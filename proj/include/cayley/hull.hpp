#pragma once

// Exact convex hulls by incremental beneath-beyond over the rationals.
//
// Input points may span a proper affine subspace. The hull is computed in
// the span, using the coordinates at the pivot columns of a basis of the
// span's direction space; projecting onto those coordinates is an affine
// isomorphism of the span. Facet normals are lifted back to the ambient
// space by zero padding, so they still separate the points in the span.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "cayley/exactla.hpp"

namespace cayley {

using Point = QVector;
/// Vertex indices, sorted ascending, no duplicates.
using VertexSet = std::vector<std::size_t>;

struct FacetDescription {
  QVector normal;
  Rational offset;
  VertexSet incident_vertices;
};

struct ConvexHull {
  int dimension = -1;        ///< affine dimension of the point set
  VertexSet vertices;        ///< indices of the extreme input points
  std::vector<FacetDescription> facets;
};

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Affine dimension of the selected points; -1 for an empty selection.
inline int affine_dimension(const std::vector<Point>& points, const VertexSet& which) {
  if (which.empty()) return -1;
  IncrementalRowSpace span(points[which.front()].size());
  for (std::size_t t = 1; t < which.size(); ++t) {
    SparseVector diff;
    const Point& p = points[which[t]];
    const Point& base = points[which.front()];
    for (std::size_t c = 0; c < p.size(); ++c) {
      Rational x = p[c] - base[c];
      if (!x.is_zero()) diff.emplace_back(c, std::move(x));
    }
    span.insert(diff);
    if (span.full()) break;
  }
  return static_cast<int>(span.rank());
}

inline int affine_dimension(const std::vector<Point>& points) {
  VertexSet all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return affine_dimension(points, all);
}

namespace detail {

struct WorkFacet {
  QVector normal;
  Rational offset;
  VertexSet points;  // accepted points lying on the hyperplane
};

class BeneathBeyond {
 public:
  explicit BeneathBeyond(std::vector<Point> pts) : pts_(std::move(pts)), k_(pts_.front().size()) {}

  ConvexHull run() {
    std::vector<std::size_t> order(pts_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts_[a] < pts_[b]; });

    // Initial simplex: the lexicographically first points that raise the affine rank.
    std::vector<std::size_t> simplex{order.front()};
    std::vector<std::size_t> rest;
    IncrementalRowSpace span(k_);
    for (std::size_t t = 1; t < order.size(); ++t) {
      if (simplex.size() < k_ + 1 && span.insert(sparse_diff(order[t], order.front()))) {
        simplex.push_back(order[t]);
      } else {
        rest.push_back(order[t]);
      }
    }
    if (simplex.size() != k_ + 1) throw std::logic_error("hull: points do not span the working space");

    interior_ = QVector(k_);
    for (auto s : simplex)
      for (std::size_t c = 0; c < k_; ++c) interior_[c] += pts_[s][c];
    for (auto& x : interior_) x /= Rational(static_cast<long>(k_ + 1));

    accepted_ = VertexSet(simplex.begin(), simplex.end());
    std::sort(accepted_.begin(), accepted_.end());
    for (std::size_t omit = 0; omit <= k_; ++omit) {
      VertexSet on;
      for (std::size_t s = 0; s <= k_; ++s)
        if (s != omit) on.push_back(simplex[s]);
      std::sort(on.begin(), on.end());
      facets_.push_back(make_facet(on));
    }
    for (auto p : rest) insert(p);
    return finish();
  }

 private:
  SparseVector sparse_diff(std::size_t a, std::size_t b) const {
    SparseVector v;
    for (std::size_t c = 0; c < k_; ++c) {
      Rational x = pts_[a][c] - pts_[b][c];
      if (!x.is_zero()) v.emplace_back(c, std::move(x));
    }
    return v;
  }

  int side(const WorkFacet& f, std::size_t p) const { return (dot(f.normal, pts_[p]) - f.offset).sign(); }

  /// Oriented hyperplane through the given points, which must affinely span
  /// a (k-1)-flat. Incidence is filled from the accepted points.
  WorkFacet make_facet(const VertexSet& on) {
    std::vector<QVector> rows;
    IncrementalRowSpace span(k_);
    for (std::size_t t = 1; t < on.size() && rows.size() + 1 < k_; ++t) {
      if (span.insert(sparse_diff(on[t], on.front()))) {
        QVector r(k_);
        for (std::size_t c = 0; c < k_; ++c) r[c] = pts_[on[t]][c] - pts_[on.front()][c];
        rows.push_back(std::move(r));
      }
    }
    const QMatrix ker = kernel_basis(QMatrix::from_rows(rows, k_));
    if (ker.cols() != 1) throw std::logic_error("hull: facet points are not in general position");
    WorkFacet f;
    f.normal = ker.col(0);
    // Canonical scale: first nonzero entry has absolute value one.
    for (const auto& x : f.normal) {
      if (!x.is_zero()) {
        const Rational s = x.sign() > 0 ? x : -x;
        for (auto& y : f.normal) y /= s;
        break;
      }
    }
    f.offset = dot(f.normal, pts_[on.front()]);
    if (dot(f.normal, interior_) > f.offset) {
      for (auto& y : f.normal) y = -y;
      f.offset = -f.offset;
    }
    for (auto a : accepted_)
      if (side(f, a) == 0) f.points.push_back(a);
    return f;
  }

  void insert(std::size_t p) {
    std::vector<int> sides(facets_.size());
    bool outside = false;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      sides[f] = side(facets_[f], p);
      outside = outside || sides[f] > 0;
    }
    if (!outside) return;  // inside or on the boundary: never a vertex

    accepted_.insert(std::lower_bound(accepted_.begin(), accepted_.end(), p), p);
    std::map<QVector, WorkFacet> created;  // keyed by (normal, offset)
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (sides[f] <= 0) continue;
      for (std::size_t g = 0; g < facets_.size(); ++g) {
        if (sides[g] != -1) continue;  // coplanar facets absorb p below
        VertexSet ridge = set_intersection(facets_[f].points, facets_[g].points);
        if (ridge.size() + 1 < k_) continue;
        if (affine_dimension(pts_, ridge) != static_cast<int>(k_) - 2) continue;
        ridge.insert(std::lower_bound(ridge.begin(), ridge.end(), p), p);
        WorkFacet nf = make_facet(ridge);
        QVector key = nf.normal;
        key.push_back(nf.offset);
        created.try_emplace(std::move(key), std::move(nf));
      }
    }
    std::vector<WorkFacet> next;
    next.reserve(facets_.size() + created.size());
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (sides[f] > 0) continue;
      if (sides[f] == 0) {
        auto& pts = facets_[f].points;
        pts.insert(std::lower_bound(pts.begin(), pts.end(), p), p);
      }
      next.push_back(std::move(facets_[f]));
    }
    for (auto& [key, nf] : created) next.push_back(std::move(nf));
    facets_ = std::move(next);
  }

  ConvexHull finish() const {
    ConvexHull h;
    h.dimension = static_cast<int>(k_);
    for (auto a : accepted_) {
      VertexSet meet;
      bool first = true;
      for (const auto& f : facets_) {
        if (!std::binary_search(f.points.begin(), f.points.end(), a)) continue;
        meet = first ? f.points : set_intersection(meet, f.points);
        first = false;
      }
      if (meet.size() == 1) h.vertices.push_back(a);
    }
    for (const auto& f : facets_) {
      FacetDescription d;
      d.normal = f.normal;
      d.offset = f.offset;
      d.incident_vertices = set_intersection(f.points, h.vertices);
      h.facets.push_back(std::move(d));
    }
    return h;
  }

  std::vector<Point> pts_;
  std::size_t k_;
  QVector interior_;
  VertexSet accepted_;
  std::vector<WorkFacet> facets_;
};

}  // namespace detail

/// Vertices and facets of conv(points) within the affine span of the points.
/// Facet incidences and vertex indices refer to positions in `points`; of
/// repeated points only the first occurrence is used.
inline ConvexHull convex_hull(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("degenerate input: no points");
  const std::size_t ambient = points.front().size();
  for (const auto& p : points)
    if (p.size() != ambient) throw std::invalid_argument("hull: points of mixed dimension");

  std::vector<std::size_t> distinct;
  {
    std::map<Point, std::size_t> seen;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (seen.try_emplace(points[i], i).second) distinct.push_back(i);
  }
  if (distinct.size() < 2) throw std::invalid_argument("degenerate input: fewer than 2 distinct points");

  // Pivot coordinates of the direction space give an injective projection of the span.
  std::vector<QVector> diffs;
  for (std::size_t t = 1; t < distinct.size(); ++t) {
    QVector v(ambient);
    for (std::size_t c = 0; c < ambient; ++c) v[c] = points[distinct[t]][c] - points[distinct[0]][c];
    diffs.push_back(std::move(v));
  }
  const std::vector<std::size_t> coords = row_reduce(QMatrix::from_rows(diffs)).pivot_cols;

  std::vector<Point> projected;
  projected.reserve(distinct.size());
  for (auto i : distinct) {
    Point q;
    q.reserve(coords.size());
    for (auto c : coords) q.push_back(points[i][c]);
    projected.push_back(std::move(q));
  }

  ConvexHull local = detail::BeneathBeyond(std::move(projected)).run();
  ConvexHull out;
  out.dimension = local.dimension;
  for (auto v : local.vertices) out.vertices.push_back(distinct[v]);
  std::sort(out.vertices.begin(), out.vertices.end());
  for (auto& f : local.facets) {
    FacetDescription d;
    d.normal = QVector(ambient);
    for (std::size_t t = 0; t < coords.size(); ++t) d.normal[coords[t]] = f.normal[t];
    d.offset = f.offset;
    for (auto v : f.incident_vertices) d.incident_vertices.push_back(distinct[v]);
    std::sort(d.incident_vertices.begin(), d.incident_vertices.end());
    out.facets.push_back(std::move(d));
  }
  std::sort(out.facets.begin(), out.facets.end(),
            [](const FacetDescription& a, const FacetDescription& b) { return a.incident_vertices < b.incident_vertices; });
  return out;
}

inline std::vector<FacetDescription> convex_hull_facets(const std::vector<Point>& points) {
  return convex_hull(points).facets;
}

}  // namespace cayley
