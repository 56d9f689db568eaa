#pragma once

// V-represented polytopes, face lattices, instance generators, Minkowski
// sums and the Cayley embedding of a collection of polytopes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/exactla.hpp"
#include "cayley/hull.hpp"
#include "cayley/random.hpp"

namespace cayley {

class Polytope {
 public:
  /// Validates that every listed point is a vertex and that none repeats.
  Polytope(std::size_t ambient_dim, std::vector<Point> vertices)
      : ambient_dim_(ambient_dim), vertices_(std::move(vertices)) {
    for (const auto& v : vertices_)
      if (v.size() != ambient_dim_) throw std::invalid_argument("polytope: vertex of wrong dimension");
    const ConvexHull h = convex_hull(vertices_);
    if (h.vertices.size() != vertices_.size())
      throw std::invalid_argument("polytope: listed point is not a vertex (or is repeated)");
    dimension_ = h.dimension;
  }

  /// Convex hull of arbitrary points; keeps the extreme points in input order.
  static Polytope hull_of(std::size_t ambient_dim, const std::vector<Point>& points) {
    const ConvexHull h = convex_hull(points);
    std::vector<Point> verts;
    verts.reserve(h.vertices.size());
    for (auto i : h.vertices) verts.push_back(points[i]);
    Polytope p;
    p.ambient_dim_ = ambient_dim;
    p.vertices_ = std::move(verts);
    p.dimension_ = h.dimension;
    return p;
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  int dimension() const { return dimension_; }

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  Polytope() = default;
  std::size_t ambient_dim_ = 0;
  std::vector<Point> vertices_;
  int dimension_ = -1;
};

/// All faces of a polytope as vertex-index sets, grouped by dimension.
/// Holds the empty face at dimension -1 and the improper face at `dim`.
struct FaceLattice {
  int dim = -1;
  std::map<int, std::vector<VertexSet>> faces_by_dim;

  const std::vector<VertexSet>& faces(int k) const {
    static const std::vector<VertexSet> none;
    auto it = faces_by_dim.find(k);
    return it == faces_by_dim.end() ? none : it->second;
  }
  /// Boundary f-vector f_0 .. f_{dim-1}.
  std::vector<std::int64_t> f_vector() const {
    std::vector<std::int64_t> f;
    for (int k = 0; k < dim; ++k) f.push_back(static_cast<std::int64_t>(faces(k).size()));
    return f;
  }
  /// Sum_{i<dim} (-1)^i f_i = 1 - (-1)^dim.
  bool satisfies_euler() const {
    std::int64_t s = 0;
    const auto f = f_vector();
    for (std::size_t i = 0; i < f.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * f[i];
    return s == 1 - (dim % 2 == 0 ? 1 : -1);
  }
  std::size_t vertex_count() const { return faces(0).size(); }
};

/// Face lattice of conv(vertices); every point must be a vertex. Faces are
/// the intersection-closure of the facet vertex sets, dimensions are affine
/// ranks.
inline FaceLattice face_lattice(const std::vector<Point>& vertices) {
  const ConvexHull h = convex_hull(vertices);
  if (h.vertices.size() != vertices.size()) throw std::invalid_argument("face_lattice: points must all be vertices");
  std::set<VertexSet> seen;
  std::vector<VertexSet> queue;
  std::vector<VertexSet> facets;
  for (const auto& f : h.facets) {
    facets.push_back(f.incident_vertices);
    if (seen.insert(f.incident_vertices).second) queue.push_back(f.incident_vertices);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& f : facets) {
      VertexSet meet = set_intersection(queue[q], f);
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  FaceLattice lat;
  lat.dim = h.dimension;
  for (const auto& face : seen) lat.faces_by_dim[affine_dimension(vertices, face)].push_back(face);
  VertexSet all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  lat.faces_by_dim[h.dimension].push_back(all);
  lat.faces_by_dim[-1];  // the empty face is produced by the closure when dim >= 1
  if (lat.faces(-1).empty()) lat.faces_by_dim[-1].push_back({});
  return lat;
}

inline FaceLattice face_lattice(const Polytope& p) { return face_lattice(p.vertices()); }

// ---------------------------------------------------------------------------
// Generators

/// Points (t, t^2, ..., t^d) for t = 1..n.
inline Polytope cyclic_polytope(std::size_t d, std::size_t n) {
  if (d < 1) throw std::invalid_argument("cyclic_polytope: d must be at least 1");
  if (n <= d) throw std::invalid_argument("cyclic_polytope: need n >= d+1");
  if (d == 1 && n != 2) throw std::invalid_argument("cyclic_polytope: in dimension 1 only n = 2 gives a polytope");
  std::vector<Point> pts;
  for (std::size_t t = 1; t <= n; ++t) {
    Point p;
    Rational x(1);
    for (std::size_t k = 0; k < d; ++k) {
      x *= Rational(static_cast<long>(t));
      p.push_back(x);
    }
    pts.push_back(std::move(p));
  }
  return Polytope(d, std::move(pts));
}

/// Origin and the standard basis vectors.
inline Polytope simplex_polytope(std::size_t d) {
  if (d < 1) throw std::invalid_argument("simplex: d must be at least 1");
  std::vector<Point> pts(d + 1, Point(d));
  for (std::size_t k = 0; k < d; ++k) pts[k + 1][k] = 1;
  return Polytope(d, std::move(pts));
}

/// Starts from the simplex and stacks a vertex onto a randomly chosen facet
/// until n vertices exist. Each new vertex sits just beyond its facet and
/// beneath every other facet.
inline Polytope stacked_polytope(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d < 1 || n < d + 1) throw std::invalid_argument("stacked_polytope: need d >= 1 and n >= d+1");
  if (d == 1 && n != 2) throw std::invalid_argument("stacked_polytope: in dimension 1 only n = 2 gives a polytope");
  DeterministicRng rng(seed);
  std::vector<Point> pts = simplex_polytope(d).vertices();
  while (pts.size() < n) {
    const auto facets = convex_hull_facets(pts);
    const FacetDescription& chosen = facets[rng.below(facets.size())];
    Point centroid(d);
    for (auto v : chosen.incident_vertices)
      for (std::size_t c = 0; c < d; ++c) centroid[c] += pts[v][c];
    for (auto& x : centroid) x /= Rational(static_cast<long>(chosen.incident_vertices.size()));
    Rational scale(0);
    for (const auto& x : chosen.normal) scale = std::max(scale, x.sign() < 0 ? -x : x);
    Rational eps = Rational(1) / scale;
    for (;;) {
      Point cand = centroid;
      for (std::size_t c = 0; c < d; ++c) cand[c] += eps * chosen.normal[c];
      bool ok = true;
      for (const auto& f : facets) {
        if (&f == &chosen) continue;
        if (dot(f.normal, cand) >= f.offset) {
          ok = false;
          break;
        }
      }
      if (ok) {
        pts.push_back(std::move(cand));
        break;
      }
      eps /= Rational(2);
    }
  }
  return Polytope(d, std::move(pts));
}

// ---------------------------------------------------------------------------
// Collections

/// m full-dimensional polytopes in a common R^d.
class PureCollection {
 public:
  PureCollection(std::size_t d, std::vector<Polytope> polytopes) : d_(d), polytopes_(std::move(polytopes)) {
    if (polytopes_.empty()) throw std::invalid_argument("collection: needs at least one polytope");
    for (std::size_t i = 0; i < polytopes_.size(); ++i) {
      const auto& p = polytopes_[i];
      if (p.ambient_dim() != d_ || p.dimension() != static_cast<int>(d_))
        throw std::invalid_argument("collection: polytope " + std::to_string(i) + " is not full-dimensional in R^" +
                                    std::to_string(d_));
    }
  }
  std::size_t d() const { return d_; }
  std::size_t m() const { return polytopes_.size(); }
  const std::vector<Polytope>& polytopes() const { return polytopes_; }
  const Polytope& operator[](std::size_t i) const { return polytopes_[i]; }

 private:
  std::size_t d_;
  std::vector<Polytope> polytopes_;
};

/// Denominator of every coordinate displacement drawn by perturb().
inline constexpr long kPerturbDenominator = 1000000;

/// Displaces every vertex by independent rationals k / kPerturbDenominator
/// with |k / kPerturbDenominator| <= magnitude. If some vertex stops being a
/// vertex the draw is repeated with half the magnitude.
inline PureCollection perturb(const PureCollection& c, const Rational& magnitude, std::uint64_t seed) {
  if (magnitude.sign() <= 0) throw std::invalid_argument("perturb: magnitude must be positive");
  DeterministicRng rng(seed);
  Rational mag = magnitude;
  for (int attempt = 0; attempt < 12; ++attempt) {
    const mpq_class scaled = mag.value() * kPerturbDenominator;
    const mpz_class bound_z = scaled.get_num() / scaled.get_den();
    if (bound_z < 1) break;
    const std::int64_t bound = bound_z.fits_slong_p() ? bound_z.get_si() : (std::int64_t{1} << 40);
    std::vector<Polytope> out;
    bool ok = true;
    for (const auto& p : c.polytopes()) {
      std::vector<Point> moved = p.vertices();
      for (auto& v : moved)
        for (auto& x : v) x += Rational(mpz_class(static_cast<long>(rng.between(-bound, bound))), kPerturbDenominator);
      Polytope hp = Polytope::hull_of(c.d(), moved);
      if (hp.vertex_count() != p.vertex_count() || hp.dimension() != static_cast<int>(c.d())) {
        ok = false;
        break;
      }
      out.push_back(std::move(hp));
    }
    if (ok) return PureCollection(c.d(), std::move(out));
    mag /= Rational(2);
  }
  throw std::runtime_error("perturb: could not preserve vertex counts");
}

/// Sum of all summands; vertex sums are pruned to extreme points after each step.
inline Polytope minkowski_sum(const PureCollection& c) {
  std::vector<Point> acc = c[0].vertices();
  for (std::size_t i = 1; i < c.m(); ++i) {
    std::vector<Point> sums;
    sums.reserve(acc.size() * c[i].vertex_count());
    for (const auto& a : acc)
      for (const auto& b : c[i].vertices()) {
        Point s(c.d());
        for (std::size_t k = 0; k < c.d(); ++k) s[k] = a[k] + b[k];
        sums.push_back(std::move(s));
      }
    acc = Polytope::hull_of(c.d(), sums).vertices();
  }
  return Polytope::hull_of(c.d(), acc);
}

struct Provenance {
  std::size_t summand;
  std::size_t vertex;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// conv of the summands P_i placed at heights e_i in R^d x R^m, together
/// with its face lattice.
class CayleyPolytope {
 public:
  explicit CayleyPolytope(const PureCollection& c) : d_(c.d()), m_(c.m()) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t v = 0; v < c[i].vertex_count(); ++v) {
        Point p = c[i].vertices()[v];
        for (std::size_t j = 0; j < m_; ++j) p.push_back(Rational(j == i ? 1 : 0));
        vertices_.push_back(std::move(p));
        provenance_.push_back({i, v});
      }
    }
    lattice_ = face_lattice(vertices_);
  }

  std::size_t d() const { return d_; }
  std::size_t m() const { return m_; }
  std::size_t ambient_dim() const { return d_ + m_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  const FaceLattice& lattice() const { return lattice_; }
  int dimension() const { return lattice_.dim; }

  /// Summands that contribute a vertex to the face, as a bit mask.
  std::uint64_t summands_of(const VertexSet& face) const {
    std::uint64_t mask = 0;
    for (auto v : face) mask |= std::uint64_t{1} << provenance_[v].summand;
    return mask;
  }
  bool is_mixed(const VertexSet& face) const {
    const std::uint64_t all = m_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
    return summands_of(face) == all;
  }

 private:
  std::size_t d_;
  std::size_t m_;
  std::vector<Point> vertices_;
  std::vector<Provenance> provenance_;
  FaceLattice lattice_;
};

inline CayleyPolytope cayley_polytope(const PureCollection& c) {
  if (c.m() > 63) throw std::invalid_argument("cayley_polytope: at most 63 summands");
  return CayleyPolytope(c);
}

struct SimplicialityCheck {
  bool simplicial = true;
  std::optional<VertexSet> offending_face;
  int offending_dim = -1;
};

/// Every proper mixed face must be a simplex. Faces inside some Cay(P_S),
/// S a proper subset, are not part of the Cayley complex and are ignored.
inline SimplicialityCheck check_cayley_simplicial(const CayleyPolytope& k) {
  for (int dim = 0; dim < k.dimension(); ++dim) {
    for (const auto& face : k.lattice().faces(dim)) {
      if (k.is_mixed(face) && face.size() != static_cast<std::size_t>(dim) + 1)
        return {false, face, dim};
    }
  }
  return {};
}

}  // namespace cayley
