#pragma once

// Simplicial and relative simplicial complexes, the Cayley complex T and the
// relative Cayley complex T°, and the f-/h-vector transforms.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/polytope.hpp"

namespace cayley {

/// Binomial coefficient; zero outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// A complex given by its inclusion-maximal faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps the maximal elements of `faces` (any generating set works).
  SimplicialComplex(std::size_t vertex_count, std::vector<VertexSet> faces, bool contains_empty = true)
      : vertex_count_(vertex_count), contains_empty_(contains_empty) {
    for (auto& f : faces) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      for (auto v : f)
        if (v >= vertex_count_) throw std::invalid_argument("complex: vertex index out of range");
    }
    std::sort(faces.begin(), faces.end(), [](const VertexSet& a, const VertexSet& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto& f : faces) {
      const bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& g) {
        return std::includes(g.begin(), g.end(), f.begin(), f.end());
      });
      if (!covered && !f.empty()) facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
  }

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool contains_empty() const { return contains_empty_; }
  bool is_void() const { return facets_.empty() && !contains_empty_; }
  int dimension() const {
    int d = contains_empty_ ? -1 : -2;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  bool contains(const VertexSet& face) const {
    if (face.empty()) return contains_empty_ || !facets_.empty();
    return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& g) {
      return std::includes(g.begin(), g.end(), face.begin(), face.end());
    });
  }

  /// Every face, including the empty face when present.
  std::set<VertexSet> faces() const {
    std::set<VertexSet> out;
    if (contains_empty_ || !facets_.empty()) out.insert(VertexSet{});
    for (const auto& f : facets_) {
      const std::size_t n = f.size();
      if (n >= 63) throw std::length_error("complex: facet too large to enumerate");
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s;
        for (std::size_t b = 0; b < n; ++b)
          if (mask >> b & 1) s.push_back(f[b]);
        out.insert(std::move(s));
      }
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  bool contains_empty_ = true;
  std::vector<VertexSet> facets_;
};

/// The pair (ambient, removed); its faces are those of ambient not in removed.
struct RelativeComplex {
  SimplicialComplex ambient;
  SimplicialComplex removed;

  std::set<VertexSet> faces() const {
    std::set<VertexSet> out;
    for (const auto& f : ambient.faces())
      if (!removed.contains(f)) out.insert(f);
    return out;
  }
};

/// Face counts f_i for i = -1, 0, 1, ...; counts[i + 1] holds f_i.
struct FVector {
  std::vector<std::int64_t> counts;

  std::int64_t at(int i) const {
    const int idx = i + 1;
    return idx < 0 || idx >= static_cast<int>(counts.size()) ? 0 : counts[static_cast<std::size_t>(idx)];
  }
  /// Largest i with f_i possibly nonzero.
  int top() const { return static_cast<int>(counts.size()) - 2; }
  friend bool operator==(const FVector& a, const FVector& b) {
    const int n = std::max(a.top(), b.top());
    for (int i = -1; i <= n; ++i)
      if (a.at(i) != b.at(i)) return false;
    return true;
  }
};

/// h_0 .. h_D for the dimension parameter D.
struct HVector {
  int D = 0;
  std::vector<std::int64_t> entries;

  /// Zero outside 0..D.
  std::int64_t at(int k) const {
    return k < 0 || k > D ? 0 : entries[static_cast<std::size_t>(k)];
  }
  friend bool operator==(const HVector&, const HVector&) = default;
};

inline FVector f_vector_of(const std::set<VertexSet>& faces) {
  FVector f;
  for (const auto& face : faces) {
    const std::size_t idx = face.size();
    if (f.counts.size() <= idx) f.counts.resize(idx + 1, 0);
    ++f.counts[idx];
  }
  if (f.counts.empty()) f.counts.push_back(0);
  return f;
}

inline FVector f_vector(const SimplicialComplex& x) { return f_vector_of(x.faces()); }
inline FVector f_vector(const RelativeComplex& x) { return f_vector_of(x.faces()); }

/// h_k = sum_{i=0}^k (-1)^{k-i} C(D-i, k-i) f_{i-1}, for k = 0..D.
inline HVector h_from_f(const FVector& f, int D) {
  if (D < 0) throw std::invalid_argument("h_from_f: negative dimension parameter");
  for (int i = D; i <= f.top(); ++i)
    if (f.at(i) != 0)
      throw std::invalid_argument("h_from_f: face of dimension " + std::to_string(i) + " exceeds D-1 = " +
                                  std::to_string(D - 1));
  HVector h{D, std::vector<std::int64_t>(static_cast<std::size_t>(D) + 1, 0)};
  for (int k = 0; k <= D; ++k) {
    std::int64_t s = 0;
    for (int i = 0; i <= k; ++i) s += ((k - i) % 2 == 0 ? 1 : -1) * binomial(D - i, k - i) * f.at(i - 1);
    h.entries[static_cast<std::size_t>(k)] = s;
  }
  return h;
}

/// f_{i-1} = sum_{k=0}^i C(D-k, i-k) h_k, for i = 0..D.
inline FVector f_from_h(const HVector& h) {
  FVector f;
  f.counts.assign(static_cast<std::size_t>(h.D) + 1, 0);
  for (int i = 0; i <= h.D; ++i) {
    std::int64_t s = 0;
    for (int k = 0; k <= i; ++k) s += binomial(h.D - k, i - k) * h.at(k);
    f.counts[static_cast<std::size_t>(i)] = s;
  }
  return f;
}

/// Error raised when a Cayley complex is requested for a non-simplicial input.
class NotSimplicialError : public std::runtime_error {
 public:
  NotSimplicialError(VertexSet face, int dim)
      : std::runtime_error("Cayley complex is not simplicial: mixed face of dimension " + std::to_string(dim) +
                           " has " + std::to_string(face.size()) + " vertices"),
        face_(std::move(face)) {}
  const VertexSet& face() const { return face_; }

 private:
  VertexSet face_;
};

namespace detail {
inline void require_simplicial(const CayleyPolytope& k) {
  const auto chk = check_cayley_simplicial(k);
  if (!chk.simplicial) throw NotSimplicialError(*chk.offending_face, chk.offending_dim);
}

inline std::vector<VertexSet> mixed_proper_faces(const CayleyPolytope& k) {
  std::vector<VertexSet> out;
  for (int dim = 0; dim < k.dimension(); ++dim)
    for (const auto& f : k.lattice().faces(dim))
      if (k.is_mixed(f)) out.push_back(f);
  return out;
}
}  // namespace detail

/// T: the inclusion-closure of the proper mixed faces of the Cayley polytope.
/// Vertex indices are those of the Cayley polytope.
inline SimplicialComplex cayley_complex(const CayleyPolytope& k) {
  detail::require_simplicial(k);
  return SimplicialComplex(k.vertices().size(), detail::mixed_proper_faces(k));
}

/// T°. The ambient complex is T itself and the removed part is the set of
/// faces of T lying in some Cay(P_S), S a proper subset, together with the
/// empty face; its relative faces are exactly the proper mixed faces.
inline RelativeComplex relative_cayley_complex(const CayleyPolytope& k) {
  SimplicialComplex t = cayley_complex(k);
  std::vector<VertexSet> pure;
  for (const auto& f : t.faces())
    if (!f.empty() && !k.is_mixed(f)) pure.push_back(f);
  SimplicialComplex removed(k.vertices().size(), std::move(pure), true);
  return {std::move(t), std::move(removed)};
}

/// Dimension parameter of all Cayley-side h-vectors: the dimension d+m-1 of the Cayley polytope.
inline int cayley_h_dimension(const CayleyPolytope& k) { return static_cast<int>(k.d() + k.m()) - 1; }

/// Predicted f_0 .. f_{d-1} of the Minkowski sum: f_i = f_{i+m-1}(T°).
inline std::vector<std::int64_t> minkowski_f_via_cayley(const CayleyPolytope& k) {
  const FVector rel = f_vector(relative_cayley_complex(k));
  std::vector<std::int64_t> out;
  const int shift = static_cast<int>(k.m()) - 1;
  for (int i = 0; i < static_cast<int>(k.d()); ++i) out.push_back(rel.at(i + shift));
  return out;
}

}  // namespace cayley
