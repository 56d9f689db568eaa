#pragma once

// The graded ring A*(T): Stanley–Reisner ring of T modulo the linear forms
// given by the vertex coordinates, computed degree by degree. Monomials
// supported on non-faces vanish, so each degree is spanned by face-supported
// monomials modulo the span of (linear form) x (monomial of one degree less).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cayley/complexes.hpp"
#include "cayley/exactla.hpp"
#include "cayley/random.hpp"

namespace cayley {

/// Sorted multiset of variable indices; its length is the degree.
using Monomial = std::vector<std::size_t>;

inline VertexSet support(const Monomial& mu) {
  VertexSet s(mu.begin(), mu.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline Monomial times_variable(const Monomial& mu, std::size_t v) {
  Monomial out = mu;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

struct MonomialBasis {
  std::size_t degree = 0;
  std::vector<Monomial> monomials;
};

/// Inclusion-minimal vertex sets that are not faces of t.
inline std::set<VertexSet> minimal_nonfaces(const SimplicialComplex& t) {
  const std::set<VertexSet> faces = t.faces();
  std::set<VertexSet> out;
  if (faces.empty()) {
    out.insert(VertexSet{});
    return out;
  }
  for (const auto& f : faces) {
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      VertexSet g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (faces.count(g)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < g.size() && minimal; ++drop) {
        VertexSet h = g;
        h.erase(h.begin() + static_cast<std::ptrdiff_t>(drop));
        minimal = faces.count(h) > 0;
      }
      if (minimal) out.insert(std::move(g));
    }
  }
  return out;
}

/// Form j sends the variable of vertex v to the j-th coordinate of v.
inline std::vector<QVector> coordinate_linear_forms(const CayleyPolytope& k) {
  std::vector<QVector> forms(k.ambient_dim(), QVector(k.vertices().size()));
  for (std::size_t v = 0; v < k.vertices().size(); ++v)
    for (std::size_t j = 0; j < k.ambient_dim(); ++j) forms[j][v] = k.vertices()[v][j];
  return forms;
}

/// Linear forms of the Artinian reduction: the coordinate forms measured from
/// an interior point c of the Cayley polytope, so that they span a space of
/// dimension d+m-1 and the all-ones form omega is not among them. Taking c as
/// the average of (g_i, e_i), with g_i the vertex centroid of summand i, the
/// span has the basis
///   x_v -> k-th coordinate of (v - g_i)        for k = 1..d,
///   x_v -> [v at level i] - [v at level m]     for i = 1..m-1,
/// where v comes from summand i. Every form is scaled to integer coefficients.
inline std::vector<QVector> centered_linear_forms(const CayleyPolytope& k) {
  const std::size_t n = k.vertices().size();
  std::vector<Point> centroid(k.m(), Point(k.d()));
  std::vector<long> count(k.m(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto s = k.provenance()[v].summand;
    ++count[s];
    for (std::size_t c = 0; c < k.d(); ++c) centroid[s][c] += k.vertices()[v][c];
  }
  for (std::size_t s = 0; s < k.m(); ++s)
    for (auto& x : centroid[s]) x /= Rational(count[s]);

  std::vector<QVector> forms;
  for (std::size_t c = 0; c < k.d(); ++c) {
    QVector form(n);
    mpz_class lcm(1);
    for (std::size_t v = 0; v < n; ++v) {
      form[v] = k.vertices()[v][c] - centroid[k.provenance()[v].summand][c];
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), form[v].denominator().get_mpz_t());
    }
    mpz_class g(0);
    for (auto& x : form) {
      x *= Rational(lcm, mpz_class(1));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.numerator().get_mpz_t());
    }
    if (g > 1)
      for (auto& x : form) x /= Rational(g, mpz_class(1));
    forms.push_back(std::move(form));
  }
  for (std::size_t s = 0; s + 1 < k.m(); ++s) {
    QVector form(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto level = k.provenance()[v].summand;
      form[v] = level == s ? 1 : (level == k.m() - 1 ? -1 : 0);
    }
    forms.push_back(std::move(form));
  }
  return forms;
}

class GradedQuotient {
 public:
  /// Builds degrees 0..max_degree. With order_seed set, each degree's
  /// monomials are shuffled, which changes the complement basis chosen.
  GradedQuotient(SimplicialComplex complex, std::vector<QVector> forms, std::size_t max_degree,
                 std::optional<std::uint64_t> order_seed = std::nullopt)
      : complex_(std::move(complex)), forms_(std::move(forms)), faces_(complex_.faces()) {
    for (const auto& f : forms_)
      if (f.size() != complex_.vertex_count()) throw std::invalid_argument("quotient: form length != vertex count");
    std::optional<DeterministicRng> rng;
    if (order_seed) rng.emplace(*order_seed);
    for (std::size_t i = 0; i <= max_degree; ++i) build_degree(i, rng ? &*rng : nullptr);
  }

  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<QVector>& forms() const { return forms_; }
  std::size_t max_degree() const { return degrees_.size() - 1; }

  std::size_t dim(std::size_t i) const { return level(i).basis_cols.size(); }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) out.push_back(dim(i));
    return out;
  }
  /// Face-supported monomials of degree i, in column order.
  const std::vector<Monomial>& monomials(std::size_t i) const { return level(i).monomials; }
  /// Monomials whose classes form the chosen basis of A^i.
  MonomialBasis basis(std::size_t i) const {
    MonomialBasis b{i, {}};
    for (auto c : level(i).basis_cols) b.monomials.push_back(level(i).monomials[c]);
    return b;
  }
  std::optional<std::size_t> column_of(std::size_t i, const Monomial& mu) const {
    const auto& idx = level(i).index;
    auto it = idx.find(mu);
    return it == idx.end() ? std::nullopt : std::optional<std::size_t>(it->second);
  }
  bool is_face_supported(const Monomial& mu) const { return faces_.count(support(mu)) > 0; }

  /// Coordinates in the basis of A^i of a polynomial given over the
  /// degree-i monomial columns.
  QVector normal_form(std::size_t i, const SparseVector& poly) const {
    const Level& lv = level(i);
    QVector out(lv.basis_cols.size());
    for (auto& [c, x] : lv.relations.reduce(poly)) out[lv.basis_position.at(c)] = x;
    return out;
  }

  /// omega times a degree-i polynomial, as a degree-(i+1) polynomial.
  SparseVector times_omega(std::size_t i, const SparseVector& poly) const {
    const Level& next = level(i + 1);
    std::map<std::size_t, Rational> acc;
    for (const auto& [c, x] : poly) {
      for (std::size_t v = 0; v < complex_.vertex_count(); ++v) {
        auto it = next.index.find(times_variable(level(i).monomials[c], v));
        if (it != next.index.end()) acc[it->second] += x;
      }
    }
    SparseVector out;
    for (auto& [c, x] : acc)
      if (!x.is_zero()) out.emplace_back(c, std::move(x));
    return out;
  }

  /// Matrix of multiplication by omega, A^i -> A^{i+1}; columns index the source basis.
  QMatrix omega_matrix(std::size_t i) const {
    const Level& lv = level(i);
    QMatrix m(dim(i + 1), dim(i));
    for (std::size_t b = 0; b < lv.basis_cols.size(); ++b) {
      const QVector col = normal_form(i + 1, times_omega(i, {{lv.basis_cols[b], Rational(1)}}));
      for (std::size_t r = 0; r < col.size(); ++r) m(r, b) = col[r];
    }
    return m;
  }

 private:
  struct Level {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    SparseRowEchelon relations;
    std::vector<std::size_t> basis_cols;
    std::map<std::size_t, std::size_t> basis_position;
  };

  const Level& level(std::size_t i) const {
    if (i >= degrees_.size()) throw std::out_of_range("quotient: degree beyond the computed range");
    return degrees_[i];
  }

  static void compositions(std::size_t total, const VertexSet& face, std::size_t pos, Monomial& cur,
                           std::vector<Monomial>& out) {
    const std::size_t remaining_vars = face.size() - pos;
    if (remaining_vars == 0) {
      if (total == 0) out.push_back(cur);
      return;
    }
    for (std::size_t e = 1; e + (remaining_vars - 1) <= total; ++e) {
      cur.insert(cur.end(), e, face[pos]);
      compositions(total - e, face, pos + 1, cur, out);
      cur.resize(cur.size() - e);
    }
  }

  void build_degree(std::size_t i, DeterministicRng* rng) {
    Level lv;
    if (i == 0) {
      if (!faces_.empty()) lv.monomials.push_back({});
    } else {
      for (const auto& f : faces_) {
        if (f.empty() || f.size() > i) continue;
        Monomial cur;
        compositions(i, f, 0, cur, lv.monomials);
      }
      std::sort(lv.monomials.begin(), lv.monomials.end());
    }
    if (rng) {
      for (std::size_t t = lv.monomials.size(); t > 1; --t) std::swap(lv.monomials[t - 1], lv.monomials[rng->below(t)]);
    }
    for (std::size_t c = 0; c < lv.monomials.size(); ++c) lv.index.emplace(lv.monomials[c], c);
    std::vector<SparseVector> rows;
    if (i > 0) {
      const Level& prev = degrees_[i - 1];
      for (const auto& form : forms_) {
        for (const auto& mu : prev.monomials) {
          SparseVector sv;
          for (std::size_t v = 0; v < form.size(); ++v) {
            if (form[v].is_zero()) continue;
            auto it = lv.index.find(times_variable(mu, v));
            if (it != lv.index.end()) sv.emplace_back(it->second, form[v]);
          }
          std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          if (!sv.empty()) rows.push_back(std::move(sv));
        }
      }
    }
    lv.relations = SparseRowEchelon(lv.monomials.size(), rows);
    for (std::size_t c = 0; c < lv.monomials.size(); ++c) {
      if (!lv.relations.is_pivot(c)) {
        lv.basis_position.emplace(c, lv.basis_cols.size());
        lv.basis_cols.push_back(c);
      }
    }
    degrees_.push_back(std::move(lv));
  }

  SimplicialComplex complex_;
  std::vector<QVector> forms_;
  std::set<VertexSet> faces_;
  std::vector<Level> degrees_;
};

/// A*(T) for a Cayley polytope, reduced by the centered coordinate forms.
inline GradedQuotient cayley_quotient(const CayleyPolytope& k, std::size_t max_degree) {
  return GradedQuotient(cayley_complex(k), centered_linear_forms(k), max_degree);
}

struct GradedComponent {
  MonomialBasis basis;
  std::size_t dim = 0;
};

inline GradedComponent graded_component(const SimplicialComplex& t, const std::vector<QVector>& forms, std::size_t i) {
  const GradedQuotient q(t, forms, i);
  return {q.basis(i), q.dim(i)};
}

/// Multiplication by omega^j from A^i to A^{i+j}, as dim A^{i+j} x dim A^i.
inline QMatrix omega_power_matrix(const GradedQuotient& q, std::size_t i, std::size_t j) {
  QMatrix m = QMatrix::identity(q.dim(i));
  for (std::size_t t = 0; t < j; ++t) m = q.omega_matrix(i + t) * m;
  return m;
}

struct LefschetzCertificate {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t dim_source = 0;
  std::size_t dim_target = 0;
  std::size_t map_rank = 0;
  bool injective = false;
};

inline bool in_lefschetz_range(std::size_t d, std::size_t i, std::size_t j) { return 2 * i <= d && j <= d - 2 * i; }

inline LefschetzCertificate lefschetz_certificate(const GradedQuotient& q, std::size_t d, std::size_t i, std::size_t j) {
  if (!in_lefschetz_range(d, i, j)) throw std::out_of_range("outside the Lefschetz range");
  LefschetzCertificate c;
  c.i = i;
  c.j = j;
  c.dim_source = q.dim(i);
  c.dim_target = q.dim(i + j);
  c.map_rank = rank(omega_power_matrix(q, i, j));
  c.injective = c.map_rank == c.dim_source;
  return c;
}

/// Pairs (i, j) with 2i <= d and j <= d - 2i, ordered by i then j.
inline std::vector<std::pair<std::size_t, std::size_t>> lefschetz_pairs(std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; 2 * i <= d; ++i)
    for (std::size_t j = 0; j <= d - 2 * i; ++j) out.emplace_back(i, j);
  return out;
}

inline std::vector<LefschetzCertificate> all_certificates(const GradedQuotient& q, std::size_t d) {
  std::vector<LefschetzCertificate> out;
  for (auto [i, j] : lefschetz_pairs(d)) out.push_back(lefschetz_certificate(q, d, i, j));
  return out;
}

}  // namespace cayley
