#include <gtest/gtest.h>

#include "cayley/facering.hpp"
#include "cayley/random.hpp"
#include "fixtures.hpp"

using namespace cayley;

namespace {

std::set<VertexSet> brute_minimal_nonfaces(const SimplicialComplex& k) {
  const std::size_t n = k.vertex_count();
  std::set<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    VertexSet s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (k.contains(s)) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      VertexSet t = s;
      t.erase(t.begin() + static_cast<long>(drop));
      if (!k.contains(t)) minimal = false;
    }
    if (minimal) out.insert(s);
  }
  return out;
}

std::vector<std::size_t> to_size(const std::vector<std::int64_t>& v, std::size_t upto) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= upto; ++i) out.push_back(static_cast<std::size_t>(v[i]));
  return out;
}

struct Prepared {
  CayleyPolytope cayley;
  SimplicialComplex t;
  HVector h;
};

Prepared prepare(const PureCollection& c) {
  CayleyPolytope k = cayley_polytope(c);
  SimplicialComplex t = cayley_complex(k);
  HVector h = h_from_f(f_vector(t), cayley_h_dimension(k));
  return {std::move(k), std::move(t), std::move(h)};
}

}  // namespace

TEST(MinimalNonfaces, MatchBruteForce) {
  DeterministicRng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.below(6);
    std::vector<VertexSet> gens;
    for (int g = 0; g < 4; ++g) {
      VertexSet f;
      for (std::size_t v = 0; v < n; ++v)
        if (rng.below(2)) f.push_back(v);
      gens.push_back(f);
    }
    const SimplicialComplex k(n, gens);
    EXPECT_EQ(minimal_nonfaces(k), brute_minimal_nonfaces(k)) << "trial " << trial;
  }
}

TEST(MinimalNonfaces, Octahedron) {
  // Boundary of the cross-polytope: the minimal non-faces are the antipodal pairs.
  const SimplicialComplex k(6, {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
  EXPECT_EQ(minimal_nonfaces(k), (std::set<VertexSet>{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(LinearForms, RawCoordinatesContainOmega) {
  // The level coordinates of all vertices sum to the all-ones form, so the raw
  // coordinate forms kill omega already in degree one.
  const Prepared p = prepare(fixtures::two_triangles());
  const GradedQuotient q(p.t, coordinate_linear_forms(p.cayley), 2);
  EXPECT_TRUE(q.omega_matrix(0).is_zero());
}

TEST(LinearForms, CenteredFormsSpanAndAvoidOmega) {
  for (const auto& c : {fixtures::two_triangles(), fixtures::three_triangles(), fixtures::two_segments(),
                        fixtures::single(cyclic_polytope(4, 7))}) {
    const CayleyPolytope k = cayley_polytope(c);
    const auto centered = centered_linear_forms(k);
    const std::size_t n = k.vertices().size();
    ASSERT_EQ(centered.size(), k.d() + k.m() - 1);
    EXPECT_EQ(rank(QMatrix::from_rows(centered)), centered.size());
    auto with = centered;
    with.push_back(QVector(n, Rational(1)));
    EXPECT_EQ(rank(QMatrix::from_rows(with)), centered.size() + 1);
    // Centered forms lie in the span of the raw coordinate forms.
    auto raw = coordinate_linear_forms(k);
    const std::size_t r = rank(QMatrix::from_rows(raw));
    raw.insert(raw.end(), centered.begin(), centered.end());
    EXPECT_EQ(rank(QMatrix::from_rows(raw)), r);
  }
}

TEST(GradedQuotient, DimensionsMatchH) {
  struct Case {
    PureCollection c;
    std::vector<std::size_t> dims;
  };
  const std::vector<Case> cases{
      {fixtures::two_triangles(), {1, 3, 3}},
      {fixtures::single(simplex_polytope(3)), {1, 1, 1, 1}},
      {fixtures::single(cyclic_polytope(4, 7)), {1, 3, 6, 3, 1}},
      {fixtures::two_segments(), {1, 2}},
  };
  for (const auto& cs : cases) {
    const Prepared p = prepare(cs.c);
    const std::size_t d = cs.c.d();
    const GradedQuotient q = cayley_quotient(p.cayley, d);
    EXPECT_EQ(q.dims(), cs.dims);
    EXPECT_EQ(q.dims(), to_size(p.h.entries, d));
    EXPECT_EQ(graded_component(p.t, q.forms(), 1).dim, q.dim(1));
    for (const auto& mu : q.basis(1).monomials) EXPECT_TRUE(q.is_face_supported(mu));
  }
}

TEST(GradedQuotient, OmegaPowersCompose) {
  // The matrix of omega^j equals reducing omega^j * mu directly, without
  // intermediate normal forms.
  const Prepared p = prepare(fixtures::single(cyclic_polytope(4, 7)));
  const GradedQuotient q = cayley_quotient(p.cayley, 4);
  for (std::size_t i = 0; i <= 2; ++i) {
    for (std::size_t j = 0; i + j <= 4; ++j) {
      const QMatrix m = omega_power_matrix(q, i, j);
      ASSERT_EQ(m.rows(), q.dim(i + j));
      ASSERT_EQ(m.cols(), q.dim(i));
      const auto basis = q.basis(i).monomials;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        SparseVector poly{{*q.column_of(i, basis[b]), Rational(1)}};
        for (std::size_t t = 0; t < j; ++t) poly = q.times_omega(i + t, poly);
        EXPECT_EQ(q.normal_form(i + j, poly), m.col(b)) << "i=" << i << " j=" << j << " b=" << b;
      }
    }
  }
}

TEST(GradedQuotient, RanksIndependentOfMonomialOrder) {
  const Prepared p = prepare(perturb(fixtures::three_triangles(), Rational(1, 50), 1));
  const auto forms = centered_linear_forms(p.cayley);
  const GradedQuotient base(p.t, forms, 2);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const GradedQuotient shuffled(p.t, forms, 2, seed);
    EXPECT_EQ(shuffled.dims(), base.dims());
    for (const auto& [a, b] : std::vector<std::pair<LefschetzCertificate, LefschetzCertificate>>{
             {lefschetz_certificate(base, 2, 0, 2), lefschetz_certificate(shuffled, 2, 0, 2)},
             {lefschetz_certificate(base, 2, 1, 0), lefschetz_certificate(shuffled, 2, 1, 0)}}) {
      EXPECT_EQ(a.map_rank, b.map_rank);
    }
  }
}

TEST(Lefschetz, CyclicFourSevenCertificate) {
  const Prepared p = prepare(fixtures::single(cyclic_polytope(4, 7)));
  const GradedQuotient q = cayley_quotient(p.cayley, 4);
  const LefschetzCertificate c = lefschetz_certificate(q, 4, 1, 2);
  EXPECT_EQ(c.dim_source, 3u);
  EXPECT_EQ(c.dim_target, 3u);
  EXPECT_EQ(c.map_rank, 3u);
  EXPECT_TRUE(c.injective);
  for (const auto& cert : all_certificates(q, 4)) EXPECT_TRUE(cert.injective) << cert.i << "," << cert.j;
}

TEST(Lefschetz, RangeIsEnforced) {
  const Prepared p = prepare(fixtures::two_triangles());
  const GradedQuotient q = cayley_quotient(p.cayley, 2);
  EXPECT_THROW(lefschetz_certificate(q, 2, 1, 1), std::out_of_range);
  EXPECT_THROW(lefschetz_certificate(q, 2, 2, 0), std::out_of_range);
  EXPECT_NO_THROW(lefschetz_certificate(q, 2, 0, 2));
}

TEST(Lefschetz, LefschetzPairs) {
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(lefschetz_pairs(1), (P{{0, 0}, {0, 1}}));
  EXPECT_EQ(lefschetz_pairs(2), (P{{0, 0}, {0, 1}, {0, 2}, {1, 0}}));
  EXPECT_EQ(lefschetz_pairs(3), (P{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}}));
}
