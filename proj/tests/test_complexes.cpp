#include <gtest/gtest.h>

#include "cayley/complexes.hpp"
#include "cayley/random.hpp"
#include "fixtures.hpp"

using namespace cayley;
using fixtures::pts;

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, index = power

Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// h-vector from the generating-function identity
//   sum_k h_k t^{D-k} = sum_i f_{i-1} (t-1)^{D-i}.
std::vector<std::int64_t> h_by_polynomial(const FVector& f, int D) {
  Poly total(static_cast<std::size_t>(D) + 1, 0);
  for (int i = 0; i <= D; ++i) {
    Poly p{1};
    for (int e = 0; e < D - i; ++e) p = mul(p, Poly{-1, 1});
    for (std::size_t c = 0; c < p.size(); ++c) total[c] += f.at(i - 1) * p[c];
  }
  std::vector<std::int64_t> h(static_cast<std::size_t>(D) + 1);
  for (int k = 0; k <= D; ++k) h[static_cast<std::size_t>(k)] = total[static_cast<std::size_t>(D - k)];
  return h;
}

SimplicialComplex random_complex(DeterministicRng& rng, std::size_t max_vertices) {
  const std::size_t n = 1 + rng.below(max_vertices);
  std::vector<VertexSet> gens;
  const std::size_t count = 1 + rng.below(6);
  for (std::size_t g = 0; g < count; ++g) {
    VertexSet f;
    for (std::size_t v = 0; v < n; ++v)
      if (rng.below(3) == 0) f.push_back(v);
    if (f.size() > 5) f.resize(5);
    gens.push_back(f);
  }
  return SimplicialComplex(n, gens);
}

}  // namespace

TEST(Binomial, Basics) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(30, 15), 155117520);
}

TEST(SimplicialComplex, KeepsMaximalFaces) {
  SimplicialComplex k(4, {{0, 1}, {0, 1, 2}, {2, 1}, {3}});
  EXPECT_EQ(k.facets(), (std::vector<VertexSet>{{0, 1, 2}, {3}}));
  EXPECT_TRUE(k.contains({0, 2}));
  EXPECT_FALSE(k.contains({0, 3}));
  EXPECT_EQ(f_vector(k), (FVector{{1, 4, 3, 1}}));
  EXPECT_THROW(SimplicialComplex(2, {{0, 2}}), std::invalid_argument);
}

TEST(HVector, SimplexBoundary) {
  // Boundary of the tetrahedron.
  SimplicialComplex k(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  EXPECT_EQ(h_from_f(f_vector(k), 3).entries, (std::vector<std::int64_t>{1, 1, 1, 1}));
  EXPECT_THROW(h_from_f(f_vector(k), 2), std::invalid_argument);
}

TEST(HVector, MatchesGeneratingFunction) {
  DeterministicRng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const SimplicialComplex k = random_complex(rng, 10);
    const int D = k.dimension() + 1 + static_cast<int>(rng.below(3));
    EXPECT_EQ(h_from_f(f_vector(k), D).entries, h_by_polynomial(f_vector(k), D)) << "trial " << trial;
  }
}

TEST(HVector, RoundTripOnRandomComplexes) {
  DeterministicRng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const SimplicialComplex k = random_complex(rng, 12);
    const FVector f = f_vector(k);
    const int D = k.dimension() + 1;
    EXPECT_EQ(f_from_h(h_from_f(f, D)), f) << "trial " << trial;
  }
}

TEST(HVector, TopEntryIsReducedEulerCharacteristic) {
  DeterministicRng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const SimplicialComplex k = random_complex(rng, 9);
    const int D = k.dimension() + 1;
    std::int64_t chi = 0;
    for (const auto& face : k.faces()) chi += face.size() % 2 == 1 ? 1 : -1;  // dim even -> +1, empty -> -1
    const std::int64_t sign = (D - 1) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(h_from_f(f_vector(k), D).at(D), sign * chi);
  }
}

TEST(CayleyComplex, TwoTriangles) {
  const CayleyPolytope k = cayley_polytope(fixtures::two_triangles());
  const RelativeComplex rel = relative_cayley_complex(k);
  EXPECT_EQ(f_vector(rel.ambient), (FVector{{1, 6, 12, 6}}));
  EXPECT_EQ(f_vector(rel), (FVector{{0, 0, 6, 6}}));
  EXPECT_EQ(cayley_complex(k), rel.ambient);
  EXPECT_EQ(cayley_h_dimension(k), 3);
  EXPECT_EQ(h_from_f(f_vector(rel.ambient), 3).entries, (std::vector<std::int64_t>{1, 3, 3, -1}));
  EXPECT_EQ(minkowski_f_via_cayley(k), (std::vector<std::int64_t>{6, 6}));
}

TEST(CayleyComplex, TwoSegments) {
  const CayleyPolytope k = cayley_polytope(fixtures::two_segments());
  const RelativeComplex rel = relative_cayley_complex(k);
  EXPECT_EQ(f_vector(rel.ambient), (FVector{{1, 4, 2}}));
  EXPECT_EQ(f_vector(rel), (FVector{{0, 0, 2}}));
  EXPECT_EQ(minkowski_f_via_cayley(k), (std::vector<std::int64_t>{2}));
}

TEST(CayleyComplex, SingleSummandIsTheBoundary) {
  const Polytope p = cyclic_polytope(3, 6);
  const CayleyPolytope k = cayley_polytope(fixtures::single(p));
  const RelativeComplex rel = relative_cayley_complex(k);
  EXPECT_EQ(f_vector(rel.ambient), (FVector{{1, 6, 12, 8}}));
  // With one summand every non-empty face is mixed, so T° differs only by the empty face.
  EXPECT_EQ(f_vector(rel), (FVector{{0, 6, 12, 8}}));
}

TEST(CayleyComplex, RejectsNonSimplicialInput) {
  const CayleyPolytope k = cayley_polytope(fixtures::two_squares());
  EXPECT_THROW(cayley_complex(k), NotSimplicialError);
  EXPECT_THROW(cayley_complex(cayley_polytope(fixtures::single(Polytope(
                   3, pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}))))),
               NotSimplicialError);
}

TEST(CayleyComplex, RelativeLowEntriesVanish) {
  DeterministicRng rng(6);
  for (auto [d, m] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    std::vector<Polytope> ps;
    for (std::size_t i = 0; i < m; ++i) ps.push_back(d == 1 ? cyclic_polytope(1, 2) : stacked_polytope(d, d + 2, i));
    const PureCollection c = perturb(PureCollection(d, ps), Rational(1, 10), 5 + d + m);
    const CayleyPolytope k = cayley_polytope(c);
    ASSERT_TRUE(check_cayley_simplicial(k).simplicial);
    const RelativeComplex rel = relative_cayley_complex(k);
    const HVector h = h_from_f(f_vector(rel), cayley_h_dimension(k));
    for (int q = 0; q <= static_cast<int>(m) - 1; ++q) EXPECT_EQ(h.at(q), 0) << "k=" << q;
    EXPECT_EQ(minkowski_f_via_cayley(k), face_lattice(minkowski_sum(c)).f_vector());
  }
}

TEST(CayleyComplex, ThreeTrianglesTail) {
  const CayleyPolytope k = cayley_polytope(fixtures::three_triangles());
  ASSERT_TRUE(check_cayley_simplicial(k).simplicial);
  const HVector h = h_from_f(f_vector(cayley_complex(k)), cayley_h_dimension(k));
  EXPECT_EQ(h.D, 4);
  EXPECT_EQ(h.at(3), -4);
  EXPECT_EQ(h.at(4), 1);
}
