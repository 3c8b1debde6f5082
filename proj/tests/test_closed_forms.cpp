#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "shapewalk/diffusivity.hpp"
#include "shapewalk/errors.hpp"
#include "shapewalk/potentials.hpp"
#include "shapewalk/remark_system.hpp"

using namespace shapewalk;

namespace {

Shape S(std::vector<int> d) { return Shape::from_entries(d); }

Rational Q(long p, unsigned long q) { return fraction(p, q); }

}  // namespace

TEST(ClosedForm, Increments) {
  EXPECT_EQ(closed_form_increment(1, 1), 1);
  EXPECT_EQ(closed_form_increment(2, 1), Q(5, 4));
  EXPECT_EQ(closed_form_increment(2, 2), Q(3, 4));
  EXPECT_EQ(closed_form_increment(10, 1), Q(7, 4));
  EXPECT_EQ(closed_form_increment(10, 10), Q(1, 4));
  EXPECT_THROW(closed_form_increment(3, 4), DimensionError);
}

TEST(ClosedForm, IncrementsSumToK) {
  for (int k = 1; k <= 20; ++k) {
    Rational sum = 0;
    for (int i = 1; i <= k; ++i) sum += closed_form_increment(k, i);
    EXPECT_EQ(sum, k);
  }
}

TEST(ClosedForm, PotentialK2) {
  const auto f = closed_form_potential(2);
  EXPECT_EQ(f.at(S({-1, -1})), 2);
  EXPECT_EQ(f.at(S({-1, 1})), Q(5, 4));
  EXPECT_EQ(f.at(S({1, -1})), Q(3, 4));
  EXPECT_EQ(f.at(S({1, 1})), 0);
}

TEST(BasePotentials, K2AllOnes) {
  const auto b = base_potentials(2);
  EXPECT_EQ(b.f1.at(S({1, 1})), 2);
  EXPECT_EQ(b.f2.at(S({1, 1})), 0);
  EXPECT_EQ(b.f.at(S({1, 1})), 0);
}

TEST(BasePotentials, FMatchesClosedForm) {
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(base_potentials(k).f, closed_form_potential(k));
}

TEST(BasePotentials, F2IsAlpha2MinusAlphaBar2) {
  for (int k = 2; k <= 6; ++k) {
    const ShapeGraph g = build_graph(k);
    const auto f2 = base_potentials(k).f2;
    for (const Shape& a : g.vertices()) {
      const DegreeProfile p = degree_profile(g, a);
      EXPECT_EQ(f2.at(a), p.alpha[2] - p.alpha_bar[2]);
    }
  }
}

TEST(BasePotentials, F2Recurrences) {
  for (int k = 1; k <= 6; ++k) {
    const ShapeGraph g = build_graph(k);
    const auto lo = base_potentials(k).f2;
    const auto hi = base_potentials(k + 1).f2;
    for (const Shape& a : g.vertices()) {
      const DegreeProfile p = degree_profile(g, a);
      EXPECT_EQ(hi.at(a.prepend(1)), lo.at(a) + p.alpha_bar[1]);
      EXPECT_EQ(hi.at(a.prepend(-1)), lo.at(a) - p.alpha[1]);
    }
  }
}

TEST(Phi, DirectMatchesClosedForm) {
  for (int k = 1; k <= 7; ++k) {
    const ShapeGraph g = build_graph(k);
    const auto direct = phi_profiles(g);
    const auto closed = phi_profiles_closed_form(g);
    EXPECT_EQ(direct.phi, closed.phi);
    EXPECT_EQ(direct.phi_bar, closed.phi_bar);
  }
}

TEST(Phi, SumIsDivGradF2) {
  const ShapeGraph g = build_graph(2);
  const auto p = phi_profiles(g);
  const Shape a = S({1, 1});
  EXPECT_EQ(p.phi.at(a) + p.phi_bar.at(a), 0);
  const DegreeProfile d = degree_profile(g, a);
  EXPECT_EQ(p.phi.at(a) + p.phi_bar.at(a), -4 * (d.alpha_even() - d.alpha_bar_even()));
}

TEST(RemarkSystem, Matrices) {
  const auto s1 = remark_system(1);
  EXPECT_EQ(s1.matrix, (std::vector<std::vector<std::int64_t>>{{1}}));
  EXPECT_EQ(s1.rhs, (std::vector<std::int64_t>{1}));
  const auto s2 = remark_system(2);
  EXPECT_EQ(s2.matrix, (std::vector<std::vector<std::int64_t>>{{3, -1}, {-1, 3}}));
  EXPECT_EQ(s2.rhs, (std::vector<std::int64_t>{3, 1}));
  const auto s3 = remark_system(3);
  EXPECT_EQ(s3.matrix, (std::vector<std::vector<std::int64_t>>{{9, -3, -1}, {-3, 9, -3}, {-1, -3, 9}}));
  EXPECT_EQ(s3.rhs, (std::vector<std::int64_t>{9, 3, 1}));
  EXPECT_THROW(remark_system(0), CapacityError);
}

TEST(RemarkSystem, Solutions) {
  EXPECT_EQ(solve_remark_system(remark_system(1)), (std::vector<Rational>{1}));
  EXPECT_EQ(solve_remark_system(remark_system(2)), (std::vector<Rational>{Q(5, 4), Q(3, 4)}));
  const auto f10 = solve_remark_system(remark_system(10));
  EXPECT_EQ(f10.front(), Q(7, 4));
  EXPECT_EQ(f10.back(), Q(1, 4));
}

TEST(RemarkSystem, AgreesWithPlainElimination) {
  for (int k = 1; k <= 12; ++k) {
    const auto s = remark_system(k);
    std::vector<std::vector<mpq_class>> m;
    std::vector<mpq_class> b;
    for (int i = 0; i < k; ++i) {
      m.emplace_back();
      for (auto x : s.matrix[i]) m.back().emplace_back(static_cast<long>(x));
      b.emplace_back(static_cast<long>(s.rhs[i]));
    }
    const auto want = oracle::gauss(m, b);
    const auto got = solve_remark_system(s);
    for (int j = 0; j < k; ++j) {
      EXPECT_EQ(got[j], want[j]);
      EXPECT_EQ(got[j], closed_form_increment(k, j + 1));
    }
  }
}

TEST(Sigma, ExactSmall) {
  const auto r1 = sigma_squared_exact(1);
  EXPECT_EQ(r1.sigma2, Q(2, 3));
  EXPECT_EQ(r1.a_dot_grad, Q(1, 3));
  EXPECT_EQ(r1.a_norm2, 1);
  EXPECT_EQ(r1.b_norm2, r1.sigma2);
  EXPECT_EQ(sigma_squared_exact(2).sigma2, Q(1, 2));
}

TEST(Sigma, ExactUpToEight) {
  for (int k = 1; k <= 8; ++k) {
    const auto r = sigma_squared_exact(k);
    EXPECT_EQ(r.sigma2, Q(2, static_cast<unsigned long>(k + 2)));
    EXPECT_EQ(r.a_dot_grad, Q(k, static_cast<unsigned long>(k + 2)));
  }
}

TEST(Sigma, ClosedFormAtTen) {
  EXPECT_EQ(sigma_squared_closed_form(10), Q(1, 6));
  EXPECT_EQ(1 - sigma_squared_closed_form(10), Q(5, 6));
  EXPECT_THROW(sigma_squared_exact(9), CapacityError);
}

TEST(Sigma, FacetDecomposition) {
  for (int k = 1; k <= 7; ++k) {
    const ShapeGraph g = build_graph(k);
    const auto grad = gradient(g, closed_form_potential(k));
    EXPECT_EQ(positive_edge_average(grad), facet_decomposition_value(g));
  }
}
