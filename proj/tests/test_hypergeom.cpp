#include <array>

#include <gtest/gtest.h>

#include <atkin/hypergeom.hpp>
#include <atkin/modular_forms.hpp>

using namespace atkin;

TEST(Hypergeom, Pfq)
{
    const qseries f = hyp2f1(rat(1, 12), rat(5, 12), 1, 4);
    EXPECT_EQ(f.coeff(0), 1);
    EXPECT_EQ(f.coeff(1), make_rat(5, 144));
    // (1/12)(13/12)(5/12)(17/12) / (2!)^2
    EXPECT_EQ(f.coeff(2), make_rat(1 * 13 * 5 * 17, 144 * 144 * 4));
    EXPECT_EQ(hyp2f1(rat(3), rat(4), rat(5), 1), qseries::one("z", 1));
    EXPECT_THROW(hyp2f1(rat(1), rat(1), rat(-2), 5), invalid_params);
    EXPECT_THROW(pfq_series({{rat(1)}, {rat(1)}}, 5), invalid_params);
    // 1F0(a;;z) = (1-z)^{-a}
    const qseries b = pfq_series({{make_rat(1, 3)}, {}}, 10);
    EXPECT_EQ(b, series_from_ints("z", 0, {1, -1}, 10).pow(make_rat(-1, 3)));
}

TEST(Hypergeom, EulerTransform)
{
    const std::vector<std::array<rat, 3>> triples{
        {rat(1, 12), rat(5, 12), rat(1)},     {rat(-1, 12), rat(7, 12), rat(1)},
        {rat(5, 12), rat(13, 12), rat(1)},    {rat(11, 12), rat(19, 12), rat(3)},
        {rat(13, 12), rat(17, 12), rat(2)},   {rat(13, 12), rat(17, 12), rat(3)},
    };
    for (const auto &t : triples) {
        EXPECT_TRUE(euler_transform_holds(t[0], t[1], t[2], 20));
    }
    // the instance quoted for 2F1(1/12,5/12;1)
    const qseries lhs = hyp2f1(rat(1, 12), rat(5, 12), 1, 16);
    const qseries rhs =
        series_from_ints("z", 0, {1, -1}, 16).pow(make_rat(1, 2)) * hyp2f1(rat(11, 12), rat(7, 12), 1, 16);
    EXPECT_EQ(lhs, rhs);
}

TEST(Hypergeom, DifferentialEquations)
{
    EXPECT_TRUE(hyp_operator_residual({{rat(1, 12), rat(5, 12)}, {rat(1)}}, 15).is_zero());
    EXPECT_TRUE(hyp_operator_residual({{rat(1, 3), rat(1, 2), rat(2, 3)}, {rat(1), rat(5, 4)}}, 15).is_zero());
    EXPECT_TRUE(log_solution_residual(rat(1, 12), rat(5, 12), 15).is_zero());
    EXPECT_TRUE(log_solution_residual(rat(1, 2), rat(1, 2), 15).is_zero());
    EXPECT_TRUE(log_solution_residual(rat(1, 2), rat(1, 3), 15).is_zero());
}

TEST(Hypergeom, LogSeries)
{
    const qseries g = g21_series(rat(1, 12), rat(5, 12), 10);
    EXPECT_EQ(g.coeff(0), 0);
    EXPECT_THROW(g21_series(rat(-1), rat(1, 2), 5), invalid_params);
    // t exp(G1(1728t)/F1(1728t)) reproduces q(t) to t^2
    const long n = 8;
    const qseries f1 = hyp2f1(rat(1, 12), rat(5, 12), 1, n, "t").scale_variable(1728);
    const qseries g1 = g21_series(rat(1, 12), rat(5, 12), n, "t").scale_variable(1728);
    const qseries q = (g1 / f1).exp().shift(1);
    EXPECT_EQ(q.coeff(1), 1);
    EXPECT_EQ(q.coeff(2), 744);
    EXPECT_EQ(q.coeff(3), 750420);
}

TEST(Hypergeom, EisensteinHypergeometric)
{
    // E4 = F^4, E6 = (1-1728t)^{1/2} F^6, E2 = F * 2F1(-1/12,7/12;1;1728t), t = 1/j
    const long n = 20;
    const qseries t = t_of_q(n);
    const qseries f = compose(hyp2f1(rat(1, 12), rat(5, 12), 1, n).scale_variable(1728), t);
    EXPECT_EQ(f.pow(4L), eisenstein_series(4, n));
    const qseries s = compose(series_from_ints("z", 0, {1, -1728}, n).pow(make_rat(1, 2)), t);
    EXPECT_EQ(s * f.pow(6L), eisenstein_series(6, n));
    const qseries f2 = compose(hyp2f1(rat(-1, 12), rat(7, 12), 1, n).scale_variable(1728), t);
    EXPECT_EQ(f * f2, eisenstein_series(2, n));
}

TEST(Hypergeom, AlphaBeta)
{
    EXPECT_EQ(alpha_beta_poly(0, alpha_beta_kind::alpha0), poly::constant(1));
    EXPECT_EQ(alpha_beta_poly(0, alpha_beta_kind::beta), poly::constant(1));
    EXPECT_EQ(alpha_beta_poly(0, alpha_beta_kind::alpha1), poly::constant(1));
    EXPECT_EQ(alpha_beta_poly(1, alpha_beta_kind::alpha0), poly({60, 1}));
    // X (X - 1728) ... : 1728*(7/12)(11/12) - 1728 = 924 - 1728
    EXPECT_EQ(alpha_beta_poly(1, alpha_beta_kind::alpha1), poly({924 - 1728, 1}));
    EXPECT_EQ(alpha_beta_poly(1, alpha_beta_kind::beta), poly({-84, 1}));
    for (long n = 0; n <= 8; ++n) {
        for (auto k : {alpha_beta_kind::alpha0, alpha_beta_kind::alpha1, alpha_beta_kind::beta}) {
            const poly p = alpha_beta_poly(n, k);
            EXPECT_EQ(p.degree(), n);
            EXPECT_TRUE(p.is_monic());
            // after the 12^{3i} scaling only the (i!)^2 of the series remains in the denominator
            for (long i = 0; i <= n; ++i) {
                const integer fi = factorial(i);
                EXPECT_TRUE(is_integer(p.coeff(n - i) * rat(fi * fi)));
            }
        }
    }
}
