#include <gtest/gtest.h>

#include <atkin/atkin_polys.hpp>
#include <atkin/rogers_cf.hpp>

using namespace atkin;

namespace
{

void expect_report(const report &r)
{
    EXPECT_TRUE(r.passed()) << r.suite;
    for (const auto &e : r.entries) {
        EXPECT_TRUE(e.passed) << r.suite << " " << e.id << ": " << e.detail;
    }
}

} // namespace

TEST(RogersCF, JFraction)
{
    const cf_coeffs c = atkin_cf(7);
    EXPECT_EQ(c.a0, 1);
    EXPECT_EQ(c.alpha[0], 720);
    EXPECT_EQ(c.beta[0], 393120);
    EXPECT_EQ(c.alpha[1], 920);
    EXPECT_EQ(c.alpha[1], recursion_a(2, 1));
    for (long n = 1; n <= 7; ++n) {
        EXPECT_EQ(c.alpha[static_cast<std::size_t>(n - 1)], alpha_closed(n)) << n;
        EXPECT_EQ(c.beta[static_cast<std::size_t>(n - 1)], beta_closed(n)) << n;
    }
    // alpha_{n+1} = a_{n,2} and beta_n = b_{n,2} in the recursion of the Atkin polynomials
    for (long n = 2; n <= 6; ++n) {
        EXPECT_EQ(c.alpha[static_cast<std::size_t>(n)], recursion_coeffs(2, n).first) << n;
        EXPECT_EQ(c.beta[static_cast<std::size_t>(n - 1)], recursion_coeffs(2, n).second) << n;
    }
    EXPECT_THROW(jfraction_from_moments({rat(1), rat(0)}, 1), insufficient_precision);
    // 1, 1, 1, ...: a point mass, L(p_1^2) = 0
    EXPECT_THROW(jfraction_from_moments(std::vector<rat>(5, rat(1)), 2), singular_hankel);
}

TEST(RogersCF, SFraction)
{
    const cf_coeffs c = atkin_cf(7);
    EXPECT_EQ(c.e[0], 720);
    EXPECT_EQ(c.e[1], 546);
    EXPECT_EQ(c.e[2], 374);
    for (long n = 1; n <= 14; ++n) {
        EXPECT_EQ(c.e[static_cast<std::size_t>(n - 1)], e_closed(n)) << n;
    }
    expect_report(sj_consistency(c));
    EXPECT_EQ(sj_consistency(c).entries.size(), 14u);
    // 1/(1 - x): e_1 = 1, then a zero pivot
    EXPECT_THROW(sfraction_from_series(series_from_ints("x", 0, {1, 1, 1, 1, 1, 1}), 4), qd_breakdown);
    EXPECT_THROW(sfraction_from_series(series_from_ints("x", 1, {1, 1, 1}), 2), qd_breakdown);
}

TEST(RogersCF, Weights)
{
    const cf_coeffs c = atkin_cf(5);
    EXPECT_EQ(c.A[0], 1);
    for (long r = 1; r <= 4; ++r) {
        EXPECT_EQ(c.A[static_cast<std::size_t>(r)], normalizing_factor(r, 2)) << r;
    }
}

TEST(RogersCF, Phi)
{
    EXPECT_EQ(phi_series(0, 10, phi_route::recurrence), atkin_h(10));
    EXPECT_EQ(phi_series(0, 10), atkin_h(10));
    EXPECT_EQ(phi_series(1, 8).coeff(0), 1);
    const qseries h = atkin_h(12);
    const qseries x = qseries::monomial("x", 1, 1, 12);
    const qseries phi1 = ((h - rat(720) * (x * h) - rat(1)).shift(-2) / rat(393120)).truncated(10);
    EXPECT_EQ(phi_series(1, 10, phi_route::recurrence), phi1);
    expect_report(phi_routes_check(4, 12));
    EXPECT_THROW(phi_series(-1, 5), index_out_of_range);
}

TEST(RogersCF, AdditionFormula)
{
    expect_report(addition_formula_check(addition_case::cosine, 8));
    expect_report(addition_formula_check(addition_case::atkin, 5));
    expect_report(addition_formula_check(addition_case::atkin, 7));
}

TEST(RogersCF, AddPhi)
{
    expect_report(addphi_check(5));
}
