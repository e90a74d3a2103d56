#include <gtest/gtest.h>

#include <atkin/extremal_forms.hpp>

using namespace atkin;

namespace
{

const std::vector<extremal_route> all_routes{extremal_route::diff_recursion, extremal_route::linear_recursion,
                                             extremal_route::ab_polys, extremal_route::hypergeometric};

bool integral(const qseries &f)
{
    for (const auto &c : f.coeffs()) {
        if (!is_integer(c)) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(ExtremalForms, NormalizingFactors)
{
    EXPECT_EQ(normalizing_factor(1, 0), 332640);
    EXPECT_EQ(normalizing_factor(1, 2), 393120);
    EXPECT_EQ(normalizing_factor(0, 2), 1);
    EXPECT_EQ(normalizing_factor(0, 0), 1);
    // G6 = (E2E4 - E6)/720, G8 = (E4^2 - E2E6)/1008
    EXPECT_EQ(normalizing_factor(0, 6), 720);
    EXPECT_EQ(normalizing_factor(0, 8), 1008);
    EXPECT_EQ(normalizing_factor(2, 4), normalizing_factor(2, 0));
    EXPECT_EQ(normalizing_factor(2, 14), normalizing_factor(3, 2));
    for (long m = 0; m <= 12; ++m) {
        EXPECT_TRUE(is_integer(normalizing_factor(m, 2)));
        EXPECT_TRUE(is_integer(normalizing_factor(m, 8)));
    }
    EXPECT_THROW(normalizing_factor(1, 3), index_out_of_range);
}

TEST(ExtremalForms, KnownExamples)
{
    const qseries g12 = extremal_series(12, 8);
    const std::vector<long> c12{0, 0, 1, 56, 1002, 9296, 57708, 269040};
    const std::vector<long> c14{0, 0, 1, 128, 4050, 58880, 525300, 3338496};
    for (long e = 0; e < 8; ++e) {
        EXPECT_EQ(g12.coeff(e), c12[static_cast<std::size_t>(e)]);
        EXPECT_EQ(extremal_series(14, 8).coeff(e), c14[static_cast<std::size_t>(e)]);
    }
    EXPECT_EQ(extremal_series(2, 10), eisenstein_series(2, 10));
}

TEST(ExtremalForms, DivisorSumOracles)
{
    // n sigma_{k}(n) oracle for G6, G8, G10; G12 from (n sigma_9 - tau)/1050
    const long n = 10;
    for (auto [w, k] : std::vector<std::pair<long, long>>{{6, 3}, {8, 5}, {10, 7}}) {
        const qseries g = extremal_series(w, n);
        EXPECT_EQ(g.coeff(0), 0);
        for (long e = 1; e < n; ++e) {
            EXPECT_EQ(g.coeff(e), rat(e * divisor_sigma(k, e))) << w << " " << e;
        }
    }
    EXPECT_EQ(extremal_series(12, 10).coeff(8), 1024532);
    EXPECT_EQ(extremal_series(14, 10).coeff(9), 68121600);
}

TEST(ExtremalForms, RoutesAgree)
{
    const long prec = 24;
    for (long w = 2; w <= 50; w += 2) {
        if (w == 4) {
            continue;
        }
        const qseries ref = extremal_series(w, prec, extremal_route::diff_recursion);
        for (auto r : all_routes) {
            EXPECT_EQ(extremal_series(w, prec, r), ref) << "w=" << w << " route " << route_name(r);
        }
    }
}

TEST(ExtremalForms, Extremality)
{
    const long prec = 24;
    for (long w = 2; w <= 50; w += 2) {
        if (w == 4) {
            continue;
        }
        const extremal_form g = extremal(w, prec);
        const long m = extremal_dimension(w);
        EXPECT_EQ(g.series.true_valuation(), m - 1) << w;
        EXPECT_EQ(g.series.coeff(m - 1), 1);
        const depth_decomposition d = decompose_depth1(g.series, w);
        EXPECT_FALSE(d.f1.is_zero()) << "depth must be exactly 1 at w=" << w;
        EXPECT_EQ(eisenstein_series(2, prec) * d.f1 + d.f0, g.series);
    }
    EXPECT_EQ(extremal(0, 5).series, qseries::one("q", 5));
    EXPECT_EQ(extremal_dimension(12), 3);
    EXPECT_THROW(extremal(7, 5), unsupported_weight);
    EXPECT_THROW(extremal(-2, 5), unsupported_weight);
    EXPECT_THROW(decompose_depth1(eisenstein_series(2, 20).pow(2L), 4), domain_error);
}

TEST(ExtremalForms, Integrality)
{
    for (long w : {2, 6, 8, 10, 12, 14}) {
        EXPECT_TRUE(integral(extremal_series(w, 40))) << w;
    }
}

TEST(ExtremalForms, OperatorIdentities)
{
    const std::vector<long> ws{0, 6, 12, 18, 24};
    for (auto which : {operator_identity::Lw_annihilates, operator_identity::Kupup, operator_identity::partialKup,
                       operator_identity::Lw2}) {
        const report rep = operator_identity_check(which, ws, 20);
        EXPECT_TRUE(rep.passed()) << rep.suite;
        for (const auto &e : rep.entries) {
            EXPECT_TRUE(e.passed) << e.id;
        }
    }
    // L_6 applied to a non-solution is nonzero
    EXPECT_FALSE(op_L(eisenstein_series(6, 20), 6).is_zero());
    EXPECT_THROW(operator_identity_check(operator_identity::Kupup, {8}), unsupported_weight);
}

TEST(ExtremalForms, LinearRecursions)
{
    const report rep = linear_recursion_check({6, 12, 18, 24}, 24);
    EXPECT_TRUE(rep.passed());
    for (const auto &e : rep.entries) {
        EXPECT_TRUE(e.passed) << e.id;
    }
}
