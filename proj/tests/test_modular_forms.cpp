#include <random>

#include <gtest/gtest.h>

#include <atkin/modular_forms.hpp>

using namespace atkin;

namespace
{

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

TEST(ModularForms, Eisenstein)
{
    EXPECT_EQ(eisenstein_series(2, 3), series_from_ints("q", 0, {1, -24, -72}));
    EXPECT_EQ(eisenstein_series(4, 2), series_from_ints("q", 0, {1, 240}));
    EXPECT_EQ(eisenstein_series(6, 2), series_from_ints("q", 0, {1, -504}));
    EXPECT_THROW(eisenstein_series(8, 4), invalid_weight);
    EXPECT_EQ(eisenstein(2, 5).depth, 1);
    EXPECT_EQ(divisor_sigma(3, 6), 1 + 8 + 27 + 216);
}

TEST(ModularForms, DeltaAndJ)
{
    const long n = 30;
    const qseries d = delta(n);
    EXPECT_EQ(d, delta_product(n));
    EXPECT_EQ(d.coeff(1), 1);
    // Independent rational-arithmetic oracle values.
    const std::vector<long> tau{1, -24, 252, -1472, 4830, -6048};
    for (std::size_t i = 0; i < tau.size(); ++i) {
        EXPECT_EQ(d.coeff(static_cast<long>(i) + 1), tau[i]);
    }
    const qseries j = j_invariant(5);
    EXPECT_EQ(j.valuation(), -1);
    EXPECT_EQ(j.precision(), 5);
    const std::vector<std::string> jc{"1", "744", "196884", "21493760", "864299970", "20245856256"};
    for (std::size_t i = 0; i < jc.size(); ++i) {
        EXPECT_EQ(j.coeff(static_cast<long>(i) - 1), parse_rat(jc[i]));
    }
    for (long k : {2, 4, 6}) {
        EXPECT_TRUE(integral(eisenstein_series(k, n)));
    }
    EXPECT_TRUE(integral(d));
    EXPECT_TRUE(integral(j_invariant(n)));
    // t = 1/j
    EXPECT_TRUE(agrees(t_of_q(n) * j_invariant(n), qseries::one("q", n - 2), n - 2));
}

TEST(ModularForms, RamanujanRelations)
{
    const long n = 40;
    const qseries e2 = eisenstein_series(2, n), e4 = eisenstein_series(4, n), e6 = eisenstein_series(6, n);
    EXPECT_EQ(e2.d_operator(), (e2 * e2 - e4) / rat(12));
    EXPECT_EQ(e4.d_operator(), (e2 * e4 - e6) / rat(3));
    EXPECT_EQ(e6.d_operator(), (e2 * e6 - e4 * e4) / rat(2));
    EXPECT_EQ(d_operator(qseries::one("q", n)), qseries::zero("q", n));
    const qseries d = delta(n + 1);
    EXPECT_TRUE(agrees(d.d_operator() / d, e2, n));
}

TEST(ModularForms, SerreDerivative)
{
    const long n = 30;
    const qseries e2 = eisenstein_series(2, n), e4 = eisenstein_series(4, n), e6 = eisenstein_series(6, n);
    EXPECT_EQ(serre_derivative(e2, 1), -e4 / rat(12));
    EXPECT_EQ(serre_derivative(e4, 4), -e6 / rat(3));
    EXPECT_EQ(serre_derivative(e6, 6), -(e4 * e4) / rat(2));
    EXPECT_EQ(serre_derivative(qseries::one("q", n), 0), qseries::zero("q", n));
    EXPECT_TRUE(agrees(serre_derivative(delta(n), 12), qseries::zero("q", n)));
    // iterate convention: partial_4^2 = partial_6 o partial_4
    EXPECT_EQ(serre_derivative(e4, 4, 2), serre_derivative(serre_derivative(e4, 4), 6));
}

TEST(ModularForms, LeibnizRandom)
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(-20, 20);
    const long n = 20;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<rat> a, b;
        for (long e = 0; e < n; ++e) {
            a.emplace_back(num(rng));
            b.emplace_back(num(rng));
        }
        const qseries f("q", 0, n, a), g("q", 0, n, b);
        const long k = 2 * (trial % 4), l = 2 * (trial % 3) + 4;
        EXPECT_EQ(serre_derivative(f * g, rat(k + l)), serre_derivative(f, rat(k)) * g + f * serre_derivative(g, rat(l)));
    }
}

TEST(ModularForms, Hecke)
{
    const long n = 40;
    const qseries d = delta(n);
    const qseries t2 = hecke(d, 2, 12);
    EXPECT_EQ(t2.precision(), (n - 1) / 2 + 1);
    EXPECT_EQ(t2.coeff(1), -24);
    // Delta is an eigenform: Delta|T_2 = tau(2) Delta
    EXPECT_TRUE(agrees(t2, rat(-24) * d, t2.precision()));

    const qseries jm = j_invariant(n) - rat(744);
    EXPECT_EQ(hecke(jm, 1, 0), jm);
    const qseries f2 = rat(2) * hecke(jm, 2, 0);
    EXPECT_EQ(f2.valuation(), -2);
    EXPECT_EQ(f2.coeff(-2), 1);
    EXPECT_EQ(f2.coeff(-1), 0);
    // F_{0,2}(j) = j^2 - 1488 j + 159768 (Faber polynomial of j - 744)
    EXPECT_EQ(recognize_poly_in_j(f2), poly({159768, -1488, 1}));

    // multiplicativity on coprime indices, weight 0
    for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {3, 4}, {3, 2}}) {
        const qseries lhs = hecke(hecke(jm, b, 0), a, 0);
        const qseries rhs = hecke(jm, a * b, 0);
        EXPECT_TRUE(agrees(lhs, rhs, std::min(lhs.precision(), rhs.precision())));
    }
    EXPECT_THROW(hecke(jm, 0, 0), domain_error);
}

TEST(ModularForms, Recognition)
{
    const long n = 20;
    const qseries j = j_invariant(n);
    EXPECT_EQ(recognize_poly_in_j(j), poly::x());
    EXPECT_EQ(recognize_poly_in_j(j - rat(720)), poly({-720, 1}));
    const qseries e4 = eisenstein_series(4, n + 2), e6 = eisenstein_series(6, n + 2);
    const qseries d = delta(n + 2);
    EXPECT_EQ(recognize_poly_in_j(e4.pow(3L) / d - e6 * e6 / d), poly::constant(1728));
    EXPECT_THROW(recognize_poly_in_j(j + qseries::monomial("q", 3, 1, n)), not_polynomial_in_j);
    EXPECT_THROW(recognize_poly_in_j(eisenstein_series(2, n)), not_polynomial_in_j);
}
