#ifndef ATKIN_ATKIN_POLYS_HPP
#define ATKIN_ATKIN_POLYS_HPP

#include <array>
#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <atkin/errors.hpp>
#include <atkin/hypergeom.hpp>
#include <atkin/memo.hpp>
#include <atkin/poly.hpp>
#include <atkin/rational.hpp>
#include <atkin/report.hpp>

namespace atkin
{

enum class poly_family
{
    A,
    B
};

enum class poly_route
{
    recursive,
    closed
};

inline void check_class(int r)
{
    if (r != 0 && r != 2 && r != 6 && r != 8) {
        throw index_out_of_range("class r = " + std::to_string(r) + " is not one of 0, 2, 6, 8");
    }
}

namespace detail
{

// a_{x,0} or a_{x,2} at a rational argument.
inline rat recursion_a_at(int base, const rat &x)
{
    const long c = base == 0 ? 41 : 29;
    const rat den = (2 * x + 1) * (2 * x - 1);
    if (den == 0) {
        throw index_out_of_range("recursion coefficient has a pole at n = " + to_string(x));
    }
    return 24 * (144 * x * x - c) / den;
}

inline rat recursion_b_at(int base, const rat &x)
{
    const rat den = x * (x - 1) * (2 * x - 1) * (2 * x - 1);
    if (den == 0) {
        throw index_out_of_range("recursion coefficient has a pole at n = " + to_string(x));
    }
    if (base == 0) {
        return 36 * (12 * x - 11) * (12 * x - 7) * (12 * x - 5) * (12 * x - 1) / den;
    }
    return 36 * (12 * x - 13) * (12 * x - 7) * (12 * x - 5) * (12 * x + 1) / den;
}

// r in {6, 8} evaluate the r - 6 formula at n + 1/2.
inline std::pair<int, rat> recursion_argument(int r, long n)
{
    check_class(r);
    if (r == 0 || r == 2) {
        return {r, rat(n)};
    }
    return {r - 6, rat(n) + rat(1, 2)};
}

} // namespace detail

inline long recursion_min_index(int r)
{
    check_class(r);
    return (r == 0 || r == 2) ? 2 : 1;
}

// a_{n,r} wherever the rational formula is finite (n >= 1 for every class).
inline rat recursion_a(int r, long n)
{
    if (n < 1) {
        throw index_out_of_range("a_{n,r} needs n >= 1");
    }
    auto [base, x] = detail::recursion_argument(r, n);
    return detail::recursion_a_at(base, x);
}

inline rat recursion_b(int r, long n)
{
    if (n < recursion_min_index(r)) {
        throw index_out_of_range("b_{n," + std::to_string(r) + "} needs n >= " + std::to_string(recursion_min_index(r)));
    }
    auto [base, x] = detail::recursion_argument(r, n);
    return detail::recursion_b_at(base, x);
}

// (a_{n,r}, b_{n,r}) within the range where the three-term recursion holds.
inline std::pair<rat, rat> recursion_coeffs(int r, long n)
{
    if (n < recursion_min_index(r)) {
        throw index_out_of_range("three-term recursion for r = " + std::to_string(r) + " holds for n >= " +
                                 std::to_string(recursion_min_index(r)));
    }
    return {recursion_a(r, n), recursion_b(r, n)};
}

namespace detail
{

// Initial values (rows n = 0, 1, 2 for r in {0, 2}; n = 0, 1 for r in {6, 8}).
inline std::vector<poly> seed_rows(poly_family f, int r)
{
    const poly X = poly::x();
    if (f == poly_family::A) {
        switch (r) {
        case 0:
            return {poly(), poly::constant(1), poly({-824, 1})};
        case 2:
            return {poly::constant(1), poly({-720, 1}), poly({269280, -1640, 1})};
        case 6:
            return {poly::constant(1), poly({-1266, 1})};
        default:
            return {poly::constant(1), poly({-330, 1})};
        }
    }
    switch (r) {
    case 0:
        return {poly::constant(1), poly({-1008, 1}), poly({497952, -1832, 1})};
    case 2:
        return {poly(), poly::constant(1), poly({-920, 1})};
    case 6:
        return {poly::constant(1), poly({-546, 1})};
    default:
        return {poly::constant(1), poly({-1338, 1})};
    }
}

inline memo<std::tuple<int, int, int, long>, poly> &poly_cache()
{
    static memo<std::tuple<int, int, int, long>, poly> cache;
    return cache;
}

inline poly recursive_poly(poly_family f, int r, long n)
{
    const std::vector<poly> seeds = seed_rows(f, r);
    if (n < static_cast<long>(seeds.size())) {
        return seeds[static_cast<std::size_t>(n)];
    }
    std::vector<poly> w = seeds;
    for (long k = static_cast<long>(seeds.size()) - 1; k < n; ++k) {
        const auto [a, b] = recursion_coeffs(r, k);
        w.push_back(poly::linear(a) * w[static_cast<std::size_t>(k)] - b * w[static_cast<std::size_t>(k - 1)]);
    }
    return w.back();
}

struct closed_params
{
    long degree;
    std::array<rat, 3> kappa;
};

inline closed_params table_params(poly_family f, int r, long n)
{
    const rat N(n);
    auto r12 = [](long a) { return make_rat(a, 12); };
    if (f == poly_family::A) {
        switch (r) {
        case 0:
            return {n - 1, {N - r12(11), N - r12(7), rat(2 * n - 1)}};
        case 2:
            return {n, {N + r12(1), N - r12(7), rat(2 * n - 1)}};
        case 6:
            return {n, {N + r12(1), N + r12(5), rat(2 * n)}};
        default:
            return {n, {N + r12(1), N - r12(7), rat(2 * n)}};
        }
    }
    switch (r) {
    case 0:
        return {n, {N - r12(1), N - r12(5), rat(2 * n - 1)}};
    case 2:
        return {n - 1, {N - r12(13), N - r12(5), rat(2 * n - 1)}};
    case 6:
        return {n, {N - r12(1), N - r12(5), rat(2 * n)}};
    default:
        return {n, {N - r12(1), N + r12(7), rat(2 * n)}};
    }
}

inline rat closed_phi(poly_family f, const closed_params &p, long i)
{
    const rat u = f == poly_family::A ? make_rat(-1, 12) : make_rat(1, 12);
    const rat v = f == poly_family::A ? make_rat(-5, 12) : make_rat(-7, 12);
    rat s = 0;
    for (long k = 0; k <= i; ++k) {
        const rat den = gen_binomial(p.kappa[2], k);
        if (den == 0) {
            throw index_out_of_range("vanishing binomial in the closed formula");
        }
        rat term = gen_binomial(u, i - k) * gen_binomial(v, i - k) * gen_binomial(p.kappa[0], k) *
                   gen_binomial(p.kappa[1], k) / den;
        s += (k % 2 == 0) ? term : rat(-term);
    }
    return s;
}

inline poly closed_poly(poly_family f, int r, long n)
{
    if ((r == 0 || r == 2) ? n < 1 : n < 0) {
        throw index_out_of_range("closed formula for r = " + std::to_string(r) + " needs n >= " +
                                 std::string((r == 0 || r == 2) ? "1" : "0"));
    }
    const closed_params p = table_params(f, r, n);
    std::vector<rat> c(static_cast<std::size_t>(p.degree + 1));
    for (long i = 0; i <= p.degree; ++i) {
        c[static_cast<std::size_t>(p.degree - i)] = atkin::pow(rat(12), 3 * i) * closed_phi(f, p, i);
    }
    return poly(std::move(c));
}

} // namespace detail

inline poly family_poly(poly_family f, int r, long n, poly_route route = poly_route::recursive)
{
    check_class(r);
    if (n < 0) {
        throw index_out_of_range("negative index");
    }
    const auto key = std::make_tuple(static_cast<int>(f), static_cast<int>(route), r, n);
    return detail::poly_cache().get(key, [&] {
        return route == poly_route::recursive ? detail::recursive_poly(f, r, n) : detail::closed_poly(f, r, n);
    });
}

inline poly atkin_poly(int r, long n, poly_route route = poly_route::recursive)
{
    return family_poly(poly_family::A, r, n, route);
}

inline poly adjoint_poly(int r, long n, poly_route route = poly_route::recursive)
{
    return family_poly(poly_family::B, r, n, route);
}

inline poly atkin_poly_recursive(int r, long n) { return atkin_poly(r, n, poly_route::recursive); }
inline poly adjoint_poly_recursive(int r, long n) { return adjoint_poly(r, n, poly_route::recursive); }
inline poly atkin_poly_closed(int r, long n) { return atkin_poly(r, n, poly_route::closed); }
inline poly adjoint_poly_closed(int r, long n) { return adjoint_poly(r, n, poly_route::closed); }

// Degree d_{n,r} of the closed formula (B_{n,r} has degree d_{n,r+2}).
inline long closed_degree(poly_family f, int r, long n)
{
    check_class(r);
    return detail::table_params(f, r, n).degree;
}

// A_{m,4} = A_{m,0}, A_{m,10} = A_{m,6}, A_{m,14} = A_{m+1,2}.
inline poly atkin_poly_extended(int r, long m)
{
    switch (r) {
    case 4:
        return atkin_poly(0, m);
    case 10:
        return atkin_poly(6, m);
    case 14:
        return atkin_poly(2, m + 1);
    default:
        return atkin_poly(r, m);
    }
}

// Closed Pochhammer values at X = 0 or 1728 (n >= 1).
inline rat special_value(int r, long n, long at)
{
    if (n < 1) {
        throw index_out_of_range("special values are stated for n >= 1");
    }
    const rat p = make_rat(-1, 12);
    if (r == 2 && at == 0) {
        return atkin::pow(rat(-12), 3 * n + 1) * pochhammer(p, n) * pochhammer(make_rat(5, 12), n) / rat(factorial(2 * n - 1));
    }
    if (r == 2 && at == 1728) {
        return -atkin::pow(rat(12), 3 * n + 1) * pochhammer(p, n) * pochhammer(make_rat(7, 12), n) /
               rat(factorial(2 * n - 1));
    }
    if (r == 6 && at == 1728) {
        return atkin::pow(rat(12), 3 * n) * pochhammer(make_rat(7, 12), n) * pochhammer(make_rat(11, 12), n) /
               rat(factorial(2 * n));
    }
    if (r == 8 && at == 0) {
        return atkin::pow(rat(-12), 3 * n) * pochhammer(make_rat(5, 12), n) * pochhammer(make_rat(11, 12), n) /
               rat(factorial(2 * n));
    }
    throw unsupported_pair("no closed special value for r = " + std::to_string(r) + " at X = " + std::to_string(at));
}

// q_n = (p_{n+1} - p_{n+1}(lambda)/p_n(lambda) p_n) / (X - lambda)
inline poly christoffel_transform(const poly &pn, const poly &pn1, const rat &lambda)
{
    const rat d = pn(lambda);
    if (d == 0) {
        throw pole_at_lambda("p_n vanishes at lambda = " + to_string(lambda));
    }
    return exact_div(pn1 - (pn1(lambda) / d) * pn, poly::linear(lambda));
}

namespace detail
{

inline rat binom_ratio(const rat &k1, const rat &k2, const rat &k3, long k)
{
    return gen_binomial(k1, k) * gen_binomial(k2, k) / gen_binomial(k3, k);
}

inline rat cube12(long k, bool negative)
{
    return atkin::pow(rat(negative ? -12 : 12), 3 * k);
}

inline void add_identity(report &rep, const std::string &id, const poly &lhs, const poly &rhs)
{
    const bool ok = lhs == rhs;
    rep.add(id, ok, ok ? std::string() : "lhs " + lhs.to_text() + " vs rhs " + rhs.to_text());
}

inline rat c_nk(long n, long k)
{
    const rat a = gen_binomial(rat(n) + rat(5, 12), k + 1);
    return ((k % 2 == 0) ? a : rat(-a)) + gen_binomial(rat(n) + rat(7, 12), k + 1);
}

} // namespace detail

enum class expansion_set
{
    prop2_3,
    eqs3_3_to_3_6,
    prop3_2,
    geronimus,
    lemma_cnr
};

inline report expansion_identities_check(expansion_set which, long n_max)
{
    using detail::add_identity;
    using detail::binom_ratio;
    using detail::cube12;
    if (n_max < 1) {
        throw index_out_of_range("n_max must be at least 1");
    }
    report rep;
    const poly X = poly::x();
    const poly Xm = poly::linear(1728);
    auto alpha = [](long n, int e) {
        return alpha_beta_poly(n, e == 0 ? alpha_beta_kind::alpha0 : alpha_beta_kind::alpha1);
    };
    auto sum_alpha = [&](long top, long shift, int eps, const rat &k1, const rat &k2, const rat &k3) {
        poly s;
        for (long k = 0; k <= top; ++k) {
            s = s + (cube12(k, true) * binom_ratio(k1, k2, k3, k)) * alpha(shift - k, eps);
        }
        return s;
    };
    const rat r1(1, 12), r5(5, 12), r7(7, 12), r11(11, 12), r13(13, 12);
    switch (which) {
    case expansion_set::prop2_3:
        rep.suite = "prop2_3";
        for (long n = 1; n <= n_max; ++n) {
            const std::string s = "(n=" + std::to_string(n) + ")";
            const rat N(n), t1(2 * n - 1), t2(2 * n);
            add_identity(rep, "XA0_alpha0" + s, X * atkin_poly(0, n), sum_alpha(n, n, 0, N - r11, N - r7, t1));
            add_identity(rep, "XmA0_alpha1" + s, Xm * atkin_poly(0, n), sum_alpha(n, n, 1, N - r1, N - r5, t1));
            if (n >= 2) {
                add_identity(rep, "XXmA0_alpha1" + s, X * Xm * atkin_poly(0, n),
                             sum_alpha(n + 1, n + 1, 1, N - r1, N - r5, t1));
            }
            add_identity(rep, "A2_alpha1" + s, atkin_poly(2, n), sum_alpha(n, n, 1, N - r13, N - r5, t1));
            add_identity(rep, "XA6_alpha1" + s, X * atkin_poly(6, n), sum_alpha(n + 1, n + 1, 1, N - r1, N - r5, t2));
            add_identity(rep, "XmA8_alpha1" + s, Xm * atkin_poly(8, n), sum_alpha(n + 1, n + 1, 1, N - r1, N + r7, t2));
            // closed formulas written through alpha^0 and beta
            for (int r : {0, 2, 6, 8}) {
                const auto pa = detail::table_params(poly_family::A, r, n);
                poly sa;
                for (long k = 0; k <= pa.degree; ++k) {
                    sa = sa + (cube12(k, true) * binom_ratio(pa.kappa[0], pa.kappa[1], pa.kappa[2], k)) *
                                  alpha(pa.degree - k, 0);
                }
                add_identity(rep, "A" + std::to_string(r) + "_by_alpha0" + s, atkin_poly(r, n), sa);
                const auto pb = detail::table_params(poly_family::B, r, n);
                poly sb;
                for (long k = 0; k <= pb.degree; ++k) {
                    sb = sb + (cube12(k, true) * binom_ratio(pb.kappa[0], pb.kappa[1], pb.kappa[2], k)) *
                                  alpha_beta_poly(pb.degree - k, alpha_beta_kind::beta);
                }
                add_identity(rep, "B" + std::to_string(r) + "_by_beta" + s, adjoint_poly(r, n), sb);
            }
        }
        break;
    case expansion_set::eqs3_3_to_3_6:
        rep.suite = "eqs3_3_to_3_6";
        for (long n = 1; n <= n_max; ++n) {
            const std::string s = "(n=" + std::to_string(n) + ")";
            const poly a2n = atkin_poly(2, n), a2n1 = atkin_poly(2, n + 1), a2n2 = atkin_poly(2, n + 2);
            const poly a6n = atkin_poly(6, n), a6n1 = atkin_poly(6, n + 1);
            const poly a8n = atkin_poly(8, n), a8n1 = atkin_poly(8, n + 1);
            const poly a0n1 = atkin_poly(0, n + 1);
            const rat N(n);
            add_identity(rep, "recAn6An2" + s, X * a6n,
                         a2n1 + rat(6 * (12 * N - 1) * (12 * N + 5) / (N * (2 * N + 1))) * a2n);
            add_identity(rep, "recAn8An2" + s, Xm * a8n,
                         a2n1 - rat(6 * (12 * N - 1) * (12 * N + 7) / (N * (2 * N + 1))) * a2n);
            const poly lhs = X * Xm * a0n1;
            add_identity(rep, "recAn0An6" + s, lhs,
                         X * a6n1 - rat(6 * (12 * N + 7) * (12 * N + 11) / ((N + 1) * (2 * N + 1))) * (X * a6n));
            add_identity(rep, "recAn0An8" + s, lhs,
                         Xm * a8n1 + rat(6 * (12 * N + 5) * (12 * N + 11) / ((N + 1) * (2 * N + 1))) * (Xm * a8n));
            add_identity(rep, "recAn0An2" + s, lhs,
                         a2n2 - rat(24 * (12 * N + 11) / ((2 * N + 1) * (2 * N + 3))) * a2n1 -
                             rat(36 * (12 * N - 1) * (12 * N + 5) * (12 * N + 7) * (12 * N + 11) /
                                 (N * (N + 1) * (2 * N + 1) * (2 * N + 1))) *
                                 a2n);
        }
        break;
    case expansion_set::prop3_2:
        rep.suite = "prop3_2";
        for (long n = 0; n <= n_max; ++n) {
            const std::string s = "(n=" + std::to_string(n) + ")";
            const rat N(n);
            poly e6, e8, e06, e08, e02;
            for (long k = 0; k <= n; ++k) {
                const rat c2k = rat(binomial(2 * k, k));
                e6 = e6 + (cube12(k, true) * gen_binomial(N + r1, k) * gen_binomial(N - r5, k) / c2k /
                           rat(binomial(2 * n, 2 * k))) *
                              atkin_poly(2, n - k);
                e8 = e8 + (cube12(k, false) * gen_binomial(N + r1, k) * gen_binomial(N - r7, k) / c2k /
                           rat(binomial(2 * n, 2 * k))) *
                              atkin_poly(2, n - k);
                e06 = e06 + (cube12(k, false) * gen_binomial(N + r1, k) * gen_binomial(N + r5, k) / c2k /
                             rat(binomial(2 * n + 1, 2 * k))) *
                                atkin_poly(6, n - k);
                e08 = e08 + (cube12(k, true) * gen_binomial(N + r1, k) * gen_binomial(N + r7, k) / c2k /
                             rat(binomial(2 * n + 1, 2 * k))) *
                                atkin_poly(8, n - k);
                e02 = e02 + (cube12(k, true) * detail::c_nk(n, k) * gen_binomial(N + r1, k) /
                             rat(binomial(2 * k + 1, k)) / rat(binomial(2 * n + 1, 2 * k + 1))) *
                                atkin_poly(2, n - k);
            }
            add_identity(rep, "expAn6byAn2" + s, atkin_poly(6, n), e6);
            add_identity(rep, "expAn8byAn2" + s, atkin_poly(8, n), e8);
            add_identity(rep, "expAn0byAn6" + s, atkin_poly(0, n + 1), e06);
            add_identity(rep, "expAn0byAn8" + s, atkin_poly(0, n + 1), e08);
            add_identity(rep, "expAn0byAn2" + s, atkin_poly(0, n + 1), e02);
        }
        break;
    case expansion_set::geronimus:
        rep.suite = "geronimus";
        for (long n = 1; n <= n_max; ++n) {
            const rat N(n);
            add_identity(rep, "geronimus(n=" + std::to_string(n) + ")", atkin_poly(2, n),
                         atkin_poly(6, n) + rat(6 * (12 * N + 1) * (12 * N - 5) / (N * (2 * N - 1))) * atkin_poly(6, n - 1));
        }
        break;
    case expansion_set::lemma_cnr:
        rep.suite = "lemmaCnr";
        for (long n = 0; n <= n_max; ++n) {
            for (long r = 0; r <= n_max; ++r) {
                rat rhs = 0;
                for (long k = 0; k <= r; ++k) {
                    rat t = rat(2 * n - 2 * k + 1) * gen_binomial(rat(n) + r5, k) *
                            gen_binomial(rat(n - k) - r5, r - k) * rat(factorial(k) * factorial(r - k));
                    rhs += (k % 2 == 0) ? t : rat(-t);
                }
                const rat lhs = rat(factorial(r + 1)) * detail::c_nk(n, r);
                rep.add("Cnr(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")", lhs == rhs,
                        lhs == rhs ? std::string() : to_string(lhs) + " vs " + to_string(rhs));
            }
        }
        break;
    }
    return rep;
}

} // namespace atkin

#endif
