#ifndef ATKIN_MODULAR_FORMS_HPP
#define ATKIN_MODULAR_FORMS_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <atkin/errors.hpp>
#include <atkin/memo.hpp>
#include <atkin/poly.hpp>
#include <atkin/rational.hpp>
#include <atkin/series.hpp>

namespace atkin
{

struct form_expansion
{
    qseries series;
    long weight = 0;
    long depth = 0;

    friend form_expansion operator*(const form_expansion &a, const form_expansion &b)
    {
        return {a.series * b.series, a.weight + b.weight, a.depth + b.depth};
    }
};

inline integer divisor_sigma(long k, long n)
{
    if (n <= 0) {
        throw domain_error("divisor sum needs a positive argument");
    }
    integer s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        s += t;
        const long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
            s += t;
        }
    }
    return s;
}

namespace detail
{

inline long cache_precision(long prec)
{
    return std::max(16L, (prec + 15) / 16 * 16);
}

inline memo<std::pair<long, long>, qseries> &form_cache()
{
    static memo<std::pair<long, long>, qseries> cache;
    return cache;
}

inline qseries eisenstein_raw(long k, long prec)
{
    long mult = 0;
    switch (k) {
    case 2:
        mult = -24;
        break;
    case 4:
        mult = 240;
        break;
    case 6:
        mult = -504;
        break;
    default:
        throw invalid_weight("Eisenstein series of weight " + std::to_string(k) + " is not provided");
    }
    std::vector<rat> c(static_cast<std::size_t>(prec));
    c[0] = 1;
    for (long n = 1; n < prec; ++n) {
        c[static_cast<std::size_t>(n)] = rat(divisor_sigma(k - 1, n) * mult);
    }
    return qseries("q", 0, prec, std::move(c));
}

} // namespace detail

// 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for k in {2, 4, 6}.
inline qseries eisenstein_series(long k, long prec)
{
    if (k != 2 && k != 4 && k != 6) {
        throw invalid_weight("Eisenstein series of weight " + std::to_string(k) + " is not provided");
    }
    if (prec < 1) {
        throw insufficient_precision("Eisenstein series needs precision >= 1");
    }
    const long cp = detail::cache_precision(prec);
    return detail::form_cache().get({k, cp}, [&] { return detail::eisenstein_raw(k, cp); }).truncated(prec);
}

inline form_expansion eisenstein(long k, long prec)
{
    return {eisenstein_series(k, prec), k, k == 2 ? 1 : 0};
}

// q prod (1 - q^n)^24
inline qseries delta_product(long prec)
{
    if (prec < 2) {
        throw insufficient_precision("discriminant needs precision >= 2");
    }
    // Euler's pentagonal theorem for prod (1 - q^n), then the 24th power.
    std::vector<rat> e(static_cast<std::size_t>(prec - 1));
    e[0] = 1;
    for (long k = 1;; ++k) {
        const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 >= prec - 1) {
            break;
        }
        const long s = (k % 2 == 0) ? 1 : -1;
        e[static_cast<std::size_t>(g1)] += s;
        if (g2 < prec - 1) {
            e[static_cast<std::size_t>(g2)] += s;
        }
    }
    qseries eta("q", 0, prec - 1, std::move(e));
    return eta.pow(24L).shift(1);
}

// (E4^3 - E6^2)/1728
inline qseries delta(long prec)
{
    if (prec < 2) {
        throw insufficient_precision("discriminant needs precision >= 2");
    }
    const long cp = detail::cache_precision(prec);
    return detail::form_cache()
        .get({12, cp},
             [&] {
                 const qseries e4 = eisenstein_series(4, cp), e6 = eisenstein_series(6, cp);
                 return ((e4.pow(3L) - e6 * e6) / rat(1728)).normalized();
             })
        .truncated(prec);
}

// j = E4^3/Delta, returned known to O(q^prec).
inline qseries j_invariant(long prec)
{
    if (prec < 0) {
        throw insufficient_precision("j needs precision >= 0");
    }
    const long cp = detail::cache_precision(prec);
    return detail::form_cache()
        .get({0, cp},
             [&] {
                 const long need = cp + 2;
                 return eisenstein_series(4, need).pow(3L) / delta(need);
             })
        .truncated(prec);
}

// t = 1/j = Delta/E4^3, known to O(q^prec).
inline qseries t_of_q(long prec)
{
    if (prec < 2) {
        throw insufficient_precision("1/j needs precision >= 2");
    }
    const long cp = detail::cache_precision(prec);
    return detail::form_cache()
        .get({-12, cp}, [&] { return delta(cp) / eisenstein_series(4, cp).pow(3L); })
        .truncated(prec);
}

inline qseries d_operator(const qseries &f)
{
    return f.d_operator();
}

inline form_expansion d_operator(const form_expansion &f)
{
    return {f.series.d_operator(), f.weight + 2, f.depth + 1};
}

// E2 known far enough to multiply f without losing precision.
inline qseries e2_for(const qseries &f)
{
    const long tv = f.true_valuation();
    return eisenstein_series(2, std::max(1L, f.precision() - std::min(0L, tv)));
}

inline qseries eisenstein_for(long k, const qseries &f)
{
    const long tv = f.true_valuation();
    return eisenstein_series(k, std::max(1L, f.precision() - std::min(0L, tv)));
}

// partial_k^iterate with partial_k^{n+1} = partial_{k+2n} o partial_k^n.
inline qseries serre_derivative(const qseries &f, const rat &k, long iterate = 1)
{
    qseries g = f;
    for (long i = 0; i < iterate; ++i) {
        const rat w = k + 2 * i;
        g = g.d_operator() - (w / 12) * (e2_for(g) * g);
    }
    return g;
}

inline form_expansion serre_derivative(const form_expansion &f, long k, long iterate = 1)
{
    return {serre_derivative(f.series, rat(k), iterate), f.weight + 2 * iterate, f.depth};
}

// f|_k T_n: coefficient of q^m is sum_{d | (m,n)} d^{k-1} c(mn/d^2).
inline qseries hecke(const qseries &f, long n, long k)
{
    if (n < 1) {
        throw domain_error("Hecke index must be positive");
    }
    const long v = f.valuation();
    const long out_val = v < 0 ? n * v : 0;
    const long out_prec = (f.precision() - 1 >= 0) ? (f.precision() - 1) / n + 1
                                                   : -((-(f.precision() - 1) + n - 1) / n) + 1;
    if (out_prec <= out_val) {
        throw insufficient_precision("Hecke operator T_" + std::to_string(n) + " leaves no known coefficients");
    }
    std::vector<rat> out(static_cast<std::size_t>(out_prec - out_val));
    for (long m = out_val; m < out_prec; ++m) {
        const long g = std::gcd(std::abs(m), n);
        rat s = 0;
        for (long d = 1; d <= g; ++d) {
            if (g % d != 0) {
                continue;
            }
            const long idx = m * n / (d * d);
            if (idx >= f.precision()) {
                throw insufficient_precision("Hecke operator needs coefficient " + std::to_string(idx));
            }
            const rat &c = f.coeff(idx);
            if (sgn(c) != 0) {
                s += atkin::pow(rat(d), k - 1) * c;
            }
        }
        out[static_cast<std::size_t>(m - out_val)] = s;
    }
    return qseries(f.variable(), out_val, out_prec, std::move(out));
}

// The polynomial P with P(j) = f, by eliminating the polar part against powers of j.
inline poly recognize_poly_in_j(const qseries &f)
{
    if (f.precision() < 1) {
        throw insufficient_precision("recognition needs the constant term");
    }
    const long tv = f.true_valuation();
    const long n = tv < 0 ? -tv : 0;
    const qseries j = j_invariant(f.precision() + n + 1);
    std::vector<rat> p(static_cast<std::size_t>(n + 1));
    qseries r = f;
    qseries jp = j.pow(n);
    for (long e = n; e >= 1; --e) {
        const rat c = r.coeff(-e);
        p[static_cast<std::size_t>(e)] = c;
        if (sgn(c) != 0) {
            r = r - c * jp.truncated(std::min(jp.precision(), f.precision()));
        }
        if (e > 1) {
            jp = j.pow(e - 1);
        }
    }
    p[0] = r.coeff(0);
    r = r - p[0];
    if (!r.is_zero()) {
        throw not_polynomial_in_j("residual " + r.normalized().to_text(3) + " after eliminating the polar part");
    }
    return poly(std::move(p));
}

} // namespace atkin

#endif
