#ifndef ATKIN_CONGRUENCE_HPP
#define ATKIN_CONGRUENCE_HPP

#include <string>
#include <utility>
#include <vector>

#include <atkin/atkin_polys.hpp>
#include <atkin/errors.hpp>
#include <atkin/poly.hpp>
#include <atkin/rational.hpp>
#include <atkin/report.hpp>
#include <atkin/weight.hpp>

namespace atkin
{

inline bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline void check_prime_modulus(long p)
{
    if (!is_prime(p)) {
        throw composite_modulus(std::to_string(p) + " is not prime");
    }
    if (p < 5) {
        throw domain_error("characteristic must be at least 5");
    }
}

inline long mod_reduce(long a, long p)
{
    const long r = a % p;
    return r < 0 ? r + p : r;
}

inline long mod_mul(long a, long b, long p)
{
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

inline long mod_pow(long a, long e, long p)
{
    long r = 1 % p, b = mod_reduce(a, p);
    while (e > 0) {
        if (e & 1) {
            r = mod_mul(r, b, p);
        }
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    return r;
}

inline long mod_inverse(long a, long p)
{
    a = mod_reduce(a, p);
    if (a == 0) {
        throw domain_error("zero has no inverse mod " + std::to_string(p));
    }
    return mod_pow(a, p - 2, p);
}

inline long reduce_rat_mod_p(const rat &x, long p)
{
    const integer pp(p);
    const integer den = x.get_den();
    if (den % pp == 0) {
        throw not_p_integral(to_string(x) + " is not " + std::to_string(p) + "-integral");
    }
    integer num = x.get_num() % pp;
    if (num < 0) {
        num += pp;
    }
    integer d = den % pp;
    return mod_mul(num.get_si(), mod_inverse(d.get_si(), p), p);
}

// Polynomial over F_p, coefficients low to high in [0, p), no trailing zeros.
struct fp_poly
{
    long p = 0;
    std::vector<long> c;

    fp_poly() = default;
    fp_poly(long prime, std::vector<long> coeffs) : p(prime), c(std::move(coeffs))
    {
        for (auto &x : c) {
            x = mod_reduce(x, p);
        }
        trim();
    }

    long degree() const { return static_cast<long>(c.size()) - 1; }

    long coeff(long i) const { return (i >= 0 && i < static_cast<long>(c.size())) ? c[static_cast<std::size_t>(i)] : 0; }

    void trim()
    {
        while (!c.empty() && c.back() == 0) {
            c.pop_back();
        }
    }

    friend bool operator==(const fp_poly &a, const fp_poly &b) { return a.p == b.p && a.c == b.c; }

    friend fp_poly operator*(const fp_poly &a, const fp_poly &b)
    {
        if (a.c.empty() || b.c.empty()) {
            return fp_poly(a.p, {});
        }
        std::vector<long> r(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                r[i + j] = (r[i + j] + mod_mul(a.c[i], b.c[j], a.p)) % a.p;
            }
        }
        return fp_poly(a.p, std::move(r));
    }

    // Coefficients shown as signed residues in (-p/2, p/2].
    std::string to_text(const std::string &var = "X") const
    {
        if (c.empty()) {
            return "0";
        }
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            long a = coeff(i);
            if (a == 0) {
                continue;
            }
            if (2 * a > p) {
                a -= p;
            }
            const bool neg = a < 0;
            const long mag = neg ? -a : a;
            if (out.empty()) {
                out += neg ? "-" : "";
            }
            else {
                out += neg ? " - " : " + ";
            }
            if (i == 0 || mag != 1) {
                out += std::to_string(mag);
            }
            if (i > 0) {
                out += var;
                if (i > 1) {
                    out += "^" + std::to_string(i);
                }
            }
        }
        return out;
    }
};

inline fp_poly reduce_poly_mod_p(const poly &f, long p)
{
    check_prime_modulus(p);
    std::vector<long> c;
    for (long i = 0; i <= f.degree(); ++i) {
        c.push_back(reduce_rat_mod_p(f.coeff(i), p));
    }
    return fp_poly(p, std::move(c));
}

// ---------------------------------------------------------------------------
// F_{p^2} = F_p[y]/(y^2 - c), c the smallest quadratic nonresidue

struct fp2
{
    long a = 0;
    long b = 0;

    friend bool operator==(const fp2 &x, const fp2 &y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const fp2 &x, const fp2 &y) { return !(x == y); }
};

struct fp2_field
{
    long p;
    long c;

    explicit fp2_field(long prime) : p(prime), c(0)
    {
        check_prime_modulus(p);
        for (long x = 2; x < p; ++x) {
            if (mod_pow(x, (p - 1) / 2, p) == p - 1) {
                c = x;
                break;
            }
        }
    }

    fp2 from(long x) const { return {mod_reduce(x, p), 0}; }
    fp2 add(const fp2 &x, const fp2 &y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
    fp2 sub(const fp2 &x, const fp2 &y) const { return {mod_reduce(x.a - y.a, p), mod_reduce(x.b - y.b, p)}; }
    fp2 mul(const fp2 &x, const fp2 &y) const
    {
        return {(mod_mul(x.a, y.a, p) + mod_mul(mod_mul(x.b, y.b, p), c, p)) % p,
                (mod_mul(x.a, y.b, p) + mod_mul(x.b, y.a, p)) % p};
    }
    fp2 scale(const fp2 &x, long s) const { return {mod_mul(x.a, mod_reduce(s, p), p), mod_mul(x.b, mod_reduce(s, p), p)}; }
    fp2 pow(fp2 x, long e) const
    {
        fp2 r{1, 0};
        while (e > 0) {
            if (e & 1) {
                r = mul(r, x);
            }
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
};

enum class hasse_method
{
    multinomial, // direct sum over the terms reaching x^{p-1}
    power        // full binary exponentiation of the cubic
};

namespace detail
{

// coefficient of x^{p-1} in (x^3 + a x + b)^{(p-1)/2}
inline fp2 hasse_multinomial(const fp2_field &F, const fp2 &a, const fp2 &b)
{
    const long p = F.p, e = (p - 1) / 2;
    std::vector<long> fact(static_cast<std::size_t>(e + 1), 1);
    for (long i = 1; i <= e; ++i) {
        fact[static_cast<std::size_t>(i)] = mod_mul(fact[static_cast<std::size_t>(i - 1)], i, p);
    }
    fp2 s{0, 0};
    for (long i = 0; 3 * i <= p - 1; ++i) {
        const long j = p - 1 - 3 * i;
        const long k = e - i - j;
        if (j < 0 || k < 0) {
            continue;
        }
        const long denom = mod_mul(mod_mul(fact[static_cast<std::size_t>(i)], fact[static_cast<std::size_t>(j)], p),
                                   fact[static_cast<std::size_t>(k)], p);
        const long coef = mod_mul(fact[static_cast<std::size_t>(e)], mod_inverse(denom, p), p);
        s = F.add(s, F.scale(F.mul(F.pow(a, j), F.pow(b, k)), coef));
    }
    return s;
}

inline std::vector<fp2> fp2_poly_mul(const fp2_field &F, const std::vector<fp2> &x, const std::vector<fp2> &y)
{
    std::vector<fp2> r(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            r[i + j] = F.add(r[i + j], F.mul(x[i], y[j]));
        }
    }
    return r;
}

inline fp2 hasse_power(const fp2_field &F, const fp2 &a, const fp2 &b)
{
    const long e = (F.p - 1) / 2;
    std::vector<fp2> base{b, a, fp2{0, 0}, fp2{1, 0}};
    std::vector<fp2> r{fp2{1, 0}};
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) {
            r = fp2_poly_mul(F, r, base);
        }
        if (k > 1) {
            base = fp2_poly_mul(F, base, base);
        }
    }
    return r[static_cast<std::size_t>(F.p - 1)];
}

} // namespace detail

// Hasse criterion on a short Weierstrass model with j-invariant j0.
inline bool is_supersingular(const fp2_field &F, const fp2 &j0, hasse_method method = hasse_method::multinomial)
{
    fp2 a, b;
    if (j0 == F.from(0)) {
        a = F.from(0);
        b = F.from(1);
    }
    else if (j0 == F.from(1728)) {
        a = F.from(1);
        b = F.from(0);
    }
    else {
        const fp2 u = F.sub(F.from(1728), j0);
        a = F.scale(F.mul(j0, u), 3);
        b = F.scale(F.mul(j0, F.mul(u, u)), 2);
    }
    const fp2 h = method == hasse_method::multinomial ? detail::hasse_multinomial(F, a, b) : detail::hasse_power(F, a, b);
    return h == fp2{0, 0};
}

inline std::vector<fp2> supersingular_j_invariants(long p, hasse_method method = hasse_method::multinomial)
{
    const fp2_field F(p);
    std::vector<fp2> out;
    for (long a = 0; a < p; ++a) {
        for (long b = 0; b < p; ++b) {
            const fp2 j0{a, b};
            if (is_supersingular(F, j0, method)) {
                out.push_back(j0);
            }
        }
    }
    return out;
}

// prod (X - j0) over the supersingular j0 in F_{p^2}
inline fp_poly supersingular_poly(long p, hasse_method method = hasse_method::multinomial)
{
    const fp2_field F(p);
    std::vector<fp2> acc{fp2{1, 0}};
    for (const fp2 &j0 : supersingular_j_invariants(p, method)) {
        acc = detail::fp2_poly_mul(F, acc, {F.sub(F.from(0), j0), fp2{1, 0}});
    }
    std::vector<long> c;
    for (const fp2 &x : acc) {
        if (x.b != 0) {
            throw domain_error("supersingular polynomial has a coefficient outside F_p");
        }
        c.push_back(x.a);
    }
    return fp_poly(p, std::move(c));
}

// The four Atkin-like polynomials of the theorem, before reduction.
inline std::vector<std::pair<std::string, poly>> congruence_family(long p)
{
    check_prime_modulus(p);
    const weight_decomp d = weight_decompose(p - 1);
    const long m = d.m, de = d.delta, ep = d.epsilon;
    const poly xd = poly::x().pow(de), xe = poly::linear(1728).pow(ep);
    return {
        {"A_{" + std::to_string(m + de + ep) + ",2}", atkin_poly(2, m + de + ep)},
        {"X^" + std::to_string(de) + " A_{" + std::to_string(m + ep) + ",6}", xd * atkin_poly(6, m + ep)},
        {"(X-1728)^" + std::to_string(ep) + " A_{" + std::to_string(m + de) + ",8}", xe * atkin_poly(8, m + de)},
        {"X^" + std::to_string(de) + " (X-1728)^" + std::to_string(ep) + " A_{" + std::to_string(m + 1) + ",0}",
         xd * xe * atkin_poly(0, m + 1)},
    };
}

inline report thm24_check(long p)
{
    check_prime_modulus(p);
    report rep;
    rep.suite = "congruence(p=" + std::to_string(p) + ")";
    const fp_poly ss = supersingular_poly(p);
    const weight_decomp d = weight_decompose(p - 1);
    rep.add("deg ss_p = m + delta + epsilon", ss.degree() == d.m + d.delta + d.epsilon, "ss_p = " + ss.to_text());
    for (const auto &[name, f] : congruence_family(p)) {
        try {
            const fp_poly r = reduce_poly_mod_p(f, p);
            rep.add(name + " = ss_p", r == ss, r.to_text() + " vs " + ss.to_text());
        }
        catch (const not_p_integral &e) {
            rep.add(name + " = ss_p", false, e.what());
        }
    }
    return rep;
}

} // namespace atkin

#endif
