#ifndef ATKIN_ATKIN_FUNCTIONAL_HPP
#define ATKIN_ATKIN_FUNCTIONAL_HPP

#include <mutex>
#include <string>
#include <vector>

#include <atkin/atkin_polys.hpp>
#include <atkin/errors.hpp>
#include <atkin/extremal_forms.hpp>
#include <atkin/hypergeom.hpp>
#include <atkin/linalg.hpp>
#include <atkin/modular_forms.hpp>
#include <atkin/poly.hpp>
#include <atkin/report.hpp>
#include <atkin/weight.hpp>

namespace atkin
{

namespace detail
{

// Append-only moment table.
class moment_table
{
public:
    std::vector<integer> first(long count)
    {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (static_cast<long>(m_.size()) >= count) {
                return {m_.begin(), m_.begin() + count};
            }
        }
        const long target = cache_precision(count);
        std::vector<integer> fresh = compute(target);
        std::lock_guard<std::mutex> lock(mu_);
        if (fresh.size() > m_.size()) {
            m_ = std::move(fresh);
        }
        return {m_.begin(), m_.begin() + count};
    }

    static std::vector<integer> compute(long count)
    {
        std::vector<integer> out;
        const qseries j = j_invariant(count + 1);
        const qseries e2 = eisenstein_series(2, count + 2);
        qseries p = qseries::one("q", count + 1);
        for (long n = 0; n < count; ++n) {
            // constant term of j^n E2
            rat c = 0;
            for (long e = -n; e <= 0; ++e) {
                c += p.coeff(e) * e2.coeff(-e);
            }
            out.push_back(c.get_num());
            p = p * j;
        }
        return out;
    }

private:
    std::mutex mu_;
    std::vector<integer> m_;
};

inline moment_table &moments_cache()
{
    static moment_table t;
    return t;
}

} // namespace detail

// L(j^0), ..., L(j^{count-1})
inline std::vector<integer> moments(long count)
{
    if (count < 0) {
        throw domain_error("moment count must be nonnegative");
    }
    return detail::moments_cache().first(count);
}

// Constant term of j^n E2 computed from j and E2 known to O(q^budget).
inline integer moment(long n, long prec_budget = -1)
{
    if (n < 0) {
        throw domain_error("moment index must be nonnegative");
    }
    if (prec_budget >= 0 && prec_budget < n + 2) {
        throw insufficient_precision("moment " + std::to_string(n) + " needs " + std::to_string(n + 2) + " q-terms");
    }
    return moments(n + 1)[static_cast<std::size_t>(n)];
}

// L(f) = sum f_i L(j^i)
inline rat apply_L(const poly &f)
{
    if (f.is_zero()) {
        return 0;
    }
    const std::vector<integer> m = moments(f.degree() + 1);
    rat s = 0;
    for (long i = 0; i <= f.degree(); ++i) {
        s += f.coeff(i) * rat(m[static_cast<std::size_t>(i)]);
    }
    return s;
}

inline rat inner_product_moments(const poly &f, const poly &g)
{
    return apply_L(f * g);
}

// constant term of f(j) g(j) E2
inline rat inner_product_residue(const poly &f, const poly &g)
{
    const poly h = f * g;
    if (h.is_zero()) {
        return 0;
    }
    const long d = h.degree();
    const qseries hj = h(j_invariant(d + 2));
    const qseries e2 = eisenstein_series(2, d + 2);
    rat c = 0;
    for (long e = -d; e <= 0; ++e) {
        c += hj.coeff(e) * e2.coeff(-e);
    }
    return c;
}

inline rat inner_product(const poly &f, const poly &g)
{
    const rat a = inner_product_moments(f, g), b = inner_product_residue(f, g);
    if (a != b) {
        throw inner_product_mismatch("moment route gives " + to_string(a) + ", residue route gives " + to_string(b));
    }
    return a;
}

// L(P(j)/(j(p)-j)) = sum_n L(j^n P(j)) t^{n+1}, t = 1/j(p), to O(t^prec)
inline qseries functional_series(const poly &p, long prec)
{
    std::vector<rat> c(static_cast<std::size_t>(std::max(prec, 0L)));
    const long d = std::max(p.degree(), 0L);
    const std::vector<integer> m = moments(prec + d + 1);
    for (long n = 0; n + 1 < prec; ++n) {
        rat s = 0;
        for (long i = 0; i <= p.degree(); ++i) {
            s += p.coeff(i) * rat(m[static_cast<std::size_t>(n + i)]);
        }
        c[static_cast<std::size_t>(n + 1)] = s;
    }
    return qseries("t", 0, prec, std::move(c));
}

// N t^{shift} 2F1(a,b;c;1728t)/2F1(lower_a,lower_b;1;1728t)
inline qseries hyp_ratio(const rat &n, long shift, const rat &a, const rat &b, const rat &c, const rat &la,
                         const rat &lb, long prec)
{
    const qseries num = hyp2f1(a, b, c, prec, "t").scale_variable(1728);
    const qseries den = hyp2f1(la, lb, 1, prec, "t").scale_variable(1728);
    return (n * (num / den)).shift(shift).truncated(prec);
}

// Stieltjes function in the t variable and in p.
inline report stieltjes_check(long prec)
{
    if (prec < 4) {
        throw insufficient_precision("Stieltjes check needs precision >= 4");
    }
    report rep;
    rep.suite = "stieltjes";
    const qseries s_mom = functional_series(poly::constant(1), prec);
    const qseries s_hyp = hyp_ratio(1, 1, rat(5, 12), rat(13, 12), 1, rat(1, 12), rat(5, 12), prec);
    rep.add("moments == 2F1 ratio (t)", s_mom == s_hyp, "", prec);
    const qseries t = t_of_q(prec + 1);
    const qseries via_t = compose(s_mom, t).truncated(prec);
    const qseries e2 = eisenstein_series(2, prec), e4 = eisenstein_series(4, prec), e6 = eisenstein_series(6, prec);
    const qseries forms = (e2 * e4 * t.truncated(prec) / e6).truncated(prec);
    rep.add("moments == E2E4/(jE6) (p)", agrees(via_t, forms, prec), "", prec);
    const std::vector<long> expect{0, 1, -24, 196812, 38262208};
    bool ok = true;
    for (long e = 0; e < 5 && e < prec; ++e) {
        ok = ok && via_t.coeff(e) == expect[static_cast<std::size_t>(e)];
    }
    rep.add("p - 24p^2 + 196812p^3 + 38262208p^4", ok, via_t.to_text(6), prec);
    return rep;
}

inline qseries stieltjes_series_p(long prec)
{
    return compose(functional_series(poly::constant(1), prec), t_of_q(prec + 1)).truncated(prec).with_variable("p");
}

// L*(1/(j(p)-j)) = G14/(E2 Delta) written in t; checked against the 2F1 ratio.
inline qseries lstar_series(long prec)
{
    if (prec < 2) {
        throw insufficient_precision("adjoint functional series needs precision >= 2");
    }
    const long qp = prec + 2;
    const qseries g = extremal_series(14, qp + 1) / (eisenstein_series(2, qp) * delta(qp + 1));
    const qseries q_of_t = t_of_q(qp).revert().with_variable("t");
    const qseries via_forms = compose(g, q_of_t).truncated(prec);
    const qseries via_hyp = hyp_ratio(1, 1, rat(11, 12), rat(19, 12), 3, rat(-1, 12), rat(7, 12), prec);
    if (via_forms != via_hyp) {
        throw inner_product_mismatch("adjoint functional: forms route and hypergeometric route disagree");
    }
    return via_forms;
}

inline rat lstar_moment(long n, long prec_budget = -1)
{
    if (prec_budget >= 0 && prec_budget < n + 2) {
        throw insufficient_precision("adjoint moment " + std::to_string(n) + " needs budget " + std::to_string(n + 2));
    }
    return lstar_series(n + 2).coeff(n + 1);
}

// -1/393120 (S^{-1} - A_{1,2}(j(p))) computed from the moments alone
inline qseries lstar_series_from_moments(long prec)
{
    const qseries s = functional_series(poly::constant(1), prec + 2);
    const qseries inv = s.inverse();
    const qseries a12 = qseries::monomial("t", -1, 1, inv.precision()) - rat(720);
    return ((inv - a12) / rat(-393120)).truncated(prec);
}

inline rat apply_Lstar(const poly &f)
{
    if (f.is_zero()) {
        return 0;
    }
    const qseries s = lstar_series(f.degree() + 2);
    rat v = 0;
    for (long i = 0; i <= f.degree(); ++i) {
        v += f.coeff(i) * s.coeff(i + 1);
    }
    return v;
}

// L applied in j to (P(X) - P(j))/(X - j)
inline poly difference_quotient_image(const poly &p)
{
    if (p.degree() <= 0) {
        return poly();
    }
    const std::vector<integer> m = moments(p.degree());
    std::vector<rat> out(static_cast<std::size_t>(p.degree()));
    for (long i = 0; i < p.degree(); ++i) {
        rat s = 0;
        for (long k = i + 1; k <= p.degree(); ++k) {
            s += p.coeff(k) * rat(m[static_cast<std::size_t>(k - 1 - i)]);
        }
        out[static_cast<std::size_t>(i)] = s;
    }
    return poly(std::move(out));
}

// j^{1-floor(delta/2)} (j-1728)^{1-epsilon}
inline poly class_weight_poly(int r)
{
    const poly X = poly::x(), Xm = poly::linear(1728);
    switch (r) {
    case 0:
    case 4:
        return X * Xm;
    case 6:
    case 10:
        return X;
    case 8:
        return Xm;
    case 2:
    case 14:
        return poly::constant(1);
    default:
        throw index_out_of_range("class must be one of 0, 2, 4, 6, 8, 10, 14");
    }
}

inline int class_sign(int r)
{
    return (r == 6 || r == 10 || r == 2 || r == 14) ? 1 : -1;
}

inline report image_formulas_check(long m_max, long prec)
{
    if (m_max < 1) {
        throw index_out_of_range("m_max must be at least 1");
    }
    report rep;
    rep.suite = "image_formulas";
    const poly X = poly::x(), Xm = poly::linear(1728);
    auto eq = [&](const std::string &id, const poly &a, const poly &b) {
        rep.add(id, a == b, a == b ? std::string() : a.to_text() + " vs " + b.to_text());
    };
    for (long m = 0; m <= m_max; ++m) {
        const std::string s = "(m=" + std::to_string(m) + ")";
        eq("i:B0" + s, difference_quotient_image(X * Xm * atkin_poly(0, m + 1)), adjoint_poly(0, m + 1));
        eq("i:B2" + s, difference_quotient_image(atkin_poly(2, m)), adjoint_poly(2, m));
        eq("i:B6" + s, difference_quotient_image(X * atkin_poly(6, m)), adjoint_poly(6, m));
        eq("i:B8" + s, difference_quotient_image(Xm * atkin_poly(8, m)), adjoint_poly(8, m));

        const rat M(m);
        auto series_eq = [&](const std::string &id, const qseries &a, const qseries &b) {
            const bool ok = agrees(a, b, prec);
            rep.add(id, ok, ok ? std::string() : "series differ", prec);
        };
        const rat la(1, 12), lb(5, 12);
        series_eq("ii:r0" + s, functional_series(X * Xm * atkin_poly(0, m + 1), prec),
                  hyp_ratio(-normalizing_factor(m + 1, 0), m + 1, M + rat(13, 12), M + rat(17, 12), 2 * M + 3, la, lb,
                            prec));
        series_eq("ii:r2" + s, functional_series(atkin_poly(2, m), prec),
                  hyp_ratio(normalizing_factor(m, 2), m + 1, M + rat(5, 12), M + rat(13, 12), 2 * M + 1, la, lb, prec));
        series_eq("ii:r6" + s, functional_series(X * atkin_poly(6, m), prec),
                  hyp_ratio(normalizing_factor(m, 6), m + 1, M + rat(13, 12), M + rat(17, 12), 2 * M + 2, la, lb, prec));
        series_eq("ii:r8" + s, functional_series(Xm * atkin_poly(8, m), prec),
                  hyp_ratio(-normalizing_factor(m, 8), m + 1, M + rat(5, 12), M + rat(13, 12), 2 * M + 2, la, lb, prec));
    }
    // extremal forms as images of the functional, all weights 2 <= w <= 12 m_max + 14 except 4
    const qseries t = t_of_q(prec + 1);
    for (long w = 2; w <= 12 * m_max + 14; w += 2) {
        if (w == 4) {
            continue;
        }
        const weight_decomp d = weight_decompose(w);
        const int r = d.r();
        const poly a = atkin_poly_extended(r, d.m);
        const qseries lhs_t = functional_series(class_weight_poly(r) * a, prec);
        qseries factor = eisenstein_series(4, prec + 1).pow(static_cast<long>(d.delta)) *
                         eisenstein_series(6, prec + 1).pow(static_cast<long>(d.epsilon));
        factor = d.m >= 0 ? factor * delta(prec + 1).pow(d.m) : factor / delta(prec + 2);
        const qseries lhs = compose(lhs_t, t) * factor;
        const rat nf = d.m >= 0 ? normalizing_factor(d.m, r) : normalizing_factor(0, 2);
        const qseries rhs = rat(class_sign(r) * nf) * extremal_series(w, prec);
        const long upto = std::min(lhs.precision(), rhs.precision());
        rep.add("exqmf(w=" + std::to_string(w) + ")", agrees(lhs, rhs, upto), "", upto);
    }
    return rep;
}

inline report orthogonality_suite(long n_max)
{
    if (n_max < 2) {
        throw index_out_of_range("n_max must be at least 2");
    }
    report rep;
    rep.suite = "orthogonality";
    for (int r : {0, 2, 6, 8}) {
        const long off = r == 0 ? 1 : 0;
        const poly w = class_weight_poly(r);
        for (long m = 0; m <= n_max; ++m) {
            for (long n = 0; n <= n_max; ++n) {
                const rat v = apply_L(w * atkin_poly(r, m + off) * atkin_poly(r, n + off));
                const rat expect = m == n ? rat(class_sign(r) * normalizing_factor(m + off, r)) : rat(0);
                rep.add("r=" + std::to_string(r) + "(" + std::to_string(m + off) + "," + std::to_string(n + off) + ")",
                        v == expect, v == expect ? std::string() : to_string(v) + " vs " + to_string(expect));
            }
        }
    }
    for (long n = 1; n <= n_max; ++n) {
        const std::string s = "(n=" + std::to_string(n) + ")";
        rep.add("L(A2)" + s, apply_L(atkin_poly(2, n)) == 0);
        rep.add("L(jA6)" + s, apply_L(poly::x() * atkin_poly(6, n)) == 0);
        rep.add("L((j-1728)A8)" + s, apply_L(poly::linear(1728) * atkin_poly(8, n)) == 0);
        rep.add("L(j(j-1728)A0)" + s, apply_L(poly::x() * poly::linear(1728) * atkin_poly(0, n + 1)) == 0);
    }
    return rep;
}

// f(j)|T_n recognized as a polynomial in j
inline poly hecke_on_poly(const poly &f, long n)
{
    const long d = std::max(f.degree(), 0L);
    const long prec = n * (2 * d + 2) + 2;
    return recognize_poly_in_j(hecke(f(j_invariant(prec)), n, 0));
}

inline report hecke_selfadjoint_check(long n_max)
{
    report rep;
    rep.suite = "hecke_selfadjoint";
    const poly X = poly::x();
    const std::vector<std::pair<std::string, poly>> fs{
        {"1", poly::constant(1)}, {"j", X}, {"j^2", X * X}, {"A_{1,2}", atkin_poly(2, 1)}};
    for (long n = 1; n <= n_max; ++n) {
        for (const auto &[fn, f] : fs) {
            const poly tf = hecke_on_poly(f, n);
            for (const auto &[gn, g] : fs) {
                const rat a = inner_product(tf, g), b = inner_product(f, hecke_on_poly(g, n));
                rep.add("T" + std::to_string(n) + "(" + fn + "," + gn + ")", a == b);
            }
        }
    }
    return rep;
}

inline rat hankel_determinant(long order)
{
    const std::vector<integer> m = moments(2 * order);
    matrix h(static_cast<std::size_t>(order), std::vector<rat>(static_cast<std::size_t>(order)));
    for (long i = 0; i < order; ++i) {
        for (long k = 0; k < order; ++k) {
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = rat(m[static_cast<std::size_t>(i + k)]);
        }
    }
    return determinant(h);
}

} // namespace atkin

#endif
