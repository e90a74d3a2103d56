#ifndef ATKIN_ROGERS_CF_HPP
#define ATKIN_ROGERS_CF_HPP

#include <string>
#include <utility>
#include <vector>

#include <atkin/atkin_functional.hpp>
#include <atkin/biseries.hpp>
#include <atkin/errors.hpp>
#include <atkin/extremal_forms.hpp>
#include <atkin/hypergeom.hpp>
#include <atkin/modular_forms.hpp>
#include <atkin/poly.hpp>
#include <atkin/report.hpp>
#include <atkin/series.hpp>

namespace atkin
{

// Lists are 1-based in the formulas: e[0] holds e_1, alpha[0] holds alpha_1, beta[0] holds beta_1.
// A[0] holds A_0.
struct cf_coeffs
{
    rat a0;
    std::vector<rat> e;
    std::vector<rat> alpha;
    std::vector<rat> beta;
    std::vector<rat> A;
    // the J-fraction stopped early at a vanishing beta
    bool terminated = false;
};

struct jfraction
{
    rat a0;
    std::vector<rat> alpha;
    std::vector<rat> beta;
    bool terminated = false;
};

inline std::vector<rat> atkin_moments_rat(long count)
{
    std::vector<rat> out;
    for (const integer &m : moments(count)) {
        out.emplace_back(m);
    }
    return out;
}

// Stieltjes procedure: monic p_{n+1} = (x - alpha_{n+1}) p_n - beta_n p_{n-1},
// alpha_{n+1} = L(x p_n^2)/L(p_n^2), beta_n = L(p_n^2)/L(p_{n-1}^2).
// With allow_termination a vanishing L(p_n^2) ends the fraction with beta_n = 0.
inline jfraction jfraction_from_moments(const std::vector<rat> &mu, long depth, bool allow_termination = false)
{
    if (depth < 1) {
        throw domain_error("J-fraction depth must be positive");
    }
    if (static_cast<long>(mu.size()) < 2 * depth + 1) {
        throw insufficient_precision("J-fraction of depth " + std::to_string(depth) + " needs " +
                                     std::to_string(2 * depth + 1) + " moments");
    }
    auto L = [&](const poly &f) {
        rat s = 0;
        for (long i = 0; i <= f.degree(); ++i) {
            s += f.coeff(i) * mu[static_cast<std::size_t>(i)];
        }
        return s;
    };
    jfraction jf;
    jf.a0 = mu[0];
    if (sgn(jf.a0) == 0) {
        throw singular_hankel("zeroth moment vanishes");
    }
    poly prev, cur = poly::constant(1);
    rat norm_prev = 0, norm_cur = mu[0];
    for (long n = 0; n < depth; ++n) {
        const poly sq = cur * cur;
        const rat a = L(poly::x() * sq) / norm_cur;
        jf.alpha.push_back(a);
        poly next = (poly::x() - poly::constant(a)) * cur;
        if (n > 0) {
            next = next - (norm_cur / norm_prev) * prev;
        }
        const rat norm_next = L(next * next);
        const rat b = norm_next / norm_cur;
        jf.beta.push_back(b);
        if (sgn(norm_next) == 0) {
            if (!allow_termination) {
                throw singular_hankel("Hankel minor of order " + std::to_string(n + 2) + " vanishes");
            }
            jf.terminated = true;
            break;
        }
        prev = std::move(cur);
        cur = std::move(next);
        norm_prev = norm_cur;
        norm_cur = norm_next;
    }
    return jf;
}

// Quotient-difference algorithm: h = c_0/(1 - e_1 x/(1 - e_2 x/(1 - ...))), returns e_1..e_count.
inline std::vector<rat> sfraction_from_series(const qseries &h, long count)
{
    if (count < 1) {
        throw domain_error("S-fraction needs a positive count");
    }
    if (h.valuation() > 0 || sgn(h.coeff(0)) == 0) {
        throw qd_breakdown("series must have a nonzero constant term");
    }
    const long need = count + 1;
    if (h.precision() < need) {
        throw insufficient_precision("S-fraction with " + std::to_string(count) + " terms needs " +
                                     std::to_string(need) + " coefficients");
    }
    // q[k] = q_m^{(k)}, e[k] = e_m^{(k)}; column m advances in place
    std::vector<rat> q, e(static_cast<std::size_t>(need + 1), rat(0));
    for (long k = 0; k + 1 < need; ++k) {
        if (sgn(h.coeff(k)) == 0) {
            throw qd_breakdown("zero coefficient in the first quotient column");
        }
        q.push_back(h.coeff(k + 1) / h.coeff(k));
    }
    std::vector<rat> out;
    for (long m = 1;; ++m) {
        out.push_back(q[0]);
        if (static_cast<long>(out.size()) == count) {
            break;
        }
        // e_m^{(k)} = q_m^{(k+1)} - q_m^{(k)} + e_{m-1}^{(k+1)}
        std::vector<rat> en;
        for (std::size_t k = 0; k + 1 < q.size(); ++k) {
            en.push_back(q[k + 1] - q[k] + e[k + 1]);
        }
        out.push_back(en[0]);
        if (static_cast<long>(out.size()) == count) {
            break;
        }
        // q_{m+1}^{(k)} = q_m^{(k+1)} e_m^{(k+1)} / e_m^{(k)}
        std::vector<rat> qn;
        for (std::size_t k = 0; k + 1 < en.size(); ++k) {
            if (sgn(en[k]) == 0) {
                throw qd_breakdown("zero pivot at column " + std::to_string(m));
            }
            qn.push_back(q[k + 1] * en[k + 1] / en[k]);
        }
        q = std::move(qn);
        e = std::move(en);
        e.push_back(rat(0));
    }
    return out;
}

// closed forms for the Atkin moment series
inline rat e_closed(long n)
{
    if (n < 1) {
        throw index_out_of_range("e_n needs n >= 1");
    }
    if (n == 1) {
        return rat(720);
    }
    const long s = n % 2 == 0 ? 1 : -1;
    return rat(12) * (rat(6) + make_rat(s, n - 1)) * (rat(6) + make_rat(s, n));
}

inline rat alpha_closed(long n)
{
    if (n < 1) {
        throw index_out_of_range("alpha_n needs n >= 1");
    }
    if (n == 1) {
        return rat(720);
    }
    return make_rat(24 * (144 * (n - 1) * (n - 1) - 29), (2 * n - 1) * (2 * n - 3));
}

inline rat beta_closed(long n)
{
    if (n < 1) {
        throw index_out_of_range("beta_n needs n >= 1");
    }
    if (n == 1) {
        return rat(393120);
    }
    const integer num = integer(36) * (12 * n - 13) * (12 * n - 7) * (12 * n - 5) * (12 * n + 1);
    const integer den = integer(n) * (n - 1) * (2 * n - 1) * (2 * n - 1);
    return make_rat(num, den);
}

// A_0 = 1/a_0, A_{r+1} = beta_{r+1} A_r
inline std::vector<rat> addition_weights(const jfraction &jf)
{
    std::vector<rat> a{rat(1) / jf.a0};
    for (const rat &b : jf.beta) {
        a.push_back(a.back() * b);
    }
    return a;
}

inline cf_coeffs atkin_cf(long depth)
{
    const std::vector<rat> mu = atkin_moments_rat(2 * depth + 1);
    const jfraction jf = jfraction_from_moments(mu, depth);
    cf_coeffs c;
    c.a0 = jf.a0;
    c.alpha = jf.alpha;
    c.beta = jf.beta;
    c.A = addition_weights(jf);
    c.e = sfraction_from_series(qseries("x", 0, 2 * depth + 1, mu), 2 * depth);
    return c;
}

// alpha_1 = e_1, alpha_n = e_{2n-2} + e_{2n-1}, beta_n = e_{2n-1} e_{2n}
inline report sj_consistency(const cf_coeffs &c)
{
    report rep;
    rep.suite = "sj_consistency";
    auto e = [&](long n) { return c.e[static_cast<std::size_t>(n - 1)]; };
    const long ne = static_cast<long>(c.e.size());
    for (long n = 1; n <= static_cast<long>(c.alpha.size()); ++n) {
        if (2 * n - 1 > ne) {
            break;
        }
        const rat a = n == 1 ? e(1) : e(2 * n - 2) + e(2 * n - 1);
        rep.add("alpha_" + std::to_string(n), a == c.alpha[static_cast<std::size_t>(n - 1)], to_string(a));
        if (2 * n <= ne && n <= static_cast<long>(c.beta.size())) {
            const rat b = e(2 * n - 1) * e(2 * n);
            rep.add("beta_" + std::to_string(n), b == c.beta[static_cast<std::size_t>(n - 1)], to_string(b));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// phi_r

enum class phi_route
{
    recurrence,
    hypergeometric
};

namespace detail
{

// phi_0..phi_rmax from h by the three-term recurrence; phi_r known to prec_h - 2r.
inline std::vector<qseries> phi_recurrence(const qseries &h, const jfraction &jf, long rmax)
{
    const qseries x = qseries::monomial(h.variable(), 1, 1, h.precision());
    std::vector<qseries> phi{h};
    for (long n = 1; n <= rmax; ++n) {
        if (n > static_cast<long>(jf.beta.size()) || sgn(jf.beta[static_cast<std::size_t>(n - 1)]) == 0) {
            throw domain_error("phi_" + std::to_string(n) + " is undefined past a vanishing beta");
        }
        const qseries &p1 = phi.back();
        const rat a = jf.alpha[static_cast<std::size_t>(n - 1)];
        qseries num = p1 - a * (x.truncated(p1.precision()) * p1);
        num = n == 1 ? num - jf.a0 : num - phi[phi.size() - 2].truncated(num.precision());
        if (sgn(num.coeff(0)) != 0 || sgn(num.coeff(1)) != 0) {
            throw nonzero_remainder("phi recurrence does not vanish to second order at n = " + std::to_string(n));
        }
        phi.push_back(num.shift(-2) / jf.beta[static_cast<std::size_t>(n - 1)]);
    }
    return phi;
}

inline memo<long, jfraction> &atkin_jf_cache()
{
    static memo<long, jfraction> m;
    return m;
}

inline jfraction atkin_jf(long depth)
{
    return atkin_jf_cache().get(depth, [&] { return jfraction_from_moments(atkin_moments_rat(2 * depth + 1), depth); });
}

} // namespace detail

// h(x) = sum L(j^n) x^n
inline qseries atkin_h(long prec, const std::string &var = "x")
{
    return qseries(var, 0, prec, atkin_moments_rat(prec));
}

inline qseries phi_series(long r, long prec, phi_route route = phi_route::hypergeometric)
{
    if (r < 0) {
        throw index_out_of_range("phi_r needs r >= 0");
    }
    if (route == phi_route::hypergeometric) {
        const qseries num = hyp2f1(rat(r) + rat(5, 12), rat(r) + rat(13, 12), rat(2 * r + 1), prec, "x").scale_variable(1728);
        const qseries den = hyp2f1(rat(1, 12), rat(5, 12), 1, prec, "x").scale_variable(1728);
        return num / den;
    }
    const long hp = prec + 2 * r;
    return detail::phi_recurrence(atkin_h(hp), detail::atkin_jf(std::max(1L, r)), r)[static_cast<std::size_t>(r)]
        .truncated(prec);
}

// h_r = B(t^r phi_r(t))
inline qseries h_r_series(const qseries &phi_r, long r)
{
    return phi_r.shift(r).borel();
}

// ---------------------------------------------------------------------------
// Addition formula B(h)(x+y) = A_0 B(h)(x) B(h)(y) + sum_r A_r h_r(x) h_r(y)

namespace detail
{

inline void addition_formula_case(report &rep, const std::string &name, const qseries &h, const jfraction &jf,
                                  const std::vector<qseries> &phi, long order)
{
    const std::vector<rat> A = addition_weights(jf);
    // left: coefficient of x^a y^b is h_{a+b}/(a! b!)
    biseries lhs("x", "y", 0, order, order);
    for (long a = 0; a < order; ++a) {
        std::vector<rat> col(static_cast<std::size_t>(order));
        for (long b = 0; b < order; ++b) {
            col[static_cast<std::size_t>(b)] = h.coeff(a + b) / rat(factorial(a) * factorial(b));
        }
        lhs.set(a, qseries("y", 0, order, std::move(col)));
    }
    const qseries bh = h.borel().truncated(order).with_variable("x");
    biseries rhs = A[0] * biseries::from_product(bh, bh.with_variable("y"));
    for (long r = 1; r < order && r < static_cast<long>(A.size()); ++r) {
        if (sgn(A[static_cast<std::size_t>(r)]) == 0) {
            continue;
        }
        const qseries hr = h_r_series(phi[static_cast<std::size_t>(r)], r).truncated(order).with_variable("x");
        rhs = rhs + A[static_cast<std::size_t>(r)] * biseries::from_product(hr, hr.with_variable("y"));
    }
    const bool ok = agrees(lhs, rhs, order, order);
    rep.add(name, ok, ok ? std::string() : lhs.to_text(order, order) + " vs " + rhs.to_text(order, order), order);
}

} // namespace detail

enum class addition_case
{
    atkin,
    cosine
};

inline report addition_formula_check(addition_case which, long order)
{
    if (order < 1) {
        throw domain_error("order must be positive");
    }
    report rep;
    if (which == addition_case::cosine) {
        rep.suite = "addition_cosine";
        // h = 1/(1+x^2)
        const long prec = 2 * order + 2;
        const qseries h = series_from_ints("x", 0, {1, 0, 1}, prec).inverse();
        std::vector<rat> mu;
        for (long i = 0; i < prec; ++i) {
            mu.push_back(h.coeff(i));
        }
        const jfraction jf = jfraction_from_moments(mu, order, true);
        rep.add("terminates", jf.terminated && jf.beta.size() == 2, "beta = " + to_string(jf.beta[0]));
        rep.add("alpha = 0, beta_1 = -1", jf.alpha[0] == 0 && jf.beta[0] == -1 && jf.beta[1] == 0);
        std::vector<qseries> phi = detail::phi_recurrence(h, jf, 1);
        rep.add("phi_1 = h", phi[1].truncated(order) == h.truncated(order), phi[1].to_text());
        const qseries c = h.borel(), s = h_r_series(phi[1], 1);
        bool trig = true;
        for (long n = 0; n < order; ++n) {
            const rat f = rat(1) / rat(factorial(n));
            trig = trig && c.coeff(n) == (n % 2 ? rat(0) : (n % 4 == 0 ? f : -f));
            trig = trig && s.coeff(n) == (n % 2 == 0 ? rat(0) : (n % 4 == 1 ? f : -f));
        }
        rep.add("B(h) = cos, h_1 = sin", trig, {}, order);
        detail::addition_formula_case(rep, "cos(x+y)", h, jf, phi, order);
        return rep;
    }
    rep.suite = "addition_atkin";
    const long depth = order;
    const jfraction jf = detail::atkin_jf(depth);
    const long hp = 3 * order + 2;
    const qseries h = atkin_h(hp);
    const std::vector<qseries> phi = detail::phi_recurrence(h, jf, order - 1);
    const std::vector<rat> A = addition_weights(jf);
    for (long r = 0; r < order; ++r) {
        const rat n = r == 0 ? rat(1) : normalizing_factor(r, 2);
        rep.add("A_" + std::to_string(r) + " = N_{" + std::to_string(r) + ",2}", A[static_cast<std::size_t>(r)] == n,
                to_string(A[static_cast<std::size_t>(r)]));
    }
    detail::addition_formula_case(rep, "B(h)(x+y)", h, jf, phi, order);
    return rep;
}

// phi_r through both routes; s L(B(h))(s) = h(1/s)
inline report phi_routes_check(long r_max, long prec)
{
    report rep;
    rep.suite = "phi_routes";
    for (long r = 0; r <= r_max; ++r) {
        const qseries a = phi_series(r, prec, phi_route::recurrence), b = phi_series(r, prec, phi_route::hypergeometric);
        rep.add("phi_" + std::to_string(r), a == b, a == b ? std::string() : a.to_text() + " vs " + b.to_text(), prec);
    }
    const qseries h = atkin_h(prec);
    const qseries back = h.borel().laplace().shift(-1).with_variable("x");
    rep.add("s L(B(h))(s) = h(1/s)", back == h, {}, prec);
    return rep;
}

// sum L(j^{a+b}) t(p)^a t(q)^b = sum_r N_{r,2} u_r(p) u_r(q), u_r = t^r phi_r(t) = E4 G_{12r+2} / (E6 Delta^r)
inline report addphi_check(long order)
{
    report rep;
    rep.suite = "addphi";
    const qseries t = t_of_q(order + 1).truncated(order);
    std::vector<qseries> u;
    for (long r = 0; r < order; ++r) {
        const qseries ur = compose(phi_series(r, order).shift(r).truncated(order), t).truncated(order);
        const long work = order + r + 4;
        const qseries form =
            (eisenstein_series(4, work) / eisenstein_series(6, work) * extremal_series(12 * r + 2, work) *
             delta(work + r + 2).inverse().pow(r))
                .truncated(order);
        rep.add("u_" + std::to_string(r), ur == form, ur == form ? std::string() : ur.to_text() + " vs " + form.to_text(),
                order);
        u.push_back(ur);
    }
    const std::vector<rat> mu = atkin_moments_rat(2 * order);
    std::vector<qseries> tp{qseries::one("q", order)};
    for (long a = 1; a < order; ++a) {
        tp.push_back((tp.back() * t).truncated(order));
    }
    biseries lhs("p", "q", 0, order, order), rhs("p", "q", 0, order, order);
    for (long a = 0; a < order; ++a) {
        for (long b = 0; b < order; ++b) {
            lhs = lhs + mu[static_cast<std::size_t>(a + b)] *
                            biseries::from_product(tp[static_cast<std::size_t>(a)].with_variable("p"),
                                                   tp[static_cast<std::size_t>(b)]);
        }
    }
    for (long r = 0; r < order; ++r) {
        const rat n = r == 0 ? rat(1) : normalizing_factor(r, 2);
        rhs = rhs + n * biseries::from_product(u[static_cast<std::size_t>(r)].with_variable("p"),
                                               u[static_cast<std::size_t>(r)]);
    }
    const bool ok = agrees(lhs, rhs, order, order);
    rep.add("two-variable", ok, ok ? std::string() : lhs.to_text(order, order) + " vs " + rhs.to_text(order, order),
            order);
    return rep;
}

} // namespace atkin

#endif
