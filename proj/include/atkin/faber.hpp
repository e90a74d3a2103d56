#ifndef ATKIN_FABER_HPP
#define ATKIN_FABER_HPP

#include <cstdlib>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <atkin/atkin_functional.hpp>
#include <atkin/atkin_polys.hpp>
#include <atkin/biseries.hpp>
#include <atkin/errors.hpp>
#include <atkin/extremal_forms.hpp>
#include <atkin/hypergeom.hpp>
#include <atkin/linalg.hpp>
#include <atkin/memo.hpp>
#include <atkin/modular_forms.hpp>
#include <atkin/poly.hpp>
#include <atkin/report.hpp>
#include <atkin/series.hpp>
#include <atkin/weight.hpp>

namespace atkin
{

enum class faber_route
{
    genfunc,
    recognition,
    hypergeometric
};

inline const char *route_name(faber_route r)
{
    switch (r) {
    case faber_route::genfunc:
        return "genfunc";
    case faber_route::recognition:
        return "recognition";
    case faber_route::hypergeometric:
        return "hypergeometric";
    }
    return "?";
}

// E4^a4 E6^a6 Delta^ad, any integer exponents, known to O(var^prec).
inline qseries eisenstein_delta_power(long a4, long a6, long ad, long prec, const std::string &var = "q")
{
    const long work = std::abs(prec) + 2 * std::abs(ad) + 6;
    auto power = [&](const qseries &s, long e) {
        if (e == 0) {
            return qseries::one("q", work);
        }
        return e > 0 ? s.pow(e) : s.inverse().pow(-e);
    };
    qseries r = power(eisenstein_series(4, work), a4) * power(eisenstein_series(6, work), a6);
    if (ad != 0) {
        r = r * power(delta(work), ad);
    }
    if (r.precision() < prec) {
        throw insufficient_precision("Eisenstein-Delta monomial fell short of the requested precision");
    }
    return r.truncated(prec).with_variable(var);
}

// G_w Delta^{-e} to O(var^prec)
inline qseries extremal_over_delta(long w, long e, long prec, const std::string &var = "q")
{
    const long work = std::abs(prec) + std::abs(e) + 4;
    const qseries g = extremal_series(w, work);
    return (g * eisenstein_delta_power(0, 0, -e, work)).truncated(prec).with_variable(var);
}

namespace detail
{

inline poly faber_recognition(long k, long n)
{
    const weight_decomp d = weight_decompose(k);
    const long m = d.m;
    const qseries base = eisenstein_delta_power(d.delta, d.epsilon, m, m + n + 2);
    const qseries j = j_invariant(n + 2);
    std::vector<qseries> s{base};
    for (long i = 1; i <= n; ++i) {
        s.push_back(s.back() * j);
    }
    std::vector<rat> c(static_cast<std::size_t>(n + 1));
    c[static_cast<std::size_t>(n)] = 1;
    qseries f = s[static_cast<std::size_t>(n)];
    for (long e = m - n + 1; e <= m; ++e) {
        const long i = m - e;
        if (f.precision() <= e) {
            throw insufficient_precision("recognition of the Faber polynomial ran out of precision");
        }
        const rat a = -f.coeff(e);
        c[static_cast<std::size_t>(i)] = a;
        if (sgn(a) != 0) {
            f = f + a * s[static_cast<std::size_t>(i)];
        }
    }
    return poly(std::move(c));
}

// [p^{n-m}] W(p) t(p)^{i+1} with W = E4^{2-delta} E6^{1-epsilon} Delta^{-m-1}
inline poly faber_genfunc(long k, long n)
{
    const weight_decomp d = weight_decompose(k);
    const long target = n - d.m;
    const qseries w = eisenstein_delta_power(2 - d.delta, 1 - d.epsilon, -(d.m + 1), target + 1);
    const qseries t = t_of_q(n + 2);
    std::vector<rat> c(static_cast<std::size_t>(n + 1));
    qseries tp = t;
    for (long i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)] = (w * tp).coeff(target);
        if (i < n) {
            tp = tp * t;
        }
    }
    return poly(std::move(c));
}

inline poly faber_hypergeometric(long k, long n)
{
    const weight_decomp d = weight_decompose(k);
    const long l = n - d.m;
    const long prec = n + 1;
    const qseries f1 = hyp2f1(rat(1, 12), rat(5, 12), 1, prec, "t").scale_variable(1728);
    const qseries g1 = g21_series(rat(1, 12), rat(5, 12), prec, "t").scale_variable(1728);
    qseries h = f1.pow(rat(-k)) * (rat(-l) * (g1 / f1)).exp();
    if (d.epsilon == 1) {
        h = h * series_from_ints("t", 0, {1, -1728}, prec).pow(make_rat(-1, 2));
    }
    std::vector<rat> c(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(n - i)] = h.coeff(i);
    }
    return poly(std::move(c));
}

inline memo<std::tuple<long, long, int>, poly> &faber_cache()
{
    static memo<std::tuple<long, long, int>, poly> m;
    return m;
}

} // namespace detail

inline poly faber_poly(long k, long n, faber_route route = faber_route::genfunc)
{
    if (n < 0) {
        throw index_below_range("Faber polynomial degree must be nonnegative");
    }
    weight_decompose(k);
    return detail::faber_cache().get({k, n, static_cast<int>(route)}, [&] {
        switch (route) {
        case faber_route::recognition:
            return detail::faber_recognition(k, n);
        case faber_route::hypergeometric:
            return detail::faber_hypergeometric(k, n);
        case faber_route::genfunc:
        default:
            return detail::faber_genfunc(k, n);
        }
    });
}

// F_{2-k,n} from the other generating function: [p^{n+m+1}] E4^delta E6^epsilon Delta^m t(p)^{i+1}.
inline poly faber_poly_dual_genfunc(long k, long n)
{
    if (n < 0) {
        throw index_below_range("Faber polynomial degree must be nonnegative");
    }
    const weight_decomp d = weight_decompose(k);
    const long target = n + d.m + 1;
    const qseries w = eisenstein_delta_power(d.delta, d.epsilon, d.m, target + 1);
    const qseries t = t_of_q(n + 2);
    std::vector<rat> c(static_cast<std::size_t>(n + 1));
    qseries tp = t;
    for (long i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)] = (w * tp).coeff(target);
        if (i < n) {
            tp = tp * t;
        }
    }
    return poly(std::move(c));
}

// f_{k,l} = E4^delta E6^epsilon Delta^m F_{k,l+m}(j) = q^{-l} + O(q^{m+1})
inline qseries faber_form(long k, long l, long prec)
{
    const weight_decomp d = weight_decompose(k);
    if (l < -d.m) {
        throw index_below_range("f_{" + std::to_string(k) + "," + std::to_string(l) + "} needs l >= " +
                                std::to_string(-d.m));
    }
    const long n = l + d.m;
    const poly f = faber_poly(k, n);
    const long work = std::abs(prec) + 2 * n + 2 * std::abs(d.m) + 4;
    const qseries fj = f(j_invariant(work));
    const qseries s = eisenstein_delta_power(d.delta, d.epsilon, d.m, work) * fj;
    if (s.precision() < prec) {
        throw insufficient_precision("weakly holomorphic form fell short of the requested precision");
    }
    const qseries r = s.truncated(prec);
    if (prec > -l && r.coeff(-l) != 1) {
        throw domain_error("leading coefficient of f_{k,l} is not 1");
    }
    for (long e = -l + 1; e <= std::min(d.m, prec - 1); ++e) {
        if (sgn(r.coeff(e)) != 0) {
            throw domain_error("gap property of f_{k,l} fails at q^" + std::to_string(e));
        }
    }
    return r;
}

// Second- and third-highest coefficients of F_{k,l+m}.
inline integer faber_c1(long k, long l)
{
    const long eps = weight_decompose(k).epsilon;
    return integer(-744 * l - 12 * (5 * k - 72 * eps));
}

// leading term c1^2/2 = 276768 l^2
inline integer faber_c2(long k, long l)
{
    const integer K(k), L(l), e(weight_decompose(k).epsilon);
    return 276768 * L * L + 36 * (1240 * K - 17856 * e - 13157) * L + 36 * (50 * K * K - 5 * (288 * e + 211) * K + 31104 * e);
}

inline report faber_coeff_formula_check(const std::vector<std::pair<long, long>> &pairs)
{
    report rep;
    rep.suite = "faber_coefficients";
    for (const auto &[k, l] : pairs) {
        const long n = l + weight_decompose(k).m;
        const std::string id = "(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")";
        if (n < 2) {
            throw index_below_range("coefficient check needs l + m >= 2 at " + id);
        }
        const poly f = faber_poly(k, n, faber_route::hypergeometric);
        const rat c1 = f.coeff(n - 1), c2 = f.coeff(n - 2);
        rep.add("c1" + id, c1 == rat(faber_c1(k, l)), to_string(c1));
        rep.add("c2" + id, c2 == rat(faber_c2(k, l)), to_string(c2));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Expansion in the Atkin-like polynomials of the weight class

enum class coeff_kind
{
    omega, // coefficients of F_{k,n}
    Omega  // coefficients of F_{2-k,n}
};

enum class expansion_route
{
    inner_product,
    linear_solve
};

inline int expansion_class(long k)
{
    return weight_decompose(k).r();
}

inline long expansion_r_min(int cls)
{
    switch (cls) {
    case 0:
    case 4:
        return 1;
    case 14:
        return -1;
    default:
        return 0;
    }
}

// A_{r,cls}; degree r - r_min
inline poly expansion_basis(int cls, long r)
{
    return atkin_poly_extended(cls, r);
}

inline rat expansion_norm(int cls, long r)
{
    if (cls == 14) {
        return normalizing_factor(r + 1, 2);
    }
    return normalizing_factor(r, cls);
}

struct expansion
{
    coeff_kind kind = coeff_kind::omega;
    long k = 0;
    long n = 0;
    int cls = 0;
    long r_min = 0;
    std::vector<rat> values;

    rat at(long r) const
    {
        if (r < r_min || r >= r_min + static_cast<long>(values.size())) {
            return rat(0);
        }
        return values[static_cast<std::size_t>(r - r_min)];
    }

    poly reconstruct() const
    {
        poly s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (sgn(values[i]) != 0) {
                s = s + values[i] * expansion_basis(cls, r_min + static_cast<long>(i));
            }
        }
        return s;
    }
};

inline poly expansion_target(coeff_kind kind, long k, long n)
{
    return kind == coeff_kind::omega ? faber_poly(k, n) : faber_poly(2 - k, n);
}

namespace detail
{

inline memo<std::tuple<int, long, long, int>, expansion> &expansion_cache()
{
    static memo<std::tuple<int, long, long, int>, expansion> m;
    return m;
}

inline expansion compute_expansion(coeff_kind kind, long k, long n, expansion_route route)
{
    expansion e;
    e.kind = kind;
    e.k = k;
    e.n = n;
    e.cls = expansion_class(k);
    e.r_min = expansion_r_min(e.cls);
    const poly f = expansion_target(kind, k, n);
    if (route == expansion_route::inner_product) {
        const poly w = class_weight_poly(e.cls);
        const int sign = class_sign(e.cls);
        const poly wf = w * f;
        for (long r = e.r_min; r <= e.r_min + n; ++r) {
            e.values.push_back(apply_L(wf * expansion_basis(e.cls, r)) / (sign * expansion_norm(e.cls, r)));
        }
        return e;
    }
    matrix a(static_cast<std::size_t>(n + 1), std::vector<rat>(static_cast<std::size_t>(n + 1)));
    std::vector<rat> b(static_cast<std::size_t>(n + 1));
    for (long c = 0; c <= n; ++c) {
        const poly basis = expansion_basis(e.cls, e.r_min + c);
        for (long i = 0; i <= n; ++i) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = basis.coeff(i);
        }
    }
    for (long i = 0; i <= n; ++i) {
        b[static_cast<std::size_t>(i)] = f.coeff(i);
    }
    auto x = solve(std::move(a), std::move(b));
    if (!x) {
        throw domain_error("Atkin-like basis is singular");
    }
    e.values = std::move(*x);
    return e;
}

} // namespace detail

inline expansion expansion_coeffs(coeff_kind kind, long k, long n, expansion_route route = expansion_route::inner_product)
{
    if (n < 0) {
        throw index_below_range("expansion index n must be nonnegative");
    }
    return detail::expansion_cache().get({static_cast<int>(kind), k, n, static_cast<int>(route)},
                                         [&] { return detail::compute_expansion(kind, k, n, route); });
}

// 12l + 4 delta + 6 epsilon in 2Z_{>=1} minus {4}
inline bool fourier_index_valid(long w)
{
    return w >= 2 && w % 2 == 0 && w != 4;
}

inline report fourier_coeff_theorem_check(long l, long k, long prec)
{
    const weight_decomp d = weight_decompose(k);
    const long w = 12 * l + d.r();
    if (!fourier_index_valid(w)) {
        throw domain_error("weight 12l + 4delta + 6epsilon = " + std::to_string(w) + " is not admissible");
    }
    report rep;
    rep.suite = "fourier_coefficients";
    const std::string id = "(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")";
    // sum_n omega_{k,n}(l) p^{n-m}
    if (prec > -d.m) {
        std::vector<rat> c;
        for (long n = 0; n - d.m < prec; ++n) {
            c.push_back(expansion_coeffs(coeff_kind::omega, k, n).at(l));
        }
        const qseries lhs(std::string("p"), -d.m, prec, std::move(c));
        const long work = std::abs(prec) + std::abs(l + d.m + 1) + 4;
        const qseries rhs = (eisenstein_delta_power(2 - 2 * d.delta, 1 - 2 * d.epsilon, -(l + d.m + 1), work) *
                             extremal_series(w, work))
                                .truncated(prec)
                                .with_variable("p");
        rep.add("omega" + id, lhs == rhs, lhs == rhs ? std::string() : lhs.to_text() + " vs " + rhs.to_text(), prec);
    }
    // sum_n Omega_{2-k,n}(l) p^{n+m+1}
    if (prec > d.m + 1) {
        std::vector<rat> c;
        for (long n = 0; n + d.m + 1 < prec; ++n) {
            c.push_back(expansion_coeffs(coeff_kind::Omega, k, n).at(l));
        }
        const qseries lhs(std::string("p"), d.m + 1, prec, std::move(c));
        const qseries rhs = extremal_over_delta(w, l - d.m, prec, "p");
        rep.add("Omega" + id, lhs == rhs, lhs == rhs ? std::string() : lhs.to_text() + " vs " + rhs.to_text(), prec);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Convolution identities

enum class corollary
{
    cor42,
    cor44_oFOF,
    cor44_ooOO,
    denominator_formula
};

struct corollary_params
{
    long k = 14;
    long n = 2;
    long l = 0;
    long l2 = 1;
    long prec = 6;
};

namespace detail
{

inline void add_poly_identity(report &rep, const std::string &id, const poly &a, const poly &b)
{
    rep.add(id, a == b, a == b ? std::string() : a.to_text() + " vs " + b.to_text());
}

// 1/(j(p) - X) = sum_i X^i t(p)^{i+1} against p exp(sum F_{0,n}(X) p^n / n), inner variable X.
inline void denominator_formula_in_X(report &rep, long order)
{
    const long op = order + 1;
    const qseries t = t_of_q(op + 1).with_variable("p");
    biseries lhs("p", "X", 0, op, order);
    std::vector<qseries> tp{t};
    for (long i = 1; i < order; ++i) {
        tp.push_back(tp.back() * t);
    }
    for (long a = 1; a < op; ++a) {
        std::vector<rat> col(static_cast<std::size_t>(order));
        for (long i = 0; i < order; ++i) {
            col[static_cast<std::size_t>(i)] = tp[static_cast<std::size_t>(i)].coeff(a);
        }
        lhs.set(a, qseries("X", 0, order, std::move(col)));
    }
    biseries s("p", "X", 0, op, order);
    for (long n = 1; n < op; ++n) {
        const poly f = faber_poly(0, n);
        std::vector<rat> col(static_cast<std::size_t>(order));
        for (long i = 0; i < order; ++i) {
            col[static_cast<std::size_t>(i)] = f.coeff(i) / n;
        }
        s.set(n, qseries("X", 0, order, std::move(col)));
    }
    const biseries p = biseries::from_outer(qseries::monomial("p", 1, 1, op), "X", order);
    const biseries rhs = p * s.exp();
    const bool ok = agrees(lhs, rhs, order, order);
    rep.add("denominator(X)", ok, ok ? std::string() : lhs.to_text(order, order) + " vs " + rhs.to_text(order, order),
            order);
}

// (j(p) - j(q)) p exp(sum F_{0,n}(j(q)) p^n / n) == 1, inner variable q.
inline void denominator_formula_in_q(report &rep, long order)
{
    const long op = order + 1;
    const long ip = order + 2 * op + 2;
    const qseries jq = j_invariant(ip + 2 * op + 2);
    biseries s("p", "q", 0, op, ip);
    for (long n = 1; n < op; ++n) {
        s.set(n, (faber_poly(0, n)(jq) / rat(n)).truncated(ip));
    }
    const biseries e = biseries::from_outer(qseries::monomial("p", 1, 1, op), "q", ip) * s.exp();
    const biseries diff = biseries::from_outer(j_invariant(op).with_variable("p"), "q", ip) -
                          biseries::from_inner("p", op, jq.truncated(ip));
    const biseries prod = diff * e;
    const biseries one = biseries::from_inner("p", order, qseries::one("q", order));
    const bool ok = agrees(prod, one, order, order);
    rep.add("denominator(q)", ok, ok ? std::string() : prod.to_text(order, order), order);
}

} // namespace detail

inline report corollary_checks(corollary which, const corollary_params &prm = {})
{
    report rep;
    const long k = prm.k;
    const std::string ks = "k=" + std::to_string(k);
    switch (which) {
    case corollary::cor42: {
        rep.suite = "cor42";
        for (long n = 0; n <= prm.n; ++n) {
            poly rhs;
            for (long r = 0; r <= n; ++r) {
                rhs = rhs + faber_poly(2 - k, n - r) * faber_poly(k, r);
            }
            detail::add_poly_identity(rep, "(" + ks + ",n=" + std::to_string(n) + ")", rat(n + 1) * faber_poly(2, n),
                                      rhs);
        }
        break;
    }
    case corollary::cor44_oFOF: {
        rep.suite = "cor44_oFOF";
        const weight_decomp d = weight_decompose(k);
        if (!fourier_index_valid(12 * prm.l + d.r())) {
            throw domain_error("l is not admissible for weight " + std::to_string(k));
        }
        for (long n = 0; n <= prm.n; ++n) {
            poly lhs, rhs;
            for (long dd = 0; dd <= n; ++dd) {
                lhs = lhs + expansion_coeffs(coeff_kind::omega, k, dd).at(prm.l) * faber_poly(2 - k, n - dd);
                rhs = rhs + expansion_coeffs(coeff_kind::Omega, k, n - dd).at(prm.l) * faber_poly(k, dd);
            }
            detail::add_poly_identity(rep, "(" + ks + ",l=" + std::to_string(prm.l) + ",n=" + std::to_string(n) + ")",
                                      lhs, rhs);
        }
        break;
    }
    case corollary::cor44_ooOO: {
        rep.suite = "cor44_ooOO";
        const weight_decomp d = weight_decompose(k);
        if (!fourier_index_valid(12 * prm.l + d.r())) {
            throw domain_error("l is not admissible for weight " + std::to_string(k));
        }
        if (!fourier_index_valid(12 * prm.l2 + 14 - d.r())) {
            throw domain_error("l' is not admissible for weight " + std::to_string(k));
        }
        for (long n = 0; n <= prm.n; ++n) {
            rat lhs = 0, rhs = 0;
            for (long dd = 0; dd <= n; ++dd) {
                lhs += expansion_coeffs(coeff_kind::omega, k, dd).at(prm.l) *
                       expansion_coeffs(coeff_kind::omega, 2 - k, n - dd).at(prm.l2);
                rhs += expansion_coeffs(coeff_kind::Omega, k, n - dd).at(prm.l) *
                       expansion_coeffs(coeff_kind::Omega, 2 - k, dd).at(prm.l2);
            }
            rep.add("(" + ks + ",l=" + std::to_string(prm.l) + ",l'=" + std::to_string(prm.l2) + ",n=" +
                        std::to_string(n) + ")",
                    lhs == rhs, to_string(lhs) + " vs " + to_string(rhs));
        }
        break;
    }
    case corollary::denominator_formula:
        rep.suite = "denominator_formula";
        detail::denominator_formula_in_X(rep, prm.prec);
        detail::denominator_formula_in_q(rep, prm.prec);
        break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// H_n = n (H_1 | T_n), H_1 = j - 720

enum class h_route
{
    hecke,
    faber_shift
};

inline poly h_poly(long n, h_route route = h_route::hecke)
{
    if (n < 0) {
        throw index_below_range("H_n needs n >= 0");
    }
    if (n == 0) {
        return poly::constant(1);
    }
    if (route == h_route::faber_shift) {
        return faber_poly(0, n) + poly::constant(rat(24 * divisor_sigma(1, n)));
    }
    const long work = 2 * n + 2;
    const qseries h1 = j_invariant(n * work) - rat(720);
    return recognize_poly_in_j(rat(n) * hecke(h1, n, 0));
}

// ---------------------------------------------------------------------------
// Generating series of Atkin inner products

enum class section5
{
    prop51,
    cor52_i,
    cor52_ii,
    eqFFpq,
    thm53,
    cor54
};

struct section5_params
{
    long l = 1;
    long order = 5;
    long k = 14;
};

// (psi(p,q) - psi(q,p)) / (t(p) - t(q)), psi(p,q) = E2(p) t(p) E6(q)/E4(q), to bi-order (order, order)
inline biseries faber_gram_closed_form(long order)
{
    const long big = 2 * order + 1;
    const qseries a = (eisenstein_series(2, big) * t_of_q(big)).truncated(big);
    const qseries b = eisenstein_series(6, big) / eisenstein_series(4, big);
    const biseries num = biseries::from_product(a.with_variable("p"), b) -
                         biseries::from_product(b.with_variable("p"), a);
    const qseries t = t_of_q(big);
    const biseries den = biseries::from_outer(t.with_variable("p"), "q", big) - biseries::from_inner("p", big, t);
    const biseries r = num.divide_by_difference(order) / den.divide_by_difference(order);
    return r.truncated(order, order);
}

namespace detail
{

inline biseries gram_from_polys(const std::vector<poly> &ps, long shift)
{
    const long n = static_cast<long>(ps.size());
    biseries r("p", "q", shift, n + shift, n + shift);
    for (long a = 0; a < n; ++a) {
        std::vector<rat> col(static_cast<std::size_t>(n));
        for (long b = 0; b < n; ++b) {
            col[static_cast<std::size_t>(b)] =
                inner_product(ps[static_cast<std::size_t>(a)], ps[static_cast<std::size_t>(b)]);
        }
        r.set(a + shift, qseries("q", shift, n + shift, std::move(col)));
    }
    return r;
}

inline void add_series(report &rep, const std::string &id, const qseries &a, const qseries &b, long order)
{
    const bool ok = a == b;
    rep.add(id, ok, ok ? a.to_text() : a.to_text() + " vs " + b.to_text(), order);
}

inline void add_biseries(report &rep, const std::string &id, const biseries &a, const biseries &b, long uo, long ui)
{
    const bool ok = agrees(a, b, uo, ui);
    rep.add(id, ok, ok ? std::string() : a.to_text(uo, ui) + " vs " + b.to_text(uo, ui), std::min(uo, ui));
}

// sum_r c_r g_r(p) g_r(q) with g_r = G_{12 r + base} Delta^{-r - shift}
inline biseries symmetric_gram(long base, long shift, long order)
{
    biseries acc("p", "q", 0, order, order);
    for (long r = 0; r + shift < order; ++r) {
        const qseries g = extremal_over_delta(12 * r + base, r + shift, order);
        acc = acc + normalizing_factor(r + shift, 2) * biseries::from_product(g.with_variable("p"), g);
    }
    return acc;
}

} // namespace detail

inline report section5_series(section5 which, const section5_params &prm = {})
{
    report rep;
    const long order = prm.order;
    const long l = prm.l;
    const std::string ls = "(l=" + std::to_string(l) + ")";
    switch (which) {
    case section5::prop51: {
        rep.suite = "prop51";
        if (l < 0) {
            throw index_below_range("l must be nonnegative");
        }
        const poly a = atkin_poly(2, l);
        std::vector<rat> c;
        for (long n = 0; n < order; ++n) {
            c.push_back(inner_product(h_poly(n), a));
        }
        const qseries lhs("p", 0, order, std::move(c));
        const qseries rhs = l == 0 ? qseries::one("p", order)
                                   : normalizing_factor(l, 2) * extremal_over_delta(12 * l + 2, l, order, "p");
        detail::add_series(rep, ls, lhs, rhs, order);
        break;
    }
    case section5::cor52_i: {
        rep.suite = "cor52_i";
        if (l < 1) {
            throw index_below_range("l must be positive");
        }
        const poly hl = h_poly(l);
        std::vector<rat> c{rat(0)};
        for (long n = 1; n < order; ++n) {
            c.push_back(inner_product(h_poly(n), hl));
        }
        const qseries lhs("p", 0, order, std::move(c));
        qseries rhs = qseries::zero("p", order);
        const expansion om = expansion_coeffs(coeff_kind::Omega, 2, l);
        for (long r = 0; r < l; ++r) {
            rhs = rhs + om.at(r) * normalizing_factor(r + 1, 2) * extremal_over_delta(12 * r + 14, r + 1, order, "p");
        }
        detail::add_series(rep, ls, lhs, rhs, order);
        break;
    }
    case section5::cor52_ii: {
        rep.suite = "cor52_ii";
        std::vector<poly> hs;
        for (long n = 1; n < order; ++n) {
            hs.push_back(h_poly(n));
        }
        const biseries lhs = detail::gram_from_polys(hs, 1);
        detail::add_biseries(rep, "HH", lhs, detail::symmetric_gram(14, 1, order), order, order);
        break;
    }
    case section5::eqFFpq:
    case section5::thm53: {
        rep.suite = which == section5::eqFFpq ? "eqFFpq" : "thm53";
        std::vector<poly> fs;
        for (long n = 0; n < order; ++n) {
            fs.push_back(faber_poly(0, n));
        }
        const biseries lhs = detail::gram_from_polys(fs, 0);
        const biseries rhs =
            which == section5::eqFFpq ? detail::symmetric_gram(2, 0, order) : faber_gram_closed_form(order);
        detail::add_biseries(rep, "FF", lhs, rhs, order, order);
        break;
    }
    case section5::cor54: {
        rep.suite = "cor54";
        const weight_decomp d = weight_decompose(prm.k);
        std::vector<poly> fs;
        for (long n = 0; n < order; ++n) {
            fs.push_back(faber_poly(prm.k, n));
        }
        const biseries lhs = detail::gram_from_polys(fs, -d.m);
        const qseries w = eisenstein_delta_power(-d.delta, -d.epsilon, -d.m, order - d.m + 2);
        const biseries rhs =
            faber_gram_closed_form(order + std::max(0L, -d.m)) * biseries::from_product(w.with_variable("p"), w);
        detail::add_biseries(rep, "(k=" + std::to_string(prm.k) + ")", lhs, rhs, order - d.m, order - d.m);
        break;
    }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// t = 1/j and its compositional inverse

struct inverse_pair
{
    qseries t_of_q;
    qseries q_of_t;
};

// q(t) = t exp(G1(1728t)/F1(1728t))
inline inverse_pair inverse_series(long prec)
{
    if (prec < 2) {
        throw insufficient_precision("inverse series need precision >= 2");
    }
    const qseries f1 = hyp2f1(rat(1, 12), rat(5, 12), 1, prec, "t").scale_variable(1728);
    const qseries g1 = g21_series(rat(1, 12), rat(5, 12), prec, "t").scale_variable(1728);
    const qseries q = (g1 / f1).exp().shift(1).truncated(prec);
    return {t_of_q(prec), q};
}

inline report inverse_series_check(long prec)
{
    report rep;
    rep.suite = "inverse_series";
    const inverse_pair ip = inverse_series(prec);
    const qseries id = qseries::monomial("q", 1, 1, prec);
    const qseries round = compose(ip.q_of_t, ip.t_of_q);
    rep.add("q(t(q)) = q", agrees(round, id, prec), round.to_text(), prec);
    const qseries rev = ip.t_of_q.revert().with_variable("t");
    rep.add("q(t) = revert(t(q))", rev == ip.q_of_t, rev.to_text(), prec);
    bool integral = true;
    for (long e = 1; e < prec; ++e) {
        integral = integral && is_integer(ip.t_of_q.coeff(e)) && is_integer(ip.q_of_t.coeff(e));
    }
    rep.add("integral coefficients", integral, {}, prec);
    return rep;
}

} // namespace atkin

#endif
