#ifndef ATKIN_EXTREMAL_FORMS_HPP
#define ATKIN_EXTREMAL_FORMS_HPP

#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <atkin/atkin_polys.hpp>
#include <atkin/errors.hpp>
#include <atkin/hypergeom.hpp>
#include <atkin/linalg.hpp>
#include <atkin/memo.hpp>
#include <atkin/modular_forms.hpp>
#include <atkin/report.hpp>

namespace atkin
{

enum class extremal_route
{
    diff_recursion,
    linear_recursion,
    ab_polys,
    hypergeometric
};

inline const char *route_name(extremal_route r)
{
    switch (r) {
    case extremal_route::diff_recursion:
        return "diff_recursion";
    case extremal_route::linear_recursion:
        return "linear_recursion";
    case extremal_route::ab_polys:
        return "ab_polys";
    default:
        return "hypergeometric";
    }
}

struct extremal_form
{
    long weight = 0;
    qseries series;
    long depth = 1;
};

// dim QM_w^{(1)}: coefficient of T^w in 1/((1-T^2)(1-T^6)).
inline long extremal_dimension(long w)
{
    if (w < 0 || w % 2 != 0) {
        return 0;
    }
    return w / 6 + 1;
}

// N_{x,0} or N_{x,2} for integer or half-integer x.
inline rat normalizing_factor_at(const rat &x, int base)
{
    if (x == 0) {
        return 1;
    }
    const rat twelve_x = 12 * x;
    if (!is_integer(twelve_x / 6) || sgn(x) < 0) {
        throw domain_error("normalizing factor needs a nonnegative integer or half-integer");
    }
    const long a = (rat(6 * x)).get_num().get_si();
    const long b = (rat(2 * x)).get_num().get_si();
    const long c = twelve_x.get_num().get_si();
    rat n0 = 24 * x * rat(binomial(a, b)) * rat(binomial(c, a));
    if (base == 0) {
        return n0;
    }
    return n0 * (twelve_x + 1) / (twelve_x - 1);
}

inline rat normalizing_factor(long m, int r)
{
    if (m < 0) {
        throw index_out_of_range("normalizing factor needs m >= 0");
    }
    switch (r) {
    case 0:
    case 4:
        return normalizing_factor_at(rat(m), 0);
    case 2:
        return normalizing_factor_at(rat(m), 2);
    case 6:
    case 10:
        return normalizing_factor_at(rat(m) + rat(1, 2), 0);
    case 8:
        return normalizing_factor_at(rat(m) + rat(1, 2), 2);
    case 14:
        return normalizing_factor_at(rat(m + 1), 2);
    default:
        throw index_out_of_range("normalizing factor class must be one of 0, 2, 4, 6, 8, 10, 14");
    }
}

namespace detail
{

inline void check_extremal_weight(long w)
{
    if (w < 0 || w % 2 != 0) {
        throw unsupported_weight("extremal forms exist for even w >= 0, got " + std::to_string(w));
    }
}

// Delta^e P(j) = sum p_i E4^{3i} Delta^{e-i}, holomorphic since deg P <= e.
inline qseries delta_times_poly_in_j(long e, const poly &p, long prec)
{
    qseries s = qseries::zero("q", prec);
    if (p.is_zero()) {
        return s;
    }
    if (p.degree() > e) {
        throw domain_error("polynomial degree exceeds the power of Delta");
    }
    const qseries e43 = eisenstein_series(4, prec).pow(3L), d = delta(prec);
    qseries e4pow = qseries::one("q", prec);
    for (long i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) != 0) {
            s = s + p.coeff(i) * (e - i == 0 ? e4pow : e4pow * d.pow(e - i));
        }
        e4pow = e4pow * e43;
    }
    return s;
}

inline qseries ab_route(long w, long prec)
{
    const long m = w / 12, r = w % 12;
    const qseries e2 = eisenstein_series(2, prec), e4 = eisenstein_series(4, prec), e6 = eisenstein_series(6, prec);
    const rat n = normalizing_factor(m, static_cast<int>(r));
    switch (r) {
    case 0: {
        const qseries a = m == 0 ? qseries::zero("q", prec) : delta_times_poly_in_j(m - 1, atkin_poly(0, m), prec);
        return (delta_times_poly_in_j(m, adjoint_poly(0, m), prec) - e2 * e4 * e6 * a) / n;
    }
    case 2: {
        const qseries b = m == 0 ? qseries::zero("q", prec) : delta_times_poly_in_j(m - 1, adjoint_poly(2, m), prec);
        return (e2 * delta_times_poly_in_j(m, atkin_poly(2, m), prec) - e4 * e4 * e6 * b) / n;
    }
    case 6:
        return (e2 * e4 * delta_times_poly_in_j(m, atkin_poly(6, m), prec) -
                e6 * delta_times_poly_in_j(m, adjoint_poly(6, m), prec)) /
               n;
    case 8:
        return (e4 * e4 * delta_times_poly_in_j(m, adjoint_poly(8, m), prec) -
                e2 * e6 * delta_times_poly_in_j(m, atkin_poly(8, m), prec)) /
               n;
    default:
        throw unsupported_weight("weight " + std::to_string(w) + " is not covered by the A/B representation");
    }
}

// t^n F^{e}(1728 t) 2F1(a,b;n+1;1728 t), composed with t(q).
inline qseries hypergeometric_route(long w, long prec)
{
    const long n = w / 6;
    const bool plus2 = w % 6 == 2;
    const long e = plus2 ? 6 * n + 1 : 6 * n - 1;
    const rat a = plus2 ? make_rat(6 * n - 1, 12) : make_rat(6 * n + 1, 12);
    const rat b = plus2 ? make_rat(6 * n + 7, 12) : make_rat(6 * n + 5, 12);
    const long tp = prec + 1;
    const qseries f = hyp2f1(make_rat(1, 12), make_rat(5, 12), 1, tp, "t").scale_variable(1728);
    const qseries h = hyp2f1(a, b, rat(n + 1), tp, "t").scale_variable(1728);
    const qseries fp = e >= 0 ? f.pow(e) : f.inverse().pow(-e);
    const qseries inner = (fp * h).shift(n).truncated(tp);
    return compose(inner, t_of_q(tp + 1)).truncated(prec);
}

inline qseries diff_route(long w, long prec);
inline qseries linear_route(long w, long prec);

inline memo<std::tuple<long, int, long>, qseries> &extremal_cache()
{
    static memo<std::tuple<long, int, long>, qseries> cache;
    return cache;
}

inline qseries cached(long w, extremal_route route, long prec)
{
    const long cp = cache_precision(prec);
    return extremal_cache()
        .get({w, static_cast<int>(route), cp},
             [&] {
                 if (w == 0) {
                     return qseries::one("q", cp);
                 }
                 if (w % 12 == 4 || w % 12 == 10) {
                     return eisenstein_series(4, cp) * cached(w - 4, route, cp);
                 }
                 switch (route) {
                 case extremal_route::diff_recursion:
                     return diff_route(w, cp);
                 case extremal_route::linear_recursion:
                     return linear_route(w, cp);
                 case extremal_route::ab_polys:
                     return ab_route(w, cp);
                 default:
                     return hypergeometric_route(w, cp);
                 }
             })
        .truncated(prec);
}

inline qseries k_up(const qseries &f, long w)
{
    return eisenstein_series(4, f.precision()) * serre_derivative(f, rat(w - 1)) -
           make_rat(w + 1, 12) * (eisenstein_series(6, f.precision()) * f);
}

inline qseries diff_route(long w, long prec)
{
    if (w % 6 == 0) {
        const long v = w - 6;
        return make_rat(w, 72 * (v + 1) * (v + 5)) * k_up(cached(v, extremal_route::diff_recursion, prec), v);
    }
    // w = 2 mod 6 here (w = 4 mod 6 is E4 G_{w-4})
    return make_rat(12, w - 1) * serre_derivative(cached(w - 2, extremal_route::diff_recursion, prec), rat(w - 3));
}

inline qseries linear_route(long w, long prec)
{
    const auto R = extremal_route::linear_recursion;
    const qseries e2 = eisenstein_series(2, prec), e4 = eisenstein_series(4, prec), e6 = eisenstein_series(6, prec);
    switch (w) {
    case 2:
        return e2;
    case 6:
        return (e2 * e4 - e6) / rat(720);
    case 8:
        return (e4 * e4 - e2 * e6) / rat(1008);
    default:
        break;
    }
    const qseries d = delta(prec);
    if (w % 6 == 0) {
        const long v = w - 12;
        return rat(-make_rat((v + 6) * (v + 12), 432 * (v + 7) * (v + 11))) *
               (e6 * cached(v + 6, R, prec) - d * cached(v, R, prec));
    }
    const long v = w - 14;
    return rat(-make_rat((v + 6) * (v + 12), 432 * (v + 5) * (v + 13))) *
           (e6 * cached(v + 8, R, prec) - d * cached(v + 2, R, prec));
}

} // namespace detail

inline extremal_form extremal(long w, long prec, extremal_route route = extremal_route::diff_recursion)
{
    detail::check_extremal_weight(w);
    if (prec < 1) {
        throw insufficient_precision("extremal form needs precision >= 1");
    }
    return {w, detail::cached(w, route, prec), w == 0 || w == 4 ? 0 : 1};
}

inline qseries extremal_series(long w, long prec, extremal_route route = extremal_route::diff_recursion)
{
    return extremal(w, prec, route).series;
}

// E4^a E6^b with 4a + 6b = w
inline std::vector<qseries> modular_basis(long w, long prec)
{
    std::vector<qseries> out;
    if (w < 0 || w % 2 != 0) {
        return out;
    }
    const qseries e4 = eisenstein_series(4, prec), e6 = eisenstein_series(6, prec);
    for (long b = 0; 6 * b <= w; ++b) {
        if ((w - 6 * b) % 4 == 0) {
            out.push_back(e4.pow((w - 6 * b) / 4) * e6.pow(b));
        }
    }
    return out;
}

struct depth_decomposition
{
    qseries f1;
    qseries f0;
    std::vector<rat> f1_coords;
    std::vector<rat> f0_coords;
};

// f = E2 f1 + f0 with f1 in M_{w-2}, f0 in M_w; throws when f is not of depth <= 1.
inline depth_decomposition decompose_depth1(const qseries &f, long w)
{
    const long prec = f.precision();
    const std::vector<qseries> b1 = modular_basis(w - 2, prec), b0 = modular_basis(w, prec);
    const qseries e2 = eisenstein_series(2, prec);
    std::vector<qseries> cols;
    for (const auto &b : b1) {
        cols.push_back(e2 * b);
    }
    cols.insert(cols.end(), b0.begin(), b0.end());
    if (static_cast<long>(cols.size()) > prec) {
        throw insufficient_precision("too few coefficients to decompose");
    }
    matrix a(static_cast<std::size_t>(prec), std::vector<rat>(cols.size()));
    std::vector<rat> rhs(static_cast<std::size_t>(prec));
    for (long e = 0; e < prec; ++e) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            a[static_cast<std::size_t>(e)][c] = cols[c].coeff(e);
        }
        rhs[static_cast<std::size_t>(e)] = f.coeff(e);
    }
    const auto sol = solve(a, rhs);
    if (!sol) {
        throw domain_error("series is not a quasimodular form of depth <= 1 and weight " + std::to_string(w));
    }
    depth_decomposition d{qseries::zero("q", prec), qseries::zero("q", prec), {}, {}};
    for (std::size_t i = 0; i < b1.size(); ++i) {
        d.f1_coords.push_back((*sol)[i]);
        d.f1 = d.f1 + (*sol)[i] * b1[i];
    }
    for (std::size_t i = 0; i < b0.size(); ++i) {
        d.f0_coords.push_back((*sol)[b1.size() + i]);
        d.f0 = d.f0 + (*sol)[b1.size() + i] * b0[i];
    }
    return d;
}

// L_w = partial^2_{w-1} - (w^2-1)/144 E4
inline qseries op_L(const qseries &f, long w)
{
    return serre_derivative(f, rat(w - 1), 2) - make_rat(w * w - 1, 144) * (eisenstein_series(4, f.precision()) * f);
}

inline qseries op_K_up(const qseries &f, long w)
{
    return detail::k_up(f, w);
}

// K_{w,2}^up = E4 partial_{w+1} - (w-1)/12 E6
inline qseries op_K_up2(const qseries &f, long w)
{
    return eisenstein_series(4, f.precision()) * serre_derivative(f, rat(w + 1)) -
           make_rat(w - 1, 12) * (eisenstein_series(6, f.precision()) * f);
}

// L_{w,2} = E4 partial^2_{w+1} + E6/3 partial_{w+1} - (w^2-1)/144 E4^2
inline qseries op_L2(const qseries &f, long w)
{
    const long p = f.precision();
    const qseries e4 = eisenstein_series(4, p), e6 = eisenstein_series(6, p);
    return e4 * serre_derivative(f, rat(w + 1), 2) + (e6 * serre_derivative(f, rat(w + 1))) / rat(3) -
           make_rat(w * w - 1, 144) * (e4 * e4 * f);
}

enum class operator_identity
{
    Lw_annihilates,
    Kupup,
    partialKup,
    Lw2
};

namespace detail
{

// Random element of E2 M_{w-2} + M_w with small integer coordinates.
inline qseries random_quasimodular(long w, long prec, std::mt19937 &rng)
{
    std::uniform_int_distribution<long> coef(-9, 9);
    qseries s = qseries::zero("q", prec);
    const qseries e2 = eisenstein_series(2, prec);
    for (const auto &b : modular_basis(w - 2, prec)) {
        s = s + rat(coef(rng)) * (e2 * b);
    }
    for (const auto &b : modular_basis(w, prec)) {
        s = s + rat(coef(rng)) * b;
    }
    return s;
}

} // namespace detail

inline report operator_identity_check(operator_identity which, const std::vector<long> &w_list, long prec = 24,
                                      unsigned seed = 12)
{
    report rep;
    std::mt19937 rng(seed);
    auto check = [&](const std::string &id, const qseries &l, const qseries &r) {
        const bool ok = agrees(l, r, prec);
        rep.add(id, ok, ok ? std::string() : "sides differ", prec);
    };
    const qseries e4 = eisenstein_series(4, prec), e6 = eisenstein_series(6, prec), d = delta(prec);
    for (long w : w_list) {
        if (w % 6 != 0 || w < 0) {
            throw unsupported_weight("operator identities are stated for w = 0 mod 6");
        }
        const std::string s = "(w=" + std::to_string(w) + ")";
        const qseries g = extremal_series(w, prec);
        const qseries r = detail::random_quasimodular(w, prec, rng);
        switch (which) {
        case operator_identity::Lw_annihilates:
            rep.suite = "Lw_annihilates";
            check("L_w(G_w)" + s, op_L(g, w), qseries::zero("q", prec));
            break;
        case operator_identity::Kupup: {
            rep.suite = "Kupup";
            auto rhs = [&](const qseries &f) {
                return e4 * e4 * op_L(f, w) - make_rat(w + 6, 6) * (e6 * op_K_up(f, w)) +
                       rat(12 * (w + 1) * (w + 5)) * (d * f);
            };
            check("Kupup on G_w" + s, op_K_up(op_K_up(g, w), w + 6), rhs(g));
            check("Kupup on random" + s, op_K_up(op_K_up(r, w), w + 6), rhs(r));
            break;
        }
        case operator_identity::partialKup: {
            rep.suite = "partialKup";
            auto rhs = [&](const qseries &f) {
                return make_rat(-6, w - 1) * (e4 * op_L(f, w)) +
                       make_rat(w + 5, w - 1) * op_K_up2(serre_derivative(f, rat(w - 1)), w);
            };
            check("partialKup on G_w" + s, serre_derivative(op_K_up(g, w), rat(w + 5)), rhs(g));
            check("partialKup on random" + s, serre_derivative(op_K_up(r, w), rat(w + 5)), rhs(r));
            check("G_{w+8} from K_{w,2}" + s, extremal_series(w + 8, prec),
                  make_rat(w + 6, 72 * (w - 1) * (w + 7)) * op_K_up2(extremal_series(w + 2, prec), w));
            break;
        }
        case operator_identity::Lw2: {
            rep.suite = "Lw2";
            check("L_{w,2}(G_{w+2})" + s, op_L2(extremal_series(w + 2, prec), w), qseries::zero("q", prec));
            auto rhs = [&](const qseries &f) {
                const qseries l = op_L(f, w);
                return e4 * serre_derivative(l, rat(w + 3)) + (e6 * l) / rat(3);
            };
            check("L_{w,2} o partial on random" + s, op_L2(serre_derivative(r, rat(w - 1)), w), rhs(r));
            break;
        }
        }
    }
    return rep;
}

// Two-step and four-step linear recursions for w = 0 mod 6.
inline report linear_recursion_check(const std::vector<long> &w_list, long prec = 24)
{
    report rep;
    rep.suite = "linear_recursions";
    const qseries e4 = eisenstein_series(4, prec), e6 = eisenstein_series(6, prec), d = delta(prec);
    auto G = [&](long w) { return extremal_series(w, prec, extremal_route::diff_recursion); };
    auto check = [&](const std::string &id, const qseries &l, const qseries &r) {
        const bool ok = agrees(l, r, prec);
        rep.add(id, ok, ok ? std::string() : "sides differ", prec);
    };
    for (long w : w_list) {
        if (w % 6 != 0 || w < 0) {
            throw unsupported_weight("linear recursions are stated for w = 0 mod 6");
        }
        const std::string s = "(w=" + std::to_string(w) + ")";
        check("linrecGw" + s, G(w + 12),
              rat(-make_rat((w + 6) * (w + 12), 432 * (w + 7) * (w + 11))) * (e6 * G(w + 6) - d * G(w)));
        check("linrecGw+2" + s, G(w + 14),
              rat(-make_rat((w + 6) * (w + 12), 432 * (w + 5) * (w + 13))) * (e6 * G(w + 8) - d * G(w + 2)));
        const rat c24 = rat((w + 12) * (w + 18) * (w + 18) * (w + 24)) /
                        rat(256 * 729 * (w + 13) * (w + 17) * (w + 19) * (w + 23));
        const rat c26 = rat((w + 12) * (w + 18) * (w + 18) * (w + 24)) /
                        rat(256 * 729 * (w + 11) * (w + 17) * (w + 19) * (w + 25));
        const qseries e43 = e4.pow(3L), d2 = d * d;
        check("linrecG24120" + s, G(w + 24),
              c24 * ((e43 - rat(make_rat(864 * (w * w + 24 * w + 103), (w + 6) * (w + 18))) * d) * G(w + 12) -
                     d2 * G(w)));
        check("linrecG26142" + s, G(w + 26),
              c26 * ((e43 - rat(make_rat(864 * (w * w + 24 * w + 115), (w + 6) * (w + 18))) * d) * G(w + 14) -
                     d2 * G(w + 2)));
    }
    return rep;
}

} // namespace atkin

#endif
