#ifndef ATKIN_HYPERGEOM_HPP
#define ATKIN_HYPERGEOM_HPP

#include <string>
#include <utility>
#include <vector>

#include <atkin/errors.hpp>
#include <atkin/poly.hpp>
#include <atkin/rational.hpp>
#include <atkin/series.hpp>

namespace atkin
{

struct hyp_params
{
    std::vector<rat> upper;
    std::vector<rat> lower;
};

inline bool is_nonpositive_integer(const rat &x)
{
    return is_integer(x) && sgn(x) <= 0;
}

inline void validate(const hyp_params &h)
{
    if (h.upper.size() != h.lower.size() + 1) {
        throw invalid_params("expected one more upper than lower parameter, got " + std::to_string(h.upper.size()) + " and " +
                             std::to_string(h.lower.size()));
    }
    for (const auto &b : h.lower) {
        if (is_nonpositive_integer(b)) {
            throw invalid_params("lower parameter " + to_string(b) + " is a nonpositive integer");
        }
    }
}

// sum prod (a_i)_n / prod (b_j)_n z^n / n!  to O(z^prec)
inline qseries pfq_series(const hyp_params &h, long prec, const std::string &var = "z")
{
    validate(h);
    if (prec < 1) {
        throw insufficient_precision("hypergeometric series needs precision >= 1");
    }
    std::vector<rat> c(static_cast<std::size_t>(prec));
    rat term = 1;
    c[0] = term;
    for (long n = 0; n + 1 < prec; ++n) {
        for (const auto &a : h.upper) {
            term *= a + n;
        }
        for (const auto &b : h.lower) {
            term /= b + n;
        }
        term /= n + 1;
        c[static_cast<std::size_t>(n + 1)] = term;
    }
    return qseries(var, 0, prec, std::move(c));
}

inline qseries hyp2f1(const rat &a, const rat &b, const rat &c, long prec, const std::string &var = "z")
{
    return pfq_series({{a, b}, {c}}, prec, var);
}

// Logarithmic companion with lower parameter 1:
// sum_{n>=1} (a)_n (b)_n / n!^2 [sum_{k<n} 1/(a+k) + 1/(b+k) - 2/(1+k)] z^n
inline qseries g21_series(const rat &a, const rat &b, long prec, const std::string &var = "z")
{
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        throw invalid_params("upper parameters of the logarithmic series must avoid nonpositive integers");
    }
    if (prec < 1) {
        throw insufficient_precision("hypergeometric series needs precision >= 1");
    }
    std::vector<rat> c(static_cast<std::size_t>(prec));
    rat term = 1, h = 0;
    for (long n = 1; n < prec; ++n) {
        const long k = n - 1;
        term *= (a + k) * (b + k);
        term /= rat(n) * n;
        h += rat(1) / (a + k) + rat(1) / (b + k) - make_rat(2, k + 1);
        c[static_cast<std::size_t>(n)] = term * h;
    }
    return qseries(var, 0, prec, std::move(c));
}

// Theta = z d/dz
inline qseries theta(const qseries &f)
{
    return f.d_operator();
}

// Residual of {Theta^2 - z(Theta+a)(Theta+b)} applied to G + log(z) F, where F = 2F1(a,b;1;z)
// and G its logarithmic companion; the log(z) part cancels because F is a solution.
inline qseries log_solution_residual(const rat &a, const rat &b, long prec)
{
    const qseries f = hyp2f1(a, b, 1, prec), g = g21_series(a, b, prec);
    auto op = [&](const qseries &y) {
        const qseries ty = theta(y);
        const qseries inner = theta(ty) + (a + b) * ty + (a * b) * y;
        return theta(ty) - inner.shift(1).truncated(prec);
    };
    const qseries tf = theta(f);
    const qseries extra = rat(2) * tf - (rat(2) * tf + (a + b) * f).shift(1).truncated(prec);
    return op(g) + extra;
}

inline qseries hyp_operator_residual(const hyp_params &h, long prec)
{
    const qseries f = pfq_series(h, prec);
    qseries left = theta(f);
    for (const auto &b : h.lower) {
        left = theta(left) + (b - 1) * left;
    }
    qseries right = f;
    for (const auto &a : h.upper) {
        right = theta(right) + a * right;
    }
    return left - right.shift(1).truncated(prec);
}

// 2F1(a,b;c;z) == (1-z)^{c-a-b} 2F1(c-a,c-b;c;z)
inline bool euler_transform_holds(const rat &a, const rat &b, const rat &c, long prec)
{
    const qseries lhs = hyp2f1(a, b, c, prec);
    const qseries one_minus_z = series_from_ints("z", 0, {1, -1}, prec);
    const qseries rhs = one_minus_z.pow(rat(c - a - b)) * hyp2f1(c - a, c - b, c, prec);
    return agrees(lhs, rhs, prec);
}

enum class alpha_beta_kind
{
    alpha0,
    alpha1,
    beta
};

// Polynomial part of X^n 2F1(1/12,5/12;1;1728/X), of X^{n-1}(X-1728) 2F1(7/12,11/12;1;1728/X),
// or of X^n 2F1(-1/12,7/12;1;1728/X). Computed in u = 1/X.
inline poly alpha_beta_poly(long n, alpha_beta_kind which)
{
    if (n < 0) {
        throw domain_error("degree must be nonnegative");
    }
    const long prec = n + 1;
    qseries h;
    switch (which) {
    case alpha_beta_kind::alpha0:
        h = hyp2f1(rat(1, 12), rat(5, 12), 1, prec, "u").scale_variable(1728);
        break;
    case alpha_beta_kind::alpha1:
        h = series_from_ints("u", 0, {1, -1728}, prec) *
            hyp2f1(rat(7, 12), rat(11, 12), 1, prec, "u").scale_variable(1728);
        break;
    case alpha_beta_kind::beta:
        h = hyp2f1(rat(-1, 12), rat(7, 12), 1, prec, "u").scale_variable(1728);
        break;
    }
    std::vector<rat> c(static_cast<std::size_t>(n + 1));
    for (long i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(n - i)] = h.coeff(i);
    }
    return poly(std::move(c));
}

} // namespace atkin

#endif
