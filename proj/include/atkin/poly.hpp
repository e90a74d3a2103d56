#ifndef ATKIN_POLY_HPP
#define ATKIN_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include <atkin/errors.hpp>
#include <atkin/rational.hpp>
#include <atkin/series.hpp>

namespace atkin
{

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class poly
{
public:
    poly() = default;
    explicit poly(std::vector<rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    poly(std::initializer_list<long> coeffs)
    {
        for (long x : coeffs) {
            c_.emplace_back(x);
        }
        trim();
    }

    static poly constant(const rat &c) { return poly(std::vector<rat>{c}); }
    static poly x() { return poly(std::vector<rat>{rat(0), rat(1)}); }
    static poly monomial(long d, const rat &c = 1)
    {
        std::vector<rat> v(static_cast<std::size_t>(d + 1));
        v.back() = c;
        return poly(std::move(v));
    }
    // X - a
    static poly linear(const rat &a) { return poly(std::vector<rat>{rat(-a), rat(1)}); }

    const std::vector<rat> &coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    rat leading() const { return c_.empty() ? rat(0) : c_.back(); }

    rat coeff(long i) const
    {
        if (i < 0 || i >= static_cast<long>(c_.size())) {
            return 0;
        }
        return c_[static_cast<std::size_t>(i)];
    }

    rat operator()(const rat &x) const
    {
        rat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r = r * x + *it;
        }
        return r;
    }

    // P(s) by Horner; the precision follows series arithmetic.
    qseries operator()(const qseries &s) const
    {
        if (c_.empty()) {
            return qseries::zero(s.variable(), s.precision());
        }
        qseries r = qseries::constant(s.variable(), c_.back(), s.precision() - std::min(0L, s.true_valuation()) * degree());
        for (long i = degree() - 1; i >= 0; --i) {
            r = r * s + c_[static_cast<std::size_t>(i)];
        }
        return r;
    }

    poly operator-() const
    {
        poly r = *this;
        for (auto &x : r.c_) {
            x = -x;
        }
        return r;
    }

    friend poly operator+(const poly &a, const poly &b)
    {
        std::vector<rat> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            out[i] += a.c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            out[i] += b.c_[i];
        }
        return poly(std::move(out));
    }
    friend poly operator-(const poly &a, const poly &b) { return a + (-b); }

    friend poly operator*(const poly &a, const poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        return poly(detail::mul_trunc(a.c_, b.c_, a.c_.size() + b.c_.size() - 1));
    }
    friend poly operator*(const rat &s, const poly &a)
    {
        if (s == 0) {
            return {};
        }
        poly r = a;
        for (auto &x : r.c_) {
            x *= s;
        }
        return r;
    }
    friend poly operator*(const poly &a, const rat &s) { return s * a; }

    poly pow(long n) const
    {
        poly r = constant(1);
        for (long i = 0; i < n; ++i) {
            r = r * *this;
        }
        return r;
    }

    poly derivative() const
    {
        std::vector<rat> out;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            out.push_back(c_[i] * static_cast<long>(i));
        }
        return poly(std::move(out));
    }

    // P(Q(X))
    poly compose(const poly &q) const
    {
        poly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r = r * q + constant(*it);
        }
        return r;
    }

    friend bool operator==(const poly &a, const poly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const poly &a, const poly &b) { return !(a == b); }

    bool has_integer_coeffs() const
    {
        for (const auto &x : c_) {
            if (!is_integer(x)) {
                return false;
            }
        }
        return true;
    }

    // Descending powers, e.g. "X^2 - 1640*X + 269280".
    std::string to_text(const std::string &var = "X") const { return render(var, false); }
    std::string to_latex(const std::string &var = "X") const { return render(var, true); }

private:
    void trim()
    {
        while (!c_.empty() && sgn(c_.back()) == 0) {
            c_.pop_back();
        }
    }

    static std::string latex_rat(const rat &a)
    {
        if (is_integer(a)) {
            return a.get_num().get_str();
        }
        return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    }

    std::string render(const std::string &var, bool latex) const
    {
        if (c_.empty()) {
            return "0";
        }
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const rat &c = c_[static_cast<std::size_t>(i)];
            if (sgn(c) == 0) {
                continue;
            }
            if (out.empty()) {
                out += sgn(c) < 0 ? "-" : "";
            } else {
                out += sgn(c) < 0 ? " - " : " + ";
            }
            const rat a = abs(c);
            const std::string num = latex ? latex_rat(a) : to_string(a);
            if (i == 0) {
                out += num;
                continue;
            }
            if (a != 1) {
                out += num + (latex ? " " : "*");
            }
            out += var;
            if (i > 1) {
                out += latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
            }
        }
        return out;
    }

    std::vector<rat> c_;
};

struct poly_divmod_result
{
    poly quotient;
    poly remainder;
};

inline poly_divmod_result divmod(const poly &a, const poly &b)
{
    if (b.is_zero()) {
        throw domain_error("polynomial division by zero");
    }
    std::vector<rat> r = a.coeffs();
    const long db = b.degree();
    const rat lead = b.leading();
    if (a.degree() < db) {
        return {poly(), a};
    }
    std::vector<rat> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (long i = a.degree(); i >= db; --i) {
        const rat c = r[static_cast<std::size_t>(i)] / lead;
        q[static_cast<std::size_t>(i - db)] = c;
        if (sgn(c) == 0) {
            continue;
        }
        for (long k = 0; k <= db; ++k) {
            r[static_cast<std::size_t>(i - db + k)] -= c * b.coeffs()[static_cast<std::size_t>(k)];
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {poly(std::move(q)), poly(std::move(r))};
}

// Exact quotient; a nonzero remainder is an error.
inline poly exact_div(const poly &a, const poly &b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw nonzero_remainder("polynomial division leaves " + r.to_text());
    }
    return q;
}

} // namespace atkin

#endif
