#ifndef ATKIN_SERIES_HPP
#define ATKIN_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <atkin/errors.hpp>
#include <atkin/rational.hpp>

namespace atkin
{

namespace detail
{

constexpr std::size_t karatsuba_threshold = 64;

inline void mul_school(const rat *a, std::size_t na, const rat *b, std::size_t nb, rat *out, std::size_t n)
{
    rat t;
    for (std::size_t i = 0; i < na && i < n; ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        const std::size_t lim = std::min(nb, n - i);
        for (std::size_t j = 0; j < lim; ++j) {
            if (sgn(b[j]) == 0) {
                continue;
            }
            t = a[i] * b[j];
            out[i + j] += t;
        }
    }
}

// Full product of a (length na) and b (length nb) added into out (length >= na + nb - 1).
inline void mul_karatsuba(const rat *a, std::size_t na, const rat *b, std::size_t nb, rat *out)
{
    if (na == 0 || nb == 0) {
        return;
    }
    if (std::min(na, nb) <= karatsuba_threshold) {
        mul_school(a, na, b, nb, out, na + nb - 1);
        return;
    }
    const std::size_t h = std::max(na, nb) / 2;
    if (na <= h || nb <= h) {
        // Unbalanced: split the longer operand only.
        if (na < nb) {
            std::swap(a, b);
            std::swap(na, nb);
        }
        for (std::size_t off = 0; off < na; off += nb) {
            const std::size_t len = std::min(nb, na - off);
            mul_karatsuba(a + off, len, b, nb, out + off);
        }
        return;
    }
    const std::size_t a1n = na - h;
    const std::size_t b1n = nb - h;
    std::vector<rat> z0(2 * h - 1), z2(a1n + b1n - 1);
    mul_karatsuba(a, h, b, h, z0.data());
    mul_karatsuba(a + h, a1n, b + h, b1n, z2.data());
    const std::size_t sa = std::max(h, a1n), sb = std::max(h, b1n);
    std::vector<rat> as(sa), bs(sb);
    for (std::size_t i = 0; i < h; ++i) {
        as[i] = a[i];
        bs[i] = b[i];
    }
    for (std::size_t i = 0; i < a1n; ++i) {
        as[i] += a[h + i];
    }
    for (std::size_t i = 0; i < b1n; ++i) {
        bs[i] += b[h + i];
    }
    std::vector<rat> z1(sa + sb - 1);
    mul_karatsuba(as.data(), sa, bs.data(), sb, z1.data());
    for (std::size_t i = 0; i < z0.size(); ++i) {
        z1[i] -= z0[i];
        out[i] += z0[i];
    }
    for (std::size_t i = 0; i < z2.size(); ++i) {
        z1[i] -= z2[i];
        out[2 * h + i] += z2[i];
    }
    for (std::size_t i = 0; i < z1.size(); ++i) {
        if (sgn(z1[i]) != 0) {
            out[h + i] += z1[i];
        }
    }
}

// First n coefficients of the product of two dense coefficient vectors.
inline std::vector<rat> mul_trunc(const std::vector<rat> &a, const std::vector<rat> &b, std::size_t n)
{
    std::vector<rat> out(n);
    const std::size_t na = std::min(a.size(), n), nb = std::min(b.size(), n);
    if (na == 0 || nb == 0 || n == 0) {
        return out;
    }
    if (std::min(na, nb) <= karatsuba_threshold) {
        mul_school(a.data(), na, b.data(), nb, out.data(), n);
        return out;
    }
    std::vector<rat> full(na + nb - 1);
    mul_karatsuba(a.data(), na, b.data(), nb, full.data());
    for (std::size_t i = 0; i < n && i < full.size(); ++i) {
        out[i] = std::move(full[i]);
    }
    return out;
}

} // namespace detail

// Truncated Laurent series  sum_{e=val}^{prec-1} c_e var^e + O(var^prec).
class qseries
{
public:
    qseries() : var_("q"), val_(0), prec_(1), c_(1) {}

    qseries(std::string var, long val, std::vector<rat> coeffs)
        : var_(std::move(var)), val_(val), prec_(val + static_cast<long>(coeffs.size())), c_(std::move(coeffs))
    {
        if (c_.empty()) {
            throw domain_error("series needs at least one stored coefficient");
        }
    }

    // Coefficients beyond the supplied list up to prec are zero.
    qseries(std::string var, long val, long prec, std::vector<rat> coeffs)
        : var_(std::move(var)), val_(val), prec_(prec), c_(std::move(coeffs))
    {
        if (prec_ <= val_) {
            throw domain_error("precision must exceed valuation");
        }
        if (static_cast<long>(c_.size()) > prec_ - val_) {
            c_.resize(static_cast<std::size_t>(prec_ - val_));
        }
        c_.resize(static_cast<std::size_t>(prec_ - val_));
    }

    static qseries zero(const std::string &var, long prec, long val = 0)
    {
        if (val >= prec) {
            val = prec - 1;
        }
        return qseries(var, val, prec, {});
    }

    static qseries constant(const std::string &var, const rat &c, long prec)
    {
        if (prec <= 0) {
            return zero(var, prec, prec - 1);
        }
        return qseries(var, 0, prec, {c});
    }

    static qseries one(const std::string &var, long prec) { return constant(var, rat(1), prec); }

    static qseries monomial(const std::string &var, long e, const rat &c, long prec)
    {
        if (e >= prec) {
            return zero(var, prec);
        }
        return qseries(var, e, prec, {c});
    }

    const std::string &variable() const { return var_; }
    long valuation() const { return val_; }
    long precision() const { return prec_; }
    const std::vector<rat> &coeffs() const { return c_; }

    const rat &coeff(long e) const
    {
        static const rat zero_value(0);
        if (e >= prec_) {
            throw insufficient_precision("coefficient of " + var_ + "^" + std::to_string(e) + " requested, series known to O(" +
                                         var_ + "^" + std::to_string(prec_) + ")");
        }
        if (e < val_) {
            return zero_value;
        }
        return c_[static_cast<std::size_t>(e - val_)];
    }

    rat &coeff_ref(long e)
    {
        if (e < val_ || e >= prec_) {
            throw insufficient_precision("coefficient slot out of range");
        }
        return c_[static_cast<std::size_t>(e - val_)];
    }

    // First exponent with a nonzero coefficient; prec if none is stored.
    long true_valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (sgn(c_[i]) != 0) {
                return val_ + static_cast<long>(i);
            }
        }
        return prec_;
    }

    bool is_zero() const { return true_valuation() == prec_; }

    qseries normalized() const
    {
        const long tv = true_valuation();
        if (tv == prec_) {
            return zero(var_, prec_, prec_ - 1);
        }
        return qseries(var_, tv, prec_, std::vector<rat>(c_.begin() + (tv - val_), c_.end()));
    }

    // Re-store with the given lower bound (may pad with zeros or drop zero leading terms).
    qseries with_valuation(long v) const
    {
        if (v >= prec_) {
            v = prec_ - 1;
        }
        if (v > val_ && true_valuation() < v) {
            throw domain_error("cannot raise stored valuation above a nonzero coefficient");
        }
        std::vector<rat> out(static_cast<std::size_t>(prec_ - v));
        for (long e = std::max(v, val_); e < prec_; ++e) {
            out[static_cast<std::size_t>(e - v)] = c_[static_cast<std::size_t>(e - val_)];
        }
        return qseries(var_, v, prec_, std::move(out));
    }

    qseries truncated(long new_prec) const
    {
        if (new_prec > prec_) {
            throw insufficient_precision("cannot extend " + var_ + "-series from O(" + var_ + "^" + std::to_string(prec_) +
                                         ") to O(" + var_ + "^" + std::to_string(new_prec) + ")");
        }
        if (new_prec <= val_) {
            return zero(var_, new_prec, new_prec - 1);
        }
        return qseries(var_, val_, new_prec, std::vector<rat>(c_.begin(), c_.begin() + (new_prec - val_)));
    }

    qseries with_variable(const std::string &var) const
    {
        qseries r = *this;
        r.var_ = var;
        return r;
    }

    qseries operator-() const
    {
        qseries r = *this;
        for (auto &x : r.c_) {
            x = -x;
        }
        return r;
    }

    friend qseries operator+(const qseries &a, const qseries &b) { return add_sub(a, b, false); }
    friend qseries operator-(const qseries &a, const qseries &b) { return add_sub(a, b, true); }

    friend qseries operator*(const qseries &a, const qseries &b)
    {
        check_var(a, b);
        const long ta = a.true_valuation(), tb = b.true_valuation();
        const long prec = std::min(a.prec_ + tb, b.prec_ + ta);
        if (ta == a.prec_ || tb == b.prec_) {
            return zero(a.var_, prec, std::min(a.val_ + b.val_, prec - 1));
        }
        const long val = ta + tb;
        const std::size_t n = static_cast<std::size_t>(prec - val);
        std::vector<rat> ca(a.c_.begin() + (ta - a.val_), a.c_.end());
        std::vector<rat> cb(b.c_.begin() + (tb - b.val_), b.c_.end());
        return qseries(a.var_, val, prec, detail::mul_trunc(ca, cb, n));
    }

    friend qseries operator*(const rat &s, const qseries &a)
    {
        qseries r = a;
        for (auto &x : r.c_) {
            x *= s;
        }
        return r;
    }
    friend qseries operator*(const qseries &a, const rat &s) { return s * a; }
    friend qseries operator*(long s, const qseries &a) { return rat(s) * a; }
    friend qseries operator*(const qseries &a, long s) { return rat(s) * a; }
    friend qseries operator/(const qseries &a, const rat &s)
    {
        if (s == 0) {
            throw division_by_zero_series("division by the zero scalar");
        }
        return (rat(1) / s) * a;
    }

    // Adding an exact scalar touches only the constant term.
    friend qseries operator+(const qseries &a, const rat &s)
    {
        if (a.prec_ <= 0) {
            return a;
        }
        qseries r = a.val_ > 0 ? a.with_valuation(0) : a;
        r.coeff_ref(0) += s;
        return r;
    }
    friend qseries operator+(const rat &s, const qseries &a) { return a + s; }
    friend qseries operator-(const qseries &a, const rat &s) { return a + rat(-s); }
    friend qseries operator-(const rat &s, const qseries &a) { return (-a) + s; }

    qseries inverse() const
    {
        const long tv = true_valuation();
        if (tv == prec_) {
            throw division_by_zero_series("inverting a series that vanishes to O(" + var_ + "^" + std::to_string(prec_) + ")");
        }
        const long rel = prec_ - tv;
        const std::size_t n = static_cast<std::size_t>(rel);
        const rat *u = c_.data() + (tv - val_);
        const rat inv0 = rat(1) / u[0];
        std::vector<rat> g(n);
        g[0] = inv0;
        rat s, t;
        for (std::size_t k = 1; k < n; ++k) {
            s = 0;
            for (std::size_t i = 1; i <= k; ++i) {
                if (sgn(u[i]) != 0) {
                    t = u[i] * g[k - i];
                    s += t;
                }
            }
            g[k] = -s * inv0;
        }
        return qseries(var_, -tv, -tv + rel, std::move(g));
    }

    friend qseries operator/(const qseries &a, const qseries &b)
    {
        check_var(a, b);
        return a * b.inverse();
    }

    qseries pow(long n) const
    {
        if (n < 0) {
            return inverse().pow(-n);
        }
        if (n == 0) {
            // f^0 = 1, known to the relative precision of f.
            const long tv = true_valuation();
            return one(var_, tv == prec_ ? 1 : prec_ - tv);
        }
        qseries base = *this;
        std::optional<qseries> result;
        while (n > 0) {
            if (n & 1) {
                result = result ? *result * base : base;
            }
            n >>= 1;
            if (n > 0) {
                base = base * base;
            }
        }
        return *result;
    }

    // f^r for rational r; f = c var^v (1 + ...) with c = 1 and v*r integral.
    qseries pow(const rat &r) const
    {
        if (is_integer(r)) {
            return pow(r.get_num().get_si());
        }
        const long tv = true_valuation();
        if (tv == prec_) {
            throw domain_error("rational power of a series vanishing to precision");
        }
        const rat shift = r * tv;
        if (!is_integer(shift)) {
            throw domain_error("rational power would leave integral exponents");
        }
        const rat *u = c_.data() + (tv - val_);
        if (u[0] != 1) {
            throw domain_error("rational power needs leading coefficient 1");
        }
        const std::size_t n = static_cast<std::size_t>(prec_ - tv);
        std::vector<rat> g(n);
        g[0] = 1;
        rat s, t;
        for (std::size_t m = 1; m < n; ++m) {
            s = 0;
            for (std::size_t k = 1; k <= m; ++k) {
                if (sgn(u[k]) != 0) {
                    t = (r * static_cast<long>(k) - static_cast<long>(m - k)) * u[k] * g[m - k];
                    s += t;
                }
            }
            g[m] = s / static_cast<long>(m);
        }
        const long v = shift.get_num().get_si();
        return qseries(var_, v, v + static_cast<long>(n), std::move(g));
    }

    qseries exp() const
    {
        if (true_valuation() < 1) {
            throw domain_error("exp needs a series without constant or polar terms");
        }
        if (prec_ <= 0) {
            return one(var_, prec_ > 0 ? prec_ : 1);
        }
        const std::size_t n = static_cast<std::size_t>(prec_);
        std::vector<rat> f(n), g(n);
        for (long e = std::max(val_, 1L); e < prec_; ++e) {
            f[static_cast<std::size_t>(e)] = c_[static_cast<std::size_t>(e - val_)];
        }
        g[0] = 1;
        rat s, t;
        for (std::size_t m = 1; m < n; ++m) {
            s = 0;
            for (std::size_t k = 1; k <= m; ++k) {
                if (sgn(f[k]) != 0) {
                    t = static_cast<long>(k) * f[k] * g[m - k];
                    s += t;
                }
            }
            g[m] = s / static_cast<long>(m);
        }
        return qseries(var_, 0, prec_, std::move(g));
    }

    qseries log() const
    {
        if (true_valuation() < 0 || prec_ <= 0 || coeff(0) != 1) {
            throw domain_error("log needs constant term 1");
        }
        const std::size_t n = static_cast<std::size_t>(prec_);
        std::vector<rat> f(n), g(n);
        for (long e = std::max(val_, 0L); e < prec_; ++e) {
            f[static_cast<std::size_t>(e)] = c_[static_cast<std::size_t>(e - val_)];
        }
        // m g_m = m f_m - sum_{k=1}^{m-1} k g_k f_{m-k}
        rat s, t;
        for (std::size_t m = 1; m < n; ++m) {
            s = static_cast<long>(m) * f[m];
            for (std::size_t k = 1; k < m; ++k) {
                if (sgn(f[m - k]) != 0) {
                    t = static_cast<long>(k) * g[k] * f[m - k];
                    s -= t;
                }
            }
            g[m] = s / static_cast<long>(m);
        }
        return qseries(var_, 0, prec_, std::move(g));
    }

    // D = var d/dvar
    qseries d_operator() const
    {
        qseries r = *this;
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] *= val_ + static_cast<long>(i);
        }
        return r;
    }

    // Multiply by var^k.
    qseries shift(long k) const
    {
        qseries r = *this;
        r.val_ += k;
        r.prec_ += k;
        return r;
    }

    // var -> c * var
    qseries scale_variable(const rat &c) const
    {
        qseries r = *this;
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] *= atkin::pow(c, val_ + static_cast<long>(i));
        }
        return r;
    }

    // outer(inner); the variable of the result is that of inner.
    friend qseries compose(const qseries &outer, const qseries &inner)
    {
        const long v = inner.true_valuation();
        if (v <= 0 || v == inner.prec_) {
            throw domain_error("composition needs an inner series of positive valuation");
        }
        const long otv = outer.true_valuation();
        long prec = v * outer.prec_;
        // Error O(inner.prec) of the inner series enters through the derivative of the outer one.
        long kmin = 0;
        for (long e = otv; e < outer.prec_; ++e) {
            if (e != 0 && sgn(outer.coeff(e)) != 0) {
                kmin = e;
                break;
            }
        }
        if (kmin != 0) {
            prec = std::min(prec, inner.prec_ + (kmin - 1) * v);
        }
        const long low = std::min(otv, 0L);
        if (prec <= low * v) {
            throw insufficient_precision("composition leaves no known coefficients");
        }
        qseries base = inner.normalized();
        qseries acc = zero(inner.var_, prec, std::min(low * v, prec - 1));
        // Nonnegative part by Horner.
        if (outer.prec_ > 0) {
            qseries h = zero(inner.var_, prec, 0);
            const long top = std::min(outer.prec_ - 1, (prec - 1) / v);
            for (long e = top; e >= 0; --e) {
                h = h * base;
                h = h.truncated(std::min(h.prec_, prec));
                h = h + outer.coeff(e);
            }
            acc = acc + h.truncated(std::min(h.prec_, prec));
        }
        if (otv < 0) {
            qseries ib = base.inverse();
            qseries p = ib;
            for (long e = -1; e >= otv; --e) {
                const rat &c = outer.coeff(e);
                if (sgn(c) != 0) {
                    acc = acc + c * p;
                }
                if (e > otv) {
                    p = p * ib;
                }
            }
        }
        return acc.truncated(std::min(acc.prec_, prec));
    }

    // Compositional inverse of a series with valuation exactly 1.
    qseries revert() const
    {
        if (true_valuation() != 1) {
            throw domain_error("reversion needs a series with nonzero linear term and no lower terms");
        }
        // g_n = (1/n) [z^{n-1}] (z/f)^n
        const qseries h = shift(-1).inverse();
        const long n_terms = prec_ - 1;
        std::vector<rat> g(static_cast<std::size_t>(n_terms));
        qseries hp = h;
        for (long n = 1; n <= n_terms; ++n) {
            g[static_cast<std::size_t>(n - 1)] = hp.coeff(n - 1) / n;
            if (n < n_terms) {
                hp = hp * h;
            }
        }
        return qseries(var_, 1, prec_, std::move(g));
    }

    qseries borel() const
    {
        if (true_valuation() < 0) {
            throw domain_error("Borel transform needs a power series");
        }
        qseries r = with_valuation(0);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] /= factorial(static_cast<long>(i));
        }
        return r;
    }

    // Sum a_n n! s^{-(n+1)}, stored as a series in s_inv starting at exponent 1.
    qseries laplace() const
    {
        if (true_valuation() < 0) {
            throw domain_error("Laplace transform needs a power series");
        }
        qseries r = with_valuation(0);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] *= factorial(static_cast<long>(i));
        }
        r = r.shift(1);
        r.var_ = "s_inv";
        return r;
    }

    friend bool operator==(const qseries &a, const qseries &b)
    {
        if (a.var_ != b.var_ || a.prec_ != b.prec_) {
            return false;
        }
        const long lo = std::min(a.val_, b.val_);
        for (long e = lo; e < a.prec_; ++e) {
            if (a.coeff(e) != b.coeff(e)) {
                return false;
            }
        }
        return true;
    }
    friend bool operator!=(const qseries &a, const qseries &b) { return !(a == b); }

    std::string to_text(long max_terms = -1) const
    {
        std::string out;
        long shown = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const rat &c = c_[i];
            if (sgn(c) == 0) {
                continue;
            }
            if (max_terms >= 0 && shown >= max_terms) {
                break;
            }
            ++shown;
            const long e = val_ + static_cast<long>(i);
            rat a = abs(c);
            if (out.empty()) {
                out += sgn(c) < 0 ? "-" : "";
            } else {
                out += sgn(c) < 0 ? " - " : " + ";
            }
            const bool unit = a == 1;
            if (e == 0) {
                out += to_string(a);
            } else {
                if (!unit) {
                    out += to_string(a) + "*";
                }
                out += var_;
                if (e != 1) {
                    out += "^" + std::to_string(e);
                }
            }
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "O(" + var_ + (prec_ == 1 ? std::string() : "^" + std::to_string(prec_)) + ")";
        return out;
    }

private:
    static void check_var(const qseries &a, const qseries &b)
    {
        if (a.var_ != b.var_) {
            throw domain_error("mixing series in " + a.var_ + " and " + b.var_);
        }
    }

    static qseries add_sub(const qseries &a, const qseries &b, bool subtract)
    {
        check_var(a, b);
        const long prec = std::min(a.prec_, b.prec_);
        const long val = std::min(std::min(a.val_, b.val_), prec - 1);
        std::vector<rat> out(static_cast<std::size_t>(prec - val));
        for (long e = std::max(a.val_, val); e < prec; ++e) {
            out[static_cast<std::size_t>(e - val)] = a.c_[static_cast<std::size_t>(e - a.val_)];
        }
        for (long e = std::max(b.val_, val); e < prec; ++e) {
            const rat &x = b.c_[static_cast<std::size_t>(e - b.val_)];
            if (subtract) {
                out[static_cast<std::size_t>(e - val)] -= x;
            } else {
                out[static_cast<std::size_t>(e - val)] += x;
            }
        }
        return qseries(a.var_, val, prec, std::move(out));
    }

    std::string var_;
    long val_;
    long prec_;
    std::vector<rat> c_;
};

// True when a and b agree on every exponent below upto; both must be known there.
inline bool agrees(const qseries &a, const qseries &b, long upto)
{
    if (a.precision() < upto || b.precision() < upto) {
        throw insufficient_precision("comparison to O(" + a.variable() + "^" + std::to_string(upto) +
                                     ") beyond stored precision");
    }
    const long lo = std::min(a.valuation(), b.valuation());
    for (long e = lo; e < upto; ++e) {
        if (a.coeff(e) != b.coeff(e)) {
            return false;
        }
    }
    return true;
}

// Agreement on the common known range.
inline bool agrees(const qseries &a, const qseries &b)
{
    return agrees(a, b, std::min(a.precision(), b.precision()));
}

inline qseries series_from_ints(const std::string &var, long val, const std::vector<long> &coeffs, long prec = -1)
{
    std::vector<rat> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) {
        c.emplace_back(x);
    }
    if (prec < 0) {
        return qseries(var, val, std::move(c));
    }
    return qseries(var, val, prec, std::move(c));
}

} // namespace atkin

#endif
