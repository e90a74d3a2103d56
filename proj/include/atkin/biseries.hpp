#ifndef ATKIN_BISERIES_HPP
#define ATKIN_BISERIES_HPP

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <atkin/errors.hpp>
#include <atkin/series.hpp>

namespace atkin
{

// Series in an outer variable whose coefficients are truncated series in an
// inner variable:  sum_{a=val}^{prec-1} c_a(inner) outer^a + O(outer^prec),
// every c_a known to O(inner^inner_prec).
class biseries
{
public:
    biseries(std::string outer, std::string inner, long val, long prec, long inner_prec)
        : outer_(std::move(outer)), inner_(std::move(inner)), val_(val), prec_(prec), inner_prec_(inner_prec)
    {
        if (prec_ <= val_) {
            throw domain_error("outer precision must exceed outer valuation");
        }
        c_.assign(static_cast<std::size_t>(prec_ - val_), qseries::zero(inner_, inner_prec_));
    }

    // f(outer) g(inner)
    static biseries from_product(const qseries &f, const qseries &g)
    {
        biseries r(f.variable(), g.variable(), f.valuation(), f.precision(), g.precision());
        for (long a = f.valuation(); a < f.precision(); ++a) {
            r.c_[static_cast<std::size_t>(a - r.val_)] = f.coeff(a) * g;
        }
        return r;
    }

    // The series f(outer) with coefficients constant in inner.
    static biseries from_outer(const qseries &f, const std::string &inner, long inner_prec)
    {
        return from_product(f, qseries::one(inner, inner_prec));
    }

    // f(inner) placed at outer^0.
    static biseries from_inner(const std::string &outer, long outer_prec, const qseries &g)
    {
        return from_product(qseries::one(outer, outer_prec), g);
    }

    const std::string &outer_variable() const { return outer_; }
    const std::string &inner_variable() const { return inner_; }
    long valuation() const { return val_; }
    long precision() const { return prec_; }
    long inner_precision() const { return inner_prec_; }

    qseries coeff(long a) const
    {
        if (a >= prec_) {
            throw insufficient_precision("outer coefficient " + std::to_string(a) + " beyond O(" + outer_ + "^" +
                                         std::to_string(prec_) + ")");
        }
        if (a < val_) {
            return qseries::zero(inner_, inner_prec_);
        }
        return c_[static_cast<std::size_t>(a - val_)];
    }

    rat coeff(long a, long b) const { return coeff(a).coeff(b); }

    void set(long a, const qseries &s)
    {
        if (a < val_ || a >= prec_) {
            throw insufficient_precision("outer slot out of range");
        }
        if (s.variable() != inner_) {
            throw domain_error("inner variable mismatch");
        }
        c_[static_cast<std::size_t>(a - val_)] = s.truncated(inner_prec_);
    }

    biseries truncated(long prec, long inner_prec) const
    {
        if (prec > prec_ || inner_prec > inner_prec_) {
            throw insufficient_precision("cannot extend a two-variable series");
        }
        biseries r(outer_, inner_, std::min(val_, prec - 1), prec, inner_prec);
        for (long a = std::max(val_, r.val_); a < prec; ++a) {
            r.c_[static_cast<std::size_t>(a - r.val_)] = coeff(a).truncated(inner_prec);
        }
        return r;
    }

    friend biseries operator+(const biseries &x, const biseries &y) { return add_sub(x, y, false); }
    friend biseries operator-(const biseries &x, const biseries &y) { return add_sub(x, y, true); }

    friend biseries operator*(const rat &s, const biseries &x)
    {
        biseries r = x;
        for (auto &c : r.c_) {
            c = s * c;
        }
        return r;
    }

    friend biseries operator*(const biseries &x, const biseries &y)
    {
        check(x, y);
        const long val = x.val_ + y.val_;
        const long prec = std::min(x.prec_ + y.val_, y.prec_ + x.val_);
        std::vector<qseries> out;
        long iprec = std::min(x.inner_prec_, y.inner_prec_);
        for (long a = val; a < prec; ++a) {
            qseries acc = qseries::zero(x.inner_, iprec);
            for (long i = x.val_; i <= a - y.val_; ++i) {
                const qseries &u = x.c_[static_cast<std::size_t>(i - x.val_)];
                const qseries &v = y.c_[static_cast<std::size_t>(a - i - y.val_)];
                if (u.is_zero() || v.is_zero()) {
                    continue;
                }
                acc = acc + u * v;
            }
            out.push_back(std::move(acc));
        }
        return assemble(x.outer_, x.inner_, val, std::move(out));
    }

    // Inverse when the outer^0 coefficient is a unit inner series and val >= 0.
    biseries inverse_unit() const
    {
        if (val_ < 0) {
            throw domain_error("unit inverse needs a power series in the outer variable");
        }
        const qseries g0 = coeff(0).inverse();
        std::vector<qseries> g;
        g.push_back(g0.truncated(std::min(g0.precision(), inner_prec_)));
        for (long m = 1; m < prec_; ++m) {
            qseries s = qseries::zero(inner_, inner_prec_);
            for (long k = 1; k <= m; ++k) {
                const qseries fk = coeff(k);
                if (!fk.is_zero()) {
                    s = s + fk * g[static_cast<std::size_t>(m - k)];
                }
            }
            g.push_back(-(s * g0));
        }
        return assemble(outer_, inner_, 0, std::move(g));
    }

    friend biseries operator/(const biseries &x, const biseries &y) { return x * y.inverse_unit(); }

    // exp for a series with positive outer valuation.
    biseries exp() const
    {
        for (long a = val_; a < std::min(prec_, 1L); ++a) {
            if (!coeff(a).is_zero()) {
                throw domain_error("exp needs positive outer valuation");
            }
        }
        std::vector<qseries> g;
        g.push_back(qseries::one(inner_, inner_prec_));
        for (long m = 1; m < prec_; ++m) {
            qseries s = qseries::zero(inner_, inner_prec_);
            for (long k = 1; k <= m; ++k) {
                const qseries fk = coeff(k);
                if (!fk.is_zero()) {
                    s = s + rat(k) * (fk * g[static_cast<std::size_t>(m - k)]);
                }
            }
            g.push_back(s / rat(m));
        }
        return assemble(outer_, inner_, 0, std::move(g));
    }

    // Exchange the roles of the two variables.
    biseries transposed() const
    {
        long lo = inner_prec_ - 1;
        for (const auto &c : c_) {
            lo = std::min(lo, c.true_valuation());
        }
        biseries r(inner_, outer_, lo, inner_prec_, prec_);
        for (long b = lo; b < inner_prec_; ++b) {
            std::vector<rat> col(static_cast<std::size_t>(prec_ - val_));
            for (long a = val_; a < prec_; ++a) {
                col[static_cast<std::size_t>(a - val_)] = c_[static_cast<std::size_t>(a - val_)].coeff(b);
            }
            r.c_[static_cast<std::size_t>(b - lo)] = qseries(outer_, val_, prec_, std::move(col));
        }
        return r;
    }

    // Q with F = (outer - inner) Q, for F a power series in both variables.
    // Q_{a,b} = sum_{i=0}^{b} F_{a+1+i, b-i}; the result is known for a + b + 1 < prec,
    // kept on the rectangle a < prec - out_inner, b < out_inner.
    biseries divide_by_difference(long out_inner) const
    {
        if (val_ < 0) {
            throw domain_error("division by the variable difference needs a power series");
        }
        for (const auto &c : c_) {
            if (c.true_valuation() < 0) {
                throw domain_error("division by the variable difference needs a power series");
            }
        }
        if (out_inner > inner_prec_ || out_inner < 1) {
            throw insufficient_precision("inner precision of the quotient exceeds the dividend's");
        }
        const long ip = out_inner;
        const long op = prec_ - ip;
        if (op <= 0) {
            throw insufficient_precision("outer precision too small to divide by the variable difference");
        }
        // Vanishing on the diagonal: sum_{a+b=n} F_{a,b} = 0 for every n below the known total degree.
        for (long n = 0; n < std::min(prec_, inner_prec_); ++n) {
            rat s = 0;
            for (long a = 0; a <= n; ++a) {
                s += coeff(a, n - a);
            }
            if (s != 0) {
                throw nonzero_remainder("series does not vanish on the diagonal at total degree " + std::to_string(n));
            }
        }
        biseries r(outer_, inner_, 0, op, ip);
        for (long a = 0; a < op; ++a) {
            std::vector<rat> col(static_cast<std::size_t>(ip));
            for (long b = 0; b < ip; ++b) {
                rat s = 0;
                for (long i = 0; i <= b; ++i) {
                    s += coeff(a + 1 + i, b - i);
                }
                col[static_cast<std::size_t>(b)] = std::move(s);
            }
            r.c_[static_cast<std::size_t>(a)] = qseries(inner_, 0, ip, std::move(col));
        }
        return r;
    }

    friend bool agrees(const biseries &x, const biseries &y, long upto_outer, long upto_inner)
    {
        if (x.outer_ != y.outer_ || x.inner_ != y.inner_) {
            throw domain_error("variable mismatch in two-variable comparison");
        }
        if (x.prec_ < upto_outer || y.prec_ < upto_outer || x.inner_prec_ < upto_inner || y.inner_prec_ < upto_inner) {
            throw insufficient_precision("two-variable comparison beyond stored precision");
        }
        const long lo = std::min(x.val_, y.val_);
        for (long a = lo; a < upto_outer; ++a) {
            if (!agrees(x.coeff(a), y.coeff(a), upto_inner)) {
                return false;
            }
        }
        return true;
    }

    std::string to_text(long upto_outer, long upto_inner) const
    {
        std::string out;
        for (long a = val_; a < std::min(prec_, upto_outer); ++a) {
            const qseries c = coeff(a).truncated(std::min(upto_inner, inner_prec_));
            if (c.is_zero()) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c.to_text() + ")*" + outer_ + "^" + std::to_string(a);
        }
        return out.empty() ? "0" : out;
    }

private:
    static void check(const biseries &x, const biseries &y)
    {
        if (x.outer_ != y.outer_ || x.inner_ != y.inner_) {
            throw domain_error("variable mismatch in two-variable arithmetic");
        }
    }

    // Bring every coefficient to the smallest inner precision among them.
    static biseries assemble(const std::string &outer, const std::string &inner, long val, std::vector<qseries> cs)
    {
        long ip = std::numeric_limits<long>::max();
        for (const auto &c : cs) {
            ip = std::min(ip, c.precision());
        }
        biseries r(outer, inner, val, val + static_cast<long>(cs.size()), ip);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            r.c_[i] = cs[i].truncated(ip);
        }
        return r;
    }

    static biseries add_sub(const biseries &x, const biseries &y, bool subtract)
    {
        check(x, y);
        const long prec = std::min(x.prec_, y.prec_);
        const long val = std::min(std::min(x.val_, y.val_), prec - 1);
        std::vector<qseries> out;
        for (long a = val; a < prec; ++a) {
            const qseries u = x.coeff(a), v = y.coeff(a);
            out.push_back(subtract ? u - v : u + v);
        }
        return assemble(x.outer_, x.inner_, val, std::move(out));
    }

    std::string outer_, inner_;
    long val_, prec_, inner_prec_;
    std::vector<qseries> c_;
};

} // namespace atkin

#endif
