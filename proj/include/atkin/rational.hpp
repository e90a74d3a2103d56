#ifndef ATKIN_RATIONAL_HPP
#define ATKIN_RATIONAL_HPP

#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <atkin/errors.hpp>

namespace atkin
{

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. gmpxx canonicalizes after every arithmetic operation; only
// construction from an explicit numerator/denominator pair needs care.
using rat = mpq_class;
using integer = mpz_class;

inline rat make_rat(long num, long den = 1)
{
    if (den == 0) {
        throw domain_error("zero denominator");
    }
    rat r(num, den);
    r.canonicalize();
    return r;
}

inline rat make_rat(const integer &num, const integer &den = 1)
{
    if (den == 0) {
        throw domain_error("zero denominator");
    }
    rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_canonical(const rat &x)
{
    if (sgn(x.get_den()) <= 0) {
        return false;
    }
    integer g;
    mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return g == 1;
}

inline bool is_integer(const rat &x)
{
    return x.get_den() == 1;
}

inline rat pow(const rat &base, long e)
{
    if (e < 0) {
        if (base == 0) {
            throw domain_error("zero to a negative power");
        }
        return pow(rat(1) / base, -e);
    }
    rat result(1);
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return result;
}

inline integer factorial(long n)
{
    assert(n >= 0);
    integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Integer binomial coefficient; zero outside 0 <= k <= n for n >= 0.
inline integer binomial(long n, long k)
{
    if (k < 0) {
        return 0;
    }
    integer r;
    if (n >= 0) {
        if (k > n) {
            return 0;
        }
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        integer top(n);
        mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

// x (x-1) ... (x-k+1) / k!
inline rat gen_binomial(const rat &x, long k)
{
    if (k < 0) {
        throw domain_error("negative lower index in generalized binomial");
    }
    rat r(1);
    for (long i = 0; i < k; ++i) {
        r *= x - i;
        r /= i + 1;
    }
    return r;
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1).
inline rat pochhammer(const rat &a, long n)
{
    if (n < 0) {
        throw domain_error("negative length in Pochhammer symbol");
    }
    rat r(1);
    for (long i = 0; i < n; ++i) {
        r *= a + i;
    }
    return r;
}

// "num/den", or just "num" for integers (the gmp canonical spelling).
inline std::string to_string(const rat &x)
{
    return x.get_str();
}

inline rat parse_rat(std::string_view s)
{
    std::string str(s);
    while (!str.empty() && (str.back() == ' ' || str.back() == '\n')) {
        str.pop_back();
    }
    std::size_t start = 0;
    while (start < str.size() && str[start] == ' ') {
        ++start;
    }
    str = str.substr(start);
    if (!str.empty() && str.front() == '+') {
        str.erase(0, 1);
    }
    rat r;
    if (str.empty() || r.set_str(str, 10) != 0) {
        throw domain_error("cannot parse rational '" + std::string(s) + "'");
    }
    if (r.get_den() == 0) {
        throw domain_error("zero denominator in '" + std::string(s) + "'");
    }
    r.canonicalize();
    return r;
}

} // namespace atkin

#endif
