#ifndef ATKIN_WEIGHT_HPP
#define ATKIN_WEIGHT_HPP

#include <string>

#include <atkin/errors.hpp>

namespace atkin
{

// k = 12m + 4 delta + 6 epsilon, delta in {0,1,2}, epsilon in {0,1}
struct weight_decomp
{
    long m = 0;
    int delta = 0;
    int epsilon = 0;

    long weight() const { return 12 * m + 4 * delta + 6 * epsilon; }
    // class index 4 delta + 6 epsilon
    int r() const { return 4 * delta + 6 * epsilon; }
};

inline long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

inline long floor_mod(long a, long b)
{
    return a - b * floor_div(a, b);
}

inline weight_decomp weight_decompose(long k)
{
    if (floor_mod(k, 2) != 0) {
        throw odd_weight("weight " + std::to_string(k) + " is odd");
    }
    weight_decomp d;
    d.epsilon = static_cast<int>(floor_mod(k, 4) / 2);
    const long rest = (k - 6 * d.epsilon) / 4;
    d.delta = static_cast<int>(floor_mod(rest, 3));
    d.m = floor_div(rest - d.delta, 3);
    return d;
}

} // namespace atkin

#endif
