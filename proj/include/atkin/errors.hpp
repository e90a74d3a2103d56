#ifndef ATKIN_ERRORS_HPP
#define ATKIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace atkin
{

// Base of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define ATKIN_DEFINE_ERROR(name)                                                                                     \
    class name : public error                                                                                        \
    {                                                                                                                \
    public:                                                                                                          \
        explicit name(const std::string &what) : error(std::string(#name ": ") + what) {}                           \
    }

// exact-series
ATKIN_DEFINE_ERROR(domain_error);
ATKIN_DEFINE_ERROR(division_by_zero_series);
ATKIN_DEFINE_ERROR(insufficient_precision);
ATKIN_DEFINE_ERROR(nonzero_remainder);

// modular-forms
ATKIN_DEFINE_ERROR(invalid_weight);
ATKIN_DEFINE_ERROR(not_polynomial_in_j);

// hypergeom
ATKIN_DEFINE_ERROR(invalid_params);

// atkin-polys
ATKIN_DEFINE_ERROR(index_out_of_range);
ATKIN_DEFINE_ERROR(unsupported_pair);
ATKIN_DEFINE_ERROR(pole_at_lambda);

// extremal-forms
ATKIN_DEFINE_ERROR(unsupported_weight);

// atkin-functional
ATKIN_DEFINE_ERROR(inner_product_mismatch);

// faber
ATKIN_DEFINE_ERROR(index_below_range);
ATKIN_DEFINE_ERROR(odd_weight);

// congruence
ATKIN_DEFINE_ERROR(not_p_integral);
ATKIN_DEFINE_ERROR(composite_modulus);

// rogers-cf
ATKIN_DEFINE_ERROR(singular_hankel);
ATKIN_DEFINE_ERROR(qd_breakdown);

#undef ATKIN_DEFINE_ERROR

} // namespace atkin

#endif
