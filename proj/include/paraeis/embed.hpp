// Complex embedding zeta_M -> exp(2*pi*i/M), for numeric cross-checks only.
#pragma once

#include "paraeis/cyclotomic.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>

namespace paraeis {

// 50 decimal digits by default; acceptance tolerances use a fraction of that.
template <unsigned Digits = 50>
using HighFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Digits>,
    boost::multiprecision::et_off>;

template <unsigned Digits = 50>
struct ComplexEmbedding {
    HighFloat<Digits> re{0};
    HighFloat<Digits> im{0};

    HighFloat<Digits> abs() const { return sqrt(re * re + im * im); }
    std::complex<double> to_double() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

template <unsigned Digits>
inline HighFloat<Digits> to_high_float(const Rational& q) {
    using F = HighFloat<Digits>;
    return F(boost::multiprecision::numerator(q)) / F(boost::multiprecision::denominator(q));
}

template <unsigned Digits = 50>
inline ComplexEmbedding<Digits> embed_complex(const CycloNumber& x) {
    using F = HighFloat<Digits>;
    const F two_pi = 2 * boost::math::constants::pi<F>();
    ComplexEmbedding<Digits> z;
    int64_t M = x.order();
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        const Rational& c = x.coeffs()[i];
        if (c == 0) continue;
        F coeff = to_high_float<Digits>(c);
        F angle = two_pi * F(static_cast<long long>(i)) / F(static_cast<long long>(M));
        z.re += coeff * cos(angle);
        z.im += coeff * sin(angle);
    }
    return z;
}

inline std::complex<double> embed_complex_double(const CycloNumber& x) {
    return embed_complex<50>(x).to_double();
}

}  // namespace paraeis
