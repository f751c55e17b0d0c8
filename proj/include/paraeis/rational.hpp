// Exact rational scalars: aliases over boost multiprecision plus small helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace paraeis {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// boost 1.74 rejects a negative denominator in the two-argument constructor,
// so normalize the sign here.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline Rational pow_rational(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0) {
        if (e < 0) throw std::domain_error("pow_rational: 0 to negative power");
        return Rational(0);
    }
    Int n = boost::multiprecision::numerator(x);
    Int d = boost::multiprecision::denominator(x);
    if (e < 0) { std::swap(n, d); e = -e; }
    return make_rational(boost::multiprecision::pow(n, static_cast<unsigned>(e)),
                         boost::multiprecision::pow(d, static_cast<unsigned>(e)));
}

inline Int pow_int(Int base, long e) {
    if (e < 0) throw std::domain_error("pow_int: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

// Canonical fraction rendering: "p/q" when q > 1, plain integer otherwise.
inline std::string rational_to_string(const Rational& x) {
    Int n = boost::multiprecision::numerator(x);
    Int d = boost::multiprecision::denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty");
    return Rational(s);
}

}  // namespace paraeis
