// A cyclotomic number times a symbolic integer power of pi. Addition requires
// equal exponents; multiplication adds them. Final Fourier coefficients must
// come out at exponent zero.
#pragma once

#include "paraeis/cyclotomic.hpp"

namespace paraeis {

struct PiScaled {
    CycloNumber value;
    long pi_exponent = 0;

    PiScaled() = default;
    explicit PiScaled(CycloNumber v, long e = 0) : value(std::move(v)), pi_exponent(e) {}
    explicit PiScaled(const Rational& q, long e = 0) : value(q), pi_exponent(e) {}

    friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
        return PiScaled(a.value * b.value, a.pi_exponent + b.pi_exponent);
    }
    friend PiScaled operator/(const PiScaled& a, const PiScaled& b) {
        return PiScaled(a.value / b.value, a.pi_exponent - b.pi_exponent);
    }
    friend PiScaled operator+(const PiScaled& a, const PiScaled& b) {
        if (a.pi_exponent != b.pi_exponent)
            throw std::domain_error("PiScaled: addition with mismatched pi exponents");
        return PiScaled(a.value + b.value, a.pi_exponent);
    }
    friend PiScaled operator-(const PiScaled& a, const PiScaled& b) {
        if (a.pi_exponent != b.pi_exponent)
            throw std::domain_error("PiScaled: subtraction with mismatched pi exponents");
        return PiScaled(a.value - b.value, a.pi_exponent);
    }

    PiScaled scaled(const Rational& q) const { return PiScaled(value.scaled(q), pi_exponent); }
};

}  // namespace paraeis
