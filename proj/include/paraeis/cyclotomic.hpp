// Exact arithmetic in cyclotomic fields Q(zeta_M).
//
// Elements are stored in canonical form: the coordinate vector on the power
// basis 1, z, ..., z^(phi(M)-1) with z = zeta_M, fully reduced modulo the
// M-th cyclotomic polynomial. Equality is therefore coordinate-wise at equal
// order; binary operations promote both operands to Q(zeta_lcm).
#pragma once

#include "paraeis/numtheory.hpp"
#include "paraeis/rational.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <vector>

namespace paraeis {

namespace polyq {

inline void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

inline std::pair<std::vector<Rational>, std::vector<Rational>>
divmod(std::vector<Rational> num, const std::vector<Rational>& den) {
    if (den.empty()) throw std::domain_error("polyq::divmod: zero divisor");
    trim(num);
    std::vector<Rational> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
                            Rational(0));
    const Rational& lead = den.back();
    while (num.size() >= den.size()) {
        Rational c = num.back() / lead;
        size_t shift = num.size() - den.size();
        q[shift] += c;
        for (size_t i = 0; i + 1 < den.size(); ++i) num[shift + i] -= c * den[i];
        num.pop_back();
        trim(num);
    }
    trim(q);
    return {q, num};
}

}  // namespace polyq

// Cyclotomic polynomial Phi_M as integer coefficients, computed by iterated
// exact division of x^M - 1 by the Phi_d for proper divisors d, memoized.
inline const std::vector<Int>& cyclotomic_polynomial(int64_t M) {
    static std::map<int64_t, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;

    // Compute Phi_d for all divisors d of M in ascending order.
    for (int64_t d : divisors(M)) {
        if (cache.count(d)) continue;
        // x^d - 1
        std::vector<Int> num(d + 1, Int(0));
        num[0] = -1;
        num[d] = 1;
        for (int64_t dd : divisors(d)) {
            if (dd == d) continue;
            const auto& phi_dd = cache.at(dd);
            // exact division num /= phi_dd  (both monic)
            std::vector<Int> q(num.size() - phi_dd.size() + 1, Int(0));
            std::vector<Int> rem = num;
            for (size_t k = rem.size(); k >= phi_dd.size(); --k) {
                Int c = rem[k - 1];
                if (c == 0) continue;
                size_t shift = k - phi_dd.size();
                q[shift] = c;
                for (size_t i = 0; i < phi_dd.size(); ++i)
                    rem[shift + i] -= c * phi_dd[i];
            }
            for (const Int& c : rem)
                if (c != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
            num = std::move(q);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(M);
}

class CycloNumber {
public:
    CycloNumber() : order_(1), coeffs_(1, Rational(0)) {}
    explicit CycloNumber(const Rational& q) : order_(1), coeffs_(1, q) {}
    explicit CycloNumber(const Int& n) : order_(1), coeffs_(1, Rational(n)) {}
    CycloNumber(int64_t order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < 1) throw std::domain_error("CycloNumber: order must be >= 1");
        if (static_cast<int64_t>(coeffs_.size()) != euler_phi(order_))
            throw std::domain_error("CycloNumber: coefficient vector must have length phi(order)");
    }

    static CycloNumber zero() { return CycloNumber(); }
    static CycloNumber one() { return CycloNumber(Rational(1)); }

    int64_t order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    // Throws unless the element is rational.
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("CycloNumber: not rational");
        return coeffs_[0];
    }

    // Reduce a coefficient vector indexed by exponents 0..M-1 mod Phi_M.
    static CycloNumber from_exponent_vector(int64_t M, std::vector<Rational> v) {
        if (static_cast<int64_t>(v.size()) > M)
            throw std::domain_error("from_exponent_vector: degree >= order");
        v.resize(M, Rational(0));
        const auto& phi = cyclotomic_polynomial(M);
        size_t deg_phi = phi.size() - 1;  // = euler_phi(M)
        for (size_t k = M; k-- > deg_phi;) {
            if (v[k] == 0) continue;
            Rational c = v[k];
            v[k] = 0;
            size_t shift = k - deg_phi;
            for (size_t i = 0; i < deg_phi; ++i) {
                if (phi[i] != 0) v[shift + i] -= c * Rational(phi[i]);
            }
        }
        v.resize(deg_phi);
        return CycloNumber(M, std::move(v));
    }

    // zeta_M^k, stored at the minimal order M/gcd(M,k).
    static CycloNumber root_of_unity(int64_t M, int64_t k) {
        if (M < 1) throw std::domain_error("root_of_unity: order must be >= 1");
        k %= M;
        if (k < 0) k += M;
        int64_t g = std::gcd(k, M);
        int64_t m0 = M / g;
        int64_t k0 = k / g;
        if (m0 == 1) return one();
        std::vector<Rational> v(k0 + 1, Rational(0));
        v[k0] = 1;
        return from_exponent_vector(m0, std::move(v));
    }

    // Representation of the same element in Q(zeta_target); order must divide target.
    CycloNumber promote(int64_t target) const {
        if (target % order_ != 0)
            throw std::domain_error("promote: current order does not divide target order");
        if (target == order_) return *this;
        int64_t f = target / order_;
        std::vector<Rational> v(static_cast<size_t>(euler_phi(order_) - 1) * f + 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) v[i * f] = coeffs_[i];
        return from_exponent_vector(target, std::move(v));
    }

    // Galois action sigma_a : zeta_M -> zeta_M^a, for gcd(a, M) = 1.
    CycloNumber galois(int64_t a) const {
        int64_t M = order_;
        a %= M;
        if (a < 0) a += M;
        if (std::gcd(a, M) != 1)
            throw std::domain_error("galois: exponent not coprime to order");
        if (a == 1 || M == 1) return *this;
        std::vector<Rational> v(M, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            v[(a * static_cast<int64_t>(i)) % M] += coeffs_[i];
        }
        return from_exponent_vector(M, std::move(v));
    }

    friend CycloNumber operator+(const CycloNumber& x, const CycloNumber& y) {
        int64_t M = lcm64(x.order_, y.order_);
        CycloNumber a = x.promote(M), b = y.promote(M);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
        return a;
    }
    friend CycloNumber operator-(const CycloNumber& x, const CycloNumber& y) {
        int64_t M = lcm64(x.order_, y.order_);
        CycloNumber a = x.promote(M), b = y.promote(M);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
        return a;
    }
    CycloNumber operator-() const {
        CycloNumber r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend CycloNumber operator*(const CycloNumber& x, const CycloNumber& y) {
        if (x.order_ == 1) return y.scaled(x.coeffs_[0]);
        if (y.order_ == 1) return x.scaled(y.coeffs_[0]);
        int64_t M = lcm64(x.order_, y.order_);
        CycloNumber a = x.promote(M), b = y.promote(M);
        std::vector<Rational> v(M, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                v[(i + j) % M] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_exponent_vector(M, std::move(v));
    }

    CycloNumber scaled(const Rational& q) const {
        CycloNumber r = *this;
        for (auto& c : r.coeffs_) c *= q;
        return r;
    }

    CycloNumber inverse() const {
        if (is_zero()) throw std::domain_error("CycloNumber: division by zero");
        if (order_ == 1) return CycloNumber(Rational(1) / coeffs_[0]);
        // Extended Euclid against Phi_M over Q: s*f + t*Phi = gcd = const.
        const auto& phi_int = cyclotomic_polynomial(order_);
        std::vector<Rational> r0(phi_int.size());
        for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
        std::vector<Rational> r1(coeffs_.begin(), coeffs_.end());
        polyq::trim(r1);
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
        while (!r1.empty() && r1.size() > 1) {
            auto [q, rem] = polyq::divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            auto qs1 = polyq::mul(q, s1);
            std::vector<Rational> s2 = s0;
            s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
            for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            polyq::trim(s2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty())
            throw std::logic_error("CycloNumber::inverse: zero residue against irreducible modulus");
        // r1 is a nonzero constant: inverse = s1 / r1[0].
        Rational c = r1[0];
        std::vector<Rational> inv(s1.size());
        for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / c;
        inv.resize(order_, Rational(0));
        return from_exponent_vector(order_, std::move(inv));
    }

    friend CycloNumber operator/(const CycloNumber& x, const CycloNumber& y) {
        return x * y.inverse();
    }

    CycloNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycloNumber r = one(), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const CycloNumber& x, const CycloNumber& y) {
        int64_t M = lcm64(x.order_, y.order_);
        return x.promote(M).coeffs_ == y.promote(M).coeffs_;
    }
    friend bool operator!=(const CycloNumber& x, const CycloNumber& y) { return !(x == y); }

    // Coordinates of *this in the power basis of Q(zeta_d), d | order, if the
    // element lies there.
    std::optional<std::vector<Rational>> coordinates_in(int64_t d) const {
        if (order_ % d != 0) throw std::domain_error("coordinates_in: d must divide order");
        if (d == order_) return coeffs_;
        size_t rows = coeffs_.size();
        size_t cols = static_cast<size_t>(euler_phi(d));
        // Column j = basis vector of zeta_d^j promoted to Q(zeta_M).
        std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols, Rational(0)));
        for (size_t j = 0; j < cols; ++j) {
            CycloNumber bj = root_of_unity(d, static_cast<int64_t>(j)).promote(order_);
            for (size_t i = 0; i < rows; ++i) A[i][j] = bj.coeffs_[i];
        }
        std::vector<Rational> b = coeffs_;
        // Gaussian elimination with column pivoting over Q.
        std::vector<size_t> pivot_row(cols, SIZE_MAX);
        size_t row = 0;
        for (size_t col = 0; col < cols && row < rows; ++col) {
            size_t sel = SIZE_MAX;
            for (size_t i = row; i < rows; ++i)
                if (A[i][col] != 0) { sel = i; break; }
            if (sel == SIZE_MAX) continue;
            std::swap(A[sel], A[row]);
            std::swap(b[sel], b[row]);
            Rational inv = Rational(1) / A[row][col];
            for (size_t j = col; j < cols; ++j) A[row][j] *= inv;
            b[row] *= inv;
            for (size_t i = 0; i < rows; ++i) {
                if (i == row || A[i][col] == 0) continue;
                Rational f = A[i][col];
                for (size_t j = col; j < cols; ++j) A[i][j] -= f * A[row][j];
                b[i] -= f * b[row];
            }
            pivot_row[col] = row;
            ++row;
        }
        std::vector<Rational> sol(cols, Rational(0));
        for (size_t col = 0; col < cols; ++col)
            if (pivot_row[col] != SIZE_MAX) sol[col] = b[pivot_row[col]];
        // Verify consistency (rows without pivots must have matching rhs).
        for (size_t i = 0; i < rows; ++i) {
            Rational acc(0);
            for (size_t j = 0; j < cols; ++j)
                if (sol[j] != 0) acc += A[i][j] * sol[j];
            // A is now row-reduced; re-check against the reduced rhs.
            if (acc != b[i]) return std::nullopt;
        }
        return sol;
    }

    // Smallest d | order with *this in Q(zeta_d), with the element re-expressed there.
    CycloNumber reduce_order() const {
        if (order_ == 1) return *this;
        for (int64_t d : divisors(order_)) {
            if (d == order_) return *this;
            // Fixed by Gal(Q(zeta_M)/Q(zeta_d)) = {a coprime to M, a = 1 mod d}?
            bool fixed = true;
            for (int64_t a = 1 + d; a < order_ && fixed; a += d) {
                if (std::gcd(a, order_) != 1) continue;
                if (galois(a) != *this) fixed = false;
            }
            if (!fixed) continue;
            auto sol = coordinates_in(d);
            if (!sol)
                throw std::logic_error("reduce_order: Galois-fixed element missing coordinates");
            return CycloNumber(d, std::move(*sol));
        }
        return *this;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[ord " << order_ << ":";
        for (const auto& c : coeffs_) os << " " << rational_to_string(c);
        os << "]";
        return os.str();
    }

private:
    int64_t order_;
    std::vector<Rational> coeffs_;
};

inline CycloNumber operator*(const Rational& q, const CycloNumber& x) { return x.scaled(q); }
inline CycloNumber operator*(const CycloNumber& x, const Rational& q) { return x.scaled(q); }

}  // namespace paraeis
