// Elementary integer utilities: factorization by trial division, valuations,
// modular arithmetic, primitive roots, Moebius, Kronecker symbols.
#pragma once

#include "paraeis/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace paraeis {

using std::int64_t;

struct PrimePower {
    int64_t p;
    int e;
};

using Factorization = std::vector<PrimePower>;

// Trial division. Inputs at desk scale are tiny; the bound guards against
// misuse rather than tuning for speed.
inline Factorization factorize(int64_t n, int64_t trial_bound = 10'000'000) {
    if (n == 0) throw std::domain_error("factorize: zero");
    if (n < 0) n = -n;
    Factorization out;
    for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (p > trial_bound)
            throw std::runtime_error("factorize: trial division bound exceeded");
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.push_back({p, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].e == 1;
}

inline int64_t valuation_int(int64_t p, Int x) {
    if (x == 0) throw std::domain_error("valuation_int: zero");
    int64_t v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

inline int64_t euler_phi(int64_t n) {
    int64_t r = 1;
    for (auto [p, e] : factorize(n)) {
        int64_t pe = 1;
        for (int i = 0; i < e - 1; ++i) pe *= p;
        r *= pe * (p - 1);
    }
    return n == 1 ? 1 : r;
}

inline int moebius(int64_t n) {
    if (n == 1) return 1;
    int cnt = 0;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        ++cnt;
    }
    return (cnt % 2 == 0) ? 1 : -1;
}

inline std::vector<int64_t> divisors(int64_t n) {
    n = std::abs(n);
    std::vector<int64_t> ds{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = ds.size();
        int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline int64_t mod_pow(int64_t base, int64_t e, int64_t mod) {
    base %= mod;
    if (base < 0) base += mod;
    __int128 r = 1, b = base;
    while (e > 0) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return static_cast<int64_t>(r);
}

inline int64_t mod_inv(int64_t a, int64_t mod) {
    int64_t g = mod, x = 0, x1 = 1, a1 = a % mod;
    if (a1 < 0) a1 += mod;
    while (a1 != 0) {
        int64_t q = g / a1;
        g -= q * a1; std::swap(g, a1);
        x -= q * x1; std::swap(x, x1);
    }
    if (g != 1) throw std::domain_error("mod_inv: not invertible");
    x %= mod;
    if (x < 0) x += mod;
    return x;
}

inline int64_t mul_mod(int64_t a, int64_t b, int64_t mod) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % mod);
}

// Multiplicative order of a modulo m (a must be a unit).
inline int64_t mult_order(int64_t a, int64_t m) {
    if (m == 1) return 1;
    int64_t phi = euler_phi(m);
    int64_t ord = phi;
    for (auto [p, e] : factorize(phi)) {
        while (ord % p == 0 && mod_pow(a, ord / p, m) == 1) ord /= p;
    }
    return ord;
}

// Smallest primitive root modulo p^k (p odd prime) or modulo 2, 4.
inline int64_t primitive_root(int64_t pk) {
    if (pk == 1 || pk == 2) return 1;
    if (pk == 4) return 3;
    auto f = factorize(pk);
    if (f.size() != 1 || f[0].p == 2)
        throw std::domain_error("primitive_root: modulus must be an odd prime power (or 1,2,4)");
    int64_t p = f[0].p;
    int64_t phi_p = p - 1;
    auto qs = factorize(phi_p);
    int64_t g = 0;
    for (int64_t cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (auto [q, e] : qs)
            if (mod_pow(cand, phi_p / q, p) == 1) { ok = false; break; }
        if (ok) { g = cand; break; }
    }
    if (g == 0) throw std::runtime_error("primitive_root: none found");
    if (f[0].e == 1) return g;
    // Lift to p^k: g works unless g^(p-1) = 1 mod p^2.
    if (mod_pow(g, p - 1, p * p) == 1) g += p;
    return g;
}

// Kronecker symbol (a|n), full extension of the Jacobi symbol.
inline int kronecker_symbol(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int64_t v = 0;
        while (n % 2 == 0) { n /= 2; ++v; }
        int64_t am8 = ((a % 8) + 8) % 8;
        if (v % 2 == 1 && (am8 == 3 || am8 == 5)) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int64_t nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

inline bool is_fundamental_discriminant(int64_t d) {
    if (d == 1) return true;
    if (d == 0) return false;
    int64_t r = ((d % 4) + 4) % 4;
    auto squarefree = [](int64_t n) {
        for (auto [p, e] : factorize(n))
            if (e > 1) return false;
        return true;
    };
    if (r == 1) return squarefree(d);
    if (r == 0) {
        int64_t m = d / 4;
        int64_t rm = ((m % 4) + 4) % 4;
        return (rm == 2 || rm == 3) && squarefree(m);
    }
    return false;
}

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(std::abs(a), std::abs(b)); }
inline int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

}  // namespace paraeis
