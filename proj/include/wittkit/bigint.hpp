#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

namespace wittkit {

/// Arbitrary-precision signed integer. All arithmetic in the library is
/// exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g = boost::multiprecision::gcd(a, b);
    return g < 0 ? Int(-g) : g;
}

/// Quotient a/b when b divides a exactly, std::nullopt otherwise.
inline std::optional<Int> int_divexact(const Int& a, const Int& b) {
    if (b == 0) return std::nullopt;
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) return std::nullopt;
    return q;
}

/// Canonical residue in [0, m).
inline Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

namespace detail {

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned s) {
    Int x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace detail

/// Deterministic primality test. Uses the fixed Miller-Rabin witness set
/// that is proven exact below 3.317e24, trial division above (slow but
/// still deterministic; moduli that large are far outside normal use).
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    static const Int mr_bound("3317044064679887385961981");
    if (n < mr_bound) {
        Int d = n - 1;
        unsigned s = 0;
        while ((d & 1) == 0) {
            d >>= 1;
            ++s;
        }
        for (int a : small_primes) {
            if (detail::miller_rabin_witness(n, Int(a), d, s)) return false;
        }
        return true;
    }
    for (Int f = 41; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

}  // namespace wittkit
