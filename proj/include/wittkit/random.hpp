#pragma once

/**
 * @file random.hpp
 * @brief Deterministic random generators for property trials.
 *
 * mt19937_64 with modulo reduction, so streams are identical across
 * platforms and runs for a fixed seed (std distributions are not portable).
 */

#include <random>

#include "matrix.hpp"
#include "witt.hpp"

namespace wittkit {

using Rng = std::mt19937_64;

inline long rand_range(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random element with integer coefficients of magnitude <= height (t-degree
/// <= 1 for extension rings, keeping test sizes sane).
inline Value rand_value(Rng& rng, const Ring& r, long height) {
    switch (r.kind()) {
        case RingKind::integers: return r.from_int(rand_range(rng, -height, height));
        case RingKind::integers_mod:
        case RingKind::prime_field: {
            long m = r.modulus() > 64 ? 64 : r.modulus().convert_to<long>();
            return r.from_int(rand_range(rng, 0, m - 1));
        }
        case RingKind::poly_ext: {
            std::vector<Value> cs;
            int deg = static_cast<int>(rand_range(rng, 0, 1));
            for (int i = 0; i <= deg; ++i) cs.push_back(rand_value(rng, r.base(), height));
            return Value::polynomial(r, std::move(cs));
        }
    }
    return r.zero();
}

/// Random constant-term-1 polynomial of degree <= maxdeg.
inline Poly rand_ct1_poly(Rng& rng, const Ring& r, int maxdeg, long height) {
    int d = static_cast<int>(rand_range(rng, 0, maxdeg));
    std::vector<Value> cs{r.one()};
    for (int i = 1; i <= d; ++i) cs.push_back(rand_value(rng, r, height));
    return Poly(r, std::move(cs));
}

inline WittFraction rand_witt(Rng& rng, const Ring& r, int maxdeg, long height) {
    return WittFraction(rand_ct1_poly(rng, r, maxdeg, height), rand_ct1_poly(rng, r, maxdeg, height));
}

inline Matrix rand_matrix(Rng& rng, const Ring& r, int n, long height) {
    Matrix m(r, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, rand_value(rng, r, height));
    return m;
}

/// Random invertible matrix together with its exact inverse, built from
/// elementary operations so no division is ever needed.
inline std::pair<Matrix, Matrix> rand_invertible(Rng& rng, const Ring& r, int n, long height) {
    Matrix g = Matrix::identity(r, n);
    Matrix ginv = Matrix::identity(r, n);
    int ops = 2 * n + 2;
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rand_range(rng, 0, n - 1));
        int j = static_cast<int>(rand_range(rng, 0, n - 1));
        if (i == j) continue;
        Value f = rand_value(rng, r, height);
        // g <- E g with E = I + f e_ij;  ginv <- ginv E^{-1}
        for (int c = 0; c < n; ++c) g.set(i, c, g.at(i, c) + f * g.at(j, c));
        for (int rr = 0; rr < n; ++rr) ginv.set(rr, j, ginv.at(rr, j) - f * ginv.at(rr, i));
    }
    return {g, ginv};
}

}  // namespace wittkit
