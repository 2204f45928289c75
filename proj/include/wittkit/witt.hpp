#pragma once

/**
 * @file witt.hpp
 * @brief The rational Witt ring W0(A) of a commutative ring A.
 *
 * Elements are fractions num/den of polynomials in r with constant term 1
 * (units of A[[r]], so cross-multiplication equality is sound). The group
 * law ("addition") is series multiplication. The second product * is
 * determined on line elements by (1-ar)*(1-br) = 1-abr; we extend it to all
 * fractions through companion matrices: for effective elements
 *
 *     f * g = det(Id - (C_f (x) C_g) r),       C_h = companion_of(h, minus)
 *
 * and to fractions by bilinearity. Over torsion-free rings (Z, Z[t]) the
 * same value is computed much faster from ghost components, which multiply
 * componentwise, followed by Newton inversion with verified-exact integer
 * divisions. The conventions:
 *
 *   - witt_mul is the minus convention (unit 1-r). The classical identities
 *     (ghost of V_n, F_n V_n = n-fold sum, the projection formula) hold here
 *     with no signs.
 *   - witt_mul_plus is the r -> -r conjugate (unit 1+r), the convention in
 *     which det(Id + a r)-style matrix facts are stated.
 *
 * Frobenius raises eigenvalues to the n-th power (companion powers);
 * Verschiebung substitutes r -> r^n. Ghost components are trace-of-
 * companion-power sums, division-free, so they work over Z/m and Z[t].
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace wittkit {

class WittFraction;
WittFraction witt_mul(const WittFraction& x, const WittFraction& y);

namespace detail {

/// Euclidean gcd degree over GF(p) on raw residue vectors (machine check
/// used to certify coprimality before attempting an exact reduction).
inline int gcd_degree_mod_p(std::vector<Int> a, std::vector<Int> b, const Int& p) {
    auto deg = [](const std::vector<Int>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[static_cast<std::size_t>(d)] == 0) --d;
        return d;
    };
    int da = deg(a), db = deg(b);
    if (da < db) { std::swap(a, b); std::swap(da, db); }
    while (db >= 0) {
        // a mod b
        Int lb = b[static_cast<std::size_t>(db)];
        Int lbinv = boost::multiprecision::powm(lb, p - 2, p);
        for (int k = da; k >= db; --k) {
            Int f = mod_reduce(a[static_cast<std::size_t>(k)] * lbinv, p);
            if (f == 0) continue;
            for (int j = 0; j <= db; ++j) {
                std::size_t ai = static_cast<std::size_t>(k - db + j);
                a[ai] = mod_reduce(a[ai] - f * b[static_cast<std::size_t>(j)], p);
            }
        }
        std::swap(a, b);
        da = deg(a);
        db = deg(b);
    }
    return da;
}

/// True only when num and den are provably coprime (a gcd-1 certificate via
/// specialization); false means "run the exact gcd".
inline bool certainly_coprime(const Poly& num, const Poly& den) {
    if (num.degree() < 1 || den.degree() < 1) return num.degree() < 1 && den.degree() < 1;
    const Ring& R = num.ring();
    static const long probe_primes[] = {1000003, 1000033, 1000037};
    auto scalar_at = [&](const Value& v, const Int& t0, bool ext) -> Int {
        if (!ext) return v.scalar();
        Int acc = 0;
        const auto& cs = v.coeffs();
        for (std::size_t i = cs.size(); i-- > 0;) acc = acc * t0 + cs[i].scalar();
        return acc;
    };
    bool ext = R.is_extension();
    RingKind base_kind = ext ? R.base().kind() : R.kind();
    for (long pl : probe_primes) {
        Int p(pl);
        Int t0 = 1;
        if (base_kind == RingKind::prime_field) p = ext ? R.base().modulus() : R.modulus();
        if (base_kind == RingKind::integers_mod) return false;
        for (int attempt = 0; attempt < 4; ++attempt, t0 += 1) {
            Int ln = mod_reduce(scalar_at(num.leading(), t0, ext), p);
            Int ld = mod_reduce(scalar_at(den.leading(), t0, ext), p);
            if (ln == 0 || ld == 0) continue;  // specialization kills a leading term
            std::vector<Int> a, b;
            for (const Value& v : num.coeffs()) a.push_back(mod_reduce(scalar_at(v, t0, ext), p));
            for (const Value& v : den.coeffs()) b.push_back(mod_reduce(scalar_at(v, t0, ext), p));
            return gcd_degree_mod_p(std::move(a), std::move(b), p) == 0;
        }
        if (base_kind == RingKind::prime_field) return false;  // tiny field, no usable point
    }
    return false;
}

}  // namespace detail

/**
 * An element of W0(A): a normalized fraction of constant-term-1 polynomials.
 * Over rings with a gcd (Z, prime fields, Z[t], GF(p)[t]) the fraction is
 * reduced and both constant terms are exactly 1; over Z/m composite it is
 * stored as given and equality goes through cross-multiplication.
 */
class WittFraction {
  public:
    explicit WittFraction(Poly num) : ring_(num.ring()), num_(std::move(num)), den_(Poly::one(ring_)) {
        validate_and_reduce();
    }

    WittFraction(Poly num, Poly den) : ring_(num.ring()), num_(std::move(num)), den_(std::move(den)) {
        require_same_ring(num_.ring(), den_.ring(), "WittFraction");
        validate_and_reduce();
    }

    static WittFraction one(const Ring& r) { return WittFraction(Poly::one(r)); }

    /// The *-unit 1 - r of the minus convention.
    static WittFraction unit_minus(const Ring& r) { return WittFraction(Poly::from_ints(r, {1, -1})); }

    /// The *_+-unit 1 + r of the plus convention.
    static WittFraction unit_plus(const Ring& r) { return WittFraction(Poly::from_ints(r, {1, 1})); }

    /// Line element 1 - a r.
    static WittFraction line(const Value& a) {
        return WittFraction(Poly(a.ring(), {a.ring().one(), -a}));
    }

    static WittFraction from_ints(const Ring& r, std::initializer_list<long> num,
                                  std::initializer_list<long> den = {1}) {
        return WittFraction(Poly::from_ints(r, num), Poly::from_ints(r, den));
    }

    const Ring& ring() const { return ring_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_effective() const { return den_.is_one(); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

  private:
    void validate_and_reduce() {
        if (!num_.constant_term().is_one() || !den_.constant_term().is_one())
            throw DomainError("WittFraction: numerator and denominator must have constant term 1");
        reduce();
    }

    void reduce() {
        if (den_.is_one() || num_.is_one()) {
            if (num_ == den_) {
                num_ = Poly::one(ring_);
                den_ = Poly::one(ring_);
            }
            return;
        }
        if (!ring_.has_gcd()) return;
        if (detail::certainly_coprime(num_, den_)) return;
        Poly g = poly_gcd(num_, den_);
        if (g.degree() < 1) return;
        // g divides num with num(0) = 1, so g(0) is a unit; rescale so the
        // reduced parts keep constant term exactly 1.
        auto ginv0 = value_inv(g.constant_term());
        if (!ginv0) throw DomainError("WittFraction: gcd constant term is not a unit");
        g = g.scaled(*ginv0);
        auto n = poly_divexact(num_, g);
        auto d = poly_divexact(den_, g);
        if (!n || !d) throw DomainError("WittFraction: inexact division by gcd");
        num_ = std::move(*n);
        den_ = std::move(*d);
    }

    Ring ring_;
    Poly num_;
    Poly den_;
};

/// Equality in W0(A): num_x den_y = num_y den_x, sound because
/// constant-term-1 polynomials are units in A[[r]]. Over gcd rings both
/// sides are stored reduced with constant terms 1, and reduced forms are
/// unique there, so the predicate collapses to structural equality; over
/// Z/m composite it cross-multiplies.
inline bool witt_eq(const WittFraction& x, const WittFraction& y) {
    require_same_ring(x.ring(), y.ring(), "witt_eq");
    if (x.ring().has_gcd()) return x.num() == y.num() && x.den() == y.den();
    return x.num() * y.den() == y.num() * x.den();
}

/// Group law: series multiplication.
inline WittFraction witt_add(const WittFraction& x, const WittFraction& y) {
    require_same_ring(x.ring(), y.ring(), "witt_add");
    return WittFraction(x.num() * y.num(), x.den() * y.den());
}

inline WittFraction witt_neg(const WittFraction& x) { return WittFraction(x.den(), x.num()); }

inline WittFraction witt_sub(const WittFraction& x, const WittFraction& y) {
    return witt_add(x, witt_neg(y));
}

/// r -> -r. A group automorphism; self-inverse; conjugates witt_mul into
/// witt_mul_plus.
inline WittFraction invol(const WittFraction& x) {
    return WittFraction(x.num().negate_variable(), x.den().negate_variable());
}

namespace detail {

/// Ghost components g_1..g_N of an effective constant-term-1 polynomial by
/// the division-free Newton recursion p_n = -n c_n - sum c_j p_{n-j}.
inline std::vector<Value> newton_ghosts(const Poly& f, int N) {
    const Ring& R = f.ring();
    std::vector<Value> p;
    p.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        Value acc = -(f.coeff(n) * R.from_int(n));
        for (int j = 1; j < n; ++j) {
            if (f.coeff(j).is_zero()) continue;
            acc = acc - f.coeff(j) * p[static_cast<std::size_t>(n - j - 1)];
        }
        p.push_back(std::move(acc));
    }
    return p;
}

/// Inverse of newton_ghosts: series coefficients c_1..c_N from ghosts, each
/// step dividing by n. The caller decides what a failed division means.
inline std::optional<std::vector<Value>> newton_coefficients(const std::vector<Value>& g, const Ring& R) {
    std::vector<Value> c;
    c.reserve(g.size());
    for (std::size_t n = 1; n <= g.size(); ++n) {
        Value acc = g[n - 1];
        for (std::size_t j = 1; j < n; ++j) {
            if (c[j - 1].is_zero()) continue;
            acc = acc + c[j - 1] * g[n - j - 1];
        }
        auto q = value_div_int_exact(-acc, Int(n));
        if (!q) return std::nullopt;
        c.push_back(std::move(*q));
    }
    return c;
}

/// *-product of two effective elements, minus convention.
inline Poly star_effective(const Poly& f, const Poly& g) {
    const Ring& R = f.ring();
    int df = f.degree(), dg = g.degree();
    if (df <= 0 || dg <= 0) return Poly::one(R);
    if (R.is_torsion_free()) {
        int depth = df * dg;
        std::vector<Value> pf = newton_ghosts(f, depth);
        std::vector<Value> pg = newton_ghosts(g, depth);
        std::vector<Value> ph;
        ph.reserve(static_cast<std::size_t>(depth));
        for (int i = 0; i < depth; ++i)
            ph.push_back(pf[static_cast<std::size_t>(i)] * pg[static_cast<std::size_t>(i)]);
        auto c = newton_coefficients(ph, R);
        if (!c) throw DomainError("star_effective: internal Newton division failed");
        c->insert(c->begin(), R.one());
        return Poly(R, std::move(*c));
    }
    Matrix cf = companion_of(f, DetSign::minus);
    Matrix cg = companion_of(g, DetSign::minus);
    return char_det_form(kron(cf, cg), DetSign::minus);
}

}  // namespace detail

/// The * product, minus convention: (1-ar)*(1-br) = 1-abr, extended to
/// fractions by bilinearity over the group law. Unit: 1-r.
inline WittFraction witt_mul(const WittFraction& x, const WittFraction& y) {
    require_same_ring(x.ring(), y.ring(), "witt_mul");
    Poly nn = detail::star_effective(x.num(), y.num());
    Poly dd = detail::star_effective(x.den(), y.den());
    Poly nd = detail::star_effective(x.num(), y.den());
    Poly dn = detail::star_effective(x.den(), y.num());
    return WittFraction(nn * dd, nd * dn);
}

/// The plus-convention product (1+ar) *_+ (1+br) = 1+abr: the r -> -r
/// conjugate of witt_mul. Unit: 1+r. This is the convention matching
/// det(Id + (a (x) b) r) on matrix representatives.
inline WittFraction witt_mul_plus(const WittFraction& x, const WittFraction& y) {
    return invol(witt_mul(invol(x), invol(y)));
}

struct GhostVector {
    Ring ring;
    std::vector<Value> components;  ///< g_1 .. g_N

    int depth() const { return static_cast<int>(components.size()); }

    friend bool operator==(const GhostVector& a, const GhostVector& b) {
        return a.ring == b.ring && a.components == b.components;
    }
};

namespace detail {

/// g_n(f) = trace(C_f^n) for the minus-convention companion C_f.
inline std::vector<Value> trace_ghosts(const Poly& f, int N) {
    const Ring& R = f.ring();
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(N));
    if (f.degree() <= 0) {
        for (int n = 0; n < N; ++n) out.push_back(R.zero());
        return out;
    }
    Matrix c = companion_of(f, DetSign::minus);
    Matrix p = c;
    for (int n = 1; n <= N; ++n) {
        out.push_back(p.trace());
        if (n < N) p = p * c;
    }
    return out;
}

}  // namespace detail

/// Ghost components g_1..g_N, with g_n(1-ar) = a^n; additive on the group
/// law and multiplicative on *. Computed division-free as traces of
/// companion powers, extended to fractions by g(num) - g(den).
inline GhostVector ghost(int N, const WittFraction& x) {
    if (N < 1) throw DomainError("ghost: depth must be >= 1");
    std::vector<Value> gn = detail::trace_ghosts(x.num(), N);
    std::vector<Value> gd = detail::trace_ghosts(x.den(), N);
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        out.push_back(gn[static_cast<std::size_t>(i)] - gd[static_cast<std::size_t>(i)]);
    return GhostVector{x.ring(), std::move(out)};
}

/**
 * Big Witt vector truncated to the set {1..N}: the series
 * 1 + c_1 r + ... + c_N r^N mod r^(N+1).
 */
struct TruncatedWitt {
    Ring ring;
    std::vector<Value> c;  ///< c_1 .. c_N, zero-padded to depth

    int depth() const { return static_cast<int>(c.size()); }

    Poly to_poly() const {
        std::vector<Value> v;
        v.reserve(c.size() + 1);
        v.push_back(ring.one());
        for (const Value& x : c) v.push_back(x);
        return Poly(ring, std::move(v));
    }

    friend bool operator==(const TruncatedWitt& a, const TruncatedWitt& b) {
        return a.ring == b.ring && a.c == b.c;
    }

    std::string to_string() const { return to_poly().to_string(); }
};

/// Power-series expansion of num/den to order N (the denominator is a unit
/// of A[[r]]).
inline TruncatedWitt truncate(int N, const WittFraction& x) {
    if (N < 1) throw DomainError("truncate: depth must be >= 1");
    const Ring& R = x.ring();
    // invert den as a series mod r^(N+1)
    std::vector<Value> inv(static_cast<std::size_t>(N) + 1, R.zero());
    inv[0] = R.one();
    for (int k = 1; k <= N; ++k) {
        Value acc = R.zero();
        for (int j = 1; j <= k; ++j) {
            const Value& dj = x.den().coeff(j);
            if (dj.is_zero()) continue;
            acc = acc + dj * inv[static_cast<std::size_t>(k - j)];
        }
        inv[static_cast<std::size_t>(k)] = -acc;
    }
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(N));
    for (int k = 1; k <= N; ++k) {
        Value acc = R.zero();
        for (int j = 0; j <= k; ++j) {
            const Value& nj = x.num().coeff(j);
            if (nj.is_zero()) continue;
            acc = acc + nj * inv[static_cast<std::size_t>(k - j)];
        }
        out.push_back(std::move(acc));
    }
    return TruncatedWitt{R, std::move(out)};
}

inline TruncatedWitt trunc_add(const TruncatedWitt& a, const TruncatedWitt& b) {
    require_same_ring(a.ring, b.ring, "trunc_add");
    if (a.depth() != b.depth()) throw DomainError("trunc_add: depth mismatch");
    return truncate(a.depth(), WittFraction(a.to_poly() * b.to_poly()));
}

inline TruncatedWitt trunc_mul(const TruncatedWitt& a, const TruncatedWitt& b) {
    require_same_ring(a.ring, b.ring, "trunc_mul");
    if (a.depth() != b.depth()) throw DomainError("trunc_mul: depth mismatch");
    return truncate(a.depth(), witt_mul(WittFraction(a.to_poly()), WittFraction(b.to_poly())));
}

/// The unique truncated Witt vector with the given ghost components. Over Z
/// every Newton step checks divisibility and NonIntegralGhost signals a
/// vector outside the image; over GF(p) depths below p are invertible.
inline TruncatedWitt from_ghost(const GhostVector& g) {
    const Ring& R = g.ring;
    if (R.kind() == RingKind::integers_mod)
        throw DomainError("from_ghost: not supported over " + R.name());
    auto c = detail::newton_coefficients(g.components, R);
    if (!c) {
        if (R.is_torsion_free())
            throw NonIntegralGhostError("from_ghost: ghost vector is not integral over " + R.name());
        throw DomainError("from_ghost: depth " + std::to_string(g.depth()) + " is not invertible over " + R.name());
    }
    return TruncatedWitt{R, std::move(*c)};
}

/// F_n: the eigenvalue-power map, f -> det(Id - C_f^n r) on effective parts,
/// extended componentwise (F_n is additive).
inline WittFraction frobenius(int n, const WittFraction& x) {
    if (n < 1) throw DomainError("frobenius: order must be >= 1");
    if (n == 1) return x;
    auto part = [&](const Poly& f) {
        if (f.degree() <= 0) return Poly::one(f.ring());
        Matrix c = companion_of(f, DetSign::minus);
        return char_det_form(matrix_power(c, n), DetSign::minus);
    };
    return WittFraction(part(x.num()), part(x.den()));
}

/// V_n: r -> r^n on both parts.
inline WittFraction verschiebung(int n, const WittFraction& x) {
    if (n < 1) throw DomainError("verschiebung: order must be >= 1");
    if (n == 1) return x;
    return WittFraction(x.num().substitute_power(n), x.den().substitute_power(n));
}

/// k-th lambda operation on an effective element: the char form of the k-th
/// compound of the companion (exterior power of the underlying
/// endomorphism). lambda^0 is the *-unit 1-r.
inline WittFraction lambda_op(int k, const WittFraction& x) {
    if (!x.is_effective())
        throw NotEffectiveError("lambda_op: element must be effective (denominator 1)");
    const Poly& f = x.num();
    int d = f.degree() < 0 ? 0 : f.degree();
    if (k < 0 || k > d) throw DomainError("lambda_op: order out of range 0.." + std::to_string(d));
    Matrix c = companion_of(f, DetSign::minus);
    return WittFraction(char_det_form(compound(c, k), DetSign::minus));
}

}  // namespace wittkit
