#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over a Ring, plus the gcd tower.
 *
 * Coefficients are stored ascending (index i = coefficient of r^i) with
 * trailing zeros trimmed; the zero polynomial is the empty list. gcd and
 * exact division are available over rings that have them (Z, GF(p), Z[t],
 * GF(p)[t]) via a generic primitive pseudo-remainder sequence, which needs
 * no coefficient divisions beyond exact ones and so stays correct over Z.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace wittkit {

class Poly {
  public:
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    Poly(Ring ring, std::vector<Value> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        for (const Value& v : c_) require_same_ring(v.ring(), ring_, "Poly");
        trim();
    }

    static Poly constant(const Value& v) { return Poly(v.ring(), std::vector<Value>{v}); }

    static Poly one(const Ring& r) { return constant(r.one()); }

    static Poly from_ints(const Ring& r, std::initializer_list<long> cs) {
        std::vector<Value> v;
        v.reserve(cs.size());
        for (long c : cs) v.push_back(r.from_int(c));
        return Poly(r, std::move(v));
    }

    const Ring& ring() const { return ring_; }

    /// Degree, with deg(0) = -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    const Value& coeff(int i) const {
        static_assert(sizeof(i) <= sizeof(std::size_t), "");
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) {
            zero_ = ring_.zero();
            return *zero_;
        }
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Value>& coeffs() const { return c_; }

    Value constant_term() const { return c_.empty() ? ring_.zero() : c_[0]; }

    Value leading() const {
        if (c_.empty()) return ring_.zero();
        return c_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        require_same_ring(a.ring_, b.ring_, "Poly::add");
        std::vector<Value> out;
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= a.c_.size())
                out.push_back(b.c_[i]);
            else if (i >= b.c_.size())
                out.push_back(a.c_[i]);
            else
                out.push_back(a.c_[i] + b.c_[i]);
        }
        return Poly(a.ring_, std::move(out));
    }

    friend Poly operator-(const Poly& a) {
        std::vector<Value> out;
        out.reserve(a.c_.size());
        for (const Value& v : a.c_) out.push_back(-v);
        return Poly(a.ring_, std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_ring(a.ring_, b.ring_, "Poly::mul");
        if (a.c_.empty() || b.c_.empty()) return Poly(a.ring_);
        std::vector<Value> out(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(a.ring_, std::move(out));
    }

    Poly scaled(const Value& s) const {
        std::vector<Value> out;
        out.reserve(c_.size());
        for (const Value& v : c_) out.push_back(v * s);
        return Poly(ring_, std::move(out));
    }

    /// Multiply by r^k.
    Poly shifted(int k) const {
        if (c_.empty() || k == 0) return *this;
        std::vector<Value> out(c_.size() + static_cast<std::size_t>(k), ring_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + static_cast<std::size_t>(k)] = c_[i];
        return Poly(ring_, std::move(out));
    }

    Value eval(const Value& x) const {
        require_same_ring(x.ring(), ring_, "Poly::eval");
        Value acc = ring_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Sum c_i r^i  ->  sum c_i r^(i*n).
    Poly substitute_power(int n) const {
        if (n < 1) throw DomainError("substitute_power: exponent must be >= 1");
        if (c_.empty() || n == 1) return *this;
        std::vector<Value> out((c_.size() - 1) * static_cast<std::size_t>(n) + 1, ring_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i * static_cast<std::size_t>(n)] = c_[i];
        return Poly(ring_, std::move(out));
    }

    /// r -> -r; fixes the constant term, bridges the two determinant forms.
    Poly negate_variable() const {
        std::vector<Value> out;
        out.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out.push_back((i % 2 == 0) ? c_[i] : -c_[i]);
        return Poly(ring_, std::move(out));
    }

    /// Compact form, e.g. "1-6r+4r^2"; extension coefficients with several
    /// terms are parenthesized.
    std::string to_string(const std::string& var = "r") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].to_string();
            bool neg = !cs.empty() && cs[0] == '-';
            bool compound = cs.find('+') != std::string::npos || (cs.rfind('-') != std::string::npos && cs.rfind('-') > 0);
            if (compound) {
                if (!out.empty()) out += "+";
                cs = "(" + cs + ")";
            } else if (neg) {
                cs = cs.substr(1);
                out += "-";
            } else if (!out.empty()) {
                out += "+";
            }
            if (cs == "1" && i > 0) cs.clear();
            out += cs;
            if (i >= 1) {
                out += var;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Ring ring_;
    std::vector<Value> c_;
    mutable std::optional<Value> zero_;
};

// --- exact division and gcd on ring elements -------------------------------

std::optional<Poly> poly_divexact(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);

/// Multiplicative inverse when the element is a unit.
inline std::optional<Value> value_inv(const Value& v) {
    const Ring& R = v.ring();
    switch (R.kind()) {
        case RingKind::integers:
            if (v.scalar() == 1 || v.scalar() == -1) return v;
            return std::nullopt;
        case RingKind::prime_field:
        case RingKind::integers_mod: {
            // extended Euclid on (scalar, modulus)
            Int a = v.scalar(), m = R.modulus();
            Int r0 = m, r1 = a, s0 = 0, s1 = 1;
            while (r1 != 0) {
                Int q = r0 / r1;
                Int r2 = r0 - q * r1;
                Int s2 = s0 - q * s1;
                r0 = r1; r1 = r2; s0 = s1; s1 = s2;
            }
            if (r0 != 1) return std::nullopt;
            return R.from_int(mod_reduce(s0, m));
        }
        case RingKind::poly_ext: {
            if (v.ext_degree() != 0) return std::nullopt;  // units are constants for our bases
            auto inv = value_inv(v.coeffs()[0]);
            if (!inv) return std::nullopt;
            return Value::polynomial(R, {*inv});
        }
    }
    return std::nullopt;
}

/// a/b when b divides a exactly in the ring.
inline std::optional<Value> value_divexact(const Value& a, const Value& b) {
    require_same_ring(a.ring(), b.ring(), "value_divexact");
    const Ring& R = a.ring();
    switch (R.kind()) {
        case RingKind::integers: {
            auto q = int_divexact(a.scalar(), b.scalar());
            if (!q) return std::nullopt;
            return R.from_int(*q);
        }
        case RingKind::prime_field:
        case RingKind::integers_mod: {
            auto inv = value_inv(b);
            if (!inv) return std::nullopt;
            return a * *inv;
        }
        case RingKind::poly_ext: {
            Ring base = R.base();
            Poly pa(base, a.coeffs());
            Poly pb(base, b.coeffs());
            auto q = poly_divexact(pa, pb);
            if (!q) return std::nullopt;
            return Value::polynomial(R, q->coeffs());
        }
    }
    return std::nullopt;
}

/// Unit-normalized gcd: nonnegative over Z, 1 over GF(p) (unless both args
/// are zero), positive/monic leading coefficient over extensions.
inline Value value_gcd(const Value& a, const Value& b) {
    require_same_ring(a.ring(), b.ring(), "value_gcd");
    const Ring& R = a.ring();
    switch (R.kind()) {
        case RingKind::integers: return R.from_int(int_gcd(a.scalar(), b.scalar()));
        case RingKind::prime_field:
            if (a.is_zero() && b.is_zero()) return R.zero();
            return R.one();
        case RingKind::integers_mod: throw DomainError("gcd is not available over " + R.name());
        case RingKind::poly_ext: {
            Ring base = R.base();
            Poly g = poly_gcd(Poly(base, a.coeffs()), Poly(base, b.coeffs()));
            return Value::polynomial(R, g.coeffs());
        }
    }
    throw DomainError("value_gcd: unreachable");
}

/// Exact division of each integer coefficient by n; works coefficientwise
/// through extensions, and by multiplying with 1/n over prime fields.
inline std::optional<Value> value_div_int_exact(const Value& v, const Int& n) {
    const Ring& R = v.ring();
    switch (R.kind()) {
        case RingKind::integers: {
            auto q = int_divexact(v.scalar(), n);
            if (!q) return std::nullopt;
            return R.from_int(*q);
        }
        case RingKind::prime_field:
        case RingKind::integers_mod: {
            auto inv = value_inv(R.from_int(n));
            if (!inv) return std::nullopt;
            return v * *inv;
        }
        case RingKind::poly_ext: {
            std::vector<Value> out;
            out.reserve(v.coeffs().size());
            for (const Value& c : v.coeffs()) {
                auto q = value_div_int_exact(c, n);
                if (!q) return std::nullopt;
                out.push_back(std::move(*q));
            }
            return Value::polynomial(R, std::move(out));
        }
    }
    return std::nullopt;
}

namespace detail {

/// The unit u with v/u in normalized-associate form (sign over Z, leading
/// base coefficient over extensions, the element itself over fields).
inline Value value_unit_part(const Value& v) {
    const Ring& R = v.ring();
    switch (R.kind()) {
        case RingKind::integers: return R.from_int(v.scalar() < 0 ? -1 : 1);
        case RingKind::prime_field: return v.is_zero() ? R.one() : v;
        case RingKind::integers_mod: return R.one();
        case RingKind::poly_ext: {
            if (v.is_zero()) return R.one();
            Value lead = value_unit_part(v.coeffs().back());
            return Value::polynomial(R, {lead});
        }
    }
    return R.one();
}

inline Poly normalize_associate(const Poly& f) {
    if (f.is_zero()) return f;
    Value u = value_unit_part(f.leading());
    if (u.is_one()) return f;
    auto inv = value_inv(u);
    if (!inv) return f;
    return f.scaled(*inv);
}

inline Value poly_content(const Poly& f) {
    Value c = f.ring().zero();
    for (const Value& v : f.coeffs()) {
        if (v.is_zero()) continue;
        c = c.is_zero() ? value_gcd(v, v) : value_gcd(c, v);
    }
    return c.is_zero() ? f.ring().zero() : c;
}

inline Poly poly_primitive_part(const Poly& f, const Value& content) {
    if (f.is_zero()) return f;
    std::vector<Value> out;
    out.reserve(f.coeffs().size());
    for (const Value& v : f.coeffs()) {
        auto q = value_divexact(v, content);
        if (!q) throw DomainError("poly_primitive_part: content does not divide a coefficient");
        out.push_back(std::move(*q));
    }
    return Poly(f.ring(), std::move(out));
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, computed with ring
/// multiplications only.
inline Poly pseudo_rem(Poly f, const Poly& g) {
    int dg = g.degree();
    Value lg = g.leading();
    int steps = f.degree() - dg + 1;
    int done = 0;
    while (!f.is_zero() && f.degree() >= dg) {
        Value lf = f.leading();
        f = f.scaled(lg) - g.scaled(lf).shifted(f.degree() - dg);
        ++done;
    }
    for (; done < steps; ++done) f = f.scaled(lg);
    return f;
}

}  // namespace detail

/// gcd of two polynomials over any supported gcd ring, via the primitive
/// pseudo-remainder sequence. The result is associate-normalized.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (!a.ring().has_gcd()) throw DomainError("poly_gcd: no gcd over " + a.ring().name());
    require_same_ring(a.ring(), b.ring(), "poly_gcd");
    if (a.is_zero()) return detail::normalize_associate(b);
    if (b.is_zero()) return detail::normalize_associate(a);
    Value ca = detail::poly_content(a);
    Value cb = detail::poly_content(b);
    Value c = value_gcd(ca, cb);
    Poly u = detail::poly_primitive_part(a, ca);
    Poly v = detail::poly_primitive_part(b, cb);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = detail::pseudo_rem(u, v);
        u = std::move(v);
        if (r.is_zero()) {
            v = Poly(r.ring());
        } else {
            v = detail::poly_primitive_part(r, detail::poly_content(r));
        }
    }
    return detail::normalize_associate(u.scaled(c));
}

/// Long division when the divisor divides exactly; every leading-coefficient
/// division is checked, so this is sound over Z and Z[t] as well as fields.
inline std::optional<Poly> poly_divexact(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring(), "poly_divexact");
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly(a.ring());
    if (a.degree() < b.degree()) return std::nullopt;
    Poly rem = a;
    std::vector<Value> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, a.ring().zero());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        auto step = value_divexact(rem.leading(), b.leading());
        if (!step) return std::nullopt;
        int pos = rem.degree() - b.degree();
        q[static_cast<std::size_t>(pos)] = *step;
        rem = rem - b.scaled(*step).shifted(pos);
    }
    if (!rem.is_zero()) return std::nullopt;
    return Poly(a.ring(), std::move(q));
}

}  // namespace wittkit
