#pragma once

/**
 * @file ring.hpp
 * @brief Pluggable exact commutative rings and their elements.
 *
 * Supported ring kinds: the integers Z, residue rings Z/m (m >= 2), prime
 * fields GF(p), and a single polynomial extension over a scalar base
 * (Z[t], GF(p)[t], ...). Elements are immutable values in canonical form:
 * residues reduced into [0, m), extension coefficients trimmed. Every
 * operation is exact.
 */

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace wittkit {

enum class RingKind { integers, integers_mod, prime_field, poly_ext };

class Value;

class Ring {
  public:
    static Ring integers() { return Ring(std::make_shared<const Node>(Node{RingKind::integers, 0, nullptr, ""})); }

    static Ring integers_mod(Int m) {
        if (m < 2) throw DomainError("integers_mod: modulus must be >= 2, got " + m.str());
        return Ring(std::make_shared<const Node>(Node{RingKind::integers_mod, std::move(m), nullptr, ""}));
    }

    static Ring prime_field(Int p) {
        if (!is_prime(p)) throw DomainError("prime_field: " + p.str() + " is not prime");
        return Ring(std::make_shared<const Node>(Node{RingKind::prime_field, std::move(p), nullptr, ""}));
    }

    /// One polynomial extension over a scalar base; deeper towers rejected.
    static Ring poly_ext(const Ring& base, std::string var = "t") {
        if (base.kind() == RingKind::poly_ext)
            throw DomainError("poly_ext: nested polynomial extensions are not supported");
        if (var.empty()) throw DomainError("poly_ext: variable name must be nonempty");
        return Ring(std::make_shared<const Node>(Node{RingKind::poly_ext, 0, base.node_, std::move(var)}));
    }

    RingKind kind() const { return node_->kind; }
    const Int& modulus() const { return node_->modulus; }
    Ring base() const { return Ring(node_->base); }
    const std::string& var() const { return node_->var; }

    bool is_extension() const { return kind() == RingKind::poly_ext; }
    bool is_field() const { return kind() == RingKind::prime_field; }

    /// Rings with a usable gcd: Z, GF(p), and their extensions. Z/m with m
    /// composite has none, so fractions over it stay unreduced.
    bool has_gcd() const {
        RingKind k = kind();
        if (k == RingKind::integers || k == RingKind::prime_field) return true;
        if (k == RingKind::poly_ext) return base().has_gcd();
        return false;
    }

    /// Z and Z[t]: n*x = 0 implies x = 0, so dividing by an integer is
    /// exact whenever it succeeds.
    bool is_torsion_free() const {
        RingKind k = kind();
        if (k == RingKind::integers) return true;
        if (k == RingKind::poly_ext) return base().is_torsion_free();
        return false;
    }

    std::string name() const {
        switch (kind()) {
            case RingKind::integers: return "Z";
            case RingKind::integers_mod: return "Z/" + modulus().str();
            case RingKind::prime_field: return "GF(" + modulus().str() + ")";
            case RingKind::poly_ext: return base().name() + "[" + var() + "]";
        }
        return "?";
    }

    bool operator==(const Ring& o) const {
        if (node_ == o.node_) return true;
        return same_structure(node_.get(), o.node_.get());
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    Value zero() const;
    Value one() const;
    Value from_int(const Int& n) const;
    /// The extension variable as an element; only for poly_ext rings.
    Value variable() const;

  private:
    struct Node {
        RingKind kind;
        Int modulus;
        std::shared_ptr<const Node> base;
        std::string var;
    };

    explicit Ring(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static bool same_structure(const Node* a, const Node* b) {
        if (a == b) return true;
        if (a == nullptr || b == nullptr) return false;
        return a->kind == b->kind && a->modulus == b->modulus && a->var == b->var &&
               same_structure(a->base.get(), b->base.get());
    }

    std::shared_ptr<const Node> node_;
};

inline void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (a != b)
        throw RingMismatchError(std::string(where) + ": operands over " + a.name() + " and " + b.name());
}

/**
 * An element of a Ring, stored canonically. Scalar kinds keep a single
 * integer (residues reduced); extension elements keep the dense coefficient
 * list over the base ring with trailing zeros trimmed.
 */
class Value {
  public:
    Value(Ring ring, Int scalar) : ring_(std::move(ring)), scalar_(std::move(scalar)) {
        switch (ring_.kind()) {
            case RingKind::integers: break;
            case RingKind::integers_mod:
            case RingKind::prime_field: scalar_ = mod_reduce(scalar_, ring_.modulus()); break;
            case RingKind::poly_ext: {
                // constant embedded from the base ring
                Value c = ring_.base().from_int(scalar_);
                scalar_ = 0;
                if (!c.is_zero()) coeffs_.push_back(std::move(c));
                break;
            }
        }
    }

    static Value polynomial(Ring ring, std::vector<Value> coeffs) {
        if (ring.kind() != RingKind::poly_ext) throw DomainError("Value::polynomial needs a polynomial extension");
        Ring base = ring.base();
        for (const Value& c : coeffs) require_same_ring(c.ring(), base, "Value::polynomial");
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
        Value v(std::move(ring));
        v.coeffs_ = std::move(coeffs);
        return v;
    }

    const Ring& ring() const { return ring_; }

    const Int& scalar() const {
        if (ring_.is_extension()) throw DomainError("Value::scalar on an extension element");
        return scalar_;
    }

    /// Dense base coefficients, lowest degree first (empty = zero).
    const std::vector<Value>& coeffs() const { return coeffs_; }

    /// Degree in the extension variable; -1 for zero or scalar kinds.
    int ext_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return ring_.is_extension() ? coeffs_.empty() : scalar_ == 0; }

    bool is_one() const {
        if (ring_.is_extension()) return coeffs_.size() == 1 && coeffs_[0].is_one();
        return scalar_ == 1;
    }

    friend bool operator==(const Value& a, const Value& b) {
        if (a.ring_ != b.ring_) return false;
        return a.ring_.is_extension() ? a.coeffs_ == b.coeffs_ : a.scalar_ == b.scalar_;
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

    friend Value operator+(const Value& a, const Value& b) {
        require_same_ring(a.ring_, b.ring_, "Value::add");
        if (!a.ring_.is_extension()) return Value(a.ring_, a.scalar_ + b.scalar_);
        std::vector<Value> out;
        const auto& x = a.coeffs_;
        const auto& y = b.coeffs_;
        std::size_t n = std::max(x.size(), y.size());
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= x.size())
                out.push_back(y[i]);
            else if (i >= y.size())
                out.push_back(x[i]);
            else
                out.push_back(x[i] + y[i]);
        }
        return polynomial(a.ring_, std::move(out));
    }

    friend Value operator-(const Value& a) {
        if (!a.ring_.is_extension()) return Value(a.ring_, -a.scalar_);
        std::vector<Value> out;
        out.reserve(a.coeffs_.size());
        for (const Value& c : a.coeffs_) out.push_back(-c);
        return polynomial(a.ring_, std::move(out));
    }

    friend Value operator-(const Value& a, const Value& b) { return a + (-b); }

    friend Value operator*(const Value& a, const Value& b) {
        require_same_ring(a.ring_, b.ring_, "Value::mul");
        if (!a.ring_.is_extension()) return Value(a.ring_, a.scalar_ * b.scalar_);
        if (a.coeffs_.empty() || b.coeffs_.empty()) return a.ring_.zero();
        Ring base = a.ring_.base();
        std::vector<Value> out(a.coeffs_.size() + b.coeffs_.size() - 1, base.zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return polynomial(a.ring_, std::move(out));
    }

    /// Compact rendering: "-3", "4", "1+2t+t^2", "0". Residues print as
    /// their canonical representative.
    std::string to_string() const {
        if (!ring_.is_extension()) return scalar_.str();
        if (coeffs_.empty()) return "0";
        std::string out;
        const std::string& v = ring_.var();
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Value& c = coeffs_[i];
            if (c.is_zero()) continue;
            Int m = c.scalar();
            bool neg = m < 0;
            Int mag = neg ? Int(-m) : m;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? "-" : "+";
            bool unit = (mag == 1) && i > 0;
            if (!unit) out += mag.str();
            if (i >= 1) {
                out += v;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

  private:
    explicit Value(Ring ring) : ring_(std::move(ring)), scalar_(0) {}

    Ring ring_;
    Int scalar_;
    std::vector<Value> coeffs_;
};

inline Value Ring::zero() const { return from_int(0); }
inline Value Ring::one() const { return from_int(1); }
inline Value Ring::from_int(const Int& n) const { return Value(*this, n); }

inline Value Ring::variable() const {
    if (kind() != RingKind::poly_ext) throw DomainError("Ring::variable: " + name() + " has no variable");
    return Value::polynomial(*this, {base().zero(), base().one()});
}

}  // namespace wittkit
