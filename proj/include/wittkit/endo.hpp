#pragma once

/**
 * @file endo.hpp
 * @brief Classes of endomorphisms of free modules in Almkvist normal form.
 *
 * A pair (A^n, alpha) is represented by its square matrix; its class in the
 * endomorphism K-group is the Almkvist invariant
 *
 *     class_of(alpha) = (n, det(Id + alpha r))  in  Z (+) W0(A).
 *
 * The Witt component is stored in the plus (det(Id + alpha r)) coordinate;
 * ring operations route through the convention bridge of witt.hpp. Direct
 * sums add invariants, tensor products (Kronecker) multiply them via the
 * plus-convention product.
 *
 * Natural operations over the coefficient ring Z[t] act on classes by
 * substituting t -> alpha blockwise (each entry p(t) becomes the block
 * p(alpha); the blocks commute because all are polynomials in alpha).
 * Frobenius is t -> t^n; Verschiebung is the n x n block companion. Two
 * companion sign conventions coexist:
 *
 *   - verschiebung_matrix: corner (-1)^(n+1) alpha, the variant satisfying
 *     det(Id + V_n(alpha) r) = det(Id + alpha r)|_{r -> r^n};
 *   - verschiebung_matrix_unsigned: corner +alpha, the variant satisfying
 *     det(Id - V_n(alpha) r) = det(Id - alpha r)|_{r -> r^n}, in which the
 *     classical composition law F_n V_n = n-fold sum holds on the nose for
 *     every n (with the signed corner it holds for odd n and acquires the
 *     alpha -> -alpha involution for even n).
 */

#include <string>
#include <utility>
#include <vector>

#include "witt.hpp"

namespace wittkit {

/// A pair (free module, endomorphism); the module is implicit in the size.
using EndoMatrix = Matrix;

/// Element of Z (+) W0(A): rank may be negative (formal differences), the
/// Witt part is kept in the plus coordinate.
struct EndoClass {
    Int rank;
    WittFraction witt;

    std::string to_string() const { return "rank " + rank.str() + ", witt " + witt.to_string(); }
};

inline bool class_eq(const EndoClass& a, const EndoClass& b) {
    return a.rank == b.rank && witt_eq(a.witt, b.witt);
}

inline EndoClass class_zero(const Ring& r) { return EndoClass{0, WittFraction::one(r)}; }

/// The class of (A, id): the tensor unit.
inline EndoClass class_unit(const Ring& r) { return EndoClass{1, WittFraction::unit_plus(r)}; }

/// Almkvist invariant of an endomorphism.
inline EndoClass class_of(const EndoMatrix& e) {
    e.require_square("class_of");
    return EndoClass{e.rows(), WittFraction(char_det_form(e, DetSign::plus))};
}

inline EndoClass class_neg(const EndoClass& x) { return EndoClass{-x.rank, witt_neg(x.witt)}; }

inline EndoClass dsum(const EndoClass& x, const EndoClass& y) {
    return EndoClass{x.rank + y.rank, witt_add(x.witt, y.witt)};
}

inline EndoClass class_sub(const EndoClass& x, const EndoClass& y) { return dsum(x, class_neg(y)); }

/// Ring structure: on matrix representatives this is class_of(kron(a, b)).
inline EndoClass tensor(const EndoClass& x, const EndoClass& y) {
    return EndoClass{x.rank * y.rank, witt_mul_plus(x.witt, y.witt)};
}

/// F_n on representatives: alpha -> alpha^n.
inline EndoClass frobenius_class(int n, const EndoMatrix& e) {
    if (n < 1) throw DomainError("frobenius_class: order must be >= 1");
    return class_of(matrix_power(e, n));
}

namespace detail {

inline Matrix block_companion(int n, const Matrix& alpha, bool signed_corner) {
    if (n < 1) throw DomainError("verschiebung_matrix: order must be >= 1");
    alpha.require_square("verschiebung_matrix");
    if (n == 1) return alpha;
    const Ring& R = alpha.ring();
    int m = alpha.rows();
    Matrix out(R, n * m, n * m);
    // subdiagonal identity blocks
    for (int b = 0; b + 1 < n; ++b)
        for (int i = 0; i < m; ++i) out.set((b + 1) * m + i, b * m + i, R.one());
    // top-right corner block
    bool negate = signed_corner && (n % 2 == 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Value& a = alpha.at(i, j);
            if (a.is_zero()) continue;
            out.set(i, (n - 1) * m + j, negate ? -a : a);
        }
    return out;
}

}  // namespace detail

/// The n x n block companion with corner (-1)^(n+1) alpha:
/// det(Id + V_n(alpha) r) = det(Id + alpha r) with r -> r^n.
inline Matrix verschiebung_matrix(int n, const EndoMatrix& e) {
    return detail::block_companion(n, e, /*signed_corner=*/true);
}

/// The sign-free block companion (corner +alpha), the minus-convention
/// realization: V_n(alpha)^n = alpha (+) ... (+) alpha.
inline Matrix verschiebung_matrix_unsigned(int n, const EndoMatrix& e) {
    return detail::block_companion(n, e, /*signed_corner=*/false);
}

/// The idempotent splitting: rank_part = (rank, 1) is the image of
/// [M, alpha] -> [M, 0], witt_part = (0, witt); their sum is the input.
inline std::pair<EndoClass, EndoClass> split_class(const EndoClass& x) {
    return {EndoClass{x.rank, WittFraction::one(x.witt.ring())},
            EndoClass{0, x.witt}};
}

/// Formal difference of endomorphism classes over Z[t]; acts on classes
/// over any coefficient ring through apply_operation.
struct OperationElement {
    std::vector<Matrix> pos;
    std::vector<Matrix> neg;
};

/// The coefficient ring Z[t] of operation elements.
inline Ring operations_ring() {
    static const Ring r = Ring::poly_ext(Ring::integers(), "t");
    return r;
}

/// The 1 x 1 matrix [t] over Z[t]: the universal endomorphism, class
/// (1, 1 + t r).
inline EndoMatrix universal_element() {
    Ring zt = operations_ring();
    Matrix m(zt, 1, 1);
    m.set(0, 0, zt.variable());
    return m;
}

inline OperationElement identity_op() { return OperationElement{{universal_element()}, {}}; }

/// [t^n]: the n-th Frobenius as an operation element.
inline OperationElement frobenius_op(int n) {
    if (n < 1) throw DomainError("frobenius_op: order must be >= 1");
    return OperationElement{{matrix_power(universal_element(), n)}, {}};
}

/// The n-th Verschiebung as an operation element, in either corner
/// convention (see the header comment).
inline OperationElement verschiebung_op(int n, bool signed_corner = true) {
    return OperationElement{{detail::block_companion(n, universal_element(), signed_corner)}, {}};
}

namespace detail {

/// Substitute t -> alpha entrywise: entry p(t) becomes the block p(alpha).
inline Matrix substitute_t(const Matrix& op, const Matrix& target) {
    op.require_square("apply_operation");
    target.require_square("apply_operation");
    const Ring& zt = op.ring();
    if (zt.kind() != RingKind::poly_ext || zt.base().kind() != RingKind::integers)
        throw DomainError("apply_operation: operation entries must live over Z[t]");
    const Ring& A = target.ring();
    int k = op.rows(), m = target.rows();
    // powers of the target up to the largest entry degree
    int maxdeg = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) maxdeg = std::max(maxdeg, op.at(i, j).ext_degree());
    std::vector<Matrix> powers{Matrix::identity(A, m)};
    for (int d = 1; d <= maxdeg; ++d) powers.push_back(powers.back() * target);
    Matrix out(A, k * m, k * m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Value& p = op.at(i, j);
            for (int d = 0; d <= p.ext_degree(); ++d) {
                const Value& cd = p.coeffs()[static_cast<std::size_t>(d)];
                if (cd.is_zero()) continue;
                Value a = A.from_int(cd.scalar());
                const Matrix& pw = powers[static_cast<std::size_t>(d)];
                for (int x = 0; x < m; ++x)
                    for (int y = 0; y < m; ++y) {
                        if (pw.at(x, y).is_zero()) continue;
                        out.set(i * m + x, j * m + y, out.at(i * m + x, j * m + y) + a * pw.at(x, y));
                    }
            }
        }
    return out;
}

}  // namespace detail

/// Evaluate an operation element on an endomorphism over any supported
/// ring: blockwise substitution, then the signed sum of Almkvist classes.
inline EndoClass apply_operation(const OperationElement& op, const EndoMatrix& target) {
    EndoClass acc = class_zero(target.ring());
    for (const Matrix& b : op.pos) acc = dsum(acc, class_of(detail::substitute_t(b, target)));
    for (const Matrix& b : op.neg) acc = class_sub(acc, class_of(detail::substitute_t(b, target)));
    return acc;
}

/// Composition of single-matrix operations: substitute the inner matrix for
/// t inside the outer one (both over Z[t]).
inline Matrix compose_ops(const Matrix& outer, const Matrix& inner) {
    return detail::substitute_t(outer, inner);
}

}  // namespace wittkit
