#pragma once

/**
 * @file smith.hpp
 * @brief Smith normal form of integer matrices, with recorded transforms.
 *
 * U * M * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...
 * Exact integer arithmetic throughout; rectangular input allowed.
 */

#include <utility>
#include <vector>

#include "matrix.hpp"

namespace wittkit {

struct SmithResult {
    std::vector<Int> factors;  ///< nonzero invariant factors d_1 | d_2 | ...
    int rank = 0;
    Matrix u;  ///< rows x rows, unimodular
    Matrix v;  ///< cols x cols, unimodular
    Matrix d;  ///< rows x cols diagonal, d.at(i,i) = factors[i] for i < rank
};

inline SmithResult smith_normal_form(const Matrix& m_in) {
    if (m_in.ring().kind() != RingKind::integers)
        throw DomainError("smith_normal_form: matrix must be over the integers, got " + m_in.ring().name());
    const Ring Z = m_in.ring();
    int rows = m_in.rows(), cols = m_in.cols();
    Matrix d = m_in;
    Matrix u = Matrix::identity(Z, rows);
    Matrix v = Matrix::identity(Z, cols);

    auto val = [&](int i, int j) -> Int { return d.at(i, j).scalar(); };
    auto swap_rows = [&](Matrix& a, int i, int j) {
        for (int c = 0; c < a.cols(); ++c) {
            Value t = a.at(i, c);
            a.set(i, c, a.at(j, c));
            a.set(j, c, t);
        }
    };
    auto swap_cols = [&](Matrix& a, int i, int j) {
        for (int r = 0; r < a.rows(); ++r) {
            Value t = a.at(r, i);
            a.set(r, i, a.at(r, j));
            a.set(r, j, t);
        }
    };
    auto add_row = [&](Matrix& a, int dst, int src, const Int& f) {
        Value fv = Z.from_int(f);
        for (int c = 0; c < a.cols(); ++c) a.set(dst, c, a.at(dst, c) + fv * a.at(src, c));
    };
    auto add_col = [&](Matrix& a, int dst, int src, const Int& f) {
        Value fv = Z.from_int(f);
        for (int r = 0; r < a.rows(); ++r) a.set(r, dst, a.at(r, dst) + fv * a.at(r, src));
    };
    auto negate_row = [&](Matrix& a, int i) {
        for (int c = 0; c < a.cols(); ++c) a.set(i, c, -a.at(i, c));
    };

    int t = 0;
    int lim = std::min(rows, cols);
    while (t < lim) {
        // smallest-magnitude nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                Int a = val(i, j);
                if (a == 0) continue;
                Int mag = a < 0 ? Int(-a) : a;
                if (pi < 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // block is zero
        if (pi != t) { swap_rows(d, t, pi); swap_rows(u, t, pi); }
        if (pj != t) { swap_cols(d, t, pj); swap_cols(v, t, pj); }

        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = t + 1; i < rows; ++i) {
                if (val(i, t) == 0) continue;
                Int q = val(i, t) / val(t, t);
                add_row(d, i, t, -q);
                add_row(u, i, t, -q);
                if (val(i, t) != 0) {  // remainder became the smaller pivot
                    swap_rows(d, t, i);
                    swap_rows(u, t, i);
                    changed = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (val(t, j) == 0) continue;
                Int q = val(t, j) / val(t, t);
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
                if (val(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    changed = true;
                }
            }
        }
        // enforce divisibility d_t | everything below
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i)
            for (int j = t + 1; j < cols && !redo; ++j) {
                if (val(i, j) % val(t, t) != 0) {
                    add_row(d, t, i, 1);
                    add_row(u, t, i, 1);
                    redo = true;
                }
            }
        if (redo) continue;
        if (val(t, t) < 0) { negate_row(d, t); negate_row(u, t); }
        ++t;
    }

    SmithResult out{std::vector<Int>{}, t, std::move(u), std::move(v), std::move(d)};
    for (int i = 0; i < t; ++i) out.factors.push_back(out.d.at(i, i).scalar());
    return out;
}

/// Cokernel of M read as a map into Z^rows: invariant factors > 1 give the
/// torsion, rows - rank the free part ("zero n x m matrix -> Z^n").
struct AbelianGroupDesc {
    std::vector<Int> torsion;  ///< invariant factors > 1
    int free_rank = 0;
};

inline AbelianGroupDesc cokernel(const Matrix& m) {
    SmithResult s = smith_normal_form(m);
    AbelianGroupDesc g;
    g.free_rank = m.rows() - s.rank;
    for (const Int& f : s.factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

/// Quotient Z^generators / (row span of relations); relation matrix rows are
/// relations, columns are generators.
inline AbelianGroupDesc quotient_by_rows(const Matrix& relations, int generators) {
    if (relations.cols() != generators) throw DomainError("quotient_by_rows: column count != generator count");
    SmithResult s = smith_normal_form(relations);
    AbelianGroupDesc g;
    g.free_rank = generators - s.rank;
    for (const Int& f : s.factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

}  // namespace wittkit
