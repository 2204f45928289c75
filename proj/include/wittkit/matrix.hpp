#pragma once

/**
 * @file matrix.hpp
 * @brief Exact matrices over a Ring and the division-free kernels.
 *
 * char_det_form computes det(Id ± M r) with Berkowitz' algorithm, which uses
 * ring additions and multiplications only and is therefore valid over any
 * commutative ring, including Z/m with m composite. companion_of inverts it
 * on constant-term-1 polynomials; kron and compound realize tensor and
 * exterior powers of endomorphisms.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace wittkit {

enum class DetSign { plus, minus };

class Matrix {
  public:
    Matrix(Ring ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), ring_.zero()) {
        if (rows < 0 || cols < 0) throw DomainError("Matrix: negative dimension");
    }

    static Matrix identity(const Ring& r, int n) {
        Matrix m(r, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, r.one());
        return m;
    }

    static Matrix from_ints(const Ring& r, std::initializer_list<std::initializer_list<long>> rows) {
        int nr = static_cast<int>(rows.size());
        int nc = nr == 0 ? 0 : static_cast<int>(rows.begin()->size());
        Matrix m(r, nr, nc);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != nc) throw DomainError("Matrix::from_ints: ragged rows");
            int j = 0;
            for (long v : row) m.set(i, j++, r.from_int(v));
            ++i;
        }
        return m;
    }

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Value& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, Value v) {
        require_same_ring(v.ring(), ring_, "Matrix::set");
        e_[idx(i, j)] = std::move(v);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_ring(a.ring_, b.ring_, "Matrix::add");
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("Matrix::add: shape mismatch");
        Matrix out(a.ring_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
        return out;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix out(a.ring_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = -a.e_[k];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require_same_ring(a.ring_, b.ring_, "Matrix::mul");
        if (a.cols_ != b.rows_) throw DomainError("Matrix::mul: shape mismatch");
        Matrix out(a.ring_, a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const Value& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    out.set(i, j, out.at(i, j) + aik * b.at(k, j));
                }
            }
        }
        return out;
    }

    Matrix scaled(const Value& s) const {
        Matrix out(ring_, rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * s;
        return out;
    }

    Value trace() const {
        require_square("trace");
        Value t = ring_.zero();
        for (int i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                s += at(i, j).to_string();
                if (j + 1 < cols_) s += ",";
            }
            s += "]";
            if (i + 1 < rows_) s += ",";
        }
        return s + "]";
    }

    void require_square(const char* where) const {
        if (!is_square()) throw DomainError(std::string(where) + ": matrix is not square");
    }

  private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DomainError("Matrix: index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }

    Ring ring_;
    int rows_, cols_;
    std::vector<Value> e_;
};

inline Matrix matrix_power(const Matrix& m, int n) {
    m.require_square("matrix_power");
    if (n < 0) throw DomainError("matrix_power: negative exponent");
    Matrix acc = Matrix::identity(m.ring(), m.rows());
    Matrix base = m;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
    require_same_ring(a.ring(), b.ring(), "direct_sum");
    Matrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return out;
}

/// Kronecker product; on endomorphisms this is the tensor product, with
/// eigenvalue multiset the pairwise products.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_ring(a.ring(), b.ring(), "kron");
    Matrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Value& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    out.set(i * b.rows() + k, j * b.cols() + l, aij * b.at(k, l));
                }
        }
    return out;
}

namespace detail {

/// Machine-word Berkowitz for scalar residue rings with modulus < 2^32:
/// same recurrence, uint64 arithmetic (products of two residues fit).
inline std::vector<std::uint64_t> berkowitz_charpoly_mod(const Matrix& A, std::uint64_t m) {
    int n = A.rows();
    std::vector<std::uint64_t> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(i * n + j)] = A.at(i, j).scalar().convert_to<std::uint64_t>();
    auto neg = [m](std::uint64_t x) { return x == 0 ? 0 : m - x; };
    std::vector<std::uint64_t> p{1 % m};
    std::vector<std::uint64_t> t, v, w, q;
    for (int k = n - 1; k >= 0; --k) {
        int sz = n - k;
        t.assign(1, 1 % m);
        t.push_back(neg(e[static_cast<std::size_t>(k * n + k)]));
        if (sz >= 2) {
            v.assign(static_cast<std::size_t>(sz) - 1, 0);
            for (int i = k + 1; i < n; ++i) v[static_cast<std::size_t>(i - k - 1)] = e[static_cast<std::size_t>(i * n + k)];
            for (int j = 0; j + 2 <= sz; ++j) {
                std::uint64_t dot = 0;
                for (int i = k + 1; i < n; ++i)
                    dot = (dot + e[static_cast<std::size_t>(k * n + i)] * v[static_cast<std::size_t>(i - k - 1)]) % m;
                t.push_back(neg(dot));
                if (j + 3 <= sz) {
                    w.assign(v.size(), 0);
                    for (int i = k + 1; i < n; ++i) {
                        std::uint64_t acc = 0;
                        for (int l = k + 1; l < n; ++l)
                            acc = (acc + e[static_cast<std::size_t>(i * n + l)] * v[static_cast<std::size_t>(l - k - 1)]) % m;
                        w[static_cast<std::size_t>(i - k - 1)] = acc;
                    }
                    v.swap(w);
                }
            }
        }
        q.assign(static_cast<std::size_t>(sz) + 1, 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j <= i && j < t.size(); ++j) {
                if (i - j >= p.size()) continue;
                acc = (acc + t[j] * p[i - j]) % m;
            }
            q[i] = acc;
        }
        p = q;
    }
    return p;
}

/// Berkowitz: monic characteristic polynomial of A, coefficients returned
/// descending (p[0] = 1 is the x^n coefficient). Division-free.
inline std::vector<Value> berkowitz_charpoly(const Matrix& A) {
    A.require_square("charpoly");
    const Ring& R = A.ring();
    int n = A.rows();
    if ((R.kind() == RingKind::integers_mod || R.kind() == RingKind::prime_field) &&
        R.modulus() < (Int(1) << 32) && n > 2) {
        std::uint64_t m = R.modulus().convert_to<std::uint64_t>();
        std::vector<std::uint64_t> pm = berkowitz_charpoly_mod(A, m);
        std::vector<Value> out;
        out.reserve(pm.size());
        for (std::uint64_t x : pm) out.push_back(R.from_int(Int(x)));
        return out;
    }
    std::vector<Value> p{R.one()};
    // grow from the trailing principal 0x0 submatrix up to the full matrix
    for (int k = n - 1; k >= 0; --k) {
        int m = n - k;  // size after absorbing row/col k
        // first column of the Toeplitz factor: 1, -a, -R C, -R B C, ...
        std::vector<Value> t;
        t.reserve(static_cast<std::size_t>(m) + 1);
        t.push_back(R.one());
        t.push_back(-A.at(k, k));
        if (m >= 2) {
            std::vector<Value> v;  // runs through B^j C
            v.reserve(static_cast<std::size_t>(m) - 1);
            for (int i = k + 1; i < n; ++i) v.push_back(A.at(i, k));
            for (int j = 0; j + 2 <= m; ++j) {
                Value dot = R.zero();
                for (int i = k + 1; i < n; ++i) dot = dot + A.at(k, i) * v[static_cast<std::size_t>(i - k - 1)];
                t.push_back(-dot);
                if (j + 3 <= m) {
                    std::vector<Value> w(v.size(), R.zero());
                    for (int i = k + 1; i < n; ++i) {
                        for (int l = k + 1; l < n; ++l) {
                            const Value& a = A.at(i, l);
                            if (a.is_zero()) continue;
                            std::size_t ii = static_cast<std::size_t>(i - k - 1);
                            w[ii] = w[ii] + a * v[static_cast<std::size_t>(l - k - 1)];
                        }
                    }
                    v = std::move(w);
                }
            }
        }
        std::vector<Value> q(static_cast<std::size_t>(m) + 1, R.zero());
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (std::size_t j = 0; j <= i && j < t.size(); ++j) {
                if (i - j >= p.size()) continue;
                q[i] = q[i] + t[j] * p[i - j];
            }
        }
        p = std::move(q);
    }
    return p;
}

}  // namespace detail

/// det(Id + M r) for sign=plus, det(Id - M r) for sign=minus: the
/// constant-term-1 polynomial whose r^k coefficient is the (signed) sum of
/// principal k x k minors. Division-free, valid over any commutative ring.
inline Poly char_det_form(const Matrix& M, DetSign sign) {
    M.require_square("char_det_form");
    const Ring& R = M.ring();
    int n = M.rows();
    std::vector<Value> p = detail::berkowitz_charpoly(M);
    // det(xI - M) = sum_k (-1)^k e_k x^(n-k)  =>  e_k = (-1)^k p[k]
    std::vector<Value> c(static_cast<std::size_t>(n) + 1, R.zero());
    for (int k = 0; k <= n; ++k) {
        Value ek = (k % 2 == 0) ? p[static_cast<std::size_t>(k)] : -p[static_cast<std::size_t>(k)];
        // det(Id + sMr): coefficient of r^k is s^k e_k
        if (sign == DetSign::minus && k % 2 == 1) ek = -ek;
        c[static_cast<std::size_t>(k)] = std::move(ek);
    }
    return Poly(R, std::move(c));
}

/// Division-free determinant (top coefficient of the char form).
inline Value det(const Matrix& M) {
    M.require_square("det");
    std::vector<Value> p = detail::berkowitz_charpoly(M);
    Value d = p.back();
    return (M.rows() % 2 == 1) ? -d : d;
}

/// The d x d matrix C with char_det_form(C, sign) = f, for f with constant
/// term 1 and degree d: the companion of the sign-adjusted monic reversal.
inline Matrix companion_of(const Poly& f, DetSign sign) {
    if (!f.constant_term().is_one()) throw DomainError("companion_of: constant term must be 1");
    const Ring& R = f.ring();
    int d = f.degree();
    if (d <= 0) return Matrix(R, 0, 0);
    // char poly of C must be x^d + sum_k (-s)^k c_k x^(d-k)
    Matrix C(R, d, d);
    for (int i = 1; i < d; ++i) C.set(i, i - 1, R.one());
    for (int i = 0; i < d; ++i) {
        int k = d - i;  // g_i = (-s)^k c_k, last column holds -g_i
        Value g = f.coeff(k);
        bool flip = (sign == DetSign::plus) ? (k % 2 == 1) : false;  // (-s)^k
        if (flip) g = -g;
        C.set(i, d - 1, -g);
    }
    return C;
}

/// k-th compound: C(n,k) x C(n,k) matrix of k x k minors, rows and columns
/// indexed by sorted k-subsets in lexicographic order. Realizes the k-th
/// exterior power of the endomorphism.
inline Matrix compound(const Matrix& M, int k) {
    M.require_square("compound");
    int n = M.rows();
    if (k < 0 || k > n) throw DomainError("compound: order out of range");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(static_cast<std::size_t>(k));
    // lexicographic k-subsets of {0..n-1}
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            subsets.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur[static_cast<std::size_t>(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
    Matrix out(M.ring(), static_cast<int>(subsets.size()), static_cast<int>(subsets.size()));
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < subsets.size(); ++b) {
            Matrix minor(M.ring(), k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    minor.set(i, j, M.at(subsets[a][static_cast<std::size_t>(i)], subsets[b][static_cast<std::size_t>(j)]));
            out.set(static_cast<int>(a), static_cast<int>(b), det(minor));
        }
    return out;
}

}  // namespace wittkit
