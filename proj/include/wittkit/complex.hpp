#pragma once

/**
 * @file complex.hpp
 * @brief Bounded complexes of finite free modules with a commuting
 * endomorphism, and their Euler classes.
 *
 * Degrees are cohomological with an explicit lowest index a, so the class
 * of a complex concentrated in degree a is (-1)^a times the levelwise
 * class. The Euler class is the alternating sum of levelwise Almkvist
 * invariants; it is additive on degreewise direct sums, negates under
 * shift, and is unchanged by direct-summing in a cone of the identity
 * (the split-trivial perturbations generated by add_contractible).
 */

#include <string>
#include <utility>
#include <vector>

#include "endo.hpp"

namespace wittkit {

struct ComplexValidation {
    bool ok = true;
    int degree = 0;          ///< first failing degree when !ok
    std::string message;
};

class FreeComplexEndo {
  public:
    /// Levelwise endomorphisms and the differentials d_i: level i -> i+1
    /// (matrix shape rank(i+1) x rank(i)); diffs.size() == endos.size() - 1
    /// for a nonempty complex.
    FreeComplexEndo(Ring ring, int lowest, std::vector<Matrix> endos, std::vector<Matrix> diffs)
        : ring_(std::move(ring)), lowest_(lowest), endos_(std::move(endos)), diffs_(std::move(diffs)) {
        if (!endos_.empty() && diffs_.size() + 1 != endos_.size())
            throw DomainError("FreeComplexEndo: need one differential per adjacent level pair");
        if (endos_.empty() && !diffs_.empty())
            throw DomainError("FreeComplexEndo: differentials without levels");
        for (const Matrix& e : endos_) {
            require_same_ring(e.ring(), ring_, "FreeComplexEndo");
            e.require_square("FreeComplexEndo endo");
        }
        for (std::size_t i = 0; i < diffs_.size(); ++i) {
            require_same_ring(diffs_[i].ring(), ring_, "FreeComplexEndo");
            if (diffs_[i].cols() != endos_[i].rows() || diffs_[i].rows() != endos_[i + 1].rows())
                throw DomainError("FreeComplexEndo: differential shape mismatch at degree " +
                                  std::to_string(lowest_ + static_cast<int>(i)));
        }
    }

    static FreeComplexEndo empty(const Ring& r) { return FreeComplexEndo(r, 0, {}, {}); }

    /// Single level in the given degree.
    static FreeComplexEndo concentrated(int degree, const Matrix& endo) {
        return FreeComplexEndo(endo.ring(), degree, {endo}, {});
    }

    const Ring& ring() const { return ring_; }
    int lowest() const { return lowest_; }
    int levels() const { return static_cast<int>(endos_.size()); }
    int highest() const { return lowest_ + levels() - 1; }

    int rank_at(int degree) const {
        int i = degree - lowest_;
        if (i < 0 || i >= levels()) return 0;
        return endos_[static_cast<std::size_t>(i)].rows();
    }

    const Matrix& endo_at_index(int i) const { return endos_[static_cast<std::size_t>(i)]; }
    const Matrix& diff_at_index(int i) const { return diffs_[static_cast<std::size_t>(i)]; }

    /// Checks d.d = 0 and d alpha = alpha d exactly; reports the first
    /// failing degree.
    ComplexValidation validate() const {
        for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
            Matrix dd = diffs_[i + 1] * diffs_[i];
            if (dd != Matrix(ring_, dd.rows(), dd.cols()))
                return {false, lowest_ + static_cast<int>(i),
                        "d.d != 0 at degree " + std::to_string(lowest_ + static_cast<int>(i))};
        }
        for (std::size_t i = 0; i < diffs_.size(); ++i) {
            if (diffs_[i] * endos_[i] != endos_[i + 1] * diffs_[i])
                return {false, lowest_ + static_cast<int>(i),
                        "endomorphism does not commute with d at degree " +
                            std::to_string(lowest_ + static_cast<int>(i))};
        }
        return {};
    }

    FreeComplexEndo shifted(int k) const { return FreeComplexEndo(ring_, lowest_ + k, endos_, diffs_); }

    /// Alternating sum of levelwise classes: sum_i (-1)^i class_of(alpha_i).
    EndoClass euler_class() const {
        ComplexValidation v = validate();
        if (!v.ok) throw DomainError("euler_class: invalid complex: " + v.message);
        EndoClass acc = class_zero(ring_);
        for (int i = 0; i < levels(); ++i) {
            EndoClass c = class_of(endos_[static_cast<std::size_t>(i)]);
            int degree = lowest_ + i;
            bool flip = degree % 2 != 0;
            acc = flip ? class_sub(acc, c) : dsum(acc, c);
        }
        return acc;
    }

    /// Direct-sum a two-term cone of the identity carrying endomorphism e
    /// into degrees k, k+1. The Euler contribution telescopes to zero.
    FreeComplexEndo add_contractible(const Matrix& e, int k) const {
        require_same_ring(e.ring(), ring_, "add_contractible");
        e.require_square("add_contractible");
        int s = e.rows();
        int lo = levels() == 0 ? k : std::min(lowest_, k);
        int hi = levels() == 0 ? k + 1 : std::max(highest(), k + 1);
        std::vector<Matrix> endos;
        std::vector<Matrix> diffs;
        auto new_rank = [&](int deg) { return rank_at(deg) + (deg == k || deg == k + 1 ? s : 0); };
        for (int deg = lo; deg <= hi; ++deg) {
            Matrix a(ring_, new_rank(deg), new_rank(deg));
            int old = rank_at(deg);
            if (old > 0) {
                const Matrix& src = endos_[static_cast<std::size_t>(deg - lowest_)];
                for (int i = 0; i < old; ++i)
                    for (int j = 0; j < old; ++j) a.set(i, j, src.at(i, j));
            }
            if (deg == k || deg == k + 1)
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j) a.set(old + i, old + j, e.at(i, j));
            endos.push_back(std::move(a));
        }
        for (int deg = lo; deg < hi; ++deg) {
            Matrix d(ring_, new_rank(deg + 1), new_rank(deg));
            int oi = deg - lowest_;
            if (oi >= 0 && oi + 1 < levels()) {
                const Matrix& src = diffs_[static_cast<std::size_t>(oi)];
                for (int i = 0; i < src.rows(); ++i)
                    for (int j = 0; j < src.cols(); ++j) d.set(i, j, src.at(i, j));
            }
            if (deg == k)
                for (int i = 0; i < s; ++i) d.set(rank_at(deg + 1) + i, rank_at(deg) + i, ring_.one());
            diffs.push_back(std::move(d));
        }
        return FreeComplexEndo(ring_, lo, std::move(endos), std::move(diffs));
    }

  private:
    Ring ring_;
    int lowest_;
    std::vector<Matrix> endos_;
    std::vector<Matrix> diffs_;
};

/// Degreewise direct sum.
inline FreeComplexEndo complex_dsum(const FreeComplexEndo& a, const FreeComplexEndo& b) {
    require_same_ring(a.ring(), b.ring(), "complex_dsum");
    if (a.levels() == 0) return b;
    if (b.levels() == 0) return a;
    int lo = std::min(a.lowest(), b.lowest());
    int hi = std::max(a.highest(), b.highest());
    const Ring& R = a.ring();
    auto level_of = [&](const FreeComplexEndo& c, int deg) -> Matrix {
        int i = deg - c.lowest();
        if (i < 0 || i >= c.levels()) return Matrix(R, 0, 0);
        return c.endo_at_index(i);
    };
    auto diff_of = [&](const FreeComplexEndo& c, int deg) -> Matrix {
        int i = deg - c.lowest();
        if (i < 0 || i + 1 >= c.levels()) return Matrix(R, c.rank_at(deg + 1), c.rank_at(deg));
        return c.diff_at_index(i);
    };
    std::vector<Matrix> endos, diffs;
    for (int deg = lo; deg <= hi; ++deg) endos.push_back(direct_sum(level_of(a, deg), level_of(b, deg)));
    for (int deg = lo; deg < hi; ++deg) {
        Matrix da = diff_of(a, deg), db = diff_of(b, deg);
        Matrix d(R, a.rank_at(deg + 1) + b.rank_at(deg + 1), a.rank_at(deg) + b.rank_at(deg));
        for (int i = 0; i < da.rows(); ++i)
            for (int j = 0; j < da.cols(); ++j) d.set(i, j, da.at(i, j));
        for (int i = 0; i < db.rows(); ++i)
            for (int j = 0; j < db.cols(); ++j) d.set(a.rank_at(deg + 1) + i, a.rank_at(deg) + j, db.at(i, j));
        diffs.push_back(std::move(d));
    }
    return FreeComplexEndo(R, lo, std::move(endos), std::move(diffs));
}

}  // namespace wittkit
