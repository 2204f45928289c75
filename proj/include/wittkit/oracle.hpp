#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force Grothendieck-group oracle over tiny finite fields.
 *
 * The endomorphism K-group of GF(q) at a dimension budget d is presented by
 * generators (similarity classes of matrices of size <= d, in rational
 * canonical form) and relations [extension] - [sub] - [quotient] from all
 * block-triangular matrices fitting the budget. The quotient is computed by
 * Smith normal form. Independently, each generator is mapped to its
 * Almkvist invariant (dim, det(Id + alpha r)); the Witt component embeds
 * into the free abelian group on monic irreducible polynomials (unique
 * factorization of the reversed determinant form), giving an integer
 * lattice map. The oracle certifies that this map kills every relation and
 * is injective on the quotient — i.e. that the invariant is complete at
 * this budget.
 *
 * The enumeration is exponential by nature; budgets are hard-capped at
 * q <= 3, d <= 2, with (2,3) available behind an explicit flag.
 */

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "endo.hpp"
#include "smith.hpp"

namespace wittkit {

struct SimilarityClass {
    int dim;
    std::vector<Value> invariant_factors;  ///< monic, ascending divisibility chain in GF(q)[x]
    Matrix rep;                            ///< rational canonical form over GF(q)
    std::string label;
};

struct SimilarityClassEnum {
    Int q;
    int maxdim;
    Ring field;     ///< GF(q)
    Ring polyring;  ///< GF(q)[x]
    std::vector<SimilarityClass> classes;
    std::map<std::string, int> index;

    int index_of_key(const std::string& key) const {
        auto it = index.find(key);
        if (it == index.end()) throw DomainError("oracle: similarity class not in enumeration: " + key);
        return it->second;
    }
};

namespace oracle_detail {

inline std::vector<Value> monic_polys(const Ring& P, int d) {
    const Ring base = P.base();
    Int q = base.modulus();
    std::vector<Value> out;
    std::vector<Int> digits(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<Value> coeffs;
        coeffs.reserve(static_cast<std::size_t>(d) + 1);
        for (const Int& a : digits) coeffs.push_back(base.from_int(a));
        coeffs.push_back(base.one());
        out.push_back(Value::polynomial(P, std::move(coeffs)));
        int pos = 0;
        while (pos < d) {
            digits[static_cast<std::size_t>(pos)] += 1;
            if (digits[static_cast<std::size_t>(pos)] < q) break;
            digits[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == d) break;
        if (d == 0) break;
    }
    return out;
}

inline bool divides(const Value& f, const Value& g) { return value_divexact(g, f).has_value(); }

/// Monic irreducibles of degree 1..maxdeg, by trial division against the
/// lower-degree ones.
inline std::vector<Value> irreducible_monics(const Ring& P, int maxdeg) {
    std::vector<Value> irr;
    for (int d = 1; d <= maxdeg; ++d) {
        for (Value& f : monic_polys(P, d)) {
            bool red = false;
            for (const Value& g : irr) {
                if (g.ext_degree() * 2 > d) break;
                if (divides(g, f)) {
                    red = true;
                    break;
                }
            }
            if (!red) irr.push_back(std::move(f));
        }
    }
    return irr;
}

/// Companion matrix over GF(q) of a monic polynomial in GF(q)[x].
inline Matrix monic_companion(const Value& f, const Ring& field) {
    int d = f.ext_degree();
    Matrix c(field, d, d);
    for (int i = 0; i + 1 < d; ++i) c.set(i + 1, i, field.one());
    for (int i = 0; i < d; ++i) c.set(i, d - 1, -f.coeffs()[static_cast<std::size_t>(i)]);
    return c;
}

inline std::string chain_key(const std::vector<Value>& chain, const std::string& var) {
    std::string s;
    for (const Value& f : chain) {
        if (!s.empty()) s += " | ";
        s += f.to_string();
        (void)var;
    }
    return s;
}

/// All ascending divisibility chains f_1 | ... | f_s of monic polynomials
/// with total degree n (the invariant-factor data of an n x n matrix).
inline void chains_of_total_degree(const Ring& P, int n, std::vector<std::vector<Value>>& out) {
    // pick the top factor, then recurse on divisors
    std::function<void(int, std::optional<Value>, std::vector<Value>&)> rec =
        [&](int rem, std::optional<Value> bound, std::vector<Value>& acc) {
            if (rem == 0) {
                std::vector<Value> chain(acc.rbegin(), acc.rend());  // ascending
                out.push_back(std::move(chain));
                return;
            }
            for (int k = 1; k <= rem; ++k) {
                for (const Value& f : monic_polys(P, k)) {
                    if (bound.has_value() && !divides(f, *bound)) continue;
                    acc.push_back(f);
                    rec(rem - k, f, acc);
                    acc.pop_back();
                }
            }
        };
    std::vector<Value> acc;
    rec(n, std::nullopt, acc);
}

}  // namespace oracle_detail

/// Invariant factors of M over GF(q) via determinantal divisors of xI - M:
/// d_k = gcd of all k x k minors, p_k = d_k / d_(k-1); the nonunit p_k form
/// the chain. Conjugation-invariant, so this identifies similarity classes.
inline std::vector<Value> invariant_factors_of(const Matrix& m, const Ring& polyring) {
    m.require_square("invariant_factors_of");
    int n = m.rows();
    const Ring& P = polyring;
    Matrix X(P, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Value e = Value::polynomial(P, {-m.at(i, j)});
            if (i == j) e = e + P.variable();
            X.set(i, j, std::move(e));
        }
    std::vector<Value> out;
    Value prev = P.one();
    for (int k = 1; k <= n; ++k) {
        // gcd over k x k minors
        std::vector<std::vector<int>> subs;
        std::vector<int> cur(static_cast<std::size_t>(k));
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                subs.push_back(cur);
                return;
            }
            for (int v = start; v < n; ++v) {
                cur[static_cast<std::size_t>(depth)] = v;
                rec(v + 1, depth + 1);
            }
        };
        rec(0, 0);
        Value g = P.zero();
        for (const auto& rowsel : subs)
            for (const auto& colsel : subs) {
                Matrix minor(P, k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        minor.set(i, j, X.at(rowsel[static_cast<std::size_t>(i)], colsel[static_cast<std::size_t>(j)]));
                Value d = det(minor);
                if (d.is_zero()) continue;
                g = g.is_zero() ? value_gcd(d, d) : value_gcd(g, d);
            }
        auto p = value_divexact(g, prev);
        if (!p) throw DomainError("invariant_factors_of: determinantal divisors failed to divide");
        if (p->ext_degree() >= 1) out.push_back(std::move(*p));
        prev = std::move(g);
    }
    return out;
}

/// Rational canonical forms of all similarity classes of sizes 1..d over
/// GF(q). Budget: (q,d) in {(2,1),(2,2),(3,1),(3,2)}, plus (2,3) when
/// allow_big is set (the enumeration is exponential).
inline SimilarityClassEnum enumerate_classes(const Int& q, int d, bool allow_big = false) {
    bool ok = (q == 2 || q == 3) && d >= 1 && d <= 2;
    if (q == 2 && d == 3 && allow_big) ok = true;
    if (!ok)
        throw DomainError("oracle budget: (q,d) limited to (2,1),(2,2),(3,1),(3,2); (2,3) needs the explicit flag");
    Ring field = Ring::prime_field(q);
    Ring P = Ring::poly_ext(field, "x");
    SimilarityClassEnum e{q, d, field, P, {}, {}};
    for (int n = 1; n <= d; ++n) {
        std::vector<std::vector<Value>> chains;
        oracle_detail::chains_of_total_degree(P, n, chains);
        for (auto& chain : chains) {
            Matrix rep(field, 0, 0);
            for (const Value& f : chain) rep = direct_sum(rep, oracle_detail::monic_companion(f, field));
            std::string key = oracle_detail::chain_key(chain, "x");
            SimilarityClass cls{n, std::move(chain), std::move(rep), key};
            e.index.emplace(key, static_cast<int>(e.classes.size()));
            e.classes.push_back(std::move(cls));
        }
    }
    return e;
}

struct PresentationGroup {
    int generators = 0;
    std::vector<std::vector<long>> relations;  ///< rows; columns = generators

    Matrix relation_matrix() const {
        Ring Z = Ring::integers();
        Matrix m(Z, static_cast<int>(relations.size()), generators);
        for (std::size_t i = 0; i < relations.size(); ++i)
            for (int j = 0; j < generators; ++j)
                m.set(static_cast<int>(i), j, Z.from_int(relations[i][static_cast<std::size_t>(j)]));
        return m;
    }
};

/// One relation row [T] - [sub] - [quot] per block-triangular extension
/// [[sub, gamma], [0, quot]] within the size budget, deduplicated.
inline PresentationGroup enumerate_relations(const SimilarityClassEnum& e) {
    PresentationGroup p;
    p.generators = static_cast<int>(e.classes.size());
    std::set<std::vector<long>> rows;
    Int q = e.q;
    for (std::size_t ia = 0; ia < e.classes.size(); ++ia) {
        for (std::size_t ib = 0; ib < e.classes.size(); ++ib) {
            const SimilarityClass& A = e.classes[ia];
            const SimilarityClass& B = e.classes[ib];
            int da = A.dim, db = B.dim;
            if (da + db > e.maxdim) continue;
            // every gamma in GF(q)^(da x db)
            std::vector<Int> digits(static_cast<std::size_t>(da * db), 0);
            while (true) {
                Matrix t(e.field, da + db, da + db);
                for (int i = 0; i < da; ++i)
                    for (int j = 0; j < da; ++j) t.set(i, j, A.rep.at(i, j));
                for (int i = 0; i < db; ++i)
                    for (int j = 0; j < db; ++j) t.set(da + i, da + j, B.rep.at(i, j));
                for (int i = 0; i < da; ++i)
                    for (int j = 0; j < db; ++j)
                        t.set(i, da + j, e.field.from_int(digits[static_cast<std::size_t>(i * db + j)]));
                std::string key = oracle_detail::chain_key(invariant_factors_of(t, e.polyring), "x");
                int it = e.index_of_key(key);
                std::vector<long> row(static_cast<std::size_t>(p.generators), 0);
                row[static_cast<std::size_t>(it)] += 1;
                row[ia] -= 1;
                row[ib] -= 1;
                rows.insert(std::move(row));
                // advance gamma
                std::size_t pos = 0;
                while (pos < digits.size()) {
                    digits[pos] += 1;
                    if (digits[pos] < q) break;
                    digits[pos] = 0;
                    ++pos;
                }
                if (pos == digits.size()) break;
            }
        }
    }
    p.relations.assign(rows.begin(), rows.end());
    return p;
}

inline AbelianGroupDesc quotient(const PresentationGroup& p) {
    return quotient_by_rows(p.relation_matrix(), p.generators);
}

struct InvariantCheckReport {
    bool quotient_free = false;
    bool kills_relations = false;
    bool injective = false;
    int quotient_rank = 0;
    int invariant_rank = 0;
    std::string witness;  ///< first failing relation, when any
    std::vector<std::string> generator_table;

    bool pass() const { return quotient_free && kills_relations && injective; }
};

/// Map each generator to (dim, det(Id + alpha r)) and check the map (a)
/// kills every relation row and (b) is injective on the quotient. The Witt
/// component is coordinatized by unique factorization of the reversed
/// determinant form into monic irreducibles; since the quotient is free,
/// injectivity is equivalent to rank(relations) = generators - rank(map).
inline InvariantCheckReport invariant_check(const PresentationGroup& p, const SimilarityClassEnum& e) {
    InvariantCheckReport rep;
    const Ring& P = e.polyring;
    std::vector<Value> irr = oracle_detail::irreducible_monics(P, e.maxdim);
    // invariant rows: [dim, multiplicities of irreducible factors]
    std::vector<std::vector<long>> inv;
    for (const SimilarityClass& cls : e.classes) {
        Poly f = char_det_form(cls.rep, DetSign::plus);
        int deg = f.degree() < 0 ? 0 : f.degree();
        // monic reversal x^deg f(1/x); x never divides it since lc(f) != 0
        std::vector<Value> rev;
        for (int i = deg; i >= 0; --i) rev.push_back(f.coeff(i));
        Value F = Value::polynomial(P, std::move(rev));
        std::vector<long> row(1 + irr.size(), 0);
        row[0] = cls.dim;
        std::string factors;
        for (std::size_t k = 0; k < irr.size(); ++k) {
            while (true) {
                auto qt = value_divexact(F, irr[k]);
                if (!qt) break;
                F = std::move(*qt);
                row[1 + k] += 1;
            }
            for (long c = 0; c < row[1 + k]; ++c) factors += (factors.empty() ? "" : " ") + irr[k].to_string();
        }
        if (!F.is_one()) throw DomainError("invariant_check: factorization left a nontrivial cofactor");
        rep.generator_table.push_back(cls.label + "  ->  dim " + std::to_string(cls.dim) + ", det " +
                                      f.to_string() + (factors.empty() ? "" : "  [" + factors + "]"));
        inv.push_back(std::move(row));
    }
    // (a) relations are killed
    rep.kills_relations = true;
    for (const auto& row : p.relations) {
        for (std::size_t c = 0; c < inv[0].size(); ++c) {
            long acc = 0;
            for (std::size_t g = 0; g < row.size(); ++g) acc += row[g] * inv[g][c];
            if (acc != 0) {
                rep.kills_relations = false;
                rep.witness = "relation not killed at invariant column " + std::to_string(c);
                break;
            }
        }
        if (!rep.kills_relations) break;
    }
    // (b) rank comparison
    AbelianGroupDesc quo = quotient(p);
    rep.quotient_free = quo.torsion.empty();
    rep.quotient_rank = quo.free_rank;
    Ring Z = Ring::integers();
    Matrix phi(Z, static_cast<int>(inv.size()), static_cast<int>(inv[0].size()));
    for (std::size_t i = 0; i < inv.size(); ++i)
        for (std::size_t j = 0; j < inv[i].size(); ++j)
            phi.set(static_cast<int>(i), static_cast<int>(j), Z.from_int(inv[i][j]));
    rep.invariant_rank = smith_normal_form(phi).rank;
    rep.injective = rep.kills_relations && rep.quotient_free && rep.invariant_rank == rep.quotient_rank;
    return rep;
}

/// Deterministic text report for the CLI and the acceptance suite.
inline std::string oracle_report(const Int& q, int d, bool allow_big = false) {
    SimilarityClassEnum e = enumerate_classes(q, d, allow_big);
    PresentationGroup p = enumerate_relations(e);
    AbelianGroupDesc quo = quotient(p);
    InvariantCheckReport rep = invariant_check(p, e);
    std::ostringstream os;
    os << "oracle: field GF(" << q.str() << "), dimension budget " << d << "\n";
    os << "generators (" << e.classes.size() << "):\n";
    for (const std::string& line : rep.generator_table) os << "  " << line << "\n";
    os << "relations: " << p.relations.size() << " (deduplicated)\n";
    os << "quotient: free rank " << quo.free_rank;
    if (quo.torsion.empty()) {
        os << ", no torsion\n";
    } else {
        os << ", torsion";
        for (const Int& t : quo.torsion) os << " Z/" << t.str();
        os << "\n";
    }
    os << "invariant map rank: " << rep.invariant_rank << "\n";
    os << "kills all relations: " << (rep.kills_relations ? "yes" : ("NO (" + rep.witness + ")")) << "\n";
    os << "injective on quotient: " << (rep.injective ? "yes" : "NO") << "\n";
    os << "RESULT: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace wittkit
