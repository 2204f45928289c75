#pragma once

/**
 * @file selftest.hpp
 * @brief The acceptance battery behind `witt selftest` and the acceptance
 * test binary: one check per criterion, every comparison byte-exact.
 */

#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "complex.hpp"
#include "eval.hpp"
#include "oracle.hpp"
#include "random.hpp"

namespace wittkit {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
    double seconds = 0.0;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

constexpr std::uint64_t kDefaultSelftestSeed = 0x5eed0001u;

inline std::uint64_t selftest_seed_from_env(std::uint64_t fallback) {
    if (const char* s = std::getenv("WITTKIT_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0') return static_cast<std::uint64_t>(v);
    }
    return fallback;
}

namespace selftest_detail {

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline std::vector<Ring> axiom_rings() {
    return {Ring::integers(), Ring::prime_field(5), Ring::integers_mod(6),
            Ring::poly_ext(Ring::integers(), "t")};
}

// criterion 1: Witt ring axioms, 300 triples per ring, exact, < 60 s
inline CheckResult check_ring_axioms(Rng& rng) {
    CheckResult r{"witt ring axioms (Z, GF(5), Z/6, Z[t]; 300 triples each)"};
    Timer timer;
    for (const Ring& A : axiom_rings()) {
        WittFraction unit = WittFraction::unit_minus(A);
        WittFraction zero = WittFraction::one(A);
        for (int trial = 0; trial < 300 && r.pass; ++trial) {
            WittFraction x = rand_witt(rng, A, 3, 5);
            WittFraction y = rand_witt(rng, A, 3, 5);
            WittFraction z = rand_witt(rng, A, 3, 5);
            WittFraction xy = witt_mul(x, y);
            if (!witt_eq(xy, witt_mul(y, x))) r.fail("commutativity over " + A.name());
            if (!witt_eq(witt_mul(xy, z), witt_mul(x, witt_mul(y, z)))) r.fail("associativity over " + A.name());
            if (!witt_eq(witt_mul(x, witt_add(y, z)), witt_add(xy, witt_mul(x, z))))
                r.fail("distributivity over " + A.name());
            if (!witt_eq(witt_mul(x, unit), x)) r.fail("*-unit over " + A.name());
            if (!witt_eq(witt_mul(x, zero), zero)) r.fail("*-absorption over " + A.name());
            if (!witt_eq(witt_add(x, witt_neg(x)), zero)) r.fail("group inverse over " + A.name());
            if (!witt_eq(witt_add(x, zero), x)) r.fail("group identity over " + A.name());
        }
        if (!r.pass) break;
    }
    r.seconds = timer.seconds();
    if (r.seconds >= 60.0) r.fail("runtime budget exceeded (>= 60 s)");
    if (r.pass) r.detail = "all axioms exact";
    return r;
}

// criterion 2: (1-ar)*(1-br) = 1-abr for all a,b in [-9,9] over Z and all
// pairs over GF(7)
inline CheckResult check_generator_rule(Rng&) {
    CheckResult r{"line-element product rule (exhaustive)"};
    Timer timer;
    Ring Z = Ring::integers();
    for (long a = -9; a <= 9 && r.pass; ++a)
        for (long b = -9; b <= 9; ++b) {
            WittFraction la = WittFraction::line(Z.from_int(a));
            WittFraction lb = WittFraction::line(Z.from_int(b));
            WittFraction want = WittFraction::line(Z.from_int(a * b));
            if (!witt_eq(witt_mul(la, lb), want)) {
                r.fail("failed at a=" + std::to_string(a) + ", b=" + std::to_string(b) + " over Z");
                break;
            }
        }
    Ring F7 = Ring::prime_field(7);
    for (long a = 0; a < 7 && r.pass; ++a)
        for (long b = 0; b < 7; ++b) {
            WittFraction la = WittFraction::line(F7.from_int(a));
            WittFraction lb = WittFraction::line(F7.from_int(b));
            WittFraction want = WittFraction::line(F7.from_int(a * b));
            if (!witt_eq(witt_mul(la, lb), want)) {
                r.fail("failed at a=" + std::to_string(a) + ", b=" + std::to_string(b) + " over GF(7)");
                break;
            }
        }
    r.seconds = timer.seconds();
    if (r.pass) r.detail = "361 pairs over Z, 49 over GF(7)";
    return r;
}

// criterion 3: depth-12 ghost is a ring homomorphism, 200 pairs over Z
inline CheckResult check_ghost_homomorphism(Rng& rng) {
    CheckResult r{"ghost homomorphism (depth 12, 200 pairs over Z)"};
    Timer timer;
    Ring Z = Ring::integers();
    for (int trial = 0; trial < 200 && r.pass; ++trial) {
        WittFraction x = rand_witt(rng, Z, 3, 5);
        WittFraction y = rand_witt(rng, Z, 3, 5);
        GhostVector gx = ghost(12, x), gy = ghost(12, y);
        GhostVector gs = ghost(12, witt_add(x, y));
        GhostVector gp = ghost(12, witt_mul(x, y));
        for (int i = 0; i < 12; ++i) {
            std::size_t k = static_cast<std::size_t>(i);
            if (gs.components[k] != gx.components[k] + gy.components[k]) r.fail("additivity at depth " + std::to_string(i + 1));
            if (gp.components[k] != gx.components[k] * gy.components[k])
                r.fail("multiplicativity at depth " + std::to_string(i + 1));
        }
    }
    r.seconds = timer.seconds();
    if (r.pass) r.detail = "componentwise sum/product exact";
    return r;
}

// criterion 4: Frobenius/Verschiebung calculus, n,m <= 4, 100 elements each
inline CheckResult check_fv_calculus(Rng& rng) {
    CheckResult r{"Frobenius/Verschiebung calculus (n,m <= 4, 100 elements each)"};
    Timer timer;
    Ring Z = Ring::integers();
    auto nfold = [](const WittFraction& x, int n) {
        WittFraction acc = WittFraction::one(x.ring());
        for (int i = 0; i < n; ++i) acc = witt_add(acc, x);
        return acc;
    };
    for (int trial = 0; trial < 100 && r.pass; ++trial) {
        WittFraction x = rand_witt(rng, Z, 2, 4);
        WittFraction y = rand_witt(rng, Z, 2, 4);
        for (int n = 1; n <= 4 && r.pass; ++n) {
            WittFraction fx = frobenius(n, x);
            WittFraction vx = verschiebung(n, x);
            GhostVector gx = ghost(16, x);
            GhostVector gf = ghost(4, fx);
            GhostVector gv = ghost(16, vx);
            for (int m = 1; m <= 4; ++m) {
                if (gf.components[static_cast<std::size_t>(m - 1)] !=
                    gx.components[static_cast<std::size_t>(n * m - 1)])
                    r.fail("g_m(F_n x) = g_{nm}(x) at n=" + std::to_string(n) + ", m=" + std::to_string(m));
            }
            for (int m = 1; m <= 16; ++m) {
                Value want = Z.zero();
                if (m % n == 0) {
                    Value g = gx.components[static_cast<std::size_t>(m / n - 1)];
                    for (int i = 0; i < n; ++i) want = want + g;
                }
                if (gv.components[static_cast<std::size_t>(m - 1)] != want)
                    r.fail("g_m(V_n x) at n=" + std::to_string(n) + ", m=" + std::to_string(m));
            }
            if (!witt_eq(frobenius(n, vx), nfold(x, n))) r.fail("F_n V_n = n-fold sum at n=" + std::to_string(n));
            if (!witt_eq(witt_mul(x, verschiebung(n, y)), verschiebung(n, witt_mul(frobenius(n, x), y))))
                r.fail("projection formula at n=" + std::to_string(n));
            for (int m = 1; m <= 4; ++m) {
                if (!witt_eq(frobenius(m, frobenius(n, x)), frobenius(m * n, x)))
                    r.fail("F_m F_n = F_mn at " + std::to_string(m) + "," + std::to_string(n));
                if (!witt_eq(verschiebung(m, verschiebung(n, x)), verschiebung(m * n, x)))
                    r.fail("V_m V_n = V_mn at " + std::to_string(m) + "," + std::to_string(n));
                if (std::gcd(m, n) == 1) {
                    if (!witt_eq(frobenius(n, verschiebung(m, x)), verschiebung(m, frobenius(n, x))))
                        r.fail("F_n V_m = V_m F_n at coprime " + std::to_string(m) + "," + std::to_string(n));
                }
            }
        }
    }
    r.seconds = timer.seconds();
    if (r.pass) r.detail = "ghost laws, n-fold sum, projection formula, composition laws";
    return r;
}

// criterion 5: matrix bridge identities
inline CheckResult check_matrix_bridge(Rng& rng) {
    CheckResult r{"matrix bridge (tensor, block companion, additivity, similarity)"};
    Timer timer;
    Ring Z = Ring::integers();
    Ring F7 = Ring::prime_field(7);
    for (int trial = 0; trial < 200 && r.pass; ++trial) {
        int na = static_cast<int>(rand_range(rng, 1, 3));
        int nb = static_cast<int>(rand_range(rng, 1, 3));
        Matrix a = rand_matrix(rng, Z, na, 4);
        Matrix b = rand_matrix(rng, Z, nb, 4);
        WittFraction lhs = witt_mul_plus(WittFraction(char_det_form(a, DetSign::plus)),
                                         WittFraction(char_det_form(b, DetSign::plus)));
        if (!witt_eq(lhs, WittFraction(char_det_form(kron(a, b), DetSign::plus)))) r.fail("tensor bridge");
        int n = static_cast<int>(rand_range(rng, 1, 4));
        Poly direct = char_det_form(verschiebung_matrix(n, a), DetSign::plus);
        if (direct != char_det_form(a, DetSign::plus).substitute_power(n)) r.fail("block companion substitution");
    }
    for (const Ring& A : {Z, F7}) {
        for (int trial = 0; trial < 500 && r.pass; ++trial) {
            int na = static_cast<int>(rand_range(rng, 1, 3));
            int nb = static_cast<int>(rand_range(rng, 1, 3));
            Matrix a = rand_matrix(rng, A, na, 4);
            Matrix b = rand_matrix(rng, A, nb, 4);
            Matrix t(A, na + nb, na + nb);
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < na; ++j) t.set(i, j, a.at(i, j));
            for (int i = 0; i < nb; ++i)
                for (int j = 0; j < nb; ++j) t.set(na + i, na + j, b.at(i, j));
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < nb; ++j) t.set(i, na + j, rand_value(rng, A, 4));
            if (!class_eq(class_of(t), dsum(class_of(a), class_of(b))))
                r.fail("block-triangular additivity over " + A.name());
        }
        for (int trial = 0; trial < 500 && r.pass; ++trial) {
            int n = static_cast<int>(rand_range(rng, 1, 3));
            Matrix a = rand_matrix(rng, A, n, 4);
            auto [g, ginv] = rand_invertible(rng, A, n, A == Z ? 1 : 4);
            if (!class_eq(class_of(g * a * ginv), class_of(a))) r.fail("similarity invariance over " + A.name());
        }
    }
    r.seconds = timer.seconds();
    if (r.pass) r.detail = "all identities exact";
    return r;
}

// criterion 6: operation elements on the universal endomorphism
inline CheckResult check_universal_operations(Rng& rng) {
    CheckResult r{"natural operations on the universal element"};
    Timer timer;
    Ring zt = operations_ring();
    Value t = zt.variable();
    auto line_plus = [&](const Value& a, int rpow) {
        // 1 + a r^rpow
        std::vector<Value> cs(static_cast<std::size_t>(rpow) + 1, zt.zero());
        cs[0] = zt.one();
        cs[static_cast<std::size_t>(rpow)] = a;
        return WittFraction(Poly(zt, std::move(cs)));
    };
    // computed placement: F_n -> (1, 1 + t^n r), V_n -> (n, 1 + t r^n)
    for (int n = 1; n <= 4 && r.pass; ++n) {
        Value tn = zt.one();
        for (int i = 0; i < n; ++i) tn = tn * t;
        EndoClass f = apply_operation(frobenius_op(n), universal_element());
        if (!(f.rank == 1 && witt_eq(f.witt, line_plus(tn, 1)))) r.fail("F_" + std::to_string(n) + " element");
        EndoClass v = apply_operation(verschiebung_op(n), universal_element());
        if (!(v.rank == n && witt_eq(v.witt, line_plus(t, n)))) r.fail("V_" + std::to_string(n) + " element");
    }
    // composition laws under apply_operation
    Ring Z = Ring::integers();
    Ring F7 = Ring::prime_field(7);
    auto nfold_class = [](const EndoClass& c, int n) {
        EndoClass acc = class_zero(c.witt.ring());
        for (int i = 0; i < n; ++i) acc = dsum(acc, c);
        return acc;
    };
    for (int trial = 0; trial < 50 && r.pass; ++trial) {
        const Ring& A = trial % 2 == 0 ? Z : F7;
        Matrix alpha = rand_matrix(rng, A, static_cast<int>(rand_range(rng, 1, 2)), 3);
        for (int n = 1; n <= 4 && r.pass; ++n) {
            for (int m = 1; m <= 4; ++m) {
                Matrix fm = frobenius_op(m).pos[0];
                Matrix fn = frobenius_op(n).pos[0];
                OperationElement comp{{compose_ops(fm, fn)}, {}};
                if (!class_eq(apply_operation(comp, alpha), apply_operation(frobenius_op(m * n), alpha)))
                    r.fail("F_m o F_n = F_mn under apply_operation");
                Matrix vm = verschiebung_op(m).pos[0];
                Matrix vn = verschiebung_op(n).pos[0];
                OperationElement vcomp{{compose_ops(vm, vn)}, {}};
                if (!class_eq(apply_operation(vcomp, alpha), apply_operation(verschiebung_op(m * n), alpha)))
                    r.fail("V_m o V_n = V_mn under apply_operation");
            }
            // F_n V_n = n-fold sum: exact for every n with the unsigned
            // (minus-realization) corner; with the (-1)^(n+1) corner for odd n
            Matrix fn = frobenius_op(n).pos[0];
            Matrix vu = verschiebung_op(n, /*signed_corner=*/false).pos[0];
            OperationElement fv{{compose_ops(fn, vu)}, {}};
            if (!class_eq(apply_operation(fv, alpha), nfold_class(class_of(alpha), n)))
                r.fail("F_n V_n = n-fold sum (unsigned corner) at n=" + std::to_string(n));
            if (n % 2 == 1) {
                Matrix vs = verschiebung_op(n, /*signed_corner=*/true).pos[0];
                OperationElement fvs{{compose_ops(fn, vs)}, {}};
                if (!class_eq(apply_operation(fvs, alpha), nfold_class(class_of(alpha), n)))
                    r.fail("F_n V_n = n-fold sum (signed corner, odd n) at n=" + std::to_string(n));
            }
        }
    }
    r.seconds = timer.seconds();
    if (r.pass)
        r.detail =
            "computed placement: F_n -> (1, 1+t^n r), V_n -> (n, 1+t r^n); the stated labels "
            "(1, 1+r^n t), (n, 1+r t^n) match with the roles of the r- and t-exponents swapped; "
            "composition laws verified (F_n V_n = n-fold sum uses the unsigned corner for even n)";
    return r;
}

// criterion 7: presentation oracle certification, < 10 s
inline CheckResult check_oracle(Rng&) {
    CheckResult r{"Grothendieck-group oracle (GF(2), GF(3); dims 1, 2)"};
    Timer timer;
    struct Budget { long q; int d; };
    for (Budget b : {Budget{2, 1}, Budget{2, 2}, Budget{3, 1}, Budget{3, 2}}) {
        SimilarityClassEnum e = enumerate_classes(Int(b.q), b.d);
        PresentationGroup p = enumerate_relations(e);
        InvariantCheckReport rep = invariant_check(p, e);
        std::string tag = "(q=" + std::to_string(b.q) + ", d=" + std::to_string(b.d) + ")";
        if (!rep.quotient_free) r.fail("quotient not free at " + tag);
        if (!rep.kills_relations) r.fail("invariant does not kill relations at " + tag + ": " + rep.witness);
        if (!rep.injective) r.fail("invariant not injective on quotient at " + tag);
        if (b.q == 2 && b.d == 2) {
            if (e.classes.size() != 8) r.fail("(2,2) generator count " + std::to_string(e.classes.size()) + " != 8");
            int dim2 = 0;
            for (const auto& c : e.classes)
                if (c.dim == 2) ++dim2;
            if (dim2 != 6) r.fail("(2,2) two-dimensional class count " + std::to_string(dim2) + " != 6");
        }
    }
    r.seconds = timer.seconds();
    if (r.seconds >= 10.0) r.fail("runtime budget exceeded (>= 10 s)");
    if (r.pass) r.detail = "free quotients, relations killed, invariant complete; (2,2) has 8 generators";
    return r;
}

/// Random valid complex: direct sum of concentrated levels, commuting
/// two-term pieces, and three-term pieces with split differentials.
inline FreeComplexEndo rand_complex(Rng& rng, const Ring& A) {
    FreeComplexEndo c = FreeComplexEndo::empty(A);
    int pieces = static_cast<int>(rand_range(rng, 1, 3));
    for (int p = 0; p < pieces; ++p) {
        int deg = static_cast<int>(rand_range(rng, -2, 2));
        int kind = static_cast<int>(rand_range(rng, 0, 2));
        int n = static_cast<int>(rand_range(rng, 1, 2));
        if (kind == 0) {
            c = complex_dsum(c, FreeComplexEndo::concentrated(deg, rand_matrix(rng, A, n, 3)));
        } else if (kind == 1) {
            // d = identity, same endomorphism both levels
            Matrix e = rand_matrix(rng, A, n, 3);
            c = complex_dsum(c, FreeComplexEndo(A, deg, {e, e}, {Matrix::identity(A, n)}));
        } else {
            // n -> 2n -> n with d0 = [I;0], d1 = [0 I]
            Matrix a = rand_matrix(rng, A, n, 3);
            Matrix b = rand_matrix(rng, A, n, 3);
            Matrix mid = direct_sum(a, b);
            Matrix d0(A, 2 * n, n);
            Matrix d1(A, n, 2 * n);
            for (int i = 0; i < n; ++i) {
                d0.set(i, i, A.one());
                d1.set(i, n + i, A.one());
            }
            c = complex_dsum(c, FreeComplexEndo(A, deg, {a, mid, b}, {d0, d1}));
        }
    }
    return c;
}

// criterion 8: Euler classes of complexes
inline CheckResult check_complexes(Rng& rng) {
    CheckResult r{"Euler classes (shift, additivity, contractible invariance)"};
    Timer timer;
    Ring Z = Ring::integers();
    Ring F7 = Ring::prime_field(7);
    for (int trial = 0; trial < 100 && r.pass; ++trial) {
        const Ring& A = trial % 2 == 0 ? Z : F7;
        FreeComplexEndo c = rand_complex(rng, A);
        if (!c.validate().ok) {
            r.fail("random complex invalid: " + c.validate().message);
            break;
        }
        EndoClass e = c.euler_class();
        if (!class_eq(c.shifted(1).euler_class(), class_neg(e))) r.fail("shift negation");
        FreeComplexEndo c2 = rand_complex(rng, A);
        if (!class_eq(complex_dsum(c, c2).euler_class(), dsum(e, c2.euler_class()))) r.fail("additivity");
        Matrix extra = rand_matrix(rng, A, static_cast<int>(rand_range(rng, 1, 2)), 3);
        int k = static_cast<int>(rand_range(rng, -3, 3));
        if (!class_eq(c.add_contractible(extra, k).euler_class(), e)) r.fail("contractible invariance");
    }
    r.seconds = timer.seconds();
    if (r.pass) r.detail = "100 random complexes over Z and GF(7)";
    return r;
}

/// Random expression for the print/parse round-trip.
inline Expr rand_expr(Rng& rng, int depth) {
    auto rand_terms = [&](bool with_r) {
        std::vector<LitTerm> ts;
        ts.push_back(LitTerm{1, 0, 0});
        int extra = static_cast<int>(rand_range(rng, with_r ? 1 : 0, 3));
        for (int i = 0; i < extra; ++i) {
            LitTerm t;
            t.coeff = rand_range(rng, -9, 9);
            if (t.coeff == 0) t.coeff = 1;
            t.t_exp = static_cast<int>(rand_range(rng, 0, 2));
            t.r_exp = with_r ? static_cast<int>(rand_range(rng, 1, 4)) : static_cast<int>(rand_range(rng, 0, 2));
            ts.push_back(t);
        }
        // merge duplicates the same way the parser does
        Expr tmp = Expr::poly_lit(ts);
        return tmp;
    };
    int pick = static_cast<int>(rand_range(rng, 0, depth <= 0 ? 2 : 6));
    switch (pick) {
        case 0: return rand_terms(true);
        case 1: {
            Expr e;
            e.kind = Expr::Kind::fraction;
            e.children.push_back(rand_terms(true));
            e.children.push_back(rand_terms(true));
            return e;
        }
        case 2: {
            Expr e;
            e.kind = Expr::Kind::matrix;
            int n = static_cast<int>(rand_range(rng, 1, 2));
            for (int i = 0; i < n; ++i) {
                std::vector<std::vector<LitTerm>> row;
                for (int j = 0; j < n; ++j) {
                    std::vector<LitTerm> ts;
                    ts.push_back(LitTerm{rand_range(rng, -5, 5), static_cast<int>(rand_range(rng, 0, 1)), 0});
                    row.push_back(canonicalize_terms(ts));
                }
                e.entries.push_back(row);
            }
            return e;
        }
        case 3: {
            Expr e;
            e.kind = Expr::Kind::unary;
            int op = static_cast<int>(rand_range(rng, 0, 6));
            e.unop = static_cast<UnOp>(op);
            if (e.unop == UnOp::frob || e.unop == UnOp::ver)
                e.param = static_cast<int>(rand_range(rng, 1, 4));
            else if (e.unop == UnOp::lambda)
                e.param = static_cast<int>(rand_range(rng, 0, 3));
            else if (e.unop == UnOp::ghost || e.unop == UnOp::truncate)
                e.param = static_cast<int>(rand_range(rng, 1, 8));
            e.children.push_back(rand_expr(rng, depth - 1));
            return e;
        }
        default: {
            Expr e;
            e.kind = Expr::Kind::binary;
            e.binop = static_cast<BinOp>(rand_range(rng, 0, 4));
            e.children.push_back(rand_expr(rng, depth - 1));
            e.children.push_back(rand_expr(rng, depth - 1));
            return e;
        }
    }
}

// criterion 9, in-process part: rendering round-trip idempotence
inline CheckResult check_expression_roundtrip(Rng& rng) {
    CheckResult r{"expression print/parse round-trip (500 expressions)"};
    Timer timer;
    for (int trial = 0; trial < 500 && r.pass; ++trial) {
        Expr e = rand_expr(rng, 3);
        std::string s1 = print_expression(e);
        Expr e2 = parse_expression(s1);
        std::string s2 = print_expression(e2);
        if (s1 != s2) r.fail("not idempotent on: " + s1 + "  ->  " + s2);
    }
    r.seconds = timer.seconds();
    if (r.pass) r.detail = "print . parse . print = print";
    return r;
}

}  // namespace selftest_detail

/// The full battery; the CLI's `selftest` prints one line per result and
/// exits nonzero if any fails.
inline std::vector<CheckResult> run_acceptance_battery(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    out.push_back(selftest_detail::check_ring_axioms(rng));
    out.push_back(selftest_detail::check_generator_rule(rng));
    out.push_back(selftest_detail::check_ghost_homomorphism(rng));
    out.push_back(selftest_detail::check_fv_calculus(rng));
    out.push_back(selftest_detail::check_matrix_bridge(rng));
    out.push_back(selftest_detail::check_universal_operations(rng));
    out.push_back(selftest_detail::check_oracle(rng));
    out.push_back(selftest_detail::check_complexes(rng));
    out.push_back(selftest_detail::check_expression_roundtrip(rng));
    return out;
}

inline std::string format_battery_report(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const CheckResult& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) os << " -- " << r.detail;
        char buf[32];
        std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
        os << buf << "\n";
    }
    return os.str();
}

}  // namespace wittkit
