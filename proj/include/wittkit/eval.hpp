#pragma once

/**
 * @file eval.hpp
 * @brief Lowering of parsed expressions into ring values and evaluation.
 *
 * Output is deterministic. Human mode prints ascending powers with explicit
 * signs ("1 - 6r + 4r^2"); structured mode prints line-oriented ascending
 * coefficient arrays (num/den, with a rank line for classes).
 */

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "complex.hpp"
#include "endo.hpp"
#include "expr.hpp"
#include "witt.hpp"

namespace wittkit {

enum class OutputMode { human, structured };

struct SessionConfig {
    Ring ring = Ring::integers();
    OutputMode mode = OutputMode::human;
    int ghost_depth = 8;
    std::uint64_t seed = 0;
};

/// Parse a ring selector: Z, Z/<m>, GF(<p>), Z[t], GF(<p>)[t].
inline Ring parse_ring(const std::string& s) {
    auto fail = [&]() -> Ring {
        throw DomainError("unknown ring '" + s + "' (use Z, Z/m, GF(p), Z[t], GF(p)[t])");
    };
    std::string body = s;
    bool ext = false;
    if (body.size() >= 3 && body.substr(body.size() - 3) == "[t]") {
        ext = true;
        body = body.substr(0, body.size() - 3);
    }
    Ring base = Ring::integers();
    if (body == "Z") {
        base = Ring::integers();
    } else if (body.rfind("Z/", 0) == 0) {
        std::string m = body.substr(2);
        if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos) return fail();
        base = Ring::integers_mod(Int(m));
    } else if (body.rfind("GF(", 0) == 0 && body.back() == ')') {
        std::string p = body.substr(3, body.size() - 4);
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos) return fail();
        base = Ring::prime_field(Int(p));
    } else if (body.rfind("GF", 0) == 0) {
        std::string p = body.substr(2);
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos) return fail();
        base = Ring::prime_field(Int(p));
    } else {
        return fail();
    }
    return ext ? Ring::poly_ext(base, "t") : base;
}

namespace detail {

inline Value lower_coefficient(const Ring& ring, const Int& c, int t_exp) {
    if (t_exp == 0) return ring.from_int(c);
    if (!ring.is_extension())
        throw DomainError("literal uses 't' but the ring " + ring.name() +
                          " has no variable; select a polynomial-extension ring such as Z[t]");
    std::vector<Value> coeffs(static_cast<std::size_t>(t_exp) + 1, ring.base().zero());
    coeffs[static_cast<std::size_t>(t_exp)] = ring.base().from_int(c);
    return Value::polynomial(ring, std::move(coeffs));
}

}  // namespace detail

inline Poly lower_poly(const std::vector<LitTerm>& terms, const Ring& ring) {
    int maxr = 0;
    for (const LitTerm& t : terms) maxr = std::max(maxr, t.r_exp);
    std::vector<Value> coeffs(static_cast<std::size_t>(maxr) + 1, ring.zero());
    for (const LitTerm& t : terms) {
        std::size_t i = static_cast<std::size_t>(t.r_exp);
        coeffs[i] = coeffs[i] + detail::lower_coefficient(ring, t.coeff, t.t_exp);
    }
    return Poly(ring, std::move(coeffs));
}

inline Matrix lower_matrix(const Expr& e, const Ring& ring) {
    if (e.kind != Expr::Kind::matrix) throw DomainError("expected a matrix literal");
    int rows = static_cast<int>(e.entries.size());
    int cols = rows == 0 ? 0 : static_cast<int>(e.entries[0].size());
    Matrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const auto& ts = e.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            Value v = ring.zero();
            for (const LitTerm& t : ts) {
                if (t.r_exp != 0) throw DomainError("matrix entries must be polynomials in t only");
                v = v + detail::lower_coefficient(ring, t.coeff, t.t_exp);
            }
            m.set(i, j, std::move(v));
        }
    return m;
}

/// Evaluation result: Witt element, class, ghost vector, truncation, or a
/// boolean from eq.
using EvalValue = std::variant<WittFraction, EndoClass, GhostVector, TruncatedWitt, bool>;

inline EvalValue evaluate(const Expr& e, const SessionConfig& cfg) {
    auto as_witt = [](const EvalValue& v, const char* what) -> const WittFraction& {
        if (const WittFraction* w = std::get_if<WittFraction>(&v)) return *w;
        throw DomainError(std::string(what) + " needs a Witt element operand");
    };
    switch (e.kind) {
        case Expr::Kind::poly: return WittFraction(lower_poly(e.terms, cfg.ring));
        case Expr::Kind::fraction:
            return WittFraction(lower_poly(e.children[0].terms, cfg.ring),
                                lower_poly(e.children[1].terms, cfg.ring));
        case Expr::Kind::matrix: return class_of(lower_matrix(e, cfg.ring));
        case Expr::Kind::unary: {
            EvalValue v = evaluate(e.children[0], cfg);
            switch (e.unop) {
                case UnOp::neg:
                    if (const EndoClass* c = std::get_if<EndoClass>(&v)) return class_neg(*c);
                    return witt_neg(as_witt(v, "neg"));
                case UnOp::invol: return invol(as_witt(v, "invol"));
                case UnOp::frob: return frobenius(e.param, as_witt(v, "frob"));
                case UnOp::ver: return verschiebung(e.param, as_witt(v, "ver"));
                case UnOp::lambda: return lambda_op(e.param, as_witt(v, "lambda"));
                case UnOp::ghost: return ghost(e.param, as_witt(v, "ghost"));
                case UnOp::truncate: return truncate(e.param, as_witt(v, "truncate"));
            }
            throw DomainError("evaluate: bad unary operator");
        }
        case Expr::Kind::binary: {
            EvalValue a = evaluate(e.children[0], cfg);
            EvalValue b = evaluate(e.children[1], cfg);
            const EndoClass* ca = std::get_if<EndoClass>(&a);
            const EndoClass* cb = std::get_if<EndoClass>(&b);
            if ((ca != nullptr) != (cb != nullptr) && e.binop != BinOp::eq)
                throw DomainError("cannot mix class and Witt operands");
            switch (e.binop) {
                case BinOp::add:
                    if (ca) return dsum(*ca, *cb);
                    return witt_add(as_witt(a, "add"), as_witt(b, "add"));
                case BinOp::sub:
                    if (ca) return class_sub(*ca, *cb);
                    return witt_sub(as_witt(a, "sub"), as_witt(b, "sub"));
                case BinOp::mul:
                    if (ca) return tensor(*ca, *cb);
                    return witt_mul(as_witt(a, "mul"), as_witt(b, "mul"));
                case BinOp::mulplus:
                    if (ca) return tensor(*ca, *cb);
                    return witt_mul_plus(as_witt(a, "mulplus"), as_witt(b, "mulplus"));
                case BinOp::eq:
                    if (ca && cb) return class_eq(*ca, *cb);
                    return witt_eq(as_witt(a, "eq"), as_witt(b, "eq"));
            }
            throw DomainError("evaluate: bad binary operator");
        }
    }
    throw DomainError("evaluate: bad expression");
}

// --- rendering ---------------------------------------------------------------

namespace render {

/// Human polynomial form: ascending powers, explicit signs, e.g.
/// "1 - 6r + 4r^2"; compound extension coefficients parenthesized.
inline std::string poly_human(const Poly& p, const std::string& var = "r") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const Value& c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        bool compound = cs.find('+') != std::string::npos ||
                        (cs.rfind('-') != std::string::npos && cs.rfind('-') > 0);
        std::string sep = out.empty() ? (neg && !compound ? "-" : "") : (neg && !compound ? " - " : " + ");
        if (compound) {
            cs = "(" + cs + ")";
        } else if (neg) {
            cs = cs.substr(1);
        }
        if (cs == "1" && i > 0) cs.clear();
        out += sep + cs;
        if (i >= 1) {
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string witt_human(const WittFraction& w) {
    if (w.den().is_one()) return poly_human(w.num());
    return "(" + poly_human(w.num()) + ") / (" + poly_human(w.den()) + ")";
}

/// Structured coefficient row: space-separated compact tokens, ascending.
inline std::string poly_row(const Poly& p) {
    std::string out;
    for (int i = 0; i <= std::max(p.degree(), 0); ++i) {
        if (i > 0) out += " ";
        out += p.coeff(i).to_string();
    }
    return out;
}

inline std::string values_row(const std::vector<Value>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) out += " ";
        out += vs[i].to_string();
    }
    return out;
}

inline std::string witt_structured(const WittFraction& w) {
    return "num " + poly_row(w.num()) + "\nden " + poly_row(w.den());
}

inline std::string class_human(const EndoClass& c) { return "rank " + c.rank.str() + ", witt " + witt_human(c.witt); }

inline std::string class_structured(const EndoClass& c) {
    return "rank " + c.rank.str() + "\n" + witt_structured(c.witt);
}

}  // namespace render

inline std::string render_value(const EvalValue& v, OutputMode mode) {
    if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const GhostVector* g = std::get_if<GhostVector>(&v)) return render::values_row(g->components);
    if (const TruncatedWitt* t = std::get_if<TruncatedWitt>(&v)) return render::values_row(t->c);
    if (const WittFraction* w = std::get_if<WittFraction>(&v))
        return mode == OutputMode::human ? render::witt_human(*w) : render::witt_structured(*w);
    const EndoClass& c = std::get<EndoClass>(v);
    return mode == OutputMode::human ? render::class_human(c) : render::class_structured(c);
}

/// Parse, evaluate, render: the full pipeline behind `eval`.
inline std::string evaluate_to_text(const std::string& source, const SessionConfig& cfg) {
    Expr e = parse_expression(source);
    return render_value(evaluate(e, cfg), cfg.mode);
}

// --- operation and complex text formats --------------------------------------

namespace detail {

/// Consume one balanced [...] chunk, returning it verbatim.
inline std::string take_bracket_chunk(Lexer& lx) {
    lx.skip_ws();
    if (lx.pos >= lx.src.size() || lx.src[lx.pos] != '[') throw ParseError(lx.pos, "'['");
    std::size_t start = lx.pos;
    int depth = 0;
    while (lx.pos < lx.src.size()) {
        char c = lx.src[lx.pos++];
        if (c == '[') ++depth;
        if (c == ']' && --depth == 0) return std::string(lx.src.substr(start, lx.pos - start));
    }
    throw ParseError(start, "a balanced ']'");
}

inline Matrix parse_matrix_chunk(Lexer& lx, const Ring& ring) {
    std::string chunk = take_bracket_chunk(lx);
    Expr e = parse_expression(chunk);
    if (e.kind != Expr::Kind::matrix) throw ParseError(lx.pos, "a matrix literal");
    return lower_matrix(e, ring);
}

inline OperationElement parse_operation_rec(Lexer& lx) {
    std::string w = lx.peek_word();
    if (w == "add" || w == "sub") {
        lx.consume_word(w);
        OperationElement a = parse_operation_rec(lx);
        OperationElement b = parse_operation_rec(lx);
        OperationElement out = a;
        if (w == "add") {
            out.pos.insert(out.pos.end(), b.pos.begin(), b.pos.end());
            out.neg.insert(out.neg.end(), b.neg.begin(), b.neg.end());
        } else {
            out.pos.insert(out.pos.end(), b.neg.begin(), b.neg.end());
            out.neg.insert(out.neg.end(), b.pos.begin(), b.pos.end());
        }
        return out;
    }
    if (w == "id") {
        lx.consume_word(w);
        return identity_op();
    }
    if (w == "frob" || w == "ver") {
        lx.consume_word(w);
        int n = lx.small_int("an integer order");
        if (n < 1) throw ParseError(lx.pos, "an order >= 1");
        return w == "frob" ? frobenius_op(n) : verschiebung_op(n);
    }
    if (lx.peek() == '[') return OperationElement{{parse_matrix_chunk(lx, operations_ring())}, {}};
    throw ParseError(lx.pos, "'id', 'frob n', 'ver n', 'add', 'sub', or a matrix over t");
}

}  // namespace detail

/// Operation language for `apply --op`: id | frob n | ver n | matrix over t
/// | add OP OP | sub OP OP.
inline OperationElement parse_operation(const std::string& src) {
    detail::Lexer lx{src};
    OperationElement op = detail::parse_operation_rec(lx);
    if (!lx.eof()) throw ParseError(lx.pos, "end of input");
    return op;
}

/// Complex serialization for `euler --complex`:
///   (lowest, [(rank, differential, endo), ...])
/// where the differential maps the level into the next one (shape
/// next_rank x rank) and the last level's differential is [].
inline FreeComplexEndo parse_complex(const std::string& src, const Ring& ring) {
    detail::Lexer lx{src};
    lx.expect('(', "'('");
    Int lowest = lx.integer("the lowest degree");
    lx.expect(',', "','");
    lx.expect('[', "'['");
    std::vector<Matrix> endos;
    std::vector<Matrix> raw_diffs;
    std::vector<Int> ranks;
    if (!lx.accept(']')) {
        while (true) {
            lx.expect('(', "'(' starting a level");
            ranks.push_back(lx.integer("a rank"));
            lx.expect(',', "','");
            raw_diffs.push_back(detail::parse_matrix_chunk(lx, ring));
            lx.expect(',', "','");
            endos.push_back(detail::parse_matrix_chunk(lx, ring));
            lx.expect(')', "')'");
            if (lx.accept(']')) break;
            lx.expect(',', "',' between levels");
        }
    }
    lx.expect(')', "')'");
    if (!lx.eof()) throw ParseError(lx.pos, "end of input");
    for (std::size_t i = 0; i < endos.size(); ++i) {
        if (Int(endos[i].rows()) != ranks[i])
            throw DomainError("complex level " + std::to_string(i) + ": rank " + ranks[i].str() +
                              " does not match the endomorphism size");
    }
    std::vector<Matrix> diffs;
    for (std::size_t i = 0; i + 1 < endos.size(); ++i) diffs.push_back(raw_diffs[i]);
    return FreeComplexEndo(ring, lowest.convert_to<int>(), std::move(endos), std::move(diffs));
}

}  // namespace wittkit
