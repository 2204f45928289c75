#pragma once

/**
 * @file expr.hpp
 * @brief Expression syntax for the CLI: a hand-written recursive-descent
 * parser with byte-offset error reporting.
 *
 * Grammar (operators are prefix keywords; whitespace insensitive):
 *
 *   expr    := "add" expr expr | "sub" expr expr | "mul" expr expr
 *            | "mulplus" expr expr | "eq" expr expr
 *            | "neg" expr | "invol" expr
 *            | "frob" INT expr | "ver" INT expr | "lambda" INT expr
 *            | "ghost" INT expr | "truncate" INT expr
 *            | atom
 *   atom    := "(" expr ")" | poly | poly "/" poly | matrix
 *   poly    := term (("+" | "-") term)*          constant term must be 1
 *   term    := INT | [INT] [tpow] [rpow] | "(" tpoly ")" [rpow]
 *   tpow    := "t" ["^" INT]      rpow := "r" ["^" INT]
 *   matrix  := "[]" | "[" "[" entries "]" ("," "[" entries "]")* "]"
 *
 * where a parenthesized poly followed by "/" and another poly forms a
 * fraction. Matrix entries are polynomials in t. Literals written with "t"
 * are only meaningful over a polynomial-extension ring; that check happens
 * at evaluation so the parser stays ring-independent.
 */

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace wittkit {

/// One monomial c * t^te * r^re of a literal.
struct LitTerm {
    Int coeff;
    int t_exp = 0;
    int r_exp = 0;
};

enum class UnOp { neg, invol, frob, ver, lambda, ghost, truncate };
enum class BinOp { add, sub, mul, mulplus, eq };

/// Merge equal monomials, drop zeros, sort by (r_exp, t_exp): the canonical
/// term order shared by the parser and the printer.
inline std::vector<LitTerm> canonicalize_terms(std::vector<LitTerm> ts) {
    std::vector<LitTerm> out;
    for (const LitTerm& t : ts) {
        bool found = false;
        for (LitTerm& o : out) {
            if (o.t_exp == t.t_exp && o.r_exp == t.r_exp) {
                o.coeff += t.coeff;
                found = true;
                break;
            }
        }
        if (!found) out.push_back(t);
    }
    std::vector<LitTerm> nz;
    for (const LitTerm& t : out)
        if (t.coeff != 0) nz.push_back(t);
    std::sort(nz.begin(), nz.end(), [](const LitTerm& a, const LitTerm& b) {
        if (a.r_exp != b.r_exp) return a.r_exp < b.r_exp;
        return a.t_exp < b.t_exp;
    });
    return nz;
}

struct Expr {
    enum class Kind { poly, fraction, matrix, unary, binary };

    Kind kind;
    std::vector<LitTerm> terms;                     // poly
    std::vector<std::vector<std::vector<LitTerm>>> entries;  // matrix rows x cols
    UnOp unop = UnOp::neg;
    BinOp binop = BinOp::add;
    int param = 0;
    std::vector<Expr> children;  // fraction: [num, den] (both poly); ops: operands

    static Expr poly_lit(std::vector<LitTerm> ts) {
        Expr e;
        e.kind = Kind::poly;
        e.terms = canonicalize_terms(std::move(ts));
        return e;
    }
};

namespace detail {

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n' || src[pos] == '\r'))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(pos, what);
    }

    /// Lowercase keyword at the current position, if any (not consumed).
    std::string peek_word() {
        skip_ws();
        std::size_t p = pos;
        std::string w;
        while (p < src.size() && src[p] >= 'a' && src[p] <= 'z') w += src[p++];
        return w;
    }

    void consume_word(const std::string& w) { pos += w.size(); }

    bool at_digit() {
        skip_ws();
        return pos < src.size() && src[pos] >= '0' && src[pos] <= '9';
    }

    Int integer(const char* what) {
        skip_ws();
        bool neg = false;
        std::size_t p = pos;
        if (p < src.size() && (src[p] == '-' || src[p] == '+')) {
            neg = src[p] == '-';
            ++p;
        }
        if (p >= src.size() || src[p] < '0' || src[p] > '9') throw ParseError(pos, what);
        std::string digits;
        while (p < src.size() && src[p] >= '0' && src[p] <= '9') digits += src[p++];
        pos = p;
        Int v(digits);
        return neg ? Int(-v) : v;
    }

    int small_int(const char* what) {
        Int v = integer(what);
        if (v < 0 || v > 1000000) throw ParseError(pos, "a small nonnegative integer");
        return v.convert_to<int>();
    }
};

class Parser {
  public:
    explicit Parser(std::string_view src) : lx_{src} {}

    Expr parse() {
        Expr e = expression();
        if (!lx_.eof()) throw ParseError(lx_.pos, "end of input");
        return e;
    }

  private:
    Lexer lx_;

    Expr expression() {
        std::string w = lx_.peek_word();
        if (w == "add" || w == "sub" || w == "mul" || w == "mulplus" || w == "eq") {
            lx_.consume_word(w);
            Expr e;
            e.kind = Expr::Kind::binary;
            e.binop = w == "add"       ? BinOp::add
                      : w == "sub"     ? BinOp::sub
                      : w == "mul"     ? BinOp::mul
                      : w == "mulplus" ? BinOp::mulplus
                                       : BinOp::eq;
            e.children.push_back(expression());
            e.children.push_back(expression());
            return e;
        }
        if (w == "neg" || w == "invol") {
            lx_.consume_word(w);
            Expr e;
            e.kind = Expr::Kind::unary;
            e.unop = w == "neg" ? UnOp::neg : UnOp::invol;
            e.children.push_back(expression());
            return e;
        }
        if (w == "frob" || w == "ver" || w == "lambda" || w == "ghost" || w == "truncate") {
            lx_.consume_word(w);
            Expr e;
            e.kind = Expr::Kind::unary;
            e.unop = w == "frob"       ? UnOp::frob
                     : w == "ver"      ? UnOp::ver
                     : w == "lambda"   ? UnOp::lambda
                     : w == "ghost"    ? UnOp::ghost
                                       : UnOp::truncate;
            e.param = lx_.small_int("an integer parameter");
            e.children.push_back(expression());
            return e;
        }
        if (!w.empty() && w != "t" && w != "r") throw ParseError(lx_.pos, "an operator keyword, polynomial, or matrix");
        return atom();
    }

    Expr atom() {
        char c = lx_.peek();
        if (c == '[') return matrix_lit();
        Expr first;
        if (c == '(') {
            lx_.expect('(', "'('");
            first = expression();
            lx_.expect(')', "')'");
        } else {
            first = Expr::poly_lit(poly_terms(/*allow_r=*/true));
            check_constant_term(first.terms);
        }
        if (lx_.peek() == '/') {
            lx_.expect('/', "'/'");
            Expr den;
            if (lx_.peek() == '(') {
                lx_.expect('(', "'('");
                den = expression();
                lx_.expect(')', "')'");
            } else {
                den = Expr::poly_lit(poly_terms(true));
                check_constant_term(den.terms);
            }
            if (first.kind != Expr::Kind::poly || den.kind != Expr::Kind::poly)
                throw ParseError(lx_.pos, "polynomial literals on both sides of '/'");
            Expr e;
            e.kind = Expr::Kind::fraction;
            e.children.push_back(std::move(first));
            e.children.push_back(std::move(den));
            return e;
        }
        if (first.kind == Expr::Kind::poly) check_constant_term(first.terms);
        return first;
    }

    /// Constant-term-1 rule for Witt literals: the r-free part must be the
    /// integer 1.
    void check_constant_term(const std::vector<LitTerm>& ts) {
        Int c0 = 0;
        bool has_t = false;
        for (const LitTerm& t : ts) {
            if (t.r_exp != 0) continue;
            if (t.t_exp != 0) has_t = true;
            else c0 += t.coeff;
        }
        if (has_t || c0 != 1)
            throw DomainError("polynomial literal must have constant term 1");
    }

    std::vector<LitTerm> poly_terms(bool allow_r) {
        std::vector<LitTerm> out;
        bool first = true;
        while (true) {
            lx_.skip_ws();
            int sign = 1;
            if (lx_.peek() == '+' || lx_.peek() == '-') {
                sign = lx_.peek() == '-' ? -1 : 1;
                ++lx_.pos;
            } else if (!first) {
                break;
            }
            for (LitTerm t : signed_term(allow_r)) {
                t.coeff *= sign;
                out.push_back(t);
            }
            first = false;
        }
        if (first) throw ParseError(lx_.pos, "a polynomial term");
        return canonicalize_terms(std::move(out));  // may legitimately cancel to zero
    }

    /// One multiplicative term: [INT] [t-power] [r-power], or a
    /// parenthesized t-polynomial coefficient followed by an r-power.
    std::vector<LitTerm> signed_term(bool allow_r) {
        lx_.skip_ws();
        if (lx_.peek() == '(') {
            lx_.expect('(', "'('");
            std::vector<LitTerm> inner = poly_terms(/*allow_r=*/false);
            lx_.expect(')', "')'");
            int re = r_power(allow_r);
            for (LitTerm& t : inner) t.r_exp = re;
            return inner;
        }
        LitTerm t{1, 0, 0};
        bool any = false;
        if (lx_.at_digit()) {
            t.coeff = lx_.integer("an integer");
            any = true;
        }
        lx_.skip_ws();
        if (lx_.pos < lx_.src.size() && lx_.src[lx_.pos] == 't') {
            ++lx_.pos;
            t.t_exp = power_suffix();
            any = true;
        }
        int re = r_power(allow_r);
        if (re > 0) any = true;
        t.r_exp = re;
        if (!any) throw ParseError(lx_.pos, "a polynomial term");
        return {t};
    }

    int r_power(bool allow_r) {
        lx_.skip_ws();
        if (lx_.pos < lx_.src.size() && lx_.src[lx_.pos] == 'r') {
            if (!allow_r) throw ParseError(lx_.pos, "no 'r' inside a coefficient");
            ++lx_.pos;
            return power_suffix();
        }
        return 0;
    }

    int power_suffix() {
        if (lx_.pos < lx_.src.size() && lx_.src[lx_.pos] == '^') {
            ++lx_.pos;
            return lx_.small_int("an exponent");
        }
        return 1;
    }

    Expr matrix_lit() {
        lx_.expect('[', "'['");
        Expr e;
        e.kind = Expr::Kind::matrix;
        if (lx_.accept(']')) return e;  // [] is the 0 x 0 matrix
        std::size_t cols = 0;
        while (true) {
            lx_.expect('[', "'[' starting a row");
            std::vector<std::vector<LitTerm>> row;
            if (!lx_.accept(']')) {
                while (true) {
                    row.push_back(entry());
                    if (lx_.accept(']')) break;
                    lx_.expect(',', "',' or ']'");
                }
            }
            if (e.entries.empty())
                cols = row.size();
            else if (row.size() != cols)
                throw ParseError(lx_.pos, "rows of equal length");
            e.entries.push_back(std::move(row));
            if (lx_.accept(']')) break;
            lx_.expect(',', "',' or ']'");
        }
        return e;
    }

    /// Matrix entry: a polynomial in t (no r), any constant term.
    std::vector<std::vector<LitTerm>>::value_type entry() {
        lx_.skip_ws();
        return poly_terms(/*allow_r=*/false);
    }
};

}  // namespace detail

inline Expr parse_expression(std::string_view src) { return detail::Parser(src).parse(); }

// --- canonical printing -----------------------------------------------------

namespace detail {

inline std::string print_terms(const std::vector<LitTerm>& ts);

inline std::string print_term_group(const std::vector<LitTerm>& group, bool lead) {
    // group: same r_exp, sorted by t_exp
    int re = group[0].r_exp;
    std::string rpart;
    if (re >= 1) {
        rpart = "r";
        if (re >= 2) rpart += "^" + std::to_string(re);
    }
    if (group.size() > 1) {
        std::vector<LitTerm> flat;
        for (LitTerm t : group) {
            t.r_exp = 0;
            flat.push_back(t);
        }
        return std::string(lead ? "" : "+ ") + "(" + print_terms(flat) + ")" + rpart;
    }
    const LitTerm& t = group[0];
    bool neg = t.coeff < 0;
    Int mag = neg ? Int(-t.coeff) : t.coeff;
    std::string body;
    bool unit = mag == 1 && (t.t_exp > 0 || t.r_exp > 0);
    if (!unit) body += mag.str();
    if (t.t_exp >= 1) {
        body += "t";
        if (t.t_exp >= 2) body += "^" + std::to_string(t.t_exp);
    }
    body += rpart;
    if (lead) return (neg ? "-" : "") + body;
    return (neg ? "- " : "+ ") + body;
}

inline std::string print_terms(const std::vector<LitTerm>& ts) {
    if (ts.empty()) return "0";
    std::string out;
    std::size_t i = 0;
    bool lead = true;
    while (i < ts.size()) {
        std::size_t j = i;
        while (j < ts.size() && ts[j].r_exp == ts[i].r_exp) ++j;
        std::vector<LitTerm> group(ts.begin() + static_cast<long>(i), ts.begin() + static_cast<long>(j));
        if (!lead) out += " ";
        out += print_term_group(group, lead);
        lead = false;
        i = j;
    }
    return out;
}

}  // namespace detail

/// Canonical rendering; parse(print(e)) reproduces the same text.
inline std::string print_expression(const Expr& e) {
    auto wrap = [](const Expr& c) {
        std::string s = print_expression(c);
        if (c.kind == Expr::Kind::poly && c.terms.size() == 1 && c.terms[0].r_exp == 0) return s;
        if (c.kind == Expr::Kind::matrix) return s;
        return "(" + s + ")";
    };
    switch (e.kind) {
        case Expr::Kind::poly: return detail::print_terms(e.terms);
        case Expr::Kind::fraction:
            return "(" + print_expression(e.children[0]) + ")/(" + print_expression(e.children[1]) + ")";
        case Expr::Kind::matrix: {
            if (e.entries.empty()) return "[]";
            std::string s = "[";
            for (std::size_t i = 0; i < e.entries.size(); ++i) {
                s += "[";
                for (std::size_t j = 0; j < e.entries[i].size(); ++j) {
                    s += detail::print_terms(e.entries[i][j]);
                    if (j + 1 < e.entries[i].size()) s += ",";
                }
                s += "]";
                if (i + 1 < e.entries.size()) s += ",";
            }
            return s + "]";
        }
        case Expr::Kind::unary: {
            std::string kw;
            bool has_param = true;
            switch (e.unop) {
                case UnOp::neg: kw = "neg"; has_param = false; break;
                case UnOp::invol: kw = "invol"; has_param = false; break;
                case UnOp::frob: kw = "frob"; break;
                case UnOp::ver: kw = "ver"; break;
                case UnOp::lambda: kw = "lambda"; break;
                case UnOp::ghost: kw = "ghost"; break;
                case UnOp::truncate: kw = "truncate"; break;
            }
            std::string s = kw;
            if (has_param) s += " " + std::to_string(e.param);
            return s + " " + wrap(e.children[0]);
        }
        case Expr::Kind::binary: {
            std::string kw;
            switch (e.binop) {
                case BinOp::add: kw = "add"; break;
                case BinOp::sub: kw = "sub"; break;
                case BinOp::mul: kw = "mul"; break;
                case BinOp::mulplus: kw = "mulplus"; break;
                case BinOp::eq: kw = "eq"; break;
            }
            return kw + " " + wrap(e.children[0]) + " " + wrap(e.children[1]);
        }
    }
    return "";
}

}  // namespace wittkit
