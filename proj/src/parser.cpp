// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pave {

ParseError::ParseError(int line_, int col_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ", col " +
                         std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

// ---------------------------------------------------------------------------
// Decimal literal enclosure
// ---------------------------------------------------------------------------

namespace {

// A decimal value s * 0.D * 10^exp10 with D free of leading/trailing
// zeros; D empty encodes zero.
struct DecimalForm {
    int sign = 1;
    std::string digits;
    long long exp10 = 0;
};

// Normalizes a literal already validated as [sign] digits [. digits]
// [e|E [sign] digits].
DecimalForm normalize_literal(const std::string& s) {
    DecimalForm f;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') f.sign = -1;
        ++i;
    }
    std::string digits;
    long long point_shift = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        digits.push_back(s[i++]);
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits.push_back(s[i++]);
            ++point_shift;
        }
    }
    long long e = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        e = std::strtoll(s.c_str() + i, nullptr, 10);
    }
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return f;  // zero
    std::size_t last = digits.find_last_not_of('0');
    f.digits = digits.substr(first, last - first + 1);
    // value = digits * 10^(e - point_shift) = 0.D * 10^exp10 with
    // exp10 = #digits - #leading_zeros + e - point_shift.
    f.exp10 = static_cast<long long>(digits.size()) -
              static_cast<long long>(first) + e - point_shift;
    return f;
}

// Exact decimal expansion of a finite nonzero double. Every double is a
// dyadic rational, so a high-precision %e rendering is exact once trailing
// zeros are stripped (767 significant digits suffice; we ask for more).
DecimalForm exact_form(double v) {
    DecimalForm f;
    if (v == 0.0) return f;
    if (v < 0.0) {
        f.sign = -1;
        v = -v;
    }
    char buf[1200];
    std::snprintf(buf, sizeof buf, "%.1100e", v);
    std::string s(buf);
    std::size_t epos = s.find('e');
    std::string mant = s.substr(0, epos);
    long long ex = std::strtoll(s.c_str() + epos + 1, nullptr, 10);
    mant.erase(mant.find('.'), 1);  // "d.ddd" -> "dddd", value 0.dddd*10^(ex+1)
    std::size_t last = mant.find_last_not_of('0');
    f.digits = mant.substr(0, last + 1);
    f.exp10 = ex + 1;
    return f;
}

// Compares two normalized decimal forms as real numbers.
int compare_forms(const DecimalForm& a, const DecimalForm& b) {
    bool az = a.digits.empty(), bz = b.digits.empty();
    if (az && bz) return 0;
    if (az) return b.sign > 0 ? -1 : 1;
    if (bz) return a.sign > 0 ? 1 : -1;
    if (a.sign != b.sign) return a.sign > b.sign ? 1 : -1;
    int mag;  // compare |a| vs |b|
    if (a.exp10 != b.exp10) {
        mag = a.exp10 > b.exp10 ? 1 : -1;
    } else {
        std::size_t n = std::max(a.digits.size(), b.digits.size());
        std::string da = a.digits, db = b.digits;
        da.resize(n, '0');
        db.resize(n, '0');
        mag = da.compare(db);
        mag = mag > 0 ? 1 : (mag < 0 ? -1 : 0);
    }
    return a.sign > 0 ? mag : -mag;
}

bool valid_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t int_digits = 0, frac_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++int_digits;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++frac_digits;
        }
    }
    if (int_digits + frac_digits == 0) return false;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++exp_digits;
        }
        if (exp_digits == 0) return false;
    }
    return i == s.size();
}

}  // namespace

Interval enclose_decimal(const std::string& literal) {
    if (!valid_literal(literal))
        throw std::invalid_argument("malformed numeric literal '" + literal + "'");
    errno = 0;
    char* end = nullptr;
    double d = std::strtod(literal.c_str(), &end);
    if (end != literal.c_str() + literal.size())
        throw std::invalid_argument("malformed numeric literal '" + literal + "'");
    if (!std::isfinite(d))
        throw std::invalid_argument("numeric literal '" + literal +
                                    "' overflows the double range");
    DecimalForm x = normalize_literal(literal);
    if (x.digits.empty()) return Interval(0.0, 0.0);
    int cmp = compare_forms(x, exact_form(d));
    if (cmp == 0) return Interval(d, d);
    if (cmp > 0) return Interval(d, std::nextafter(d, HUGE_VAL));
    return Interval(std::nextafter(d, -HUGE_VAL), d);
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
    KwVar, KwCon, KwIn, KwSqrt, Ident, Number,
    LBracket, RBracket, LParen, RParen, Comma, Semi,
    Plus, Minus, Star, Slash, Caret, Eq, Lt, End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

const char* tok_name(Tok t) {
    switch (t) {
    case Tok::KwVar: return "'var'";
    case Tok::KwCon: return "'con'";
    case Tok::KwIn: return "'in'";
    case Tok::KwSqrt: return "'sqrt'";
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::Eq: return "'='";
    case Tok::Lt: return "'<'";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> toks;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t, int l, int c) {
        toks.push_back(Token{k, std::move(t), l, c});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        int tl = line, tc = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) ||
                    text[i] == '_')) {
                word.push_back(text[i++]);
                ++col;
            }
            Tok k = word == "var"    ? Tok::KwVar
                    : word == "con"  ? Tok::KwCon
                    : word == "in"   ? Tok::KwIn
                    : word == "sqrt" ? Tok::KwSqrt
                                     : Tok::Ident;
            push(k, std::move(word), tl, tc);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::string num;
            auto digits = [&]() {
                while (i < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[i]))) {
                    num.push_back(text[i++]);
                    ++col;
                }
            };
            digits();
            if (i < text.size() && text[i] == '.') {
                num.push_back(text[i++]);
                ++col;
                digits();
            }
            if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t save = i;
                int save_col = col;
                num.push_back(text[i++]);
                ++col;
                if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                    num.push_back(text[i++]);
                    ++col;
                }
                if (i < text.size() &&
                    std::isdigit(static_cast<unsigned char>(text[i]))) {
                    digits();
                } else {  // not an exponent after all (e.g. "2e" or "2*el")
                    num.erase(num.size() - (i - save));
                    i = save;
                    col = save_col;
                }
            }
            push(Tok::Number, std::move(num), tl, tc);
            continue;
        }
        Tok k;
        switch (c) {
        case '[': k = Tok::LBracket; break;
        case ']': k = Tok::RBracket; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        case ';': k = Tok::Semi; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '=': k = Tok::Eq; break;
        case '<': k = Tok::Lt; break;
        default:
            throw ParseError(line, col,
                             std::string("unexpected character '") + c + "'");
        }
        push(k, std::string(1, c), tl, tc);
        ++col;
        ++i;
    }
    toks.push_back(Token{Tok::End, "", line, col});
    return toks;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Problem run(const std::string& name) {
        Problem p;
        p.name = name;
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::KwVar) {
                var_decl(p);
            } else if (peek().kind == Tok::KwCon) {
                con_decl(p);
            } else {
                fail(peek(), "expected 'var' or 'con'");
            }
        }
        if (p.var_names.empty())
            throw ParseError(1, 1, "no variables declared");
        p.finalize();
        return p;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::unordered_map<std::string, int> vars_;

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.col, msg);
    }

    Token expect(Tok k) {
        if (peek().kind != k)
            fail(peek(), std::string("expected ") + tok_name(k) + ", found " +
                             tok_name(peek().kind));
        return next();
    }

    Interval literal(const Token& t) {
        try {
            return enclose_decimal(t.text);
        } catch (const std::invalid_argument& e) {
            fail(t, e.what());
        }
    }

    void var_decl(Problem& p) {
        expect(Tok::KwVar);
        Token name = expect(Tok::Ident);
        if (vars_.count(name.text))
            fail(name, "duplicate variable '" + name.text + "'");
        expect(Tok::KwIn);
        expect(Tok::LBracket);
        Interval lo_enc = signed_literal();
        expect(Tok::Comma);
        Interval hi_enc = signed_literal();
        Token rb = expect(Tok::RBracket);
        expect(Tok::Semi);
        if (lo_enc.lo > hi_enc.hi)
            fail(rb, "empty domain for '" + name.text + "' (lo > hi)");
        vars_[name.text] = static_cast<int>(p.var_names.size());
        p.var_names.push_back(name.text);
        // Outward enclosure of the stated closed interval.
        p.domain.comps.push_back(Interval(lo_enc.lo, hi_enc.hi));
    }

    // A possibly signed literal used as a domain bound.
    Interval signed_literal() {
        int sign = 1;
        while (peek().kind == Tok::Minus || peek().kind == Tok::Plus)
            sign *= next().kind == Tok::Minus ? -1 : 1;
        Token t = expect(Tok::Number);
        Interval enc = literal(t);
        return sign > 0 ? enc : neg(enc);
    }

    void con_decl(Problem& p) {
        expect(Tok::KwCon);
        ExprPtr body = expression();
        Rel rel;
        if (peek().kind == Tok::Eq) {
            next();
            rel = Rel::EqZero;
        } else if (peek().kind == Tok::Lt) {
            next();
            rel = Rel::LtZero;
        } else {
            fail(peek(), "expected '=' or '<' after constraint expression");
        }
        Token zero = expect(Tok::Number);
        Interval z = literal(zero);
        if (!(z.lo == 0.0 && z.hi == 0.0))
            fail(zero, "constraint right-hand side must be 0");
        expect(Tok::Semi);
        p.constraints.push_back(Constraint{std::move(body), rel, {}});
    }

    ExprPtr expression() {
        ExprPtr e = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Tok op = next().kind;
            ExprPtr rhs = term();
            e = op == Tok::Plus ? e + rhs : e - rhs;
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            Tok op = next().kind;
            ExprPtr rhs = factor();
            e = op == Tok::Star ? e * rhs : e / rhs;
        }
        return e;
    }

    ExprPtr factor() {
        if (peek().kind == Tok::Minus) {
            next();
            return -factor();
        }
        if (peek().kind == Tok::Plus) {
            next();
            return factor();
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (peek().kind == Tok::Caret) {
            next();
            Token k = expect(Tok::Number);
            for (char c : k.text)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    fail(k, "exponent must be a non-negative integer literal");
            long v = std::strtol(k.text.c_str(), nullptr, 10);
            if (v > 1000) fail(k, "exponent too large");
            return pow(base, static_cast<int>(v));
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Number: {
            Token n = next();
            return constant(literal(n), n.text);
        }
        case Tok::Ident: {
            Token n = next();
            auto it = vars_.find(n.text);
            if (it == vars_.end())
                fail(n, "unknown identifier '" + n.text + "'");
            return variable(it->second);
        }
        case Tok::KwSqrt: {
            next();
            expect(Tok::LParen);
            ExprPtr inner = expression();
            expect(Tok::RParen);
            return sqrt(inner);
        }
        case Tok::LParen: {
            next();
            ExprPtr inner = expression();
            expect(Tok::RParen);
            return inner;
        }
        default:
            fail(t, std::string("expected number, variable, 'sqrt' or '(', found ") +
                        tok_name(t.kind));
        }
    }
};

}  // namespace

Problem parse_problem(const std::string& text, const std::string& name) {
    return Parser(text).run(name);
}

Problem parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error reading '" + path + "'");
    return parse_problem(ss.str(), std::filesystem::path(path).stem().string());
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// Exact decimal rendering of a double: enclose_decimal() of the result is
// the point interval [v, v], so printing and re-parsing never widens.
std::string exact_decimal(double v) {
    char buf[1200];
    std::snprintf(buf, sizeof buf, "%.1100g", v);
    return std::string(buf);
}

// Precedence: additive 1, multiplicative 2, unary minus 3, power 4, atom 5.
int precedence(const Expr& e) {
    switch (e.op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    default: return 5;
    }
}

void render(const Expr& e, const std::vector<std::string>& names, int ctx,
            std::string& out) {
    int prec = precedence(e);
    std::string s;
    switch (e.op) {
    case Op::Const:
        if (!e.lexeme.empty()) {
            s = e.lexeme;
        } else {
            if (e.cval.lo != e.cval.hi)
                throw std::logic_error(
                    "cannot print a non-point constant without its literal");
            double v = e.cval.lo;
            if (v < 0.0) {
                s = "-" + exact_decimal(-v);
                prec = 3;  // behaves like unary minus
            } else {
                s = exact_decimal(v);
            }
        }
        break;
    case Op::Var:
        s = names.at(static_cast<std::size_t>(e.var));
        break;
    case Op::Neg:
        s = "-";
        render(*e.a, names, 4, s);
        break;
    case Op::Sqrt:
        s = "sqrt(";
        render(*e.a, names, 0, s);
        s += ")";
        prec = 5;
        break;
    case Op::Pow:
        render(*e.a, names, 5, s);
        s += "^" + std::to_string(e.k);
        break;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
        const char* sym = e.op == Op::Add   ? " + "
                          : e.op == Op::Sub ? " - "
                          : e.op == Op::Mul ? " * "
                                            : " / ";
        render(*e.a, names, prec, s);
        s += sym;
        render(*e.b, names, prec + 1, s);
        break;
    }
    }
    if (prec < ctx)
        out += "(" + s + ")";
    else
        out += s;
}

}  // namespace

std::string print_problem(const Problem& p) {
    std::string out;
    for (std::size_t i = 0; i < p.var_names.size(); ++i) {
        const Interval& d = p.domain[static_cast<int>(i)];
        out += "var " + p.var_names[i] + " in [" + exact_decimal(d.lo) + ", " +
               exact_decimal(d.hi) + "];\n";
    }
    for (const Constraint& c : p.constraints) {
        out += "con ";
        render(*c.body, p.var_names, 0, out);
        out += c.rel == Rel::EqZero ? " = 0;\n" : " < 0;\n";
    }
    return out;
}

}  // namespace pave
