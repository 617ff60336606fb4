#pragma once

// Text front end shared by the CLI and the serialization layer.
//
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := '-' factor | primary
//   primary  := atom ('^' exponent)?
//   atom     := INTEGER | NAME | '(' expr ')'
//   exponent := INTEGER | '-' INTEGER | '(' '-'? INTEGER ')'
//
// NAME covers the parameters p q l u everywhere; the generator set depends on
// the algebra: x y s t on A, plus w on A[w], x y s t z (Laurent powers on
// units) on the localization, and z y s t on the torus.

#include <cctype>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gwa/localization.hpp"

namespace gwa {

namespace parsing {

enum class TokKind { Integer, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    Int value;  // for Integer
    int line = 1, col = 1;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](TokKind k, std::string text, Int v = 0) {
        out.push_back(Token{k, std::move(text), std::move(v), line, col});
    };
    while (i < src.size()) {
        const char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            const std::string digits = src.substr(i, j - i);
            push(TokKind::Integer, digits, Int(digits));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            push(TokKind::Name, src.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        switch (ch) {
            case '+': push(TokKind::Plus, "+"); break;
            case '-': push(TokKind::Minus, "-"); break;
            case '*': push(TokKind::Star, "*"); break;
            case '/': push(TokKind::Slash, "/"); break;
            case '^': push(TokKind::Caret, "^"); break;
            case '(': push(TokKind::LParen, "("); break;
            case ')': push(TokKind::RParen, ")"); break;
            default:
                throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
        }
        ++col;
        ++i;
    }
    out.push_back(Token{TokKind::End, "", 0, line, col});
    return out;
}

/// Adapter concept: provides the element type, generator lookup and the
/// element operations the evaluator needs.
template <typename Adapter>
class Parser {
  public:
    using Elem = typename Adapter::Elem;
    using Value = std::variant<ParamScalar, Elem>;

    Parser(const Adapter& adapter, const std::string& src)
        : adapter_(adapter), tokens_(tokenize(src)) {}

    Value parse() {
        Value v = parse_expr();
        expect(TokKind::End, "end of input");
        return v;
    }

    Elem parse_element() { return adapter_.promote(parse()); }

    ParamScalar parse_scalar() {
        Value v = parse();
        if (!std::holds_alternative<ParamScalar>(v))
            throw ParseError(1, 1, "expected a scalar expression");
        return std::get<ParamScalar>(v);
    }

  private:
    const Token& cur() const { return tokens_[pos_]; }
    void advance() { ++pos_; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = cur();
        const std::string tok = t.kind == TokKind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.col, msg + " (at " + tok + ")");
    }
    void expect(TokKind k, const char* what) {
        if (cur().kind != k) fail(std::string("expected ") + what);
        advance();
    }

    Value parse_expr() {
        Value acc = parse_term();
        while (cur().kind == TokKind::Plus || cur().kind == TokKind::Minus) {
            const bool minus = cur().kind == TokKind::Minus;
            advance();
            Value rhs = parse_term();
            acc = minus ? sub(acc, rhs) : add(acc, rhs);
        }
        return acc;
    }

    Value parse_term() {
        Value acc = parse_factor();
        while (cur().kind == TokKind::Star || cur().kind == TokKind::Slash) {
            const bool division = cur().kind == TokKind::Slash;
            advance();
            Value rhs = parse_factor();
            acc = division ? div(acc, rhs) : mul(acc, rhs);
        }
        return acc;
    }

    Value parse_factor() {
        if (cur().kind == TokKind::Minus) {
            advance();
            return neg(parse_factor());
        }
        return parse_primary();
    }

    Value parse_primary() {
        Value base = parse_atom();
        if (cur().kind != TokKind::Caret) return base;
        advance();
        const long e = parse_exponent();
        if (std::holds_alternative<ParamScalar>(base)) return Value(std::get<ParamScalar>(base).pow(e));
        const Token at = cur();
        try {
            return Value(adapter_.power(std::get<Elem>(base), e));
        } catch (const Error& err) {
            throw ParseError(at.line, at.col, err.what());
        }
    }

    long parse_exponent() {
        bool negated = false;
        bool parens = false;
        if (cur().kind == TokKind::LParen) {
            parens = true;
            advance();
        }
        if (cur().kind == TokKind::Minus) {
            negated = true;
            advance();
        }
        if (cur().kind != TokKind::Integer) fail("expected an integer exponent");
        const long v = cur().value.template convert_to<long>();
        advance();
        if (parens) expect(TokKind::RParen, "')'");
        return negated ? -v : v;
    }

    Value parse_atom() {
        const Token t = cur();
        switch (t.kind) {
            case TokKind::Integer:
                advance();
                return Value(ParamScalar(t.value));
            case TokKind::Name: {
                advance();
                if (t.text == "p") return Value(ParamScalar::p());
                if (t.text == "q") return Value(ParamScalar::q());
                if (t.text == "l") return Value(ParamScalar::lam());
                if (t.text == "u") return Value(ParamScalar::mu());
                auto elem = adapter_.generator(t.text);
                if (!elem) throw ParseError(t.line, t.col, "unknown symbol '" + t.text + "'");
                return Value(*elem);
            }
            case TokKind::LParen: {
                advance();
                Value v = parse_expr();
                expect(TokKind::RParen, "')'");
                return v;
            }
            default:
                fail("expected a value");
        }
    }

    // mixed scalar/element arithmetic with promotion
    Value add(const Value& a, const Value& b) { return combine(a, b, '+'); }
    Value sub(const Value& a, const Value& b) { return combine(a, b, '-'); }
    Value mul(const Value& a, const Value& b) { return combine(a, b, '*'); }

    Value combine(const Value& a, const Value& b, char op) {
        if (std::holds_alternative<ParamScalar>(a) && std::holds_alternative<ParamScalar>(b)) {
            const ParamScalar& x = std::get<ParamScalar>(a);
            const ParamScalar& y = std::get<ParamScalar>(b);
            if (op == '+') return Value(x + y);
            if (op == '-') return Value(x - y);
            return Value(x * y);
        }
        if (op == '*') {
            if (std::holds_alternative<ParamScalar>(a))
                return Value(adapter_.scale(std::get<ParamScalar>(a), std::get<Elem>(b)));
            if (std::holds_alternative<ParamScalar>(b))
                return Value(adapter_.scale(std::get<ParamScalar>(b), std::get<Elem>(a)));
            return Value(adapter_.multiply(std::get<Elem>(a), std::get<Elem>(b)));
        }
        const Elem x = adapter_.promote(a);
        const Elem y = adapter_.promote(b);
        return Value(op == '+' ? adapter_.addition(x, y) : adapter_.addition(x, adapter_.negate(y)));
    }

    Value neg(const Value& v) {
        if (std::holds_alternative<ParamScalar>(v)) return Value(-std::get<ParamScalar>(v));
        return Value(adapter_.negate(std::get<Elem>(v)));
    }

    Value div(const Value& a, const Value& b) {
        const Token at = cur();
        if (std::holds_alternative<ParamScalar>(b)) {
            const ParamScalar& y = std::get<ParamScalar>(b);
            if (y.is_zero()) throw ParseError(at.line, at.col, "division by zero");
            if (std::holds_alternative<ParamScalar>(a)) return Value(std::get<ParamScalar>(a) / y);
            return Value(adapter_.scale(y.inverse(), std::get<Elem>(a)));
        }
        try {
            const Elem inv = adapter_.invert(std::get<Elem>(b));
            if (std::holds_alternative<ParamScalar>(a)) return Value(adapter_.scale(std::get<ParamScalar>(a), inv));
            return Value(adapter_.multiply(std::get<Elem>(a), inv));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& err) {
            throw ParseError(at.line, at.col, std::string("cannot divide: ") + err.what());
        }
    }

    const Adapter& adapter_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

}  // namespace parsing

// ---------------------------------------------------------------------------
// Adapters
// ---------------------------------------------------------------------------

/// Scalar-only expressions (no generators).
struct ScalarAdapter {
    struct Never {
        bool is_scalar() const { return true; }
        ParamScalar scalar_value() const { return ParamScalar(0); }
    };
    using Elem = Never;
    std::optional<Elem> generator(const std::string&) const { return std::nullopt; }
    Elem promote(const std::variant<ParamScalar, Elem>&) const {
        throw ParseError(1, 1, "scalar expression expected");
    }
    Elem scale(const ParamScalar&, const Elem& e) const { return e; }
    Elem multiply(const Elem& a, const Elem&) const { return a; }
    Elem addition(const Elem& a, const Elem&) const { return a; }
    Elem negate(const Elem& e) const { return e; }
    Elem power(const Elem& e, long) const { return e; }
    Elem invert(const Elem& e) const { return e; }
};

inline ParamScalar parse_scalar(const std::string& src) {
    ScalarAdapter adapter;
    return parsing::Parser<ScalarAdapter>(adapter, src).parse_scalar();
}

/// Elements of A or A[w] in the PBW basis.
struct PbwAdapter {
    Algebra alg;
    using Elem = PbwElement;

    std::optional<Elem> generator(const std::string& name) const {
        if (name == "x") return PbwElement::generator(alg, GenLetter::X);
        if (name == "y") return PbwElement::generator(alg, GenLetter::Y);
        if (name == "s") return PbwElement::generator(alg, GenLetter::S);
        if (name == "t") return PbwElement::generator(alg, GenLetter::T);
        if (name == "w" && alg.kind() == AlgebraKind::AW)
            return PbwElement::generator(alg, GenLetter::W);
        return std::nullopt;
    }
    Elem promote(const std::variant<ParamScalar, Elem>& v) const {
        if (std::holds_alternative<Elem>(v)) return std::get<Elem>(v);
        return PbwElement::scalar(alg, std::get<ParamScalar>(v));
    }
    Elem scale(const ParamScalar& c, const Elem& e) const { return c * e; }
    Elem multiply(const Elem& a, const Elem& b) const { return a * b; }
    Elem addition(const Elem& a, const Elem& b) const { return a + b; }
    Elem negate(const Elem& e) const { return -e; }
    Elem power(const Elem& e, long n) const {
        if (n < 0) {
            if (e.is_scalar()) return PbwElement::scalar(alg, e.scalar_value().pow(n));
            throw Error("negative powers are only defined for units");
        }
        return e.pow(static_cast<int>(n));
    }
    Elem invert(const Elem& e) const {
        if (e.is_scalar() && !e.scalar_value().is_zero())
            return PbwElement::scalar(alg, e.scalar_value().inverse());
        throw Error("element is not invertible here");
    }
};

/// Elements of the localization; z is an atom and units carry Laurent powers.
struct LocAdapter {
    Algebra alg;
    using Elem = LocElement;

    std::optional<Elem> generator(const std::string& name) const {
        if (name == "x") return LocElement::generator(alg, GenLetter::X, ZBasis::Loc);
        if (name == "y") return LocElement::generator(alg, GenLetter::Y, ZBasis::Loc);
        if (name == "s") return LocElement::generator(alg, GenLetter::S, ZBasis::Loc);
        if (name == "t") return LocElement::generator(alg, GenLetter::T, ZBasis::Loc);
        if (name == "z")
            return LocElement::monomial(alg, GwaMonomial{1, 0, 0, 0}, ParamScalar(1), ZBasis::Loc);
        return std::nullopt;
    }
    Elem promote(const std::variant<ParamScalar, Elem>& v) const {
        if (std::holds_alternative<Elem>(v)) return std::get<Elem>(v);
        return LocElement::scalar(alg, std::get<ParamScalar>(v), ZBasis::Loc);
    }
    Elem scale(const ParamScalar& c, const Elem& e) const { return c * e; }
    Elem multiply(const Elem& a, const Elem& b) const { return a * b; }
    Elem addition(const Elem& a, const Elem& b) const { return a + b; }
    Elem negate(const Elem& e) const { return -e; }
    Elem power(const Elem& e, long n) const {
        if (n >= 0) return e.pow(static_cast<int>(n));
        return invert(e).pow(static_cast<int>(-n));
    }
    Elem invert(const Elem& e) const { return invert_unit(e); }
};

/// Elements of A in the GWA z-basis (nonnegative exponents only).
struct GwaAdapter {
    Algebra alg;
    using Elem = GwaElement;

    std::optional<Elem> generator(const std::string& name) const {
        if (name == "x") return GwaElement::generator(alg, GenLetter::X);
        if (name == "y") return GwaElement::generator(alg, GenLetter::Y);
        if (name == "s") return GwaElement::generator(alg, GenLetter::S);
        if (name == "t") return GwaElement::generator(alg, GenLetter::T);
        if (name == "z") return GwaElement::monomial(alg, GwaMonomial{1, 0, 0, 0});
        return std::nullopt;
    }
    Elem promote(const std::variant<ParamScalar, Elem>& v) const {
        if (std::holds_alternative<Elem>(v)) return std::get<Elem>(v);
        return GwaElement::scalar(alg, std::get<ParamScalar>(v));
    }
    Elem scale(const ParamScalar& c, const Elem& e) const { return c * e; }
    Elem multiply(const Elem& a, const Elem& b) const { return a * b; }
    Elem addition(const Elem& a, const Elem& b) const { return a + b; }
    Elem negate(const Elem& e) const { return -e; }
    Elem power(const Elem& e, long n) const {
        if (n < 0) throw Error("the unlocalized z-basis has no negative powers");
        return e.pow(static_cast<int>(n));
    }
    Elem invert(const Elem&) const { throw Error("inversion requires the localization"); }
};

/// Torus elements over z, y, s, t; single-term elements have Laurent powers.
struct TorusAdapter {
    Torus ctx;
    using Elem = TorusElement;

    std::optional<Elem> generator(const std::string& name) const {
        if (name == "z") return TorusElement::generator(ctx, 0);
        if (name == "y") return TorusElement::generator(ctx, 1);
        if (name == "s") return TorusElement::generator(ctx, 2);
        if (name == "t") return TorusElement::generator(ctx, 3);
        return std::nullopt;
    }
    Elem promote(const std::variant<ParamScalar, Elem>& v) const {
        if (std::holds_alternative<Elem>(v)) return std::get<Elem>(v);
        return std::get<ParamScalar>(v) * TorusElement::one(ctx);
    }
    Elem scale(const ParamScalar& c, const Elem& e) const { return c * e; }
    Elem multiply(const Elem& a, const Elem& b) const { return a * b; }
    Elem addition(const Elem& a, const Elem& b) const { return a + b; }
    Elem negate(const Elem& e) const { return -e; }
    Elem power(const Elem& e, long n) const {
        if (n >= 0) {
            Elem acc = TorusElement::one(ctx);
            for (long i = 0; i < n; ++i) acc = acc * e;
            return acc;
        }
        return power(invert(e), -n);
    }
    Elem invert(const Elem& e) const { return invert_torus_monomial(e); }
};

inline PbwElement parse_pbw(const Algebra& alg, const std::string& src) {
    PbwAdapter adapter{alg};
    return parsing::Parser<PbwAdapter>(adapter, src).parse_element();
}

inline LocElement parse_loc(const Algebra& alg, const std::string& src) {
    LocAdapter adapter{alg};
    return parsing::Parser<LocAdapter>(adapter, src).parse_element();
}

inline GwaElement parse_gwa(const Algebra& alg, const std::string& src) {
    GwaAdapter adapter{alg};
    return parsing::Parser<GwaAdapter>(adapter, src).parse_element();
}

inline TorusElement parse_torus(const Torus& ctx, const std::string& src) {
    TorusAdapter adapter{ctx};
    return parsing::Parser<TorusAdapter>(adapter, src).parse_element();
}

}  // namespace gwa
