#include "ore/expr.hpp"

#include <cctype>
#include <variant>

namespace ore {

// ---- parsing ----------------------------------------------------------------

namespace {

struct Token {
    enum Kind { number, plus, minus, star, caret, slash, lparen, rparen, gen_y, gen_x, end } kind;
    std::string text;
    std::size_t pos;  // 1-based
};

struct Lexer {
    std::string_view src;
    std::size_t i = 0;

    Token next() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
        std::size_t pos = i + 1;
        if (i >= src.size()) return {Token::end, "", pos};
        char c = src[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            return {Token::number, std::string(src.substr(start, i - start)), pos};
        }
        ++i;
        switch (c) {
            case '+': return {Token::plus, "+", pos};
            case '-': return {Token::minus, "-", pos};
            case '*': return {Token::star, "*", pos};
            case '^': return {Token::caret, "^", pos};
            case '/': return {Token::slash, "/", pos};
            case '(': return {Token::lparen, "(", pos};
            case ')': return {Token::rparen, ")", pos};
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i - 1;
            while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
            std::string name(src.substr(start, i - start));
            if (name == "y") return {Token::gen_y, name, pos};
            if (name == "x") return {Token::gen_x, name, pos};
            fail(errc::unknown_generator,
                 "unknown generator \"" + name + "\" at position " + std::to_string(pos));
        }
        fail(errc::syntax_error,
             std::string("unexpected character '") + c + "' at position " + std::to_string(pos));
    }
};

struct Parser {
    Lexer lex;
    Token tok;

    explicit Parser(std::string_view src) : lex{src} { tok = lex.next(); }

    void advance() { tok = lex.next(); }

    [[noreturn]] void error(const std::string& what) {
        fail(errc::syntax_error, what + " at position " + std::to_string(tok.pos));
    }

    ExprPtr make(ExprKind k, ExprPtr l = nullptr, ExprPtr r = nullptr) {
        auto e = std::make_shared<Expression>();
        e->kind = k;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (tok.kind == Token::plus || tok.kind == Token::minus) {
            ExprKind k = tok.kind == Token::plus ? ExprKind::add : ExprKind::sub;
            advance();
            e = make(k, e, parse_term());
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (tok.kind == Token::star) {
                advance();
                e = make(ExprKind::mul, e, parse_factor());
            } else if (tok.kind == Token::number || tok.kind == Token::gen_y ||
                       tok.kind == Token::gen_x || tok.kind == Token::lparen) {
                error("missing operator (juxtaposition is not multiplication)");
            } else {
                break;
            }
        }
        return e;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (tok.kind == Token::caret) {
            advance();
            if (tok.kind != Token::number) error("expected integer exponent");
            unsigned long exp = std::stoul(tok.text);
            advance();
            auto e = std::make_shared<Expression>();
            e->kind = ExprKind::pow;
            e->lhs = base;
            e->exponent = static_cast<unsigned>(exp);
            return e;
        }
        return base;
    }

    ExprPtr parse_atom() {
        switch (tok.kind) {
            case Token::number: {
                mpz_class num(tok.text);
                advance();
                mpz_class den(1);
                if (tok.kind == Token::slash) {
                    advance();
                    if (tok.kind != Token::number) error("expected denominator");
                    den = mpz_class(tok.text);
                    if (den == 0) error("zero denominator");
                    advance();
                }
                auto e = std::make_shared<Expression>();
                e->kind = ExprKind::scalar;
                e->value = mpq_class(num, den);
                e->value.canonicalize();
                return e;
            }
            case Token::gen_y: advance(); return make(ExprKind::gen_y);
            case Token::gen_x: advance(); return make(ExprKind::gen_x);
            case Token::lparen: {
                advance();
                ExprPtr e = parse_expr();
                if (tok.kind != Token::rparen) error("expected ')'");
                advance();
                return e;
            }
            default: error("expected scalar, 'y', 'x' or '('");
        }
    }
};

}  // namespace

ExprPtr parse_expression(std::string_view src) {
    Parser p(src);
    ExprPtr e = p.parse_expr();
    if (p.tok.kind != Token::end) p.error("trailing input");
    return e;
}

// ---- printing ---------------------------------------------------------------

namespace {

// precedence: add/sub = 1, mul = 2, pow = 3, atoms = 4
int precedence(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::add:
        case ExprKind::sub: return 1;
        case ExprKind::mul: return 2;
        case ExprKind::pow: return 3;
        default: return 4;
    }
}

void print_into(const ExprPtr& e, std::string& out, int parent_prec, bool right_side) {
    int prec = precedence(e);
    bool parens = prec < parent_prec || (prec == parent_prec && right_side && prec <= 2);
    if (parens) out += "(";
    switch (e->kind) {
        case ExprKind::scalar: out += e->value.get_str(); break;
        case ExprKind::gen_y: out += "y"; break;
        case ExprKind::gen_x: out += "x"; break;
        case ExprKind::add:
            print_into(e->lhs, out, 1, false);
            out += " + ";
            print_into(e->rhs, out, 1, true);
            break;
        case ExprKind::sub:
            print_into(e->lhs, out, 1, false);
            out += " - ";
            print_into(e->rhs, out, 1, true);
            break;
        case ExprKind::mul:
            print_into(e->lhs, out, 2, false);
            out += "*";
            print_into(e->rhs, out, 2, true);
            break;
        case ExprKind::pow:
            // grammar restricts the base to an atom
            print_into(e->lhs, out, 4, false);
            out += "^" + std::to_string(e->exponent);
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string print_expression(const ExprPtr& e) {
    std::string out;
    print_into(e, out, 0, false);
    return out;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::scalar: return a->value == b->value;
        case ExprKind::gen_y:
        case ExprKind::gen_x: return true;
        case ExprKind::pow: return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
        default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

bool expr_contains_x(const ExprPtr& e) {
    if (!e) return false;
    if (e->kind == ExprKind::gen_x) return true;
    return expr_contains_x(e->lhs) || expr_contains_x(e->rhs);
}

// ---- evaluation -------------------------------------------------------------

namespace {

// A scaled bare power c*x^k is kept symbolic until it must become a ring
// value, so non-unital rings accept forms like 2*x^3*y.
struct ScaledXPow {
    Scalar c;
    std::size_t k;
};

using Value = std::variant<Scalar, OrePoly, ScaledXPow>;

struct Evaluator {
    ContextPtr ctx;
    MulMethod method;

    OrePoly mul_polys(const OrePoly& f, const OrePoly& g) const {
        return method == MulMethod::naive ? mul_naive(f, g) : mul_goodearl(f, g);
    }

    OrePoly embed_scalar(const Scalar& c) const {
        if (!ctx->algebra()->unital)
            fail(errc::validation_error,
                 "cannot embed scalar " + c.to_string() + " into non-unital ring " + ctx->id());
        return OrePoly::monomial(ctx, AlgebraElement::unit(ctx->algebra()).scaled(c), 0);
    }

    OrePoly materialize(const Value& v) const {
        if (std::holds_alternative<OrePoly>(v)) return std::get<OrePoly>(v);
        if (std::holds_alternative<Scalar>(v)) return embed_scalar(std::get<Scalar>(v));
        const auto& sx = std::get<ScaledXPow>(v);
        return embed_scalar(sx.c).shifted(sx.k);
    }

    // x^k * f, honoring the configured multiplication path.
    OrePoly xpow_times_poly(std::size_t k, const OrePoly& f) const {
        if (method == MulMethod::naive) {
            OrePoly acc = f;
            for (std::size_t i = 0; i < k; ++i) acc = push_x_once(acc);
            return acc;
        }
        OrePoly acc = OrePoly::zero(ctx);
        for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
            const AlgebraElement& c = f.coeffs()[j];
            if (c.is_zero()) continue;
            acc = acc + x_pow_times(ctx, c, k).shifted(j);
        }
        return acc;
    }

    Value add(const Value& a, const Value& b, bool subtract) const {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b)) {
            const Scalar& x = std::get<Scalar>(a);
            const Scalar& y = std::get<Scalar>(b);
            return subtract ? x - y : x + y;
        }
        OrePoly f = materialize(a);
        OrePoly g = materialize(b);
        return subtract ? f - g : f + g;
    }

    Value mul(const Value& a, const Value& b) const {
        if (std::holds_alternative<Scalar>(a)) {
            const Scalar& c = std::get<Scalar>(a);
            if (std::holds_alternative<Scalar>(b)) return c * std::get<Scalar>(b);
            if (std::holds_alternative<OrePoly>(b)) return std::get<OrePoly>(b).scaled(c);
            auto sx = std::get<ScaledXPow>(b);
            return ScaledXPow{c * sx.c, sx.k};
        }
        if (std::holds_alternative<ScaledXPow>(a)) {
            const auto& sx = std::get<ScaledXPow>(a);
            if (std::holds_alternative<Scalar>(b))  // field scalars are central
                return ScaledXPow{sx.c * std::get<Scalar>(b), sx.k};
            if (std::holds_alternative<ScaledXPow>(b)) {
                const auto& other = std::get<ScaledXPow>(b);
                return ScaledXPow{sx.c * other.c, sx.k + other.k};
            }
            return xpow_times_poly(sx.k, std::get<OrePoly>(b)).scaled(sx.c);
        }
        const OrePoly& f = std::get<OrePoly>(a);
        if (std::holds_alternative<Scalar>(b)) return f.scaled(std::get<Scalar>(b));
        if (std::holds_alternative<ScaledXPow>(b)) {
            const auto& sx = std::get<ScaledXPow>(b);
            return f.shifted(sx.k).scaled(sx.c);
        }
        return mul_polys(f, std::get<OrePoly>(b));
    }

    Value pow(const Value& base, unsigned e) const {
        if (std::holds_alternative<Scalar>(base))
            return std::get<Scalar>(base).pow(static_cast<long>(e));
        if (std::holds_alternative<ScaledXPow>(base)) {
            const auto& sx = std::get<ScaledXPow>(base);
            return ScaledXPow{sx.c.pow(static_cast<long>(e)), sx.k * e};
        }
        const OrePoly& f = std::get<OrePoly>(base);
        if (e == 0) return embed_scalar(Scalar::one(ctx->field()));
        OrePoly acc = f;
        for (unsigned k = 1; k < e; ++k) acc = mul_polys(f, acc);
        return acc;
    }

    Value eval(const ExprPtr& e) const {
        switch (e->kind) {
            case ExprKind::scalar: return Scalar::from_mpq(e->value, ctx->field());
            case ExprKind::gen_y: {
                const auto& names = ctx->algebra()->basis_names;
                for (std::size_t k = 0; k < names.size(); ++k)
                    if (names[k] == "y")
                        return OrePoly::monomial(ctx, AlgebraElement::basis(ctx->algebra(), k), 0);
                fail(errc::unknown_generator, "ring " + ctx->id() + " has no generator y");
            }
            case ExprKind::gen_x: return ScaledXPow{Scalar::one(ctx->field()), 1};
            case ExprKind::add: return add(eval(e->lhs), eval(e->rhs), false);
            case ExprKind::sub: return add(eval(e->lhs), eval(e->rhs), true);
            case ExprKind::mul: return mul(eval(e->lhs), eval(e->rhs));
            case ExprKind::pow: return pow(eval(e->lhs), e->exponent);
        }
        fail(errc::validation_error, "unreachable");
    }
};

}  // namespace

OrePoly evaluate(const ExprPtr& e, const ContextPtr& ctx, MulMethod method) {
    Evaluator ev{ctx, method};
    return ev.materialize(ev.eval(e));
}

}  // namespace ore
