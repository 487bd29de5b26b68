#include "fatlas/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace fatlas {

// ---------------------------------------------------------------------------
// AST construction

Expr::Ptr Expr::constant(double c) {
    auto e = std::make_shared<Expr>();
    e->tag = Tag::constant;
    e->cvalue = c;
    return e;
}

Expr::Ptr Expr::var_u() {
    auto e = std::make_shared<Expr>();
    e->tag = Tag::var_u;
    return e;
}

Expr::Ptr Expr::var_v() {
    auto e = std::make_shared<Expr>();
    e->tag = Tag::var_v;
    return e;
}

Expr::Ptr Expr::neg(Ptr a) {
    auto e = std::make_shared<Expr>();
    e->tag = Tag::neg;
    e->lhs = std::move(a);
    return e;
}

Expr::Ptr Expr::call(Tag fn, Ptr a) {
    auto e = std::make_shared<Expr>();
    e->tag = fn;
    e->lhs = std::move(a);
    return e;
}

static Expr::Ptr make_binary(Expr::Tag t, Expr::Ptr a, Expr::Ptr b) {
    auto e = std::make_shared<Expr>();
    e->tag = t;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

Expr::Ptr Expr::add(Ptr a, Ptr b) { return make_binary(Tag::add, std::move(a), std::move(b)); }
Expr::Ptr Expr::sub(Ptr a, Ptr b) { return make_binary(Tag::sub, std::move(a), std::move(b)); }
Expr::Ptr Expr::mul(Ptr a, Ptr b) { return make_binary(Tag::mul, std::move(a), std::move(b)); }
Expr::Ptr Expr::div(Ptr a, Ptr b) { return make_binary(Tag::div, std::move(a), std::move(b)); }

Expr::Ptr Expr::pow(Ptr a, int k) {
    auto e = std::make_shared<Expr>();
    e->tag = Tag::pow;
    e->lhs = std::move(a);
    e->exponent = k;
    return e;
}

Expr::Ptr Expr::literal(double c) {
    if (c < 0.0) return neg(constant(-c));
    return constant(c);
}

bool structurally_equal(const Expr::Ptr& a, const Expr::Ptr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->tag != b->tag) return false;
    switch (a->tag) {
        case Expr::Tag::constant: return a->cvalue == b->cvalue;
        case Expr::Tag::var_u:
        case Expr::Tag::var_v: return true;
        case Expr::Tag::pow:
            return a->exponent == b->exponent && structurally_equal(a->lhs, b->lhs);
        case Expr::Tag::neg:
        case Expr::Tag::sqrt_fn:
        case Expr::Tag::sin_fn:
        case Expr::Tag::cos_fn:
        case Expr::Tag::exp_fn: return structurally_equal(a->lhs, b->lhs);
        default:
            return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
    }
}

Expr::Ptr substitute(const Expr::Ptr& e, const Expr::Ptr& for_u, const Expr::Ptr& for_v) {
    switch (e->tag) {
        case Expr::Tag::constant: return e;
        case Expr::Tag::var_u: return for_u;
        case Expr::Tag::var_v: return for_v;
        case Expr::Tag::pow: return Expr::pow(substitute(e->lhs, for_u, for_v), e->exponent);
        case Expr::Tag::neg:
        case Expr::Tag::sqrt_fn:
        case Expr::Tag::sin_fn:
        case Expr::Tag::cos_fn:
        case Expr::Tag::exp_fn:
            return Expr::call(e->tag, substitute(e->lhs, for_u, for_v));
        default:
            return make_binary(e->tag, substitute(e->lhs, for_u, for_v),
                               substitute(e->rhs, for_u, for_v));
    }
}

// ---------------------------------------------------------------------------
// Evaluation

double eval_point(const Expr::Ptr& e, double u, double v) {
    switch (e->tag) {
        case Expr::Tag::constant: return e->cvalue;
        case Expr::Tag::var_u: return u;
        case Expr::Tag::var_v: return v;
        case Expr::Tag::neg: return -eval_point(e->lhs, u, v);
        case Expr::Tag::sqrt_fn: {
            double x = eval_point(e->lhs, u, v);
            if (x < 0.0) throw DomainError("sqrt of negative value during evaluation");
            return std::sqrt(x);
        }
        case Expr::Tag::sin_fn: return std::sin(eval_point(e->lhs, u, v));
        case Expr::Tag::cos_fn: return std::cos(eval_point(e->lhs, u, v));
        case Expr::Tag::exp_fn: return std::exp(eval_point(e->lhs, u, v));
        case Expr::Tag::add: return eval_point(e->lhs, u, v) + eval_point(e->rhs, u, v);
        case Expr::Tag::sub: return eval_point(e->lhs, u, v) - eval_point(e->rhs, u, v);
        case Expr::Tag::mul: return eval_point(e->lhs, u, v) * eval_point(e->rhs, u, v);
        case Expr::Tag::div: {
            double d = eval_point(e->rhs, u, v);
            if (d == 0.0) throw DomainError("division by zero during evaluation");
            return eval_point(e->lhs, u, v) / d;
        }
        case Expr::Tag::pow: {
            double b = eval_point(e->lhs, u, v);
            if (e->exponent < 0 && b == 0.0)
                throw DomainError("negative power of zero during evaluation");
            return std::pow(b, e->exponent);
        }
    }
    throw DomainError("corrupt expression node");
}

Jet2 eval_jet(const Expr::Ptr& e, int order, Point2 p) {
    switch (e->tag) {
        case Expr::Tag::constant: return Jet2::constant(order, p, e->cvalue);
        case Expr::Tag::var_u: return Jet2::variable_u(order, p);
        case Expr::Tag::var_v: return Jet2::variable_v(order, p);
        case Expr::Tag::neg: return -eval_jet(e->lhs, order, p);
        case Expr::Tag::sqrt_fn: return sqrt(eval_jet(e->lhs, order, p));
        case Expr::Tag::sin_fn: return sin(eval_jet(e->lhs, order, p));
        case Expr::Tag::cos_fn: return cos(eval_jet(e->lhs, order, p));
        case Expr::Tag::exp_fn: return exp(eval_jet(e->lhs, order, p));
        case Expr::Tag::add: return eval_jet(e->lhs, order, p) + eval_jet(e->rhs, order, p);
        case Expr::Tag::sub: return eval_jet(e->lhs, order, p) - eval_jet(e->rhs, order, p);
        case Expr::Tag::mul: return eval_jet(e->lhs, order, p) * eval_jet(e->rhs, order, p);
        case Expr::Tag::div:
            try {
                return eval_jet(e->lhs, order, p) / eval_jet(e->rhs, order, p);
            } catch (const DivisionBySingularJet&) {
                throw DomainError("division by expression vanishing at the evaluation point");
            }
        case Expr::Tag::pow:
            try {
                return pow_int(eval_jet(e->lhs, order, p), e->exponent);
            } catch (const DivisionBySingularJet&) {
                throw DomainError("negative power of expression vanishing at the evaluation point");
            }
    }
    throw DomainError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    Tok kind;
    std::string text;
    double number = 0.0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    Lexer(std::string_view src, int line) : src_(src), line_(line) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError("line " + std::to_string(tok_.line) + ", col " +
                          std::to_string(tok_.col) + ": expected " + expected + ", got " +
                          (tok_.kind == Tok::end ? std::string("end of input") : "'" + tok_.text + "'"));
    }

private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
        tok_.line = line_;
        tok_.col = static_cast<int>(pos_) + 1;
        if (pos_ >= src_.size()) {
            tok_ = {Tok::end, "", 0.0, line_, tok_.col};
            return;
        }
        char c = src_[pos_];
        switch (c) {
            case '+': tok_ = {Tok::plus, "+", 0.0, line_, tok_.col}; ++pos_; return;
            case '-': tok_ = {Tok::minus, "-", 0.0, line_, tok_.col}; ++pos_; return;
            case '*': tok_ = {Tok::star, "*", 0.0, line_, tok_.col}; ++pos_; return;
            case '/': tok_ = {Tok::slash, "/", 0.0, line_, tok_.col}; ++pos_; return;
            case '^': tok_ = {Tok::caret, "^", 0.0, line_, tok_.col}; ++pos_; return;
            case '(': tok_ = {Tok::lparen, "(", 0.0, line_, tok_.col}; ++pos_; return;
            case ')': tok_ = {Tok::rparen, ")", 0.0, line_, tok_.col}; ++pos_; return;
            case ',': tok_ = {Tok::comma, ",", 0.0, line_, tok_.col}; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '.') {
                ++pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                std::size_t mark = pos_;
                ++pos_;
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
                if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
                } else {
                    pos_ = mark;  // 'e' begins an identifier, not an exponent
                }
            }
            std::string text(src_.substr(start, pos_ - start));
            double val = 0.0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), val);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw SyntaxError("line " + std::to_string(line_) + ", col " +
                                  std::to_string(start + 1) + ": malformed number '" + text + "'");
            tok_ = {Tok::number, text, val, line_, static_cast<int>(start) + 1};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            tok_ = {Tok::ident, std::string(src_.substr(start, pos_ - start)), 0.0, line_,
                    static_cast<int>(start) + 1};
            return;
        }
        throw SyntaxError("line " + std::to_string(line_) + ", col " + std::to_string(pos_ + 1) +
                          ": unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_;
    Token tok_;
};

class Parser {
public:
    explicit Parser(Lexer& lex) : lex_(lex) {}

    Expr::Ptr expression() {
        Expr::Ptr e = term();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            Tok op = lex_.take().kind;
            Expr::Ptr r = term();
            e = (op == Tok::plus) ? Expr::add(e, r) : Expr::sub(e, r);
        }
        return e;
    }

private:
    Expr::Ptr term() {
        Expr::Ptr e = unary();
        while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash) {
            Tok op = lex_.take().kind;
            Expr::Ptr r = unary();
            e = (op == Tok::star) ? Expr::mul(e, r) : Expr::div(e, r);
        }
        return e;
    }

    Expr::Ptr unary() {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            return Expr::neg(unary());
        }
        return power();
    }

    Expr::Ptr power() {
        Expr::Ptr base = atom();
        if (lex_.peek().kind != Tok::caret) return base;
        lex_.take();
        int sign = 1;
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            sign = -1;
        }
        Token t = lex_.peek();
        if (t.kind != Tok::number) lex_.fail("integer exponent");
        lex_.take();
        double ip = 0.0;
        if (std::modf(t.number, &ip) != 0.0 || t.text.find('.') != std::string::npos ||
            t.text.find('e') != std::string::npos || t.text.find('E') != std::string::npos)
            throw NonIntegerExponent("line " + std::to_string(t.line) + ", col " +
                                     std::to_string(t.col) + ": exponent '" + t.text +
                                     "' is not an integer literal");
        if (lex_.peek().kind == Tok::caret)
            lex_.fail("no chained '^' (power is non-associative)");
        return Expr::pow(base, sign * static_cast<int>(ip));
    }

    Expr::Ptr atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::number: {
                Token n = lex_.take();
                return Expr::constant(n.number);
            }
            case Tok::ident: {
                Token id = lex_.take();
                if (id.text == "u") return Expr::var_u();
                if (id.text == "v") return Expr::var_v();
                Expr::Tag fn;
                if (id.text == "sqrt") fn = Expr::Tag::sqrt_fn;
                else if (id.text == "sin") fn = Expr::Tag::sin_fn;
                else if (id.text == "cos") fn = Expr::Tag::cos_fn;
                else if (id.text == "exp") fn = Expr::Tag::exp_fn;
                else
                    throw UnknownIdentifier("line " + std::to_string(id.line) + ", col " +
                                            std::to_string(id.col) + ": unknown identifier '" +
                                            id.text + "'");
                if (lex_.peek().kind != Tok::lparen) lex_.fail("'(' after function name");
                lex_.take();
                Expr::Ptr arg = expression();
                if (lex_.peek().kind != Tok::rparen) lex_.fail("')'");
                lex_.take();
                return Expr::call(fn, arg);
            }
            case Tok::lparen: {
                lex_.take();
                Expr::Ptr e = expression();
                if (lex_.peek().kind != Tok::rparen) lex_.fail("')'");
                lex_.take();
                return e;
            }
            default:
                lex_.fail("number, variable, function, or '('");
        }
    }

    Lexer& lex_;
};

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

int precedence(const Expr::Ptr& e) {
    switch (e->tag) {
        case Expr::Tag::add:
        case Expr::Tag::sub: return 1;
        case Expr::Tag::mul:
        case Expr::Tag::div: return 2;
        case Expr::Tag::neg: return 3;
        case Expr::Tag::pow: return 4;
        default: return 5;
    }
}

void print_rec(const Expr::Ptr& e, std::string& out, int parent_prec) {
    int prec = precedence(e);
    bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (e->tag) {
        case Expr::Tag::constant: out += format_double(e->cvalue); break;
        case Expr::Tag::var_u: out += 'u'; break;
        case Expr::Tag::var_v: out += 'v'; break;
        case Expr::Tag::neg:
            out += '-';
            print_rec(e->lhs, out, 3);
            break;
        case Expr::Tag::sqrt_fn:
        case Expr::Tag::sin_fn:
        case Expr::Tag::cos_fn:
        case Expr::Tag::exp_fn: {
            out += (e->tag == Expr::Tag::sqrt_fn)  ? "sqrt"
                   : (e->tag == Expr::Tag::sin_fn) ? "sin"
                   : (e->tag == Expr::Tag::cos_fn) ? "cos"
                                                   : "exp";
            out += '(';
            print_rec(e->lhs, out, 0);
            out += ')';
            break;
        }
        case Expr::Tag::add:
            print_rec(e->lhs, out, 1);
            out += " + ";
            print_rec(e->rhs, out, 2);
            break;
        case Expr::Tag::sub:
            print_rec(e->lhs, out, 1);
            out += " - ";
            print_rec(e->rhs, out, 2);
            break;
        case Expr::Tag::mul:
            print_rec(e->lhs, out, 2);
            out += '*';
            print_rec(e->rhs, out, 3);
            break;
        case Expr::Tag::div:
            print_rec(e->lhs, out, 2);
            out += '/';
            print_rec(e->rhs, out, 3);
            break;
        case Expr::Tag::pow:
            print_rec(e->lhs, out, 5);
            out += '^';
            if (e->exponent < 0) out += '-';
            out += std::to_string(std::abs(e->exponent));
            break;
    }
    if (parens) out += ')';
}

} // namespace

Expr::Ptr parse_expr_text(const std::string& text) {
    Lexer lex(text, 1);
    Parser p(lex);
    Expr::Ptr e = p.expression();
    if (lex.peek().kind != Tok::end) lex.fail("end of expression");
    return e;
}

std::string print_expr(const Expr::Ptr& e) {
    std::string out;
    print_rec(e, out, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Surface files

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number_strict(const std::string& s, int line) {
    double val = 0.0;
    std::string t = trim(s);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), val);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw SyntaxError("line " + std::to_string(line) + ": malformed number '" + t + "'");
    return val;
}

Domain parse_domain(const std::string& value, int line) {
    // [a,b]x[c,d]
    auto fail = [&]() -> Domain {
        throw SyntaxError("line " + std::to_string(line) +
                          ": domain must have the form [a,b]x[c,d], got '" + value + "'");
    };
    std::string s = trim(value);
    if (s.empty() || s.front() != '[') return fail();
    std::size_t c1 = s.find(',');
    std::size_t b1 = s.find(']');
    if (c1 == std::string::npos || b1 == std::string::npos || c1 > b1) return fail();
    std::size_t x = s.find_first_not_of(" \t", b1 + 1);
    if (x == std::string::npos || (s[x] != 'x' && s[x] != 'X')) return fail();
    std::size_t o2 = s.find('[', x);
    std::size_t c2 = s.find(',', o2);
    std::size_t b2 = s.find(']', o2);
    if (o2 == std::string::npos || c2 == std::string::npos || b2 == std::string::npos || c2 > b2)
        return fail();
    Domain d;
    d.u_min = parse_number_strict(s.substr(1, c1 - 1), line);
    d.u_max = parse_number_strict(s.substr(c1 + 1, b1 - c1 - 1), line);
    d.v_min = parse_number_strict(s.substr(o2 + 1, c2 - o2 - 1), line);
    d.v_max = parse_number_strict(s.substr(c2 + 1, b2 - c2 - 1), line);
    if (!(d.u_min < d.u_max) || !(d.v_min < d.v_max))
        throw InvalidSurface("line " + std::to_string(line) + ": degenerate domain");
    return d;
}

std::array<Expr::Ptr, 3> parse_component_tuple(const std::string& value, int line) {
    Lexer lex(value, line);
    Parser p(lex);
    if (lex.peek().kind != Tok::lparen) lex.fail("'('");
    lex.take();
    std::array<Expr::Ptr, 3> comps;
    for (int i = 0; i < 3; ++i) {
        comps[static_cast<std::size_t>(i)] = p.expression();
        if (i < 2) {
            if (lex.peek().kind != Tok::comma) lex.fail("','");
            lex.take();
        }
    }
    if (lex.peek().kind != Tok::rparen) lex.fail("',' or ')'");
    lex.take();
    if (lex.peek().kind != Tok::end) lex.fail("end of line");
    return comps;
}

} // namespace

SurfaceDef parse_surface(const std::string& text) {
    SurfaceDef def;
    bool have_f = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (std::size_t h = s.find('#'); h != std::string::npos) s = s.substr(0, h);
        s = trim(s);
        if (s.empty()) continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw SyntaxError("line " + std::to_string(line) + ": expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key == "name") {
            if (value.empty()) throw InvalidSurface("line " + std::to_string(line) + ": empty name");
            def.name = value;
        } else if (key == "kind") {
            if (value == "first") def.declared_kind = SurfaceKind::first_kind_adapted;
            else if (value == "second") def.declared_kind = SurfaceKind::second_kind_adapted;
            else if (value == "regular") def.declared_kind = SurfaceKind::regular;
            else if (value == "unknown") def.declared_kind = SurfaceKind::unknown;
            else
                throw InvalidSurface("line " + std::to_string(line) +
                                     ": kind must be first|second|regular|unknown");
        } else if (key == "domain") {
            def.domain = parse_domain(value, line);
        } else if (key == "order") {
            def.order = static_cast<int>(parse_number_strict(value, line));
            if (def.order < 4)
                throw InvalidSurface("line " + std::to_string(line) + ": order must be >= 4");
        } else if (key == "f") {
            def.components = parse_component_tuple(value, line);
            have_f = true;
        } else {
            throw SyntaxError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    if (!have_f) throw InvalidSurface("surface source is missing the 'f = (X, Y, Z)' line");
    return def;
}

std::string print_surface(const SurfaceDef& def) {
    std::string out;
    out += "name = " + def.name + "\n";
    out += "kind = ";
    switch (def.declared_kind) {
        case SurfaceKind::first_kind_adapted: out += "first"; break;
        case SurfaceKind::second_kind_adapted: out += "second"; break;
        case SurfaceKind::regular: out += "regular"; break;
        case SurfaceKind::unknown: out += "unknown"; break;
    }
    out += "\n";
    out += "domain = [" + format_double(def.domain.u_min) + "," + format_double(def.domain.u_max) +
           "]x[" + format_double(def.domain.v_min) + "," + format_double(def.domain.v_max) + "]\n";
    out += "order = " + std::to_string(def.order) + "\n";
    out += "f = (" + print_expr(def.components[0]) + ", " + print_expr(def.components[1]) + ", " +
           print_expr(def.components[2]) + ")\n";
    return out;
}

SurfaceDef load_surface_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidSurface("cannot open surface file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_surface(buf.str());
}

Vec3J eval_jets(const SurfaceDef& def, Point2 p, int order) {
    if (!def.domain.contains(p))
        throw PointOutsideDomain("point (" + std::to_string(p.u) + ", " + std::to_string(p.v) +
                                 ") lies outside the surface domain");
    if (order > def.order)
        throw OrderExceeded("requested jet order " + std::to_string(order) +
                            " exceeds the surface maximum " + std::to_string(def.order));
    return {eval_jet(def.components[0], order, p), eval_jet(def.components[1], order, p),
            eval_jet(def.components[2], order, p)};
}

Vec3 eval_components(const SurfaceDef& def, double u, double v) {
    return {eval_point(def.components[0], u, v), eval_point(def.components[1], u, v),
            eval_point(def.components[2], u, v)};
}

} // namespace fatlas
