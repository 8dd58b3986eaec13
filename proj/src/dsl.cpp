#include "addfeq/dsl.hpp"

#include <cctype>
#include <optional>

namespace addfeq {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    std::size_t column() const { return pos + 1; }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c)) throw parse_error(what, column());
    }

    unsigned read_uint(const std::string& what) {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error(what, column());
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            if (v > 1'000'000UL) throw parse_error("integer too large", column());
            ++pos;
        }
        return static_cast<unsigned>(v);
    }
};

struct Slot {
    char letter; // 'f', 'g' or 'x'
    unsigned func_index = 0;
    unsigned exponent = 0;
};

// optional exponent on x inside parentheses or after a bare x
unsigned read_exponent(Lexer& lx) {
    if (!lx.accept('^')) return 1;
    std::size_t col = lx.column();
    unsigned e = lx.read_uint("expected integer exponent");
    if (e == 0) throw parse_error("exponent 0 is not allowed", col);
    return e;
}

struct ParsedTerm {
    Rational coef = Rational(1);
    std::vector<Slot> slots;
};

ParsedTerm parse_term(Lexer& lx) {
    ParsedTerm term;
    bool any = false;
    while (true) {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned num = lx.read_uint("expected integer");
            if (lx.accept('/')) {
                std::size_t col = lx.column();
                unsigned den = lx.read_uint("expected denominator");
                if (den == 0) throw parse_error("zero denominator", col);
                term.coef *= Rational(static_cast<long>(num), static_cast<long>(den));
            } else {
                term.coef *= Rational(static_cast<long>(num));
            }
        } else if (c == 'f' || c == 'g') {
            ++lx.pos;
            Slot slot;
            slot.letter = c;
            slot.func_index = lx.read_uint("expected function index");
            lx.expect('(', "expected '('");
            if (!lx.accept('x')) throw parse_error("expected 'x'", lx.column());
            slot.exponent = read_exponent(lx);
            lx.expect(')', "expected ')'");
            term.slots.push_back(slot);
        } else if (c == 'x') {
            ++lx.pos;
            Slot slot;
            slot.letter = 'x';
            slot.exponent = read_exponent(lx);
            term.slots.push_back(slot);
        } else {
            throw parse_error("expected coefficient, function or x factor", lx.column());
        }
        any = true;
        if (!lx.accept('*')) break;
    }
    if (!any) throw parse_error("empty term", lx.column());
    return term;
}

Term assemble(const ParsedTerm& pt, std::size_t term_column) {
    if (pt.slots.size() > 2)
        throw parse_error("a term carries at most two function or x factors", term_column);
    if (pt.coef.is_zero()) throw parse_error("zero coefficient", term_column);

    Term t;
    t.coef = pt.coef;

    auto place_f = [&](const Slot& s) {
        t.p = s.exponent;
        t.f_pinned = (s.letter == 'x');
    };
    auto place_g = [&](const Slot& s) {
        t.q = s.exponent;
        t.g_pinned = (s.letter == 'x');
    };

    if (pt.slots.empty())
        throw parse_error("a term needs a function or x factor", term_column);

    if (pt.slots.size() == 1) {
        const Slot& s = pt.slots[0];
        if (s.letter == 'g') {
            t.p = 0;
            t.f_pinned = true;
            place_g(s);
        } else {
            place_f(s);
            t.q = 0;
            t.g_pinned = true;
        }
        return t;
    }

    const Slot& a = pt.slots[0];
    const Slot& b = pt.slots[1];
    if (a.letter != 'x' && b.letter != 'x') {
        // two functions: letters decide the sides when they differ
        if (a.letter == 'g' && b.letter == 'f') {
            place_f(b);
            place_g(a);
        } else {
            place_f(a);
            place_g(b);
        }
    } else if (a.letter == 'x' && b.letter == 'x') {
        place_f(a);
        place_g(b);
    } else {
        const Slot& func = a.letter == 'x' ? b : a;
        const Slot& pin = a.letter == 'x' ? a : b;
        if (func.letter == 'g') {
            place_f(pin);
            place_g(func);
        } else {
            place_f(func);
            place_g(pin);
        }
    }
    return t;
}

} // namespace

std::vector<Term> parse_equation(const std::string& text) {
    Lexer lx{text};
    std::vector<Term> terms;

    bool negate = lx.accept('-');
    while (true) {
        std::size_t col = lx.column();
        ParsedTerm pt = parse_term(lx);
        if (negate) pt.coef = -pt.coef;
        terms.push_back(assemble(pt, col));

        if (lx.accept('+')) {
            negate = false;
        } else if (lx.accept('-')) {
            negate = true;
        } else {
            break;
        }
    }
    lx.expect('=', "expected '=' after the sum");
    std::size_t col = lx.column();
    unsigned rhs = lx.read_uint("expected 0 on the right-hand side");
    if (rhs != 0) throw parse_error("right-hand side must be 0", col);
    if (!lx.eof()) throw parse_error("trailing input", lx.column());
    return terms;
}

namespace {

std::string x_factor(unsigned e) {
    if (e == 0) return "";
    if (e == 1) return "x";
    return "x^" + std::to_string(e);
}

std::string func_factor(char letter, int index, unsigned e) {
    std::string s(1, letter);
    s += std::to_string(index) + "(x";
    if (e != 1) s += "^" + std::to_string(e);
    return s + ")";
}

} // namespace

std::string print_equation(const EquationSpec& spec) {
    std::string out;
    bool first = true;
    for (const Term& t : spec.terms) {
        std::string f_part = t.f_pinned ? x_factor(t.p) : func_factor('f', t.index, t.p);
        std::string g_part = t.g_pinned ? x_factor(t.q) : func_factor('g', t.index, t.q);
        std::string factors = f_part;
        if (!g_part.empty()) factors += (factors.empty() ? "" : "*") + g_part;

        Rational mag = t.coef.sign() < 0 ? -t.coef : t.coef;
        std::string piece;
        if (factors.empty())
            piece = mag.str();
        else if (mag.is_one())
            piece = factors;
        else
            piece = mag.str() + "*" + factors;

        if (first) {
            out = (t.coef.sign() < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (t.coef.sign() < 0 ? " - " : " + ") + piece;
        }
    }
    return out + " = 0";
}

} // namespace addfeq
