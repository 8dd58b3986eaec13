#include "addfeq/state_poly.hpp"

#include <cctype>
#include <cstdlib>

namespace addfeq {

std::string render(const StatePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = c.sign() < 0 ? -c : c;
        std::string mono = m.str();
        std::string piece;
        if (mono == "1") {
            piece = mag.str();
        } else if (mag.is_one()) {
            piece = mono;
        } else {
            piece = mag.str() + "*" + mono;
        }
        if (first) {
            out = (c.sign() < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + piece;
        }
    }
    return out;
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;

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

    void expect(char c) {
        require_input(accept(c), std::string("expected '") + c + "' at position " +
                                     std::to_string(pos + 1) + " in state polynomial");
    }

    unsigned read_uint() {
        skip_ws();
        require_input(pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])),
                      "expected integer at position " + std::to_string(pos + 1) +
                          " in state polynomial");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            require_input(v <= 1'000'000'000UL, "integer too large in state polynomial");
            ++pos;
        }
        return static_cast<unsigned>(v);
    }
};

} // namespace

StatePoly parse_state_poly(const std::string& text) {
    PolyLexer lx{text};
    StatePoly poly;

    if (lx.peek() == '0') {
        std::size_t save = lx.pos;
        ++lx.pos;
        if (lx.eof()) return poly;
        lx.pos = save;
    }

    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (lx.accept('-')) sign = -1;
        } else {
            if (lx.accept('+')) {
                sign = 1;
            } else if (lx.accept('-')) {
                sign = -1;
            } else {
                require_input(lx.eof(), "unexpected character at position " +
                                            std::to_string(lx.pos + 1) +
                                            " in state polynomial");
                break;
            }
        }
        first = false;

        Rational coeff = sign;
        StateMonomial mono;
        bool any_factor = false;
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                unsigned num = lx.read_uint();
                if (lx.accept('/')) {
                    unsigned den = lx.read_uint();
                    coeff *= Rational(static_cast<long>(num), static_cast<long>(den));
                } else {
                    coeff *= Rational(static_cast<long>(num));
                }
            } else if (c == 'X') {
                ++lx.pos;
                unsigned e = 1;
                if (lx.accept('^')) e = lx.read_uint();
                mono = mono * StateMonomial::x_power(e);
            } else if (c == 'D') {
                ++lx.pos;
                unsigned t = lx.read_uint();
                require_input(t >= 1, "D index must be >= 1 in state polynomial");
                unsigned e = 1;
                if (lx.accept('^')) e = lx.read_uint();
                mono = mono * StateMonomial::d_var(t, e);
            } else {
                require_input(any_factor, "expected term at position " +
                                              std::to_string(lx.pos + 1) +
                                              " in state polynomial");
                break;
            }
            any_factor = true;
            if (!lx.accept('*')) break;
        }
        poly.add_term(mono, coeff);
        if (lx.eof()) break;
    }
    return poly;
}

} // namespace addfeq
