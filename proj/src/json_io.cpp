// json_io.cpp -- parser for the canonical polynomial text form.

#include "curvelink/json_io.hpp"

#include <cctype>
#include <cstdlib>

namespace curvelink {

namespace {

struct cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    int64_t integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("expected an integer at offset " + std::to_string(i));
        int64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = checked_add(checked_mul(v, 10), s[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    }
};

// exponent in lattice units (quarter units for q, half units for t)
int lattice_exponent(cursor& c, int unit) {
    if (!c.eat('^')) return unit;  // bare variable
    if (c.eat('(')) {
        int64_t num = c.integer();
        if (!c.eat('/')) throw parse_error("expected '/' in fractional exponent");
        int64_t den = c.integer();
        if (!c.eat(')')) throw parse_error("expected ')' in fractional exponent");
        if (den <= 0 || (num * unit) % den != 0)
            throw parse_error("exponent denominator must divide the lattice unit");
        return static_cast<int>(num * unit / den);
    }
    return static_cast<int>(c.integer()) * unit;
}

// one term: [int] ['*'] factor ('*' factor)*, or just an integer
exact_poly parse_term(cursor& c) {
    int64_t coeff = 1;
    mono m;
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = c.integer();
        saw_anything = true;
        if (!c.eat('*')) return exact_poly(coeff, m);
    }
    for (;;) {
        char v = c.peek();
        if (v == 'a') {
            ++c.i;
            m.ea += lattice_exponent(c, 1);
        } else if (v == 'q') {
            ++c.i;
            m.eq4 += lattice_exponent(c, 4);
        } else if (v == 't') {
            ++c.i;
            m.et2 += lattice_exponent(c, 2);
        } else {
            throw parse_error("expected a variable (a, q, t) at offset " + std::to_string(c.i));
        }
        saw_anything = true;
        if (!c.eat('*')) break;
    }
    if (!saw_anything) throw parse_error("empty term");
    return exact_poly(coeff, m);
}

}  // namespace

exact_poly parse_poly(const std::string& text) {
    cursor c{text};
    if (c.done()) throw parse_error("empty polynomial text");
    exact_poly out;
    bool negative = c.eat('-');
    for (;;) {
        exact_poly term = parse_term(c);
        if (negative) term = -term;
        out += term;
        if (c.done()) break;
        if (c.eat('+'))
            negative = false;
        else if (c.eat('-'))
            negative = true;
        else
            throw parse_error("expected '+' or '-' at offset " + std::to_string(c.i));
    }
    // "0" parses to the zero polynomial via the explicit zero coefficient
    return out;
}

bool poly_text_roundtrips(const std::string& text) {
    return parse_poly(text).str() == text;
}

}  // namespace curvelink
