#include "curvelink/exactpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace curvelink {

// ---------------------------------------------------------------- checked ops
int64_t checked_add(int64_t a, int64_t b) {
    __int128 r = (__int128)a + b;
    if (r > INT64_MAX || r < INT64_MIN) throw overflow_error("integer overflow in addition");
    return (int64_t)r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    __int128 r = (__int128)a * b;
    if (r > INT64_MAX || r < INT64_MIN) throw overflow_error("integer overflow in multiplication");
    return (int64_t)r;
}

int64_t checked_pow(int64_t base, int e) {
    if (e < 0) {
        if (base == 1) return 1;
        if (base == -1) return (e % 2 == 0) ? 1 : -1;
        throw calc_error("negative power of non-unit integer");
    }
    int64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

// ---------------------------------------------------------------- exact_poly
exact_poly exact_poly::variable(var v, int num, int den) {
    mono m;
    switch (v) {
        case var::q:
            if ((4 * num) % den != 0) throw calc_error("unsupported fractional q-exponent");
            m.eq4 = 4 * num / den;
            break;
        case var::t:
            if ((2 * num) % den != 0) throw calc_error("unsupported fractional t-exponent");
            m.et2 = 2 * num / den;
            break;
        case var::a:
            if (num % den != 0) throw calc_error("unsupported fractional a-exponent");
            m.ea = num / den;
            break;
    }
    return exact_poly(1, m);
}

exact_poly& exact_poly::operator+=(const exact_poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

exact_poly& exact_poly::operator-=(const exact_poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = checked_mul(c, -1);
        } else {
            it->second = checked_add(it->second, -c);
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

exact_poly operator*(const exact_poly& l, const exact_poly& r) {
    exact_poly out;
    for (const auto& [ml, cl] : l.terms_) {
        for (const auto& [mr, cr] : r.terms_) {
            mono m = ml + mr;
            int64_t prod = checked_mul(cl, cr);
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                if (prod != 0) out.terms_[m] = prod;
            } else {
                it->second = checked_add(it->second, prod);
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

exact_poly exact_poly::operator-() const {
    exact_poly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = checked_mul(c, -1);
    return out;
}

exact_poly exact_poly::pow(int e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw calc_error("negative power of a non-monomial");
        auto [m, c] = *terms_.begin();
        return exact_poly(checked_pow(c, e), m.scaled(e));
    }
    exact_poly out(1);
    exact_poly base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

exact_poly exact_poly::substitute(var v, int64_t c, mono m) const {
    exact_poly out;
    for (const auto& [mm, cc] : terms_) {
        int e4, unit;
        switch (v) {
            case var::q: e4 = mm.eq4; unit = 4; break;
            case var::t: e4 = mm.et2; unit = 2; break;
            default: e4 = mm.ea; unit = 1; break;
        }
        if (e4 % unit != 0)
            throw calc_error("substitution into fractional exponent");
        int e = e4 / unit;
        mono rest = mm;
        switch (v) {
            case var::q: rest.eq4 = 0; break;
            case var::t: rest.et2 = 0; break;
            default: rest.ea = 0; break;
        }
        if (c == 0) {
            if (e < 0) throw calc_error("substituting zero into a negative exponent");
            if (e > 0) continue;  // term vanishes
            out += exact_poly(cc, rest);
            continue;
        }
        int64_t scaled = checked_mul(cc, checked_pow(c, e));
        out += exact_poly(scaled, rest + m.scaled(e));
    }
    return out;
}

exact_poly exact_poly::coeff_of_a(int k) const {
    exact_poly out;
    for (const auto& [m, c] : terms_) {
        if (m.ea == k) out += exact_poly(c, mono{m.eq4, m.et2, 0});
    }
    return out;
}

int exact_poly::min_exp4(var v) const {
    if (terms_.empty()) return 0;
    int best = INT32_MAX;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int e = (v == var::q) ? m.eq4 : (v == var::t) ? m.et2 : m.ea;
        best = std::min(best, e);
    }
    return best;
}

int exact_poly::max_exp4(var v) const {
    if (terms_.empty()) return 0;
    int best = INT32_MIN;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int e = (v == var::q) ? m.eq4 : (v == var::t) ? m.et2 : m.ea;
        best = std::max(best, e);
    }
    return best;
}

int exact_poly::max_adeg() const { return max_exp4(var::a); }

exact_poly exact_poly::hat_normalized() const {
    if (terms_.empty()) return *this;
    mono shift{-min_exp4(var::q), -min_exp4(var::t), -min_exp4(var::a)};
    exact_poly out;
    for (const auto& [m, c] : terms_) out.terms_[m + shift] = c;
    return out;
}

exact_poly exact_poly::divided_by(const exact_poly& d) const {
    if (d.is_zero()) throw division_not_exact("division by zero polynomial");
    exact_poly rem = *this;
    exact_poly quot;
    // leading term = maximal in the canonical order
    const auto& dl = *d.terms_.rbegin();
    size_t guard = 0, guard_max = 16u * (terms_.size() + 4) * (d.terms_.size() + 4) + 4096;
    while (!rem.is_zero()) {
        if (++guard > guard_max) throw division_not_exact("division does not terminate");
        const auto& rl = *rem.terms_.rbegin();
        if (rl.second % dl.second != 0)
            throw division_not_exact("leading coefficient does not divide");
        exact_poly term(rl.second / dl.second, rl.first - dl.first);
        quot += term;
        rem -= term * d;
    }
    return quot;
}

static void append_power(std::ostringstream& os, const char* name, int e, int unit, bool& first) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e == unit) return;
    if (e % unit == 0) {
        os << "^" << e / unit;
    } else {
        int g = std::gcd(std::abs(e), unit);
        os << "^(" << e / g << "/" << unit / g << ")";
    }
}

std::string exact_poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [m, c] : terms_) {
        int64_t mag = c;
        if (lead) {
            if (c < 0) {
                os << "-";
                mag = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            mag = std::abs(c);
        }
        lead = false;
        bool first = true;
        if (mag != 1 || (m.ea == 0 && m.et2 == 0 && m.eq4 == 0)) {
            os << mag;
            first = false;
        }
        append_power(os, "a", m.ea, 1, first);
        append_power(os, "q", m.eq4, 4, first);
        append_power(os, "t", m.et2, 2, first);
    }
    return os.str();
}

// ------------------------------------------------------------------ q-helpers
exact_poly qnumber(int n) {
    exact_poly out;
    for (int i = 0; i < n; ++i) out += exact_poly::monomial(1, i, 0, 0);
    return out;
}

exact_poly geometric_qt(int n) {
    exact_poly out;
    for (int i = 0; i < n; ++i) out += exact_poly::monomial(1, i, i, 0);
    return out;
}

exact_poly qbinomial(int n, int k) {
    if (k < 0 || k > n) return exact_poly();
    exact_poly num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num = num * qnumber(n - i);
        den = den * qnumber(i + 1);
    }
    return num.divided_by(den);
}

// ------------------------------------------------------------------- rational
static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

rational::rational(__int128 n, __int128 d) : num(n), den(d) {
    if (den == 0) throw calc_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

rational operator+(const rational& l, const rational& r) {
    return rational(l.num * r.den + r.num * l.den, l.den * r.den);
}
rational operator-(const rational& l, const rational& r) {
    return rational(l.num * r.den - r.num * l.den, l.den * r.den);
}
rational operator*(const rational& l, const rational& r) {
    return rational(l.num * r.num, l.den * r.den);
}
rational operator/(const rational& l, const rational& r) {
    if (r.num == 0) throw calc_error("rational division by zero");
    return rational(l.num * r.den, l.den * r.num);
}

int64_t rational::as_int64() const {
    if (den != 1) throw calc_error("rational is not an integer");
    if (num > INT64_MAX || num < INT64_MIN) throw overflow_error("rational exceeds 64 bits");
    return (int64_t)num;
}

std::vector<int64_t> interpolate_integer_poly(const std::vector<std::pair<int64_t, int64_t>>& pts) {
    // Newton form, then expand to monomial coefficients with rationals.
    size_t n = pts.size();
    std::vector<rational> divided(n);
    for (size_t i = 0; i < n; ++i) divided[i] = rational(pts[i].second);
    for (size_t lvl = 1; lvl < n; ++lvl) {
        for (size_t i = n - 1; i >= lvl; --i) {
            rational dx((__int128)pts[i].first - pts[i - lvl].first, 1);
            divided[i] = (divided[i] - divided[i - 1]) / dx;
            if (i == lvl) break;
        }
    }
    // expand Newton basis products
    std::vector<rational> coeffs(n, rational(0));
    std::vector<rational> basis{rational(1)};  // coefficients of prod (x - x_j)
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < basis.size(); ++j) coeffs[j] = coeffs[j] + divided[i] * basis[j];
        if (i + 1 < n) {
            basis.push_back(rational(0));
            for (size_t j = basis.size() - 1; j > 0; --j)
                basis[j] = basis[j - 1] - rational(pts[i].first) * basis[j];
            basis[0] = rational(0) - rational(pts[i].first) * basis[0];
        }
    }
    std::vector<int64_t> out(n);
    for (size_t i = 0; i < n; ++i) {
        if (!coeffs[i].is_integer())
            throw calc_error("interpolated polynomial has non-integer coefficients");
        out[i] = coeffs[i].as_int64();
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace curvelink
