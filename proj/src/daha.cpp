// daha.cpp -- straightening engine for the rank-one double affine Hecke
// algebra, the tau action, and DAHA-Jones polynomials of torus knots.

#include "curvelink/daha.hpp"

#include <numeric>
#include <sstream>

namespace curvelink {

namespace {

// q^{k/4}
exact_poly qq(int quarters) { return exact_poly(1, mono{quarters, 0, 0}); }
// t^{k/2}
exact_poly tt(int halves) { return exact_poly(1, mono{0, halves, 0}); }
// u = t^{1/2} - t^{-1/2}, the coefficient of the quadratic Hecke relation
const exact_poly& uu() {
    static const exact_poly u = tt(1) - tt(-1);
    return u;
}

void set_term(h_elt& e, h_mono k, exact_poly c) {
    if (c.is_zero())
        e.erase(k);
    else
        e[k] = std::move(c);
}

void add_term(h_elt& e, h_mono k, const exact_poly& c) {
    if (c.is_zero()) return;
    auto it = e.find(k);
    if (it == e.end()) {
        e.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
}

// one straightening term of a rule  Y^{s} X^{sigma} = sum rho X^alpha T^eta Y^beta
struct rule_term {
    int alpha;
    int eta;
    int beta;
    exact_poly rho;
};

// the four commutation rules between Y^{+-1} and X^{+-1}; every right-hand
// side is a combination of words with a single X-letter, so the recursion in
// basis_mul_X strictly shortens the Y-part
const std::vector<rule_term>& commutation_rule(int s, int sigma) {
    // Y X     = q^{-1/2} X Y       - q^{-1/2} u X T Y^{-1}
    static const std::vector<rule_term> pp = {{+1, 0, +1, qq(-2)}, {+1, 1, -1, -(qq(-2) * uu())}};
    // Y X^{-1} = q^{1/2} X^{-1} Y  + q^{-1/2} u X T Y^{-1}
    static const std::vector<rule_term> pm = {{-1, 0, +1, qq(2)}, {+1, 1, -1, qq(-2) * uu()}};
    // Y^{-1} X = q^{1/2} X Y^{-1}  + q^{1/2} u X T Y^{-1}
    static const std::vector<rule_term> mp = {{+1, 0, -1, qq(2)}, {+1, 1, -1, qq(2) * uu()}};
    // Y^{-1} X^{-1} = q^{-1/2} X^{-1} Y^{-1} - q^{-1/2} u X T Y^{-1}
    static const std::vector<rule_term> mm = {{-1, 0, -1, qq(-2)}, {+1, 1, -1, -(qq(-2) * uu())}};
    if (s > 0) return sigma > 0 ? pp : pm;
    return sigma > 0 ? mp : mm;
}

h_elt basis_mul_X(h_mono k, int sigma);

// X^a T^eps Y^b * T, straightened
h_elt basis_mul_T(h_mono k) {
    if (k.yb == 0) {
        if (k.te == 0) return h_single(k.xa, 1, 0);
        // T^2 = 1 + u T
        h_elt r = h_single(k.xa, 0, 0);
        add_term(r, {k.xa, 1, 0}, uu());
        return r;
    }
    if (k.yb > 0) {
        // Y T = T Y^{-1} + u Y
        h_elt r = elem_mul_Y(basis_mul_T({k.xa, k.te, k.yb - 1}), -1);
        add_term(r, k, uu());
        return r;
    }
    // Y^{-1} T = T Y - u Y
    h_elt r = elem_mul_Y(basis_mul_T({k.xa, k.te, k.yb + 1}), +1);
    add_term(r, {k.xa, k.te, k.yb + 2}, -uu());
    return r;
}

// X^a T^eps Y^b * X^{sigma}, straightened
h_elt basis_mul_X(h_mono k, int sigma) {
    if (k.yb != 0) {
        int sb = k.yb > 0 ? 1 : -1;
        h_elt base = h_single(k.xa, k.te, k.yb - sb);
        h_elt out;
        for (const rule_term& rt : commutation_rule(sb, sigma)) {
            h_elt cur = elem_mul_X(base, rt.alpha);
            if (rt.eta) cur = elem_mul_T(cur);
            cur = elem_mul_Y(cur, rt.beta);
            h_axpy(out, cur, rt.rho);
        }
        return out;
    }
    if (k.te == 1) {
        if (sigma > 0) {
            // T X = X^{-1} T - u X^{-1}
            h_elt r = h_single(k.xa - 1, 1, 0);
            add_term(r, {k.xa - 1, 0, 0}, -uu());
            return r;
        }
        // T X^{-1} = X T + u X^{-1}
        h_elt r = h_single(k.xa + 1, 1, 0);
        add_term(r, {k.xa - 1, 0, 0}, uu());
        return r;
    }
    return h_single(k.xa + sigma, 0, 0);
}

}  // namespace

h_elt h_one() { return h_single(0, 0, 0); }

h_elt h_single(int xa, int te, int yb, exact_poly c) {
    h_elt e;
    set_term(e, {xa, te, yb}, std::move(c));
    return e;
}

void h_axpy(h_elt& acc, const h_elt& e, const exact_poly& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : e) add_term(acc, k, v * c);
}

h_elt h_scale(const h_elt& e, const exact_poly& c) {
    h_elt r;
    h_axpy(r, e, c);
    return r;
}

bool h_is_zero(const h_elt& e) { return e.empty(); }

bool h_equal(const h_elt& l, const h_elt& r) { return l == r; }

std::string h_str(const h_elt& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : e) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.xa != 0) os << "*X^" << k.xa;
        if (k.te != 0) os << "*T";
        if (k.yb != 0) os << "*Y^" << k.yb;
    }
    return os.str();
}

h_elt elem_mul_X(const h_elt& e, int sigma) {
    h_elt out;
    for (const auto& [k, c] : e) h_axpy(out, basis_mul_X(k, sigma), c);
    return out;
}

h_elt elem_mul_T(const h_elt& e) {
    h_elt out;
    for (const auto& [k, c] : e) h_axpy(out, basis_mul_T(k), c);
    return out;
}

h_elt elem_mul_Tinv(const h_elt& e) {
    // T^{-1} = T - u from the quadratic relation
    h_elt out = elem_mul_T(e);
    h_axpy(out, e, -uu());
    return out;
}

h_elt elem_mul_Y(const h_elt& e, int sigma) {
    h_elt out;
    for (const auto& [k, c] : e) set_term(out, {k.xa, k.te, k.yb + sigma}, c);
    return out;
}

h_elt h_mul(const h_elt& l, const h_elt& r) {
    h_elt out;
    for (const auto& [k, c] : r) {
        h_elt cur = h_scale(l, c);
        for (int i = 0; i < std::abs(k.xa); ++i) cur = elem_mul_X(cur, k.xa > 0 ? 1 : -1);
        if (k.te) cur = elem_mul_T(cur);
        if (k.yb != 0) {
            h_elt shifted;
            for (const auto& [kk, cc] : cur) set_term(shifted, {kk.xa, kk.te, kk.yb + k.yb}, cc);
            cur = std::move(shifted);
        }
        h_axpy(out, cur, exact_poly(1));
    }
    return out;
}

h_elt normal_form(const std::vector<std::pair<char, int>>& word) {
    h_elt e = h_one();
    for (const auto& [letter, exp] : word) {
        int sgn = exp > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(exp); ++i) {
            switch (letter) {
                case 'X': e = elem_mul_X(e, sgn); break;
                case 'Y': e = elem_mul_Y(e, sgn); break;
                case 'T': e = sgn > 0 ? elem_mul_T(e) : elem_mul_Tinv(e); break;
                default: throw calc_error("unknown generator letter in word");
            }
        }
    }
    return e;
}

h_elt apply_tau(const h_elt& e, int dir, bool inverse) {
    // straightened image of the moved generator and of its inverse
    h_elt img, img_inv;
    if (dir > 0) {
        if (!inverse) {
            // tau_plus: Y -> q^{-1/4} X Y
            img = h_single(1, 0, 1, qq(-1));
            img_inv = h_single(-1, 0, -1, qq(-1));
            add_term(img_inv, {1, 1, -1}, -(qq(-1) * uu()));
        } else {
            // tau_plus^{-1}: Y -> q^{1/4} X^{-1} Y
            img = h_single(-1, 0, 1, qq(1));
            img_inv = h_single(1, 0, -1, qq(1));
            add_term(img_inv, {1, 1, -1}, qq(1) * uu());
        }
    } else {
        if (!inverse) {
            // tau_minus: X -> q^{1/4} Y X
            img = h_single(1, 0, 1, qq(-1));
            add_term(img, {1, 1, -1}, -(qq(-1) * uu()));
            img_inv = h_single(-1, 0, -1, qq(-1));
        } else {
            // tau_minus^{-1}: X -> q^{-1/4} Y^{-1} X
            img = h_single(1, 0, -1, qq(1));
            add_term(img, {1, 1, -1}, qq(1) * uu());
            img_inv = h_single(-1, 0, 1, qq(1));
        }
    }
    std::map<int, h_elt> pw;
    pw[0] = h_one();
    auto power = [&](int k) -> const h_elt& {
        int step = k > 0 ? 1 : -1;
        for (int j = step; !pw.count(k); j += step)
            if (!pw.count(j)) pw[j] = h_mul(pw[j - step], step > 0 ? img : img_inv);
        return pw[k];
    };
    h_elt out;
    for (const auto& [k, c] : e) {
        h_elt cur;
        if (dir > 0)
            cur = h_mul(h_single(k.xa, k.te, 0), power(k.yb));
        else
            cur = h_mul(power(k.xa), h_single(0, k.te, k.yb));
        h_axpy(out, cur, c);
    }
    return out;
}

exact_poly coinvariant(const h_elt& e) {
    exact_poly r;
    for (const auto& [k, c] : e) r += c * tt(-k.xa + k.te + k.yb);
    return r;
}

std::vector<int> tau_word(int r, int s, int budget) {
    if (r < 1 || s < 0 || std::gcd(r, s) != 1) throw non_coprime("tau_word needs coprime r >= 1, s >= 0");
    std::vector<int> word;
    int letters = 0;
    while (!(r == 1 && s == 0)) {
        int k;
        if (r > s) {
            k = r / s;
            if (r % s == 0) --k;
            word.push_back(k);
            r -= k * s;
        } else if (s > r) {
            k = s / r;
            if (s % r == 0) --k;
            word.push_back(-k);
            s -= k * r;
        } else {  // r == s == 1
            k = 1;
            word.push_back(-1);
            s = 0;
        }
        letters += k;
        if (letters > budget) throw word_budget_exceeded("tau word longer than budget");
    }
    // merge adjacent powers of the same tau
    std::vector<int> merged;
    for (int k : word) {
        if (!merged.empty() && (merged.back() > 0) == (k > 0))
            merged.back() += k;
        else
            merged.push_back(k);
    }
    return merged;
}

h_elt apply_tau_word(const h_elt& e, const std::vector<int>& word) {
    h_elt cur = e;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int dir = *it > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(*it); ++i) cur = apply_tau(cur, dir);
    }
    return cur;
}

// polynomial representation ---------------------------------------------------

namespace {

void xp_add_term(xpoly& f, int k, const exact_poly& c) {
    if (c.is_zero()) return;
    auto it = f.find(k);
    if (it == f.end()) {
        f.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
}

xpoly xp_reflect(const xpoly& f) {
    xpoly g;
    for (const auto& [k, c] : f) g[-k] = c;
    return g;
}

// exact ascending division by X^2 - 1; the dividend must be divisible (which
// s(f) - f always is)
xpoly xp_div_x2m1(const xpoly& g) {
    if (g.empty()) return {};
    int lo = g.begin()->first;
    int hi = g.rbegin()->first;
    xpoly h;
    auto coeff_at = [](const xpoly& p, int k) -> exact_poly {
        auto it = p.find(k);
        return it == p.end() ? exact_poly() : it->second;
    };
    for (int k = lo; k <= hi; ++k) {
        exact_poly hk = coeff_at(h, k - 2) - coeff_at(g, k);
        if (!hk.is_zero()) h[k] = hk;
    }
    if (!coeff_at(h, hi).is_zero() || !coeff_at(h, hi - 1).is_zero())
        throw calc_error("reflection difference not divisible by X^2 - 1");
    return h;
}

// X^k -> q^{sigma k / 2} X^k
xpoly xp_qshift(const xpoly& f, int sigma) {
    xpoly g;
    for (const auto& [k, c] : f) g[k] = c * exact_poly(1, mono{2 * k * sigma, 0, 0});
    return g;
}

xpoly xp_scale(const xpoly& f, const exact_poly& c) {
    xpoly g;
    for (const auto& [k, v] : f) xp_add_term(g, k, v * c);
    return g;
}

xpoly xp_add(xpoly f, const xpoly& g) {
    for (const auto& [k, c] : g) xp_add_term(f, k, c);
    return f;
}

}  // namespace

xpoly xp_one() { return xpoly{{0, exact_poly(1)}}; }

xpoly xp_monomial(int k, exact_poly c) {
    xpoly f;
    if (!c.is_zero()) f[k] = std::move(c);
    return f;
}

bool xp_equal(const xpoly& f, const xpoly& g) { return f == g; }

xpoly rep_X(const xpoly& f, int sigma) {
    xpoly g;
    for (const auto& [k, c] : f) g[k + sigma] = c;
    return g;
}

xpoly rep_T(const xpoly& f) {
    // T = t^{1/2} s + (t^{1/2} - t^{-1/2}) (X^2 - 1)^{-1} (s - 1)
    xpoly sf = xp_reflect(f);
    xpoly diff = xp_add(sf, xp_scale(f, exact_poly(-1)));
    xpoly h = xp_div_x2m1(diff);
    return xp_add(xp_scale(sf, tt(1)), xp_scale(h, uu()));
}

xpoly rep_Tinv(const xpoly& f) { return xp_add(rep_T(f), xp_scale(f, -uu())); }

xpoly rep_Y(const xpoly& f, int sigma) {
    if (sigma > 0) {
        // Y = s p T: apply T, multiply X^k by q^{k/2}, reflect
        return xp_reflect(xp_qshift(rep_T(f), 1));
    }
    // Y^{-1} = T^{-1} p^{-1} s
    return rep_Tinv(xp_qshift(xp_reflect(f), -1));
}

xpoly rep_act(const h_elt& e, const xpoly& f) {
    xpoly out;
    for (const auto& [k, c] : e) {
        xpoly cur = f;
        for (int i = 0; i < std::abs(k.yb); ++i) cur = rep_Y(cur, k.yb > 0 ? 1 : -1);
        if (k.te) cur = rep_T(cur);
        if (k.xa != 0) cur = rep_X(cur, k.xa);  // shift by the full amount
        out = xp_add(out, xp_scale(cur, c));
    }
    return out;
}

exact_poly rep_eval(const xpoly& f) {
    exact_poly r;
    for (const auto& [k, c] : f) r += c * tt(-k);
    return r;
}

h_elt macdonald_p(int m) {
    if (m < 1 || m > 3) throw word_budget_exceeded("Macdonald weight beyond default budget (m <= 3)");
    if (m == 1) return h_single(1, 0, 0);  // E_1 = X
    // triangular solve for P_m = A (X^m + X^{-m}) + B v_1 as an eigenvector
    // of Y + Y^{-1}, where v_1 = 1 (m = 2) or X + X^{-1} (m = 3)
    int j = m - 2;
    xpoly b0 = xp_add(xp_monomial(m), xp_monomial(-m));
    xpoly v1 = j == 0 ? xp_one() : xp_add(xp_monomial(j), xp_monomial(-j));
    auto L = [](const xpoly& f) { return xp_add(rep_Y(f, 1), rep_Y(f, -1)); };
    xpoly Lb0 = L(b0);
    xpoly Lv1 = L(v1);
    auto coeff_at = [](const xpoly& p, int k) -> exact_poly {
        auto it = p.find(k);
        return it == p.end() ? exact_poly() : it->second;
    };
    exact_poly gamma = coeff_at(Lv1, j);
    if (!xp_equal(Lv1, xp_scale(v1, gamma)))
        throw calc_error("lower Macdonald polynomial is not an eigenvector");
    exact_poly alpha = coeff_at(Lb0, m);
    xpoly rem = xp_add(Lb0, xp_scale(b0, -alpha));
    exact_poly beta = coeff_at(rem, j);
    if (!xp_equal(rem, xp_scale(v1, beta)))
        throw calc_error("Macdonald operator is not triangular on the symmetric basis");
    exact_poly A = alpha - gamma;  // denominator-clearing leading coefficient
    h_elt p = h_single(m, 0, 0, A);
    add_term(p, {-m, 0, 0}, A);
    if (j == 0) {
        add_term(p, {0, 0, 0}, beta);
    } else {
        add_term(p, {j, 0, 0}, beta);
        add_term(p, {-j, 0, 0}, beta);
    }
    return p;
}

jd_result daha_jones_word(const std::vector<int>& word, int m) {
    h_elt p = macdonald_p(m);
    exact_poly den = coinvariant(p);
    h_elt image = apply_tau_word(p, word);
    exact_poly raw = coinvariant(image).divided_by(den);
    return {raw.hat_normalized(), raw, word};
}

jd_result daha_jones(int r, int s, int m) { return daha_jones_word(tau_word(r, s), m); }

}  // namespace curvelink
