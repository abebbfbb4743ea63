// daha.hpp -- the rank-one double affine Hecke algebra and its Jones-type
// invariants of torus knots.
//
// Elements are stored in the PBW-style basis X^a T^eps Y^b (a, b integers,
// eps in {0,1}) with coefficients that are exact Laurent polynomials in
// q^{1/4} and t^{1/2}.  Products are straightened with the defining
// relations
//
//     T X T X = 1,          T Y^{-1} T Y^{-1} = 1,
//     (T - t^{1/2})(T + t^{-1/2}) = 0,
//     Y^{-1} X^{-1} Y X T^2 = q^{-1/2},
//
// so every result is again a combination of basis words; no rational
// functions ever appear.  The projective-PSL(2,Z) action is realised by the
// two automorphisms
//
//     tau_plus  : X -> X,           Y -> q^{-1/4} X Y,   T -> T,
//     tau_minus : X -> q^{1/4} Y X, Y -> Y,              T -> T,
//
// and torus-knot invariants are obtained by lifting a matrix with first
// column (r, s) to a word in tau_plus/tau_minus, applying it to a Macdonald
// polynomial in X, and taking the Hecke coinvariant
//
//     { X^a T^eps Y^b }_ev = t^{(-a + eps + b)/2}.
//
// A faithful polynomial representation on Laurent polynomials in X (with
// T acting by the Demazure-Lusztig operator) is included as an independent
// cross-check of the straightening rules.

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "curvelink/exactpoly.hpp"

namespace curvelink {

struct non_coprime : calc_error {
    using calc_error::calc_error;
};
struct word_budget_exceeded : calc_error {
    using calc_error::calc_error;
};

// basis word X^a T^eps Y^b
struct h_mono {
    int xa = 0;
    int te = 0;  // 0 or 1
    int yb = 0;
    friend bool operator<(const h_mono& l, const h_mono& r) {
        if (l.xa != r.xa) return l.xa < r.xa;
        if (l.te != r.te) return l.te < r.te;
        return l.yb < r.yb;
    }
    friend bool operator==(const h_mono& l, const h_mono& r) = default;
};

// algebra element: finite sum of basis words with exact coefficients
using h_elt = std::map<h_mono, exact_poly>;

h_elt h_one();
h_elt h_single(int xa, int te, int yb, exact_poly c = exact_poly(1));
void h_axpy(h_elt& acc, const h_elt& e, const exact_poly& c);  // acc += c*e
h_elt h_scale(const h_elt& e, const exact_poly& c);
bool h_is_zero(const h_elt& e);
bool h_equal(const h_elt& l, const h_elt& r);
std::string h_str(const h_elt& e);

// right multiplication by a single generator (results straightened)
h_elt elem_mul_X(const h_elt& e, int sigma);  // by X^{sigma}, sigma = +-1
h_elt elem_mul_T(const h_elt& e);
h_elt elem_mul_Tinv(const h_elt& e);          // T^{-1} = T - (t^{1/2}-t^{-1/2})
h_elt elem_mul_Y(const h_elt& e, int sigma);  // by Y^{sigma}, sigma = +-1

// full product in the algebra
h_elt h_mul(const h_elt& l, const h_elt& r);

// straighten an abstract word: letters 'X', 'T', 'Y' with integer exponents,
// multiplied left to right starting from 1
h_elt normal_form(const std::vector<std::pair<char, int>>& word);

// tau_plus (dir = +1) or tau_minus (dir = -1); inverse applies the inverse
// automorphism
h_elt apply_tau(const h_elt& e, int dir, bool inverse = false);

// Hecke coinvariant {.}_ev
exact_poly coinvariant(const h_elt& e);

// lift of a PSL(2,Z) matrix with first column (r, s), gcd(r, s) = 1, to a
// word in the tau's.  Entries +k / -k mean tau_plus^k / tau_minus^k; the
// first entry acts last (outermost).  Throws non_coprime, or
// word_budget_exceeded if the total letter count passes the budget.
std::vector<int> tau_word(int r, int s, int budget = 64);

// apply a tau word (innermost entry first, i.e. the vector is consumed from
// the back)
h_elt apply_tau_word(const h_elt& e, const std::vector<int>& word);

// polynomial representation on Laurent polynomials in X ----------------------
// coefficient map: X-exponent -> coefficient
using xpoly = std::map<int, exact_poly>;

xpoly xp_one();
xpoly xp_monomial(int k, exact_poly c = exact_poly(1));
bool xp_equal(const xpoly& f, const xpoly& g);

xpoly rep_X(const xpoly& f, int sigma);
xpoly rep_T(const xpoly& f);     // Demazure-Lusztig operator
xpoly rep_Tinv(const xpoly& f);
xpoly rep_Y(const xpoly& f, int sigma);
// act by a straightened element (operator composition, Y-part first)
xpoly rep_act(const h_elt& e, const xpoly& f);
// evaluation X -> t^{-1/2}
exact_poly rep_eval(const xpoly& f);

// symmetric Macdonald polynomial of weight m (A_1), computed as a
// Y + Y^{-1} eigenvector by a triangular solve in the polynomial
// representation and returned with denominators cleared (the overall scalar
// cancels from normalized invariants).  m = 1 returns E_1 = X.  m <= 3.
h_elt macdonald_p(int m);

// DAHA-Jones polynomial of the (r, s) torus knot colored by weight m
struct jd_result {
    exact_poly normalized;  // hat-normalized invariant
    exact_poly raw;         // coinvariant ratio before normalization
    std::vector<int> word;  // tau word used
};

jd_result daha_jones(int r, int s, int m = 1);
// same but with an explicit tau word (for word-independence checks)
jd_result daha_jones_word(const std::vector<int>& word, int m = 1);

}  // namespace curvelink
