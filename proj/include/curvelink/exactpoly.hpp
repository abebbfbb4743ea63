// exactpoly.hpp -- exact Laurent polynomials in q, t, a over the integers.
//
// Exponents live on a refined lattice: the q-exponent is stored in quarter
// units and the t-exponent in half units, so expressions such as q^{1/4} or
// t^{3/2} (which appear in double affine Hecke algebra computations) stay
// exact.  Coefficients are 64-bit integers; every arithmetic step is checked
// through 128-bit intermediates and throws overflow_error on overflow rather
// than wrapping.
//
// The canonical term order (used for printing and serialization) is
// ascending in (a-exponent, t-exponent, q-exponent).

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curvelink {

struct calc_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct overflow_error : calc_error {
    using calc_error::calc_error;
};
struct division_not_exact : calc_error {
    using calc_error::calc_error;
};

// checked 64-bit helpers ----------------------------------------------------
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t checked_pow(int64_t base, int e);

// monomial -------------------------------------------------------------------
enum class var : int { q = 0, t = 1, a = 2 };

struct mono {
    int eq4 = 0;  // exponent of q in quarter units
    int et2 = 0;  // exponent of t in half units
    int ea = 0;   // exponent of a

    friend mono operator+(mono l, mono r) {
        return {l.eq4 + r.eq4, l.et2 + r.et2, l.ea + r.ea};
    }
    friend mono operator-(mono l, mono r) {
        return {l.eq4 - r.eq4, l.et2 - r.et2, l.ea - r.ea};
    }
    mono scaled(int k) const { return {eq4 * k, et2 * k, ea * k}; }
    // canonical order: (ea, et2, eq4) ascending
    friend bool operator<(const mono& l, const mono& r) {
        if (l.ea != r.ea) return l.ea < r.ea;
        if (l.et2 != r.et2) return l.et2 < r.et2;
        return l.eq4 < r.eq4;
    }
    friend bool operator==(const mono& l, const mono& r) = default;
};

// convenience constructors for integral exponents
inline mono mono_qta(int eq, int et, int ea) { return {4 * eq, 2 * et, ea}; }

// polynomial -----------------------------------------------------------------
class exact_poly {
  public:
    exact_poly() = default;
    explicit exact_poly(int64_t c) {
        if (c != 0) terms_[mono{}] = c;
    }
    exact_poly(int64_t c, mono m) {
        if (c != 0) terms_[m] = c;
    }

    static exact_poly variable(var v, int num = 1, int den = 1);
    // q^eq t^et a^ea with integral exponents
    static exact_poly monomial(int64_t c, int eq, int et, int ea) {
        return exact_poly(c, mono_qta(eq, et, ea));
    }

    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::map<mono, int64_t>& terms() const { return terms_; }

    int64_t coeff(mono m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }
    int64_t coeff_qta(int eq, int et, int ea) const { return coeff(mono_qta(eq, et, ea)); }

    exact_poly& operator+=(const exact_poly& o);
    exact_poly& operator-=(const exact_poly& o);
    friend exact_poly operator+(exact_poly l, const exact_poly& r) { return l += r; }
    friend exact_poly operator-(exact_poly l, const exact_poly& r) { return l -= r; }
    friend exact_poly operator*(const exact_poly& l, const exact_poly& r);
    exact_poly& operator*=(const exact_poly& o) { return *this = *this * o; }
    friend exact_poly operator*(const exact_poly& l, int64_t c) { return l * exact_poly(c); }
    friend exact_poly operator*(int64_t c, const exact_poly& r) { return exact_poly(c) * r; }
    exact_poly operator-() const;
    friend bool operator==(const exact_poly& l, const exact_poly& r) {
        return l.terms_ == r.terms_;
    }

    exact_poly pow(int e) const;  // e >= 0, or arbitrary for single monomials

    // substitute variable v by  c * (monomial m);  c == 0 is allowed and
    // kills/faults terms according to the sign of the exponent.
    exact_poly substitute(var v, int64_t c, mono m) const;
    // common specializations
    exact_poly at_a(int64_t c) const { return substitute(var::a, c, mono{}); }
    exact_poly coeff_of_a(int k) const;  // coefficient of a^k (poly in q,t)
    int min_exp4(var v) const;           // min exponent in lattice units (0 if zero poly)
    int max_exp4(var v) const;
    int max_adeg() const;

    // multiply by the unique monomial making all per-variable minimal
    // exponents zero
    exact_poly hat_normalized() const;

    // exact division; throws division_not_exact
    exact_poly divided_by(const exact_poly& d) const;

    std::string str() const;

  private:
    std::map<mono, int64_t> terms_;  // canonical (ea, et2, eq4) ascending
    void set(mono m, int64_t c) {
        if (c == 0)
            terms_.erase(m);
        else
            terms_[m] = c;
    }
};

// small q-polynomial helpers -------------------------------------------------
exact_poly qbinomial(int n, int k);            // Gaussian binomial [n,k]_q
exact_poly qnumber(int n);                     // 1 + q + ... + q^{n-1}
exact_poly geometric_qt(int n);                // 1 + qt + ... + (qt)^{n-1}

// rational numbers over 128-bit integers (for polynomial interpolation) ------
struct rational {
    __int128 num = 0;
    __int128 den = 1;
    rational() = default;
    rational(int64_t n) : num(n), den(1) {}
    rational(__int128 n, __int128 d);
    friend rational operator+(const rational&, const rational&);
    friend rational operator-(const rational&, const rational&);
    friend rational operator*(const rational&, const rational&);
    friend rational operator/(const rational&, const rational&);
    friend bool operator==(const rational&, const rational&) = default;
    bool is_integer() const { return den == 1; }
    int64_t as_int64() const;
};

// Lagrange interpolation through (x_i, y_i); returns coefficients c_0..c_{n-1}
// of the unique degree < n polynomial.  Throws if the coefficients are not
// integral.
std::vector<int64_t> interpolate_integer_poly(const std::vector<std::pair<int64_t, int64_t>>& pts);

}  // namespace curvelink
