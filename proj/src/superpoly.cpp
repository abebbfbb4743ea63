#include "curvelink/superpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace curvelink {

namespace {

exact_poly qt(int eq, int et) { return exact_poly::monomial(1, eq, et, 0); }
exact_poly qq(int e) { return exact_poly::monomial(1, e, 0, 0); }
exact_poly tt(int e) { return exact_poly::monomial(1, 0, e, 0); }
exact_poly one_plus_aq(int j) { return exact_poly(1) + exact_poly::monomial(1, j, 0, 1); }
exact_poly qm1() { return qq(1) - exact_poly(1); }  // q - 1

}  // namespace

exact_poly hmot_trefoil() { return exact_poly(1) + qt(1, 1) + exact_poly::monomial(1, 1, 0, 1); }

exact_poly hmot_torus_odd2(int n) {
    if (n < 1) throw calc_error("need n >= 1");
    return qt(n, n) + geometric_qt(n) * one_plus_aq(1);
}

exact_poly hmot_torus_odd2_c2(int n) {
    if (n < 1) throw calc_error("need n >= 1");
    const exact_poly a0 = qt(4 * n, 2 * n);
    const exact_poly a1 = qt(3 * n - 1, n) * (exact_poly(1) + qq(1)) * geometric_qt(n);
    exact_poly a2;
    for (int i = 0; i < n; ++i) a2 += qt(2 * i, i) * qnumber(i + 1);
    for (int i = n; i <= 2 * n - 2; ++i) a2 += qt(2 * i, i) * qnumber(2 * n - 1 - i);
    return a0 + a1 * one_plus_aq(2) + a2 * one_plus_aq(2) * one_plus_aq(3);
}

exact_poly hmot_colored_trefoil(int c) {
    if (c < 1) throw calc_error("need c >= 1");
    exact_poly out;
    for (int k = 0; k <= c; ++k) {
        exact_poly term = qt(c * k, k) * qbinomial(c, k);
        for (int i = c; i <= 2 * c - k - 1; ++i) term *= one_plus_aq(i);
        out += term;
    }
    return out;
}

exact_poly hmot_colored_trefoil_afactor(int c) {
    if (c < 1) throw calc_error("need c >= 1");
    exact_poly out;
    for (int k = 0; k <= c; ++k) {
        exact_poly term = qt(c * k, k) * qbinomial(c, k);
        for (int i = 0; i < k; ++i)
            term *= exact_poly(1) + exact_poly::monomial(1, i, -1, 1);  // 1 + (a/t) q^i
        out += term;
    }
    return out;
}

exact_poly hmot_hopf_colored(int m) {
    if (m < 1) throw calc_error("need m >= 1");
    return one_plus_aq(m) + (qq(m) - exact_poly(1)) * tt(1);
}

exact_poly hmot_hopf3() {
    return one_plus_aq(1) * one_plus_aq(2) + qm1() * qm1() * qt(1, 3) +
           one_plus_aq(1) * (qm1() * (qq(1) + exact_poly(2)) * tt(1) + qm1() * qm1() * tt(2));
}

exact_poly hmot_hopf3_211() {
    const exact_poly block1 =
        qm1() * qm1() * (exact_poly(1) + qq(1)) * qt(1, 2) * (exact_poly(1) + qt(1, 1));
    const exact_poly block2 =
        qm1() * tt(1) *
        (exact_poly(2) + qq(1) * 2 + qq(2) + (qq(2) - exact_poly(1)) * tt(1)) * one_plus_aq(2);
    return block1 + block2 + one_plus_aq(2) * one_plus_aq(3);
}

exact_poly hmot_t64() {
    const exact_poly r1 = qt(7, 8) * qm1();
    const exact_poly r4 = one_plus_aq(1) * one_plus_aq(2) * one_plus_aq(3) *
                          (exact_poly(1) + qm1() * tt(1) + qq(1) * qm1() * tt(2));
    const exact_poly r3 =
        one_plus_aq(1) * one_plus_aq(2) *
        (qq(2) * (exact_poly(1) + qq(1)) * tt(1) + qq(2) * (qq(2) - exact_poly(1)) * tt(2) +
         qq(2) * (qq(1) + exact_poly(1)) * (qq(2) - exact_poly(1)) * tt(3) +
         qq(3) * (qq(2) - exact_poly(1)) * tt(4) + qq(4) * qm1() * tt(5));
    const exact_poly r2 =
        one_plus_aq(1) *
        (qt(4, 2) + qq(3) * qm1() * qm1() * tt(3) + qt(5, 4) * qm1() * 2 +
         qq(5) * (qq(2) - exact_poly(1)) * tt(5) + qq(5) * (qq(2) - exact_poly(1)) * tt(6) +
         qq(6) * qm1() * tt(7));
    return r1 + r2 + r3 + r4;
}

exact_poly hmot_g4613() {
    const exact_poly r1 = qt(8, 8);
    const exact_poly r4 = one_plus_aq(1) * one_plus_aq(2) * one_plus_aq(3) *
                          (exact_poly(1) + qt(1, 1) + qt(2, 2));
    const exact_poly r3 = one_plus_aq(1) * one_plus_aq(2) *
                          (qq(2) * (exact_poly(1) + qq(1)) * tt(1) + qq(2) * (qq(1) + qq(2)) * tt(2) +
                           qq(2) * (qq(1) + qq(2) * 2 + qq(3)) * tt(3) +
                           qq(2) * (qq(2) + qq(3)) * tt(4) + qt(5, 5));
    const exact_poly r2 =
        one_plus_aq(1) * (qt(4, 2) + qm1() * qq(4) * tt(3) + qt(6, 4) * 2 +
                          qq(4) * (qq(2) + qq(3)) * tt(5) + qq(4) * (qq(2) + qq(3)) * tt(6) +
                          qt(7, 7));
    return r1 + r2 + r3 + r4;
}

exact_poly hmot_t73() {
    const exact_poly r1 = qt(6, 6);
    const exact_poly r3 = one_plus_aq(1) * one_plus_aq(2) *
                          (exact_poly(1) + qt(1, 1) + qt(2, 1) + qt(2, 2) + qt(3, 3));
    const exact_poly r2 = one_plus_aq(1) * (qt(3, 2) + qt(4, 2) + qt(4, 3) + qt(4, 4) + qt(5, 4) +
                                            qt(5, 5));
    return r1 + r2 + r3;
}

exact_poly hmot_t94() {
    exact_poly p1;  // rank-2 interior
    p1 += qq(1) - tt(1) + qt(2, 1) + qt(2, 2) * 2 + qt(3, 2) - qt(1, 3) + qt(2, 3) + qt(3, 3);
    p1 += qt(3, 4) * 2 + qt(3, 5) + qt(4, 5) + qt(3, 6) + qt(4, 6) + qt(4, 7);
    exact_poly p2;  // rank-3 interior
    p2 += exact_poly(1) + qq(1) + qq(2) + qt(1, 1) + qt(2, 1) * 2 + qt(3, 1) + qt(2, 2) * 2 +
          qt(3, 2) * 2 + qt(4, 2);
    p2 += qt(2, 3) + qt(3, 3) * 3 + qt(4, 3) * 2 + qt(3, 4) + qt(4, 4) * 2 + qt(3, 5) +
          qt(4, 5) * 2 + qt(5, 5);
    p2 += qt(4, 6) + qt(5, 6) + qt(5, 7);
    exact_poly p3;  // rank-4 block
    p3 += exact_poly(1) + qt(1, 1) + qt(2, 1) + qt(3, 1) + qt(2, 2) + qt(3, 2) + qt(4, 2);
    p3 += qt(3, 3) + qt(4, 3) + qt(5, 3) + qt(4, 4) + qt(5, 4) + qt(5, 5) + qt(6, 6);
    return qt(12, 12) + one_plus_aq(1) * qt(7, 4) * p1 +
           one_plus_aq(1) * one_plus_aq(2) * qt(4, 2) * p2 +
           one_plus_aq(1) * one_plus_aq(2) * one_plus_aq(3) * p3;
}

exact_poly hmot_g456() {
    return qt(4, 4) + one_plus_aq(1) * (qt(2, 2) + qt(3, 2) + qt(4, 2) + qt(3, 3)) +
           one_plus_aq(1) * one_plus_aq(2) * (qt(1, 1) + qt(2, 1) + qt(3, 1)) +
           one_plus_aq(1) * one_plus_aq(2) * one_plus_aq(3);
}

exact_poly hmot_trefoil_unknot_lk2() {
    return qq(2) * qm1() * tt(3) + one_plus_aq(1) * one_plus_aq(2) +
           one_plus_aq(1) * (qt(2, 1) + qm1() * tt(1) + qq(1) * qm1() * tt(2));
}

exact_poly hmot_trefoil_unknot_lk3() {
    return qq(3) * qm1() * tt(4) +
           one_plus_aq(1) * one_plus_aq(2) * (exact_poly(1) + qm1() * tt(1)) +
           one_plus_aq(1) *
               (qt(2, 1) + qq(1) * (qq(2) - exact_poly(1)) * tt(2) + qq(2) * qm1() * tt(3));
}

exact_poly reconstruct_in_q(const std::vector<std::pair<int, exact_poly>>& evals, int max_deg) {
    if ((int)evals.size() < max_deg + 1)
        throw calc_error("not enough sample points for the requested q-degree");
    std::map<mono, std::vector<int64_t>> table;  // (t,a)-mono -> values per sample
    for (size_t i = 0; i < evals.size(); ++i)
        for (const auto& [m, c] : evals[i].second.terms()) {
            if (m.eq4 != 0) throw calc_error("sample polynomial still mentions q");
            auto& vals = table[m];
            vals.resize(evals.size(), 0);
            vals[i] = c;
        }
    exact_poly out;
    for (const auto& [m, vals] : table) {
        std::vector<std::pair<int64_t, int64_t>> pts;
        for (size_t i = 0; i < evals.size(); ++i)
            pts.emplace_back(evals[i].first, i < vals.size() ? vals[i] : 0);
        const auto coeffs = interpolate_integer_poly(pts);
        for (size_t j = 0; j < coeffs.size(); ++j) {
            if (!coeffs[j]) continue;
            if ((int)j > max_deg)
                throw calc_error("census values need q-degree beyond the stated bound");
            out += exact_poly(coeffs[j], mono{(int)(4 * j), m.et2, m.ea});
        }
    }
    return out;
}

long long count_subspaces(int q, int n, int k) {
    if (k < 0 || n < 0) throw calc_error("bad subspace parameters");
    if (k > n) return 0;
    if (k == 0) return 1;
    // walk pivot column combinations; count echelon matrices one by one
    std::vector<int> piv(k);
    long long total = 0;
    auto rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == k) {
            int free = 0;
            for (int i = 0; i < k; ++i) {
                for (int c = piv[i] + 1; c < n; ++c) {
                    bool is_pivot = false;
                    for (int j = 0; j < k; ++j) is_pivot |= (piv[j] == c);
                    if (!is_pivot) ++free;
                }
            }
            long long leaves = 1;
            for (int i = 0; i < free; ++i) {
                leaves = checked_mul(leaves, q);
                if (leaves > 100'000'000) throw calc_error("subspace oracle too large");
            }
            for (long long l = 0; l < leaves; ++l) ++total;  // literal walk
            return;
        }
        for (int c = from; c < n; ++c) {
            piv[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    rec(rec, 0, 0);
    return total;
}

exact_poly flag_oracle_from_census(const census_result& c, int q, int c1) {
    exact_poly out;
    for (const auto& [cell, count] : c.cells) {
        const int n = cell.rkq - c1;
        exact_poly agrade;
        for (int k = 0; k <= std::max(n, 0); ++k) {
            const long long subs = count_subspaces(q, n, k);
            const int64_t scale = checked_pow(q, k * c1 + k * (k - 1) / 2);
            agrade += exact_poly(checked_mul(subs, scale), mono_qta(0, 0, k));
        }
        out += exact_poly(count) * exact_poly::monomial(1, 0, cell.deg, 0) * agrade;
    }
    return out;
}

exact_poly superdual_transform(const exact_poly& h, int delta) {
    exact_poly out;
    for (const auto& [m, c] : h.terms()) {
        if (m.eq4 % 2 != 0) throw calc_error("superduality needs half-integral q-exponents");
        out += exact_poly(c, mono{4 * delta - 2 * m.et2, 2 * delta - m.eq4 / 2, m.ea});
    }
    return out;
}

exact_poly to_bold_h(const exact_poly& h) {
    exact_poly out;
    for (const auto& [m, c] : h.terms()) {
        if (m.eq4 % 2 != 0) throw calc_error("substitution q -> qt needs half-integral exponents");
        out += exact_poly(c, mono{m.eq4, m.et2 + m.eq4 / 2, m.ea});
    }
    return out;
}

exact_poly r_transform(const exact_poly& h, int delta) {
    // Numerator: h(q,t,a) - t^delta * h(q/t, 1, a).  The second term is a
    // polynomial because the q-degree of h(q,1,a) is at most delta; at
    // a = -t/q it collapses to q^delta, so specializing recovers the
    // quasi-rho quotient.
    const exact_poly at_t1 = h.substitute(var::t, 1, mono{});
    exact_poly shifted;
    for (const auto& [m, c] : at_t1.terms()) {
        if (m.eq4 % 2 != 0) throw calc_error("substitution q -> q/t needs half-integral exponents");
        if (m.eq4 / 2 > 2 * delta) throw calc_error("q-degree exceeds delta in r_transform");
        shifted += exact_poly(c, mono{m.eq4, 2 * delta - m.eq4 / 2, m.ea});
    }
    const exact_poly qv(1, mono_qta(1, 0, 0)), tv(1, mono_qta(0, 1, 0));
    return (h - shifted).divided_by((exact_poly(1) - qv) * (exact_poly(1) - tv));
}

exact_poly diagonal_part(const exact_poly& h, int shift) {
    exact_poly out;
    for (const auto& [m, c] : h.terms())
        if (m.eq4 == 2 * m.et2 + 4 * shift) out += exact_poly(c, m);
    return out;
}

// ---- weak Riemann hypothesis numerics (quad precision) -----------------------

namespace {

using real = __float128;

real rsqrt_seed(real x) { return (real)std::sqrt((double)x); }

real rsqrt(real x) {
    if (x <= 0) return 0;
    real r = rsqrt_seed(x);
    for (int i = 0; i < 5; ++i) r = (r + x / r) / 2;
    return r;
}

struct cplx {
    real re = 0, im = 0;
    friend cplx operator+(cplx a, cplx b) { return {a.re + b.re, a.im + b.im}; }
    friend cplx operator-(cplx a, cplx b) { return {a.re - b.re, a.im - b.im}; }
    friend cplx operator*(cplx a, cplx b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend cplx operator/(cplx a, cplx b) {
        const real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    real abs() const { return rsqrt(re * re + im * im); }
};

// Durand-Kerner on a monic coefficient list c[0..d] (c[d] == 1)
std::vector<cplx> all_roots(std::vector<real> c) {
    const int d = (int)c.size() - 1;
    for (int i = 0; i <= d; ++i) c[i] = c[i] / c[d];
    std::vector<cplx> z(d);
    cplx seed{(real)0.4, (real)0.9}, acc{1, 0};
    for (int k = 0; k < d; ++k) {
        acc = acc * seed;
        z[k] = acc;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        real worst = 0;
        for (int k = 0; k < d; ++k) {
            cplx num{c[d], 0};
            for (int i = d - 1; i >= 0; --i) num = num * z[k] + cplx{c[i], 0};
            cplx den{1, 0};
            for (int j = 0; j < d; ++j)
                if (j != k) den = den * (z[k] - z[j]);
            const cplx step = num / den;
            z[k] = z[k] - step;
            const real moved = step.abs();
            if (moved > worst) worst = moved;
        }
        if ((double)worst < 1e-30) break;
    }
    return z;
}

}  // namespace

rh_report weak_rh_roots(const exact_poly& h, double q0, double rel_tol) {
    rh_report rep;
    const exact_poly bold = to_bold_h(h);
    const real target = rsqrt((real)1 / (real)q0);
    for (int k = 0; k <= bold.max_adeg(); ++k) {
        const exact_poly hk = bold.coeff_of_a(k);
        if (hk.is_zero()) continue;
        // dense t-coefficients at numeric q0
        int tmax = 0;
        for (const auto& [m, c] : hk.terms()) {
            if (m.et2 % 2 || m.et2 < 0 || m.eq4 % 4)
                throw calc_error("root check needs plain integer exponents");
            tmax = std::max(tmax, m.et2 / 2);
        }
        if (tmax == 0) continue;
        std::vector<real> coeff((size_t)tmax + 1, 0);
        for (const auto& [m, c] : hk.terms()) {
            real qp = 1;
            for (int i = 0; i < m.eq4 / 4; ++i) qp = qp * (real)q0;
            coeff[m.et2 / 2] = coeff[m.et2 / 2] + (real)c * qp;
        }
        ++rep.polynomials;
        for (const cplx& z : all_roots(std::move(coeff))) {
            ++rep.roots;
            const double rel = std::abs((double)((z.abs() - target) / target));
            rep.worst_rel = std::max(rep.worst_rel, rel);
        }
    }
    rep.pass = rep.polynomials > 0 && rep.worst_rel <= rel_tol;
    return rep;
}

}  // namespace curvelink
