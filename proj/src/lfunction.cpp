#include "curvelink/lfunction.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>

namespace curvelink {

namespace {

exact_poly rank_flag(int q, int rk) {
    exact_poly out(1);
    for (int j = 1; j < rk; ++j)
        out *= exact_poly(1) + exact_poly(checked_pow(q, j), mono_qta(0, 0, 1));
    return out;
}

exact_poly tpow(int e) { return exact_poly(1, mono_qta(0, e, 0)); }

void require_uncolored(const curve_model& m) {
    for (int c : m.spec().colors)
        if (c != 1) throw calc_error("L-functions are defined for uncolored curves");
}

// branch-series view of a packed shadow vector (col = k*kappa + b)
std::vector<fseries> unpack_vec(int kappa, int len, const row_vec& r) {
    std::vector<fseries> v(kappa, fseries((size_t)len, 0));
    for (size_t c = 0; c < r.size() && (int)(c / kappa) < len; ++c)
        v[c % kappa][c / kappa] = r[c];
    return v;
}

row_vec pack_vec(int kappa, int len, const std::vector<fseries>& v) {
    row_vec out((size_t)kappa * len, 0);
    for (int b = 0; b < kappa; ++b)
        for (int k = 0; k < len && k < (int)v[b].size(); ++k)
            out[(size_t)k * kappa + b] = v[b][k];
    return out;
}

std::vector<std::vector<fseries>> field_gens(const curve_model& m, int len) {
    const finite_field& F = m.field();
    std::vector<std::vector<fseries>> gen(m.spec().gens.size());
    for (size_t g = 0; g < gen.size(); ++g) {
        gen[g].resize(m.branches());
        for (int b = 0; b < m.branches(); ++b) {
            const auto& coeffs = m.spec().gens[g][b];
            fseries s(std::min((size_t)len, coeffs.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) s[i] = F.from_int(coeffs[i]);
            gen[g][b] = std::move(s);
        }
    }
    return gen;
}

row_vec gen_mul_packed(const curve_model& m, const std::vector<std::vector<fseries>>& gen, int g,
                       int len, const row_vec& v) {
    const int kappa = m.branches();
    auto series = unpack_vec(kappa, len, v);
    std::vector<fseries> prod(kappa);
    for (int b = 0; b < kappa; ++b) prod[b] = series_mul(m.field(), series[b], gen[g][b], len);
    return pack_vec(kappa, len, prod);
}

}  // namespace

// shift route ------------------------------------------------------------------

knot_l_result l_function_knot(const curve_model& m, long long node_budget) {
    if (m.branches() != 1 || m.spec().colors[0] != 1)
        throw calc_error("shift route requires one uncolored branch");
    const finite_field& F = m.field();
    const int q = F.q();
    const ambient_model am = build_ambient(m);
    const num_semigroup& G = m.branch_gamma(0);
    const int delta = m.delta();
    const int c = G.conductor();
    const int n = am.window[0];

    cell_evaluator ev(am);
    column_dfs dfs(F, am.nslots, am.width, &am.act, {});
    std::atomic<long long> nodes{0};

    knot_l_result out;
    for (const auto& D : standard_dsets(G)) {
        const auto piv = pivots_of_dset(am, D);
        const int deg = am.nslots - (int)piv.size();
        dfs.run(
            piv,
            [&]() {
                const int rk = ev.rank_q(dfs);
                // valid shifts m below the conductor: z^m times the window
                // part of every row must lie in R (the tails are free)
                exact_poly contrib;
                for (int s = 0; s < c; ++s) {
                    bool ok = true;
                    for (int ri = 0; ri < dfs.rows() && ok; ++ri) {
                        const row_vec r = dfs.row_of(ri);
                        fseries f((size_t)s + n, 0);
                        for (int k = 0; k < n; ++k) f[(size_t)s + k] = r[k];
                        ok = m.ring_contains({f});
                    }
                    if (ok) contrib += tpow(s + deg - delta) - tpow(s + 1 + deg - delta);
                }
                contrib += tpow(c + deg - delta);
                out.rows[{D, rk}] += contrib;
            },
            &nodes, node_budget);
    }
    for (const auto& [key, row] : out.rows) out.L += row * rank_flag(q, key.second);
    return out;
}

// bounded ideal census -----------------------------------------------------

namespace {

// echelon span with bookkeeping of quotient-basis coordinates; rows of W
// carry zero coordinates, extension rows carry unit vectors
class quotient_space {
  public:
    quotient_space(const finite_field& F, size_t width, size_t cap)
        : F_(&F), width_(width), cap_(cap) {}

    void insert_w(row_vec v) { insert(std::move(v), row_vec(cap_, 0)); }

    bool extend(const row_vec& v) {
        row_vec coords(cap_, 0);
        coords[ndim_] = 1;
        if (!insert(row_vec(v), std::move(coords))) return false;
        basis_.push_back(v);
        ++ndim_;
        return true;
    }

    int dim() const { return ndim_; }
    const row_vec& basis(int i) const { return basis_[i]; }

    // expansion of v over the quotient basis modulo W; v must lie in the span
    row_vec coords(row_vec v) const {
        row_vec out(cap_, 0);
        for (const auto& [rv, rc] : rows_) {
            const int p = row_space::leading(rv);
            const uint8_t f = v[p];
            if (!f) continue;
            for (size_t i = p; i < width_; ++i) v[i] = F_->add(v[i], F_->mul(F_->neg(f), rv[i]));
            for (size_t i = 0; i < cap_; ++i) out[i] = F_->add(out[i], F_->mul(f, rc[i]));
        }
        if (row_space::leading(v) >= 0) throw calc_error("vector outside the tracked span");
        return out;
    }

  private:
    const finite_field* F_;
    size_t width_, cap_;
    int ndim_ = 0;
    std::vector<row_vec> basis_;
    // forward echelon rows (pivot normalized to 1), sorted by pivot column
    std::vector<std::pair<row_vec, row_vec>> rows_;

    bool insert(row_vec v, row_vec coords) {
        for (const auto& [rv, rc] : rows_) {
            const int p = row_space::leading(rv);
            const uint8_t f = v[p];
            if (!f) continue;
            for (size_t i = p; i < width_; ++i) v[i] = F_->add(v[i], F_->mul(F_->neg(f), rv[i]));
            for (size_t i = 0; i < cap_; ++i)
                coords[i] = F_->add(coords[i], F_->mul(F_->neg(f), rc[i]));
        }
        const int p = row_space::leading(v);
        if (p < 0) return false;
        const uint8_t s = F_->inv(v[p]);
        for (auto& x : v) x = F_->mul(x, s);
        for (auto& x : coords) x = F_->mul(x, s);
        auto at = std::lower_bound(rows_.begin(), rows_.end(), p, [](const auto& r, int col) {
            return row_space::leading(r.first) < col;
        });
        rows_.insert(at, {std::move(v), std::move(coords)});
        return true;
    }
};

// F-span of m^k, closed under the ring generators by construction
row_space power_span(const curve_model& m, const std::vector<std::vector<fseries>>& gen, int k) {
    const int kappa = m.branches();
    const int prec = m.precision();
    row_space cur = m.ring_span();
    for (int step = 0; step < k; ++step) {
        row_space next(&m.field(), (size_t)kappa * prec);
        for (const auto& w : cur.rows())
            for (size_t g = 0; g < gen.size(); ++g)
                next.insert(gen_mul_packed(m, gen, (int)g, prec, w));
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

ideal_census ideal_zeta(const curve_model& m, int bound, long long node_budget) {
    require_uncolored(m);
    if (bound < 1) throw calc_error("ideal census needs a positive colength bound");
    const finite_field& F = m.field();
    const int kappa = m.branches();
    const int prec = m.precision();
    const size_t width = (size_t)kappa * prec;
    const auto gen = field_gens(m, prec);

    // quotient coordinates for R / m^bound, basis ordered by leading slot
    const row_space wb = power_span(m, gen, bound);
    const row_space& ring = m.ring_span();
    quotient_space qs(F, width, ring.rank() - wb.rank());
    for (const auto& w : wb.rows()) qs.insert_w(w);
    for (const auto& r : ring.rows()) qs.extend(r);
    const int dim = qs.dim();
    if (dim > 22) throw calc_error("ideal quotient too large for subset enumeration");

    // truncation sanity: the quotient of R by m^{bound+1} must also close well
    // below the precision window, so rank differences are exact
    {
        const row_space wb1 = power_span(m, gen, bound + 1);
        int smax = -1;
        for (const auto& r : ring.rows())
            if (!wb1.contains(r)) smax = std::max(smax, row_space::leading(r));
        if (smax >= 0 && smax / kappa + 8 > prec)
            throw gamma_unstable("ideal quotient did not stabilize below the precision cap");
    }

    // generator action in quotient coordinates (strictly-later columns)
    std::vector<std::vector<row_vec>> act(gen.size(), std::vector<row_vec>(dim));
    for (size_t g = 0; g < gen.size(); ++g)
        for (int c = 0; c < dim; ++c) {
            row_vec a = qs.coords(gen_mul_packed(m, gen, (int)g, prec, qs.basis(c)));
            a.resize(dim);
            for (int c2 = 0; c2 <= c; ++c2)
                if (a[c2]) throw calc_error("quotient action is not triangular");
            act[g][c] = std::move(a);
        }

    ideal_census out;
    out.bound = bound;
    column_dfs dfs(F, dim, dim, &act, {});
    std::atomic<long long> nodes{0};
    for (unsigned long mask = 0; mask < (1ul << dim); ++mask) {
        std::vector<int> piv;
        for (int c = 0; c < dim; ++c)
            if (mask >> c & 1) piv.push_back(c);
        const int colen = dim - (int)piv.size();
        if (colen > bound) continue;
        dfs.run(
            piv,
            [&]() {
                // rank of J / m J from exact truncated spans
                row_space sj = wb;
                for (int ri = 0; ri < dfs.rows(); ++ri) {
                    row_vec v = qs.basis(dfs.pivots()[ri]);
                    for (int c : dfs.gaps()) {
                        const uint8_t e = dfs.entry(ri, c);
                        if (!e) continue;
                        const row_vec& b = qs.basis(c);
                        for (size_t i = 0; i < width; ++i) v[i] = F.axpy(v[i], e, b[i]);
                    }
                    sj.insert(std::move(v));
                }
                row_space smj(&F, width);
                for (const auto& w : sj.rows())
                    for (size_t g = 0; g < gen.size(); ++g)
                        smj.insert(gen_mul_packed(m, gen, (int)g, prec, w));
                const int rk = (int)sj.rank() - (int)smj.rank();
                ++out.by_colen_rk[{colen, rk}];
            },
            &nodes, node_budget);
    }
    return out;
}

exact_poly l_from_ideal_census(const ideal_census& c, int q, int kappa) {
    exact_poly z;
    for (const auto& [key, count] : c.by_colen_rk) {
        if (key.first > c.bound) continue;
        z += exact_poly(count, mono_qta(0, key.first, 0)) * rank_flag(q, key.second);
    }
    exact_poly omt = exact_poly(1) - tpow(1);
    for (int i = 0; i < kappa; ++i) z *= omt;
    return truncate_t(z, c.bound);
}

// principal ideals ---------------------------------------------------------

std::map<int, long long> principal_zeta(const curve_model& m, int bound) {
    require_uncolored(m);
    const finite_field& F = m.field();
    const int q = F.q();
    const int kappa = m.branches();
    int cmax = 0;
    for (int b = 0; b < kappa; ++b) cmax = std::max(cmax, m.conductor_exp(b));
    const int len = bound + cmax + 2;  // series window per branch
    if (len > m.precision()) throw calc_error("precision too small for the principal window");
    const size_t width = (size_t)kappa * len;

    // generator window of the candidates: every principal ideal of colength
    // <= bound has a generator supported on the R-basis rows leading below
    // `width` (tail parts can be absorbed into a unit)
    std::vector<std::vector<fseries>> cand;
    std::vector<row_vec> rbasis;
    for (const auto& r : m.ring_span().rows()) {
        if (row_space::leading(r) >= (int)width) break;
        cand.push_back(unpack_vec(kappa, len, r));
        rbasis.push_back(pack_vec(kappa, len, cand.back()));
    }
    const size_t W = cand.size();
    if (checked_pow(q, (int)W) > 16'000'000) throw calc_error("principal window too large");

    std::map<int, long long> counts;
    std::set<std::string> seen;
    std::vector<uint8_t> lam(W, 0);
    for (;;) {
        // advance the odometer
        size_t i = 0;
        while (i < W && lam[i] == q - 1) lam[i++] = 0;
        if (i == W) break;
        ++lam[i];

        std::vector<fseries> f(kappa, fseries((size_t)len, 0));
        for (size_t j = 0; j < W; ++j) {
            if (!lam[j]) continue;
            for (int b = 0; b < kappa; ++b)
                for (int k = 0; k < len; ++k)
                    f[b][k] = F.axpy(f[b][k], lam[j], cand[j][b][k]);
        }
        // colength of f R = sum of branch valuations; zero divisors drop out
        int colen = 0;
        for (int b = 0; b < kappa && colen <= bound; ++b) {
            const int o = series_ord(f[b]);
            colen = o < 0 ? bound + 1 : colen + o;
        }
        if (colen > bound) continue;

        row_space span(&F, width);
        for (const auto& r : rbasis) {
            auto series = unpack_vec(kappa, len, r);
            std::vector<fseries> prod(kappa);
            for (int b = 0; b < kappa; ++b) prod[b] = series_mul(F, f[b], series[b], len);
            span.insert(pack_vec(kappa, len, prod));
        }
        std::string sig;
        for (const auto& r : span.rows()) sig.append(r.begin(), r.end());
        if (seen.insert(std::move(sig)).second) ++counts[colen];
    }
    return counts;
}

// checks and transforms ------------------------------------------------------

exact_poly truncate_t(const exact_poly& p, int tmax) {
    exact_poly out;
    for (const auto& [m, c] : p.terms())
        if (m.et2 <= 2 * tmax) out += exact_poly(c, m);
    return out;
}

bool functional_equation_holds(const exact_poly& L, int q, int delta) {
    // compare q^delta t^{2 delta} L(q, 1/(qt), a) with L, cleared by q^delta
    exact_poly lhs;
    for (const auto& [m, c] : L.terms()) {
        if (m.eq4 != 0 || m.et2 % 2 != 0) throw calc_error("expected a numeric-q polynomial");
        const int j = m.et2 / 2;
        if (j > 2 * delta) return false;
        lhs += exact_poly(checked_mul(c, checked_pow(q, 2 * delta - j)),
                          mono_qta(0, 2 * delta - j, m.ea));
    }
    exact_poly rhs = L;
    rhs *= exact_poly(checked_pow(q, delta));
    return lhs == rhs;
}

exact_poly at_a_neg_inv_q_scaled(const exact_poly& L, int q, int amax) {
    if (L.max_adeg() > amax) throw calc_error("a-degree exceeds the clearing exponent");
    exact_poly out;
    for (int k = 0; k <= amax; ++k) {
        const int64_t scale = (k % 2 ? -1 : 1) * checked_pow(q, amax - k);
        out += L.coeff_of_a(k) * exact_poly(scale);
    }
    return out;
}

exact_poly kg_lhs(const num_semigroup& G) {
    // L(q/t, t, -1/(q/t)) straight from the Zuniga form
    return zuniga_qt(G).substitute(var::q, 1, mono{4, -2, 0});
}

exact_poly kg_rhs(const num_semigroup& G) {
    const exact_poly one(1);
    const exact_poly qv = exact_poly::variable(var::q);
    const exact_poly tv = exact_poly::variable(var::t);
    return (one - qv) * (one - tv) * rho_qt(G) + exact_poly(1, mono_qta(G.delta(), 0, 0));
}

bool kg_identity_holds(const num_semigroup& G) { return kg_lhs(G) == kg_rhs(G); }

}  // namespace curvelink
