#include "curvelink/singularity.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

namespace curvelink {

int series_ord(const fseries& f) {
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i]) return (int)i;
    return -1;
}

fseries series_mul(const finite_field& F, const fseries& f, const fseries& g, int prec) {
    fseries out(prec, 0);
    for (size_t i = 0; i < f.size() && (int)i < prec; ++i) {
        if (!f[i]) continue;
        const size_t jmax = std::min(g.size(), (size_t)(prec - i));
        for (size_t j = 0; j < jmax; ++j)
            if (g[j]) out[i + j] = F.axpy(out[i + j], f[i], g[j]);
    }
    return out;
}

fseries series_inverse(const finite_field& F, const fseries& f, int prec) {
    if (f.empty() || !f[0]) throw calc_error("series inverse needs a unit");
    fseries out(prec, 0);
    const uint8_t c0 = F.inv(f[0]);
    out[0] = c0;
    for (int k = 1; k < prec; ++k) {
        uint8_t acc = 0;
        for (int i = 1; i <= k && i < (int)f.size(); ++i)
            acc = F.axpy(acc, f[i], out[k - i]);
        out[k] = F.mul(c0, F.neg(acc));
    }
    return out;
}

int curve_spec::lines() const {
    int n = 0;
    for (int c : colors) n += c;
    return n;
}

void curve_spec::validate() const {
    if (colors.empty()) throw calc_error("curve spec needs at least one branch");
    for (int c : colors)
        if (c < 1) throw calc_error("branch colors must be positive");
    if (gens.empty()) throw calc_error("curve spec needs at least one ring generator");
    for (const auto& g : gens) {
        if ((int)g.size() != branches())
            throw calc_error("every generator needs one series per branch");
        for (const auto& s : g)
            if (!s.empty() && s[0] != 0)
                throw calc_error("ring generators must vanish at the origin");
    }
    for (int b = 0; b < branches(); ++b) {
        bool nonzero = false;
        for (const auto& g : gens)
            for (int c : g[b]) nonzero |= (c != 0);
        if (!nonzero) throw calc_error("branch with no nonzero generator");
    }
}

curve_spec torus_spec(int r, int s, int color) {
    if (r < 1 || s < 1) throw calc_error("torus exponents must be positive");
    curve_spec sp;
    sp.colors = {color};
    std::vector<int> x(r + 1, 0), y(s + 1, 0);
    x[r] = 1;
    y[s] = 1;
    sp.gens = {{x}, {y}};
    return sp;
}

curve_spec semigroup_spec(const std::vector<int>& gens) {
    curve_spec sp;
    sp.colors = {1};
    for (int g : gens) {
        if (g < 1) throw calc_error("semigroup exponents must be positive");
        std::vector<int> s(g + 1, 0);
        s[g] = 1;
        sp.gens.push_back({s});
    }
    if (sp.gens.empty()) throw calc_error("semigroup spec needs generators");
    return sp;
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const std::string& part : split_on(s, ',')) {
        if (part.empty()) throw calc_error("empty entry in integer list '" + s + "'");
        out.push_back(std::stoi(part));
    }
    return out;
}

// one branch series: sum of [-][k*]z^e terms, or "0"
std::vector<int> parse_series(const std::string& s) {
    if (s == "0") return {0};
    std::vector<int> coef;
    size_t i = 0;
    auto set_term = [&](int c, int e) {
        if (e < 0) throw calc_error("negative exponent in series '" + s + "'");
        if ((size_t)e >= coef.size()) coef.resize(e + 1, 0);
        coef[e] += c;
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        int c = 1;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            c = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                c = 10 * c + (s[i++] - '0');
            if (i < s.size() && s[i] == '*') ++i;
        }
        if (i >= s.size() || s[i] != 'z')
            throw calc_error("expected z-term in series '" + s + "'");
        ++i;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                throw calc_error("expected exponent in series '" + s + "'");
            e = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                e = 10 * e + (s[i++] - '0');
        }
        set_term(sign * c, e);
    }
    if (coef.empty()) throw calc_error("empty series '" + s + "'");
    return coef;
}

}  // namespace

curve_spec parse_ring_descriptor(const std::string& desc) {
    std::vector<std::string> words;
    for (const std::string& w : split_on(desc, ' '))
        if (!w.empty()) words.push_back(w);
    if (words.empty()) throw calc_error("empty ring descriptor");
    const std::string& kind = words[0];
    if (kind == "torus") {
        if (words.size() != 3 && !(words.size() == 5 && words[3] == "color"))
            throw calc_error("usage: torus R S [color C]");
        int color = words.size() == 5 ? std::stoi(words[4]) : 1;
        return torus_spec(std::stoi(words[1]), std::stoi(words[2]), color);
    }
    if (kind == "semigroup") {
        if (words.size() != 2) throw calc_error("usage: semigroup A,B,...");
        return semigroup_spec(parse_int_list(words[1]));
    }
    if (kind == "plane") {
        bool has_colors = words.size() >= 2 && words[words.size() - 2] == "colors";
        size_t ngens = words.size() - 1 - (has_colors ? 2 : 0);
        if (ngens < 1) throw calc_error("usage: plane XSPEC YSPEC [colors C,...]");
        curve_spec sp;
        for (size_t g = 1; g <= ngens; ++g) {
            std::vector<std::vector<int>> per_branch;
            for (const std::string& part : split_on(words[g], '|'))
                per_branch.push_back(parse_series(part));
            sp.gens.push_back(std::move(per_branch));
        }
        size_t nbranch = sp.gens[0].size();
        sp.colors.assign(nbranch, 1);
        if (has_colors) sp.colors = parse_int_list(words.back());
        return sp;
    }
    throw calc_error("unknown ring descriptor kind '" + kind + "'");
}

curve_model::curve_model(const finite_field& F, curve_spec spec, int precision)
    : F_(&F), spec_(std::move(spec)) {
    spec_.validate();
    if (precision > 0) {
        build(precision);
        return;
    }
    for (int p = 64; p <= 512; p *= 2) {
        try {
            build(p);
            return;
        } catch (const gamma_unstable&) {
            if (p == 512) throw;
        }
    }
}

row_vec curve_model::pack(const std::vector<fseries>& v) const {
    const int kappa = branches();
    row_vec out((size_t)kappa * prec_, 0);
    for (int b = 0; b < kappa; ++b) {
        if (b >= (int)v.size()) continue;
        for (int k = 0; k < prec_ && k < (int)v[b].size(); ++k)
            out[(size_t)k * kappa + b] = v[b][k];
    }
    return out;
}

bool curve_model::ring_contains(const std::vector<fseries>& v) const {
    return span_.contains(pack(v));
}

void curve_model::build(int precision) {
    const int kappa = branches();
    prec_ = precision;
    const size_t width = (size_t)kappa * precision;

    // generators as field series, and the largest finite generator degree
    std::vector<std::vector<fseries>> gen(spec_.gens.size());
    int maxdeg = 1;
    for (size_t g = 0; g < spec_.gens.size(); ++g) {
        gen[g].resize(kappa);
        for (int b = 0; b < kappa; ++b) {
            const auto& coeffs = spec_.gens[g][b];
            fseries s(std::min((size_t)precision, coeffs.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) s[i] = F_->from_int(coeffs[i]);
            gen[g][b] = std::move(s);
            maxdeg = std::max(maxdeg, (int)coeffs.size());
        }
    }

    // close the span of R under multiplication by the generators, starting
    // from 1 = (1,...,1); all low-order coefficients stay exact because the
    // generators are polynomials
    span_ = row_space(F_, width);
    auto unpack = [&](const row_vec& r) {
        std::vector<fseries> v(kappa, fseries(precision, 0));
        for (size_t c = 0; c < width; ++c) v[c % kappa][c / kappa] = r[c];
        return v;
    };
    std::vector<row_vec> queue;
    {
        std::vector<fseries> one(kappa, fseries{1});
        row_vec v = pack(one);
        span_.insert(v);
        queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
        const row_vec cur = std::move(queue.back());
        queue.pop_back();
        const auto series = unpack(cur);
        for (const auto& g : gen) {
            std::vector<fseries> prod(kappa);
            for (int b = 0; b < kappa; ++b) prod[b] = series_mul(*F_, series[b], g[b], precision);
            row_vec v = pack(prod);
            span_.reduce(v);
            if (row_space::leading(v) < 0) continue;
            queue.push_back(v);
            span_.insert(std::move(v));
        }
    }

    // conductor exponents: largest pure tails contained in the span
    const int margin = std::max(8, 2 * maxdeg);
    cond_.assign(kappa, -1);
    for (int b = 0; b < kappa; ++b) {
        int n = precision;
        while (n > 0) {
            std::vector<fseries> pure(kappa);
            pure[b] = fseries(n, 0);
            pure[b][n - 1] = 1;
            if (!ring_contains(pure)) break;
            --n;
        }
        if (n + margin > precision) throw gamma_unstable("conductor exponent did not stabilize");
        cond_[b] = n;
    }

    // delta = number of slots below the conductor tails not hit by a pivot
    std::vector<char> pivot_slot(width, 0);
    for (int p : span_.pivots()) pivot_slot[p] = 1;
    delta_ = 0;
    for (int b = 0; b < kappa; ++b)
        for (int k = 0; k < precision; ++k)
            if (!pivot_slot[(size_t)k * kappa + b]) ++delta_;

    // per-branch value semigroups and deltas
    gamma_.clear();
    branch_delta_.assign(kappa, 0);
    if (kappa == 1) {
        std::vector<char> member(cond_[0], 0);
        for (int k = 0; k < cond_[0]; ++k) member[k] = pivot_slot[k];
        gamma_.push_back(num_semigroup::from_members(member, cond_[0]));
        branch_delta_[0] = delta_;
        if (gamma_[0].conductor() != cond_[0])
            throw calc_error("value semigroup conductor mismatch");
    } else {
        for (int b = 0; b < kappa; ++b) {
            curve_spec sub;
            sub.colors = {1};
            for (const auto& g : spec_.gens) sub.gens.push_back({g[b]});
            curve_model m(*F_, sub, precision);
            gamma_.push_back(m.branch_gamma(0));
            branch_delta_[b] = m.delta();
        }
    }
}

int curve_model::branch_delta(int b) const { return branch_delta_.at(b); }

int curve_model::intersection(int i, int j) const {
    if (i == j) return 0;
    curve_spec sub;
    sub.colors = {1, 1};
    for (const auto& g : spec_.gens) sub.gens.push_back({g[i], g[j]});
    curve_model m(*F_, sub, prec_);
    return m.delta() - branch_delta_.at(i) - branch_delta_.at(j);
}

int conductor_formula(const curve_model& m, int b) {
    int n = 2 * m.branch_delta(b);
    for (int j = 0; j < m.branches(); ++j)
        if (j != b) n += m.intersection(b, j);
    return n;
}

namespace {

// ord of the determinant of a matrix over F[[z]]/(z^prec), by valuation-
// pivoted elimination; -1 when the determinant vanishes to that precision
int det_ord(const finite_field& F, std::vector<std::vector<fseries>> mat, int prec) {
    const size_t n = mat.size();
    std::vector<char> row_used(n, 0), col_used(n, 0);
    int total = 0;
    for (size_t step = 0; step < n; ++step) {
        int best = prec;
        size_t pr = n, pc = n;
        for (size_t r = 0; r < n; ++r) {
            if (row_used[r]) continue;
            for (size_t c = 0; c < n; ++c) {
                if (col_used[c]) continue;
                const int o = series_ord(mat[r][c]);
                if (o >= 0 && o < best) {
                    best = o;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr == n) return -1;  // remaining block vanishes mod z^prec
        total += best;
        // normalize: unit part of the pivot and its inverse
        fseries unit(mat[pr][pc].begin() + best, mat[pr][pc].end());
        fseries uinv = series_inverse(F, unit, prec);
        for (size_t r = 0; r < n; ++r) {
            if (row_used[r] || r == pr) continue;
            const fseries& e = mat[r][pc];
            const int o = series_ord(e);
            if (o < 0) continue;
            if (o < best) throw calc_error("pivot was not minimal");
            fseries shifted(e.begin() + best, e.end());
            fseries factor = series_mul(F, shifted, uinv, prec);
            // row_r -= z^{-best} factor * row_pr  (the shift cancels exactly)
            for (size_t c = 0; c < n; ++c) {
                if (col_used[c]) continue;
                fseries sub = series_mul(F, factor, mat[pr][c], prec);
                fseries& tgt = mat[r][c];
                tgt.resize(prec, 0);
                for (int k = 0; k < prec; ++k)
                    if (k < (int)sub.size()) tgt[k] = F.sub(tgt[k], sub[k]);
            }
        }
        row_used[pr] = 1;
        col_used[pc] = 1;
    }
    return total;
}

}  // namespace

int intersection_resultant(const finite_field& F, const std::vector<int>& x1,
                           const std::vector<int>& y1, const std::vector<int>& x2,
                           const std::vector<int>& y2) {
    auto to_series = [&](const std::vector<int>& c, int prec) {
        fseries s(prec, 0);
        for (size_t i = 0; i < c.size() && (int)i < prec; ++i) s[i] = F.from_int(c[i]);
        return s;
    };
    for (int prec = 64; prec <= 2048; prec *= 2) {
        // A(w) = x2(w) - x1(z), B(w) = y2(w) - y1(z) as polynomials in w over
        // F[[z]]
        auto wpoly = [&](const std::vector<int>& param, const std::vector<int>& other) {
            std::vector<fseries> coeffs(std::max<size_t>(param.size(), 1));
            fseries c0 = to_series(other, prec);
            for (auto& v : c0) v = F.neg(v);
            coeffs[0] = std::move(c0);
            for (size_t j = 1; j < param.size(); ++j)
                coeffs[j] = fseries{F.from_int(param[j])};
            while (coeffs.size() > 1 && series_ord(coeffs.back()) < 0) coeffs.pop_back();
            return coeffs;
        };
        auto A = wpoly(x2, x1);
        auto B = wpoly(y2, y1);
        const int da = (int)A.size() - 1, db = (int)B.size() - 1;
        if (da == 0 && db == 0) throw calc_error("degenerate branch pair for resultant");
        int out;
        if (da == 0)
            out = db * series_ord(A[0]);
        else if (db == 0)
            out = da * series_ord(B[0]);
        else {
            // Sylvester matrix, (da+db) square
            const int n = da + db;
            std::vector<std::vector<fseries>> S((size_t)n, std::vector<fseries>((size_t)n));
            for (int r = 0; r < db; ++r)
                for (int j = 0; j <= da; ++j) S[r][r + j] = A[da - j];
            for (int r = 0; r < da; ++r)
                for (int j = 0; j <= db; ++j) S[db + r][r + j] = B[db - j];
            for (auto& row : S)
                for (auto& e : row)
                    if (e.empty()) e = fseries{};
            out = det_ord(F, std::move(S), prec);
        }
        if (out >= 0 && 2 * out + 8 < prec) return out;
    }
    throw calc_error("resultant order did not stabilize");
}

int ambient_model::col_of(int line, int k) const {
    if (k < window[line]) {
        // window columns are sorted by (k, line); locate by binary search
        auto it = std::lower_bound(slot.begin(), slot.end(), std::make_pair(k, line));
        return (int)(it - slot.begin());
    }
    if (k < window[line] + ext[line]) {
        int base = nslots;
        for (int l = 0; l < line; ++l) base += ext[l];
        return base + (k - window[line]);
    }
    return -1;
}

ambient_model build_ambient(const curve_model& m) {
    ambient_model am;
    am.model = &m;
    const auto& sp = m.spec();
    for (int b = 0; b < m.branches(); ++b)
        for (int c = 0; c < sp.colors[b]; ++c) am.line_branch.push_back(b);
    am.tau = (int)am.line_branch.size();

    for (int l = 0; l < am.tau; ++l) {
        const int b = am.line_branch[l];
        am.window.push_back(m.conductor_exp(b));
        int o = -1;
        for (const auto& g : sp.gens) {
            fseries s(g[b].size(), 0);
            for (size_t i = 0; i < s.size(); ++i) s[i] = m.field().from_int(g[b][i]);
            const int ord = series_ord(s);
            if (ord >= 0 && (o < 0 || ord < o)) o = ord;
        }
        am.ext.push_back(o);
    }
    for (int l = 0; l < am.tau; ++l)
        for (int k = 0; k < am.window[l]; ++k) am.slot.emplace_back(k, l);
    std::sort(am.slot.begin(), am.slot.end());
    am.nslots = (int)am.slot.size();
    am.width = am.nslots;
    for (int l = 0; l < am.tau; ++l) am.width += am.ext[l];

    const finite_field& F = m.field();
    am.act.assign(sp.gens.size(), std::vector<row_vec>(am.nslots));
    for (size_t g = 0; g < sp.gens.size(); ++g)
        for (int s = 0; s < am.nslots; ++s) {
            const auto [k, l] = am.slot[s];
            const int b = am.line_branch[l];
            row_vec row((size_t)am.width, 0);
            const auto& coeffs = sp.gens[g][b];
            for (size_t e = 0; e < coeffs.size(); ++e) {
                if (!coeffs[e]) continue;
                const int col = am.col_of(l, k + (int)e);
                if (col >= 0) row[col] = F.from_int(coeffs[e]);
            }
            am.act[g][s] = std::move(row);
        }
    return am;
}

}  // namespace curvelink
