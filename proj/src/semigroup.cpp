#include "curvelink/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace curvelink {

num_semigroup num_semigroup::from_generators(std::vector<int> gens) {
    if (gens.empty()) throw calc_error("semigroup needs at least one generator");
    for (int g : gens)
        if (g <= 0) throw calc_error("semigroup generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    int g = 0;
    for (int v : gens) g = std::gcd(g, v);
    if (g != 1) throw calc_error("semigroup generators must be coprime");

    const int lo = gens.front();
    const int hi = gens.back();
    // sieve past the Frobenius number; lo*hi is a crude upper bound
    const int bound = lo * hi + lo + 2;
    std::vector<char> member(bound, 0);
    member[0] = 1;
    for (int v = 1; v < bound; ++v)
        for (int s : gens)
            if (v >= s && member[v - s]) {
                member[v] = 1;
                break;
            }

    // conductor: least c with [c, c+lo) fully inside the semigroup
    int conductor = -1;
    int run = 0;
    for (int v = 0; v < bound; ++v) {
        run = member[v] ? run + 1 : 0;
        if (run == lo) {
            conductor = v - lo + 1;
            break;
        }
    }
    if (conductor < 0) throw calc_error("conductor not found below sieve bound");

    num_semigroup S;
    S.gens_ = std::move(gens);
    S.member_.assign(member.begin(), member.begin() + conductor);
    S.conductor_ = conductor;
    for (int v = 0; v < conductor; ++v)
        if (!member[v]) S.gaps_.push_back(v);
    return S;
}

num_semigroup num_semigroup::from_members(const std::vector<char>& member, int conductor) {
    if (conductor < 0 || (int)member.size() < conductor)
        throw calc_error("membership table shorter than conductor");
    // trim trailing members so `conductor` is the least element of a full tail
    while (conductor > 0 && member[conductor - 1]) --conductor;
    if (conductor == 0) return from_generators({1});
    if (member.empty() || !member[0])
        throw calc_error("numerical semigroup must contain 0");
    auto in = [&](int v) { return v >= conductor || member[v]; };
    // smallest positive element bounds the window where generators can live
    int lo = 1;
    while (!in(lo)) ++lo;
    std::vector<int> gens;
    for (int v = 1; v < conductor + lo; ++v) {
        if (!in(v)) continue;
        bool reducible = false;
        for (int u = lo; u + lo <= v && !reducible; ++u)
            if (in(u) && in(v - u)) reducible = true;
        if (!reducible) gens.push_back(v);
    }
    num_semigroup S = from_generators(gens);
    if (S.conductor() != conductor) throw calc_error("membership table is not a semigroup");
    for (int v = 0; v < conductor; ++v)
        if (S.contains(v) != (bool)member[v])
            throw calc_error("membership table is not a semigroup");
    return S;
}

std::vector<int> num_semigroup::small_elements() const {
    std::vector<int> out;
    for (int v = 0; v < conductor_; ++v)
        if (member_[v]) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> standard_dsets(const num_semigroup& G) {
    const auto& gaps = G.gaps();
    const int n = (int)gaps.size();
    if (n > 20) throw calc_error("too many gaps for D-set enumeration");
    std::vector<int> gap_index(G.conductor(), -1);
    for (int i = 0; i < n; ++i) gap_index[gaps[i]] = i;

    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool closed = true;
        for (int i = 0; i < n && closed; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int s : G.gens()) {
                const int v = gaps[i] + s;
                if (G.contains(v)) continue;
                if (!(mask >> gap_index[v] & 1)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;
        std::vector<int> D;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) D.push_back(gaps[i]);
        out.push_back(std::move(D));
    }
    return out;
}

namespace {

// membership in Delta = Gamma cup D
bool delta_contains(const num_semigroup& G, const std::vector<int>& D, int v) {
    if (G.contains(v)) return true;
    return std::binary_search(D.begin(), D.end(), v);
}

}  // namespace

int gamma_rank(const num_semigroup& G, const std::vector<int>& D) {
    // generators of Delta as a Gamma-module all lie below conductor + mult
    const int bound = G.conductor() + G.gens().front();
    int rank = 0;
    for (int d = 0; d < bound; ++d) {
        if (!delta_contains(G, D, d)) continue;
        bool reducible = false;
        for (int s : G.gens())
            if (d >= s && delta_contains(G, D, d - s)) {
                reducible = true;
                break;
            }
        if (!reducible) ++rank;
    }
    return rank;
}

std::vector<int> reciprocal_dset(const num_semigroup& G, const std::vector<int>& D) {
    const int c = G.conductor();
    // Delta* = {p >= 0 : p + Delta subset Gamma}; elements >= c are automatic
    auto in_star = [&](int p) {
        if (p >= c) return true;
        if (!G.contains(p)) return false;
        for (int d : D)
            if (!G.contains(p + d)) return false;
        for (int v : G.small_elements())
            if (!G.contains(p + v)) return false;
        return true;
    };
    int m = 0;
    while (!in_star(m)) ++m;
    std::vector<int> out;
    for (int x = m + 1; x < m + c; ++x)
        if (in_star(x) && !G.contains(x - m)) out.push_back(x - m);
    return out;
}

exact_poly alexander_hat(const num_semigroup& G) {
    exact_poly sum;
    for (int v : G.small_elements()) sum += exact_poly::monomial(1, 0, v, 0);
    exact_poly one_minus_t = exact_poly(1) - exact_poly::variable(var::t);
    exact_poly out = one_minus_t * sum;
    out += exact_poly::monomial(1, 0, G.conductor(), 0);
    return out;
}

namespace {

// #gaps strictly below x and #semigroup elements in [0,x], as running counts
struct gap_profile {
    std::vector<int> gaps_below;  // index x -> #gaps < x
    std::vector<int> elems_upto;  // index x -> #(Gamma cap [0,x])
    explicit gap_profile(const num_semigroup& G) {
        const int w = 2 * G.delta() + 1;
        gaps_below.assign(w + 1, 0);
        elems_upto.assign(w + 1, 0);
        int ng = 0, ne = 0;
        for (int x = 0; x <= w; ++x) {
            gaps_below[x] = ng;
            if (G.contains(x))
                ++ne;
            else
                ++ng;
            elems_upto[x] = ne;
        }
    }
};

}  // namespace

exact_poly delta_qt(const num_semigroup& G) {
    gap_profile pr(G);
    exact_poly out;
    for (int y = 0; y < 2 * G.delta(); ++y)
        if (G.contains(y))
            out += exact_poly::monomial(1, pr.gaps_below[y], pr.elems_upto[y] - 1, 0);
    if (G.delta() == 0) out = exact_poly(1);
    return out;
}

exact_poly delta_qt_runs(const num_semigroup& G) {
    const auto& gaps = G.gaps();
    if (gaps.empty()) return exact_poly(1);
    // consecutive runs [start_i, end_i]
    std::vector<std::pair<int, int>> runs;
    for (int v : gaps) {
        if (!runs.empty() && runs.back().second + 1 == v)
            runs.back().second = v;
        else
            runs.emplace_back(v, v);
    }
    auto geometric = [](int from, int to) {  // t^from + ... + t^{to-1}
        exact_poly s;
        for (int e = from; e < to; ++e) s += exact_poly::monomial(1, 0, e, 0);
        return s;
    };
    exact_poly out = geometric(0, runs[0].first);
    int mass = 0;  // gaps consumed so far
    for (size_t i = 0; i < runs.size(); ++i) {
        mass += runs[i].second - runs[i].first + 1;
        const int from = runs[i].second + 1;
        const int to = i + 1 < runs.size() ? runs[i + 1].first : 2 * G.delta();
        // block of semigroup elements shifted by (q/t)^mass
        exact_poly block = geometric(from, to);
        for (const auto& [m, c] : block.terms())
            out += exact_poly(c, mono_qta(mass, m.et2 / 2 - mass, 0));
    }
    return out;
}

exact_poly mu_qt(const num_semigroup& G) {
    gap_profile pr(G);
    exact_poly out;
    for (int x = 0; x < 2 * G.delta(); ++x)
        out += exact_poly::monomial(1, pr.gaps_below[x], pr.elems_upto[x] - 1, 0);
    if (G.delta() == 0) out = exact_poly(1);
    return out;
}

exact_poly rho_qt(const num_semigroup& G) {
    gap_profile pr(G);
    exact_poly out;
    for (int x : G.gaps())
        for (int y = 0; y < x; ++y)
            if (G.contains(y))
                out += exact_poly::monomial(1, pr.gaps_below[x], pr.elems_upto[y] - 1, 0);
    return out;
}

exact_poly zuniga_qt(const num_semigroup& G) {
    const int c = G.conductor();
    exact_poly sum;
    for (int v : G.small_elements()) {
        int u = 0;
        for (int w = v + 1; w < v + c; ++w)
            if (G.contains(w) && !G.contains(w - v)) ++u;
        sum += exact_poly::monomial(1, u, v, 0);
    }
    exact_poly out = (exact_poly(1) - exact_poly::variable(var::t)) * sum;
    out += exact_poly::monomial(1, G.delta(), c, 0);
    return out;
}

std::vector<long long> cable_char_sequence(const cable_path& p) {
    if (p.steps.empty()) throw calc_error("empty cable path");
    std::vector<long long> a;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        const auto [r, s] = p.steps[i];
        if (r <= 0) throw calc_error("cable r must be positive");
        if (i == 0)
            a.push_back(s);
        else
            a.push_back(a.back() * p.steps[i - 1].first * r + s);
    }
    return a;
}

num_semigroup cable_semigroup(const cable_path& p) {
    const auto a = cable_char_sequence(p);
    const size_t l = p.steps.size();
    std::vector<int> gens;
    long long m = 1;
    for (const auto& [r, s] : p.steps) m *= r;
    gens.push_back((int)m);
    for (size_t i = 0; i < l; ++i) {
        long long upsilon = 1;
        for (size_t j = i + 1; j < l; ++j) upsilon *= p.steps[j].first;
        gens.push_back((int)(a[i] * upsilon));
    }
    return num_semigroup::from_generators(gens);
}

long long cable_delta(const cable_path& p) {
    const auto a = cable_char_sequence(p);
    const size_t l = p.steps.size();
    long long twice = 0;
    for (size_t i = 0; i < l; ++i) {
        long long upsilon = 1;
        for (size_t j = i + 1; j < l; ++j) upsilon *= p.steps[j].first;
        twice += upsilon * (a[i] - 1) * (p.steps[i].first - 1);
    }
    return twice / 2;
}

long long pair_linking(const cable_path& p1, const cable_path& p2) {
    size_t i0 = 0;
    while (i0 < p1.steps.size() && i0 < p2.steps.size() && p1.steps[i0] == p2.steps[i0]) ++i0;
    if (i0 == 0) throw calc_error("cable paths share no prefix");
    const auto a = cable_char_sequence(p1);
    long long lk = a[i0 - 1] * p1.steps[i0 - 1].first;
    for (size_t j = i0; j < p1.steps.size(); ++j) lk *= p1.steps[j].first;
    for (size_t j = i0; j < p2.steps.size(); ++j) lk *= p2.steps[j].first;
    return lk;
}

long long cable_rho(const cable_path& p) {
    const auto a = cable_char_sequence(p);
    long long total = 0;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        long long up = 1;
        for (size_t j = i + 1; j < p.steps.size(); ++j) up *= p.steps[j].first;
        const long long ai = a[i], ri = p.steps[i].first;
        total = checked_add(total, up * up * (ai * ai - 1) * (ri * ri - 1));
    }
    if (total % 24 != 0) throw calc_error("cable rho sum not divisible by 24");
    return total / 24;
}

long long rational_catalan(int r, int s) {
    if (r <= 0 || s <= 0 || std::gcd(r, s) != 1)
        throw calc_error("rational Catalan number needs coprime positive arguments");
    // binom(r+s, r) / (r+s) computed without overflow for desk-scale inputs
    __int128 num = 1;
    for (int i = 1; i <= r; ++i) {
        num = num * (s + i);
        num /= i;  // exact: binomial prefix property
    }
    __int128 out = num / (r + s);
    if (num % (r + s) != 0) throw calc_error("rational Catalan division not exact");
    return (long long)out;
}

}  // namespace curvelink
