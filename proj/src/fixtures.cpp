#include "curvelink/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "curvelink/daha.hpp"
#include "curvelink/json_io.hpp"
#include "curvelink/lfunction.hpp"
#include "curvelink/modcount.hpp"
#include "curvelink/semigroup.hpp"
#include "curvelink/singularity.hpp"
#include "curvelink/superpoly.hpp"

#include "../vendor/json.hpp"

namespace curvelink {

namespace fs = std::filesystem;

std::string default_fixture_dir() {
    if (const char* env = std::getenv("CURVELINK_FIXTURES"); env && *env) return env;
    return "fixtures";
}

std::vector<fixture> load_fixture_dir(const std::string& dir) {
    std::vector<fixture> out;
    if (!fs::exists(dir)) return out;
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
        std::ifstream in(p);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& ex) {
            throw parse_error("fixture file " + p.string() + ": " + ex.what());
        }
        fixture f;
        f.path = p.string();
        try {
            f.id = j.at("id").get<std::string>();
            f.title = j.value("title", std::string());
            f.source = j.value("source", std::string());
            f.ring = j.value("ring", std::string());
            if (j.contains("tags"))
                for (const auto& t : j.at("tags")) f.tags.push_back(t.get<std::string>());
            if (j.contains("polys"))
                for (const auto& [k, v] : j.at("polys").items())
                    f.polys[k] = v.get<std::string>();
            if (j.contains("scalars"))
                for (const auto& [k, v] : j.at("scalars").items())
                    f.scalars[k] = v.get<std::string>();
        } catch (const nlohmann::json::exception& ex) {
            throw parse_error("fixture file " + p.string() + ": " + ex.what());
        }
        if (f.id.empty()) throw parse_error("fixture file " + p.string() + ": empty id");
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [](const fixture& a, const fixture& b) { return a.id < b.id; });
    return out;
}

const fixture* find_fixture(const std::vector<fixture>& all, const std::string& id) {
    for (const auto& f : all)
        if (f.id == id) return &f;
    return nullptr;
}

exact_poly fixture_poly(const fixture& f, const std::string& key) {
    auto it = f.polys.find(key);
    if (it == f.polys.end())
        throw calc_error("fixture '" + f.id + "' has no polynomial '" + key + "'");
    return parse_poly(it->second);
}

long long fixture_int(const fixture& f, const std::string& key) {
    auto it = f.scalars.find(key);
    if (it == f.scalars.end())
        throw calc_error("fixture '" + f.id + "' has no scalar '" + key + "'");
    return std::stoll(it->second);
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

exact_poly at_q(const exact_poly& p, int64_t q0) { return p.substitute(var::q, q0, mono{}); }
exact_poly at_t(const exact_poly& p, int64_t t0) { return p.substitute(var::t, t0, mono{}); }
exact_poly at_mtq(const exact_poly& p) { return p.substitute(var::a, -1, mono_qta(-1, 1, 0)); }
exact_poly at_neg_t(const exact_poly& p) { return p.substitute(var::a, -1, mono_qta(0, 1, 0)); }
exact_poly at_neg_t2(const exact_poly& p) { return p.substitute(var::a, -1, mono_qta(0, 2, 0)); }
exact_poly at_inv_q(const exact_poly& p) { return p.substitute(var::a, -1, mono_qta(-1, 0, 0)); }

exact_poly qtpow(int i, int j) { return exact_poly(1, mono_qta(i, j, 0)); }
exact_poly tpow(int j) { return qtpow(0, j); }

exact_poly one_minus_t() { return exact_poly(1) - tpow(1); }

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

long long value_11(const exact_poly& p) {
    return at_t(at_q(p.at_a(1), 1), 1).coeff(mono{});
}

// prod_{j=1}^{rk-1} (1 + a q^j)
exact_poly flags_a(int rk) {
    exact_poly out(1);
    for (int j = 1; j < rk; ++j) out = out * (exact_poly(1) + exact_poly(1, mono_qta(j, 0, 1)));
    return out;
}

// q^deg_a(h) * h(q0, t, -t/q0), an integer polynomial in t
exact_poly cleared_mtq(const exact_poly& h_at_q0, int q0) {
    const int amax = h_at_q0.max_adeg();
    exact_poly out;
    for (int k = 0; k <= amax; ++k) {
        exact_poly part = h_at_q0.coeff_of_a(k) * tpow(k) * ipow(q0, amax - k);
        out += (k % 2 ? exact_poly() - part : part);
    }
    return out;
}

// q^delta t^{2 delta} p(q, 1/(qt), a) for symbolic q
exact_poly fe_partner(const exact_poly& p, int delta) {
    return qtpow(delta, 2 * delta) * p.substitute(var::t, 1, mono_qta(-1, -1, 0));
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return out;
}

struct census_run {
    finite_field F;
    curve_model model;
    ambient_model am;
    census_result res;

    census_run(const curve_spec& sp, int q0) : F(q0), model(F, sp), am(build_ambient(model)) {}
};

census_run run_census(const curve_spec& sp, int q0, const verify_options& opt,
                      bool with_dstar = false, long long budget_floor = 0) {
    census_run r(sp, q0);
    census_options co;
    co.node_budget = std::max(opt.node_budget, budget_floor);
    co.jobs = opt.jobs;
    co.with_dstar = with_dstar;
    r.res = standard_module_census(r.am, co);
    return r;
}

using row_map = std::map<std::pair<std::vector<int>, int>, exact_poly>;

// (value set, rank) -> sum count * t^deg at numeric q
row_map census_rows(const ambient_model& am, const census_result& c) {
    row_map rows;
    for (const auto& [st, count] : c.cells)
        rows[{dset_of_pivots(am, st.pivots), st.rkq}] += exact_poly(count) * tpow(st.deg);
    return rows;
}

struct checker {
    const fixture& f;
    const std::vector<fixture>& all;
    const verify_options& opt;
    std::vector<fixture_diff>& diffs;
    std::vector<std::string>* checked;

    void note(const std::string& key) {
        if (checked) checked->push_back(f.id + ":" + key);
    }
    void fail(const std::string& key, const std::string& want, const std::string& got) {
        diffs.push_back({f.id, key, want, got});
    }
    // a stored polynomial must equal the freshly derived value
    void poly_is(const std::string& key, const exact_poly& derived) {
        note(key);
        auto it = f.polys.find(key);
        if (it == f.polys.end()) {
            fail(key, "<present>", "<missing>");
            return;
        }
        if (!(parse_poly(it->second) == derived)) fail(key, it->second, derived.str());
    }
    void same(const std::string& key, const exact_poly& want, const exact_poly& got) {
        note(key);
        if (!(want == got)) fail(key, want.str(), got.str());
    }
    void holds(const std::string& key, bool ok) {
        note(key);
        if (!ok) fail(key, "true", "false");
    }
    void int_is(const std::string& key, long long derived) {
        note(key);
        auto it = f.scalars.find(key);
        if (it == f.scalars.end()) {
            fail(key, "<present>", "<missing>");
            return;
        }
        if (std::stoll(it->second) != derived)
            fail(key, it->second, std::to_string(derived));
    }
    exact_poly poly(const std::string& key) const { return fixture_poly(f, key); }
    long long num(const std::string& key) const { return fixture_int(f, key); }
    bool has_poly(const std::string& key) const { return f.polys.count(key) != 0; }
};

// stored rows "<prefix><D>|rk<k>" against a census at numeric q
void check_rows(checker& c, const std::string& prefix, const row_map& rows, int q0) {
    std::set<std::pair<std::vector<int>, int>> seen;
    for (const auto& [key, text] : c.f.polys) {
        if (key.rfind(prefix, 0) != 0) continue;
        const size_t bar = key.rfind("|rk");
        if (bar == std::string::npos) continue;
        std::vector<int> D = split_ints(key.substr(prefix.size(), bar - prefix.size()));
        int rk = std::stoi(key.substr(bar + 3));
        const std::string tag = key + "@q" + std::to_string(q0);
        c.note(tag);
        auto it = rows.find({D, rk});
        if (it == rows.end()) {
            c.fail(tag, text, "<no census cell>");
        } else if (!(at_q(parse_poly(text), q0) == it->second)) {
            c.fail(tag, at_q(parse_poly(text), q0).str(), it->second.str());
        }
        seen.insert({D, rk});
    }
    for (const auto& [k, v] : rows)
        if (!seen.count(k))
            c.fail(prefix + "census-extra@q" + std::to_string(q0),
                   "<no extra census rows>", join_ints(k.first) + "|rk" + std::to_string(k.second) +
                                                 " -> " + v.str());
}

// assembled symbolic superpolynomial from stored rows
exact_poly assemble_rows(const checker& c, const std::string& prefix) {
    exact_poly out;
    for (const auto& [key, text] : c.f.polys) {
        if (key.rfind(prefix, 0) != 0) continue;
        const size_t bar = key.rfind("|rk");
        if (bar == std::string::npos) continue;
        out += parse_poly(text) * flags_a(std::stoi(key.substr(bar + 3)));
    }
    return out;
}

void check_motivic_census(checker& c, const curve_spec& sp, const exact_poly& h, int q0,
                          int c1, bool with_oracles = false, long long budget_floor = 0) {
    census_run r = run_census(sp, q0, c.opt, with_oracles, budget_floor);
    const std::string tag = "@q" + std::to_string(q0);
    c.same("hmot-census" + tag, at_q(h, q0), motivic_from_census(r.res, q0, c1));
    if (with_oracles) {
        c.same("flag-oracle" + tag, at_q(h, q0), flag_oracle_from_census(r.res, q0, c1));
        c.same("second-product" + tag, at_q(h, q0), second_product_from_census(r.res, q0));
    }
}

// ---------------------------------------------------------------------------
// per-fixture verifiers
// ---------------------------------------------------------------------------

void verify_trefoil(checker& c) {
    const exact_poly h = hmot_trefoil();
    c.poly_is("hmot", h);
    const auto G = num_semigroup::from_generators({2, 3});
    c.int_is("delta", G.delta());
    c.int_is("conductor", G.conductor());
    const curve_spec sp = torus_spec(3, 2);
    for (int q0 : {2, 3}) check_motivic_census(c, sp, h, q0, 1, true);
    std::vector<std::pair<int, exact_poly>> evals;
    for (int q0 : {2, 3}) evals.push_back({q0, at_q(h, q0)});
    c.same("reconstruct", h, reconstruct_in_q(evals, 1));
    c.holds("superdual", superdual_transform(h, 1) == h);
    c.same("at-neg-t", exact_poly(1), at_neg_t(h));
    c.same("at-inv-q", qtpow(1, 1), at_inv_q(h));
}

void verify_torus2(checker& c) {
    for (int n : {2, 3, 4}) {
        const std::string suffix = std::to_string(2 * n + 1) + ",2";
        const exact_poly h = hmot_torus_odd2(n);
        c.poly_is("hmot:" + suffix, h);
        c.holds("superdual:" + suffix, superdual_transform(h, n) == h);
        c.same("at-neg-t:" + suffix, exact_poly(1), at_neg_t(h));
        c.same("at-inv-q:" + suffix, qtpow(n, n), at_inv_q(h));
        check_motivic_census(c, torus_spec(2 * n + 1, 2), h, 2, 1);
    }
    check_motivic_census(c, torus_spec(5, 2), hmot_torus_odd2(2), 3, 1);
    for (int n : {1, 2, 3}) {
        const std::string suffix = std::to_string(2 * n + 1) + ",2";
        c.poly_is("hmot-c2:" + suffix, hmot_torus_odd2_c2(n));
    }
    c.same("c2-trefoil", hmot_colored_trefoil(2), hmot_torus_odd2_c2(1));
    {
        census_run r = run_census(torus_spec(5, 2, 2), 2, c.opt);
        c.same("c2-census:5,2@q2", at_q(hmot_torus_odd2_c2(2), 2),
               motivic_from_census(r.res, 2, 2));
    }
}

void verify_t73(checker& c) {
    const exact_poly h = hmot_t73();
    c.poly_is("hmot", h);
    const auto G = num_semigroup::from_generators({3, 7});
    c.int_is("delta", G.delta());
    c.int_is("catalan", rational_catalan(7, 3));
    c.holds("catalan-counts-cells", (long long)standard_dsets(G).size() == rational_catalan(7, 3));
    c.same("rows-assemble", h, assemble_rows(c, "row:"));
    c.holds("superdual", superdual_transform(h, 6) == h);
    for (int q0 : {2, 3}) {
        census_run r = run_census(torus_spec(7, 3), q0, c.opt);
        check_rows(c, "row:", census_rows(r.am, r.res), q0);
        c.same("hmot-census@q" + std::to_string(q0), at_q(h, q0),
               motivic_from_census(r.res, q0, 1));
    }
}

void verify_t94(checker& c) {
    const exact_poly h = hmot_t94();
    c.poly_is("hmot", h);
    const auto G = num_semigroup::from_generators({4, 9});
    c.int_is("delta", G.delta());
    c.int_is("catalan", rational_catalan(9, 4));
    c.holds("catalan-counts-cells", (long long)standard_dsets(G).size() == rational_catalan(9, 4));
    c.holds("superdual", superdual_transform(h, 12) == h);
    c.same("at-neg-t", exact_poly(1), at_neg_t(h));
    check_motivic_census(c, torus_spec(9, 4), h, 2, 1, false, 32'000'000);
    if (c.opt.heavy) check_motivic_census(c, torus_spec(9, 4), h, 3, 1, false, 4'000'000'000);
}

void verify_g4613(checker& c) {
    const exact_poly h = hmot_g4613();
    c.poly_is("hmot", h);
    const exact_poly hmtq = at_mtq(h);
    c.poly_is("hmtq", hmtq);
    const auto G = num_semigroup::from_generators({4, 6, 13});
    c.int_is("delta", G.delta());
    c.same("hmtq-gap-run", qtpow(8, 8) + one_minus_t() * delta_qt(G), hmtq);

    const auto dsets = standard_dsets(G);
    c.holds("dset-count", (long long)dsets.size() == 25);
    for (const auto& D : dsets) {
        const auto R = reciprocal_dset(G, D);
        c.holds("reciprocal-standard:" + join_ints(D),
                std::find(dsets.begin(), dsets.end(), R) != dsets.end() &&
                    reciprocal_dset(G, R) == D);
    }

    // one plane model per characteristic: the odd syzygy valuation 13 needs
    // an odd term that survives the char-p power maps, so z^6+z^7 works away
    // from 2 and z^4+z^5 works at 2
    const std::vector<std::pair<int, const char*>> models = {
        {2, "plane z^4+z^5 z^6"}, {3, "plane z^4 z^6+z^7"}};
    for (const auto& [q0, desc] : models) {
        const std::string tag = "@q" + std::to_string(q0);
        const curve_spec sp = parse_ring_descriptor(desc);
        census_run r = run_census(sp, q0, c.opt, false, 32'000'000);
        c.holds("good-reduction" + tag,
                r.model.delta() == 8 &&
                    r.model.branch_gamma(0).gens() == std::vector<int>({4, 6, 13}));
        c.same("hmot-census" + tag, at_q(h, q0), motivic_from_census(r.res, q0, 1));
        // per value set: total point count q^dim, or no cell at all (dim -1)
        std::map<std::vector<int>, long long> counts;
        for (const auto& [st, n] : r.res.cells)
            counts[dset_of_pivots(r.am, st.pivots)] += n;
        for (const auto& D : dsets) {
            const std::string key = "dim:" + join_ints(D);
            const long long dim = c.num(key);
            const long long want = dim < 0 ? 0 : ipow(q0, (int)dim);
            c.note(key + tag);
            auto it = counts.find(D);
            const long long got = it == counts.end() ? 0 : it->second;
            if (want != got) c.fail(key + tag, std::to_string(want), std::to_string(got));
        }
        knot_l_result l =
            l_function_knot(r.model, std::max(c.opt.node_budget, 64'000'000LL));
        c.same("h-eq-l" + tag, at_q(to_bold_h(h), q0), l.L);
        c.holds("l-feq" + tag, functional_equation_holds(l.L, q0, 8));
        c.holds("l-degree" + tag, l.L.max_exp4(var::t) == 2 * 16 &&
                                      truncate_t(l.L, 16) == l.L);
    }
    {
        // swapping the models is a bad reduction: the semigroup jumps to
        // <4,6,15> and delta to 9
        finite_field F2(2), F3(3);
        curve_model bad2(F2, parse_ring_descriptor("plane z^4 z^6+z^7"));
        c.holds("bad-reduction@q2",
                bad2.delta() == 9 &&
                    bad2.branch_gamma(0).gens() == std::vector<int>({4, 6, 15}));
        curve_model bad3(F3, parse_ring_descriptor("plane z^4+z^5 z^6"));
        c.holds("bad-reduction@q3", bad3.delta() == 9);
    }
}

void verify_t64(checker& c) {
    const exact_poly h = hmot_t64();
    const exact_poly hd = c.poly("hdaha");
    c.poly_is("hdaha", h);  // motivic rank decomposition == operator value
    exact_poly mrows, brows;
    for (int k = 1; k <= 4; ++k) {
        mrows += c.poly("mrow:rk" + std::to_string(k)) * flags_a(k);
        brows += c.poly("brow:rk" + std::to_string(k)) * flags_a(k);
    }
    c.same("mrows-assemble", h, mrows);
    c.same("brows-assemble", to_bold_h(h), brows);
    c.holds("superdual", superdual_transform(hd, 8) == hd);
    const exact_poly bold = to_bold_h(h);
    c.same("bold-feq", bold, fe_partner(bold, 8));
    c.same("iteration-3-2",
           exact_poly(1, mono_qta(1, 0, 0)) * h,
           (exact_poly(1) + exact_poly(1, mono_qta(1, 0, 1))) * hmot_colored_trefoil(2) +
               (exact_poly(1, mono_qta(1, 0, 0)) - exact_poly(1)) * hmot_g4613());
    c.same("iteration-1-1",
           exact_poly(1, mono_qta(1, 0, 0)) * hmot_hopf_colored(1),
           (exact_poly(1) + exact_poly(1, mono_qta(1, 0, 1))) * exact_poly(1) +
               (exact_poly(1, mono_qta(1, 0, 0)) - exact_poly(1)) * hmot_trefoil());
    c.int_is("delta", 8);
    {
        // the two branches collide in characteristic 2
        finite_field F(2);
        bool threw = false;
        try {
            curve_model m(F, parse_ring_descriptor(c.f.ring));
            (void)m;
        } catch (const gamma_unstable&) {
            threw = true;
        }
        c.holds("char2-unstable", threw);
    }
    {
        finite_field F(3);
        curve_model m(F, parse_ring_descriptor(c.f.ring));
        c.int_is("i12", m.intersection(0, 1));
        c.int_is("n1", conductor_formula(m, 0));
        c.int_is("n2", conductor_formula(m, 1));
    }
}

void verify_g456(checker& c) {
    const exact_poly h = hmot_g456();
    c.poly_is("hmot", h);
    const auto G = num_semigroup::from_generators({4, 5, 6});
    c.int_is("delta", G.delta());
    c.int_is("conductor", G.conductor());

    // cells: every stored cell is a q-monomial times t^deg; census must agree
    exact_poly assembled;
    std::map<std::vector<int>, std::pair<int, int>> cell_shape;  // D -> (dim, deg)
    for (const auto& [key, text] : c.f.polys) {
        if (key.rfind("cell:", 0) != 0) continue;
        const std::vector<int> D = split_ints(key.substr(5));
        const exact_poly p = parse_poly(text);
        c.holds(key + "-monomial", p.num_terms() == 1 && p.coeff_of_a(0) == p);
        const auto& [m, coef] = *p.terms().begin();
        cell_shape[D] = {m.eq4 / 4, m.et2 / 2};
        assembled += p * flags_a(gamma_rank(G, D));
    }
    c.same("cells-assemble", h, assembled);
    c.holds("cell-count", cell_shape.size() == standard_dsets(G).size());

    const curve_spec sp = semigroup_spec({4, 5, 6});
    for (int q0 : {2, 3, 5}) {
        census_run r = run_census(sp, q0, c.opt);
        const std::string tag = "@q" + std::to_string(q0);
        c.same("hmot-census" + tag, at_q(h, q0), motivic_from_census(r.res, q0, 1));
        std::map<std::vector<int>, std::tuple<long long, int, int>> got;  // D->count,deg,rk
        bool split = false;
        for (const auto& [st, n] : r.res.cells) {
            const auto D = dset_of_pivots(r.am, st.pivots);
            if (got.count(D)) split = true;
            got[D] = {n, st.deg, st.rkq};
        }
        c.holds("no-split-cells" + tag, !split);
        for (const auto& [D, shape] : cell_shape) {
            c.note("cell:" + join_ints(D) + tag);
            auto it = got.find(D);
            if (it == got.end()) {
                c.fail("cell:" + join_ints(D) + tag, "<cell>", "<missing>");
                continue;
            }
            const auto [n, deg, rk] = it->second;
            if (n != ipow(q0, shape.first) || deg != shape.second || rk != gamma_rank(G, D))
                c.fail("cell:" + join_ints(D) + tag,
                       std::to_string(ipow(q0, shape.first)) + " t^" +
                           std::to_string(shape.second) + " rk" +
                           std::to_string(gamma_rank(G, D)),
                       std::to_string(n) + " t^" + std::to_string(deg) + " rk" +
                           std::to_string(rk));
        }
    }

    // L-function rows, reconstructed symbolically from five prime-power points
    std::map<std::vector<int>, std::vector<std::pair<int, exact_poly>>> row_evals;
    for (int q0 : {2, 3, 4, 5, 7}) {
        finite_field F(q0);
        curve_model m(F, sp);
        knot_l_result l = l_function_knot(m, c.opt.node_budget);
        for (const auto& [key, p] : l.rows) row_evals[key.first].push_back({q0, p});
    }
    exact_poly L;
    for (const auto& [D, evals] : row_evals) {
        const exact_poly row = reconstruct_in_q(evals, 4);
        c.poly_is("lrow:" + join_ints(D), row);
        L += row * flags_a(gamma_rank(G, D));
    }
    c.same("zuniga-row", c.poly("zuniga"), c.poly("lrow:"));
    c.poly_is("zuniga", zuniga_qt(G));
    // the functional equation in full a needs rk_q preserved under
    // reciprocity, which requires a plane model; this ring is the non-planar
    // control, so only the a=0 and a=-1/q forms hold
    c.holds("l-feq-fails-full-a", !(L == fe_partner(L, 4)));
    c.same("zuniga-feq", c.poly("zuniga"), fe_partner(c.poly("zuniga"), 4));
    c.holds("l-degree", L.max_exp4(var::t) == 2 * 8 && truncate_t(L, 8) == L);
    c.same("l-at-neg-t", exact_poly(1), at_neg_t(L));
    c.poly_is("l-a0", L.coeff_of_a(0));
    c.poly_is("hmot-qt-a0", to_bold_h(h).coeff_of_a(0));
    c.same("h-ne-l-witness", parse_poly("q^2*t^2 - q^2*t^4"),
           L.coeff_of_a(0) - to_bold_h(h).coeff_of_a(0));
    c.same("l-at-inv-q", at_inv_q(L), c.poly("zuniga"));
    c.same("bold-at-inv-q", at_inv_q(to_bold_h(h)), c.poly("zuniga"));

    const exact_poly hd = c.poly("hdaha-cab52");
    c.poly_is("cab52-at-mtq", at_mtq(hd));
    c.same("daha-eq-l-mtq", kg_lhs(G), at_mtq(hd));
    c.same("hmot-eq-l-mtq", kg_lhs(G), at_mtq(h));
    c.poly_is("hdaha-qt-a0", to_bold_h(hd).coeff_of_a(0));
    c.same("daha-at-inv-q", at_inv_q(to_bold_h(hd)), c.poly("zuniga"));
    c.same("daha-feq-a0", c.poly("hdaha-qt-a0"), fe_partner(c.poly("hdaha-qt-a0"), 4));
    c.same("l-feq-a0", c.poly("l-a0"), fe_partner(c.poly("l-a0"), 4));
    c.holds("hmot-feq-a0-fails",
            !(c.poly("hmot-qt-a0") == fe_partner(c.poly("hmot-qt-a0"), 4)));

    // Z_4: number of ideals of colength 4 = sum of the L(a=0) coefficients
    // through t^4, with the direct ideal census as oracle
    exact_poly z4;
    const exact_poly l_a0 = c.poly("l-a0");
    for (const auto& [m, coef] : l_a0.terms())
        if (m.et2 <= 2 * 4) z4 += exact_poly(coef, mono{m.eq4, 0, 0});
    c.poly_is("z4", z4);
    for (int q0 : {2, 3}) {
        finite_field F(q0);
        curve_model m(F, sp);
        ideal_census ic = ideal_zeta(m, 4, c.opt.node_budget);
        long long n4 = 0;
        for (const auto& [k, n] : ic.by_colen_rk)
            if (k.first == 4) n4 += n;
        c.note("z4-census@q" + std::to_string(q0));
        if (n4 != at_q(z4, q0).coeff(mono{}))
            c.fail("z4-census@q" + std::to_string(q0), at_q(z4, q0).str(),
                   std::to_string(n4));
    }
    // the brute-force generator odometer is q^14 combinations here, so q=3
    // only runs in heavy mode
    std::vector<int> prin_qs = {2};
    if (c.opt.heavy) prin_qs.push_back(3);
    for (int q0 : prin_qs) {
        finite_field F(q0);
        curve_model m(F, sp);
        const auto prin = principal_zeta(m, G.conductor());
        const exact_poly zq = at_q(c.poly("zuniga"), q0);
        for (int m0 = 0; m0 <= G.conductor(); ++m0) {
            long long cum = 0;
            for (int j = 0; j <= m0; ++j) cum += zq.coeff_qta(0, j, 0);
            auto it = prin.find(m0);
            c.holds("principal@q" + std::to_string(q0) + ":t" + std::to_string(m0),
                    (it == prin.end() ? 0 : it->second) == cum);
        }
    }
}

void verify_rho_semigroup(checker& c, const std::vector<int>& gens, const cable_path& cab) {
    const auto G = num_semigroup::from_generators(gens);
    c.int_is("delta", G.delta());
    c.holds("gorenstein", G.symmetric());
    const exact_poly rho = rho_qt(G);
    if (c.has_poly("rho")) c.poly_is("rho", rho);
    c.int_is("rho11", value_11(rho));
    c.holds("rho-superdual", superdual_transform(rho, G.delta() - 1) == rho);
    c.holds("kg-identity", kg_identity_holds(G));
    if (!cab.steps.empty()) {
        c.holds("cable-semigroup", cable_semigroup(cab).gens() == G.gens());
        c.int_is("delta", cable_delta(cab));
        c.note("rho-cable");
        if (cable_rho(cab) != value_11(rho))
            c.fail("rho-cable", std::to_string(cable_rho(cab)), std::to_string(value_11(rho)));
    }
}

void verify_g469(checker& c) {
    verify_rho_semigroup(c, {4, 6, 9}, cable_path{{{2, 3}, {2, -3}}});
    const auto G = num_semigroup::from_generators({4, 6, 9});
    const exact_poly hd = c.poly("hdaha");
    c.poly_is("at-mtq", at_mtq(hd));
    c.same("daha-eq-l-mtq", kg_lhs(G), at_mtq(hd));
    c.holds("superdual", superdual_transform(hd, 6) == hd);
    c.same("normalization", qtpow(6, 0), at_inv_q(at_t(hd, 1)));
    c.same("rho-from-h", rho_qt(G), at_mtq(r_transform(hd, 6)));
    for (int q0 : {2, 3}) {
        census_run r = run_census(semigroup_spec({4, 6, 9}), q0, c.opt);
        const exact_poly h0 = motivic_from_census(r.res, q0, 1);
        // the a=-t/q values agree with the L-side, but the full coincidence
        // with the operator value fails: Cab(9,2)T(3,2) is a negative cable,
        // not an algebraic link
        c.same("hmot-mtq-census@q" + std::to_string(q0),
               at_q(kg_lhs(G), q0) * ipow(q0, h0.max_adeg()), cleared_mtq(h0, q0));
        c.holds("hmot-ne-daha@q" + std::to_string(q0), !(at_q(hd, q0) == h0));
    }
}

void verify_g6811(checker& c) {
    verify_rho_semigroup(c, {6, 8, 11}, cable_path{{{3, 4}, {2, -13}}});
    const auto G = num_semigroup::from_generators({6, 8, 11});
    const exact_poly hd = c.poly("hdaha");
    c.poly_is("l-kg", kg_lhs(G));
    c.same("daha-eq-l-mtq", kg_lhs(G), at_mtq(hd));
    c.holds("superdual", superdual_transform(hd, 11) == hd);
    c.same("normalization", qtpow(11, 0), at_inv_q(at_t(hd, 1)));
}

void verify_g678(checker& c) {
    verify_rho_semigroup(c, {6, 7, 8}, cable_path{{{3, 4}, {2, -17}}});
    const auto G = num_semigroup::from_generators({6, 7, 8});
    c.poly_is("l-kg", kg_lhs(G));
    const exact_poly lhs = c.poly("at-mtq");
    c.holds("daha-ne-l-mtq", !(lhs == kg_lhs(G)));
    c.holds("counterexample-superdual-lhs", superdual_transform(lhs, 9) == lhs);
    c.holds("counterexample-superdual-rhs",
            superdual_transform(kg_lhs(G), 9) == kg_lhs(G));
}

void verify_g467(checker& c) {
    const auto G = num_semigroup::from_generators({4, 6, 7});
    c.int_is("delta", G.delta());
    c.holds("kg-identity", kg_identity_holds(G));
    const exact_poly stored = c.poly("at-mtq");
    c.poly_is("at-mtq", kg_lhs(G));
    for (int q0 : {2, 3}) {
        census_run r = run_census(semigroup_spec({4, 6, 7}), q0, c.opt);
        const exact_poly h0 = motivic_from_census(r.res, q0, 1);
        c.same("hmot-mtq-census@q" + std::to_string(q0),
               at_q(stored, q0) * ipow(q0, h0.max_adeg()), cleared_mtq(h0, q0));
    }
}

void verify_rho4613(checker& c) {
    const auto G = num_semigroup::from_generators({4, 6, 13});
    c.int_is("delta", G.delta());
    c.int_is("kappa", 1);
    const exact_poly dqt = delta_qt(G);
    c.poly_is("dqt", dqt);
    c.same("dqt-runs", dqt, delta_qt_runs(G));
    bool monic = true;
    for (const auto& [m, coef] : dqt.terms()) monic = monic && coef == 1;
    c.holds("dqt-monic", monic);
    const exact_poly mu = mu_qt(G);
    c.poly_is("mu", mu);
    c.same("mu-from-dqt", mu, dqt + superdual_transform(dqt, G.delta() - 1));
    c.int_is("mu11", value_11(mu));
    c.holds("mu11-count", value_11(mu) == 2 * G.delta() - 1 + 1);
    long long varpi = 0;
    for (int g = 0; g < G.conductor(); ++g)
        if (G.contains(g) && !G.contains(g + 1)) ++varpi;
    long long twos = 0;
    for (const auto& [m, coef] : mu.terms()) {
        twos += coef == 2;
        c.holds("mu-coeff-bound", coef == 1 || coef == 2);
    }
    c.int_is("varpi", varpi);
    c.holds("mu-two-count", twos == varpi);

    verify_rho_semigroup(c, {4, 6, 13}, cable_path{{{2, 3}, {2, 1}}});
    const exact_poly rho = rho_qt(G);
    c.same("rho-from-h", rho, at_mtq(r_transform(hmot_g4613(), 8)));
    if (const fixture* g = find_fixture(c.all, "g4613")) {
        c.same("hmtq-cross", fixture_poly(*g, "hmtq"), qtpow(8, 8) + one_minus_t() * dqt);
    }
}

void verify_ctrefoil(checker& c) {
    const exact_poly h2 = hmot_colored_trefoil(2);
    c.poly_is("hmot-c2", h2);
    c.same("hdaha-2w1", c.poly("hdaha-2w1"), h2);
    c.same("afactor-c2", h2, hmot_colored_trefoil_afactor(2));
    c.same("torus-form-c2", h2, hmot_torus_odd2_c2(1));
    const exact_poly h3 = hmot_colored_trefoil(3);
    c.poly_is("hmot-c3", h3);
    c.same("afactor-c3", h3, hmot_colored_trefoil_afactor(3));
    c.poly_is("c2-at-mtq", at_mtq(h2));
    c.same("q1-collapse-c2", at_q(h2, 1),
           (exact_poly(1) + exact_poly(1, mono_qta(0, 0, 1)) + tpow(1)).pow(2));
    c.same("q1-collapse-c3", at_q(h3, 1),
           (exact_poly(1) + exact_poly(1, mono_qta(0, 0, 1)) + tpow(1)).pow(3));
    c.same("color-spec-c2", qtpow(4, 2), h2.substitute(var::a, -1, mono_qta(-2, 0, 0)));
    c.same("color-spec-c3", qtpow(9, 3), h3.substitute(var::a, -1, mono_qta(-3, 0, 0)));

    const std::vector<int> want_dims = split_ints(c.f.scalars.at("dims"));
    for (int q0 : {2, 3}) {
        census_run r = run_census(torus_spec(3, 2, 2), q0, c.opt);
        const std::string tag = "@q" + std::to_string(q0);
        c.same("c2-census" + tag, at_q(h2, q0), motivic_from_census(r.res, q0, 2));
        std::vector<int> dims;
        for (const auto& [st, n] : r.res.cells) {
            int d = 0;
            long long m = n;
            while (m > 1) m /= q0, ++d;
            c.holds("cell-power" + tag, ipow(q0, d) == n);
            dims.push_back(d);
        }
        std::sort(dims.begin(), dims.end());
        c.note("dims" + tag);
        if (dims != want_dims)
            c.fail("dims" + tag, join_ints(want_dims), join_ints(dims));
    }
    census_run r3 = run_census(torus_spec(3, 2, 3), 2, c.opt);
    c.same("c3-census@q2", at_q(h3, 2), motivic_from_census(r3.res, 2, 3));
}

void verify_hopf(checker& c) {
    for (int m : {1, 2, 3}) c.poly_is("hmot:" + std::to_string(m), hmot_hopf_colored(m));
    c.poly_is("hmot3", hmot_hopf3());
    c.poly_is("hmot211", hmot_hopf3_211());
    const exact_poly bold = to_bold_h(hmot_hopf_colored(1));
    c.poly_is("bold:1", bold);
    c.poly_is("bold:2", to_bold_h(hmot_hopf_colored(2)));
    c.poly_is("bold-ainvq:1", at_inv_q(bold));
    c.same("bold-feq", bold, fe_partner(bold, 1));
    c.same("at-neg-t", one_minus_t(), at_neg_t(hmot_hopf_colored(1)));

    for (int m : {1, 2}) {
        std::string ring = "plane z|0 0|z colors " + std::to_string(m) + ",1";
        for (int q0 : {2, 3}) {
            census_run r = run_census(parse_ring_descriptor(ring), q0, c.opt);
            c.same("census:" + std::to_string(m) + "@q" + std::to_string(q0),
                   at_q(hmot_hopf_colored(m), q0), motivic_from_census(r.res, q0, m));
        }
    }
    for (int q0 : {2, 3}) {
        census_run r = run_census(parse_ring_descriptor("plane z|0|z 0|z|z"), q0, c.opt);
        c.same("census3@q" + std::to_string(q0), at_q(hmot_hopf3(), q0),
               motivic_from_census(r.res, q0, 1));
    }
    {
        census_run r =
            run_census(parse_ring_descriptor("plane z|0|z 0|z|z colors 2,1,1"), 2, c.opt);
        c.same("census211@q2", at_q(hmot_hopf3_211(), 2), motivic_from_census(r.res, 2, 2));
    }
    for (int q0 : {2, 3}) {
        finite_field F(q0);
        curve_model m(F, parse_ring_descriptor("plane z|0 0|z"));
        ideal_census ic = ideal_zeta(m, 4, c.opt.node_budget);
        const std::string tag = "@q" + std::to_string(q0);
        c.same("l-census" + tag, truncate_t(at_q(bold, q0), 4),
               truncate_t(l_from_ideal_census(ic, q0, 2), 4));
        c.holds("colen1" + tag, ic.by_colen_rk.count({1, 2}) &&
                                    ic.by_colen_rk.at({1, 2}) == 1 &&
                                    !ic.by_colen_rk.count({1, 1}));
        c.holds("colen2-principal" + tag, ic.by_colen_rk.at({2, 1}) == q0 - 1);
    }
}

void verify_tulinks(checker& c) {
    const exact_poly h2 = hmot_trefoil_unknot_lk2();
    const exact_poly h3 = hmot_trefoil_unknot_lk3();
    c.poly_is("hmot-lk2", h2);
    c.poly_is("hmot-lk3", h3);
    c.int_is("delta-lk2", 3);
    c.int_is("delta-lk3", 4);
    const exact_poly bold = to_bold_h(h2);
    c.poly_is("bold-lk2", bold);
    c.same("at-neg-t-lk2", one_minus_t(), at_neg_t(h2));
    c.same("at-neg-t-lk3", one_minus_t(), at_neg_t(h3));

    const curve_spec lk2 = parse_ring_descriptor("plane z^2|0 z^3|z");
    const curve_spec lk3 = parse_ring_descriptor("plane z^2|z z^3|0");
    {
        finite_field F(2);
        curve_model m2(F, lk2), m3(F, lk3);
        c.holds("linking-lk2", m2.intersection(0, 1) == 2);
        c.holds("linking-lk3", m3.intersection(0, 1) == 3);
    }
    for (int q0 : {2, 3}) {
        const std::string tag = "@q" + std::to_string(q0);
        census_run r2 = run_census(lk2, q0, c.opt);
        c.same("census-lk2" + tag, at_q(h2, q0), motivic_from_census(r2.res, q0, 1));
        census_run r3 = run_census(lk3, q0, c.opt);
        c.same("census-lk3" + tag, at_q(h3, q0), motivic_from_census(r3.res, q0, 1));
    }
    std::vector<int> qs = {2};
    if (c.opt.heavy) qs.push_back(3);
    for (int q0 : qs) {
        finite_field F(q0);
        curve_model m(F, lk2);
        ideal_census ic = ideal_zeta(m, 8, std::max(c.opt.node_budget, 128'000'000LL));
        const exact_poly L = l_from_ideal_census(ic, q0, 2);
        const std::string tag = "@q" + std::to_string(q0);
        c.same("l-census-lk2" + tag, truncate_t(at_q(bold, q0), 8), truncate_t(L, 8));
        c.holds("l-feq-lk2" + tag, functional_equation_holds(at_q(bold, q0), q0, 3));
    }
}

void verify_lknots(checker& c) {
    struct entry {
        std::string suffix;
        std::vector<int> gens;
        exact_poly h;
        int delta;
    };
    const std::vector<entry> cases = {{"2,3", {2, 3}, hmot_trefoil(), 1},
                                      {"2,5", {2, 5}, hmot_torus_odd2(2), 2}};
    for (const auto& e : cases) {
        const auto G = num_semigroup::from_generators(e.gens);
        c.int_is("delta:" + e.suffix, e.delta);
        const exact_poly bold = to_bold_h(e.h);
        c.poly_is("bold:" + e.suffix, bold);
        const exact_poly zu = zuniga_qt(G);
        c.poly_is("zuniga:" + e.suffix, zu);
        c.same("zuniga-alexander:" + e.suffix, at_q(zu, 1), alexander_hat(G));
        c.same("l-eq-bold:" + e.suffix, c.poly("l:" + e.suffix), bold);
        const exact_poly L = c.poly("l:" + e.suffix);
        c.same("l-feq:" + e.suffix, L, fe_partner(L, e.delta));
        c.holds("l-degree:" + e.suffix, L.max_exp4(var::t) == 2 * 2 * e.delta);
        c.same("l-at-neg-t:" + e.suffix, exact_poly(1), at_neg_t(L));
        c.same("l-at-inv-q:" + e.suffix, zu, at_inv_q(L));
        for (int q0 : {2, 3}) {
            finite_field F(q0);
            curve_model m(F, semigroup_spec(e.gens));
            knot_l_result l = l_function_knot(m, c.opt.node_budget);
            c.same("l-shift-route:" + e.suffix + "@q" + std::to_string(q0),
                   at_q(L, q0), l.L);
            const auto prin = principal_zeta(m, G.conductor());
            const exact_poly zq = at_q(zu, q0);
            for (int m0 = 0; m0 <= G.conductor(); ++m0) {
                long long cum = 0;
                for (int j = 0; j <= m0; ++j) cum += zq.coeff_qta(0, j, 0);
                auto it = prin.find(m0);
                c.holds("principal:" + e.suffix + "@q" + std::to_string(q0) + ":t" +
                            std::to_string(m0),
                        (it == prin.end() ? 0 : it->second) == cum);
            }
        }
    }
}

void verify_dahajd(checker& c) {
    const jd_result j32 = daha_jones(3, 2);
    c.poly_is("jd:3,2", j32.normalized);
    c.same("jd-symmetry", j32.normalized, daha_jones(2, 3).normalized);
    c.same("jd-coincidence:3,2", j32.normalized, at_neg_t2(hmot_trefoil()).hat_normalized());
    {
        std::vector<int> w = tau_word(3, 2);
        w.push_back(3);
        c.same("jd-word-independence", j32.normalized, daha_jones_word(w).normalized);
    }
    for (int r : {2, 5}) c.same("jd-unknot:" + std::to_string(r) + ",1", exact_poly(1),
                                daha_jones(r, 1).normalized);
    c.poly_is("jd:5,2", daha_jones(5, 2).normalized);
    c.same("jd-coincidence:5,2", daha_jones(5, 2).normalized,
           at_neg_t2(hmot_torus_odd2(2)).hat_normalized());
    c.poly_is("jd:7,2", daha_jones(7, 2).normalized);
    c.same("jd-coincidence:7,2", daha_jones(7, 2).normalized,
           at_neg_t2(hmot_torus_odd2(3)).hat_normalized());
    {
        std::vector<std::pair<int, exact_poly>> evals;
        for (int q0 : {2, 3, 4, 5, 7, 8, 9}) {
            census_run r = run_census(torus_spec(4, 3), q0, c.opt);
            evals.push_back({q0, motivic_from_census(r.res, q0, 1)});
        }
        const exact_poly h43 = reconstruct_in_q(evals, 6);
        c.poly_is("jd:4,3", daha_jones(4, 3).normalized);
        c.same("jd-coincidence:4,3", daha_jones(4, 3).normalized,
               at_neg_t2(h43).hat_normalized());
    }
    c.poly_is("jd2:3,2", daha_jones(3, 2, 2).normalized);
    c.same("jd2-coincidence:3,2", daha_jones(3, 2, 2).normalized,
           at_neg_t2(hmot_colored_trefoil(2)).hat_normalized());
    {
        bool threw = false;
        try {
            daha_jones(4, 2);
        } catch (const non_coprime&) {
            threw = true;
        }
        c.holds("non-coprime-rejected", threw);
    }
}

using verifier_fn = std::function<void(checker&)>;

const std::map<std::string, verifier_fn>& verifier_registry() {
    static const std::map<std::string, verifier_fn> reg = {
        {"trefoil", verify_trefoil},
        {"torus2", verify_torus2},
        {"t73", verify_t73},
        {"t94", verify_t94},
        {"g4613", verify_g4613},
        {"t64", verify_t64},
        {"g456", verify_g456},
        {"g469", verify_g469},
        {"g6811", verify_g6811},
        {"g678", verify_g678},
        {"g467", verify_g467},
        {"rho4613", verify_rho4613},
        {"ctrefoil", verify_ctrefoil},
        {"hopf", verify_hopf},
        {"tulinks", verify_tulinks},
        {"lknots", verify_lknots},
        {"dahajd", verify_dahajd},
    };
    return reg;
}

}  // namespace

std::vector<fixture_diff> verify_fixtures(const std::vector<fixture>& all,
                                          const std::string& only_id, const verify_options& opt,
                                          std::vector<std::string>* checked) {
    std::vector<fixture_diff> diffs;
    for (const fixture& f : all) {
        if (!only_id.empty() && f.id != only_id) continue;
        checker c{f, all, opt, diffs, checked};
        // stored polynomials must round-trip through the canonical text format
        for (const auto& [key, text] : f.polys) {
            c.note("roundtrip:" + key);
            try {
                if (parse_poly(text).str() != text)
                    c.fail("roundtrip:" + key, text, parse_poly(text).str());
            } catch (const calc_error& ex) {
                c.fail("roundtrip:" + key, text, std::string("parse error: ") + ex.what());
            }
        }
        auto it = verifier_registry().find(f.id);
        if (it == verifier_registry().end()) continue;
        try {
            it->second(c);
        } catch (const std::exception& ex) {
            c.fail("exception", "<none>", ex.what());
        }
    }
    return diffs;
}

}  // namespace curvelink
