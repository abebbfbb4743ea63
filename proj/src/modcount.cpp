#include "curvelink/modcount.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace curvelink {

column_dfs::column_dfs(const finite_field& F, int ncols, int width,
                       const std::vector<std::vector<row_vec>>* act, std::vector<row_vec> forced)
    : F_(&F), ncols_(ncols), width_(width), act_(act), forced_(std::move(forced)) {}

row_vec column_dfs::row_of(int ri) const {
    row_vec r((size_t)width_, 0);
    r[pivots_[ri]] = 1;
    for (int g : gaps_)
        if (g > pivots_[ri]) r[g] = entry_[ri][g];
    return r;
}

const row_vec& column_dfs::raw_stream(int g, int ri) const {
    return raw_[(size_t)g * rows() + ri];
}

void column_dfs::run(const std::vector<int>& pivot_cols, const std::function<void()>& leaf,
                     std::atomic<long long>* nodes, long long budget) {
    pivots_ = pivot_cols;
    const int R = rows();
    pivot_index_.assign(ncols_, -1);
    for (int i = 0; i < R; ++i) pivot_index_[pivots_[i]] = i;
    gaps_.clear();
    vars_.assign(ncols_, {});
    for (int col = 0; col < ncols_; ++col) {
        if (pivot_index_[col] >= 0) continue;
        gaps_.push_back(col);
        for (int i = 0; i < R; ++i)
            if (pivots_[i] < col) vars_[col].push_back(i);
    }

    const int G = num_gens();
    raw_.assign((size_t)G * R, row_vec());
    cur_.assign((size_t)G * R + forced_.size(), row_vec());
    for (int g = 0; g < G; ++g)
        for (int i = 0; i < R; ++i) {
            raw_[(size_t)g * R + i] = (*act_)[g][pivots_[i]];
            cur_[(size_t)g * R + i] = (*act_)[g][pivots_[i]];
        }
    for (size_t f = 0; f < forced_.size(); ++f) cur_[(size_t)G * R + f] = forced_[f];
    lambda_.assign(cur_.size(), std::vector<uint8_t>((size_t)std::max(R, 1), 0));
    entry_.assign((size_t)std::max(R, 1), std::vector<uint8_t>((size_t)ncols_, 0));

    leaf_ = &leaf;
    nodes_ = nodes;
    budget_ = budget;
    process(0);
}

void column_dfs::process(int col) {
    if (col == ncols_) {
        (*leaf_)();
        return;
    }
    const int ri = pivot_index_[col];
    if (ri >= 0) {
        for (int s = 0; s < nstreams(); ++s) lambda_[s][ri] = cur_[s][col];
        process(col + 1);
        return;
    }
    assign(col, 0);
}

void column_dfs::assign(int col, size_t vi) {
    if (vi == vars_[col].size()) {
        for (int s = 0; s < nstreams(); ++s)
            if (cur_[s][col]) return;  // residue must vanish at a gap column
        process(col + 1);
        return;
    }
    const int ri = vars_[col][vi];
    const int R = rows();
    const int G = num_gens();
    for (int alpha = 0; alpha < F_->q(); ++alpha) {
        if (nodes_->fetch_add(1, std::memory_order_relaxed) >= budget_)
            throw budget_exceeded("module enumeration exceeded the node budget");
        if (alpha) {
            const uint8_t a = (uint8_t)alpha;
            entry_[ri][col] = a;
            for (int g = 0; g < G; ++g) {
                const row_vec& av = (*act_)[g][col];
                row_vec& cv = cur_[(size_t)g * R + ri];
                row_vec& rv = raw_[(size_t)g * R + ri];
                for (int c = 0; c < width_; ++c)
                    if (av[c]) {
                        cv[c] = F_->axpy(cv[c], a, av[c]);
                        rv[c] = F_->axpy(rv[c], a, av[c]);
                    }
            }
            for (int s = 0; s < nstreams(); ++s) {
                const uint8_t lam = lambda_[s][ri];
                if (lam) cur_[s][col] = F_->sub(cur_[s][col], F_->mul(lam, a));
            }
        }
        assign(col, vi + 1);
        if (alpha) {
            const uint8_t a = (uint8_t)alpha;
            entry_[ri][col] = 0;
            for (int g = 0; g < G; ++g) {
                const row_vec& av = (*act_)[g][col];
                row_vec& cv = cur_[(size_t)g * R + ri];
                row_vec& rv = raw_[(size_t)g * R + ri];
                const uint8_t na = F_->neg(a);
                for (int c = 0; c < width_; ++c)
                    if (av[c]) {
                        cv[c] = F_->axpy(cv[c], na, av[c]);
                        rv[c] = F_->axpy(rv[c], na, av[c]);
                    }
            }
            for (int s = 0; s < nstreams(); ++s) {
                const uint8_t lam = lambda_[s][ri];
                if (lam) cur_[s][col] = F_->add(cur_[s][col], F_->mul(lam, a));
            }
        }
    }
}

// census ----------------------------------------------------------------------

namespace {

// pivot sets of a single uncolored branch: window restrictions of the
// standard Delta-sets of the value semigroup
std::vector<std::vector<int>> semigroup_pivot_sets(const ambient_model& am) {
    const num_semigroup& G = am.model->branch_gamma(0);
    std::vector<std::vector<int>> out;
    for (const auto& D : standard_dsets(G)) out.push_back(pivots_of_dset(am, D));
    return out;
}

std::vector<std::vector<int>> all_pivot_sets(int ncols) {
    if (ncols > 22) throw calc_error("ambient window too large for subset enumeration");
    std::vector<std::vector<int>> out;
    out.reserve(1u << ncols);
    for (unsigned long mask = 0; mask < (1ul << ncols); ++mask) {
        std::vector<int> p;
        for (int c = 0; c < ncols; ++c)
            if (mask >> c & 1) p.push_back(c);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

cell_evaluator::cell_evaluator(const ambient_model& a) : am(&a), F(&a.model->field()) {
    for (int l = 0; l < a.tau; ++l) ext_total += a.ext[l];
    for (int c = 0; c < a.nslots; ++c)
        if (a.slot[c].first == 0) val0.emplace_back(c, a.slot[c].second);
}

bool cell_evaluator::standard(const column_dfs& e) const {
    // constant-coefficient vectors of valuation-0 rows must span F^{c_b}
    // on the lines of every branch
    const auto& colors = am->model->spec().colors;
    std::vector<int> first_line(colors.size(), 0);
    for (size_t b = 1; b < colors.size(); ++b)
        first_line[b] = first_line[b - 1] + colors[b - 1];
    for (size_t b = 0; b < colors.size(); ++b) {
        row_space space(F, (size_t)colors[b]);
        for (int ri = 0; ri < e.rows(); ++ri) {
            const int pcol = e.pivots()[ri];
            if (am->slot[pcol].first != 0) continue;
            row_vec v((size_t)colors[b], 0);
            for (const auto& [col, line] : val0) {
                if (line < first_line[b] || line >= first_line[b] + colors[b]) continue;
                uint8_t x = 0;
                if (col == pcol)
                    x = 1;
                else if (col > pcol)
                    x = e.entry(ri, col);
                v[line - first_line[b]] = x;
            }
            space.insert(std::move(v));
        }
        if ((int)space.rank() != colors[b]) return false;
    }
    return true;
}

int cell_evaluator::rank_q(const column_dfs& e) const {
    std::vector<row_vec> images;
    images.reserve((size_t)e.num_gens() * e.rows());
    for (int g = 0; g < e.num_gens(); ++g)
        for (int ri = 0; ri < e.rows(); ++ri) images.push_back(e.raw_stream(g, ri));
    return e.rows() + ext_total - (int)rank_of(*F, images);
}

int cell_evaluator::dstar(const column_dfs& e) const {
    // d = dim {f : m f in M} / M; stack, per window coordinate of f, the
    // gap residues of all reduced generator actions and count the rank
    const auto& gaps = e.gaps();
    const int G = e.num_gens();
    std::vector<row_vec> cols;
    cols.reserve((size_t)am->nslots);
    for (int c = 0; c < am->nslots; ++c) {
        row_vec cond((size_t)G * gaps.size(), 0);
        for (int g = 0; g < G; ++g) {
            row_vec v = am->act[g][c];
            for (int ri = 0; ri < e.rows(); ++ri) {
                const int p = e.pivots()[ri];
                const uint8_t lam = v[p];
                if (!lam) continue;
                v[p] = 0;
                for (int gc : gaps)
                    if (gc > p) v[gc] = F->sub(v[gc], F->mul(lam, e.entry(ri, gc)));
            }
            for (size_t i = 0; i < gaps.size(); ++i)
                cond[(size_t)g * gaps.size() + i] = v[gaps[i]];
        }
        cols.push_back(std::move(cond));
    }
    return am->nslots - e.rows() - (int)rank_of(*F, cols);
}

census_result standard_module_census(const ambient_model& am, const census_options& opt) {
    const bool plain_knot =
        am.model->branches() == 1 && am.model->spec().colors[0] == 1 && !opt.force_all_subsets;
    const std::vector<std::vector<int>> sets =
        plain_knot ? semigroup_pivot_sets(am) : all_pivot_sets(am.nslots);
    const bool want_dstar =
        opt.with_dstar && am.model->branches() == 1 && am.model->spec().colors[0] == 1;

    census_result out;
    std::atomic<long long> nodes{0};
    std::atomic<size_t> next{0};
    std::mutex merge_mu;
    std::exception_ptr fail;

    const int jobs = std::max(1, opt.jobs);
    auto worker = [&]() {
        cell_evaluator ev(am);
        column_dfs dfs(am.model->field(), am.nslots, am.width, &am.act, {});
        census_map local;
        try {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= sets.size()) break;
                cell_stat key;
                key.pivots = sets[i];
                key.deg = am.nslots - (int)sets[i].size();
                dfs.run(
                    sets[i],
                    [&]() {
                        if (!ev.standard(dfs)) return;
                        key.rkq = ev.rank_q(dfs);
                        key.dstar = want_dstar ? ev.dstar(dfs) : -1;
                        ++local[key];
                    },
                    &nodes, opt.node_budget);
            }
        } catch (...) {
            std::lock_guard lk(merge_mu);
            if (!fail) fail = std::current_exception();
            return;
        }
        std::lock_guard lk(merge_mu);
        for (const auto& [k, v] : local) out.cells[k] += v;
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (fail) std::rethrow_exception(fail);
    out.nodes = nodes.load();
    return out;
}

exact_poly motivic_from_census(const census_result& c, int q, int c1) {
    exact_poly out;
    for (const auto& [cell, count] : c.cells) {
        exact_poly term(count);
        term *= exact_poly::monomial(1, 0, cell.deg, 0);
        for (int j = c1; j < cell.rkq; ++j)
            term *= exact_poly(1) + exact_poly(checked_pow(q, j), mono_qta(0, 0, 1));
        out += term;
    }
    return out;
}

exact_poly second_product_from_census(const census_result& c, int q) {
    exact_poly out;
    for (const auto& [cell, count] : c.cells) {
        if (cell.dstar < 0) throw calc_error("census was built without the second statistic");
        exact_poly term(count);
        term *= exact_poly::monomial(1, 0, cell.deg, 0);
        for (int i = 0; i < cell.dstar; ++i)
            term *= exact_poly(1) + exact_poly(checked_pow(q, i), mono_qta(0, -1, 1));
        out += term;
    }
    return out;
}

std::vector<int> dset_of_pivots(const ambient_model& am, const std::vector<int>& pivots) {
    if (am.tau != 1) throw calc_error("D-sets are defined for single-line models");
    const num_semigroup& G = am.model->branch_gamma(0);
    std::vector<int> D;
    for (int col : pivots) {
        const int k = am.slot[col].first;
        if (!G.contains(k)) D.push_back(k);
    }
    return D;
}

std::vector<int> pivots_of_dset(const ambient_model& am, const std::vector<int>& D) {
    if (am.tau != 1) throw calc_error("D-sets are defined for single-line models");
    const num_semigroup& G = am.model->branch_gamma(0);
    std::vector<int> cols;
    for (int col = 0; col < am.nslots; ++col) {
        const int k = am.slot[col].first;
        if (G.contains(k) || std::binary_search(D.begin(), D.end(), k)) cols.push_back(col);
    }
    return cols;
}

}  // namespace curvelink
