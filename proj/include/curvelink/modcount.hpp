// modcount.hpp -- point counting for spaces of standard modules over a curve
// model.  The enumeration walks ambient columns in merged order and maintains
// one residue stream per (generator, pivot row): the stream holds the
// generator action on that row, continuously reduced against the other rows.
// Because every action component sits strictly to the right of its source
// column, each stream value is final when its column is processed; gap
// columns must read zero, which prunes the search at the earliest possible
// moment.

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "curvelink/singularity.hpp"

namespace curvelink {

struct budget_exceeded : calc_error {
    using calc_error::calc_error;
};

// generic echelon-basis enumeration over a fixed pivot set ------------------
class column_dfs {
  public:
    // act[g][col]: action of generator g on the basis vector of column col,
    // as a dense row of `width` entries all strictly after col; forced:
    // vectors that must reduce to zero over the enumerated rows (used for
    // mandatory subspaces)
    column_dfs(const finite_field& F, int ncols, int width,
               const std::vector<std::vector<row_vec>>* act, std::vector<row_vec> forced);

    void run(const std::vector<int>& pivot_cols, const std::function<void()>& leaf,
             std::atomic<long long>* nodes, long long budget);

    // leaf-time accessors
    int rows() const { return (int)pivots_.size(); }
    int num_gens() const { return (int)act_->size(); }
    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<int>& gaps() const { return gaps_; }
    uint8_t entry(int ri, int col) const { return entry_[ri][col]; }
    row_vec row_of(int ri) const;                        // e_pivot + assigned entries
    const row_vec& raw_stream(int g, int ri) const;      // unreduced generator action

  private:
    const finite_field* F_;
    int ncols_, width_;
    const std::vector<std::vector<row_vec>>* act_;
    std::vector<row_vec> forced_;

    std::vector<int> pivots_, gaps_;
    std::vector<int> pivot_index_;             // col -> row index or -1
    std::vector<std::vector<int>> vars_;       // gap col -> row indices of pivots before it
    std::vector<row_vec> cur_, raw_;           // stream state, width wide
    std::vector<std::vector<uint8_t>> lambda_; // [stream][row] recorded multiples
    std::vector<std::vector<uint8_t>> entry_;  // [row][col] assigned values

    const std::function<void()>* leaf_ = nullptr;
    std::atomic<long long>* nodes_ = nullptr;
    long long budget_ = 0;

    int nstreams() const { return (int)cur_.size(); }
    void process(int col);
    void assign(int col, size_t vi);
};

// per-leaf invariants of an enumerated module -------------------------------
class cell_evaluator {
  public:
    explicit cell_evaluator(const ambient_model& a);

    // constant-coefficient vectors of valuation-0 rows span F^{c_b} per branch
    bool standard(const column_dfs& e) const;
    // dim M / m M via the generator images inside the window + ext columns
    int rank_q(const column_dfs& e) const;
    // dim {f : m f in M} / M (second product statistic)
    int dstar(const column_dfs& e) const;

  private:
    const ambient_model* am;
    const finite_field* F;
    int ext_total = 0;
    std::vector<std::pair<int, int>> val0;  // (column, line) of valuation-0 slots
};

// standard module census ------------------------------------------------------
struct cell_stat {
    std::vector<int> pivots;  // window columns of the echelon pivot set
    int deg = 0;              // dim Omega / M  (number of gap columns)
    int rkq = 0;              // dim M / m M
    int dstar = -1;           // dim M^/ M for the knot-case second product; -1 off
    friend bool operator<(const cell_stat& a, const cell_stat& b) {
        if (a.pivots != b.pivots) return a.pivots < b.pivots;
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.rkq != b.rkq) return a.rkq < b.rkq;
        return a.dstar < b.dstar;
    }
};
using census_map = std::map<cell_stat, long long>;
struct census_result {
    census_map cells;
    long long nodes = 0;
};

struct census_options {
    long long node_budget = 4'000'000;
    int jobs = 1;
    bool with_dstar = false;        // only meaningful for one uncolored branch
    bool force_all_subsets = false; // skip the semigroup pivot-set shortcut
};

census_result standard_module_census(const ambient_model& am, const census_options& opt = {});

// assemble sum_cells count * t^deg * prod_{j=c1}^{rk-1} (1 + a q^j) at a
// numeric field size q
exact_poly motivic_from_census(const census_result& c, int q, int c1);
// assemble the knot-case second product sum_cells count * t^deg *
// prod_{i=0}^{dstar-1} (1 + q^i a/t)
exact_poly second_product_from_census(const census_result& c, int q);

// valuations of the pivot columns that are not semigroup elements (D-set of
// the cell); single-branch models only
std::vector<int> dset_of_pivots(const ambient_model& am, const std::vector<int>& pivots);
// pivot columns realizing Gamma cup D inside the window (inverse of the above)
std::vector<int> pivots_of_dset(const ambient_model& am, const std::vector<int>& D);

}  // namespace curvelink
