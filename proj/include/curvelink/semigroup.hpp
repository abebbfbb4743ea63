// semigroup.hpp -- numerical semigroups of plane curve branches and the
// combinatorics living on them: standard Delta-sets (module valuation
// patterns), the reciprocity involution, cable (iterated torus) semigroups,
// and the gap-statistics polynomials used by the zeta side of the package.

#pragma once

#include <vector>

#include "curvelink/exactpoly.hpp"

namespace curvelink {

// thrown by invariants that are defined only for symmetric (Gorenstein)
// semigroups
struct not_gorenstein : calc_error {
    using calc_error::calc_error;
};

class num_semigroup {
  public:
    static num_semigroup from_generators(std::vector<int> gens);
    // build from an explicit membership table on [0, conductor); the set is
    // verified to be a numerical semigroup and minimal generators are derived
    static num_semigroup from_members(const std::vector<char>& member, int conductor);

    const std::vector<int>& gens() const { return gens_; }
    const std::vector<int>& gaps() const { return gaps_; }
    int conductor() const { return conductor_; }
    int delta() const { return (int)gaps_.size(); }
    // symmetric (Gorenstein) <=> conductor == 2*delta
    bool symmetric() const { return conductor_ == 2 * delta(); }

    bool contains(int v) const {
        if (v < 0) return false;
        if (v >= conductor_) return true;
        return member_[v];
    }
    // elements below the conductor (starting with 0)
    std::vector<int> small_elements() const;

  private:
    std::vector<int> gens_;
    std::vector<int> gaps_;
    std::vector<char> member_;
    int conductor_ = 0;
};

// Standard Delta-sets, encoded by D = Delta \ Gamma (sorted gap subsets
// closed under addition of semigroup elements).  The empty set (Delta =
// Gamma) comes first; order is deterministic.
std::vector<std::vector<int>> standard_dsets(const num_semigroup& G);

// number of Gamma-module generators of Delta = Gamma cup D
int gamma_rank(const num_semigroup& G, const std::vector<int>& D);

// reciprocity involution D -> D* via Delta* = {p : p + Delta subset Gamma}
// shifted to start at 0
std::vector<int> reciprocal_dset(const num_semigroup& G, const std::vector<int>& D);

// normalized Alexander polynomial (1-t) sum_{v in Gamma, v<c} t^v + t^c
exact_poly alexander_hat(const num_semigroup& G);

// gap statistics ------------------------------------------------------------
// delta(q,t) = sum_{y in Gamma, y < 2 delta} q^{#gaps<y} t^{#(Gamma cap [0,y]) - 1}
exact_poly delta_qt(const num_semigroup& G);
// the same polynomial from the gap-run expansion (independent route)
exact_poly delta_qt_runs(const num_semigroup& G);
// mu(q,t) = sum over all 0 <= x < 2 delta of q^{#gaps<x} t^{#(Gamma cap [0,x]) - 1}
exact_poly mu_qt(const num_semigroup& G);
// rho(q,t) = sum over gaps x and semigroup elements y < x of
//            q^{#gaps<x} t^{#(Gamma cap [0,y]) - 1}
exact_poly rho_qt(const num_semigroup& G);
// zeta specialization a = -1/q in closed combinatorial form:
// (1-t) sum_{v in Gamma, v<c} q^{u(v)} t^v + q^delta t^c,
// u(v) = #{w in Gamma : w > v, w - v not in Gamma}
exact_poly zuniga_qt(const num_semigroup& G);

// cables ---------------------------------------------------------------------
// an iterated torus knot as its list of Newton pairs (r_i, s_i), innermost
// first; the plain torus knot T(r,s) is {{r,s}}
struct cable_path {
    std::vector<std::pair<int, int>> steps;
};

// characteristic sequence a_1 = s_1, a_i = a_{i-1} r_{i-1} r_i + s_i
std::vector<long long> cable_char_sequence(const cable_path& p);
// value semigroup < prod r_i, a_1 r_2..r_l, ..., a_l >
num_semigroup cable_semigroup(const cable_path& p);
// delta = 1/2 sum_i (prod_{j>i} r_j) (a_i - 1)(r_i - 1)
long long cable_delta(const cable_path& p);
// linking number of two branches whose Newton paths share a prefix of
// length i0 >= 1 and are generic after it:  a_{i0} r_{i0} * (product of the
// remaining r's on each side).  Two copies of T(r,s) give rs.
long long pair_linking(const cable_path& p1, const cable_path& p2);
// rho(1,1) = 1/24 sum_i u_i^2 (a_i^2 - 1)(r_i^2 - 1),  u_i = r_{i+1}..r_k
long long cable_rho(const cable_path& p);
// rational-slope Catalan number binom(r+s, r) / (r+s)
long long rational_catalan(int r, int s);

}  // namespace curvelink
