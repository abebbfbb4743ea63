// lfunction.hpp -- zeta and L-functions of curve singularities over a finite
// field, graded by the module rank statistic.
//
//   Z(q,t,a) = sum over nonzero ideals J of R of
//                t^{dim R/J} prod_{j=1}^{rk_q(J)-1} (1 + a q^j),
//   L(q,t,a) = (1-t)^kappa Z(q,t,a),   kappa = number of branches.
//
// For one uncolored branch every ideal is a unique shift z^m M of a standard
// module M, which turns L into a finite sum over the standard module census;
// the shift exponents are decided by ring membership.  A direct ideal census
// (all ideals of bounded colength, enumerated in quotient-algebra coordinates)
// and a principal-ideal census serve as independent oracles and cover small
// multibranch curves.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "curvelink/exactpoly.hpp"
#include "curvelink/modcount.hpp"
#include "curvelink/semigroup.hpp"
#include "curvelink/singularity.hpp"

namespace curvelink {

// shift route (one uncolored branch) ------------------------------------------
struct knot_l_result {
    exact_poly L;  // numeric q baked in
    // (value set D, rank) -> sum over modules in the cell of
    //   (1-t) sum_{valid shifts m < c} t^{m+deg-delta}  +  t^{c+deg-delta},
    // without the rank flag factor
    std::map<std::pair<std::vector<int>, int>, exact_poly> rows;
};

knot_l_result l_function_knot(const curve_model& m, long long node_budget = 4'000'000);

// bounded ideal census (any uncolored curve) -----------------------------------
struct ideal_census {
    std::map<std::pair<int, int>, long long> by_colen_rk;  // (colength, rank) -> count
    int bound = 0;                                         // complete for colength <= bound
};

ideal_census ideal_zeta(const curve_model& m, int bound, long long node_budget = 4'000'000);

// (1-t)^kappa * sum count t^colen prod_{j=1}^{rk-1}(1+aq^j), truncated past
// t^bound; agrees with the true L up to that degree
exact_poly l_from_ideal_census(const ideal_census& c, int q, int kappa);

// principal ideals only: colength -> number of distinct ideals f R
std::map<int, long long> principal_zeta(const curve_model& m, int bound);

// checks and transforms --------------------------------------------------------

// drop all terms of t-degree > tmax
exact_poly truncate_t(const exact_poly& p, int tmax);

// q^delta t^{2 delta} L(q, 1/(qt), a) == L, checked at numeric q by clearing
// denominators with q^delta
bool functional_equation_holds(const exact_poly& L, int q, int delta);

// q^amax * L(q, t, -1/q) at numeric q (scaled to stay integral)
exact_poly at_a_neg_inv_q_scaled(const exact_poly& L, int q, int amax);

// two sides of the rho-form identity for L(q/t, t, -t/q) of a semigroup curve:
// lhs from the Zuniga form, rhs = (1-q)(1-t) rho(q,t) + q^delta
exact_poly kg_lhs(const num_semigroup& G);
exact_poly kg_rhs(const num_semigroup& G);
bool kg_identity_holds(const num_semigroup& G);

}  // namespace curvelink
