// superpoly.hpp -- assembled motivic superpolynomials: closed product forms
// for the standard menu of links, symbolic-q reconstruction from censuses at
// several field sizes, the flag-space oracle for the a-grading, superduality
// and related transforms, and the weak Riemann hypothesis root checks.

#pragma once

#include <utility>
#include <vector>

#include "curvelink/exactpoly.hpp"
#include "curvelink/modcount.hpp"

namespace curvelink {

// closed forms ----------------------------------------------------------------
exact_poly hmot_trefoil();                       // 1 + qt + aq
exact_poly hmot_torus_odd2(int n);               // T(2n+1, 2), uncolored
exact_poly hmot_torus_odd2_c2(int n);            // T(2n+1, 2), two colors
exact_poly hmot_colored_trefoil(int c);          // flag product form
exact_poly hmot_colored_trefoil_afactor(int c);  // (a/t)-product variant
exact_poly hmot_hopf_colored(int m);             // H(m,1): (1 + a q^m) + (q^m - 1) t
exact_poly hmot_hopf3();                         // T(3,3)
exact_poly hmot_hopf3_211();                     // Hopf 3-link with colors (2,1,1)
exact_poly hmot_t64();                           // T(6,4), rank decomposition
exact_poly hmot_g4613();                         // Cab(13,2) of the trefoil
exact_poly hmot_t73();                           // T(7,3)
exact_poly hmot_t94();                           // T(9,4)
exact_poly hmot_g456();                          // semigroup <4,5,6>
exact_poly hmot_trefoil_unknot_lk2();            // trefoil + transversal unknot
exact_poly hmot_trefoil_unknot_lk3();            // trefoil + tangent unknot

// reconstruction ---------------------------------------------------------------
// interpolate polynomials with numeric q baked in (pairs (q_i, value_i)) into
// a symbolic-q polynomial; throws when any coefficient needs q-degree beyond
// max_deg (so extra sample points act as consistency checks)
exact_poly reconstruct_in_q(const std::vector<std::pair<int, exact_poly>>& evals, int max_deg);

// flag oracle -------------------------------------------------------------------
// number of k-dimensional subspaces of F_q^n, counted by literally walking
// reduced echelon bases
long long count_subspaces(int q, int n, int k);
// reassemble the a-grading of a census from literal subspace counts:
// sum_cells count * t^deg * sum_k a^k q^{k c1 + k(k-1)/2} #subspaces(rk-c1, k)
exact_poly flag_oracle_from_census(const census_result& c, int q, int c1);

// transforms --------------------------------------------------------------------
// (qt)^delta h(1/t, 1/q, a): the anti-transpose on the (q,t)-support
exact_poly superdual_transform(const exact_poly& h, int delta);
// h(qt, t, a)
exact_poly to_bold_h(const exact_poly& h);

// R(q,t,a) = (H(qt,t,a) - t^delta H(qt,1,a)) / ((1-q)(1-t)); the division must
// be exact, otherwise division_not_exact.  rho(q,t) = R at a = -t/q.
exact_poly r_transform(const exact_poly& h, int delta);
// terms with q-exponent == t-exponent + shift
exact_poly diagonal_part(const exact_poly& h, int shift);

// weak Riemann hypothesis ---------------------------------------------------------
struct rh_report {
    int polynomials = 0;  // a-coefficients with positive t-degree tested
    int roots = 0;
    double worst_rel = 0.0;  // worst relative deviation of |z| from q^{-1/2}
    bool pass = false;
};
// all roots in t of every a-coefficient of h(qt, t, a) at numeric q0 must lie
// on the circle |t| = q0^{-1/2} within rel_tol
rh_report weak_rh_roots(const exact_poly& h, double q0, double rel_tol);

}  // namespace curvelink
