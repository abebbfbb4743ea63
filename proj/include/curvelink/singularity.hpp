// singularity.hpp -- plane curve singularities over a finite field, given by
// branch parametrizations.  A curve_spec lists the ring generators as tuples
// of power series (one series per topological branch, integer coefficients);
// binding it to a field yields a curve_model which knows the value
// semigroups, delta invariants, pairwise intersection numbers, conductor
// exponents, and the finite-dimensional ambient window in which all standard
// modules live.

#pragma once

#include <utility>
#include <vector>

#include "curvelink/exactpoly.hpp"
#include "curvelink/finite_field.hpp"
#include "curvelink/linalg.hpp"
#include "curvelink/semigroup.hpp"

namespace curvelink {

// the span computation did not stabilize below the precision cap (typically a
// degenerate spec, e.g. two equal branches)
struct gamma_unstable : calc_error {
    using calc_error::calc_error;
};

// dense truncated power series over a finite field; index = exponent of z
using fseries = std::vector<uint8_t>;

int series_ord(const fseries& f);  // -1 for the zero series
fseries series_mul(const finite_field& F, const fseries& f, const fseries& g, int prec);
fseries series_inverse(const finite_field& F, const fseries& f, int prec);  // f(0) != 0

// field-independent description -----------------------------------------------
struct curve_spec {
    std::vector<int> colors;  // per topological branch, >= 1
    // gens[g][b] = coefficient list of generator g on branch b (index =
    // z-exponent, constant term must vanish); same generator count on every
    // branch, zero series allowed
    std::vector<std::vector<std::vector<int>>> gens;

    int branches() const { return (int)colors.size(); }
    int lines() const;
    void validate() const;
};

// x = z^r, y = z^s
curve_spec torus_spec(int r, int s, int color = 1);
// monomial curve of a numerical semigroup: one generator z^g per semigroup
// generator
curve_spec semigroup_spec(const std::vector<int>& gens);

// textual ring descriptors (used by the CLI and the fixture corpus):
//   "torus R S [color C]"          one branch x = z^R, y = z^S
//   "semigroup A,B,..."            monomial curve of <A,B,...>
//   "plane XSPEC YSPEC [colors C,...]"
// where XSPEC/YSPEC list one series per branch joined by '|', each series a
// sum of [-][k*]z^e terms or 0, e.g. "plane z^2|-z^2 z^3|z^3"
curve_spec parse_ring_descriptor(const std::string& desc);

// bound model ------------------------------------------------------------------
class curve_model {
  public:
    curve_model(const finite_field& F, curve_spec spec, int precision = 0);

    const finite_field& field() const { return *F_; }
    const curve_spec& spec() const { return spec_; }
    int branches() const { return spec_.branches(); }
    int lines() const { return spec_.lines(); }
    int precision() const { return prec_; }

    int delta() const { return delta_; }                    // dim O/R
    int branch_delta(int b) const;                          // delta of branch alone
    int intersection(int i, int j) const;                   // I_ij, dimension route
    int conductor_exp(int b) const { return cond_[b]; }     // n_b
    const num_semigroup& branch_gamma(int b) const { return gamma_[b]; }

    // membership of a shadow vector (series per branch, truncated) in the
    // F-span of R
    bool ring_contains(const std::vector<fseries>& v) const;

    // echelonized F-basis of R in the shadow window, columns ordered by
    // (exponent, branch); basis for the L-function ideal enumerations
    const row_space& ring_span() const { return span_; }

  private:
    const finite_field* F_;
    curve_spec spec_;
    int prec_ = 0;
    int delta_ = 0;
    std::vector<int> cond_;
    std::vector<int> branch_delta_;
    std::vector<num_semigroup> gamma_;
    row_space span_;  // shadow span, columns ordered by (exponent, branch)

    row_vec pack(const std::vector<fseries>& v) const;
    void build(int precision);
};

// planar conductor formula n_b = 2 delta_b + sum_{j != b} I_bj
int conductor_formula(const curve_model& m, int b);

// intersection number of two parametrized branches as ord_z of the
// w-resultant of (x2(w) - x1(z), y2(w) - y1(z)); independent of the span
// route
int intersection_resultant(const finite_field& F, const std::vector<int>& x1,
                           const std::vector<int>& y1, const std::vector<int>& x2,
                           const std::vector<int>& y2);

// ambient window for module enumeration ---------------------------------------
//
// One line per color of each branch.  Window slots (k, line) with
// k < window[line] = n_branch are the enumeration columns, sorted by merged
// key (k, line); each line also carries ext[line] = min generator order
// trailing columns used for rank computations.  Every standard module
// contains all pure tails z^k e_line with k >= window[line].
struct ambient_model {
    const curve_model* model = nullptr;
    int tau = 0;                           // number of lines
    std::vector<int> line_branch;          // line -> branch
    std::vector<int> window;               // per line
    std::vector<int> ext;                  // per line
    int nslots = 0;                        // total window columns
    int width = 0;                         // window + ext columns
    std::vector<std::pair<int, int>> slot; // column -> (k, line), merged order
    // action of generator g on the window basis vector of column s, as a
    // dense row of the full width (window columns then ext columns)
    std::vector<std::vector<row_vec>> act;

    // column index of (k, line); -1 when beyond window + ext
    int col_of(int line, int k) const;
};

ambient_model build_ambient(const curve_model& m);

}  // namespace curvelink
