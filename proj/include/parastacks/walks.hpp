// Exact series for corner-weighted square-lattice walks.
//
// The central object is the quarter-plane loop series: u marks the
// half-length, a marks the number of NW and ES factors (corners), and the
// refined variant additionally marks E steps with s. Closed binomial forms,
// constant-term extractions, the algebraic T/A route for unconfined loops,
// half-plane loops, fixed vertical projections, and exhaustive enumeration
// oracles back the dynamic programming up.
#pragma once

#include "parastacks/exactnum.hpp"
#include "parastacks/machine.hpp"

#include <vector>

namespace parastacks::walks {

// ---- quarter-plane loops -------------------------------------------------

// Coefficients q_n(a) for n = 0..order, by a step-by-step DP over
// (position, last step) with weight a on each W-after-N and S-after-E move.
PolySeries quarter_loop_series(int order);

// Same DP with E steps marked by s: coefficient of u^n is a polynomial in s
// whose coefficients are polynomials in a.
Poly2Series quarter_loop_series_refined(int order);

// Primitive loops (origin only at the ends): 1 - 1/Q.
PolySeries primitive_quarter_loop_series(int order);
Poly2Series primitive_quarter_loop_series_refined(int order);

// q_n(a) at a fixed rational a for n = 0..order (numeric regime; exact
// rational arithmetic throughout).
std::vector<Rat> quarter_loop_values(const Rat& a, int order);

// ---- exhaustive oracles ----------------------------------------------------

IntPoly brute_quarter_loops(int n, int brute_bound = 8);
IntPoly2 brute_quarter_loops_refined(int n, int brute_bound = 8);
IntPoly brute_primitive_quarter_loops(int n, int brute_bound = 8);

enum class Confinement { none, upper_half, quadrant };

// at(i, j) = corner polynomial of loops with i horizontal and j vertical
// steps (nonzero only for even i, j).
BiSeries<IntPoly> brute_loop_table(Confinement c, int max_horizontal, int max_vertical);

// ---- unconfined and half-plane loops ---------------------------------------

// [x^0] (1 + s(a-1)/x)^p (1 + s(a-1)x)^q / (1 - s(x + 1/x))^{p+q+1},
// returned as polynomials in a indexed by the power of s.
std::vector<IntPoly> horizontal_section_series(int p, int q, int s_order);
std::vector<IntPoly> w00j(int j, int s_order);

BiSeries<IntPoly> unconfined_series(int s_order, int t_order);
BiSeries<IntPoly> halfplane_series(int s_order, int t_order);

// T is the unique series with T(a,0,t) = 0 satisfying
//   T = s^2 (1 + 4T - t^2(a-1)^2 T) / (1 - t^2 - t^2(a+1)^2 T),
// solved by fixed-point iteration; A is assembled from its biquadratic
// closed form and satisfies A = sum_j t^{2j} W00j(a,s) to truncation order.
struct TA {
    BiSeries<RatPoly> t_series;
    BiSeries<RatPoly> a_series;
};
TA t_series_and_A(int s_order, int t_order);

// ---- closed forms for cross-checks ----------------------------------------

IntSeries closed_quarter_at_1(int order);                 // C_n C_{n+1}
Series<IntPoly> closed_quarter_refined_at_1(int order);   // binom(2n,2i) C_i C_{n-i} s^i
Series<IntPoly> closed_quarter_refined_at_minus1(int order);  // binom(n,i) C_i C_{n-i} s^i
BiSeries<Int> closed_unconfined_at_1(int s_order, int t_order);
BiSeries<Int> closed_unconfined_at_minus1(int s_order, int t_order);
BiSeries<Int> closed_halfplane_at_1(int s_order, int t_order);
BiSeries<Int> closed_halfplane_at_minus1(int s_order, int t_order);

// ---- constant-term identity -------------------------------------------------

// Both sides of the identity
//   [x^0] (4su - x - 1/x)(1 - su(x + 1/x)) /
//         ((1 - su(x+1/x))^2 - u^2 (1 - 2su/x)(1 - 2sux))
//   = (1/(us)) (1 - sqrt(1 - 4u^2 s^2/(1 - u^2))),
// computed independently: the left by Laurent-series extraction, the right
// by expanding the square root and dividing the remaining multiple of
// u^2 s^2 by us formally.
struct ConstantTermCheck {
    bool equal = false;
    Series<RatPoly> lhs;
    Series<RatPoly> rhs;
};
ConstantTermCheck constant_term_lemma_check(int order);

// ---- loops with a fixed vertical projection --------------------------------

enum class ProjectionConfinement { quadrant, half_x, none };

// result[k] = corner polynomial of loops whose vertical projection is v and
// with k E steps (total length |v| + 2k). The quadrant variant requires v to
// be a Dyck word on {N,S}; the others only require balance.
std::vector<IntPoly> fixed_projection_series(const std::vector<Step>& v,
                                             ProjectionConfinement c, int k_max);

// Closed form for the unconfined case; depends only on the numbers of N and
// S steps in the projection.
std::vector<IntPoly> fixed_projection_closed(int n_up, int n_down, int k_max);

// ---- residual check of the defining equation --------------------------------

// Recomputes the endpoint-refined walk series from the DP and substitutes it
// into the defining kernel equation, through the given step order.
bool kernel_equation_check(int step_order);

// ---- specialization helpers -------------------------------------------------

IntSeries eval_at(const PolySeries& f, const Int& a);
Series<IntPoly> eval_inner_at(const Poly2Series& f, const Int& a);

}  // namespace parastacks::walks
