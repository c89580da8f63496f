// Order-by-order solvers for the functional-equation system linking
// quarter-plane loops, connected standard arch systems, and sortable
// permutations:
//
//   Q(a,u) = 1 + 2 C(1 - (1-a)/Q, u Q^2)          (quarter <-> connected)
//   S(t)   = 1 + C(1 - 1/S, t S^2)                (sortable via connected)
//   Q(-P, t/(1+P)^2) = (1+P)/(1-P), S = 1/(1-P)   (P = primitive sortable)
//   R(t)   = 1 + C(1, t R^2)                      (standard sequences)
//
// plus the compositional inversion identities tying the change-of-variable
// pairs (A,U) and (B,V) together, and the coefficient inequality
// C - v - b v^2 - 2C(C - v) >= 0.
#pragma once

#include "parastacks/exactnum.hpp"

#include <string>

namespace parastacks::equations {

// A solved series together with the route that produced it and the order
// through which its defining equation has been re-verified.
struct ConnectedSolution {
    PolySeries series;  // C(b, v): integer polynomials in b
    std::string route;
    int residual_order = -1;
};

struct CountSolution {
    IntSeries series;
    std::string route;
    int residual_order = -1;
};

// Change-of-variable series (all with integer polynomial coefficients):
PolySeries a_of_connected(const PolySeries& c);  // A(b,v) = 1 + (1+2C)(b-1)
PolySeries u_of_connected(const PolySeries& c);  // U(b,v) = v/(1+2C)^2
PolySeries b_of_quarter(const PolySeries& q);    // B(a,u) = 1 - (1-a)/Q
PolySeries v_of_quarter(const PolySeries& q);    // V(a,u) = u Q^2

// C(b,v) to the given order, extracted from Q(A,U) = 1 + 2C: the order-m
// target coefficient of the composition does not involve the unknown
// order-m coefficient of C, so the recursion is explicit. Coefficients are
// asserted integral with b-degree < order.
ConnectedSolution solve_connected(const PolySeries& quarter, int order);

// S(t) from the connected series (explicit order-by-order extraction).
CountSolution solve_sortable_via_connected(const ConnectedSolution& connected, int order);

// The primitive count series P(t) with S = 1/(1-P), solved from the quarter
// series; the order-n relation is affine in the unknown coefficient with
// linear part 2.
CountSolution solve_primitive_via_quarter(const PolySeries& quarter, int order);

IntSeries sortable_from_primitive(const IntSeries& primitive);  // 1/(1-P)

// Standard operation sequences: R = 1 + C(1, t R^2).
CountSolution solve_standard(const ConnectedSolution& connected, int order);

// Residual checks (full re-evaluation of each defining equation).
bool residual_quarter_connected(const PolySeries& quarter, const PolySeries& connected,
                                int order);
bool residual_sortable(const IntSeries& sortable, const PolySeries& connected, int order);
bool residual_primitive(const PolySeries& quarter, const IntSeries& primitive, int order);
bool residual_standard(const IntSeries& standard, const PolySeries& connected, int order);

struct InversionReport {
    bool a_of_bv = false;   // A(B,V) = a
    bool u_of_bv = false;   // U(B,V) = u
    bool b_of_au = false;   // B(A,U) = b
    bool v_of_au = false;   // V(A,U) = v
    bool b_at_origin = false;  // B(a,0) = a
    bool all() const { return a_of_bv && u_of_bv && b_of_au && v_of_au && b_at_origin; }
};
InversionReport inversion_checks(const PolySeries& quarter, const ConnectedSolution& connected,
                                 int order);

struct InequalityReport {
    bool nonnegative = false;
    Int min_coefficient;
    int first_bad_order = -1;
    int order_checked = 0;
};
// C - v - b v^2 - 2C(C - v), coefficientwise.
InequalityReport connected_inequality_check(const ConnectedSolution& connected, int order);

}  // namespace parastacks::equations
