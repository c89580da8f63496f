#include "parastacks/equations.hpp"

namespace parastacks::equations {

namespace {

const IntPoly kBMinus1("b", {Int(-1), Int(1)});
const IntPoly kOneMinusA("a", {Int(1), Int(-1)});

PolySeries poly_one(const std::string& mainvar, int order, const std::string& coeffvar) {
    return PolySeries::one(mainvar, order, IntPoly(coeffvar));
}

IntSeries int_one(const std::string& mainvar, int order) {
    return IntSeries::one(mainvar, order, Int(0));
}

// lifts integer series coefficients into constant polynomials so they can be
// fed to the bivariate composition
PolySeries as_constant_polys(const IntSeries& s, const std::string& coeffvar) {
    PolySeries out(s.mainvar(), s.order(), IntPoly(coeffvar));
    for (int n = 0; n <= s.order(); ++n)
        out.set_coeff(n, IntPoly::constant(coeffvar, s.coeff(n)));
    return out;
}

}  // namespace

PolySeries a_of_connected(const PolySeries& c) {
    PolySeries one = poly_one(c.mainvar(), c.order(), c.coeff(0).var().empty() ? "b" : c.coeff(0).var());
    return one + (one + c.scaled(IntPoly::constant("b", Int(2)))).scaled(kBMinus1);
}

PolySeries u_of_connected(const PolySeries& c) {
    PolySeries one = poly_one(c.mainvar(), c.order(), "b");
    PolySeries w = one + c.scaled(IntPoly::constant("b", Int(2)));
    return (w * w).inverse().shifted(1);
}

PolySeries b_of_quarter(const PolySeries& q) {
    PolySeries one = poly_one(q.mainvar(), q.order(), "a");
    return one - q.inverse().scaled(kOneMinusA);
}

PolySeries v_of_quarter(const PolySeries& q) { return (q * q).shifted(1); }

ConnectedSolution solve_connected(const PolySeries& quarter, int order) {
    if (order < 1) throw std::invalid_argument("solve_connected: order must be >= 1");
    if (quarter.order() < order)
        throw std::invalid_argument("solve_connected: quarter series order insufficient");

    PolySeries c("v", order, IntPoly("b"));
    for (int m = 1; m <= order; ++m) {
        // With C known below order m, the v^m coefficient of Q(A,U) does not
        // involve the order-m coefficient (it enters only beyond v^m), so
        // half of it is exactly that coefficient.
        PolySeries ct = c.truncated(m);
        PolySeries comp =
            compose_bivariate(quarter.truncated(m), a_of_connected(ct), u_of_connected(ct));
        IntPoly cm = ring_half(comp.coeff(m));  // throws when not integral
        if (cm.degree() > m - 1)
            throw std::logic_error("solve_connected: coefficient exceeds its b-degree bound");
        c.set_coeff(m, std::move(cm));
    }
    if (!residual_quarter_connected(quarter.truncated(order), c, order))
        throw std::logic_error("solve_connected: defining-equation residual is nonzero");
    return ConnectedSolution{std::move(c), "composed-through-quarter-series", order};
}

CountSolution solve_sortable_via_connected(const ConnectedSolution& connected, int order) {
    if (connected.series.order() < order)
        throw std::invalid_argument("solve_sortable_via_connected: connected order insufficient");
    IntSeries s = int_one("t", order);
    for (int n = 1; n <= order; ++n) {
        // coefficient extraction: the t^n coefficient of 1 + C(1-1/S, tS^2)
        // only involves s_1..s_{n-1}
        IntSeries st = s.truncated(n);
        IntSeries b_arg = int_one("t", n) - st.inverse();
        IntSeries v_arg = (st * st).shifted(1);
        IntSeries comp = compose_bivariate(connected.series.truncated(n), b_arg, v_arg);
        s.set_coeff(n, comp.coeff(n));
    }
    CountSolution out{std::move(s), "via-connected-series", -1};
    if (residual_sortable(out.series, connected.series.truncated(order), order))
        out.residual_order = order;
    else
        throw std::logic_error("solve_sortable_via_connected: residual is nonzero");
    return out;
}

CountSolution solve_primitive_via_quarter(const PolySeries& quarter, int order) {
    if (quarter.order() < order)
        throw std::invalid_argument("solve_primitive_via_quarter: quarter order insufficient");
    IntSeries p("t", order, Int(0));
    for (int n = 1; n <= order; ++n) {
        IntSeries pt = p.truncated(n);
        IntSeries one = int_one("t", n);
        IntSeries inv1p = (one + pt).inverse();
        IntSeries lhs = compose_bivariate(quarter.truncated(n), -pt, (inv1p * inv1p).shifted(1));
        IntSeries rhs0 = (one + pt) * (one - pt).inverse();
        // the only order-n dependence of the relation on the unknown
        // coefficient sits in the right side, with slope 2
        Int diff = lhs.coeff(n) - rhs0.coeff(n);
        p.set_coeff(n, ring_half(diff));
    }
    CountSolution out{std::move(p), "implicit-through-quarter-series", -1};
    if (residual_primitive(quarter.truncated(order), out.series, order))
        out.residual_order = order;
    else
        throw std::logic_error("solve_primitive_via_quarter: residual is nonzero");
    return out;
}

IntSeries sortable_from_primitive(const IntSeries& primitive) {
    return (int_one(primitive.mainvar(), primitive.order()) - primitive).inverse();
}

CountSolution solve_standard(const ConnectedSolution& connected, int order) {
    if (connected.series.order() < order)
        throw std::invalid_argument("solve_standard: connected order insufficient");
    // specialize b = 1
    IntSeries c1("v", connected.series.order(), Int(0));
    for (int m = 0; m <= connected.series.order(); ++m)
        c1.set_coeff(m, connected.series.coeff(m).eval(Int(1)));

    IntSeries r = int_one("t", order);
    for (int n = 1; n <= order; ++n) {
        IntSeries rt = r.truncated(n);
        IntSeries v_arg = (rt * rt).shifted(1);
        IntSeries comp = compose_bivariate(as_constant_polys(c1.truncated(n), "b"),
                                           IntSeries("t", n, Int(0)), v_arg);
        r.set_coeff(n, comp.coeff(n));
    }
    CountSolution out{std::move(r), "standard-via-connected", -1};
    if (residual_standard(out.series, connected.series.truncated(order), order))
        out.residual_order = order;
    else
        throw std::logic_error("solve_standard: residual is nonzero");
    return out;
}

bool residual_quarter_connected(const PolySeries& quarter, const PolySeries& connected,
                                int order) {
    PolySeries q = quarter.truncated(order);
    PolySeries comp = compose_bivariate(connected.truncated(order), b_of_quarter(q),
                                        v_of_quarter(q));
    PolySeries rhs = poly_one("u", order, "a") + comp.scaled(IntPoly::constant("a", Int(2)));
    return q == rhs;
}

bool residual_sortable(const IntSeries& sortable, const PolySeries& connected, int order) {
    IntSeries s = sortable.truncated(order);
    IntSeries b_arg = int_one("t", order) - s.inverse();
    IntSeries v_arg = (s * s).shifted(1);
    IntSeries rhs = int_one("t", order) + compose_bivariate(connected.truncated(order), b_arg, v_arg);
    return s == rhs;
}

bool residual_primitive(const PolySeries& quarter, const IntSeries& primitive, int order) {
    IntSeries p = primitive.truncated(order);
    IntSeries one = int_one("t", order);
    IntSeries inv1p = (one + p).inverse();
    IntSeries lhs = compose_bivariate(quarter.truncated(order), -p, (inv1p * inv1p).shifted(1));
    IntSeries rhs = (one + p) * (one - p).inverse();
    return lhs == rhs;
}

bool residual_standard(const IntSeries& standard, const PolySeries& connected, int order) {
    IntSeries r = standard.truncated(order);
    IntSeries c1("v", order, Int(0));
    for (int m = 0; m <= order; ++m) c1.set_coeff(m, connected.coeff(m).eval(Int(1)));
    IntSeries v_arg = (r * r).shifted(1);
    IntSeries rhs = int_one("t", order) +
                    compose_bivariate(as_constant_polys(c1, "b"), IntSeries("t", order, Int(0)), v_arg);
    return r == rhs;
}

InversionReport inversion_checks(const PolySeries& quarter, const ConnectedSolution& connected,
                                 int order) {
    InversionReport rep;
    PolySeries q = quarter.truncated(order);
    PolySeries c = connected.series.truncated(order);

    PolySeries b_series = b_of_quarter(q);   // in u over Z[a]
    PolySeries v_series = v_of_quarter(q);
    PolySeries a_series = a_of_connected(c);  // in v over Z[b]
    PolySeries u_series = u_of_connected(c);

    const IntPoly two_b = IntPoly::constant("b", Int(2));
    const IntPoly two_a = IntPoly::constant("a", Int(2));

    // A(B,V) = a and U(B,V) = u
    PolySeries c_at_bv = compose_bivariate(c, b_series, v_series);
    PolySeries one_u = poly_one("u", order, "a");
    PolySeries a_of = one_u + ((one_u + c_at_bv.scaled(two_a)) * (b_series - one_u));
    PolySeries expect_a("u", order, IntPoly("a"));
    expect_a.set_coeff(0, IntPoly::identity("a", Int(1)));
    rep.a_of_bv = a_of == expect_a;

    PolySeries w = one_u + c_at_bv.scaled(two_a);
    PolySeries u_of = v_series * (w * w).inverse();
    PolySeries expect_u("u", order, IntPoly("a"));
    if (order >= 1) expect_u.set_coeff(1, IntPoly::constant("a", Int(1)));
    rep.u_of_bv = u_of == expect_u;

    // B(A,U) = b and V(A,U) = v
    PolySeries q_at_au = compose_bivariate(q, a_series, u_series);
    PolySeries one_v = poly_one("v", order, "b");
    PolySeries b_of = one_v - ((one_v - a_series) * q_at_au.inverse());
    PolySeries expect_b("v", order, IntPoly("b"));
    expect_b.set_coeff(0, IntPoly::identity("b", Int(1)));
    rep.b_of_au = b_of == expect_b;

    PolySeries v_of = u_series * q_at_au * q_at_au;
    PolySeries expect_v("v", order, IntPoly("b"));
    if (order >= 1) expect_v.set_coeff(1, IntPoly::constant("b", Int(1)));
    rep.v_of_au = v_of == expect_v;

    rep.b_at_origin = b_series.coeff(0) == IntPoly::identity("a", Int(1));
    return rep;
}

InequalityReport connected_inequality_check(const ConnectedSolution& connected, int order) {
    if (connected.series.order() < order)
        throw std::invalid_argument("connected_inequality_check: order insufficient");
    PolySeries c = connected.series.truncated(order);
    PolySeries expr = c;
    PolySeries v_mono("v", order, IntPoly("b"));
    if (order >= 1) v_mono.set_coeff(1, IntPoly::constant("b", Int(1)));
    PolySeries bv2("v", order, IntPoly("b"));
    if (order >= 2) bv2.set_coeff(2, IntPoly::identity("b", Int(1)));
    expr -= v_mono;
    expr -= bv2;
    expr -= (c * (c - v_mono)).scaled(IntPoly::constant("b", Int(2)));

    InequalityReport rep;
    rep.nonnegative = true;
    rep.min_coefficient = 0;
    rep.order_checked = order;
    for (int m = 0; m <= order; ++m) {
        const IntPoly& p = expr.coeff(m);
        for (int k = 0; k <= p.degree(); ++k) {
            Int v = p.coeff(k);
            if (v < rep.min_coefficient) rep.min_coefficient = v;
            if (sgn(v) < 0 && rep.nonnegative) {
                rep.nonnegative = false;
                rep.first_bad_order = m;
            }
        }
    }
    return rep;
}

}  // namespace parastacks::equations
