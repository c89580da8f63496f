// Exact arithmetic kernel: arbitrary-precision integers and rationals
// (backed by GMP), dense univariate polynomials over a coefficient ring,
// and truncated power series with such coefficients.
//
// Rings nest: Polynomial<Int> is a polynomial in one symbol, and
// Polynomial<Polynomial<Int>> serves as a bivariate polynomial (outer
// symbol of the outer ring, inner symbol of the coefficients). Series
// work over any of these coefficient rings.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parastacks {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q" (decimal-free rationals).
Rat rat_from_string(const std::string& text);

Int binomial(unsigned long n, unsigned long k);
Int catalan(unsigned long n);

// ---------------------------------------------------------------------------
// Scalar ring helpers. Polynomials and series are generic over these.

inline bool ring_is_zero(const Int& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool ring_is_one(const Int& x) { return x == 1; }
inline bool ring_is_one(const Rat& x) { return x == 1; }

inline Int ring_zero_like(const Int&) { return Int(0); }
inline Rat ring_zero_like(const Rat&) { return Rat(0); }
inline Int ring_one_like(const Int&) { return Int(1); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }

// Multiplicative inverse of a ring unit. Over the integers only +-1 qualify.
inline Int ring_unit_inverse(const Int& x) {
    if (x == 1 || x == -1) return x;
    throw std::domain_error("integer constant term is not a unit (+-1)");
}
inline Rat ring_unit_inverse(const Rat& x) {
    if (sgn(x) == 0) throw std::domain_error("rational constant term is zero");
    return 1 / x;
}

// Exact division by two; throws on an odd integer.
inline Int ring_half(const Int& x) {
    if (mpz_odd_p(x.get_mpz_t()))
        throw std::domain_error("exact halving of an odd integer");
    return x / 2;
}
inline Rat ring_half(const Rat& x) { return x / 2; }

inline Int ring_scale(const Int& x, const Int& k) { return x * k; }
inline Rat ring_scale(const Rat& x, const Int& k) { return x * Rat(k); }

// ---------------------------------------------------------------------------
// Dense univariate polynomial over a coefficient ring K.
//
// Invariant: no trailing zero coefficient (the zero polynomial has an empty
// coefficient vector and degree -1). The symbol name travels with the value;
// binary operations require matching symbols, except that constants unify
// with anything.

template <typename K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::string var) : var_(std::move(var)) {}
    Polynomial(std::string var, std::vector<K> coeffs)
        : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(std::string var, K value) {
        Polynomial p(std::move(var));
        if (!ring_is_zero(value)) p.c_.push_back(std::move(value));
        return p;
    }
    // The monomial x^1.
    static Polynomial identity(std::string var, const K& one) {
        Polynomial p(std::move(var));
        p.c_.resize(2, ring_zero_like(one));
        p.c_[1] = one;
        return p;
    }

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    K coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return K();
        return c_[k];
    }
    const std::vector<K>& coeffs() const { return c_; }

    void set_coeff(int k, K value) {
        if (k < 0) throw std::invalid_argument("polynomial: negative degree");
        if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, K());
        c_[k] = std::move(value);
        trim();
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        unify_var(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        unify_var(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a);
        r.unify_var(b);
        if (a.c_.empty() || b.c_.empty()) { r.c_.clear(); return r; }
        std::vector<K> out(a.c_.size() + b.c_.size() - 1, K());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        r.c_ = std::move(out);
        r.trim();
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Horner evaluation at a ring element.
    K eval(const K& x) const {
        if (c_.empty()) return ring_zero_like(x);
        K acc = c_.back();
        for (int k = static_cast<int>(c_.size()) - 2; k >= 0; --k)
            acc = acc * x + c_[k];
        return acc;
    }

private:
    void unify_var(const Polynomial& o) {
        if (var_ == o.var_) return;
        if (var_.empty() || is_constant()) { var_ = o.var_.empty() ? var_ : o.var_; return; }
        if (o.var_.empty() || o.is_constant()) return;
        throw std::invalid_argument("polynomial symbol mismatch: '" + var_ +
                                    "' vs '" + o.var_ + "'");
    }
    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }

    std::string var_;
    std::vector<K> c_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;
// Bivariate: outer symbol (e.g. "s") with coefficients in an inner symbol.
using IntPoly2 = Polynomial<IntPoly>;

template <typename K>
bool ring_is_zero(const Polynomial<K>& p) { return p.is_zero(); }
template <typename K>
bool ring_is_one(const Polynomial<K>& p) {
    return p.degree() == 0 && ring_is_one(p.coeff(0));
}
template <typename K>
Polynomial<K> ring_zero_like(const Polynomial<K>& p) { return Polynomial<K>(p.var()); }
template <typename K>
Polynomial<K> ring_one_like(const Polynomial<K>& p) {
    return Polynomial<K>::constant(p.var(), p.is_zero() ? ring_one_like(K()) : ring_one_like(p.coeff(0)));
}
template <typename K>
Polynomial<K> ring_unit_inverse(const Polynomial<K>& p) {
    if (p.degree() != 0)
        throw std::domain_error("polynomial constant term is not a unit");
    return Polynomial<K>::constant(p.var(), ring_unit_inverse(p.coeff(0)));
}
template <typename K>
Polynomial<K> ring_half(const Polynomial<K>& p) {
    std::vector<K> c;
    c.reserve(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) c.push_back(ring_half(p.coeff(k)));
    return Polynomial<K>(p.var(), std::move(c));
}
template <typename K>
Polynomial<K> ring_scale(const Polynomial<K>& p, const Int& k) {
    std::vector<K> c;
    c.reserve(p.degree() + 1);
    for (int d = 0; d <= p.degree(); ++d) c.push_back(ring_scale(p.coeff(d), k));
    return Polynomial<K>(p.var(), std::move(c));
}

// Coefficients of p rewritten in the basis (x + shift)^k, exactly.
// Applying shift and then -shift is the identity.
template <typename K>
Polynomial<K> rebase_shifted(const Polynomial<K>& p, const Int& shift) {
    // p(x) = sum_k d_k (x+shift)^k  <=>  d = coefficients of p(y - shift).
    if (p.is_zero()) return p;
    Polynomial<K> acc(p.var());
    Polynomial<K> lin(p.var());  // y - shift
    lin.set_coeff(1, ring_one_like(p.coeff(p.degree())));
    lin.set_coeff(0, ring_scale(ring_one_like(p.coeff(p.degree())), -shift));
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * lin;
        acc.set_coeff(0, acc.coeff(0) + p.coeff(k));
    }
    return acc;
}

// Converts an integer polynomial to the rational coefficient ring.
RatPoly to_rational(const IntPoly& p);
// Converts back; throws if any coefficient is not an integer.
IntPoly to_integral(const RatPoly& p);

// ---------------------------------------------------------------------------
// Truncated power series: terms of degree 0..order in the main variable are
// retained. The truncation order is part of the value; binary operations
// refuse mixed orders rather than silently re-truncating.

template <typename K>
class Series {
public:
    Series(std::string var, int order, const K& sample)
        : var_(std::move(var)), order_(check_order(order)),
          c_(static_cast<size_t>(order_) + 1, ring_zero_like(sample)) {}

    static Series zero(std::string var, int order, const K& sample) {
        return Series(std::move(var), order, sample);
    }
    static Series one(std::string var, int order, const K& sample) {
        Series s(std::move(var), order, sample);
        s.c_[0] = ring_one_like(sample);
        return s;
    }
    // The monomial x^k (k <= order).
    static Series monomial(std::string var, int order, int k, const K& coeff) {
        Series s(std::move(var), order, coeff);
        if (k < 0 || k > order)
            throw std::invalid_argument("series monomial exponent out of range");
        s.c_[k] = coeff;
        return s;
    }

    const std::string& mainvar() const { return var_; }
    int order() const { return order_; }

    const K& coeff(int n) const {
        range_check(n);
        return c_[n];
    }
    void set_coeff(int n, K value) {
        range_check(n);
        c_[n] = std::move(value);
    }

    // Lowest n with a nonzero coefficient; order()+1 when all retained
    // coefficients vanish.
    int valuation() const {
        for (int n = 0; n <= order_; ++n)
            if (!ring_is_zero(c_[n])) return n;
        return order_ + 1;
    }

    Series truncated(int new_order) const {
        if (new_order > order_)
            throw std::invalid_argument("series: cannot extend truncation order");
        Series r(var_, new_order, c_[0]);
        for (int n = 0; n <= new_order; ++n) r.c_[n] = c_[n];
        return r;
    }

    Series operator-() const {
        Series r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Series& operator+=(const Series& o) {
        match(o);
        for (int n = 0; n <= order_; ++n) c_[n] += o.c_[n];
        return *this;
    }
    Series& operator-=(const Series& o) {
        match(o);
        for (int n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b) {
        a.match(b);
        Series r(a.var_, a.order_, a.c_[0]);
        for (int i = 0; i <= a.order_; ++i) {
            if (ring_is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (ring_is_zero(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const K& k) const {
        Series r(*this);
        for (auto& v : r.c_) v = v * k;
        return r;
    }
    // Multiplication by the monomial x^k, truncating.
    Series shifted(int k) const {
        Series r(var_, order_, c_[0]);
        for (int n = 0; n + k <= order_; ++n)
            if (n + k >= 0) r.c_[n + k] = c_[n];
        return r;
    }

    bool operator==(const Series& o) const {
        if (var_ != o.var_ || order_ != o.order_) return false;
        for (int n = 0; n <= order_; ++n)
            if (!(c_[n] == o.c_[n])) return false;
        return true;
    }
    bool operator!=(const Series& o) const { return !(*this == o); }

    // g with f*g = 1 up to the truncation order. The constant term must be
    // an invertible ring element.
    Series inverse() const {
        Series g(var_, order_, c_[0]);
        K c0inv = ring_unit_inverse(c_[0]);
        g.c_[0] = c0inv;
        for (int n = 1; n <= order_; ++n) {
            K acc = ring_zero_like(c_[0]);
            for (int k = 1; k <= n; ++k) {
                if (ring_is_zero(c_[k])) continue;
                acc += c_[k] * g.c_[n - k];
            }
            g.c_[n] = -(c0inv * acc);
        }
        return g;
    }

    // g with g^2 = f up to the truncation order and g(0) = 1. Requires a
    // coefficient ring with exact halving (rationals in practice).
    Series sqrt() const {
        if (!ring_is_one(c_[0]))
            throw std::domain_error("series sqrt: constant term must be 1");
        Series g(var_, order_, c_[0]);
        g.c_[0] = ring_one_like(c_[0]);
        for (int n = 1; n <= order_; ++n) {
            // 2 g_0 g_n = f_n - sum_{k=1}^{n-1} g_k g_{n-k}
            K acc = c_[n];
            for (int k = 1; k < n; ++k) acc -= g.c_[k] * g.c_[n - k];
            g.c_[n] = ring_half(acc);
        }
        return g;
    }

    Series pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Series r = one(var_, order_, c_[0]);
        Series base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        return order;
    }
    void range_check(int n) const {
        if (n < 0 || n > order_)
            throw std::out_of_range("series coefficient index beyond truncation order");
    }
    void match(const Series& o) const {
        if (var_ != o.var_)
            throw std::invalid_argument("series variable mismatch: '" + var_ +
                                        "' vs '" + o.var_ + "'");
        if (order_ != o.order_)
            throw std::invalid_argument("series truncation order mismatch");
    }

    std::string var_;
    int order_;
    std::vector<K> c_;
};

using IntSeries = Series<Int>;
using RatSeries = Series<Rat>;
using PolySeries = Series<IntPoly>;       // e.g. Q(a,u), C(b,v)
using Poly2Series = Series<IntPoly2>;     // e.g. Q(a,s,u)
using RatPolySeries = Series<RatPoly>;

// Substitutes the polynomial's variable by a series; coefficients are
// integers acting by scaling.
template <typename K>
Series<K> compose(const Polynomial<Int>& p, const Series<K>& x) {
    Series<K> r = Series<K>::zero(x.mainvar(), x.order(), x.coeff(0));
    if (p.is_zero()) return r;
    for (int k = p.degree(); k >= 0; --k) {
        r = r * x;
        if (sgn(p.coeff(k)) != 0) {
            K c0 = r.coeff(0);
            r.set_coeff(0, c0 + ring_scale(ring_one_like(x.coeff(0)), p.coeff(k)));
        }
    }
    return r;
}

// F is a series in one variable whose coefficients are integer polynomials
// in a second symbol; substitutes that symbol by `inner` and the main
// variable by `outer`. `outer` must have positive valuation so the
// truncated composition is exact.
template <typename K>
Series<K> compose_bivariate(const Series<Polynomial<Int>>& F,
                            const Series<K>& inner, const Series<K>& outer) {
    if (inner.mainvar() != outer.mainvar() || inner.order() != outer.order())
        throw std::invalid_argument("composition: argument series mismatch");
    if (!ring_is_zero(outer.coeff(0)))
        throw std::invalid_argument("composition: outer series needs valuation >= 1");
    const int N = inner.order();
    Series<K> r = Series<K>::zero(inner.mainvar(), N, inner.coeff(0));
    Series<K> opow = Series<K>::one(inner.mainvar(), N, inner.coeff(0));
    for (int n = 0; n <= F.order(); ++n) {
        if (n > 0) {
            opow *= outer;
            if (n > N) break;  // valuation(outer^n) > N: nothing more to add
        }
        if (ring_is_zero(F.coeff(n))) continue;
        r += compose(F.coeff(n), inner) * opow;
    }
    return r;
}

RatSeries to_rational(const IntSeries& s);
IntSeries to_integral(const RatSeries& s);
Series<RatPoly> to_rational(const Series<IntPoly>& s);
Series<IntPoly> to_integral(const Series<RatPoly>& s);

// ---------------------------------------------------------------------------
// Truncated bivariate power series: a rectangular table of coefficients
// indexed by the exponents of the two main variables.

template <typename K>
class BiSeries {
public:
    BiSeries(std::string var1, std::string var2, int n1, int n2, const K& sample)
        : v1_(std::move(var1)), v2_(std::move(var2)), n1_(n1), n2_(n2),
          c_(static_cast<size_t>(n1 + 1) * (n2 + 1), ring_zero_like(sample)) {
        if (n1 < 0 || n2 < 0) throw std::invalid_argument("biseries orders must be >= 0");
    }

    static BiSeries one(std::string var1, std::string var2, int n1, int n2,
                        const K& sample) {
        BiSeries s(std::move(var1), std::move(var2), n1, n2, sample);
        s.at(0, 0) = ring_one_like(sample);
        return s;
    }

    int order1() const { return n1_; }
    int order2() const { return n2_; }
    const std::string& var1() const { return v1_; }
    const std::string& var2() const { return v2_; }

    K& at(int i, int j) {
        range_check(i, j);
        return c_[static_cast<size_t>(i) * (n2_ + 1) + j];
    }
    const K& at(int i, int j) const {
        range_check(i, j);
        return c_[static_cast<size_t>(i) * (n2_ + 1) + j];
    }

    BiSeries operator-() const {
        BiSeries r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }
    BiSeries& operator+=(const BiSeries& o) {
        match(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    BiSeries& operator-=(const BiSeries& o) {
        match(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        a.match(b);
        BiSeries r(a.v1_, a.v2_, a.n1_, a.n2_, a.c_[0]);
        for (int i = 0; i <= a.n1_; ++i)
            for (int j = 0; j <= a.n2_; ++j) {
                const K& x = a.at(i, j);
                if (ring_is_zero(x)) continue;
                for (int k = 0; i + k <= a.n1_; ++k)
                    for (int l = 0; j + l <= a.n2_; ++l) {
                        const K& y = b.at(k, l);
                        if (ring_is_zero(y)) continue;
                        r.at(i + k, j + l) += x * y;
                    }
            }
        return r;
    }
    BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

    BiSeries scaled(const K& k) const {
        BiSeries r(*this);
        for (auto& v : r.c_) v = v * k;
        return r;
    }
    // Multiplication by var1^d1 var2^d2, truncating.
    BiSeries shifted(int d1, int d2) const {
        BiSeries r(v1_, v2_, n1_, n2_, c_[0]);
        for (int i = 0; i + d1 <= n1_; ++i)
            for (int j = 0; j + d2 <= n2_; ++j)
                r.at(i + d1, j + d2) = at(i, j);
        return r;
    }

    bool operator==(const BiSeries& o) const {
        if (v1_ != o.v1_ || v2_ != o.v2_ || n1_ != o.n1_ || n2_ != o.n2_) return false;
        for (size_t k = 0; k < c_.size(); ++k)
            if (!(c_[k] == o.c_[k])) return false;
        return true;
    }
    bool operator!=(const BiSeries& o) const { return !(*this == o); }

    BiSeries inverse() const {
        BiSeries g(v1_, v2_, n1_, n2_, c_[0]);
        K c0inv = ring_unit_inverse(at(0, 0));
        g.at(0, 0) = c0inv;
        // Graded sweep: g_{ij} depends on strictly smaller bidegrees.
        for (int d = 1; d <= n1_ + n2_; ++d)
            for (int i = std::max(0, d - n2_); i <= std::min(d, n1_); ++i) {
                int j = d - i;
                K acc = ring_zero_like(at(0, 0));
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        if (k == 0 && l == 0) continue;
                        const K& f = at(k, l);
                        if (ring_is_zero(f)) continue;
                        acc += f * g.at(i - k, j - l);
                    }
                g.at(i, j) = -(c0inv * acc);
            }
        return g;
    }

    BiSeries sqrt() const {
        if (!ring_is_one(at(0, 0)))
            throw std::domain_error("biseries sqrt: constant term must be 1");
        BiSeries g(v1_, v2_, n1_, n2_, c_[0]);
        g.at(0, 0) = ring_one_like(at(0, 0));
        for (int d = 1; d <= n1_ + n2_; ++d)
            for (int i = std::max(0, d - n2_); i <= std::min(d, n1_); ++i) {
                int j = d - i;
                K acc = at(i, j);
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        if ((k == 0 && l == 0) || (k == i && l == j)) continue;
                        const K& x = g.at(k, l);
                        if (ring_is_zero(x)) continue;
                        acc -= x * g.at(i - k, j - l);
                    }
                g.at(i, j) = ring_half(acc);
            }
        return g;
    }

private:
    void range_check(int i, int j) const {
        if (i < 0 || i > n1_ || j < 0 || j > n2_)
            throw std::out_of_range("biseries index beyond truncation orders");
    }
    void match(const BiSeries& o) const {
        if (v1_ != o.v1_ || v2_ != o.v2_)
            throw std::invalid_argument("biseries variable mismatch");
        if (n1_ != o.n1_ || n2_ != o.n2_)
            throw std::invalid_argument("biseries truncation order mismatch");
    }

    std::string v1_, v2_;
    int n1_, n2_;
    std::vector<K> c_;
};

BiSeries<RatPoly> to_rational(const BiSeries<IntPoly>& s);

}  // namespace parastacks
