#include "parastacks/exactnum.hpp"

namespace parastacks {

Rat rat_from_string(const std::string& text) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (num.empty() || den.empty())
        throw std::invalid_argument("malformed rational '" + text + "'");
    Int n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (sgn(d) == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return Int(0);
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int catalan(unsigned long n) { return binomial(2 * n, n) / Int(n + 1); }

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) c.emplace_back(p.coeff(k));
    return RatPoly(p.var(), std::move(c));
}

IntPoly to_integral(const RatPoly& p) {
    std::vector<Int> c;
    c.reserve(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        Rat v = p.coeff(k);
        if (v.get_den() != 1)
            throw std::domain_error("non-integer coefficient where a counting value was expected");
        c.push_back(v.get_num());
    }
    return IntPoly(p.var(), std::move(c));
}

RatSeries to_rational(const IntSeries& s) {
    RatSeries r(s.mainvar(), s.order(), Rat(0));
    for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, Rat(s.coeff(n)));
    return r;
}

IntSeries to_integral(const RatSeries& s) {
    IntSeries r(s.mainvar(), s.order(), Int(0));
    for (int n = 0; n <= s.order(); ++n) {
        Rat v = s.coeff(n);
        if (v.get_den() != 1)
            throw std::domain_error("non-integer series coefficient where a counting value was expected");
        r.set_coeff(n, v.get_num());
    }
    return r;
}

Series<RatPoly> to_rational(const Series<IntPoly>& s) {
    Series<RatPoly> r(s.mainvar(), s.order(), RatPoly(s.coeff(0).var()));
    for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, to_rational(s.coeff(n)));
    return r;
}

Series<IntPoly> to_integral(const Series<RatPoly>& s) {
    Series<IntPoly> r(s.mainvar(), s.order(), IntPoly(s.coeff(0).var()));
    for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, to_integral(s.coeff(n)));
    return r;
}

BiSeries<RatPoly> to_rational(const BiSeries<IntPoly>& s) {
    BiSeries<RatPoly> r(s.var1(), s.var2(), s.order1(), s.order2(),
                        RatPoly(s.at(0, 0).var()));
    for (int i = 0; i <= s.order1(); ++i)
        for (int j = 0; j <= s.order2(); ++j) r.at(i, j) = to_rational(s.at(i, j));
    return r;
}

}  // namespace parastacks
