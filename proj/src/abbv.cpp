#include "gkm/abbv.hpp"

#include <stdexcept>

#include "gkm/parallel.hpp"

namespace gkm {

namespace {

// prod over i in S, j not in S of (a_j - a_i), squared variables when `real`
void mul_pairs(FactoredPoly& d, const SpaceId& s, Subset S, bool real) {
    for (int i : elements(S))
        for (int j : complement_elements(S, s.n)) {
            d.mul(LinearForm::diff(s.n, j - 1, i - 1));
            if (real) d.mul(LinearForm::sum(s.n, j - 1, i - 1));
        }
}

void mul_units(FactoredPoly& d, const SpaceId& s, const std::vector<int>& idx) {
    for (int l : idx) d.mul(LinearForm::unit(s.n, l - 1));
}

}  // namespace

FactoredPoly normal_euler_factored(const SpaceId& s, std::size_t v) {
    if (!s.orientable()) throw std::invalid_argument(s.str() + " is not orientable, so it has no fundamental class");
    auto pts = fixed_points(s);
    if (v >= pts.size()) throw std::out_of_range("vertex index out of range");
    const FixedVertex& x = pts[v];
    FactoredPoly d;
    mul_pairs(d, s, x.subset, !s.complex());
    int sign = x.decoration == Decoration::Minus ? -1 : 1;
    switch (s.family) {
        case Family::OrientedEvenOdd:
            mul_units(d, s, elements(x.subset));
            d.unit *= sign;
            break;
        case Family::OrientedOddOdd:
            mul_units(d, s, complement_elements(x.subset, s.n));
            d.unit *= sign;
            break;
        case Family::RealOddEven:
        case Family::OrientedOddEven: {
            std::vector<int> all;
            for (int l = 1; l <= s.n; ++l) all.push_back(l);
            mul_units(d, s, all);
            break;
        }
        default: break;
    }
    return d;
}

Polynomial normal_euler(const SpaceId& s, std::size_t v) { return normal_euler_factored(s, v).expand(s.n); }

const char* degree_class_name(DegreeClass d) {
    switch (d) {
        case DegreeClass::Below: return "below_dim";
        case DegreeClass::Top: return "top_dim";
        case DegreeClass::Above: return "above_dim";
    }
    return "?";
}

IntegralResult integrate(const EquivCohClass& c) {
    const SpaceId& s = c.space;
    if (!s.orientable()) throw std::invalid_argument("cannot integrate over the non-orientable " + s.str());
    std::size_t m = c.f.size();
    std::vector<RationalFunction> terms(m, RationalFunction(Polynomial(s.n)));
    parallel_for(m, [&](std::size_t v) {
        const Polynomial& num = s.circles() ? c.g[v] : c.f[v];
        terms[v] = RationalFunction(num, normal_euler_factored(s, v));
    });
    RationalFunction sum = ratfn_sum(terms);
    if (!sum.is_polynomial())
        throw std::domain_error("localization sum over " + s.str() + " does not clear denominators; the class is not valid");
    IntegralResult r;
    r.value = sum.to_polynomial();
    int dim = dimension(s);
    if (auto deg = c.degree()) {
        r.degree_class = *deg < dim ? DegreeClass::Below : *deg == dim ? DegreeClass::Top : DegreeClass::Above;
        if (r.degree_class == DegreeClass::Below && !r.value.is_zero())
            throw std::logic_error("integral below the dimension is nonzero");
        if (r.degree_class == DegreeClass::Top && !r.value.is_constant())
            throw std::logic_error("integral in the top degree is not a constant");
    } else if (r.value.is_zero()) {
        r.degree_class = DegreeClass::Below;
    } else {
        r.degree_class = r.value.is_constant() ? DegreeClass::Top : DegreeClass::Above;
    }
    return r;
}

std::vector<Rational> standard_point(int n) {
    std::vector<Rational> p;
    for (int i = 1; i <= n; ++i) p.emplace_back(i);
    return p;
}

Rational numeric_integral(const EquivCohClass& c, const std::vector<Rational>& point) {
    const SpaceId& s = c.space;
    Rational total = 0;
    for (std::size_t v = 0; v < c.f.size(); ++v) {
        const Polynomial& num = s.circles() ? c.g[v] : c.f[v];
        Rational den = evaluate(normal_euler(s, v), point);
        if (den == 0) throw std::domain_error("evaluation point hits a zero of the normal Euler class");
        total += evaluate(num, point) / den;
    }
    return total;
}

CharNumber characteristic_number(const SpaceId& s, const CharMonomial& m) {
    CharNumber out;
    out.monomial = m;
    EquivCohClass c = monomial_class(s, m);
    out.integral = integrate(c);
    if (out.integral.degree_class == DegreeClass::Top) out.ordinary = out.integral.value.constant_term();
    auto pt = standard_point(s.n);
    out.numeric_ok = evaluate(out.integral.value, pt) == numeric_integral(c, pt);
    return out;
}

Factor2Report factor2_report(int k, int n, const std::vector<int>& index) {
    Factor2Report rep;
    rep.k = k;
    rep.n = n;
    rep.index = index;
    CharMonomial plain{Decor::None, false, index};
    struct Item {
        Family family;
        Decor decor;
        int factor;
        const char* name;
    };
    const Item items[] = {
        {Family::OrientedEvenEven, Decor::None, 1, "OR(2k,2n) p^I"},
        {Family::OrientedEvenOdd, Decor::E, 1, "OR(2k,2n+1) e*p^I"},
        {Family::OrientedOddOdd, Decor::EBar, 1, "OR(2k+1,2n+1) ebar*p^I"},
        {Family::RealEvenEven, Decor::None, 2, "2 R(2k,2n) p^I"},
        {Family::RealOddEven, Decor::R, 2, "2 R(2k+1,2n+2) r*p^I"},
        {Family::OrientedOddEven, Decor::RTilde, 2, "2 OR(2k+1,2n+2) rt*p^I"},
    };
    for (const auto& it : items) {
        SpaceId s(it.family, k, n);
        CharMonomial m = plain;
        m.decor = it.decor;
        rep.names.push_back(it.name);
        rep.values.push_back(integrate(monomial_class(s, m)).value * Rational(it.factor));
    }
    // 2 sum_S p^I|_S / prod (a_j^2 - a_i^2), straight from the subsets
    SpaceId base(Family::RealEvenEven, k, n);
    EquivCohClass pI = monomial_class(base, plain);
    auto subsets = subsets_colex(n, k);
    std::vector<RationalFunction> terms;
    for (std::size_t v = 0; v < subsets.size(); ++v) {
        FactoredPoly d;
        mul_pairs(d, base, subsets[v], true);
        terms.emplace_back(pI.f[v] * Rational(2), d);
    }
    rep.closed_sum = ratfn_to_poly(ratfn_sum(terms));
    rep.ok = true;
    for (const auto& v : rep.values) rep.ok = rep.ok && v == rep.closed_sum;
    return rep;
}

}  // namespace gkm
