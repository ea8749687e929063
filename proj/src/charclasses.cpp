#include "gkm/charclasses.hpp"

#include <algorithm>
#include <stdexcept>

#include "gkm/canonical.hpp"

namespace gkm {

namespace {

int vertex_sign(const FixedVertex& v) { return v.decoration == Decoration::Minus ? -1 : 1; }

std::vector<Polynomial> alphas(const SpaceId& s, const std::vector<int>& idx, bool squared) {
    std::vector<Polynomial> out;
    for (int i : idx) {
        Polynomial a = Polynomial::variable(s.n, i - 1);
        out.push_back(squared ? a * a : a);
    }
    return out;
}

Polynomial prod_alpha(const SpaceId& s, const std::vector<int>& idx) {
    Polynomial p = Polynomial::constant(s.n, 1);
    for (int i : idx) p *= Polynomial::variable(s.n, i - 1);
    return p;
}

Polynomial total_or_piece(const std::vector<Polynomial>& e, int index, int nvars) {
    if (index < 0) {
        Polynomial t(nvars);
        for (const auto& x : e) t += x;
        return t;
    }
    return index < static_cast<int>(e.size()) ? e[index] : Polynomial(nvars);
}

// graded piece of an inhomogeneous total class; degree counted in the alphas
Polynomial piece(const Polynomial& total, int index, int alpha_degree) {
    return index < 0 ? total : total.homogeneous_part(alpha_degree);
}

// the complex tangent weights a_j - a_i, i in S, j not in S, with their signs
std::vector<Polynomial> complex_tangent(const SpaceId& s, Subset S) {
    std::vector<Polynomial> w;
    for (int i : elements(S))
        for (int j : complement_elements(S, s.n))
            w.push_back(Polynomial::variable(s.n, j - 1) - Polynomial::variable(s.n, i - 1));
    return w;
}

// product over the isotropy weights of a real or oriented family, sign-free
std::vector<Polynomial> real_tangent_squares(const SpaceId& s, const FixedVertex& v) {
    std::vector<Polynomial> out;
    for (const auto& w : isotropy_weights(s, v)) {
        Polynomial p = w.poly();
        out.push_back(p * p);
    }
    return out;
}

EquivCohClass from_values(const SpaceId& s, const std::vector<Polynomial>& vals) {
    EquivCohClass c(s);
    c.f = vals;
    return c;
}

}  // namespace

EquivCohClass characteristic_class(const SpaceId& s, const CharClassSpec& spec) {
    if (spec.index < -1) throw std::invalid_argument("class index must be non-negative or -1 for the total class");
    auto pts = fixed_points(s);
    std::vector<Polynomial> vals;
    vals.reserve(pts.size());
    Polynomial one = Polynomial::constant(s.n, 1);

    switch (spec.kind) {
        case ClassKind::Chern:
        case ClassKind::Pontryagin: {
            bool chern = spec.kind == ClassKind::Chern;
            if (chern && !s.complex()) throw std::invalid_argument("Chern classes are only defined here for complex Grassmannians");
            if (!chern && s.complex()) throw std::invalid_argument("use Chern classes on complex Grassmannians");
            for (const auto& v : pts) {
                if (spec.bundle == Bundle::Tangent) {
                    Polynomial total = one;
                    if (chern) {
                        for (const auto& w : complex_tangent(s, v.subset)) total *= one + w;
                        vals.push_back(piece(total, spec.index, spec.index));
                    } else {
                        for (const auto& w2 : real_tangent_squares(s, v)) total *= one + w2;
                        vals.push_back(piece(total, spec.index, 2 * spec.index));
                    }
                    continue;
                }
                auto idx = spec.bundle == Bundle::Canonical ? elements(v.subset) : complement_elements(v.subset, s.n);
                auto e = elementary_symmetric(alphas(s, idx, !chern), s.n);
                vals.push_back(total_or_piece(e, spec.index, s.n));
            }
            return from_values(s, vals);
        }
        case ClassKind::Euler: {
            if (spec.index > 0 && spec.index != 1) throw std::invalid_argument("the Euler class has no graded pieces");
            if (spec.bundle == Bundle::Tangent) {
                bool ok = s.complex() || s.family == Family::RealEvenEven || s.signed_points();
                if (!ok) throw std::invalid_argument("no tangent Euler class is provided on " + s.str());
                for (const auto& v : pts) {
                    Polynomial p = one;
                    if (s.complex()) {
                        for (const auto& w : complex_tangent(s, v.subset)) p *= w;
                    } else {
                        for (int i : elements(v.subset))
                            for (int j : complement_elements(v.subset, s.n)) {
                                Polynomial aj = Polynomial::variable(s.n, j - 1), ai = Polynomial::variable(s.n, i - 1);
                                p *= aj * aj - ai * ai;
                            }
                        if (s.family == Family::OrientedEvenOdd) p *= Rational(vertex_sign(v)) * prod_alpha(s, elements(v.subset));
                        if (s.family == Family::OrientedOddOdd)
                            p *= Rational(vertex_sign(v)) * prod_alpha(s, complement_elements(v.subset, s.n));
                    }
                    vals.push_back(p);
                }
                return from_values(s, vals);
            }
            bool bar = spec.bundle == Bundle::Complementary;
            if (bar ? !s.has_euler_bar() : !s.has_euler())
                throw std::invalid_argument(std::string("the ") + (bar ? "complementary" : "canonical") +
                                            " bundle over " + s.str() + " has no Euler class");
            for (const auto& v : pts) {
                auto idx = bar ? complement_elements(v.subset, s.n) : elements(v.subset);
                vals.push_back(Rational(vertex_sign(v)) * prod_alpha(s, idx));
            }
            return from_values(s, vals);
        }
        case ClassKind::RClass: {
            if (!s.circles()) throw std::invalid_argument("the odd generator exists only on " + std::string("G_2k+1(R^2n+2) and its cover"));
            if (spec.index > 0 && spec.index != 1) throw std::invalid_argument("the odd generator has no graded pieces");
            EquivCohClass c(s);
            std::vector<int> all;
            for (int i = 1; i <= s.n; ++i) all.push_back(i);
            for (auto& g : c.g) g = prod_alpha(s, all);
            return c;
        }
    }
    throw std::logic_error("unhandled class kind");
}

EquivCohClass chern_class(const SpaceId& s, int l, bool bar) {
    return characteristic_class(s, {bar ? Bundle::Complementary : Bundle::Canonical, ClassKind::Chern, l});
}
EquivCohClass pontryagin_class(const SpaceId& s, int l, bool bar) {
    return characteristic_class(s, {bar ? Bundle::Complementary : Bundle::Canonical, ClassKind::Pontryagin, l});
}
EquivCohClass euler_class(const SpaceId& s, bool bar) {
    return characteristic_class(s, {bar ? Bundle::Complementary : Bundle::Canonical, ClassKind::Euler, -1});
}
EquivCohClass r_class(const SpaceId& s) { return characteristic_class(s, {Bundle::Canonical, ClassKind::RClass, -1}); }

const char* decor_name(Decor d) {
    switch (d) {
        case Decor::None: return "";
        case Decor::E: return "e";
        case Decor::EBar: return "ebar";
        case Decor::R: return "r";
        case Decor::RTilde: return "rt";
    }
    return "?";
}

Decor parse_decor(const std::string& s) {
    if (s.empty() || s == "none") return Decor::None;
    if (s == "e") return Decor::E;
    if (s == "ebar") return Decor::EBar;
    if (s == "r") return Decor::R;
    if (s == "rt") return Decor::RTilde;
    throw std::invalid_argument("unknown decoration '" + s + "' (none, e, ebar, r, rt)");
}

int CharMonomial::weighted_degree() const {
    int d = 0;
    for (std::size_t l = 0; l < exps.size(); ++l) d += int(l + 1) * exps[l];
    return d;
}

int CharMonomial::degree(const SpaceId& s) const {
    int d = (s.complex() ? 2 : 4) * weighted_degree();
    switch (decor) {
        case Decor::None: break;
        case Decor::E: d += 2 * s.k; break;
        case Decor::EBar: d += 2 * (s.n - s.k); break;
        case Decor::R:
        case Decor::RTilde: d += 2 * s.n + 1; break;
    }
    return d;
}

std::string CharMonomial::str(const SpaceId& s) const {
    std::string base = s.complex() ? "c" : "p";
    if (bar) base += "bar";
    std::string out;
    for (std::size_t l = 0; l < exps.size(); ++l) {
        if (!exps[l]) continue;
        if (!out.empty()) out += "*";
        out += base + std::to_string(l + 1);
        if (exps[l] > 1) out += "^" + std::to_string(exps[l]);
    }
    if (decor != Decor::None) return out.empty() ? decor_name(decor) : std::string(decor_name(decor)) + "*" + out;
    return out.empty() ? "1" : out;
}

std::vector<std::vector<int>> bounded_exponents(int parts, int bound) {
    std::vector<std::vector<int>> out;
    if (parts < 0 || bound < 0) return out;
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, bound);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (std::size_t l = 0; l < a.size(); ++l) da += int(l + 1) * a[l];
        for (std::size_t l = 0; l < b.size(); ++l) db += int(l + 1) * b[l];
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    return out;
}

std::vector<CharMonomial> characteristic_monomial_basis(const SpaceId& s) {
    std::vector<CharMonomial> out;
    auto plain = bounded_exponents(s.k, s.n - s.k);
    for (const auto& e : plain) out.push_back({Decor::None, false, e});
    auto decorate = [&](Decor d) {
        for (const auto& e : plain) out.push_back({d, false, e});
    };
    switch (s.family) {
        case Family::RealOddEven: decorate(Decor::R); break;
        case Family::OrientedOddEven: decorate(Decor::RTilde); break;
        case Family::OrientedEvenOdd: decorate(Decor::E); break;
        case Family::OrientedOddOdd: decorate(Decor::EBar); break;
        case Family::OrientedEvenEven:
            for (const auto& e : bounded_exponents(s.n - s.k - 1, s.k)) out.push_back({Decor::E, true, e});
            for (const auto& e : bounded_exponents(s.k - 1, s.n - s.k)) out.push_back({Decor::EBar, false, e});
            break;
        default: break;
    }
    return out;
}

EquivCohClass monomial_class(const SpaceId& s, const CharMonomial& m) {
    for (int e : m.exps)
        if (e < 0) throw std::invalid_argument("negative exponent in characteristic monomial");
    auto pts = fixed_points(s);
    EquivCohClass c(s);
    for (std::size_t v = 0; v < pts.size(); ++v) {
        auto idx = m.bar ? complement_elements(pts[v].subset, s.n) : elements(pts[v].subset);
        auto e = elementary_symmetric(alphas(s, idx, !s.complex()), s.n);
        Polynomial p = Polynomial::constant(s.n, 1);
        for (std::size_t l = 0; l < m.exps.size(); ++l) {
            if (!m.exps[l]) continue;
            if (l + 1 >= e.size()) {
                p = Polynomial(s.n);
                break;
            }
            p *= pow(e[l + 1], m.exps[l]);
        }
        c.f[v] = p;
    }
    switch (m.decor) {
        case Decor::None: return c;
        case Decor::E: return euler_class(s, false) * c;
        case Decor::EBar: return euler_class(s, true) * c;
        case Decor::R:
            if (s.family != Family::RealOddEven) throw std::invalid_argument("r lives on G_2k+1(R^2n+2)");
            return r_class(s) * c;
        case Decor::RTilde:
            if (s.family != Family::OrientedOddEven) throw std::invalid_argument("rt lives on the oriented G_2k+1(R^2n+2)");
            return r_class(s) * c;
    }
    return c;
}

RelationReport verify_relations(const SpaceId& s) {
    RelationReport rep;
    rep.space = s;
    const CanonicalBasis& basis = canonical_basis(s);
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        rep.ok = rep.ok && ok;
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    auto ordinary = [&](const EquivCohClass& c) { return ordinary_coefficients(expand_in_canonical(c, basis)); };
    auto unit = EquivCohClass::unit(s);
    Polynomial one = Polynomial::constant(s.n, 1);
    std::vector<Rational> ord_unit = ordinary(unit);
    std::vector<Rational> ord_zero(ord_unit.size(), Rational(0));

    auto valid = [&](const std::string& name, const EquivCohClass& c) {
        auto r = verify_class(c);
        add(name + " is a valid class", r.ok, r.ok ? "" : r.violations.front().what);
    };
    // lhs == scalar * 1 equivariantly, and lhs == scalar(0) * 1 after reduction
    auto scalar_relation = [&](const std::string& name, const EquivCohClass& lhs, const Polynomial& rhs) {
        add(name, lhs == EquivCohClass::scalar(s, rhs));
        std::vector<Rational> want = ord_unit;
        for (auto& x : want) x *= rhs.constant_term();
        add(name + " at a=0", ordinary(lhs) == want);
    };
    auto class_relation = [&](const std::string& name, const EquivCohClass& lhs, const EquivCohClass& rhs) {
        add(name, lhs == rhs);
        add(name + " at a=0", ordinary(lhs) == ordinary(rhs));
    };

    if (s.complex()) {
        auto c = chern_class(s, -1), cb = chern_class(s, -1, true);
        valid("c", c);
        valid("cbar", cb);
        Polynomial rhs = one;
        for (int i = 0; i < s.n; ++i) rhs *= one + Polynomial::variable(s.n, i);
        scalar_relation("c*cbar = prod(1+a_i)", c * cb, rhs);
        return rep;
    }

    auto p = pontryagin_class(s, -1), pb = pontryagin_class(s, -1, true);
    valid("p", p);
    valid("pbar", pb);
    Polynomial rhs = one;
    for (int i = 0; i < s.n; ++i) {
        Polynomial a = Polynomial::variable(s.n, i);
        rhs *= one + a * a;
    }
    scalar_relation("p*pbar = prod(1+a_i^2)", p * pb, rhs);

    if (s.has_euler()) {
        auto e = euler_class(s);
        valid("e", e);
        class_relation("e^2 = p_k", e * e, pontryagin_class(s, s.k));
    }
    if (s.has_euler_bar()) {
        auto eb = euler_class(s, true);
        valid("ebar", eb);
        class_relation("ebar^2 = pbar_(n-k)", eb * eb, pontryagin_class(s, s.n - s.k, true));
    }
    if (s.family == Family::OrientedEvenEven) {
        auto ee = euler_class(s) * euler_class(s, true);
        std::vector<int> all;
        Polynomial prod = one;
        for (int i = 0; i < s.n; ++i) prod *= Polynomial::variable(s.n, i);
        add("e*ebar = prod(a_i)", ee == EquivCohClass::scalar(s, prod));
        add("e*ebar = 0 at a=0", ordinary(ee) == ord_zero);
        add("e*ebar is nonzero before reduction", !ee.is_zero());
    }
    if (s.circles()) {
        auto r = r_class(s);
        std::string name = s.oriented() ? "rt" : "r";
        valid(name, r);
        add(name + "^2 = 0", (r * r).is_zero());
        add(name + "^2 = 0 at a=0", ordinary(r * r) == ord_zero);
    }
    return rep;
}

}  // namespace gkm
