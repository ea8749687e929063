#include "doctest.h"
#include "gkm/charclasses.hpp"

using namespace gkm;

namespace {

Polynomial P(const std::string& s, int n) { return Polynomial::parse(s, n); }

// e_l of {a_i^power : i in list}, expanded directly from subsets
Polynomial elem_sym(const std::vector<int>& idx, int l, int power, int n) {
    Polynomial out(n);
    int m = static_cast<int>(idx.size());
    if (l > m) return out;
    for (Subset T : subsets_colex(m, l)) {
        Polynomial t = Polynomial::constant(n, 1);
        for (int j : elements(T)) t *= Polynomial::term(n, Monomial::var(idx[j - 1] - 1, power), 1);
        out += t;
    }
    return out;
}

}  // namespace

TEST_CASE("decorations") {
    CHECK(std::string(decor_name(Decor::None)).empty());
    CHECK(std::string(decor_name(Decor::EBar)) == "ebar");
    CHECK(std::string(decor_name(Decor::RTilde)) == "rt");
    for (Decor d : {Decor::E, Decor::EBar, Decor::R, Decor::RTilde}) CHECK(parse_decor(decor_name(d)) == d);
    CHECK(parse_decor("none") == Decor::None);
    CHECK_THROWS(parse_decor("x"));
}

TEST_CASE("monomial names and degrees") {
    SpaceId c = SpaceId::parse("C(2,4)");
    CharMonomial m{Decor::None, false, {2, 1}};
    CHECK(m.str(c) == "c1^2*c2");
    CHECK(m.weighted_degree() == 4);
    CHECK(m.degree(c) == 8);
    SpaceId o = SpaceId::parse("OR(2,5)");
    CHECK(CharMonomial{Decor::E, false, {1}}.str(o) == "e*p1");
    CHECK(CharMonomial{Decor::E, false, {1}}.degree(o) == 6);
    CHECK(CharMonomial{Decor::None, true, {1}}.str(o) == "pbar1");
    CHECK(CharMonomial{Decor::None, false, {0}}.str(o) == "1");
    CHECK(CharMonomial{Decor::E, false, {0}}.str(o) == "e");
    SpaceId r = SpaceId::parse("R(3,6)");
    CHECK(CharMonomial{Decor::R, false, {1}}.degree(r) == 9);
}

TEST_CASE("bounded exponents") {
    auto v = bounded_exponents(2, 2);
    std::vector<std::vector<int>> expect{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}};
    CHECK(v == expect);
    CHECK(bounded_exponents(3, 0).size() == 1);
}

TEST_CASE("monomial bases have the right size") {
    for (Family f : all_families())
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                SpaceId s(f, k, n);
                auto b = characteristic_monomial_basis(s);
                CHECK(static_cast<long long>(b.size()) == total_betti(s));
                for (std::size_t i = 1; i < b.size(); ++i)
                    if (b[i].decor == b[i - 1].decor) CHECK(b[i - 1].degree(s) <= b[i].degree(s));
            }
}

TEST_CASE("localized Chern and Pontryagin classes") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            SpaceId c(Family::Complex, k, n), r(Family::RealEvenEven, k, n);
            auto vc = fixed_points(c);
            for (int l = 0; l <= n; ++l) {
                auto cl = chern_class(c, l), cb = chern_class(c, l, true);
                auto pl = pontryagin_class(r, l), pb = pontryagin_class(r, l, true);
                for (std::size_t v = 0; v < vc.size(); ++v) {
                    auto in = elements(vc[v].subset), out = complement_elements(vc[v].subset, n);
                    CHECK(cl.f[v] == elem_sym(in, l, 1, n));
                    CHECK(cb.f[v] == elem_sym(out, l, 1, n));
                    CHECK(pl.f[v] == elem_sym(in, l, 2, n));
                    CHECK(pb.f[v] == elem_sym(out, l, 2, n));
                }
            }
        }
}

TEST_CASE("Euler classes on the oriented even family") {
    SpaceId s = SpaceId::parse("OR(2,4)");
    auto e = euler_class(s), eb = euler_class(s, true);
    auto v = fixed_points(s);
    REQUIRE(v.size() == 4);
    // opposite signs on S+ and S-
    CHECK(e.f[0] == -e.f[1]);
    CHECK(eb.f[0] == -eb.f[1]);
    CHECK((e * e).f[0] == pontryagin_class(s, 1).f[0]);
    CHECK((e * eb) == EquivCohClass::scalar(s, P("a1*a2", 2)));
    CHECK(verify_class(e).ok);
    CHECK(verify_class(eb).ok);
    CHECK(euler_class(s).degree() == 2);
    CHECK_THROWS(euler_class(SpaceId::parse("OR(3,6)")));
    CHECK_THROWS(r_class(SpaceId::parse("C(2,4)")));
}

TEST_CASE("r classes square to zero") {
    for (const char* name : {"R(3,6)", "OR(3,6)", "R(3,8)", "OR(1,4)"}) {
        SpaceId s = SpaceId::parse(name);
        auto r = r_class(s);
        CHECK(verify_class(r).ok);
        CHECK(r.degree() == 2 * s.n + 1);
        CHECK((r * r).is_zero());
    }
}

TEST_CASE("tangent classes") {
    SpaceId c = SpaceId::parse("C(1,2)");
    auto t = characteristic_class(c, {Bundle::Tangent, ClassKind::Chern, 1});
    CHECK(t.f[0] == P("a2-a1", 2));
    CHECK(t.f[1] == P("a1-a2", 2));
    auto et = characteristic_class(c, {Bundle::Tangent, ClassKind::Euler, -1});
    CHECK(et == t);
    for (Family f : all_families())
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                SpaceId s(f, k, n);
                ClassKind kind = s.complex() ? ClassKind::Chern : ClassKind::Pontryagin;
                auto tot = characteristic_class(s, {Bundle::Tangent, kind, -1});
                CHECK(verify_class(tot).ok);
            }
}

TEST_CASE("ring relations") {
    for (Family f : all_families())
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                auto r = verify_relations(SpaceId(f, k, n));
                for (const auto& c : r.checks) {
                    INFO(r.space.str() << ": " << c.name << " " << c.detail);
                    CHECK(c.ok);
                }
                CHECK(r.ok);
            }
    auto r = verify_relations(SpaceId::parse("OR(2,4)"));
    bool saw = false;
    for (const auto& c : r.checks) saw |= c.name == "e*ebar = 0 at a=0";
    CHECK(saw);
}
