#include "doctest.h"
#include "gkm/abbv.hpp"
#include "gkm/canonical.hpp"

using namespace gkm;

namespace {

Polynomial P(const std::string& s, int n) { return Polynomial::parse(s, n); }
Polynomial C(int n, long c) { return Polynomial::constant(n, c); }

}  // namespace

TEST_CASE("normal Euler classes") {
    SpaceId c = SpaceId::parse("C(1,2)");
    CHECK(normal_euler(c, 0) == P("a2-a1", 2));
    CHECK(normal_euler(c, 1) == P("a1-a2", 2));
    SpaceId r = SpaceId::parse("R(2,4)");
    CHECK(normal_euler(r, 0) == P("a2^2-a1^2", 2));
    SpaceId o = SpaceId::parse("OR(2,3)");
    REQUIRE(fixed_points(o).size() == 2);
    CHECK(normal_euler(o, 0) == -normal_euler(o, 1));
    CHECK(normal_euler(o, 0).degree() == 1);
    CHECK_THROWS(normal_euler(SpaceId::parse("R(2,5)"), 0));
    CHECK_THROWS(normal_euler(SpaceId::parse("R(3,5)"), 0));
    for (Family f : all_families()) {
        SpaceId s(f, 1, 3);
        if (!s.orientable()) continue;
        for (std::size_t v = 0; v < fixed_points(s).size(); ++v)
            CHECK(normal_euler_factored(s, v).degree() == (dimension(s) - (s.circles() ? 1 : 0)) / 2);
    }
}

TEST_CASE("degree classes") {
    SpaceId s = SpaceId::parse("C(1,2)");
    const auto& b = canonical_basis(s);
    auto below = integrate(b.elements[0].cls);
    CHECK(below.value.is_zero());
    CHECK(below.degree_class == DegreeClass::Below);
    auto top = integrate(b.elements[1].cls);
    CHECK(top.value == C(2, -1));
    CHECK(top.degree_class == DegreeClass::Top);
    auto above = integrate(b.elements[1].cls * b.elements[1].cls);
    CHECK(above.value == P("a1-a2", 2));
    CHECK(above.degree_class == DegreeClass::Above);
    CHECK(std::string(degree_class_name(DegreeClass::Top)) == "top_dim");
}

TEST_CASE("known characteristic numbers") {
    CHECK(integrate(chern_class(SpaceId::parse("C(1,2)"), 1)).value == C(2, -1));
    CHECK(integrate(pontryagin_class(SpaceId::parse("R(2,4)"), 1)).value == C(2, -1));
    CHECK(integrate(euler_class(SpaceId::parse("OR(2,3)"))).value == C(1, 2));
    CHECK(integrate(pontryagin_class(SpaceId::parse("OR(2,4)"), 1)).value == C(2, -2));
    // degree of the quadric Q_4
    CHECK(integrate(pow(pontryagin_class(SpaceId::parse("OR(2,6)"), 1), 2)).value == C(3, 2));
}

TEST_CASE("degrees of Grassmannians in the Pluecker embedding") {
    // number of standard tableaux of the k x (n-k) rectangle
    struct Row { int k, n; long deg; };
    for (Row r : {Row{1, 2, 1}, Row{1, 4, 1}, Row{2, 4, 2}, Row{2, 5, 5}, Row{3, 6, 42}, Row{2, 6, 14}}) {
        SpaceId s(Family::Complex, r.k, r.n);
        int d = r.k * (r.n - r.k);
        auto v = integrate(pow(chern_class(s, 1), d)).value;
        CHECK(v == C(r.n, d % 2 ? -r.deg : r.deg));
    }
}

TEST_CASE("Euler characteristics") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            long b = binomial(n, k);
            SpaceId c(Family::Complex, k, n);
            auto e = characteristic_class(c, {Bundle::Tangent, ClassKind::Euler, -1});
            CHECK(integrate(e).value == C(n, b));
            for (Family f : {Family::RealEvenEven, Family::OrientedEvenEven, Family::OrientedEvenOdd,
                             Family::OrientedOddOdd}) {
                SpaceId s(f, k, n);
                if (dimension(s) % 2) continue;
                auto t = characteristic_class(s, {Bundle::Tangent, ClassKind::Euler, -1});
                CHECK(integrate(t).value == C(n, static_cast<long>(fixed_points(s).size())));
            }
        }
}

TEST_CASE("symbolic and numeric integrals agree") {
    std::mt19937_64 rng(2);
    for (Family f : all_families())
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                SpaceId s(f, k, n);
                if (!s.orientable()) continue;
                auto c = random_class(canonical_basis(s), rng, 2);
                auto pt = standard_point(n);
                CHECK(evaluate(integrate(c).value, pt) == numeric_integral(c, pt));
                std::vector<Rational> other;
                for (int i = 0; i < n; ++i) other.emplace_back(3 * i * i + 2, 7);
                CHECK(evaluate(integrate(c).value, other) == numeric_integral(c, other));
            }
}

TEST_CASE("integral of a non-orientable family throws") {
    auto u = EquivCohClass::unit(SpaceId::parse("R(2,5)"));
    CHECK_THROWS(integrate(u));
}

TEST_CASE("characteristic numbers") {
    auto c = characteristic_number(SpaceId::parse("C(1,2)"), CharMonomial{Decor::None, false, {1}});
    CHECK(c.integral.value == C(2, -1));
    CHECK(c.ordinary == -1);
    CHECK(c.numeric_ok);
    auto r = characteristic_number(SpaceId::parse("R(3,6)"), CharMonomial{Decor::R, false, {1}});
    CHECK(r.numeric_ok);
    CHECK(r.integral.degree_class == DegreeClass::Top);
}

TEST_CASE("factor two report") {
    auto r = factor2_report(1, 3, {2});
    CHECK(r.ok);
    REQUIRE(r.values.size() == 6);
    CHECK(r.closed_sum == C(3, 2));
    for (const auto& v : r.values) CHECK(v == r.closed_sum);
    CHECK(factor2_report(1, 2, {0}).closed_sum.is_zero());
    CHECK(factor2_report(1, 2, {1}).closed_sum == C(2, -2));
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& I : bounded_exponents(k, k * (n - k) + 1)) {
                auto f = factor2_report(k, n, I);
                CHECK(f.ok);
            }
}
