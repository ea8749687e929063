#include <random>

#include "doctest.h"
#include "gkm/canonical.hpp"

using namespace gkm;

namespace {

Polynomial P(const std::string& s, int n) { return Polynomial::parse(s, n); }

Subset bits(std::initializer_list<int> xs) {
    Subset s = 0;
    for (int x : xs) s |= Subset{1} << (x - 1);
    return s;
}

// T >= S in the Bruhat order: the i-th smallest element of T is at least that of S
bool bruhat_ge(Subset T, Subset S) {
    auto t = elements(T), s = elements(S);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (t[i] < s[i]) return false;
    return true;
}

void check_basis(const SpaceId& s) {
    const auto& b = canonical_basis(s);
    auto verts = fixed_points(s);
    CHECK(b.plain_count == b.order.size());
    CHECK(static_cast<long long>(b.size()) == total_betti(s));
    for (const auto& e : b.elements) {
        INFO(s.str() << " " << e.label);
        CHECK(verify_class(e.cls).ok);
        REQUIRE(e.cls.degree().has_value());
        CHECK(*e.cls.degree() == e.degree);
        if (!e.triangular) continue;
        for (std::size_t v = 0; v < verts.size(); ++v) {
            bool zero = e.cls.f[v].is_zero() && (e.cls.g.empty() || e.cls.g[v].is_zero());
            if (!bruhat_ge(verts[v].subset, e.subset)) CHECK(zero);
        }
        if (e.part == 0) {
            for (std::size_t v = 0; v < verts.size(); ++v)
                if (verts[v].subset == e.subset) CHECK(e.cls.f[v] == e.diag.expand(s.n));
        }
    }
}

}  // namespace

TEST_CASE("morse values and order") {
    SpaceId c = SpaceId::parse("C(2,4)");
    CHECK(morse_value(c, bits({1, 2})) == 0);
    CHECK(morse_value(c, bits({3, 4})) == 8);
    CHECK(morse_value(SpaceId(Family::RealEvenEven, 2, 4), bits({3, 4})) == 16);
    auto o = morse_order(c);
    std::vector<Subset> expect{bits({1, 2}), bits({1, 3}), bits({2, 3}), bits({1, 4}), bits({2, 4}), bits({3, 4})};
    CHECK(o == expect);
}

TEST_CASE("projective plane") {
    SpaceId s = SpaceId::parse("C(1,3)");
    const auto& b = canonical_basis(s);
    REQUIRE(b.size() == 3);
    CHECK(b.elements[0].label == "tau{1}");
    CHECK(b.elements[0].cls == EquivCohClass::unit(s));
    const auto& t2 = b.elements[1].cls;
    CHECK(t2.f[0].is_zero());
    CHECK(t2.f[1] == P("a2-a1", 3));
    CHECK(t2.f[2] == P("a3-a1", 3));
    const auto& t3 = b.elements[2].cls;
    CHECK(t3.f[2] == P("a3-a1", 3) * P("a3-a2", 3));
    CHECK(find_element(b, "{2}") == 1);
    CHECK(find_element(b, "tau{3}") == 2);
    CHECK_THROWS(find_element(b, "tau{4}"));
}

TEST_CASE("structure of canonical bases") {
    for (Family f : all_families())
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) check_basis(SpaceId(f, k, n));
}

TEST_CASE("both solvers agree") {
    for (const char* name : {"C(2,4)", "C(2,5)", "C(3,6)", "R(2,4)", "R(2,5)", "R(3,5)"}) {
        SpaceId s = SpaceId::parse(name);
        auto o = morse_order(s);
        CHECK(solve_canonical_classes(s, o, SolveMethod::Congruences) ==
              solve_canonical_classes(s, o, SolveMethod::LinearSystem));
    }
}

TEST_CASE("real plain classes are squares of complex ones") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto& cb = canonical_basis(SpaceId(Family::Complex, k, n));
            const auto& rb = canonical_basis(SpaceId(Family::RealEvenEven, k, n));
            for (std::size_t i = 0; i < cb.plain_count; ++i)
                CHECK(rb.elements[i].cls == sq_transport(cb.elements[i].cls, rb.space));
        }
}

TEST_CASE("expansion round trip") {
    std::mt19937_64 rng(7);
    for (Family f : all_families())
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                SpaceId s(f, k, n);
                const auto& b = canonical_basis(s);
                auto c = random_class(b, rng, 2);
                auto e = expand_in_canonical(c, b);
                CHECK(e.size() == b.size());
                CHECK(combine(b, e) == c);
                for (std::size_t i = 0; i < b.size(); ++i) {
                    auto u = expand_in_canonical(b.elements[i].cls, b);
                    for (std::size_t j = 0; j < u.size(); ++j)
                        CHECK(u[j] == Polynomial::constant(n, i == j ? 1 : 0));
                }
            }
}

TEST_CASE("expansion rejects classes outside the span") {
    SpaceId s = SpaceId::parse("C(1,2)");
    EquivCohClass c(s);
    c.f[1] = Polynomial::constant(2, 1);
    CHECK_THROWS(expand_in_canonical(c, canonical_basis(s)));
}

TEST_CASE("Littlewood-Richardson coefficients") {
    SpaceId s = SpaceId::parse("C(2,4)");
    const auto& b = canonical_basis(s);
    auto i13 = find_element(b, "{1,3}");
    auto c = lr_coefficients(b, i13, i13);
    // classical part: sigma_1^2 = sigma_2 + sigma_11
    CHECK(c[find_element(b, "{2,3}")] == Polynomial::constant(4, 1));
    CHECK(c[find_element(b, "{1,4}")] == Polynomial::constant(4, 1));
    // equivariant part: the value of the class at its own vertex
    CHECK(c[i13] == P("a3-a2", 4));
    CHECK(c[find_element(b, "{1,2}")].is_zero());
    CHECK(c[find_element(b, "{3,4}")].is_zero());
    CHECK(lr_coefficients(b, i13, find_element(b, "{1,4}")) == lr_coefficients(b, find_element(b, "{1,4}"), i13));
    // unit
    auto u = lr_coefficients(b, 0, i13);
    for (std::size_t j = 0; j < u.size(); ++j) CHECK(u[j] == Polynomial::constant(4, j == i13 ? 1 : 0));
}

TEST_CASE("LR coefficients are graded") {
    for (const char* name : {"C(2,5)", "R(2,4)", "OR(2,4)", "R(3,6)"}) {
        SpaceId s = SpaceId::parse(name);
        const auto& b = canonical_basis(s);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i; j < b.size(); ++j) {
                auto c = lr_coefficients(b, i, j);
                for (std::size_t l = 0; l < c.size(); ++l) {
                    if (c[l].is_zero()) continue;
                    CHECK(c[l].is_homogeneous());
                    CHECK(2 * c[l].degree() + b.elements[l].degree == b.elements[i].degree + b.elements[j].degree);
                }
            }
    }
}

TEST_CASE("characteristic matrices") {
    auto m = char_canonical_matrices(SpaceId::parse("C(1,2)"));
    REQUIRE(m.K.size() == 2);
    CHECK(m.K[1][0] == P("a1", 2));
    CHECK(m.Kbar[1][0] == P("-a1", 2));
    for (Family f : all_families())
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                auto mm = char_canonical_matrices(SpaceId(f, k, n));
                CHECK(mm.K.size() == mm.rows.size());
                CHECK(is_identity(multiply(mm.K, mm.Kbar)));
            }
}

TEST_CASE("random classes verify, perturbations do not") {
    std::mt19937_64 rng(1729);
    for (const char* name : {"C(2,4)", "R(2,5)", "OR(2,4)", "OR(3,6)", "R(3,6)", "OR(2,5)"}) {
        const auto& b = canonical_basis(SpaceId::parse(name));
        for (int t = 0; t < 20; ++t) {
            auto c = random_class(b, rng);
            CHECK(verify_class(c).ok);
            std::size_t v = 0;
            auto p = perturb_vertex(c, rng, &v);
            CHECK(v < c.size());
            CHECK_FALSE(verify_class(p).ok);
        }
    }
}
