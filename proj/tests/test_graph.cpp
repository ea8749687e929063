#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"
#include "gkm/graph.hpp"

using namespace gkm;

namespace {

// subset pairs differing in one element, counted directly
long long johnson_pairs(int n, int k) {
    auto v = subsets_colex(n, k);
    long long c = 0;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (__builtin_popcountll(v[a] ^ v[b]) == 2) ++c;
    return c;
}

std::size_t count_kind(const GkmGraph& g, EdgeKind k) {
    return std::count_if(g.edges.begin(), g.edges.end(), [&](const GkmEdge& e) { return e.kind == k; });
}

std::set<std::tuple<int, int, LinearForm>> edge_set(const GkmGraph& g) {
    std::set<std::tuple<int, int, LinearForm>> s;
    for (const auto& e : g.edges) s.insert({std::min(e.a, e.b < 0 ? e.a : e.b), e.b < 0 ? -1 : std::max(e.a, e.b), e.weight});
    return s;
}

}  // namespace

TEST_CASE("edge counts") {
    auto c24 = build_graph(SpaceId(Family::Complex, 2, 4));
    CHECK(c24.vertices.size() == 6);
    CHECK(c24.edges.size() == 12);
    CHECK(static_cast<long long>(c24.edges.size()) == johnson_pairs(4, 2));

    auto r49 = build_graph(SpaceId::parse("R(4,9)"));
    CHECK(r49.vertices.size() == 6);
    CHECK(count_kind(r49, EdgeKind::Sphere) == 24);
    CHECK(count_kind(r49, EdgeKind::RP2) == 12);
    // per-vertex weight count 2k(n-k)+k, two-ended ones shared by two vertices
    CHECK(count_kind(r49, EdgeKind::Sphere) == 6 * (2 * 2 * 2) / 2);

    auto or48 = build_graph(SpaceId::parse("OR(4,8)"));
    CHECK(or48.vertices.size() == 12);
    CHECK(or48.edges.size() == 48);
    CHECK(count_kind(or48, EdgeKind::Sphere) == 48);

    auto r36 = build_graph(SpaceId::parse("R(3,6)"));
    CHECK(count_kind(r36, EdgeKind::SphereTimesCircle) == 2);
    CHECK(count_kind(r36, EdgeKind::RP3) == 4);
    CHECK(r36.square_count() == 6);
    auto or36 = build_graph(SpaceId::parse("OR(3,6)"));
    CHECK(count_kind(or36, EdgeKind::S3) == 4);
}

TEST_CASE("Johnson regularity of the complex graph") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            auto g = build_graph(SpaceId(Family::Complex, k, n));
            for (std::size_t v = 0; v < g.vertices.size(); ++v)
                CHECK(static_cast<int>(g.incident_weights(static_cast<int>(v)).size()) == k * (n - k));
        }
}

TEST_CASE("GKM condition and completeness on all families") {
    for (Family f : all_families())
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                auto g = build_graph(SpaceId(f, k, n));
                CHECK(check_gkm_condition(g).ok);
                CHECK(check_completeness(g).ok);
            }
}

TEST_CASE("GKM condition failures") {
    GkmGraph g;
    g.space = SpaceId(Family::Complex, 1, 2);
    CHECK(check_gkm_condition(g).ok);  // no vertices, vacuous
    g.vertices = fixed_points(g.space);
    g.edges.push_back({0, 1, LinearForm({1, 0}), EdgeKind::Sphere});
    g.edges.push_back({0, 1, LinearForm({2, 0}), EdgeKind::Sphere});
    auto r = check_gkm_condition(g);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.problems.empty());
    GkmGraph h = g;
    h.edges = {{0, -1, LinearForm({1, 0}), EdgeKind::Sphere}};
    CHECK_FALSE(check_gkm_condition(h).ok);
}

TEST_CASE("dot export") {
    auto dot = export_dot(build_graph(SpaceId(Family::Complex, 1, 2)));
    CHECK(dot ==
          "graph \"C(1,2)\" {\n"
          "  node [shape=circle];\n"
          "  v0 [label=\"{1}\"];\n"
          "  v1 [label=\"{2}\"];\n"
          "  v0 -- v1 [style=solid, label=\"a2-a1\"];\n"
          "}\n");
    auto rp2 = build_graph(SpaceId::parse("R(1,3)"));
    CHECK(rp2.vertices.size() == 1);
    REQUIRE(rp2.edges.size() == 1);
    CHECK(rp2.edges[0].kind == EdgeKind::RP2);
    auto d2 = export_dot(rp2);
    CHECK(d2.find("style=dashed") != std::string::npos);
    CHECK(d2 == export_dot(build_graph(SpaceId::parse("R(1,3)"))));
    CHECK(export_dot(build_graph(SpaceId::parse("OR(4,8)"))) == export_dot(build_graph(SpaceId::parse("OR(4,8)"))));
}

TEST_CASE("json export") {
    auto j = graph_json(build_graph(SpaceId::parse("R(3,6)")));
    CHECK(j.find("\"schema\": \"gkm.graph/1\"") != std::string::npos);
    CHECK(j.find("\"to\": null") != std::string::npos);
}

TEST_CASE("collapsing oriented graphs gives the real graphs") {
    for (Family f : {Family::OrientedEvenEven, Family::OrientedEvenOdd, Family::OrientedOddOdd})
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                SpaceId s(f, k, n);
                auto c = collapse_cover(build_graph(s));
                auto r = build_graph(*real_base(s));
                CHECK(edge_set(c) == edge_set(r));
                CHECK(c.edges.size() == r.edges.size());
                CHECK(count_kind(c, EdgeKind::RP2) == count_kind(r, EdgeKind::RP2));
            }
    CHECK_THROWS_AS(collapse_cover(build_graph(SpaceId::parse("C(1,2)"))), std::invalid_argument);
}
