#include "gkm/graph.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace gkm {

const char* edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Sphere: return "sphere";
        case EdgeKind::RP2: return "rp2";
        case EdgeKind::SphereTimesCircle: return "sphere_x_circle";
        case EdgeKind::RP3: return "rp3";
        case EdgeKind::S3: return "s3";
    }
    return "?";
}

int GkmGraph::index_of(const FixedVertex& v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int GkmGraph::square_count() const {
    int c = 0;
    for (const auto& e : edges)
        if (e.kind == EdgeKind::SphereTimesCircle || e.kind == EdgeKind::RP3 || e.kind == EdgeKind::S3) ++c;
    return c;
}

std::vector<LinearForm> GkmGraph::incident_weights(int v) const {
    std::vector<LinearForm> w;
    for (const auto& e : edges)
        if (e.a == v || e.b == v) w.push_back(e.weight);
    return w;
}

GkmGraph build_graph(const SpaceId& s) {
    GkmGraph g;
    g.space = s;
    g.vertices = fixed_points(s);
    const int n = s.n;
    auto idx = [&](Subset S, Decoration d) { return g.index_of({S, d}); };
    auto add = [&](int a, int b, LinearForm w, EdgeKind k) { g.edges.push_back({a, b, std::move(w), k}); };

    const bool circles = s.circles();
    const bool signs = s.signed_points();
    const Decoration plain = circles ? Decoration::Circle : Decoration::None;
    const EdgeKind pair_kind = circles ? EdgeKind::SphereTimesCircle : EdgeKind::Sphere;

    for (Subset S : subsets_colex(n, s.k)) {
        for (int i : elements(S))
            for (int j : complement_elements(S, n)) {
                Subset T = S ^ (Subset(1) << (i - 1)) ^ (Subset(1) << (j - 1));
                if (T < S) continue;  // each Johnson pair once
                LinearForm dw = LinearForm::diff(n, j - 1, i - 1);
                if (s.complex()) {
                    add(idx(S, plain), idx(T, plain), dw, EdgeKind::Sphere);
                    continue;
                }
                LinearForm sw = LinearForm::sum(n, j - 1, i - 1);
                if (signs) {
                    for (Decoration d : {Decoration::Plus, Decoration::Minus}) {
                        Decoration o = d == Decoration::Plus ? Decoration::Minus : Decoration::Plus;
                        add(idx(S, d), idx(T, d), dw, EdgeKind::Sphere);
                        add(idx(S, d), idx(T, o), sw, EdgeKind::Sphere);
                    }
                } else {
                    add(idx(S, plain), idx(T, plain), dw, pair_kind);
                    add(idx(S, plain), idx(T, plain), sw, pair_kind);
                }
            }
    }
    if (s.complex() || s.family == Family::RealEvenEven || s.family == Family::OrientedEvenEven) return g;

    const bool in_side = s.family == Family::RealEvenOdd || s.family == Family::OrientedEvenOdd || circles;
    const bool out_side = s.family == Family::RealOddOdd || s.family == Family::OrientedOddOdd || circles;
    for (Subset S : subsets_colex(n, s.k)) {
        std::vector<int> singles;
        if (in_side)
            for (int i : elements(S)) singles.push_back(i);
        if (out_side)
            for (int j : complement_elements(S, n)) singles.push_back(j);
        std::sort(singles.begin(), singles.end());
        for (int l : singles) {
            LinearForm w = LinearForm::unit(n, l - 1);
            if (signs)
                add(idx(S, Decoration::Plus), idx(S, Decoration::Minus), w, EdgeKind::Sphere);
            else if (circles)
                add(idx(S, plain), -1, w, s.oriented() ? EdgeKind::S3 : EdgeKind::RP3);
            else
                add(idx(S, plain), -1, w, EdgeKind::RP2);
        }
    }
    return g;
}

const GkmGraph& graph_of(const SpaceId& s) {
    static std::mutex mu;
    static std::map<SpaceId, std::unique_ptr<GkmGraph>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = cache[s];
    if (!slot) slot = std::make_unique<GkmGraph>(build_graph(s));
    return *slot;
}

GkmReport check_gkm_condition(const GkmGraph& g) {
    GkmReport r;
    auto fail = [&](std::string m) {
        r.ok = false;
        r.problems.push_back(std::move(m));
    };
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& fv = g.vertices[v];
        Decoration want = g.space.signed_points() ? fv.decoration : g.space.circles() ? Decoration::Circle : Decoration::None;
        if (g.space.signed_points() && fv.decoration != Decoration::Plus && fv.decoration != Decoration::Minus)
            fail("vertex " + fv.label() + " lacks a sign decoration");
        else if (fv.decoration != want)
            fail("vertex " + fv.label() + " has the wrong decoration for " + g.space.str());
        auto w = g.incident_weights(static_cast<int>(v));
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b)
                if (w[a].proportional(w[b]))
                    fail("weights " + w[a].str() + " and " + w[b].str() + " at " + fv.label() + " are dependent");
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& ed = g.edges[e];
        bool one = ed.kind == EdgeKind::RP2 || ed.kind == EdgeKind::RP3 || ed.kind == EdgeKind::S3;
        if (one == ed.two_ended()) fail("edge " + std::to_string(e) + " has the wrong number of endpoints");
    }
    return r;
}

GkmReport check_completeness(const GkmGraph& g) {
    GkmReport r;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        auto have = g.incident_weights(static_cast<int>(v));
        auto want = isotropy_weights(g.space, g.vertices[v]);
        std::sort(have.begin(), have.end());
        std::sort(want.begin(), want.end());
        if (have != want) {
            r.ok = false;
            r.problems.push_back("edge weights at " + g.vertices[v].label() + " differ from the isotropy weights");
        }
    }
    return r;
}

GkmGraph collapse_cover(const GkmGraph& g) {
    if (!g.space.signed_points()) throw std::invalid_argument("collapse needs an oriented graph with signed fixed points");
    GkmGraph r;
    r.space = *real_base(g.space);
    r.vertices = fixed_points(r.space);
    std::set<std::tuple<int, int, LinearForm>> seen;
    for (const auto& e : g.edges) {
        int a = e.a / 2, b = e.b / 2;
        if (a == b) b = -1;
        if (b >= 0 && b < a) std::swap(a, b);
        if (!seen.insert({a, b, e.weight}).second) continue;
        r.edges.push_back({a, b, e.weight, b < 0 ? EdgeKind::RP2 : EdgeKind::Sphere});
    }
    return r;
}

std::string export_dot(const GkmGraph& g, const DotOptions& opt) {
    std::ostringstream o;
    o << "graph \"" << g.space.str() << "\" {\n";
    o << "  node [shape=circle];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        o << "  v" << v << " [label=\"" << g.vertices[v].label() << "\"];\n";
    int stub = 0;
    for (const auto& e : g.edges) {
        std::string style;
        switch (e.kind) {
            case EdgeKind::Sphere: style = "solid"; break;
            case EdgeKind::RP2: style = "dashed"; break;
            default: style = "bold"; break;
        }
        std::string label = opt.weight_labels ? ", label=\"" + e.weight.str() + "\"" : "";
        if (e.two_ended()) {
            o << "  v" << e.a << " -- v" << e.b << " [style=" << style << label << "];\n";
        } else {
            const char* shape = e.kind == EdgeKind::RP2 ? "point" : "box";
            o << "  s" << stub << " [shape=" << shape << ", label=\"\"];\n";
            o << "  v" << e.a << " -- s" << stub << " [style=" << style << label << "];\n";
            ++stub;
        }
    }
    o << "}\n";
    return o.str();
}

std::string graph_json(const GkmGraph& g) {
    nlohmann::ordered_json j;
    j["schema"] = "gkm.graph/1";
    j["space"] = g.space.str();
    j["family"] = family_name(g.space.family);
    j["k"] = g.space.k;
    j["n"] = g.space.n;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices) {
        nlohmann::ordered_json jv;
        jv["label"] = v.label();
        jv["subset"] = elements(v.subset);
        const char* d = v.decoration == Decoration::Plus    ? "plus"
                        : v.decoration == Decoration::Minus ? "minus"
                        : v.decoration == Decoration::Circle ? "circle"
                                                             : "none";
        jv["decoration"] = d;
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) {
        nlohmann::ordered_json je;
        je["from"] = e.a;
        je["to"] = e.two_ended() ? nlohmann::ordered_json(e.b) : nlohmann::ordered_json(nullptr);
        je["weight"] = e.weight.coeffs();
        je["label"] = e.weight.str();
        je["kind"] = edge_kind_name(e.kind);
        j["edges"].push_back(je);
    }
    j["squares"] = g.square_count();
    return j.dump(2) + "\n";
}

}  // namespace gkm
