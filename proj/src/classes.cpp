#include "gkm/classes.hpp"

#include <stdexcept>

namespace gkm {

EquivCohClass::EquivCohClass(const SpaceId& s) : space(s) {
    std::size_t m = fixed_points(s).size();
    f.assign(m, Polynomial(s.n));
    if (s.circles()) g.assign(m, Polynomial(s.n));
}

EquivCohClass EquivCohClass::unit(const SpaceId& s) { return scalar(s, Polynomial::constant(s.n, 1)); }

EquivCohClass EquivCohClass::scalar(const SpaceId& s, const Polynomial& p) {
    EquivCohClass c(s);
    for (auto& x : c.f) x = p;
    return c;
}

bool EquivCohClass::is_zero() const {
    for (const auto& x : f)
        if (!x.is_zero()) return false;
    for (const auto& x : g)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<int> EquivCohClass::degree() const {
    std::optional<int> d;
    auto see = [&](const Polynomial& p, int shift) {
        if (p.is_zero()) return true;
        if (!p.is_homogeneous()) return false;
        int e = 2 * p.degree() + shift;
        if (d && *d != e) return false;
        d = e;
        return true;
    };
    for (const auto& x : f)
        if (!see(x, 0)) return std::nullopt;
    for (const auto& x : g)
        if (!see(x, 1)) return std::nullopt;
    return d;
}

namespace {

void same_space(const EquivCohClass& a, const EquivCohClass& b) {
    if (a.space != b.space) throw std::invalid_argument("classes live on different spaces: " + a.space.str() + " vs " + b.space.str());
}

}  // namespace

EquivCohClass& EquivCohClass::operator+=(const EquivCohClass& o) {
    same_space(*this, o);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += o.f[i];
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += o.g[i];
    return *this;
}

EquivCohClass& EquivCohClass::operator-=(const EquivCohClass& o) {
    same_space(*this, o);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] -= o.f[i];
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= o.g[i];
    return *this;
}

EquivCohClass& EquivCohClass::operator*=(const Polynomial& p) {
    for (auto& x : f) x *= p;
    for (auto& x : g) x *= p;
    return *this;
}

EquivCohClass EquivCohClass::operator-() const {
    EquivCohClass r = *this;
    for (auto& x : r.f) x = -x;
    for (auto& x : r.g) x = -x;
    return r;
}

bool EquivCohClass::operator==(const EquivCohClass& o) const { return space == o.space && f == o.f && g == o.g; }

EquivCohClass operator+(EquivCohClass a, const EquivCohClass& b) { return a += b; }
EquivCohClass operator-(EquivCohClass a, const EquivCohClass& b) { return a -= b; }
EquivCohClass operator*(EquivCohClass a, const Polynomial& p) { return a *= p; }
EquivCohClass operator*(const Polynomial& p, EquivCohClass a) { return a *= p; }

EquivCohClass operator*(const EquivCohClass& a, const EquivCohClass& b) {
    same_space(a, b);
    EquivCohClass r(a.space);
    for (std::size_t i = 0; i < a.f.size(); ++i) {
        r.f[i] = a.f[i] * b.f[i];
        if (!r.g.empty()) r.g[i] = a.f[i] * b.g[i] + a.g[i] * b.f[i];
    }
    return r;
}

EquivCohClass pow(const EquivCohClass& a, unsigned k) {
    EquivCohClass r = EquivCohClass::unit(a.space);
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

VerifyReport verify_class(const EquivCohClass& c) { return verify_class(c, graph_of(c.space)); }

VerifyReport verify_class(const EquivCohClass& c, const GkmGraph& gr) {
    VerifyReport r;
    auto fail = [&](Violation v) {
        r.ok = false;
        r.violations.push_back(std::move(v));
    };
    std::size_t m = gr.vertices.size();
    if (c.space != gr.space) {
        fail({-1, -1, -1, 'f', {}, "class space " + c.space.str() + " differs from graph space " + gr.space.str()});
        return r;
    }
    if (c.f.size() != m || c.g.size() != (c.space.circles() ? m : 0)) {
        fail({-1, -1, -1, 'f', {}, "vertex data does not match the fixed points of " + c.space.str()});
        return r;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (c.f[i].nvars() != c.space.n || (!c.g.empty() && c.g[i].nvars() != c.space.n)) {
            fail({-1, int(i), -1, 'f', {}, "polynomial at " + gr.vertices[i].label() + " has the wrong number of variables"});
            return r;
        }
    for (std::size_t e = 0; e < gr.edges.size(); ++e) {
        const auto& ed = gr.edges[e];
        switch (ed.kind) {
            case EdgeKind::RP2: break;
            case EdgeKind::Sphere:
            case EdgeKind::SphereTimesCircle:
                if (!divisible_by_linear(c.f[ed.a] - c.f[ed.b], ed.weight))
                    fail({int(e), ed.a, ed.b, 'f', ed.weight, ""});
                if (ed.kind == EdgeKind::SphereTimesCircle && !divisible_by_linear(c.g[ed.a] - c.g[ed.b], ed.weight))
                    fail({int(e), ed.a, ed.b, 'g', ed.weight, ""});
                break;
            case EdgeKind::RP3:
            case EdgeKind::S3:
                if (!divisible_by_linear(c.g[ed.a], ed.weight)) fail({int(e), ed.a, -1, 'g', ed.weight, ""});
                break;
        }
    }
    for (auto& v : r.violations) {
        if (!v.what.empty()) continue;
        std::string lhs = std::string(1, v.part) + "[" + gr.vertices[v.vertex].label() + "]";
        if (v.other >= 0)
            v.what = lhs + " != " + std::string(1, v.part) + "[" + gr.vertices[v.other].label() + "] mod " + v.modulus.str();
        else
            v.what = lhs + " != 0 mod " + v.modulus.str();
    }
    return r;
}

EquivCohClass rho_star(const EquivCohClass& c) {
    if (!c.space.oriented()) throw std::invalid_argument("the deck transformation acts only on oriented Grassmannians");
    if (!c.space.signed_points()) return c;
    EquivCohClass r = c;
    for (std::size_t i = 0; i + 1 < r.f.size(); i += 2) std::swap(r.f[i], r.f[i + 1]);
    return r;
}

EquivCohClass eigen_project(const EquivCohClass& c, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("eigenvalue must be +1 or -1");
    EquivCohClass r = sign > 0 ? c + rho_star(c) : c - rho_star(c);
    for (auto& x : r.f) x /= Rational(2);
    for (auto& x : r.g) x /= Rational(2);
    return r;
}

EquivCohClass pi_star(const EquivCohClass& c) {
    auto cover = oriented_cover(c.space);
    if (!cover) throw std::invalid_argument(c.space.str() + " has no oriented double cover in this model");
    EquivCohClass r(*cover);
    if (cover->signed_points()) {
        for (std::size_t i = 0; i < c.f.size(); ++i) {
            r.f[2 * i] = c.f[i];
            r.f[2 * i + 1] = c.f[i];
        }
    } else {
        r.f = c.f;
        for (std::size_t i = 0; i < c.g.size(); ++i) r.g[i] = c.g[i] * Rational(2);
    }
    return r;
}

EquivCohClass sq_transport(const EquivCohClass& c, const SpaceId& target) {
    if (!c.space.complex()) throw std::invalid_argument("Sq transport starts from a complex Grassmannian");
    if (!(target.family == Family::RealEvenEven || target.family == Family::RealEvenOdd ||
          target.family == Family::RealOddOdd) ||
        target.k != c.space.k || target.n != c.space.n)
        throw std::invalid_argument("Sq transport target must be an even real Grassmannian over the same Johnson graph");
    EquivCohClass r(target);
    for (std::size_t i = 0; i < c.f.size(); ++i) r.f[i] = sq_map(c.f[i]);
    return r;
}

std::vector<Rational> ordinary_coefficients(const std::vector<Polynomial>& expansion) {
    std::vector<Rational> out;
    out.reserve(expansion.size());
    for (const auto& p : expansion) out.push_back(p.constant_term());
    return out;
}

nlohmann::ordered_json class_to_json(const EquivCohClass& c) {
    nlohmann::ordered_json j;
    j["schema"] = "gkm.class/1";
    j["space"] = c.space.str();
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : fixed_points(c.space)) j["vertices"].push_back(v.label());
    j["f"] = nlohmann::ordered_json::array();
    for (const auto& p : c.f) j["f"].push_back(p.str());
    j["g"] = nlohmann::ordered_json::array();
    for (const auto& p : c.g) j["g"].push_back(p.str());
    return j;
}

EquivCohClass class_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("f"))
        throw std::invalid_argument("class document needs 'space' and 'f'");
    SpaceId s = SpaceId::parse(j.at("space").get<std::string>());
    EquivCohClass c(s);
    auto pts = fixed_points(s);
    const auto& jf = j.at("f");
    if (!jf.is_array() || jf.size() != pts.size())
        throw std::invalid_argument("'f' must list one polynomial per fixed point (" + std::to_string(pts.size()) + ")");
    if (j.contains("vertices")) {
        const auto& jv = j.at("vertices");
        if (!jv.is_array() || jv.size() != pts.size())
            throw std::invalid_argument("'vertices' does not match the fixed points");
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (jv[i].get<std::string>() != pts[i].label())
                throw std::invalid_argument("vertex " + std::to_string(i) + " should be " + pts[i].label());
    }
    for (std::size_t i = 0; i < pts.size(); ++i) c.f[i] = Polynomial::parse(jf[i].get<std::string>(), s.n);
    if (s.circles()) {
        if (j.contains("g")) {
            const auto& jg = j.at("g");
            if (!jg.is_array() || jg.size() != pts.size())
                throw std::invalid_argument("'g' must list one polynomial per fixed circle");
            for (std::size_t i = 0; i < pts.size(); ++i) c.g[i] = Polynomial::parse(jg[i].get<std::string>(), s.n);
        }
    } else if (j.contains("g") && !j.at("g").empty()) {
        throw std::invalid_argument("'g' is only meaningful on spaces with fixed circles");
    }
    return c;
}

}  // namespace gkm
