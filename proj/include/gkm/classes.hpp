#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/polyring.hpp"
#include "json.hpp"

namespace gkm {

// Vertex tuple (f_v + g_v * theta), indexed like fixed_points(space).
// g is empty unless the space has fixed circles; theta^2 = 0.
struct EquivCohClass {
    SpaceId space;
    std::vector<Polynomial> f;
    std::vector<Polynomial> g;

    EquivCohClass() = default;
    explicit EquivCohClass(const SpaceId& s);  // zero class

    static EquivCohClass zero(const SpaceId& s) { return EquivCohClass(s); }
    static EquivCohClass unit(const SpaceId& s);
    static EquivCohClass scalar(const SpaceId& s, const Polynomial& p);

    int nvars() const { return space.n; }
    std::size_t size() const { return f.size(); }
    bool has_theta() const { return space.circles(); }
    bool is_zero() const;
    // cohomological degree when homogeneous, with a_i in degree 2 and theta in degree 1
    std::optional<int> degree() const;

    EquivCohClass& operator+=(const EquivCohClass& o);
    EquivCohClass& operator-=(const EquivCohClass& o);
    EquivCohClass& operator*=(const Polynomial& p);
    EquivCohClass operator-() const;

    bool operator==(const EquivCohClass& o) const;
    bool operator!=(const EquivCohClass& o) const { return !(*this == o); }
};

EquivCohClass operator+(EquivCohClass a, const EquivCohClass& b);
EquivCohClass operator-(EquivCohClass a, const EquivCohClass& b);
EquivCohClass operator*(const EquivCohClass& a, const EquivCohClass& b);
EquivCohClass operator*(EquivCohClass a, const Polynomial& p);
EquivCohClass operator*(const Polynomial& p, EquivCohClass a);
EquivCohClass pow(const EquivCohClass& a, unsigned k);

struct Violation {
    int edge = -1;   // -1 for structural problems
    int vertex = -1;
    int other = -1;  // -1 when the congruence is g == 0
    char part = 'f';
    LinearForm modulus;
    std::string what;
};

struct VerifyReport {
    bool ok = true;
    std::vector<Violation> violations;
};

VerifyReport verify_class(const EquivCohClass& c);
VerifyReport verify_class(const EquivCohClass& c, const GkmGraph& g);

// swaps S+ and S-; the identity on spaces without signed fixed points
EquivCohClass rho_star(const EquivCohClass& c);
EquivCohClass eigen_project(const EquivCohClass& c, int sign);
// pullback along the double cover of a real Grassmannian
EquivCohClass pi_star(const EquivCohClass& c);
// vertexwise substitution a_i -> a_i^2 from G_k(C^n) to a real family over the same Johnson graph
EquivCohClass sq_transport(const EquivCohClass& c, const SpaceId& target);

std::vector<Rational> ordinary_coefficients(const std::vector<Polynomial>& expansion);

// {"schema", "space", "vertices", "f", "g"} with polynomial strings
nlohmann::ordered_json class_to_json(const EquivCohClass& c);
EquivCohClass class_from_json(const nlohmann::json& j);

}  // namespace gkm
