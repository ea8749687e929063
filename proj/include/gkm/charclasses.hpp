#pragma once

#include <string>
#include <vector>

#include "gkm/classes.hpp"

namespace gkm {

enum class Bundle { Canonical, Complementary, Tangent };
enum class ClassKind { Chern, Pontryagin, Euler, RClass };

struct CharClassSpec {
    Bundle bundle = Bundle::Canonical;
    ClassKind kind = ClassKind::Chern;
    int index = -1;  // -1 is the total class; Euler and r ignore graded pieces
};

EquivCohClass characteristic_class(const SpaceId& s, const CharClassSpec& spec);

// shorthands for the canonical/complementary classes
EquivCohClass chern_class(const SpaceId& s, int l, bool bar = false);
EquivCohClass pontryagin_class(const SpaceId& s, int l, bool bar = false);
EquivCohClass euler_class(const SpaceId& s, bool bar = false);
EquivCohClass r_class(const SpaceId& s);

// Optional odd/Euler factor in front of a monomial in c_l or p_l (or their bars).
enum class Decor { None, E, EBar, R, RTilde };

const char* decor_name(Decor d);  // "", "e", "ebar", "r", "rt"
Decor parse_decor(const std::string& s);

struct CharMonomial {
    Decor decor = Decor::None;
    bool bar = false;
    std::vector<int> exps;  // exps[l-1] is the power of c_l (or p_l)

    int weighted_degree() const;  // sum of l * exps[l-1]
    int degree(const SpaceId& s) const;
    std::string str(const SpaceId& s) const;
    bool operator==(const CharMonomial& o) const { return decor == o.decor && bar == o.bar && exps == o.exps; }
};

// all exponent vectors with `parts` entries and sum <= bound, in graded order
std::vector<std::vector<int>> bounded_exponents(int parts, int bound);

// plain monomials first (sorted by degree), then decorated ones
std::vector<CharMonomial> characteristic_monomial_basis(const SpaceId& s);
EquivCohClass monomial_class(const SpaceId& s, const CharMonomial& m);

struct RelationCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct RelationReport {
    SpaceId space;
    bool ok = true;
    std::vector<RelationCheck> checks;
};

RelationReport verify_relations(const SpaceId& s);

}  // namespace gkm
