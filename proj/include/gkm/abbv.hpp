#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkm/charclasses.hpp"
#include "gkm/classes.hpp"

namespace gkm {

// equivariant Euler class of the normal bundle at fixed_points(s)[v];
// throws on the non-orientable families
FactoredPoly normal_euler_factored(const SpaceId& s, std::size_t v);
Polynomial normal_euler(const SpaceId& s, std::size_t v);

enum class DegreeClass { Below, Top, Above };
const char* degree_class_name(DegreeClass d);

struct IntegralResult {
    Polynomial value;
    DegreeClass degree_class = DegreeClass::Below;
};

// sum over fixed points of c|_v / e(N_v); circle families contribute g_v
IntegralResult integrate(const EquivCohClass& c);

// the same sum evaluated at one point, without symbolic simplification
Rational numeric_integral(const EquivCohClass& c, const std::vector<Rational>& point);
// a_i = i, which avoids every zero of a_j -+ a_i and a_l
std::vector<Rational> standard_point(int n);

struct CharNumber {
    CharMonomial monomial;
    IntegralResult integral;
    Rational ordinary = 0;   // constant term when the degree is the top one, else 0
    bool numeric_ok = true;  // symbolic value at a_i = i equals the direct sum
};

CharNumber characteristic_number(const SpaceId& s, const CharMonomial& m);

struct Factor2Report {
    int k = 0;
    int n = 1;
    std::vector<int> index;
    std::vector<std::string> names;
    std::vector<Polynomial> values;  // already doubled where the identity says so
    Polynomial closed_sum;
    bool ok = false;
};

Factor2Report factor2_report(int k, int n, const std::vector<int>& index);

}  // namespace gkm
