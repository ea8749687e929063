#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gkm/charclasses.hpp"
#include "gkm/classes.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

// 2*sum(S) - k(k+1) on complex Grassmannians, twice that elsewhere
int morse_value(const SpaceId& s, Subset S);
// k-subsets by Morse value, ties broken by colex order
std::vector<Subset> morse_order(const SpaceId& s);

struct BasisElement {
    std::string label;
    EquivCohClass cls;
    int degree = 0;          // cohomological
    int part = 0;            // 0 for the plain classes, 1 for the decorated family
    bool triangular = true;  // supported upward from `subset`
    Subset subset = 0;
    FactoredPoly diag;       // value of the plain class at `subset`
    CharMonomial mono;       // set for the non-triangular decorated elements
};

struct CanonicalBasis {
    SpaceId space;
    std::vector<Subset> order;
    std::vector<BasisElement> elements;  // plain in Morse order, then decorated
    std::size_t plain_count = 0;

    // plain classes on the k-subsets (colex index), one per entry of `order`
    std::vector<std::vector<Polynomial>> plain;
    // oriented G_2k(R^2n): inverse of the pairing matrix of the decorated family
    PolyMatrix gram_inverse;

    std::size_t size() const { return elements.size(); }
};

CanonicalBasis compute_canonical(const SpaceId& s);
// shared, immutable instance
const CanonicalBasis& canonical_basis(const SpaceId& s);

enum class SolveMethod {
    Congruences,   // Chinese remainder step per vertex over its lower neighbours
    LinearSystem,  // unknown coefficients, one rational linear system per vertex
};

// Upward-supported classes on a complex or real Grassmannian whose graph has
// only two-ended sphere congruences (RP2 edges are ignored). `order` must be a
// linear extension of the Morse order. Entry i is the tuple for order[i],
// indexed by colex subset position.
std::vector<std::vector<Polynomial>> solve_canonical_classes(const SpaceId& s, const std::vector<Subset>& order,
                                                             SolveMethod method = SolveMethod::Congruences);

// coefficients in basis.elements order; throws if c is not in the span
std::vector<Polynomial> expand_in_canonical(const EquivCohClass& c, const CanonicalBasis& basis);
EquivCohClass combine(const CanonicalBasis& basis, const std::vector<Polynomial>& coeffs);
// expansion of elements[i] * elements[j]
std::vector<Polynomial> lr_coefficients(const CanonicalBasis& basis, std::size_t i, std::size_t j);
// index of a label such as "tau{1,2}", or of a bare subset "{1,2}" among the plain classes
std::size_t find_element(const CanonicalBasis& basis, const std::string& label);

struct CharMatrices {
    std::vector<CharMonomial> rows;  // plain characteristic monomials by degree
    PolyMatrix K;                    // rows expanded in the plain canonical classes
    PolyMatrix Kbar;                 // inverse, polynomial entries
};

CharMatrices char_canonical_matrices(const SpaceId& s);

// sum of random small polynomial multiples of basis elements
EquivCohClass random_class(const CanonicalBasis& basis, std::mt19937_64& rng, int max_coeff_degree = 1);
// adds a random polynomial with nonzero constant term at one vertex
EquivCohClass perturb_vertex(const EquivCohClass& c, std::mt19937_64& rng, std::size_t* vertex = nullptr);

}  // namespace gkm
