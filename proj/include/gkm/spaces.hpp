#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkm/polyring.hpp"

namespace gkm {

using Subset = std::uint64_t;  // bit i-1 set <=> i in S

enum class Family {
    Complex,           // G_k(C^n)
    RealEvenEven,      // G_2k(R^2n)
    RealEvenOdd,       // G_2k(R^2n+1)
    RealOddOdd,        // G_2k+1(R^2n+1)
    RealOddEven,       // G_2k+1(R^2n+2)
    OrientedEvenEven,  // oriented versions of the four above
    OrientedEvenOdd,
    OrientedOddOdd,
    OrientedOddEven,
};

std::vector<Family> all_families();
const char* family_name(Family f);

struct SpaceId {
    Family family = Family::Complex;
    int k = 0;
    int n = 1;

    SpaceId() = default;
    SpaceId(Family f, int k_, int n_);

    static SpaceId parse(const std::string& s);  // "C(k,n)", "R(K,N)", "OR(K,N)"
    std::string str() const;

    bool complex() const { return family == Family::Complex; }
    bool oriented() const;
    bool real() const { return !complex() && !oriented(); }
    // fixed circles instead of fixed points: G_2k+1(R^2n+2) and its cover
    bool circles() const { return family == Family::RealOddEven || family == Family::OrientedOddEven; }
    // even-dimensional oriented families, whose fixed points come in pairs S+, S-
    bool signed_points() const { return oriented() && !circles(); }
    bool orientable() const { return family != Family::RealEvenOdd && family != Family::RealOddOdd; }
    bool has_euler() const { return family == Family::OrientedEvenEven || family == Family::OrientedEvenOdd; }
    bool has_euler_bar() const { return family == Family::OrientedEvenEven || family == Family::OrientedOddOdd; }

    // dimensions of the subspace and ambient space, e.g. (3, 6) for G_3(R^6)
    int sub_dim() const;
    int ambient_dim() const;

    bool operator==(const SpaceId& o) const { return family == o.family && k == o.k && n == o.n; }
    bool operator!=(const SpaceId& o) const { return !(*this == o); }
    bool operator<(const SpaceId& o) const;
};

// G_2k(R^2n+1) <-> G_2n-2k+1(R^2n+1), also for the oriented versions
std::optional<SpaceId> dual_space(const SpaceId& s);
std::optional<SpaceId> oriented_cover(const SpaceId& real);
std::optional<SpaceId> real_base(const SpaceId& oriented);

enum class Decoration { None, Plus, Minus, Circle };

struct FixedVertex {
    Subset subset = 0;
    Decoration decoration = Decoration::None;

    std::string label() const;
    bool operator==(const FixedVertex& o) const { return subset == o.subset && decoration == o.decoration; }
};

// ---- subset helpers ----
long long binomial(int n, int k);
std::vector<Subset> subsets_colex(int n, int k);
std::vector<int> elements(Subset s);  // 1-based, ascending
std::vector<int> complement_elements(Subset s, int n);
std::string subset_str(Subset s);

std::vector<FixedVertex> fixed_points(const SpaceId& s);
int vertex_index(const SpaceId& s, const FixedVertex& v);  // -1 if absent
std::vector<LinearForm> isotropy_weights(const SpaceId& s, const FixedVertex& v);

int dimension(const SpaceId& s);  // real dimension
long long total_betti(const SpaceId& s);

struct FormalityReport {
    long long fixed_cohomology = 0;  // points count 1, circles count 2
    long long total_betti = 0;
    long long poincare_at_one = 0;
    bool ok = false;
};
FormalityReport check_formality(const SpaceId& s);

// coefficient of t^i at index i, up to the dimension
std::vector<long long> poincare_series(const SpaceId& s);
// Gaussian binomial [n choose k] in q; empty when k < 0 or k > n
std::vector<long long> gaussian_binomial(int n, int k);
std::string series_str(const std::vector<long long>& c);

}  // namespace gkm
