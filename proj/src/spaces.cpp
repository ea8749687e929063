#include "gkm/spaces.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace gkm {

std::vector<Family> all_families() {
    return {Family::Complex,          Family::RealEvenEven,    Family::RealEvenOdd,
            Family::RealOddOdd,       Family::RealOddEven,     Family::OrientedEvenEven,
            Family::OrientedEvenOdd,  Family::OrientedOddOdd,  Family::OrientedOddEven};
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Complex: return "ComplexGrass";
        case Family::RealEvenEven: return "RealGrassEvenEven";
        case Family::RealEvenOdd: return "RealGrassEvenOdd";
        case Family::RealOddOdd: return "RealGrassOddOdd";
        case Family::RealOddEven: return "RealGrassOddEven";
        case Family::OrientedEvenEven: return "OrientedEvenEven";
        case Family::OrientedEvenOdd: return "OrientedEvenOdd";
        case Family::OrientedOddOdd: return "OrientedOddOdd";
        case Family::OrientedOddEven: return "OrientedOddEven";
    }
    return "?";
}

SpaceId::SpaceId(Family f, int k_, int n_) : family(f), k(k_), n(n_) {
    if (n < 1) throw std::invalid_argument("torus rank n must be at least 1");
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    if (n > kMaxVars) throw std::invalid_argument("torus rank above " + std::to_string(kMaxVars) + " is not supported");
}

bool SpaceId::oriented() const {
    return family == Family::OrientedEvenEven || family == Family::OrientedEvenOdd ||
           family == Family::OrientedOddOdd || family == Family::OrientedOddEven;
}

namespace {

enum class Parity { EvenEven, EvenOdd, OddOdd, OddEven };

Parity parity_of(Family f) {
    switch (f) {
        case Family::RealEvenEven:
        case Family::OrientedEvenEven: return Parity::EvenEven;
        case Family::RealEvenOdd:
        case Family::OrientedEvenOdd: return Parity::EvenOdd;
        case Family::RealOddOdd:
        case Family::OrientedOddOdd: return Parity::OddOdd;
        default: return Parity::OddEven;
    }
}

Family with_parity(Parity p, bool oriented) {
    switch (p) {
        case Parity::EvenEven: return oriented ? Family::OrientedEvenEven : Family::RealEvenEven;
        case Parity::EvenOdd: return oriented ? Family::OrientedEvenOdd : Family::RealEvenOdd;
        case Parity::OddOdd: return oriented ? Family::OrientedOddOdd : Family::RealOddOdd;
        case Parity::OddEven: return oriented ? Family::OrientedOddEven : Family::RealOddEven;
    }
    return Family::Complex;
}

}  // namespace

int SpaceId::sub_dim() const {
    if (complex()) return k;
    Parity p = parity_of(family);
    return (p == Parity::EvenEven || p == Parity::EvenOdd) ? 2 * k : 2 * k + 1;
}

int SpaceId::ambient_dim() const {
    if (complex()) return n;
    switch (parity_of(family)) {
        case Parity::EvenEven: return 2 * n;
        case Parity::EvenOdd:
        case Parity::OddOdd: return 2 * n + 1;
        case Parity::OddEven: return 2 * n + 2;
    }
    return 0;
}

bool SpaceId::operator<(const SpaceId& o) const {
    if (family != o.family) return family < o.family;
    if (n != o.n) return n < o.n;
    return k < o.k;
}

std::string SpaceId::str() const {
    std::string head = complex() ? "C" : oriented() ? "OR" : "R";
    return head + "(" + std::to_string(sub_dim()) + "," + std::to_string(ambient_dim()) + ")";
}

SpaceId SpaceId::parse(const std::string& s) {
    static const std::regex re(R"(\s*(C|R|OR)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("unknown space '" + s + "'");
    int a = std::stoi(m[2]);
    int b = std::stoi(m[3]);
    if (m[1] == "C") return SpaceId(Family::Complex, a, b);
    bool oriented = m[1] == "OR";
    Parity p;
    int k, n;
    if (a % 2 == 0 && b % 2 == 0) {
        p = Parity::EvenEven, k = a / 2, n = b / 2;
    } else if (a % 2 == 0) {
        p = Parity::EvenOdd, k = a / 2, n = (b - 1) / 2;
    } else if (b % 2 == 1) {
        p = Parity::OddOdd, k = (a - 1) / 2, n = (b - 1) / 2;
    } else {
        p = Parity::OddEven, k = (a - 1) / 2, n = (b - 2) / 2;
    }
    try {
        return SpaceId(with_parity(p, oriented), k, n);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("unsupported space '" + s + "': " + e.what());
    }
}

std::optional<SpaceId> dual_space(const SpaceId& s) {
    if (s.family == Family::RealEvenOdd) return SpaceId(Family::RealOddOdd, s.n - s.k, s.n);
    if (s.family == Family::RealOddOdd) return SpaceId(Family::RealEvenOdd, s.n - s.k, s.n);
    if (s.family == Family::OrientedEvenOdd) return SpaceId(Family::OrientedOddOdd, s.n - s.k, s.n);
    if (s.family == Family::OrientedOddOdd) return SpaceId(Family::OrientedEvenOdd, s.n - s.k, s.n);
    return std::nullopt;
}

std::optional<SpaceId> oriented_cover(const SpaceId& s) {
    if (!s.real()) return std::nullopt;
    return SpaceId(with_parity(parity_of(s.family), true), s.k, s.n);
}

std::optional<SpaceId> real_base(const SpaceId& s) {
    if (!s.oriented()) return std::nullopt;
    return SpaceId(with_parity(parity_of(s.family), false), s.k, s.n);
}

// ---- subsets ----

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Subset> subsets_colex(int n, int k) {
    if (n > 62) throw std::invalid_argument("subsets limited to n <= 62");
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {0};
    Subset s = (Subset(1) << k) - 1;
    Subset limit = Subset(1) << n;
    while (s < limit) {
        out.push_back(s);
        // next integer with the same popcount; integer order is colex order
        Subset c = s & (~s + 1);
        Subset r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

std::vector<int> elements(Subset s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1) out.push_back(i + 1);
    return out;
}

std::vector<int> complement_elements(Subset s, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!(s >> i & 1)) out.push_back(i + 1);
    return out;
}

std::string subset_str(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::string FixedVertex::label() const {
    switch (decoration) {
        case Decoration::None: return subset_str(subset);
        case Decoration::Plus: return subset_str(subset) + "+";
        case Decoration::Minus: return subset_str(subset) + "-";
        case Decoration::Circle: return "C" + subset_str(subset);
    }
    return "?";
}

std::vector<FixedVertex> fixed_points(const SpaceId& s) {
    std::vector<FixedVertex> out;
    for (Subset S : subsets_colex(s.n, s.k)) {
        if (s.signed_points()) {
            out.push_back({S, Decoration::Plus});
            out.push_back({S, Decoration::Minus});
        } else {
            out.push_back({S, s.circles() ? Decoration::Circle : Decoration::None});
        }
    }
    return out;
}

int vertex_index(const SpaceId& s, const FixedVertex& v) {
    auto pts = fixed_points(s);
    auto it = std::find(pts.begin(), pts.end(), v);
    return it == pts.end() ? -1 : static_cast<int>(it - pts.begin());
}

std::vector<LinearForm> isotropy_weights(const SpaceId& s, const FixedVertex& v) {
    if (vertex_index(s, v) < 0) throw std::invalid_argument("vertex " + v.label() + " is not a fixed point of " + s.str());
    std::vector<LinearForm> w;
    auto in = elements(v.subset);
    auto out = complement_elements(v.subset, s.n);
    for (int i : in)
        for (int j : out) {
            w.push_back(LinearForm::diff(s.n, j - 1, i - 1));
            if (!s.complex()) w.push_back(LinearForm::sum(s.n, j - 1, i - 1));
        }
    if (s.complex()) return w;
    Parity p = parity_of(s.family);
    if (p == Parity::EvenOdd || p == Parity::OddEven)
        for (int i : in) w.push_back(LinearForm::unit(s.n, i - 1));
    if (p == Parity::OddOdd || p == Parity::OddEven)
        for (int j : out) w.push_back(LinearForm::unit(s.n, j - 1));
    return w;
}

int dimension(const SpaceId& s) {
    int b = s.k * (s.n - s.k);
    if (s.complex()) return 2 * b;
    switch (parity_of(s.family)) {
        case Parity::EvenEven: return 4 * b;
        case Parity::EvenOdd: return 4 * b + 2 * s.k;
        case Parity::OddOdd: return 4 * b + 2 * (s.n - s.k);
        case Parity::OddEven: return 4 * b + 2 * s.n + 1;
    }
    return 0;
}

long long total_betti(const SpaceId& s) {
    long long c = binomial(s.n, s.k);
    if (s.oriented() || s.family == Family::RealOddEven) return 2 * c;
    return c;
}

std::vector<long long> gaussian_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return {};
    std::vector<long long> p{1};
    auto mul_one_minus = [](std::vector<long long> a, int d) {
        std::vector<long long> r(a.size() + d, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] += a[i];
            r[i + d] -= a[i];
        }
        return r;
    };
    for (int i = 1; i <= k; ++i) p = mul_one_minus(p, n - k + i);
    for (int i = 1; i <= k; ++i) {
        // exact division by 1 - q^i
        std::vector<long long> q(p.size() - i, 0);
        std::vector<long long> r = p;
        for (std::size_t j = 0; j < q.size(); ++j) {
            q[j] = r[j];
            r[j] = 0;
            r[j + i] += q[j];
        }
        for (long long x : r)
            if (x != 0) throw std::logic_error("Gaussian binomial division left a remainder");
        p = q;
    }
    return p;
}

namespace {

// c(q) with q = t^step, shifted by t^shift, accumulated into out
void add_scaled(std::vector<long long>& out, const std::vector<long long>& c, int step, int shift) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t d = i * step + shift;
        if (d >= out.size()) out.resize(d + 1, 0);
        out[d] += c[i];
    }
}

}  // namespace

std::vector<long long> poincare_series(const SpaceId& s) {
    std::vector<long long> out(dimension(s) + 1, 0);
    int k = s.k, n = s.n;
    auto pc = gaussian_binomial(n, k);
    if (s.complex()) {
        add_scaled(out, pc, 2, 0);
    } else {
        switch (s.family) {
            case Family::RealEvenEven:
            case Family::RealEvenOdd:
            case Family::RealOddOdd: add_scaled(out, pc, 4, 0); break;
            case Family::RealOddEven:
            case Family::OrientedOddEven:
                add_scaled(out, pc, 4, 0);
                add_scaled(out, pc, 4, 2 * n + 1);
                break;
            case Family::OrientedEvenOdd:
                add_scaled(out, pc, 4, 0);
                add_scaled(out, pc, 4, 2 * k);
                break;
            case Family::OrientedOddOdd:
                add_scaled(out, pc, 4, 0);
                add_scaled(out, pc, 4, 2 * n - 2 * k);
                break;
            case Family::OrientedEvenEven:
                add_scaled(out, pc, 4, 0);
                add_scaled(out, gaussian_binomial(n - 1, k), 4, 2 * k);
                add_scaled(out, gaussian_binomial(n - 1, k - 1), 4, 2 * n - 2 * k);
                break;
            default: break;
        }
    }
    if (out.size() != static_cast<std::size_t>(dimension(s) + 1))
        throw std::logic_error("Poincare series exceeds the dimension of " + s.str());
    return out;
}

FormalityReport check_formality(const SpaceId& s) {
    FormalityReport r;
    for (const auto& v : fixed_points(s)) r.fixed_cohomology += v.decoration == Decoration::Circle ? 2 : 1;
    r.total_betti = total_betti(s);
    for (long long c : poincare_series(s)) r.poincare_at_one += c;
    r.ok = r.fixed_cohomology == r.total_betti && r.poincare_at_one == r.total_betti;
    return r;
}

std::string series_str(const std::vector<long long>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long long a = c[i] < 0 ? -c[i] : c[i];
        if (!s.empty() || c[i] < 0) s += c[i] < 0 ? "-" : "+";
        if (i == 0)
            s += std::to_string(a);
        else {
            if (a != 1) s += std::to_string(a) + "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace gkm
