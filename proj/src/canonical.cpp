#include "gkm/canonical.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "gkm/abbv.hpp"
#include "gkm/parallel.hpp"

namespace gkm {

int morse_value(const SpaceId& s, Subset S) {
    int sum = 0;
    for (int i : elements(S)) sum += i;
    int phi = 2 * sum - s.k * (s.k + 1);
    return s.complex() ? phi : 2 * phi;
}

std::vector<Subset> morse_order(const SpaceId& s) {
    auto v = subsets_colex(s.n, s.k);
    std::stable_sort(v.begin(), v.end(), [&](Subset a, Subset b) { return morse_value(s, a) < morse_value(s, b); });
    return v;
}

namespace {

std::map<Subset, int> colex_index(int n, int k) {
    std::map<Subset, int> idx;
    auto v = subsets_colex(n, k);
    for (std::size_t i = 0; i < v.size(); ++i) idx[v[i]] = static_cast<int>(i);
    return idx;
}

void monomials_of_degree(int n, int d, std::vector<Monomial>& out) {
    Monomial m;
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n - 1) {
            m.e[var] = static_cast<std::uint8_t>(left);
            m.deg = static_cast<std::uint16_t>(d);
            out.push_back(m);
            m.e[var] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.e[var] = static_cast<std::uint8_t>(e);
            self(self, var + 1, left - e);
        }
        m.e[var] = 0;
    };
    rec(rec, 0, d);
}

struct Constraint {
    LinearForm w;
    const Polynomial* value;
};

// p of degree d with p == value mod w for every constraint
Polynomial solve_by_congruences(const std::vector<Constraint>& cs, int n) {
    Polynomial p(n);
    Polynomial modulus = Polynomial::constant(n, 1);
    for (const auto& c : cs) {
        Polynomial r = reduce_mod_linear(*c.value - p, c.w);
        if (!r.is_zero()) {
            auto q = divide_exact(r, reduce_mod_linear(modulus, c.w));
            if (!q) throw std::runtime_error("canonical class: congruences are inconsistent");
            p += modulus * *q;
        }
        modulus *= c.w.poly();
    }
    return p;
}

Polynomial solve_by_linear_system(const std::vector<Constraint>& cs, int n, int d) {
    std::vector<Monomial> unknowns;
    monomials_of_degree(n, d, unknowns);
    RatMatrix a;
    std::vector<Rational> b;
    for (const auto& c : cs) {
        std::map<Monomial, std::size_t> rows;
        auto row_of = [&](const Monomial& m) {
            auto [it, fresh] = rows.emplace(m, a.size());
            if (fresh) {
                a.emplace_back(unknowns.size(), Rational(0));
                b.emplace_back(0);
            }
            return it->second;
        };
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            Polynomial red = reduce_mod_linear(Polynomial::term(n, unknowns[u], 1), c.w);
            for (const auto& [m, coef] : red.terms()) a[row_of(m)][u] += coef;
        }
        Polynomial rhs = reduce_mod_linear(*c.value, c.w);
        for (const auto& [m, coef] : rhs.terms()) b[row_of(m)] += coef;
    }
    SolveStatus st;
    auto x = solve_unique(a, b, &st);
    if (!x) {
        throw std::runtime_error(st == SolveStatus::Inconsistent ? "canonical class: linear system has no solution"
                                                                 : "canonical class: linear system is underdetermined");
    }
    std::vector<Polynomial::Term> t;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if ((*x)[u] != 0) t.emplace_back(unknowns[u], (*x)[u]);
    return Polynomial::from_terms(n, std::move(t));
}

}  // namespace

std::vector<std::vector<Polynomial>> solve_canonical_classes(const SpaceId& s, const std::vector<Subset>& order,
                                                             SolveMethod method) {
    if (s.oriented() || s.circles()) throw std::invalid_argument("the solver runs on complex or even real Grassmannians");
    const GkmGraph& g = graph_of(s);
    auto idx = colex_index(s.n, s.k);
    std::size_t m = order.size();
    if (m != idx.size()) throw std::invalid_argument("order must list every k-subset once");
    std::vector<int> pos(m, -1);
    for (std::size_t t = 0; t < m; ++t) {
        auto it = idx.find(order[t]);
        if (it == idx.end() || pos[it->second] >= 0) throw std::invalid_argument("order must list every k-subset once");
        pos[it->second] = static_cast<int>(t);
    }
    // lower[v]: (neighbour, weight) with the neighbour earlier in the order
    std::vector<std::vector<std::pair<int, LinearForm>>> lower(m);
    for (const auto& e : g.edges) {
        if (e.kind != EdgeKind::Sphere) continue;
        int a = e.a, b = e.b;
        if (morse_value(s, g.vertices[a].subset) == morse_value(s, g.vertices[b].subset))
            throw std::logic_error("edge between vertices of equal Morse value");
        if (pos[a] > pos[b]) std::swap(a, b);
        if (morse_value(s, g.vertices[a].subset) > morse_value(s, g.vertices[b].subset))
            throw std::invalid_argument("order is not a linear extension of the Morse order");
        lower[b].emplace_back(a, e.weight);
    }

    std::vector<std::vector<Polynomial>> out(m);
    parallel_for(m, [&](std::size_t t) {
        Subset S = order[t];
        int mv = morse_value(s, S);
        int d = mv / 2;
        std::vector<Polynomial> val(m, Polynomial(s.n));
        int home = idx.at(S);
        Polynomial diag = Polynomial::constant(s.n, 1);
        for (const auto& [nb, w] : lower[home]) diag *= w.poly();
        val[home] = diag;
        for (std::size_t u = t + 1; u < m; ++u) {
            int v = idx.at(order[u]);
            if (morse_value(s, order[u]) <= mv) continue;
            std::vector<Constraint> cs;
            for (const auto& [nb, w] : lower[v]) cs.push_back({w, &val[nb]});
            if (static_cast<int>(cs.size()) <= d)
                throw std::runtime_error("canonical class: too few lower neighbours for a unique value");
            val[v] = method == SolveMethod::Congruences ? solve_by_congruences(cs, s.n)
                                                       : solve_by_linear_system(cs, s.n, d);
        }
        for (std::size_t v = 0; v < m; ++v)
            for (const auto& [nb, w] : lower[v])
                if (!divisible_by_linear(val[v] - val[nb], w))
                    throw std::runtime_error("canonical class for " + subset_str(S) + " violates a congruence");
        out[t] = std::move(val);
    });
    return out;
}

namespace {

EquivCohClass lift_plain(const SpaceId& s, const std::vector<Polynomial>& tuple) {
    EquivCohClass c(s);
    if (s.signed_points()) {
        for (std::size_t i = 0; i < tuple.size(); ++i) c.f[2 * i] = c.f[2 * i + 1] = tuple[i];
    } else {
        c.f = tuple;
    }
    return c;
}

FactoredPoly downward_product(const SpaceId& s, Subset S) {
    FactoredPoly d;
    auto in = elements(S);
    for (int i : in)
        for (int j : complement_elements(S, s.n)) {
            if (j > i) continue;
            d.mul(LinearForm::diff(s.n, i - 1, j - 1));
            if (!s.complex()) d.mul(LinearForm::sum(s.n, i - 1, j - 1));
        }
    return d;
}

Polynomial prod_alpha(const SpaceId& s, const std::vector<int>& idx) {
    Polynomial p = Polynomial::constant(s.n, 1);
    for (int i : idx) p *= Polynomial::variable(s.n, i - 1);
    return p;
}

std::vector<int> all_indices(int n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    return v;
}

}  // namespace

CanonicalBasis compute_canonical(const SpaceId& s) {
    CanonicalBasis b;
    b.space = s;
    b.order = morse_order(s);
    if (s.complex()) {
        b.plain = solve_canonical_classes(s, b.order);
    } else {
        const CanonicalBasis& cx = canonical_basis(SpaceId(Family::Complex, s.k, s.n));
        b.plain.resize(cx.plain.size());
        for (std::size_t t = 0; t < cx.plain.size(); ++t)
            for (const auto& p : cx.plain[t]) b.plain[t].push_back(sq_map(p));
    }
    auto idx = colex_index(s.n, s.k);
    const char* name = s.complex() ? "tau" : "sigma";
    for (std::size_t t = 0; t < b.order.size(); ++t) {
        BasisElement e;
        e.subset = b.order[t];
        e.label = name + subset_str(e.subset);
        e.cls = lift_plain(s, b.plain[t]);
        e.degree = morse_value(s, e.subset);
        e.diag = downward_product(s, e.subset);
        if (e.diag.expand(s.n) != b.plain[t][idx.at(e.subset)])
            throw std::logic_error("canonical class has the wrong value at its own vertex");
        b.elements.push_back(std::move(e));
    }
    b.plain_count = b.elements.size();

    auto extend = [&](const EquivCohClass& factor, const std::string& prefix, int extra) {
        for (std::size_t t = 0; t < b.plain_count; ++t) {
            BasisElement e = b.elements[t];
            e.label = prefix + "*" + e.label;
            e.cls = factor * e.cls;
            e.degree += extra;
            e.part = 1;
            b.elements.push_back(std::move(e));
        }
    };
    switch (s.family) {
        case Family::RealOddEven: extend(r_class(s), "r", 2 * s.n + 1); break;
        case Family::OrientedOddEven: extend(r_class(s), "rt", 2 * s.n + 1); break;
        case Family::OrientedEvenOdd: extend(euler_class(s), "e", 2 * s.k); break;
        case Family::OrientedOddOdd: extend(euler_class(s, true), "ebar", 2 * (s.n - s.k)); break;
        case Family::OrientedEvenEven: {
            std::vector<std::size_t> dec;
            for (const auto& m : characteristic_monomial_basis(s)) {
                if (m.decor == Decor::None) continue;
                BasisElement e;
                e.label = m.str(s);
                e.cls = monomial_class(s, m);
                e.degree = m.degree(s);
                e.part = 1;
                e.triangular = false;
                e.mono = m;
                b.elements.push_back(std::move(e));
            }
            std::size_t q = b.elements.size() - b.plain_count;
            PolyMatrix gram(q, std::vector<Polynomial>(q, Polynomial(s.n)));
            std::vector<std::pair<std::size_t, std::size_t>> cells;
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = i; j < q; ++j) cells.emplace_back(i, j);
            for (const auto& [i, j] : cells) {
                gram[i][j] = integrate(b.elements[b.plain_count + i].cls * b.elements[b.plain_count + j].cls).value;
                gram[j][i] = gram[i][j];
            }
            std::vector<int> row_deg, col_deg;
            int dim = dimension(s);
            for (std::size_t i = 0; i < q; ++i) {
                row_deg.push_back(b.elements[b.plain_count + i].degree);
                col_deg.push_back(dim - b.elements[b.plain_count + i].degree);
            }
            auto inv = graded_inverse(gram, row_deg, col_deg);
            if (!inv) throw std::runtime_error("pairing on the -1 eigenspace of " + s.str() + " is degenerate");
            b.gram_inverse = std::move(*inv);
            break;
        }
        default: break;
    }
    return b;
}

const CanonicalBasis& canonical_basis(const SpaceId& s) {
    static std::mutex mu;
    static std::map<SpaceId, std::shared_ptr<const CanonicalBasis>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(s);
        if (it != cache.end()) return *it->second;
    }
    // built outside the lock: the real families recurse into the complex one
    auto fresh = std::make_shared<const CanonicalBasis>(compute_canonical(s));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(s, std::move(fresh));
    return *it->second;
}

namespace {

// Morse-order peeling of a tuple on k-subsets against the plain classes
std::vector<Polynomial> peel(const CanonicalBasis& b, std::vector<Polynomial> residual,
                             const std::map<Subset, int>& idx) {
    const SpaceId& s = b.space;
    std::vector<Polynomial> coef(b.plain_count, Polynomial(s.n));
    for (std::size_t t = 0; t < b.plain_count; ++t) {
        const auto& here = residual[idx.at(b.order[t])];
        if (here.is_zero()) continue;
        try {
            coef[t] = divide_by_factored(here, b.elements[t].diag);
        } catch (const std::domain_error&) {
            throw std::domain_error("class is not in the span of the canonical basis of " + s.str() + " (stuck at " +
                                    subset_str(b.order[t]) + ")");
        }
        for (std::size_t v = 0; v < residual.size(); ++v)
            if (!b.plain[t][v].is_zero()) residual[v] -= coef[t] * b.plain[t][v];
    }
    for (const auto& r : residual)
        if (!r.is_zero()) throw std::domain_error("class is not in the span of the canonical basis of " + s.str());
    return coef;
}

std::vector<Polynomial> plus_side(const EquivCohClass& c) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < c.f.size(); i += 2) out.push_back(c.f[i]);
    return out;
}

}  // namespace

std::vector<Polynomial> expand_in_canonical(const EquivCohClass& c, const CanonicalBasis& b) {
    const SpaceId& s = b.space;
    if (c.space != s) throw std::invalid_argument("class and basis live on different spaces");
    auto idx = colex_index(s.n, s.k);
    auto subsets = subsets_colex(s.n, s.k);
    std::vector<Polynomial> coef;
    auto append = [&](const std::vector<Polynomial>& part) { coef.insert(coef.end(), part.begin(), part.end()); };

    if (s.circles()) {
        append(peel(b, c.f, idx));
        std::vector<Polynomial> h = c.g;
        Polynomial all = prod_alpha(s, all_indices(s.n));
        for (auto& x : h) {
            auto q = divide_exact(x, all);
            if (!q) throw std::domain_error("theta part is not divisible by the product of all a_i");
            x = std::move(*q);
        }
        append(peel(b, h, idx));
    } else if (s.signed_points()) {
        append(peel(b, plus_side(eigen_project(c, 1)), idx));
        EquivCohClass minus = eigen_project(c, -1);
        if (s.family == Family::OrientedEvenEven) {
            std::size_t q = b.elements.size() - b.plain_count;
            // pair one homogeneous piece at a time; pieces below the top degree integrate to zero
            std::map<int, EquivCohClass> pieces;
            for (std::size_t v = 0; v < minus.size(); ++v)
                for (const auto& [m, a] : minus.f[v].terms()) {
                    auto it = pieces.try_emplace(2 * m.deg, s).first;
                    it->second.f[v] += Polynomial::term(s.n, m, a);
                }
            int dim = dimension(s);
            std::vector<Polynomial> y(q, Polynomial(s.n));
            parallel_for(q, [&](std::size_t i) {
                const BasisElement& d = b.elements[b.plain_count + i];
                for (const auto& [deg, piece] : pieces)
                    if (deg + d.degree >= dim) y[i] += integrate(piece * d.cls).value;
            });
            for (std::size_t i = 0; i < q; ++i) {
                Polynomial a(s.n);
                for (std::size_t j = 0; j < q; ++j) a += b.gram_inverse[i][j] * y[j];
                coef.push_back(std::move(a));
            }
        } else {
            std::vector<Polynomial> h = plus_side(minus);
            for (std::size_t i = 0; i < h.size(); ++i) {
                auto ix = s.family == Family::OrientedEvenOdd ? elements(subsets[i]) : complement_elements(subsets[i], s.n);
                auto q = divide_exact(h[i], prod_alpha(s, ix));
                if (!q) throw std::domain_error("class is not in the span of the canonical basis of " + s.str());
                h[i] = std::move(*q);
            }
            append(peel(b, h, idx));
        }
    } else {
        append(peel(b, c.f, idx));
    }
    if (combine(b, coef) != c) throw std::domain_error("class is not in the span of the canonical basis of " + s.str());
    return coef;
}

EquivCohClass combine(const CanonicalBasis& b, const std::vector<Polynomial>& coeffs) {
    if (coeffs.size() != b.elements.size()) throw std::invalid_argument("one coefficient per basis element expected");
    EquivCohClass r(b.space);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) r += b.elements[i].cls * coeffs[i];
    return r;
}

std::vector<Polynomial> lr_coefficients(const CanonicalBasis& b, std::size_t i, std::size_t j) {
    if (i >= b.elements.size() || j >= b.elements.size()) throw std::out_of_range("basis index out of range");
    return expand_in_canonical(b.elements[i].cls * b.elements[j].cls, b);
}

std::size_t find_element(const CanonicalBasis& b, const std::string& label) {
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        if (b.elements[i].label == label) return i;
    for (std::size_t i = 0; i < b.plain_count; ++i)
        if (subset_str(b.elements[i].subset) == label) return i;
    throw std::invalid_argument("no basis element '" + label + "' on " + b.space.str());
}

CharMatrices char_canonical_matrices(const SpaceId& s) {
    const CanonicalBasis& b = canonical_basis(s);
    CharMatrices cm;
    for (const auto& m : characteristic_monomial_basis(s))
        if (m.decor == Decor::None) cm.rows.push_back(m);
    std::size_t q = b.plain_count;
    if (cm.rows.size() != q) throw std::logic_error("characteristic monomials and canonical classes differ in number");
    cm.K.assign(q, std::vector<Polynomial>(q, Polynomial(s.n)));
    parallel_for(q, [&](std::size_t r) {
        auto coef = expand_in_canonical(monomial_class(s, cm.rows[r]), b);
        for (std::size_t c = q; c < coef.size(); ++c)
            if (!coef[c].is_zero()) throw std::logic_error("plain monomial has a decorated component");
        for (std::size_t c = 0; c < q; ++c) cm.K[r][c] = coef[c];
    });
    std::vector<int> row_deg, col_deg;
    for (const auto& m : cm.rows) row_deg.push_back(m.degree(s));
    for (std::size_t c = 0; c < q; ++c) col_deg.push_back(b.elements[c].degree);
    auto inv = graded_inverse(cm.K, row_deg, col_deg);
    if (!inv) throw std::runtime_error("K is not invertible over the polynomial ring for " + s.str());
    cm.Kbar = std::move(*inv);
    if (!is_identity(multiply(cm.K, cm.Kbar))) throw std::logic_error("K * Kbar is not the identity");
    return cm;
}

namespace {

Polynomial random_poly(int n, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Polynomial::Term> t;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<Monomial> ms;
        monomials_of_degree(n, d, ms);
        for (const auto& m : ms) {
            int c = coef(rng);
            if (c) t.emplace_back(m, Rational(c));
        }
    }
    return Polynomial::from_terms(n, std::move(t));
}

}  // namespace

EquivCohClass random_class(const CanonicalBasis& b, std::mt19937_64& rng, int max_coeff_degree) {
    std::vector<Polynomial> coef;
    std::bernoulli_distribution use(0.6);
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        coef.push_back(use(rng) ? random_poly(b.space.n, max_coeff_degree, rng) : Polynomial(b.space.n));
    return combine(b, coef);
}

EquivCohClass perturb_vertex(const EquivCohClass& c, std::mt19937_64& rng, std::size_t* vertex) {
    EquivCohClass r = c;
    std::uniform_int_distribution<std::size_t> pick(0, c.f.size() - 1);
    std::size_t v = pick(rng);
    std::uniform_int_distribution<int> lead(1, 3);
    std::bernoulli_distribution neg(0.5);
    Polynomial delta = random_poly(c.space.n, 1, rng);
    Rational c0 = delta.constant_term();
    Rational want = neg(rng) ? -lead(rng) : lead(rng);
    delta += Polynomial::constant(c.space.n, want - c0);
    bool on_theta = !r.g.empty() && std::bernoulli_distribution(0.5)(rng);
    (on_theta ? r.g[v] : r.f[v]) += delta;
    if (vertex) *vertex = v;
    return r;
}

}  // namespace gkm
