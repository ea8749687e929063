#include "gkm/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gkm {

namespace {

// Reduces [a | b] in place to row echelon form; returns pivot columns.
std::vector<std::size_t> eliminate(RatMatrix& a, std::vector<std::vector<Rational>>* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        if (rhs)
            for (auto& x : (*rhs)[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
            if (rhs)
                for (std::size_t j = 0; j < (*rhs)[i].size(); ++j) (*rhs)[i][j] -= f * (*rhs)[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_unique(RatMatrix a, std::vector<Rational> b, SolveStatus* status) {
    if (a.size() != b.size()) throw std::invalid_argument("system shape mismatch");
    std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<std::vector<Rational>> rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = {b[i]};
    auto piv = eliminate(a, &rhs);
    for (std::size_t i = piv.size(); i < rhs.size(); ++i)
        if (rhs[i][0] != 0) {
            if (status) *status = SolveStatus::Inconsistent;
            return std::nullopt;
        }
    if (piv.size() < cols) {
        if (status) *status = SolveStatus::Underdetermined;
        return std::nullopt;
    }
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = rhs[i][0];
    if (status) *status = SolveStatus::Unique;
    return x;
}

std::optional<RatMatrix> invert(RatMatrix a) {
    std::size_t n = a.size();
    std::vector<std::vector<Rational>> rhs(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) rhs[i][i] = 1;
    auto piv = eliminate(a, &rhs);
    if (piv.size() < n) return std::nullopt;
    return rhs;
}

std::size_t rank(RatMatrix a) { return eliminate(a, nullptr).size(); }

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty()) return {};
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    int nv = inner && cols ? b[0][0].nvars() : a[0].empty() ? 0 : a[0][0].nvars();
    PolyMatrix c(a.size(), std::vector<Polynomial>(cols, Polynomial(nv)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

bool is_identity(const PolyMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j ? !(m[i][j].is_constant() && m[i][j].constant_term() == 1) : !m[i][j].is_zero())
                return false;
        }
    }
    return true;
}

std::optional<PolyMatrix> graded_inverse(const PolyMatrix& m, const std::vector<int>& row_deg,
                                         const std::vector<int>& col_deg) {
    std::size_t n = m.size();
    if (row_deg.size() != n || col_deg.size() != n) throw std::invalid_argument("degree vectors do not match matrix");
    if (n == 0) return PolyMatrix{};
    int nv = m[0][0].nvars();
    // group rows and columns by degree level
    std::map<int, std::vector<std::size_t>> rl, cl;
    for (std::size_t i = 0; i < n; ++i) rl[row_deg[i]].push_back(i);
    for (std::size_t j = 0; j < n; ++j) cl[col_deg[j]].push_back(j);
    if (rl.size() != cl.size()) return std::nullopt;
    std::vector<int> levels;
    for (auto it = rl.begin(), jt = cl.begin(); it != rl.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second.size() != jt->second.size()) return std::nullopt;
        levels.push_back(it->first);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (row_deg[i] < col_deg[j] && !m[i][j].is_zero()) return std::nullopt;

    std::size_t L = levels.size();
    auto block = [&](std::size_t a, std::size_t b) {
        const auto& rs = rl[levels[a]];
        const auto& cs = cl[levels[b]];
        PolyMatrix out(rs.size(), std::vector<Polynomial>(cs.size(), Polynomial(nv)));
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) out[i][j] = m[rs[i]][cs[j]];
        return out;
    };
    // inverse of the constant diagonal blocks
    std::vector<PolyMatrix> dinv(L);
    for (std::size_t a = 0; a < L; ++a) {
        PolyMatrix d = block(a, a);
        RatMatrix q(d.size(), std::vector<Rational>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j) {
                if (!d[i][j].is_constant()) return std::nullopt;
                q[i][j] = d[i][j].constant_term();
            }
        auto qi = invert(q);
        if (!qi) return std::nullopt;
        dinv[a].assign(d.size(), std::vector<Polynomial>(d.size(), Polynomial(nv)));
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j) dinv[a][i][j] = Polynomial::constant(nv, (*qi)[i][j]);
    }
    // x[a][b]: rows from column level a of m, columns from row level b of m
    std::vector<std::vector<PolyMatrix>> x(L, std::vector<PolyMatrix>(L));
    for (std::size_t b = 0; b < L; ++b) {
        x[b][b] = dinv[b];
        for (std::size_t a = b + 1; a < L; ++a) {
            PolyMatrix acc;
            for (std::size_t l = b; l < a; ++l) {
                PolyMatrix t = multiply(block(a, l), x[l][b]);
                if (acc.empty())
                    acc = std::move(t);
                else
                    for (std::size_t i = 0; i < acc.size(); ++i)
                        for (std::size_t j = 0; j < acc[i].size(); ++j) acc[i][j] += t[i][j];
            }
            PolyMatrix y = multiply(dinv[a], acc);
            for (auto& row : y)
                for (auto& e : row) e = -e;
            x[a][b] = std::move(y);
        }
    }
    // scatter: inverse rows are indexed by m's columns, inverse columns by m's rows
    PolyMatrix inv(n, std::vector<Polynomial>(n, Polynomial(nv)));
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            const auto& cs = cl[levels[a]];
            const auto& rs = rl[levels[b]];
            for (std::size_t i = 0; i < cs.size(); ++i)
                for (std::size_t j = 0; j < rs.size(); ++j) inv[cs[i]][rs[j]] = x[a][b][i][j];
        }
    return inv;
}

}  // namespace gkm
