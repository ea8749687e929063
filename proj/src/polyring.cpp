#include "gkm/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gkm {

// ---- Monomial ----

Monomial Monomial::var(int i, int power) {
    if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range");
    if (power < 0 || power > 255) throw std::overflow_error("exponent out of range");
    Monomial m;
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        int s = e[i] + o.e[i];
        if (s > 255) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
    r.deg = static_cast<std::uint16_t>(deg - o.deg);
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    if (deg != o.deg) return deg < o.deg;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (e[i] != o.e[i]) return e[i] < o.e[i];
    return false;
}

// ---- Polynomial ----

Polynomial::Polynomial(int nvars) : n_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.t_.emplace_back(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(nvars);
    p.t_.emplace_back(Monomial::var(i), Rational(1));
    return p;
}

Polynomial Polynomial::term(int nvars, const Monomial& m, const Rational& c) {
    Polynomial p(nvars);
    for (int i = nvars; i < kMaxVars; ++i)
        if (m.e[i]) throw std::out_of_range("monomial uses a variable outside the ring");
    if (c != 0) p.t_.emplace_back(m, c);
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().first == t.first)
            p.t_.back().second += t.second;
        else {
            if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
            p.t_.push_back(std::move(t));
        }
    }
    if (!p.t_.empty() && p.t_.back().second == 0) p.t_.pop_back();
    return p;
}

void Polynomial::same_ring(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomials live in rings with different numbers of variables");
}

bool Polynomial::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.deg == 0); }

Rational Polynomial::constant_term() const {
    if (!t_.empty() && t_[0].first.deg == 0) return t_[0].second;
    return 0;
}

int Polynomial::degree() const { return t_.empty() ? kMinusInfinity : t_.back().first.deg; }

bool Polynomial::is_homogeneous() const {
    return t_.empty() || t_.front().first.deg == t_.back().first.deg;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial r(n_);
    for (const auto& t : t_)
        if (t.first.deg == d) r.t_.push_back(t);
    return r;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& a, const Monomial& b) { return a.first < b; });
    if (it != t_.end() && it->first == m) return it->second;
    return 0;
}

int Polynomial::max_exponent(int var) const {
    int m = 0;
    for (const auto& t : t_) m = std::max(m, int(t.first.e[var]));
    return m;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

namespace {

template <bool Subtract>
std::vector<Polynomial::Term> merge_add(const std::vector<Polynomial::Term>& a,
                                        const std::vector<Polynomial::Term>& b) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, Subtract ? Rational(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rational c = Subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    same_ring(o);
    if (o.t_.empty()) return *this;
    t_ = merge_add<false>(t_, o.t_);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    same_ring(o);
    if (o.t_.empty()) return *this;
    t_ = merge_add<true>(t_, o.t_);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.same_ring(b);
    Polynomial r(a.n_);
    if (a.t_.empty() || b.t_.empty()) return r;
    const auto& small = a.t_.size() <= b.t_.size() ? a.t_ : b.t_;
    const auto& big = a.t_.size() <= b.t_.size() ? b.t_ : a.t_;
    if (small.size() == 1) {
        r.t_.reserve(big.size());
        for (const auto& t : big) r.t_.emplace_back(t.first * small[0].first, t.second * small[0].second);
        return r;
    }
    // k-way merge: row i is small[i] * big, already sorted because the order is
    // compatible with multiplication.
    using Entry = std::pair<Monomial, std::pair<std::uint32_t, std::uint32_t>>;
    auto cmp = [](const Entry& x, const Entry& y) { return y.first < x.first; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    for (std::uint32_t i = 0; i < small.size(); ++i)
        heap.push({small[i].first * big[0].first, {i, 0u}});
    Rational acc;
    Monomial cur;
    bool have = false;
    while (!heap.empty()) {
        Entry top = heap.top();
        heap.pop();
        auto [i, j] = top.second;
        if (have && top.first != cur) {
            if (acc != 0) r.t_.emplace_back(cur, acc);
            have = false;
        }
        if (!have) {
            cur = top.first;
            acc = 0;
            have = true;
        }
        acc += small[i].second * big[j].second;
        if (j + 1 < big.size()) heap.push({small[i].first * big[j + 1].first, {i, j + 1}});
    }
    if (have && acc != 0) r.t_.emplace_back(cur, acc);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& t : t_) t.second *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (c == 0) throw std::domain_error("division by zero");
    for (auto& t : t_) t.second /= c;
    return *this;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (n_ != o.n_ || t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].first != o.t_[i].first || t_[i].second != o.t_[i].second) return false;
    return true;
}

std::string Polynomial::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Rational& c = it->second;
        const Monomial& m = it->first;
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        Rational a = abs(c);
        bool first = true;
        if (a != 1 || m.deg == 0) {
            s += a.get_str();
            first = false;
        }
        for (int i = 0; i < n_; ++i) {
            if (!m.e[i]) continue;
            if (!first) s += "*";
            s += "a" + std::to_string(i + 1);
            if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
            first = false;
        }
    }
    return s;
}

namespace {

struct Parser {
    const std::string& s;
    int n;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse polynomial '" + s + "': " + why);
    }
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    std::string digits() {
        skip();
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i) fail("expected digits");
        return s.substr(b, i - b);
    }
    // factor := number ['/' number] | 'a' index ['^' number]
    void factor(Rational& c, Monomial& m) {
        skip();
        if (i < s.size() && (s[i] == 'a' || s[i] == 'A')) {
            ++i;
            int v = std::stoi(digits());
            if (v < 1 || v > n) fail("variable a" + std::to_string(v) + " outside the ring");
            int p = 1;
            if (peek('^')) {
                ++i;
                p = std::stoi(digits());
            }
            m = m * Monomial::var(v - 1, p);
        } else {
            std::string num = digits();
            std::string den = "1";
            if (peek('/')) {
                ++i;
                den = digits();
            }
            Rational q(num + "/" + den);
            q.canonicalize();
            c *= q;
        }
    }
    Polynomial parse() {
        std::vector<Polynomial::Term> terms;
        skip();
        if (i == s.size()) fail("empty input");
        bool first = true;
        while (true) {
            skip();
            if (i == s.size()) break;
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                if (s[i] == '-') sign = -1;
                ++i;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Rational c(sign);
            Monomial m;
            factor(c, m);
            while (peek('*')) {
                ++i;
                factor(c, m);
            }
            terms.emplace_back(m, c);
            first = false;
        }
        return Polynomial::from_terms(n, std::move(terms));
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars) {
    Parser p{text, nvars};
    return p.parse();
}

Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial r = Polynomial::constant(p.nvars(), 1);
    Polynomial b = p;
    while (k) {
        if (k & 1u) r *= b;
        k >>= 1u;
        if (k) b = b * b;
    }
    return r;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("evaluation point has the wrong length");
    std::vector<std::vector<Rational>> powers(p.nvars());
    for (int v = 0; v < p.nvars(); ++v) {
        int m = p.max_exponent(v);
        powers[v].resize(m + 1);
        powers[v][0] = 1;
        for (int e = 1; e <= m; ++e) powers[v][e] = powers[v][e - 1] * point[v];
    }
    Rational s = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int v = 0; v < p.nvars(); ++v)
            if (m.e[v]) t *= powers[v][m.e[v]];
        s += t;
    }
    return s;
}

Polynomial sq_map(const Polynomial& p) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) terms.emplace_back(m * m, c);
    // doubling exponents preserves the order, so from_terms only copies
    return Polynomial::from_terms(p.nvars(), std::move(terms));
}

std::vector<Polynomial> split_by_var(const Polynomial& p, int var) {
    int top = p.max_exponent(var);
    std::vector<std::vector<Polynomial::Term>> parts(top + 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial r = m;
        int e = r.e[var];
        r.e[var] = 0;
        r.deg = static_cast<std::uint16_t>(r.deg - e);
        parts[e].emplace_back(r, c);
    }
    std::vector<Polynomial> out;
    out.reserve(parts.size());
    for (auto& part : parts) out.push_back(Polynomial::from_terms(p.nvars(), std::move(part)));
    return out;
}

Polynomial substitute(const Polynomial& p, int var, const Polynomial& value) {
    if (value.max_exponent(var) != 0) throw std::invalid_argument("substituted value involves the variable");
    std::vector<Polynomial> parts = split_by_var(p, var);
    Polynomial r(p.nvars());
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        r = r * value;
        r += *it;
    }
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.nvars() != d.nvars()) throw std::invalid_argument("polynomials live in rings with different numbers of variables");
    const auto& [lm, lc] = d.leading();
    std::map<Monomial, Rational> rem;
    for (const auto& t : p.terms()) rem.insert(t);
    std::vector<Polynomial::Term> q;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        if (!lm.divides(top->first)) return std::nullopt;
        Monomial qm = top->first / lm;
        Rational qc = top->second / lc;
        for (const auto& [m, c] : d.terms()) {
            Monomial pm = m * qm;
            auto [it, inserted] = rem.try_emplace(pm, 0);
            it->second -= c * qc;
            if (it->second == 0) rem.erase(it);
        }
        q.emplace_back(qm, qc);
    }
    return Polynomial::from_terms(p.nvars(), std::move(q));
}

std::vector<Polynomial> elementary_symmetric(const std::vector<Polynomial>& xs, int nvars) {
    std::vector<Polynomial> e(xs.size() + 1, Polynomial(nvars));
    e[0] = Polynomial::constant(nvars, 1);
    for (std::size_t m = 0; m < xs.size(); ++m)
        for (std::size_t l = m + 1; l >= 1; --l) e[l] += e[l - 1] * xs[m];
    return e;
}

// ---- LinearForm ----

LinearForm::LinearForm(std::vector<long> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty() || static_cast<int>(c_.size()) > kMaxVars)
        throw std::invalid_argument("linear form has an unsupported number of variables");
    int l = lead();
    if (l < 0) throw std::invalid_argument("linear form is zero");
    if (c_[l] < 0) {
        for (auto& x : c_) x = -x;
        flip_ = -1;
    }
}

LinearForm LinearForm::unit(int nvars, int i) {
    std::vector<long> c(nvars, 0);
    c.at(i) = 1;
    return LinearForm(std::move(c));
}

LinearForm LinearForm::diff(int nvars, int j, int i) {
    std::vector<long> c(nvars, 0);
    c.at(j) += 1;
    c.at(i) -= 1;
    return LinearForm(std::move(c));
}

LinearForm LinearForm::sum(int nvars, int j, int i) {
    std::vector<long> c(nvars, 0);
    c.at(j) += 1;
    c.at(i) += 1;
    return LinearForm(std::move(c));
}

int LinearForm::lead() const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        if (c_[i] != 0) return i;
    return -1;
}

bool LinearForm::proportional(const LinearForm& o) const {
    if (c_.size() != o.c_.size()) return false;
    // rank of the 2 x n matrix is 1 iff all 2 x 2 minors vanish
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = i + 1; j < c_.size(); ++j)
            if (c_[i] * o.c_[j] - c_[j] * o.c_[i] != 0) return false;
    return true;
}

Polynomial LinearForm::poly() const {
    std::vector<Polynomial::Term> t;
    for (int i = 0; i < nvars(); ++i)
        if (c_[i]) t.emplace_back(Monomial::var(i), Rational(c_[i]));
    return Polynomial::from_terms(nvars(), std::move(t));
}

std::string LinearForm::str() const { return poly().str(); }

namespace {

// value of the lead variable on the hyperplane w = 0
Polynomial solved_lead(const LinearForm& w) {
    int v = w.lead();
    std::vector<Polynomial::Term> t;
    for (int i = 0; i < w.nvars(); ++i)
        if (i != v && w[i]) t.emplace_back(Monomial::var(i), Rational(-w[i], w[v]));
    for (auto& x : t) x.second.canonicalize();
    return Polynomial::from_terms(w.nvars(), std::move(t));
}

}  // namespace

Polynomial reduce_mod_linear(const Polynomial& p, const LinearForm& w) {
    if (p.nvars() != w.nvars()) throw std::invalid_argument("linear form and polynomial differ in variables");
    if (p.is_zero()) return p;
    return substitute(p, w.lead(), solved_lead(w));
}

bool divisible_by_linear(const Polynomial& p, const LinearForm& w) { return reduce_mod_linear(p, w).is_zero(); }

Polynomial quotient_by_linear(const Polynomial& p, const LinearForm& w) {
    if (p.nvars() != w.nvars()) throw std::invalid_argument("linear form and polynomial differ in variables");
    int n = p.nvars();
    if (p.is_zero()) return p;
    int v = w.lead();
    Rational c(w[v]);
    // w = c*x + R with R free of x
    std::vector<Polynomial::Term> rt;
    for (int i = 0; i < n; ++i)
        if (i != v && w[i]) rt.emplace_back(Monomial::var(i), Rational(w[i]));
    Polynomial R = Polynomial::from_terms(n, std::move(rt));
    std::vector<Polynomial> parts = split_by_var(p, v);
    int top = static_cast<int>(parts.size()) - 1;
    if (top == 0) throw std::domain_error("polynomial " + p.str() + " is not divisible by " + w.str());
    std::vector<Polynomial> q(top, Polynomial(n));
    q[top - 1] = parts[top];
    q[top - 1] /= c;
    for (int e = top - 1; e >= 1; --e) {
        q[e - 1] = parts[e] - R * q[e];
        q[e - 1] /= c;
    }
    if (parts[0] != R * q[0]) throw std::domain_error("polynomial " + p.str() + " is not divisible by " + w.str());
    Polynomial r(n);
    Polynomial x = Polynomial::variable(n, v);
    for (int e = top - 1; e >= 0; --e) {
        r = r * x;
        r += q[e];
    }
    return r;
}

// ---- FactoredPoly ----

void FactoredPoly::mul(const LinearForm& w, int times) {
    if (times == 0) return;
    if (w.sign_flip() < 0 && (times & 1)) unit = -unit;
    int& m = factors[w];
    m += times;
    if (m == 0) factors.erase(w);
}

FactoredPoly& FactoredPoly::operator*=(const FactoredPoly& o) {
    unit *= o.unit;
    for (const auto& [w, m] : o.factors) factors[w] += m;
    return *this;
}

int FactoredPoly::degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.second;
    return d;
}

Polynomial FactoredPoly::expand(int nvars) const {
    Polynomial r = Polynomial::constant(nvars, unit);
    for (const auto& [w, m] : factors) r *= pow(w.poly(), m);
    return r;
}

Polynomial divide_by_factored(const Polynomial& p, const FactoredPoly& d) {
    if (d.unit == 0) throw std::domain_error("division by zero");
    Polynomial r = p;
    for (const auto& [w, m] : d.factors)
        for (int i = 0; i < m; ++i) r = quotient_by_linear(r, w);
    r /= d.unit;
    return r;
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), rest_(Polynomial::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(Polynomial numerator, const FactoredPoly& denominator)
    : num_(std::move(numerator)), rest_(Polynomial::constant(num_.nvars(), 1)) {
    if (denominator.unit == 0) throw std::domain_error("zero denominator");
    num_ /= denominator.unit;
    for (const auto& [w, m] : denominator.factors) {
        if (w.nvars() != num_.nvars()) throw std::invalid_argument("denominator factor lives in another ring");
        if (m < 0) throw std::invalid_argument("negative multiplicity in denominator");
        if (m) lin_[w] += m;
    }
    simplify();
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), rest_(std::move(denominator)) {
    if (rest_.is_zero()) throw std::domain_error("zero denominator");
    if (rest_.nvars() != num_.nvars()) throw std::invalid_argument("numerator and denominator differ in variables");
    if (rest_.is_constant()) {
        num_ /= rest_.constant_term();
        rest_ = Polynomial::constant(num_.nvars(), 1);
    } else {
        // keep the stored remainder monic in its leading term
        Rational lc = rest_.leading().second;
        rest_ /= lc;
        num_ /= lc;
        simplify();
    }
}

Polynomial RationalFunction::denominator() const {
    Polynomial d = rest_;
    for (const auto& [w, m] : lin_) d *= pow(w.poly(), m);
    return d;
}

void RationalFunction::simplify() {
    if (num_.is_zero()) {
        lin_.clear();
        rest_ = Polynomial::constant(num_.nvars(), 1);
        return;
    }
    for (auto it = lin_.begin(); it != lin_.end();) {
        while (it->second > 0 && divisible_by_linear(num_, it->first)) {
            num_ = quotient_by_linear(num_, it->first);
            --it->second;
        }
        it = it->second == 0 ? lin_.erase(it) : std::next(it);
    }
    if (!rest_.is_constant()) {
        if (auto q = divide_exact(num_, rest_)) {
            num_ = std::move(*q);
            rest_ = Polynomial::constant(num_.nvars(), 1);
        }
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.nvars() != nvars()) throw std::invalid_argument("rational functions differ in variables");
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) {
        *this = o;
        return *this;
    }
    Polynomial a = num_;
    Polynomial b = o.num_;
    std::map<LinearForm, int> lcm = lin_;
    for (const auto& [w, m] : o.lin_) {
        int& have = lcm[w];
        have = std::max(have, m);
    }
    for (const auto& [w, m] : lcm) {
        auto ia = lin_.find(w);
        int ma = ia == lin_.end() ? 0 : ia->second;
        auto ib = o.lin_.find(w);
        int mb = ib == o.lin_.end() ? 0 : ib->second;
        if (m > ma) a *= pow(w.poly(), m - ma);
        if (m > mb) b *= pow(w.poly(), m - mb);
    }
    if (rest_ == o.rest_) {
        num_ = a + b;
    } else if (o.rest_.is_constant()) {
        num_ = a + b * rest_;
    } else if (rest_.is_constant()) {
        num_ = a * o.rest_ + b;
        rest_ = o.rest_;
    } else {
        num_ = a * o.rest_ + b * rest_;
        rest_ *= o.rest_;
    }
    lin_ = std::move(lcm);
    simplify();
    return *this;
}

bool RationalFunction::is_polynomial() const { return lin_.empty() && rest_.is_constant(); }

Polynomial RationalFunction::to_polynomial() const {
    if (!is_polynomial())
        throw std::domain_error("rational function is not a polynomial: (" + num_.str() + ")/(" +
                                denominator().str() + ")");
    return num_;
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
    Rational d = gkm::evaluate(rest_, point);
    for (const auto& [w, m] : lin_) {
        Rational x = gkm::evaluate(w.poly(), point);
        for (int i = 0; i < m; ++i) d *= x;
    }
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return gkm::evaluate(num_, point) / d;
}

RationalFunction ratfn_sum(const std::vector<RationalFunction>& terms) {
    if (terms.empty()) throw std::invalid_argument("ratfn_sum needs at least one term to fix the ring");
    // pairwise tree reduction keeps operand sizes balanced
    std::vector<RationalFunction> level = terms;
    while (level.size() > 1) {
        std::vector<RationalFunction> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            level[i] += level[i + 1];
            next.push_back(std::move(level[i]));
        }
        if (level.size() % 2) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return level[0];
}

Polynomial ratfn_to_poly(const RationalFunction& r) { return r.to_polynomial(); }

}  // namespace gkm
