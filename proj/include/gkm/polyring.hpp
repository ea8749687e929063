#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkm {

using Rational = mpq_class;

inline constexpr int kMaxVars = 16;

// Exponent vector. Ordered by total degree, then by the exponent of the
// highest-index variable downwards, so a2 > a1 and a1*a2 > a1^2.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;

    static Monomial var(int i, int power = 1);

    int operator[](int i) const { return e[i]; }
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires divides

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const;
};

class LinearForm;

class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    explicit Polynomial(int nvars = 0);
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int i);
    static Polynomial term(int nvars, const Monomial& m, const Rational& c);
    static Polynomial parse(const std::string& text, int nvars);

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int degree() const;
    bool is_homogeneous() const;
    Polynomial homogeneous_part(int d) const;
    Rational coefficient(const Monomial& m) const;
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    const Term& leading() const { return t_.back(); }
    int max_exponent(int var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

    // Builds from terms in any order, merging duplicates and dropping zeros.
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

private:
    void same_ring(const Polynomial& o) const;
    int n_;
    std::vector<Term> t_;  // ascending monomial order, no zero coefficients
};

Polynomial pow(const Polynomial& p, unsigned k);
Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);
Polynomial sq_map(const Polynomial& p);
// Replaces variable `var` by `value`, which must not involve `var`.
Polynomial substitute(const Polynomial& p, int var, const Polynomial& value);
// p / d when d divides p exactly.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);
// Splits p by powers of `var`; entry e holds the coefficient of var^e.
std::vector<Polynomial> split_by_var(const Polynomial& p, int var);

// Integer linear form sum c_i a_i, stored up to sign: the coefficient of the
// highest-index variable present is positive, so a2-a1 rather than a1-a2.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(std::vector<long> coeffs);

    static LinearForm unit(int nvars, int i);
    static LinearForm diff(int nvars, int j, int i);  // a_j - a_i
    static LinearForm sum(int nvars, int j, int i);   // a_j + a_i

    int nvars() const { return static_cast<int>(c_.size()); }
    const std::vector<long>& coeffs() const { return c_; }
    long operator[](int i) const { return c_[i]; }
    int lead() const;  // index of the eliminated variable
    // -1 when the input to the constructor had to be negated.
    int sign_flip() const { return flip_; }
    bool proportional(const LinearForm& o) const;
    Polynomial poly() const;
    std::string str() const;

    bool operator==(const LinearForm& o) const { return c_ == o.c_; }
    bool operator!=(const LinearForm& o) const { return c_ != o.c_; }
    bool operator<(const LinearForm& o) const { return c_ < o.c_; }

private:
    std::vector<long> c_;
    int flip_ = 1;
};

// p restricted to the hyperplane w = 0, written without the lead variable of w
Polynomial reduce_mod_linear(const Polynomial& p, const LinearForm& w);
bool divisible_by_linear(const Polynomial& p, const LinearForm& w);
Polynomial quotient_by_linear(const Polynomial& p, const LinearForm& w);

// unit * prod(form^mult); the shape of every localized Euler class.
struct FactoredPoly {
    Rational unit = 1;
    std::map<LinearForm, int> factors;

    void mul(const LinearForm& w, int times = 1);
    FactoredPoly& operator*=(const FactoredPoly& o);
    int degree() const;
    Polynomial expand(int nvars) const;
};

// Divides p by every factor of d; throws if some division is not exact.
Polynomial divide_by_factored(const Polynomial& p, const FactoredPoly& d);

// numerator / (prod of linear factors * rest). Constants are folded into
// the numerator. `rest` is 1 unless a non-factored denominator was given.
class RationalFunction {
public:
    explicit RationalFunction(Polynomial numerator);
    RationalFunction(Polynomial numerator, const FactoredPoly& denominator);
    RationalFunction(Polynomial numerator, Polynomial denominator);

    const Polynomial& numerator() const { return num_; }
    Polynomial denominator() const;
    const std::map<LinearForm, int>& linear_factors() const { return lin_; }
    int nvars() const { return num_.nvars(); }

    RationalFunction& operator+=(const RationalFunction& o);
    void simplify();
    bool is_polynomial() const;
    Polynomial to_polynomial() const;  // throws unless is_polynomial()
    Rational evaluate(const std::vector<Rational>& point) const;

private:
    Polynomial num_;
    std::map<LinearForm, int> lin_;
    Polynomial rest_;
};

RationalFunction ratfn_sum(const std::vector<RationalFunction>& terms);
Polynomial ratfn_to_poly(const RationalFunction& r);

// Elementary symmetric polynomials e_0..e_m of the given polynomials.
std::vector<Polynomial> elementary_symmetric(const std::vector<Polynomial>& xs, int nvars);

}  // namespace gkm
