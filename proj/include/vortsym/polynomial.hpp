#ifndef VORTSYM_POLYNOMIAL_HPP
#define VORTSYM_POLYNOMIAL_HPP

#include "vortsym/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>

namespace vortsym {

// The four coordinates of the vorticity problem, in canonical order.
enum class Var : int { t = 0, x = 1, y = 2, psi = 3 };

inline constexpr std::array<Var, 4> kAllVars{Var::t, Var::x, Var::y, Var::psi};

const char* var_name(Var v);

using Exponents = std::array<unsigned, 4>;

// Graded lexicographic monomial order: total degree first, ties broken by
// the exponent tuple in variable order t, x, y, psi.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact multivariate polynomial over Q in (t, x, y, psi). Canonical form: no
// zero coefficients are stored, so operator== is exact polynomial equality.
// Values are immutable in spirit; mutating operators return-by-rebuild.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Polynomial() = default;  // zero
    Polynomial(const Rational& constant);
    Polynomial(int constant) : Polynomial(Rational(constant)) {}

    static Polynomial variable(Var v);
    static Polynomial monomial(const Exponents& e, const Rational& coeff);
    // coeff * t^k
    static Polynomial t_power(unsigned k, const Rational& coeff = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& scalar) const;
    friend Polynomial operator*(const Rational& scalar, const Polynomial& p);
    bool operator==(const Polynomial&) const = default;

    Polynomial diff(Var v) const;

    unsigned degree() const;  // total degree; 0 for the zero polynomial
    unsigned degree_in(Var v) const;
    bool depends_on(Var v) const;

    // Simultaneous substitution of every variable.
    Polynomial substitute(const std::array<Polynomial, 4>& rules) const;
    // Replace a single variable, leave the others alone.
    Polynomial substitute(Var v, const Polynomial& replacement) const;

    Rational eval(const std::array<Rational, 4>& point) const;

    // Coefficient of v^k, a polynomial in the remaining variables.
    Polynomial coefficient_of(Var v, unsigned k) const;

    // Canonical rendering, leading monomial first.
    std::string str() const;

private:
    TermMap terms_;

    void add_term(const Exponents& e, const Rational& c);
};

// Rules that leave every variable in place.
std::array<Polynomial, 4> identity_rules();

}  // namespace vortsym

#endif
