#ifndef VORTSYM_SUBSTITUTION_HPP
#define VORTSYM_SUBSTITUTION_HPP

#include "vortsym/polynomial.hpp"

#include <array>

namespace vortsym {

// Point transformation of (t, x, y, psi) in triangular affine form: the
// t-rule is affine in t alone with nonzero slope, the remaining rules are
// affine in (x, y, psi) with coefficients polynomial in t, and the linear
// part has a determinant that is not identically zero. Rules are stored as
// the image coordinates expressed in the source coordinates, so apply()
// computes p ∘ map for a polynomial p given in image coordinates.
class AffineSubstitution {
public:
    static AffineSubstitution make(std::array<Polynomial, 4> rules);
    static AffineSubstitution identity();

    const Polynomial& rule(Var v) const { return rules_[static_cast<int>(v)]; }
    const std::array<Polynomial, 4>& rules() const { return rules_; }

    Polynomial apply(const Polynomial& p) const { return p.substitute(rules_); }

    // Coefficient (a t-polynomial) of variable `in` inside the rule for
    // `target`; `in` must be x, y or psi.
    Polynomial linear_coeff(Var target, Var in) const;
    // The (x, y, psi)-free part of the rule for `target`, a t-polynomial.
    Polynomial translation(Var target) const;

    // Determinant of the 3x3 linear part over (x, y, psi); a t-polynomial.
    Polynomial linear_determinant() const;

    // Exact inverse. Requires the linear-part determinant to be a nonzero
    // constant; throws std::invalid_argument otherwise.
    AffineSubstitution inverse() const;

    bool operator==(const AffineSubstitution&) const = default;

private:
    explicit AffineSubstitution(std::array<Polynomial, 4> rules) : rules_(std::move(rules)) {}

    std::array<Polynomial, 4> rules_;
};

// Point-map composition outer ∘ inner: each rule of outer rewritten through
// the rules of inner.
AffineSubstitution compose(const AffineSubstitution& outer, const AffineSubstitution& inner);

// Same composition on raw rule arrays; used where intermediate maps are not
// affine (e.g. conjugation by a cubic shift) but the composite is.
std::array<Polynomial, 4> compose_rules(const std::array<Polynomial, 4>& outer,
                                        const std::array<Polynomial, 4>& inner);

}  // namespace vortsym

#endif
