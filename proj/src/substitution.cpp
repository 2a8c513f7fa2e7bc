#include "vortsym/substitution.hpp"

#include <stdexcept>
#include <utility>

namespace vortsym {

namespace {

constexpr std::array<Var, 3> kFiber{Var::x, Var::y, Var::psi};

bool affine_in_fiber(const Polynomial& p) {
    for (const auto& [e, c] : p.terms()) {
        if (e[1] + e[2] + e[3] > 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

AffineSubstitution AffineSubstitution::make(std::array<Polynomial, 4> rules) {
    const Polynomial& rt = rules[0];
    if (rt.depends_on(Var::x) || rt.depends_on(Var::y) || rt.depends_on(Var::psi)) {
        throw std::invalid_argument("substitution: t-rule must depend on t only");
    }
    if (rt.degree_in(Var::t) != 1) {
        throw std::invalid_argument("substitution: t-rule must be affine with nonzero slope");
    }
    for (Var v : kFiber) {
        if (!affine_in_fiber(rules[static_cast<int>(v)])) {
            throw std::invalid_argument("substitution: rule for " + std::string(var_name(v)) +
                                        " is not affine in (x, y, psi)");
        }
    }
    AffineSubstitution s(std::move(rules));
    if (s.linear_determinant().is_zero()) {
        throw std::invalid_argument("substitution: singular linear part");
    }
    return s;
}

AffineSubstitution AffineSubstitution::identity() {
    return AffineSubstitution(identity_rules());
}

Polynomial AffineSubstitution::linear_coeff(Var target, Var in) const {
    // Affinity in (x, y, psi) guarantees this is a polynomial in t alone.
    return rule(target).coefficient_of(in, 1);
}

Polynomial AffineSubstitution::translation(Var target) const {
    return rule(target)
        .coefficient_of(Var::x, 0)
        .coefficient_of(Var::y, 0)
        .coefficient_of(Var::psi, 0);
}

Polynomial AffineSubstitution::linear_determinant() const {
    std::array<std::array<Polynomial, 3>, 3> m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m[i][j] = linear_coeff(kFiber[i], kFiber[j]);
        }
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

AffineSubstitution AffineSubstitution::inverse() const {
    const Polynomial det = linear_determinant();
    if (det.degree() != 0 || det.is_zero()) {
        throw std::invalid_argument(
            "substitution: inverse requires a nonzero constant linear determinant");
    }
    const Rational det_c = det.coeff({0, 0, 0, 0});

    // Invert the t-rule: t = (t' - b) / a.
    const Rational a = rule(Var::t).coeff({1, 0, 0, 0});
    const Rational b = rule(Var::t).coeff({0, 0, 0, 0});
    const Polynomial t_inv = Polynomial::variable(Var::t) * (Rational(1) / a) +
                             Polynomial(-b / a);

    std::array<std::array<Polynomial, 3>, 3> m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m[i][j] = linear_coeff(kFiber[i], kFiber[j]);
        }
    }
    // Adjugate of the linear part; entries stay polynomial in t.
    std::array<std::array<Polynomial, 3>, 3> adj;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            // adj[j][i] = cofactor(i, j)
            adj[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    }

    std::array<Polynomial, 4> inv;
    inv[0] = t_inv;
    for (int i = 0; i < 3; ++i) {
        Polynomial acc;
        for (int j = 0; j < 3; ++j) {
            const Polynomial coeff = adj[i][j].substitute(Var::t, t_inv);
            const Polynomial offset = translation(kFiber[j]).substitute(Var::t, t_inv);
            acc += coeff * (Polynomial::variable(kFiber[j]) - offset);
        }
        inv[static_cast<int>(kFiber[i])] = acc * (Rational(1) / det_c);
    }
    return make(std::move(inv));
}

AffineSubstitution compose(const AffineSubstitution& outer, const AffineSubstitution& inner) {
    return AffineSubstitution::make(compose_rules(outer.rules(), inner.rules()));
}

std::array<Polynomial, 4> compose_rules(const std::array<Polynomial, 4>& outer,
                                        const std::array<Polynomial, 4>& inner) {
    std::array<Polynomial, 4> out;
    for (int i = 0; i < 4; ++i) {
        out[i] = outer[i].substitute(inner);
    }
    return out;
}

}  // namespace vortsym
