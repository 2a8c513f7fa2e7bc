#include "vortsym/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace vortsym {

const char* var_name(Var v) {
    switch (v) {
        case Var::t: return "t";
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::psi: return "psi";
    }
    return "?";
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = a[0] + a[1] + a[2] + a[3];
    const unsigned db = b[0] + b[1] + b[2] + b[3];
    if (da != db) {
        return da < db;
    }
    return a < b;
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) {
        terms_.emplace(Exponents{0, 0, 0, 0}, constant);
    }
}

Polynomial Polynomial::variable(Var v) {
    Exponents e{0, 0, 0, 0};
    e[static_cast<int>(v)] = 1;
    return monomial(e, Rational(1));
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& coeff) {
    Polynomial p;
    if (coeff != 0) {
        p.terms_.emplace(e, coeff);
    }
    return p;
}

Polynomial Polynomial::t_power(unsigned k, const Rational& coeff) {
    return monomial(Exponents{k, 0, 0, 0}, coeff);
}

Rational Polynomial::coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) {
        return;
    }
    const auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    out += rhs;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    out -= rhs;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e, -c);
    }
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    Polynomial out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            out.add_term(Exponents{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]},
                         ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial out;
    if (scalar == 0) {
        return out;
    }
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e, c * scalar);
    }
    return out;
}

Polynomial operator*(const Rational& scalar, const Polynomial& p) {
    return p * scalar;
}

Polynomial Polynomial::diff(Var v) const {
    const int k = static_cast<int>(v);
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) {
            continue;
        }
        Exponents d = e;
        --d[k];
        out.add_term(d, c * Rational(e[k]));
    }
    return out;
}

unsigned Polynomial::degree() const {
    if (terms_.empty()) {
        return 0;
    }
    const Exponents& e = terms_.rbegin()->first;  // grlex: last term has max degree
    return e[0] + e[1] + e[2] + e[3];
}

unsigned Polynomial::degree_in(Var v) const {
    const int k = static_cast<int>(v);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[k]);
    }
    return d;
}

bool Polynomial::depends_on(Var v) const {
    const int k = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        if (e[k] > 0) {
            return true;
        }
    }
    return false;
}

Polynomial Polynomial::substitute(const std::array<Polynomial, 4>& rules) const {
    // Cache powers of each rule up to the largest exponent used.
    std::array<std::vector<Polynomial>, 4> powers;
    for (int k = 0; k < 4; ++k) {
        powers[k].push_back(Polynomial(Rational(1)));
    }
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        Polynomial term{c};
        for (int k = 0; k < 4; ++k) {
            while (powers[k].size() <= e[k]) {
                powers[k].push_back(powers[k].back() * rules[k]);
            }
            if (e[k] > 0) {
                term = term * powers[k][e[k]];
            }
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& replacement) const {
    std::array<Polynomial, 4> rules = identity_rules();
    rules[static_cast<int>(v)] = replacement;
    return substitute(rules);
}

Rational Polynomial::eval(const std::array<Rational, 4>& point) const {
    Rational out;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int k = 0; k < 4; ++k) {
            for (unsigned i = 0; i < e[k]; ++i) {
                term *= point[k];
            }
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::coefficient_of(Var v, unsigned k) const {
    const int idx = static_cast<int>(v);
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) {
            continue;
        }
        Exponents r = e;
        r[idx] = 0;
        out.add_term(r, c);
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool leading = out.empty();
        Rational mag = c;
        if (c < 0) {
            mag = -c;
            out += leading ? "-" : " - ";
        } else if (!leading) {
            out += " + ";
        }
        std::string mono;
        for (int k = 0; k < 4; ++k) {
            if (e[k] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += var_name(static_cast<Var>(k));
            if (e[k] > 1) {
                mono += '^';
                mono += std::to_string(e[k]);
            }
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag);
            out += '*';
            out += mono;
        }
    }
    return out;
}

std::array<Polynomial, 4> identity_rules() {
    return {Polynomial::variable(Var::t), Polynomial::variable(Var::x),
            Polynomial::variable(Var::y), Polynomial::variable(Var::psi)};
}

}  // namespace vortsym
