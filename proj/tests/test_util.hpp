#ifndef VORTSYM_TEST_UTIL_HPP
#define VORTSYM_TEST_UTIL_HPP

#include "vortsym/polynomial.hpp"
#include "vortsym/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace vortsym::testutil {

// mt19937_64 with hand-rolled draws keeps streams identical across standard
// library implementations.
using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational rand_rational(Rng& rng, std::int64_t max_abs_num = 9,
                              std::int64_t max_den = 4) {
    return make_rational(Int(rand_int(rng, -max_abs_num, max_abs_num)),
                         Int(rand_int(rng, 1, max_den)));
}

inline Rational rand_nonzero_rational(Rng& rng, std::int64_t max_abs_num = 9,
                                      std::int64_t max_den = 4) {
    while (true) {
        Rational r = rand_rational(rng, max_abs_num, max_den);
        if (r != 0) {
            return r;
        }
    }
}

inline std::vector<Rational> rand_vector(Rng& rng, std::size_t n) {
    std::vector<Rational> v(n);
    for (auto& e : v) {
        e = rand_rational(rng, 5, 3);
    }
    return v;
}

inline Polynomial rand_t_poly(Rng& rng, unsigned max_degree) {
    Polynomial p;
    for (unsigned k = 0; k <= max_degree; ++k) {
        p += Polynomial::t_power(k, rand_rational(rng, 5, 3));
    }
    return p;
}

// Random polynomial in (t, x, y): a handful of monomials of bounded total
// degree.
inline Polynomial rand_stream_function(Rng& rng, unsigned max_degree = 5,
                                       unsigned n_terms = 10) {
    Polynomial p;
    for (unsigned i = 0; i < n_terms; ++i) {
        const unsigned a = static_cast<unsigned>(rand_int(rng, 0, max_degree));
        const unsigned b = static_cast<unsigned>(rand_int(rng, 0, max_degree - a));
        const unsigned c = static_cast<unsigned>(rand_int(rng, 0, max_degree - a - b));
        p += Polynomial::monomial({a, b, c, 0}, rand_rational(rng, 5, 3));
    }
    return p;
}

// Random polynomial in all four variables, for ring-axiom checks.
inline Polynomial rand_poly4(Rng& rng, unsigned max_degree = 3, unsigned n_terms = 6) {
    Polynomial p;
    for (unsigned i = 0; i < n_terms; ++i) {
        Exponents e{};
        unsigned left = max_degree;
        for (int k = 0; k < 4; ++k) {
            e[k] = static_cast<unsigned>(rand_int(rng, 0, left));
            left -= e[k];
        }
        p += Polynomial::monomial(e, rand_rational(rng, 5, 3));
    }
    return p;
}

}  // namespace vortsym::testutil

#endif
