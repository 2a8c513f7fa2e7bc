#ifndef VORTSYM_LIE_ALGEBRA_HPP
#define VORTSYM_LIE_ALGEBRA_HPP

#include "vortsym/matrix.hpp"
#include "vortsym/subspace.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace vortsym {

// Sparse input form: [e_i, e_j] = sum_k c[k] e_k for i < j.
struct BracketEntry {
    std::size_t i;
    std::size_t j;
    Vec c;
};

// Finite-dimensional Lie algebra over Q given by structure constants.
// Construction validates antisymmetry and the Jacobi identity and reports
// the offending triple on failure. Immutable afterwards.
class LieAlgebra {
public:
    // Full table: c[i][j] is the coordinate vector of [e_i, e_j].
    LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> table);

    static LieAlgebra from_brackets(std::vector<std::string> labels,
                                    const std::vector<BracketEntry>& entries);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    Vec bracket(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& u, const Vec& v) const;
    // Span of all pairwise brackets of basis vectors of a and b.
    Subspace bracket(const Subspace& a, const Subspace& b) const;

    Matrix ad(const Vec& v) const;
    Matrix ad_basis(std::size_t i) const;

    Subspace full_space() const { return Subspace::full(dim_); }
    Subspace zero_space() const { return Subspace(dim_); }

    bool is_ideal(const Subspace& s) const;

    // Renders a coordinate vector as a combination of basis labels.
    std::string describe(const Vec& v) const;

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Rational> c_;

    void validate() const;
};

}  // namespace vortsym

#endif
