#ifndef VORTSYM_SUBSPACE_HPP
#define VORTSYM_SUBSPACE_HPP

#include "vortsym/matrix.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace vortsym {

// Subspace of Q^n held as a reduced-row-echelon basis with zero rows
// dropped. The basis is a canonical representative: two subspaces are equal
// iff their stored bases are componentwise equal, so operator== is exact
// subspace equality.
class Subspace {
public:
    // Zero subspace of the given ambient dimension.
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // Remainder of v after eliminating the pivot components; zero iff v is a
    // member.
    Vec reduce(Vec v) const;

    friend Subspace sum(const Subspace& a, const Subspace& b);
    // Intersection through the kernel of the stacked system
    // x^T A - y^T B = 0 over the two bases.
    friend Subspace intersect(const Subspace& a, const Subspace& b);

    bool operator==(const Subspace&) const = default;
    // Deterministic total order (dimension, then basis entries); used to keep
    // lattice enumerations canonical.
    std::strong_ordering operator<=>(const Subspace& other) const;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

}  // namespace vortsym

#endif
