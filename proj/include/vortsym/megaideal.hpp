#ifndef VORTSYM_MEGAIDEAL_HPP
#define VORTSYM_MEGAIDEAL_HPP

#include "vortsym/series.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace vortsym {

struct LabeledSubspace {
    std::string label;
    Subspace space;
};

// Provable megaideals of an algebra: the improper ones, every term of the
// derived, lower and upper central series, the radical and nilradical, the
// same constructions applied recursively to those seeds, and the closure of
// the whole collection under sum, intersection and bracket. The closure is a
// set of provable megaideals only; no claim is made that it exhausts all
// megaideals of the algebra.
struct MegaidealLattice {
    std::vector<LabeledSubspace> generators;        // seeds with provenance labels
    std::vector<Subspace> closure;                  // deduplicated, canonically sorted
    std::vector<std::vector<std::string>> member_labels;  // seed labels per member
    std::vector<std::pair<std::size_t, std::size_t>> inclusion_order;  // i strictly inside j
};

struct MegaidealOptions {
    // 1 = series/radical seeds of g only; 2 adds the same constructions on
    // each proper seed (megaideals of megaideals).
    int recursion_depth = 2;
};

MegaidealLattice megaideal_closure(const LieAlgebra& g, const MegaidealOptions& options = {});

// True when one more round of sum/intersection/bracket adds no member.
bool closure_is_fixed_point(const LieAlgebra& g, const MegaidealLattice& lattice);

}  // namespace vortsym

#endif
