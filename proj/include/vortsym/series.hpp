#ifndef VORTSYM_SERIES_HPP
#define VORTSYM_SERIES_HPP

#include "vortsym/lie_algebra.hpp"

#include <vector>

namespace vortsym {

enum class SeriesKind { derived, lower_central, upper_central };

const char* series_name(SeriesKind k);

// Chain iterated until it stops changing. Derived and lower central chains
// descend starting from the whole algebra; the upper central chain ascends
// starting from 0. `stabilized` records that the last term is a fixed point
// of the defining step (always reached in finite dimension).
struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace> terms;
    bool stabilized = false;
};

SeriesReport derived_series(const LieAlgebra& g);
SeriesReport lower_central_series(const LieAlgebra& g);
SeriesReport upper_central_series(const LieAlgebra& g);

// Kernel of the joint adjoint map x -> ([x, e_1], ..., [x, e_n]).
Subspace center(const LieAlgebra& g);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

enum class IdealNilpotency { not_an_ideal, nilpotent, not_nilpotent };
// Nilpotency of a subspace required to be an ideal; a failed ideal check is
// reported distinctly instead of being conflated with non-nilpotency.
IdealNilpotency ideal_nilpotency(const LieAlgebra& g, const Subspace& candidate);

// K[i][j] = trace(ad e_i ∘ ad e_j).
Matrix killing_form(const LieAlgebra& g);

// Maximal solvable ideal, computed as the Killing-orthogonal complement of
// the derived algebra. Verifies its own postcondition (solvable ideal) and
// throws std::logic_error on violation.
Subspace radical(const LieAlgebra& g);

// Maximal nilpotent ideal. Steps: take the radical r; build the associative
// matrix algebra generated by ad r; cut out the trace-form radical of that
// algebra; pull back to {x in r : ad x in the trace radical}. Valid over Q
// (characteristic 0). Postconditions (ideal, nilpotent, basis-direction
// maximality) are asserted and violations throw std::logic_error.
Subspace nilradical(const LieAlgebra& g);

// Smallest ideal of g containing the seed.
Subspace ideal_closure(const LieAlgebra& g, const Subspace& seed);

// A bracket-closed subspace viewed as a Lie algebra in its own right,
// with maps back to ambient coordinates.
struct SubalgebraView {
    LieAlgebra algebra;
    std::vector<Vec> basis;  // rows, ambient coordinates

    Vec to_ambient(const Vec& local) const;
    Subspace to_ambient(const Subspace& local) const;
};

// Throws std::invalid_argument when the subspace is not closed under the
// bracket.
SubalgebraView restrict_to(const LieAlgebra& g, const Subspace& closed);

}  // namespace vortsym

#endif
