#pragma once

#include "cyclic/lie_algebra.hpp"
#include "cyclic/subspace.hpp"

namespace cyclic {

/// {v : [v, g] = 0}, the nullspace of the stacked ad-action constraints.
Subspace center(const LieAlgebra& g);

/// {v : [v, s] = 0 for every s in the subspace}.
Subspace centralizer(const LieAlgebra& g, const Subspace& s);

/// Span of the pairwise brackets of the two bases.
Subspace subspace_bracket(const LieAlgebra& g, const Subspace& a, const Subspace& b);

bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

/// D^0 = g, D^{k+1} = [D^k, D^k]; strictly descending, stops before the first repeat.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// L^0 = g, L^{k+1} = [g, L^k]; strictly descending, stops before the first repeat.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
/// C^0 = 0, C^{i+1} = preimage of the center of g/C^i; strictly ascending.
std::vector<Subspace> upper_central_series(const LieAlgebra& g);

bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);

struct QuotientResult {
    LieAlgebra algebra;
    /// Maps ambient coordinates to quotient coordinates (quotient_dim x g.dim).
    Matrix projection;
    /// Rows are the representative vectors of the quotient basis in g.
    Matrix representatives;
};

/// Quotient by an ideal, on the complement of the ideal's pivot columns.
QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal);

/// The induced algebra on a subalgebra's RREF basis rows.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& subalgebra);

} // namespace cyclic
