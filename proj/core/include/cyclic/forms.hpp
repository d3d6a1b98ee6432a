#pragma once

#include "cyclic/bilinear_form.hpp"
#include "cyclic/lie_algebra.hpp"
#include "cyclic/representation.hpp"
#include "cyclic/structure.hpp"

#include <vector>

namespace cyclic {

struct CyclicResidual {
    IndexTriple triple;
    Rational value; // B([e_i,e_j],e_k) + B([e_j,e_k],e_i) + B([e_k,e_i],e_j)
};

/// Nonzero residuals of the cyclic identity over basis triples i < j < k.
/// Empty result means the form is a cyclic metric on g.
std::vector<CyclicResidual> cyclic_defect(const LieAlgebra& g, const BilinearForm& b);
bool is_cyclic(const LieAlgebra& g, const BilinearForm& b);

struct FormSpace {
    std::vector<BilinearForm> basis;
    SystemShape system;
    std::size_t dimension() const { return basis.size(); }
};

/// Basis of the symmetric solutions of the cyclic identity. Unknowns are the
/// upper-triangle entries in row-major order; equations run over i < j < k;
/// the basis is the canonical nullspace basis of that system.
FormSpace cyclic_space(const LieAlgebra& g);

/// Basis of the symmetric solutions of B([x,y],z) = -B(y,[x,z]) over all
/// ordered basis triples.
FormSpace invariant_space(const LieAlgebra& g);

/// K(x, y) = trace(ad x . ad y).
BilinearForm killing_form(const LieAlgebra& g);

/// {x : b(x, g) = 0} as a subspace.
Subspace form_radical(const LieAlgebra& g, const BilinearForm& b);

/// {x : b(x, s) = 0}.
Subspace orthogonal_complement(const LieAlgebra& g, const BilinearForm& b, const Subspace& s);

/// True iff b vanishes identically on s.
bool is_isotropic(const LieAlgebra& g, const BilinearForm& b, const Subspace& s);

struct AbcReport {
    bool a_ok = false, b_ok = false, c_ok = false;
    bool all() const { return a_ok && b_ok && c_ok; }
};

/// Decomposition criterion for a vector-space split g = h (+) i with h a
/// subalgebra and i an ideal:
///   (a) b restricted to h and to i is cyclic on each induced algebra,
///   (b) the mixed identity with two i-arguments vanishes,
///   (c) the mixed identity with two h-arguments vanishes.
AbcReport check_abc(const LieAlgebra& g, const BilinearForm& b, const Subspace& h,
                    const Subspace& i);

struct SplitResult {
    Subspace complement;           // i^perp, a subalgebra
    LieAlgebra complement_algebra; // induced algebra on its basis rows
    LieAlgebra ideal_algebra;      // induced algebra on the ideal's basis rows
    Representation action;         // complement acting on the ideal coordinates
};

/// Splits a cyclic metric algebra along an ideal on which b is nondegenerate.
/// Throws ValidationError naming the radical witness if b|_ideal degenerates.
SplitResult split_along_ideal(const LieAlgebra& g, const BilinearForm& b, const Subspace& ideal);

/// True iff the twisted-product bracket built from a split reproduces g's
/// bracket under the combined basis (complement rows, then ideal rows).
bool split_reconstructs(const LieAlgebra& g, const Subspace& ideal, const SplitResult& split);

} // namespace cyclic
