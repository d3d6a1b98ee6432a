#pragma once

#include "cyclic/constructions.hpp"
#include "cyclic/lie_algebra.hpp"
#include "cyclic/representation.hpp"
#include "cyclic/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclic {

/// Named algebra with optional structural annotations, built deterministically.
struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::optional<Subspace> levi;
    std::optional<Subspace> radical;
    std::optional<Subspace> nilradical;
    std::optional<BilinearForm> distinguished_form;
    /// Defining matrix action on F^d, for the matrix-built entries.
    std::optional<Representation> natural_rep;
};

/// Families: sl(n >= 2), gl(n >= 1), so(n >= 2), su2, abelian(n >= 0),
/// heisenberg(odd dim >= 3), r2, remark_lorentz, sl2_semidirect_F2,
/// gl2_semidirect_F2, so3_semidirect_F3, sl3_semidirect_F3.
CatalogEntry make(const std::string& family, const std::vector<std::size_t>& params = {});

/// Identifier form: family name with the numeric parameter appended, e.g.
/// "sl2", "so4", "abelian3", "heisenberg5", or a parameterless family name.
CatalogEntry make_by_id(const std::string& id);

/// The four-dimensional solvable example with its Lorentz cyclic metric.
MetricAlgebra remark_lorentz_metric();

std::vector<std::string> catalog_families();

} // namespace cyclic
