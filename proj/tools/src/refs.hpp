#pragma once

#include "workspace.hpp"

#include "cyclic/catalog.hpp"

#include <memory>
#include <string>

namespace cyclic::cli {

/// Resolved algebra together with a display name for reports.
struct AlgebraRef {
    std::string display;
    LieAlgebra algebra;
};

/// Resolved (algebra, symmetric form) pair.
struct FormRef {
    std::string display;
    LieAlgebra algebra;
    BilinearForm form;
};

struct RepRef {
    std::string display;
    Representation rep;
};

struct SubspaceRef {
    std::string display;
    Subspace subspace;
};

struct CocycleRef {
    std::string display;
    Cocycle2 cocycle;
};

/// Reference grammar:
///   algebra:   catalog:<id> | <file>#<name> | <file>
///   form:      catalog:<id-with-distinguished-form> | zero:<algebra-ref> |
///              killing:<algebra-ref> | <file>#<name> | <file>
///   rep:       vk:<k> | adjoint:<algebra-ref> | natural:<catalog-id> | <file>#<name> | <file>
///   subspace:  span:<names,comma-separated> (against a context algebra) | <file>#<name>
///   cocycle:   <file>#<name>
///   matrix:    <file>#<name>
///   vector:    comma-separated rationals, or one basis name of the context algebra
AlgebraRef resolve_algebra(const std::string& ref);
FormRef resolve_form(const std::string& ref);
RepRef resolve_rep(const std::string& ref);
SubspaceRef resolve_subspace(const std::string& ref, const LieAlgebra& context);
CocycleRef resolve_cocycle(const std::string& ref);
Matrix resolve_matrix(const std::string& ref);
Vector resolve_vector(const std::string& text, const LieAlgebra& context);

} // namespace cyclic::cli
