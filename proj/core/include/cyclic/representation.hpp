#pragma once

#include "cyclic/bilinear_form.hpp"
#include "cyclic/lie_algebra.hpp"
#include "cyclic/matrix.hpp"

#include <vector>

namespace cyclic {

struct RepValidationReport {
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> failures; // basis pairs (i, j), i < j
};

/// Audit record for an assembled linear system.
struct SystemShape {
    std::size_t equations = 0, unknowns = 0, rank = 0;
};

/// Representation as one operator matrix per algebra basis element.
class Representation {
public:
    Representation() = default;
    Representation(LieAlgebra algebra, std::size_t module_dim, std::vector<Matrix> ops);

    const LieAlgebra& algebra() const { return algebra_; }
    std::size_t module_dim() const { return module_dim_; }
    const std::vector<Matrix>& ops() const { return ops_; }
    const Matrix& op(std::size_t i) const { return ops_[i]; }

    /// Operator of a general algebra element (linear combination of ops).
    Matrix act(const Vector& x) const;

    /// Checks ops[i] ops[j] - ops[j] ops[i] = sum_k c(i,j,k) ops[k] for all i < j.
    RepValidationReport validate() const;

private:
    LieAlgebra algebra_;
    std::size_t module_dim_ = 0;
    std::vector<Matrix> ops_;
};

/// Dual action: ops'[i] = -ops[i]^T.
Representation dual_rep(const Representation& r);

/// Action of direct_sum(g1, g2) on the Kronecker product module
/// (row-major convention: index = i * dim2 + j).
Representation tensor_rep(const Representation& r1, const Representation& r2);

/// The (k+1)-dimensional irreducible module of the standard 3-element basis
/// {H, X, Y} with [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H:
/// H v_i = (k-2i) v_i, Y v_i = (i+1) v_{i+1}, X v_i = (k-i+1) v_{i-1}.
Representation vk_module(std::size_t k);

Representation adjoint_rep(const LieAlgebra& g);
Representation trivial_rep(const LieAlgebra& g, std::size_t module_dim);

/// Conjugated action u ops[i] u^{-1} on the transformed module.
Representation conjugate_rep(const Representation& r, const Matrix& u);

struct RhoSpace {
    std::vector<Matrix> basis; // algebra.dim x module_dim matrices
    SystemShape system;
};

/// Solution space of rho([x,y]) + pi*(x) rho(y) - pi*(y) rho(x) = 0, where
/// row r of rho is the covector rho(e_r) in dual coordinates and pi* = -pi^T.
RhoSpace quadruple_space(const Representation& r);

/// True iff every ops[i] is symmetric for the module form: ops[i]^T K = K ops[i].
bool is_symmetric_action(const Representation& r, const BilinearForm& module_form);

/// (algebra, representation, rho) with the defining identity enforced.
class Quadruple {
public:
    Quadruple(Representation rep, Matrix rho); // ValidationError with witness pair

    const Representation& rep() const { return rep_; }
    const Matrix& rho() const { return rho_; }

private:
    Representation rep_;
    Matrix rho_;
};

} // namespace cyclic
