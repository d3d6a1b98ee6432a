#pragma once

#include "cyclic/forms.hpp"
#include "cyclic/lie_algebra.hpp"
#include "cyclic/representation.hpp"

namespace cyclic {

/// A Lie algebra paired with a cyclic metric; cyclicity is enforced at
/// construction, so every value of this type is certified.
class MetricAlgebra {
public:
    MetricAlgebra(LieAlgebra algebra, BilinearForm form);

    const LieAlgebra& algebra() const { return algebra_; }
    const BilinearForm& form() const { return form_; }
    std::size_t dim() const { return algebra_.dim(); }

private:
    LieAlgebra algebra_;
    BilinearForm form_;
};

/// Antisymmetric 2-cochain on a source space with values in a target space:
/// theta(i, j) is a target coordinate vector, theta(j, i) = -theta(i, j).
class Cocycle2 {
public:
    Cocycle2() = default;
    Cocycle2(std::size_t source_dim, std::size_t target_dim); // zero cochain

    /// target_dim = 1 cochain read off an antisymmetric matrix.
    static Cocycle2 from_matrix(const Matrix& antisymmetric);

    std::size_t source_dim() const { return source_dim_; }
    std::size_t target_dim() const { return target_dim_; }

    void set(std::size_t i, std::size_t j, const Vector& value); // mirrors -value
    Vector operator()(std::size_t i, std::size_t j) const;
    /// Value on two source coordinate vectors, extended bilinearly.
    Vector eval(const Vector& u, const Vector& v) const;

    bool is_zero() const;
    /// The scalar table of a target_dim = 1 cochain as an antisymmetric matrix.
    Matrix as_matrix() const;

    friend bool operator==(const Cocycle2& a, const Cocycle2& b) {
        return a.source_dim_ == b.source_dim_ && a.target_dim_ == b.target_dim_ &&
               a.values_ == b.values_;
    }
    friend bool operator!=(const Cocycle2& a, const Cocycle2& b) { return !(a == b); }

private:
    std::size_t source_dim_ = 0, target_dim_ = 0;
    std::vector<Rational> values_; // ((i * source_dim) + j) * target_dim + t
};

/// Orthogonal semidirect product: `acting` operates on `target` through pi,
/// which must be a homomorphism into derivations of the target algebra with
/// every operator symmetric for the target form. The result carries the
/// block-diagonal sum of the two forms.
MetricAlgebra semidirect(const MetricAlgebra& acting, const MetricAlgebra& target,
                         const Representation& pi);

/// g extended by its module as an abelian ideal, with the form pairing the
/// algebra block against the module block through rho.
MetricAlgebra quadruple_extension(const Quadruple& q, const BilinearForm& b_g);

/// The quadruple (g, ad, g, rho) with rho read off a cyclic form.
Quadruple adjoint_quadruple(const LieAlgebra& g, const BilinearForm& b);

/// Double extension of h by s: the algebra s +_pi (h +_theta s) with the
/// standard hyperbolic pairing between the two s-blocks. pi gives the action
/// of s on h (the action on the central s-copy is always the adjoint one).
/// Every stated precondition is checked and reported with a witness.
MetricAlgebra double_extension(const MetricAlgebra& h, const MetricAlgebra& s,
                               const Representation& pi, const Cocycle2& theta,
                               const BilinearForm& b_tilde);

/// Reads the compatibility identity as a definition of theta:
/// B_s(x, theta(h1,h2)) = B_h([x,h2],h1) - B_h([x,h1],h2).
Cocycle2 derive_cocycle(const MetricAlgebra& h, const MetricAlgebra& s, const Representation& pi);

/// The canonical action (1/2) B_h^{-1} Theta of a one-dimensional extension
/// direction; its compatibility identity holds by construction and its
/// symmetric part with respect to B_h vanishes.
Matrix canonical_central_action(const BilinearForm& h_form, const Cocycle2& theta);

/// One-dimensional central double extension: dim s = 1, b_tilde = 0, action
/// derived canonically from theta. Output dimension is h.dim() + 2.
MetricAlgebra central_double_extension_1d(const MetricAlgebra& h, const Cocycle2& theta);

struct CentralReduction {
    MetricAlgebra reduced;  // the (n-2)-dimensional algebra with its form
    Cocycle2 cocycle;       // target_dim = 1, records the z-components of brackets
    Vector x_choice;        // the chosen partner with B(x,z) = 1, B(x,x) = 0
    Subspace complement;    // span(x,z)^perp inside g, basis of `reduced`
};

/// Inverts a one-dimensional central double extension at an isotropic central
/// direction z of a nondegenerate cyclic metric algebra. The canonical
/// re-extension of the output is constructed and its dimension and cyclicity
/// are asserted before returning.
CentralReduction reduce_central(const MetricAlgebra& g, const Vector& z);

} // namespace cyclic
