#pragma once

#include "cyclic/matrix.hpp"
#include "cyclic/subspace.hpp"

namespace cyclic {

/// Symmetric bilinear form on an algebra's underlying coordinate space.
class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(Matrix m); // square + symmetric, else ValidationError

    static BilinearForm zero(std::size_t dim) { return BilinearForm(Matrix(dim, dim)); }

    std::size_t dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    Rational eval(const Vector& u, const Vector& v) const; // u^T M v
    bool is_zero() const { return m_.is_zero(); }

    friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.m_ == b.m_; }
    friend bool operator!=(const BilinearForm& a, const BilinearForm& b) { return !(a == b); }

private:
    Matrix m_;
};

/// Restriction to a subspace in its basis-row coordinates: S M S^T.
BilinearForm restrict_form(const BilinearForm& b, const Subspace& s);

/// Maximal isotropic dimension: min(positive, negative) + null.
std::size_t index_of(const BilinearForm& b);

} // namespace cyclic
