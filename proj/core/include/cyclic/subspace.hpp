#pragma once

#include "cyclic/matrix.hpp"

#include <optional>

namespace cyclic {

/// Subspace of a fixed ambient coordinate space, stored as a canonical RREF
/// row basis. Equal subspaces therefore compare equal as matrices.
class Subspace {
public:
    Subspace() = default;

    static Subspace span(std::size_t ambient_dim, const Matrix& rows);
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& rows);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }

    /// Basis rows in RREF, no zero rows.
    const Matrix& basis() const { return basis_; }
    Vector basis_row(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// Coefficients of v in the basis rows, or nullopt if v lies outside.
    std::optional<Vector> coordinates_of(const Vector& v) const;
    /// Ambient vector with the given basis coefficients.
    Vector from_coordinates(const Vector& coords) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    Matrix basis_; // dim() x ambient_, canonical RREF
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

} // namespace cyclic
