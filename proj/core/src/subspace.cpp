#include "cyclic/subspace.hpp"

#include "cyclic/errors.hpp"

namespace cyclic {

Subspace Subspace::span(std::size_t ambient_dim, const Matrix& rows) {
    if (rows.rows() > 0 && rows.cols() != ambient_dim)
        throw ValidationError("spanning rows do not match the ambient dimension");
    Subspace s;
    s.ambient_ = ambient_dim;
    const auto r = rref(rows);
    Matrix basis(r.rank, ambient_dim);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) basis(i, j) = r.reduced(i, j);
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& rows) {
    if (rows.empty()) return zero(ambient_dim);
    return span(ambient_dim, Matrix::from_rows(rows));
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix(0, ambient_dim);
    return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix::identity(ambient_dim);
    return s;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_)
        throw ValidationError("vector length does not match the ambient dimension");
    return coordinates_of(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw ValidationError("ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

std::optional<Vector> Subspace::coordinates_of(const Vector& v) const {
    // With an RREF basis the candidate coefficients can be read off the pivot
    // columns; membership then reduces to reproducing v exactly.
    Vector coords(dim());
    for (std::size_t t = 0; t < dim(); ++t) {
        std::size_t p = 0;
        while (p < ambient_ && basis_(t, p).is_zero()) ++p;
        coords[t] = v[p];
    }
    Vector rebuilt(ambient_);
    for (std::size_t t = 0; t < dim(); ++t)
        if (!coords[t].is_zero())
            for (std::size_t j = 0; j < ambient_; ++j) rebuilt[j] += coords[t] * basis_(t, j);
    if (rebuilt != v) return std::nullopt;
    return coords;
}

Vector Subspace::from_coordinates(const Vector& coords) const {
    if (coords.size() != dim()) throw ValidationError("coordinate length mismatch");
    Vector v(ambient_);
    for (std::size_t t = 0; t < dim(); ++t)
        if (!coords[t].is_zero())
            for (std::size_t j = 0; j < ambient_; ++j) v[j] += coords[t] * basis_(t, j);
    return v;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw ValidationError("ambient dimension mismatch");
    return Subspace::span(a.ambient_dim(), vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw ValidationError("ambient dimension mismatch");
    const std::size_t n = a.ambient_dim();
    // Zassenhaus: row-reduce [A A; B 0]; rows whose left half vanished carry an
    // intersection basis in the right half.
    Matrix block(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block(i, j) = a.basis()(i, j);
            block(i, n + j) = a.basis()(i, j);
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) block(a.dim() + i, j) = b.basis()(i, j);
    const auto r = rref(block);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = r.reduced(i, j).is_zero();
        if (!left_zero) continue;
        Vector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = r.reduced(i, n + j);
        rows.push_back(std::move(v));
    }
    return Subspace::span(n, rows);
}

} // namespace cyclic
