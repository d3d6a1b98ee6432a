#include "cyclic/lie_algebra.hpp"

#include "cyclic/errors.hpp"

#include <utility>

namespace cyclic {

LieAlgebra::LieAlgebra(std::vector<std::string> names)
    : dim_(names.size()), names_(std::move(names)), c_(dim_ * dim_ * dim_) {}

std::size_t LieAlgebra::index_of_name(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw ValidationError("unknown basis element '" + name + "'");
}

void LieAlgebra::rename(std::vector<std::string> names) {
    if (names.size() != dim_) throw ValidationError("rename length mismatch");
    names_ = std::move(names);
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw ValidationError("bracket argument length mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            const Rational f = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) out[k] += f * c(i, j, k);
        }
    }
    return out;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
    set_bracket_raw(i, j, value);
    Vector neg(dim_);
    for (std::size_t k = 0; k < dim_; ++k) neg[k] = -value[k];
    set_bracket_raw(j, i, neg);
}

void LieAlgebra::set_bracket_raw(std::size_t i, std::size_t j, const Vector& value) {
    if (i >= dim_ || j >= dim_ || value.size() != dim_)
        throw ValidationError("bracket entry out of range");
    for (std::size_t k = 0; k < dim_; ++k) c_[(i * dim_ + j) * dim_ + k] = value[k];
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
    return m;
}

Matrix LieAlgebra::ad(const Vector& v) const {
    if (v.size() != dim_) throw ValidationError("ad argument length mismatch");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) m(k, j) += v[i] * c(i, j, k);
    }
    return m;
}

ValidationReport LieAlgebra::validate() const {
    ValidationReport report;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) {
            bool bad = false;
            for (std::size_t k = 0; k < dim_ && !bad; ++k) bad = c(i, j, k) != -c(j, i, k);
            if (bad) report.antisymmetry_failures.emplace_back(i, j);
        }
    // [w, e_k] for a coordinate vector w.
    auto bracket_with_basis = [&](const Vector& w, std::size_t k) {
        Vector out(dim_);
        for (std::size_t a = 0; a < dim_; ++a) {
            if (w[a].is_zero()) continue;
            for (std::size_t t = 0; t < dim_; ++t)
                if (!c(a, k, t).is_zero()) out[t] += w[a] * c(a, k, t);
        }
        return out;
    };
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                const Vector t1 = bracket_with_basis(bracket_basis(i, j), k);
                const Vector t2 = bracket_with_basis(bracket_basis(j, k), i);
                const Vector t3 = bracket_with_basis(bracket_basis(k, i), j);
                bool bad = false;
                for (std::size_t t = 0; t < dim_ && !bad; ++t)
                    bad = !(t1[t] + t2[t] + t3[t]).is_zero();
                if (bad) report.jacobi_failures.push_back({i, j, k});
            }
    report.ok = report.antisymmetry_failures.empty() && report.jacobi_failures.empty();
    return report;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
    return dim_ == other.dim_ && c_ == other.c_;
}

LieAlgebra LieAlgebra::from_matrices(const std::vector<Matrix>& basis,
                                     std::vector<std::string> names) {
    if (basis.size() != names.size()) throw ValidationError("basis/name count mismatch");
    const std::size_t n = basis.size();
    if (n == 0) return LieAlgebra();
    const std::size_t d = basis[0].rows();
    for (const auto& m : basis)
        if (m.rows() != d || m.cols() != d)
            throw ValidationError("matrix basis elements must share a square shape");

    // Flatten the basis and row-reduce once so commutators can be expressed
    // in it by solving against the reduced system.
    Matrix flat(n, d * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) flat(i, r * d + c) = basis[i](r, c);
    if (rank_of(flat) != n) throw ValidationError("matrix basis is linearly dependent");
    const Matrix flat_t = flat.transpose(); // (d*d) x n, solve flat_t x = vec(commutator)

    LieAlgebra g(std::move(names));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
            Vector rhs(d * d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) rhs[r * d + c] = comm(r, c);
            auto coords = solve(flat_t, rhs);
            if (!coords)
                throw ValidationError("matrix span is not closed under the commutator at pair (" +
                                      g.names()[i] + ", " + g.names()[j] + ")");
            g.set_bracket(i, j, *coords);
        }
    return g;
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
    std::vector<std::string> names = g1.names();
    for (const auto& raw : g2.names()) {
        std::string candidate = raw;
        bool clash = true;
        while (clash) {
            clash = false;
            for (const auto& existing : names)
                if (existing == candidate) {
                    clash = true;
                    candidate += "'";
                    break;
                }
        }
        names.push_back(candidate);
    }
    const std::size_t n1 = g1.dim(), n = g1.dim() + g2.dim();
    LieAlgebra g(std::move(names));
    Vector value(n);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j) {
            for (std::size_t k = 0; k < n; ++k) value[k] = k < n1 ? g1.c(i, j, k) : Rational(0);
            g.set_bracket(i, j, value);
        }
    for (std::size_t i = 0; i < g2.dim(); ++i)
        for (std::size_t j = i + 1; j < g2.dim(); ++j) {
            for (std::size_t k = 0; k < n; ++k)
                value[k] = k >= n1 ? g2.c(i, j, k - n1) : Rational(0);
            g.set_bracket(n1 + i, n1 + j, value);
        }
    return g;
}

} // namespace cyclic
