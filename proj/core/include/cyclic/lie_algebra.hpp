#pragma once

#include "cyclic/matrix.hpp"
#include "cyclic/subspace.hpp"

#include <string>
#include <vector>

namespace cyclic {

struct IndexTriple {
    std::size_t i = 0, j = 0, k = 0;
    friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_failures;
    std::vector<IndexTriple> jacobi_failures;
};

/// Lie algebra as a structure-constant tensor over exact rationals:
/// c(i,j) is the coordinate vector of [e_i, e_j]. Values are treated as
/// immutable once fully constructed; set_bracket is for building only.
class LieAlgebra {
public:
    LieAlgebra() = default; // the zero algebra
    explicit LieAlgebra(std::vector<std::string> names); // abelian on those labels

    /// Structure constants read off a list of matrices closed under commutator.
    /// Throws ValidationError if the span is not closed or the list is dependent.
    static LieAlgebra from_matrices(const std::vector<Matrix>& basis,
                                    std::vector<std::string> names);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t index_of_name(const std::string& name) const; // ValidationError if absent
    void rename(std::vector<std::string> names);

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    Vector bracket_basis(std::size_t i, std::size_t j) const;
    Vector bracket(const Vector& u, const Vector& v) const;

    /// Sets [e_i, e_j] = value and mirrors [e_j, e_i] = -value.
    void set_bracket(std::size_t i, std::size_t j, const Vector& value);
    /// Sets only c(i,j); used by loaders so that validate can surface
    /// inconsistent input rather than silently repairing it.
    void set_bracket_raw(std::size_t i, std::size_t j, const Vector& value);

    Matrix ad_basis(std::size_t i) const; // matrix of ad e_i on columns
    Matrix ad(const Vector& v) const;

    ValidationReport validate() const;

    /// Structure-constant equality, labels ignored.
    bool same_structure(const LieAlgebra& other) const;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Rational> c_;
};

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

} // namespace cyclic
