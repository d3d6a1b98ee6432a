#pragma once

#include "cyclic/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cyclic {

using Vector = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major. Column vectors are acted on by
/// operator matrices (M.apply(v)); subspace bases are stored as rows elsewhere.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols); // zero-filled

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& entries);
    static Matrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void set_row(std::size_t i, const Vector& v);

    Matrix transpose() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, Matrix m);

    /// M v with v a column vector.
    Vector apply(const Vector& v) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_scaled_row(std::size_t dst, std::size_t src, const Rational& f);
    void add_scaled_col(std::size_t dst, std::size_t src, const Rational& f);
    void scale_row(std::size_t i, const Rational& f);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

Rational dot(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Rational& f);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols; // strictly increasing
};

/// Unique reduced row echelon form.
RrefResult rref(const Matrix& m);
std::size_t rank_of(const Matrix& m);

/// Rows form the canonical basis of {v : m v = 0}: one row per free column,
/// carrying 1 in its own free column and 0 in the other free columns.
Matrix nullspace(const Matrix& m);

/// Canonical particular solution of a x = rhs (free variables set to zero),
/// or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& rhs);

Matrix inverse(const Matrix& m); // throws ValidationError if singular

struct Signature {
    std::size_t positive = 0, negative = 0, null = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric matrix via exact congruence diagonalization.
/// Throws ValidationError for non-square or non-symmetric input.
Signature signature(const Matrix& b);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& top, const Matrix& bottom);

std::string to_string(const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace cyclic
