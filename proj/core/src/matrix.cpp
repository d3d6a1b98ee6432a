#include "cyclic/matrix.hpp"

#include "cyclic/errors.hpp"

#include <ostream>
#include <sstream>

namespace cyclic {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw ValidationError("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
    if (v.size() != cols_) throw ValidationError("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch in +");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch in -");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix shape mismatch in *");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& f = a(i, k);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j).is_zero()) continue;
                c(i, j) += f * b(k, j);
            }
        }
    return c;
}

Matrix operator*(const Rational& s, Matrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw ValidationError("vector length mismatch in apply");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += (*this)(i, j) * v[j];
        }
    return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_scaled_row(std::size_t dst, std::size_t src, const Rational& f) {
    if (f.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(src, j).is_zero()) (*this)(dst, j) += f * (*this)(src, j);
}

void Matrix::add_scaled_col(std::size_t dst, std::size_t src, const Rational& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!(*this)(i, src).is_zero()) (*this)(i, dst) += f * (*this)(i, src);
}

void Matrix::scale_row(std::size_t i, const Rational& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= f;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch in dot");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vector scaled(const Vector& v, const Rational& f) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * f;
    return out;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch in add");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch in sub");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    RrefResult out;
    out.reduced = m;
    Matrix& a = out.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        const Rational inv = Rational(1) / a(r, c);
        if (!inv.is_one()) a.scale_row(r, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            a.add_scaled_row(i, r, -a(i, c));
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank_of(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m) {
    const auto r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;

    Matrix basis(n - r.rank, n);
    std::size_t row = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(row, f) = Rational(1);
        for (std::size_t t = 0; t < r.pivot_cols.size(); ++t)
            basis(row, r.pivot_cols[t]) = -r.reduced(t, f);
        ++row;
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& rhs) {
    if (rhs.size() != a.rows()) throw ValidationError("rhs length mismatch in solve");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = rhs[i];
    }
    const auto r = rref(aug);
    // A pivot in the augmented column means the system is inconsistent.
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t) x[r.pivot_cols[t]] = r.reduced(t, a.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw ValidationError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    const auto r = rref(aug);
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1) throw ValidationError("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

Signature signature(const Matrix& b) {
    if (!b.is_square()) throw ValidationError("signature requires a square matrix");
    if (!b.is_symmetric()) throw ValidationError("signature requires a symmetric matrix");
    Matrix a = b;
    const std::size_t n = a.rows();
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        // Prefer the nonzero diagonal pivot of largest height in the active block.
        std::size_t pivot = n;
        mpz_class best(-1);
        for (std::size_t i = k; i < n; ++i) {
            if (a(i, i).is_zero()) continue;
            mpz_class h = a(i, i).height();
            if (h > best) {
                best = h;
                pivot = i;
            }
        }
        if (pivot == n) {
            // All diagonal entries vanish: pull a hyperbolic pair onto the
            // diagonal with the symmetric operation row_i += row_j, col_i += col_j,
            // which turns a(i,i) into 2 a(i,j) != 0.
            std::size_t oi = n, oj = n;
            for (std::size_t i = k; i < n && oi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!a(i, j).is_zero()) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi == n) {
                sig.null += n - k;
                return sig;
            }
            a.add_scaled_row(oi, oj, Rational(1));
            a.add_scaled_col(oi, oj, Rational(1));
            pivot = oi;
        }
        a.swap_rows(k, pivot);
        a.swap_cols(k, pivot);
        const Rational p = a(k, k);
        if (p.sign() > 0)
            ++sig.positive;
        else
            ++sig.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Rational f = -(a(i, k) / p);
            a.add_scaled_row(i, k, f);
            a.add_scaled_col(i, k, f);
        }
    }
    return sig;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    if (b(p, q).is_zero()) continue;
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
                }
        }
    return k;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw ValidationError("column mismatch in vstack");
    Matrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
    return m;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) os << " " << m(i, j);
        os << " ]";
        if (i + 1 < m.rows()) os << "\n";
    }
    return os;
}

} // namespace cyclic
