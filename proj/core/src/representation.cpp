#include "cyclic/representation.hpp"

#include "cyclic/errors.hpp"

#include <string>

namespace cyclic {

Representation::Representation(LieAlgebra algebra, std::size_t module_dim, std::vector<Matrix> ops)
    : algebra_(std::move(algebra)), module_dim_(module_dim), ops_(std::move(ops)) {
    if (ops_.size() != algebra_.dim())
        throw ValidationError("representation needs one operator per basis element");
    for (const auto& m : ops_)
        if (m.rows() != module_dim_ || m.cols() != module_dim_)
            throw ValidationError("operator shape does not match the module dimension");
}

Matrix Representation::act(const Vector& x) const {
    if (x.size() != algebra_.dim()) throw ValidationError("act argument length mismatch");
    Matrix m(module_dim_, module_dim_);
    for (std::size_t i = 0; i < ops_.size(); ++i)
        if (!x[i].is_zero()) m += x[i] * ops_[i];
    return m;
}

RepValidationReport Representation::validate() const {
    RepValidationReport report;
    const std::size_t n = algebra_.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs = ops_[i] * ops_[j] - ops_[j] * ops_[i];
            for (std::size_t k = 0; k < n; ++k)
                if (!algebra_.c(i, j, k).is_zero()) lhs -= algebra_.c(i, j, k) * ops_[k];
            if (!lhs.is_zero()) report.failures.emplace_back(i, j);
        }
    report.ok = report.failures.empty();
    return report;
}

Representation dual_rep(const Representation& r) {
    std::vector<Matrix> ops;
    ops.reserve(r.ops().size());
    for (const auto& m : r.ops()) ops.push_back(-m.transpose());
    return Representation(r.algebra(), r.module_dim(), std::move(ops));
}

Representation tensor_rep(const Representation& r1, const Representation& r2) {
    const LieAlgebra g = direct_sum(r1.algebra(), r2.algebra());
    const std::size_t d1 = r1.module_dim(), d2 = r2.module_dim();
    const Matrix i1 = Matrix::identity(d1), i2 = Matrix::identity(d2);
    std::vector<Matrix> ops;
    ops.reserve(g.dim());
    for (const auto& m : r1.ops()) ops.push_back(kronecker(m, i2));
    for (const auto& m : r2.ops()) ops.push_back(kronecker(i1, m));
    return Representation(g, d1 * d2, std::move(ops));
}

Representation vk_module(std::size_t k) {
    // The standard 3-dimensional algebra on {H, X, Y}.
    LieAlgebra sl2(std::vector<std::string>{"H", "X", "Y"});
    {
        Vector two_x(3), minus_two_y(3), h(3);
        two_x[1] = Rational(2);
        minus_two_y[2] = Rational(-2);
        h[0] = Rational(1);
        sl2.set_bracket(0, 1, two_x);       // [H, X] = 2X
        sl2.set_bracket(0, 2, minus_two_y); // [H, Y] = -2Y
        sl2.set_bracket(1, 2, h);           // [X, Y] = H
    }
    const std::size_t d = k + 1;
    Matrix h(d, d), x(d, d), y(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        h(i, i) = Rational(static_cast<long>(k) - 2 * static_cast<long>(i));
        if (i + 1 < d) y(i + 1, i) = Rational(static_cast<long>(i) + 1);
        if (i > 0) x(i - 1, i) = Rational(static_cast<long>(k - i) + 1);
    }
    return Representation(std::move(sl2), d, {std::move(h), std::move(x), std::move(y)});
}

Representation adjoint_rep(const LieAlgebra& g) {
    std::vector<Matrix> ops;
    ops.reserve(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) ops.push_back(g.ad_basis(i));
    return Representation(g, g.dim(), std::move(ops));
}

Representation trivial_rep(const LieAlgebra& g, std::size_t module_dim) {
    return Representation(g, module_dim, std::vector<Matrix>(g.dim(), Matrix(module_dim, module_dim)));
}

Representation conjugate_rep(const Representation& r, const Matrix& u) {
    const Matrix u_inv = inverse(u);
    std::vector<Matrix> ops;
    ops.reserve(r.ops().size());
    for (const auto& m : r.ops()) ops.push_back(u * m * u_inv);
    return Representation(r.algebra(), r.module_dim(), std::move(ops));
}

RhoSpace quadruple_space(const Representation& r) {
    const std::size_t n = r.algebra().dim();
    const std::size_t d = r.module_dim();
    const std::size_t unknowns = n * d; // rho entries, row-major
    const std::size_t pairs = n >= 2 ? n * (n - 1) / 2 : 0;
    Matrix system(pairs * d, unknowns);
    std::size_t row = 0;
    // Component m of rho([e_i,e_j]) + pi*(e_i) rho(e_j) - pi*(e_j) rho(e_i),
    // with pi*(x) = -pi(x)^T acting on dual coordinate columns.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t m = 0; m < d; ++m) {
                Vector eq(unknowns);
                for (std::size_t k = 0; k < n; ++k)
                    if (!r.algebra().c(i, j, k).is_zero()) eq[k * d + m] += r.algebra().c(i, j, k);
                for (std::size_t l = 0; l < d; ++l) {
                    if (!r.op(i)(l, m).is_zero()) eq[j * d + l] -= r.op(i)(l, m);
                    if (!r.op(j)(l, m).is_zero()) eq[i * d + l] += r.op(j)(l, m);
                }
                system.set_row(row++, eq);
            }
        }
    RhoSpace out;
    out.system.equations = system.rows();
    out.system.unknowns = unknowns;
    out.system.rank = rank_of(system);
    const Matrix ns = nullspace(system);
    out.basis.reserve(ns.rows());
    for (std::size_t t = 0; t < ns.rows(); ++t) {
        Matrix rho(n, d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < d; ++m) rho(i, m) = ns(t, i * d + m);
        out.basis.push_back(std::move(rho));
    }
    return out;
}

bool is_symmetric_action(const Representation& r, const BilinearForm& module_form) {
    if (module_form.dim() != r.module_dim())
        throw ValidationError("module form dimension mismatch");
    for (const auto& m : r.ops())
        if (m.transpose() * module_form.matrix() != module_form.matrix() * m) return false;
    return true;
}

Quadruple::Quadruple(Representation rep, Matrix rho) : rep_(std::move(rep)), rho_(std::move(rho)) {
    const std::size_t n = rep_.algebra().dim();
    const std::size_t d = rep_.module_dim();
    if (rho_.rows() != n || rho_.cols() != d)
        throw ValidationError("rho must be algebra.dim x module_dim");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector value(d);
            for (std::size_t k = 0; k < n; ++k)
                if (!rep_.algebra().c(i, j, k).is_zero())
                    value = add(value, scaled(rho_.row(k), rep_.algebra().c(i, j, k)));
            // pi*(e_i) rho(e_j) = -pi(e_i)^T rho_j
            value = sub(value, rep_.op(i).transpose().apply(rho_.row(j)));
            value = add(value, rep_.op(j).transpose().apply(rho_.row(i)));
            if (!is_zero(value))
                throw ValidationError("quadruple identity fails at basis pair (" +
                                      rep_.algebra().names()[i] + ", " +
                                      rep_.algebra().names()[j] + ")");
        }
}

} // namespace cyclic
