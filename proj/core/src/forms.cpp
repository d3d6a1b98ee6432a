#include "cyclic/forms.hpp"

#include "cyclic/errors.hpp"

#include <sstream>

namespace cyclic {

BilinearForm::BilinearForm(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw ValidationError("bilinear form matrix must be square");
    if (!m_.is_symmetric()) throw ValidationError("bilinear form matrix must be symmetric");
}

Rational BilinearForm::eval(const Vector& u, const Vector& v) const {
    if (u.size() != dim() || v.size() != dim())
        throw ValidationError("form argument length mismatch");
    Rational s;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!v[j].is_zero() && !m_(i, j).is_zero()) s += u[i] * m_(i, j) * v[j];
    }
    return s;
}

BilinearForm restrict_form(const BilinearForm& b, const Subspace& s) {
    if (s.ambient_dim() != b.dim()) throw ValidationError("restriction shape mismatch");
    return BilinearForm(s.basis() * b.matrix() * s.basis().transpose());
}

std::size_t index_of(const BilinearForm& b) {
    const Signature sig = signature(b.matrix());
    return std::min(sig.positive, sig.negative) + sig.null;
}

namespace {

// Index of the unknown B(e_i, e_j), i <= j, in upper-triangle row-major order.
std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
}

// Adds the coefficients of the linear functional B([e_a, e_b], e_c) to row.
void add_bracket_pairing(const LieAlgebra& g, std::size_t a, std::size_t b, std::size_t c,
                         Vector& row) {
    const std::size_t n = g.dim();
    for (std::size_t l = 0; l < n; ++l) {
        const Rational& f = g.c(a, b, l);
        if (!f.is_zero()) row[tri_index(n, l, c)] += f;
    }
}

FormSpace space_from_system(const LieAlgebra& g, const Matrix& system) {
    const std::size_t n = g.dim();
    FormSpace out;
    out.system.equations = system.rows();
    out.system.unknowns = system.cols();
    out.system.rank = rank_of(system);
    const Matrix ns = nullspace(system);
    out.basis.reserve(ns.rows());
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                m(i, j) = ns(r, tri_index(n, i, j));
                m(j, i) = m(i, j);
            }
        out.basis.emplace_back(std::move(m));
    }
    return out;
}

} // namespace

std::vector<CyclicResidual> cyclic_defect(const LieAlgebra& g, const BilinearForm& b) {
    if (b.dim() != g.dim()) throw ValidationError("form dimension does not match the algebra");
    std::vector<CyclicResidual> residuals;
    const std::size_t n = g.dim();
    auto pair_with_basis = [&](const Vector& w, std::size_t c) {
        Rational s;
        for (std::size_t l = 0; l < n; ++l)
            if (!w[l].is_zero() && !b.matrix()(l, c).is_zero()) s += w[l] * b.matrix()(l, c);
        return s;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Rational value = pair_with_basis(g.bracket_basis(i, j), k);
                value += pair_with_basis(g.bracket_basis(j, k), i);
                value += pair_with_basis(g.bracket_basis(k, i), j);
                if (!value.is_zero()) residuals.push_back({{i, j, k}, std::move(value)});
            }
    return residuals;
}

bool is_cyclic(const LieAlgebra& g, const BilinearForm& b) {
    return cyclic_defect(g, b).empty();
}

FormSpace cyclic_space(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const std::size_t unknowns = n * (n + 1) / 2;
    const std::size_t triples = n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0;
    Matrix system(triples, unknowns);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector eq(unknowns);
                add_bracket_pairing(g, i, j, k, eq);
                add_bracket_pairing(g, j, k, i, eq);
                add_bracket_pairing(g, k, i, j, eq);
                system.set_row(row++, eq);
            }
    return space_from_system(g, system);
}

FormSpace invariant_space(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const std::size_t unknowns = n * (n + 1) / 2;
    Matrix system(n * n * n, unknowns);
    std::size_t row = 0;
    // B([e_i,e_j], e_k) + B(e_j, [e_i,e_k]) = 0 over all ordered triples.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector eq(unknowns);
                add_bracket_pairing(g, i, j, k, eq);
                add_bracket_pairing(g, i, k, j, eq);
                system.set_row(row++, eq);
            }
    return space_from_system(g, system);
}

BilinearForm killing_form(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational tr;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!ads[i](a, b).is_zero() && !ads[j](b, a).is_zero())
                        tr += ads[i](a, b) * ads[j](b, a);
            k(i, j) = tr;
            k(j, i) = std::move(tr);
        }
    return BilinearForm(std::move(k));
}

Subspace form_radical(const LieAlgebra& g, const BilinearForm& b) {
    if (b.dim() != g.dim()) throw ValidationError("form dimension does not match the algebra");
    return Subspace::span(g.dim(), nullspace(b.matrix()));
}

Subspace orthogonal_complement(const LieAlgebra& g, const BilinearForm& b, const Subspace& s) {
    if (b.dim() != g.dim() || s.ambient_dim() != g.dim())
        throw ValidationError("orthogonal complement shape mismatch");
    if (s.dim() == 0) return Subspace::whole(g.dim());
    return Subspace::span(g.dim(), nullspace(s.basis() * b.matrix()));
}

bool is_isotropic(const LieAlgebra& g, const BilinearForm& b, const Subspace& s) {
    if (b.dim() != g.dim() || s.ambient_dim() != g.dim())
        throw ValidationError("isotropy check shape mismatch");
    return (s.basis() * b.matrix() * s.basis().transpose()).is_zero();
}

AbcReport check_abc(const LieAlgebra& g, const BilinearForm& b, const Subspace& h,
                    const Subspace& i) {
    if (h.ambient_dim() != g.dim() || i.ambient_dim() != g.dim() || b.dim() != g.dim())
        throw ValidationError("check_abc shape mismatch");
    if (!is_subalgebra(g, h)) throw ValidationError("check_abc: h is not a subalgebra");
    if (!is_ideal(g, i)) throw ValidationError("check_abc: i is not an ideal");
    if (h.dim() + i.dim() != g.dim() || intersect(h, i).dim() != 0)
        throw ValidationError("check_abc: h and i do not split g as a vector space");

    AbcReport report;
    report.a_ok = is_cyclic(restrict_to(g, h), restrict_form(b, h)) &&
                  is_cyclic(restrict_to(g, i), restrict_form(b, i));

    auto mixed_residual = [&](const Vector& u, const Vector& v, const Vector& w) {
        Rational s = b.eval(g.bracket(u, v), w);
        s += b.eval(g.bracket(v, w), u);
        s += b.eval(g.bracket(w, u), v);
        return s;
    };
    report.b_ok = true;
    for (std::size_t a = 0; a < i.dim() && report.b_ok; ++a)
        for (std::size_t c = a; c < i.dim() && report.b_ok; ++c)
            for (std::size_t t = 0; t < h.dim() && report.b_ok; ++t)
                report.b_ok =
                    mixed_residual(i.basis_row(a), i.basis_row(c), h.basis_row(t)).is_zero();
    report.c_ok = true;
    for (std::size_t a = 0; a < h.dim() && report.c_ok; ++a)
        for (std::size_t c = a; c < h.dim() && report.c_ok; ++c)
            for (std::size_t t = 0; t < i.dim() && report.c_ok; ++t)
                report.c_ok =
                    mixed_residual(h.basis_row(a), h.basis_row(c), i.basis_row(t)).is_zero();
    return report;
}

SplitResult split_along_ideal(const LieAlgebra& g, const BilinearForm& b, const Subspace& ideal) {
    if (!is_ideal(g, ideal)) throw ValidationError("split requires an ideal");
    if (!is_cyclic(g, b)) throw ValidationError("split requires a cyclic form");
    const BilinearForm restricted = restrict_form(b, ideal);
    const Matrix rad = nullspace(restricted.matrix());
    if (rad.rows() != 0) {
        std::ostringstream os;
        os << "form degenerates on the ideal; radical witness (ideal coordinates):\n"
           << rad;
        throw ValidationError(os.str());
    }

    SplitResult out;
    out.complement = orthogonal_complement(g, b, ideal);
    if (out.complement.dim() + ideal.dim() != g.dim() ||
        intersect(out.complement, ideal).dim() != 0)
        throw ValidationError("orthogonal complement does not complement the ideal");
    if (!is_subalgebra(g, out.complement))
        throw ValidationError("orthogonal complement of the ideal is not a subalgebra");
    out.complement_algebra = restrict_to(g, out.complement);
    out.ideal_algebra = restrict_to(g, ideal);

    std::vector<Matrix> ops;
    ops.reserve(out.complement.dim());
    for (std::size_t t = 0; t < out.complement.dim(); ++t) {
        Matrix op(ideal.dim(), ideal.dim());
        for (std::size_t a = 0; a < ideal.dim(); ++a) {
            const auto coords =
                ideal.coordinates_of(g.bracket(out.complement.basis_row(t), ideal.basis_row(a)));
            if (!coords) throw ValidationError("ideal is not invariant under the complement");
            for (std::size_t r = 0; r < ideal.dim(); ++r) op(r, a) = (*coords)[r];
        }
        ops.push_back(std::move(op));
    }
    out.action = Representation(out.complement_algebra, ideal.dim(), std::move(ops));
    return out;
}

bool split_reconstructs(const LieAlgebra& g, const Subspace& ideal, const SplitResult& split) {
    const std::size_t n1 = split.complement.dim(), n2 = ideal.dim();
    if (n1 + n2 != g.dim()) return false;
    auto ambient = [&](std::size_t t) {
        return t < n1 ? split.complement.basis_row(t) : ideal.basis_row(t - n1);
    };
    // Expected bracket of combined basis elements, in combined coordinates.
    auto expected = [&](std::size_t a, std::size_t b) {
        Vector out(n1 + n2);
        if (a < n1 && b < n1) {
            const Vector v = split.complement_algebra.bracket_basis(a, b);
            for (std::size_t k = 0; k < n1; ++k) out[k] = v[k];
        } else if (a < n1 && b >= n1) {
            const Vector v = split.action.op(a).column(b - n1);
            for (std::size_t k = 0; k < n2; ++k) out[n1 + k] = v[k];
        } else if (a >= n1 && b >= n1) {
            const Vector v = split.ideal_algebra.bracket_basis(a - n1, b - n1);
            for (std::size_t k = 0; k < n2; ++k) out[n1 + k] = v[k];
        }
        return out;
    };
    for (std::size_t a = 0; a < n1 + n2; ++a)
        for (std::size_t b = a + 1; b < n1 + n2; ++b) {
            const Vector w = g.bracket(ambient(a), ambient(b));
            Vector rebuilt(g.dim());
            const Vector e = expected(a, b);
            for (std::size_t t = 0; t < n1 + n2; ++t)
                if (!e[t].is_zero()) rebuilt = add(rebuilt, scaled(ambient(t), e[t]));
            if (rebuilt != w) return false;
        }
    return true;
}

} // namespace cyclic
