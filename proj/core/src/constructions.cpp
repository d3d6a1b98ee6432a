#include "cyclic/constructions.hpp"

#include "cyclic/errors.hpp"
#include "cyclic/structure.hpp"

#include <sstream>
#include <string>

namespace cyclic {

namespace {

std::string triple_name(const LieAlgebra& g, const IndexTriple& t) {
    return "(" + g.names()[t.i] + ", " + g.names()[t.j] + ", " + g.names()[t.k] + ")";
}

std::vector<std::string> dedup_names(std::vector<std::string> names,
                                     const std::vector<std::string>& more) {
    for (const auto& raw : more) {
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
    return names;
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = a + 1; b < g.dim(); ++b) {
            const Vector lhs = d.apply(g.bracket_basis(a, b));
            Vector ea(g.dim()), eb(g.dim());
            ea[a] = Rational(1);
            eb[b] = Rational(1);
            const Vector rhs =
                add(g.bracket(d.apply(ea), eb), g.bracket(ea, d.apply(eb)));
            if (lhs != rhs) return false;
        }
    return true;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

void require_validates(const LieAlgebra& g, const std::string& who) {
    const auto report = g.validate();
    if (report.ok) return;
    std::ostringstream os;
    os << who << ": assembled algebra fails validation";
    if (!report.jacobi_failures.empty())
        os << "; first Jacobi witness " << triple_name(g, report.jacobi_failures.front());
    if (!report.antisymmetry_failures.empty()) {
        const auto& p = report.antisymmetry_failures.front();
        os << "; first antisymmetry witness (" << g.names()[p.first] << ", "
           << g.names()[p.second] << ")";
    }
    throw ValidationError(os.str());
}

} // namespace

MetricAlgebra::MetricAlgebra(LieAlgebra algebra, BilinearForm form)
    : algebra_(std::move(algebra)), form_(std::move(form)) {
    if (form_.dim() != algebra_.dim())
        throw ValidationError("form dimension does not match the algebra");
    const auto defect = cyclic_defect(algebra_, form_);
    if (!defect.empty())
        throw ValidationError("form is not cyclic; first residual at basis triple " +
                              triple_name(algebra_, defect.front().triple) + " with value " +
                              defect.front().value.str());
}

Cocycle2::Cocycle2(std::size_t source_dim, std::size_t target_dim)
    : source_dim_(source_dim), target_dim_(target_dim),
      values_(source_dim * source_dim * target_dim) {}

Cocycle2 Cocycle2::from_matrix(const Matrix& antisymmetric) {
    if (!antisymmetric.is_square()) throw ValidationError("cochain matrix must be square");
    const std::size_t n = antisymmetric.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (antisymmetric(i, j) != -antisymmetric(j, i))
                throw ValidationError("cochain matrix must be antisymmetric");
    Cocycle2 theta(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) theta.set(i, j, {antisymmetric(i, j)});
    return theta;
}

void Cocycle2::set(std::size_t i, std::size_t j, const Vector& value) {
    if (i >= source_dim_ || j >= source_dim_ || value.size() != target_dim_)
        throw ValidationError("cochain entry out of range");
    if (i == j && !cyclic::is_zero(value))
        throw ValidationError("cochain must vanish on repeated arguments");
    for (std::size_t t = 0; t < target_dim_; ++t) {
        values_[(i * source_dim_ + j) * target_dim_ + t] = value[t];
        values_[(j * source_dim_ + i) * target_dim_ + t] = -value[t];
    }
}

Vector Cocycle2::operator()(std::size_t i, std::size_t j) const {
    Vector v(target_dim_);
    for (std::size_t t = 0; t < target_dim_; ++t)
        v[t] = values_[(i * source_dim_ + j) * target_dim_ + t];
    return v;
}

Vector Cocycle2::eval(const Vector& u, const Vector& v) const {
    if (u.size() != source_dim_ || v.size() != source_dim_)
        throw ValidationError("cochain argument length mismatch");
    Vector out(target_dim_);
    for (std::size_t i = 0; i < source_dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < source_dim_; ++j) {
            if (v[j].is_zero()) continue;
            const Rational f = u[i] * v[j];
            for (std::size_t t = 0; t < target_dim_; ++t) {
                const Rational& x = values_[(i * source_dim_ + j) * target_dim_ + t];
                if (!x.is_zero()) out[t] += f * x;
            }
        }
    }
    return out;
}

bool Cocycle2::is_zero() const {
    for (const auto& x : values_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Cocycle2::as_matrix() const {
    if (target_dim_ != 1) throw ValidationError("as_matrix requires a scalar-valued cochain");
    Matrix m(source_dim_, source_dim_);
    for (std::size_t i = 0; i < source_dim_; ++i)
        for (std::size_t j = 0; j < source_dim_; ++j) m(i, j) = (*this)(i, j)[0];
    return m;
}

MetricAlgebra semidirect(const MetricAlgebra& acting, const MetricAlgebra& target,
                         const Representation& pi) {
    const LieAlgebra& g1 = acting.algebra();
    const LieAlgebra& g2 = target.algebra();
    if (!pi.algebra().same_structure(g1))
        throw ValidationError("semidirect: representation is not over the acting algebra");
    if (pi.module_dim() != g2.dim())
        throw ValidationError("semidirect: module dimension does not match the target algebra");
    {
        const auto rep_report = pi.validate();
        if (!rep_report.ok) {
            const auto& p = rep_report.failures.front();
            throw ValidationError("semidirect: action is not a homomorphism at pair (" +
                                  g1.names()[p.first] + ", " + g1.names()[p.second] + ")");
        }
    }
    for (std::size_t i = 0; i < g1.dim(); ++i)
        if (!is_derivation(g2, pi.op(i)))
            throw ValidationError("semidirect: action of " + g1.names()[i] +
                                  " is not a derivation of the target algebra");
    for (std::size_t i = 0; i < g1.dim(); ++i)
        if (pi.op(i).transpose() * target.form().matrix() !=
            target.form().matrix() * pi.op(i))
            throw ValidationError("semidirect: action of " + g1.names()[i] +
                                  " is not symmetric for the target form");

    const std::size_t n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
    LieAlgebra g(dedup_names(g1.names(), g2.names()));
    Vector value(n);
    auto clear = [&] { value.assign(n, Rational(0)); };
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j) {
            clear();
            for (std::size_t k = 0; k < n1; ++k) value[k] = g1.c(i, j, k);
            g.set_bracket(i, j, value);
        }
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t a = 0; a < n2; ++a) {
            clear();
            for (std::size_t k = 0; k < n2; ++k) value[n1 + k] = pi.op(i)(k, a);
            g.set_bracket(i, n1 + a, value);
        }
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = a + 1; b < n2; ++b) {
            clear();
            for (std::size_t k = 0; k < n2; ++k) value[n1 + k] = g2.c(a, b, k);
            g.set_bracket(n1 + a, n1 + b, value);
        }
    require_validates(g, "semidirect");
    return MetricAlgebra(std::move(g),
                         BilinearForm(block_diagonal(acting.form().matrix(),
                                                     target.form().matrix())));
}

MetricAlgebra quadruple_extension(const Quadruple& q, const BilinearForm& b_g) {
    const LieAlgebra& g = q.rep().algebra();
    if (b_g.dim() != g.dim())
        throw ValidationError("quadruple_extension: form dimension mismatch");
    if (!is_cyclic(g, b_g))
        throw ValidationError("quadruple_extension: the algebra form must be cyclic");

    const std::size_t n = g.dim(), d = q.rep().module_dim();
    std::vector<std::string> module_names;
    module_names.reserve(d);
    for (std::size_t m = 0; m < d; ++m) module_names.push_back("v" + std::to_string(m + 1));
    LieAlgebra l(dedup_names(g.names(), module_names));
    Vector value(n + d);
    auto clear = [&] { value.assign(n + d, Rational(0)); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            clear();
            for (std::size_t k = 0; k < n; ++k) value[k] = g.c(i, j, k);
            l.set_bracket(i, j, value);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < d; ++m) {
            clear();
            for (std::size_t k = 0; k < d; ++k) value[n + k] = q.rep().op(i)(k, m);
            l.set_bracket(i, n + m, value);
        }
    require_validates(l, "quadruple_extension");

    Matrix form(n + d, n + d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form(i, j) = b_g.matrix()(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < d; ++m) {
            form(i, n + m) = q.rho()(i, m);
            form(n + m, i) = q.rho()(i, m);
        }
    return MetricAlgebra(std::move(l), BilinearForm(std::move(form)));
}

Quadruple adjoint_quadruple(const LieAlgebra& g, const BilinearForm& b) {
    if (b.dim() != g.dim()) throw ValidationError("adjoint_quadruple: form dimension mismatch");
    const auto defect = cyclic_defect(g, b);
    if (!defect.empty())
        throw ValidationError("adjoint_quadruple: form is not cyclic; residual at " +
                              triple_name(g, defect.front().triple));
    return Quadruple(adjoint_rep(g), b.matrix());
}

MetricAlgebra double_extension(const MetricAlgebra& h, const MetricAlgebra& s,
                               const Representation& pi, const Cocycle2& theta,
                               const BilinearForm& b_tilde) {
    const std::size_t nh = h.dim(), ns = s.dim();
    if (!pi.algebra().same_structure(s.algebra()))
        throw ValidationError("double_extension: action is not over s");
    if (pi.module_dim() != nh)
        throw ValidationError("double_extension: action module must be h");
    if (theta.source_dim() != nh || theta.target_dim() != ns)
        throw ValidationError("double_extension: cochain shape must be h^2 -> s");
    if (b_tilde.dim() != ns)
        throw ValidationError("double_extension: b_tilde must live on s");
    if (nh > 0 && form_radical(h.algebra(), h.form()).dim() != 0)
        throw ValidationError("double_extension: the form on h must be nondegenerate");
    if (ns > 0 && form_radical(s.algebra(), s.form()).dim() != 0)
        throw ValidationError("double_extension: the form on s must be nondegenerate");
    if (!is_cyclic(s.algebra(), b_tilde))
        throw ValidationError("double_extension: b_tilde must be cyclic on s");
    {
        const auto rep_report = pi.validate();
        if (!rep_report.ok) {
            const auto& p = rep_report.failures.front();
            throw ValidationError("double_extension: action is not a homomorphism at pair (" +
                                  s.algebra().names()[p.first] + ", " +
                                  s.algebra().names()[p.second] + ")");
        }
    }
    for (std::size_t a = 0; a < ns; ++a)
        if (!is_derivation(h.algebra(), pi.op(a)))
            throw ValidationError("double_extension: action of " + s.algebra().names()[a] +
                                  " is not a derivation of h");
    // Compatibility identity B_s(x_a, theta(h_i,h_j)) = B_h([x_a,h_j],h_i) - B_h([x_a,h_i],h_j).
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t i = 0; i < nh; ++i)
            for (std::size_t j = i + 1; j < nh; ++j) {
                Rational lhs;
                const Vector th = theta(i, j);
                for (std::size_t m = 0; m < ns; ++m)
                    if (!th[m].is_zero()) lhs += s.form().matrix()(a, m) * th[m];
                const Vector aj = pi.op(a).column(j), ai = pi.op(a).column(i);
                Rational rhs;
                for (std::size_t l = 0; l < nh; ++l) {
                    if (!aj[l].is_zero()) rhs += aj[l] * h.form().matrix()(l, i);
                    if (!ai[l].is_zero()) rhs -= ai[l] * h.form().matrix()(l, j);
                }
                if (lhs != rhs)
                    throw ValidationError(
                        "double_extension: compatibility identity fails at (" +
                        s.algebra().names()[a] + "; " + h.algebra().names()[i] + ", " +
                        h.algebra().names()[j] + ")");
            }

    // Assemble s +_pi (h +_theta s); basis blocks: s, h, central s-copy.
    const std::size_t n = ns + nh + ns;
    std::vector<std::string> dual_names;
    dual_names.reserve(ns);
    for (const auto& nm : s.algebra().names()) dual_names.push_back(nm + "*");
    LieAlgebra g(dedup_names(dedup_names(s.algebra().names(), h.algebra().names()), dual_names));
    Vector value(n);
    auto clear = [&] { value.assign(n, Rational(0)); };
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = a + 1; b < ns; ++b) {
            clear();
            for (std::size_t k = 0; k < ns; ++k) value[k] = s.algebra().c(a, b, k);
            g.set_bracket(a, b, value);
        }
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t i = 0; i < nh; ++i) {
            clear();
            for (std::size_t k = 0; k < nh; ++k) value[ns + k] = pi.op(a)(k, i);
            g.set_bracket(a, ns + i, value);
        }
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = 0; b < ns; ++b) {
            clear();
            for (std::size_t k = 0; k < ns; ++k) value[ns + nh + k] = s.algebra().c(a, b, k);
            g.set_bracket(a, ns + nh + b, value);
        }
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = i + 1; j < nh; ++j) {
            clear();
            for (std::size_t k = 0; k < nh; ++k) value[ns + k] = h.algebra().c(i, j, k);
            const Vector th = theta(i, j);
            for (std::size_t k = 0; k < ns; ++k) value[ns + nh + k] = th[k];
            g.set_bracket(i + ns, j + ns, value);
        }
    require_validates(g, "double_extension");

    Matrix form(n, n);
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = 0; b < ns; ++b) {
            form(a, b) = b_tilde.matrix()(a, b);
            form(a, ns + nh + b) = s.form().matrix()(a, b);
            form(ns + nh + a, b) = s.form().matrix()(a, b);
        }
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nh; ++j) form(ns + i, ns + j) = h.form().matrix()(i, j);
    return MetricAlgebra(std::move(g), BilinearForm(std::move(form)));
}

Cocycle2 derive_cocycle(const MetricAlgebra& h, const MetricAlgebra& s,
                        const Representation& pi) {
    const std::size_t nh = h.dim(), ns = s.dim();
    if (!pi.algebra().same_structure(s.algebra()) || pi.module_dim() != nh)
        throw ValidationError("derive_cocycle: action shape mismatch");
    Matrix s_inv;
    try {
        s_inv = inverse(s.form().matrix());
    } catch (const ValidationError&) {
        throw ValidationError("derive_cocycle: the form on s must be nondegenerate");
    }
    Cocycle2 theta(nh, ns);
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = i + 1; j < nh; ++j) {
            Vector pairing(ns);
            for (std::size_t a = 0; a < ns; ++a) {
                const Vector aj = pi.op(a).column(j), ai = pi.op(a).column(i);
                for (std::size_t l = 0; l < nh; ++l) {
                    if (!aj[l].is_zero()) pairing[a] += aj[l] * h.form().matrix()(l, i);
                    if (!ai[l].is_zero()) pairing[a] -= ai[l] * h.form().matrix()(l, j);
                }
            }
            theta.set(i, j, s_inv.apply(pairing));
        }
    return theta;
}

Matrix canonical_central_action(const BilinearForm& h_form, const Cocycle2& theta) {
    if (theta.target_dim() != 1)
        throw ValidationError("canonical_central_action needs a scalar-valued cochain");
    if (theta.source_dim() != h_form.dim())
        throw ValidationError("canonical_central_action shape mismatch");
    const Matrix b_inv = inverse(h_form.matrix());
    return Rational(1, 2) * (b_inv * theta.as_matrix());
}

MetricAlgebra central_double_extension_1d(const MetricAlgebra& h, const Cocycle2& theta) {
    if (theta.source_dim() != h.dim() || theta.target_dim() != 1)
        throw ValidationError("central_double_extension_1d: cochain must map h^2 to scalars");
    LieAlgebra line(std::vector<std::string>{"d"});
    Matrix unit(1, 1);
    unit(0, 0) = Rational(1);
    const MetricAlgebra s(std::move(line), BilinearForm(std::move(unit)));
    Matrix action = h.dim() > 0 ? canonical_central_action(h.form(), theta) : Matrix(0, 0);
    const Representation pi(s.algebra(), h.dim(), {std::move(action)});
    return double_extension(h, s, pi, theta, BilinearForm::zero(1));
}

CentralReduction reduce_central(const MetricAlgebra& g, const Vector& z) {
    const std::size_t n = g.dim();
    if (z.size() != n) throw ValidationError("reduce_central: vector length mismatch");
    if (cyclic::is_zero(z)) throw ValidationError("reduce_central: z must be nonzero");
    if (form_radical(g.algebra(), g.form()).dim() != 0)
        throw ValidationError("reduce_central: the form must be nondegenerate");
    const Subspace c = center(g.algebra());
    if (!c.contains(z)) throw ValidationError("reduce_central: z is not central");
    if (!g.form().eval(z, z).is_zero())
        throw ValidationError("reduce_central: z is not isotropic");

    // Complement of span(z) inside the center, picked greedily from the
    // center's canonical basis.
    std::vector<Vector> span_rows{z};
    std::vector<Vector> other_center;
    for (std::size_t t = 0; t < c.dim(); ++t) {
        const Vector row = c.basis_row(t);
        std::vector<Vector> probe = span_rows;
        probe.push_back(row);
        if (Subspace::span(n, probe).dim() > span_rows.size()) {
            span_rows.push_back(row);
            other_center.push_back(row);
        }
    }

    // x with B(x, z) = 1 and B(x, d) = 0 for the other center directions,
    // then shifted to make B(x, x) = 0.
    Matrix constraints(1 + other_center.size(), n);
    Vector rhs(1 + other_center.size());
    constraints.set_row(0, g.form().matrix().apply(z));
    rhs[0] = Rational(1);
    for (std::size_t t = 0; t < other_center.size(); ++t)
        constraints.set_row(1 + t, g.form().matrix().apply(other_center[t]));
    auto x = solve(constraints, rhs);
    if (!x) throw ValidationError("reduce_central: no partner vector exists");
    const Rational xx = g.form().eval(*x, *x);
    if (!xx.is_zero()) {
        const Vector shift = scaled(z, xx / Rational(2));
        *x = sub(*x, shift);
    }

    const Subspace pair = Subspace::span(n, std::vector<Vector>{*x, z});
    if (pair.dim() != 2) throw ValidationError("reduce_central: x and z are dependent");
    const Subspace comp = orthogonal_complement(g.algebra(), g.form(), pair);
    if (comp.dim() != n - 2 || intersect(comp, pair).dim() != 0)
        throw ValidationError("reduce_central: the pairing plane does not split off");

    const std::size_t nh = comp.dim();
    std::vector<std::string> names;
    names.reserve(nh);
    for (std::size_t t = 0; t < nh; ++t) names.push_back("h" + std::to_string(t + 1));
    LieAlgebra h_alg(std::move(names));
    Cocycle2 theta(nh, 1);
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = a + 1; b < nh; ++b) {
            const Vector w = g.algebra().bracket(comp.basis_row(a), comp.basis_row(b));
            const Rational x_comp = g.form().eval(w, z);
            if (!x_comp.is_zero())
                throw ValidationError("reduce_central: bracket escapes along x");
            const Rational z_comp = g.form().eval(w, *x);
            const Vector reduced = sub(w, scaled(z, z_comp));
            const auto coords = comp.coordinates_of(reduced);
            if (!coords)
                throw ValidationError("reduce_central: bracket does not reduce to the complement");
            h_alg.set_bracket(a, b, *coords);
            theta.set(a, b, {z_comp});
        }

    CentralReduction out{
        MetricAlgebra(std::move(h_alg), restrict_form(g.form(), comp)),
        std::move(theta),
        std::move(*x),
        comp,
    };
    // Round trip: the canonical re-extension must exist, be cyclic (enforced by
    // its type), and restore the dimension.
    const MetricAlgebra rebuilt = central_double_extension_1d(out.reduced, out.cocycle);
    if (rebuilt.dim() != n)
        throw ValidationError("reduce_central: re-extension changed the dimension");
    return out;
}

} // namespace cyclic
