#include "cyclic/structure.hpp"

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

// Constraint matrix whose nullspace is {v : [v, w] = 0 for all rows w of s}.
// Row (w, k) over unknowns v_i: sum_i v_i * sum_j w_j c(i,j,k) = 0.
Matrix commutation_constraints(const LieAlgebra& g, const Matrix& targets) {
    const std::size_t n = g.dim();
    Matrix sys(targets.rows() * n, n);
    for (std::size_t t = 0; t < targets.rows(); ++t)
        for (std::size_t i = 0; i < n; ++i) {
            // coefficient vector of [e_i, w_t]
            for (std::size_t j = 0; j < n; ++j) {
                if (targets(t, j).is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!g.c(i, j, k).is_zero()) sys(t * n + k, i) += targets(t, j) * g.c(i, j, k);
            }
        }
    return sys;
}

} // namespace

Subspace center(const LieAlgebra& g) {
    return centralizer(g, Subspace::whole(g.dim()));
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
    if (s.ambient_dim() != g.dim()) throw ValidationError("ambient dimension mismatch");
    if (s.dim() == 0) return Subspace::whole(g.dim());
    return Subspace::span(g.dim(), nullspace(commutation_constraints(g, s.basis())));
}

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != g.dim() || b.ambient_dim() != g.dim())
        throw ValidationError("ambient dimension mismatch");
    std::vector<Vector> rows;
    rows.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            rows.push_back(g.bracket(a.basis_row(i), b.basis_row(j)));
    return Subspace::span(g.dim(), rows);
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
    return s.contains(subspace_bracket(g, Subspace::whole(g.dim()), s));
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
    return s.contains(subspace_bracket(g, s, s));
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
    std::vector<Subspace> series{Subspace::whole(g.dim())};
    while (true) {
        Subspace next = subspace_bracket(g, series.back(), series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    std::vector<Subspace> series{Subspace::whole(g.dim())};
    while (true) {
        Subspace next = subspace_bracket(g, Subspace::whole(g.dim()), series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<Subspace> upper_central_series(const LieAlgebra& g) {
    std::vector<Subspace> series{Subspace::zero(g.dim())};
    while (true) {
        const Subspace& current = series.back();
        Subspace next;
        if (current.dim() == g.dim()) break;
        if (current.dim() == 0) {
            next = center(g);
        } else {
            const auto q = quotient(g, current);
            const Subspace qcenter = center(q.algebra);
            // Lift the quotient center and add the current term back in.
            std::vector<Vector> rows;
            for (std::size_t i = 0; i < qcenter.dim(); ++i) {
                Vector lifted(g.dim());
                const Vector qc = qcenter.basis_row(i);
                for (std::size_t t = 0; t < qc.size(); ++t)
                    if (!qc[t].is_zero())
                        for (std::size_t j = 0; j < g.dim(); ++j)
                            lifted[j] += qc[t] * q.representatives(t, j);
                rows.push_back(std::move(lifted));
            }
            for (std::size_t i = 0; i < current.dim(); ++i) rows.push_back(current.basis_row(i));
            next = Subspace::span(g.dim(), rows);
        }
        if (next == current) break;
        series.push_back(std::move(next));
    }
    return series;
}

bool is_nilpotent(const LieAlgebra& g) {
    return lower_central_series(g).back().dim() == 0;
}

bool is_solvable(const LieAlgebra& g) {
    return derived_series(g).back().dim() == 0;
}

QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal) {
    if (!is_ideal(g, ideal)) throw ValidationError("quotient requires an ideal");
    const std::size_t n = g.dim();
    const Matrix& ib = ideal.basis();

    std::vector<bool> is_pivot(n, false);
    {
        std::size_t p = 0;
        for (std::size_t t = 0; t < ideal.dim(); ++t) {
            while (p < n && ib(t, p).is_zero()) ++p;
            is_pivot[p] = true;
        }
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    const std::size_t q = free_cols.size();

    // Reduce v modulo the ideal, then read quotient coordinates off the free columns.
    auto project = [&](Vector v) {
        std::size_t p = 0;
        for (std::size_t t = 0; t < ideal.dim(); ++t) {
            while (ib(t, p).is_zero()) ++p;
            if (!v[p].is_zero()) {
                const Rational f = v[p]; // pivot entry of an RREF row is 1
                for (std::size_t j = 0; j < n; ++j) v[j] -= f * ib(t, j);
            }
            ++p;
        }
        Vector out(q);
        for (std::size_t t = 0; t < q; ++t) out[t] = v[free_cols[t]];
        return out;
    };

    QuotientResult result;
    std::vector<std::string> names;
    names.reserve(q);
    for (auto j : free_cols) names.push_back(g.names()[j]);
    result.algebra = LieAlgebra(std::move(names));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b)
            result.algebra.set_bracket(a, b, project(g.bracket_basis(free_cols[a], free_cols[b])));

    result.projection = Matrix(q, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector unit(n);
        unit[j] = Rational(1);
        const Vector pj = project(std::move(unit));
        for (std::size_t t = 0; t < q; ++t) result.projection(t, j) = pj[t];
    }
    result.representatives = Matrix(q, n);
    for (std::size_t t = 0; t < q; ++t) result.representatives(t, free_cols[t]) = Rational(1);
    return result;
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& subalgebra) {
    if (!is_subalgebra(g, subalgebra))
        throw ValidationError("restriction requires a subalgebra");
    const std::size_t d = subalgebra.dim();
    std::vector<std::string> names;
    names.reserve(d);
    for (std::size_t t = 0; t < d; ++t) names.push_back("s" + std::to_string(t + 1));
    LieAlgebra h(std::move(names));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            const auto coords =
                subalgebra.coordinates_of(g.bracket(subalgebra.basis_row(a), subalgebra.basis_row(b)));
            if (!coords) throw ValidationError("restriction requires a subalgebra");
            h.set_bracket(a, b, *coords);
        }
    return h;
}

} // namespace cyclic
