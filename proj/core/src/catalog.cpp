#include "cyclic/catalog.hpp"

#include "cyclic/errors.hpp"
#include "cyclic/structure.hpp"

#include <cctype>

namespace cyclic {

namespace {

Matrix unit_matrix(std::size_t d, std::size_t r, std::size_t c) {
    Matrix m(d, d);
    m(r, c) = Rational(1);
    return m;
}

// Basis matrices of sl(2) in the order {H, X, Y}.
std::vector<Matrix> sl2_matrices() {
    Matrix h(2, 2), x(2, 2), y(2, 2);
    h(0, 0) = Rational(1);
    h(1, 1) = Rational(-1);
    x(0, 1) = Rational(1);
    y(1, 0) = Rational(1);
    return {h, x, y};
}

std::vector<std::string> sl2_names() { return {"H", "X", "Y"}; }

// Basis matrices of so(3) in the order {i, j, k}: [i,j]=k, [j,k]=i, [k,i]=j.
std::vector<Matrix> so3_matrices() {
    Matrix i(3, 3), j(3, 3), k(3, 3);
    i(1, 2) = Rational(-1);
    i(2, 1) = Rational(1);
    j(0, 2) = Rational(1);
    j(2, 0) = Rational(-1);
    k(0, 1) = Rational(-1);
    k(1, 0) = Rational(1);
    return {i, j, k};
}

std::vector<std::string> so3_names() { return {"i", "j", "k"}; }

// sl(n): off-diagonal units E_ij (lexicographic), then H_i = E_ii - E_{i+1,i+1}.
void sl_basis(std::size_t n, std::vector<Matrix>& mats, std::vector<std::string>& names) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            mats.push_back(unit_matrix(n, i, j));
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Matrix h(n, n);
        h(i, i) = Rational(1);
        h(i + 1, i + 1) = Rational(-1);
        mats.push_back(std::move(h));
        names.push_back("H" + std::to_string(i + 1));
    }
}

void gl_basis(std::size_t n, std::vector<Matrix>& mats, std::vector<std::string>& names) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mats.push_back(unit_matrix(n, i, j));
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
}

// so(n): M_ij = E_ij - E_ji for i < j, lexicographic.
void so_basis(std::size_t n, std::vector<Matrix>& mats, std::vector<std::string>& names) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix m(n, n);
            m(i, j) = Rational(1);
            m(j, i) = Rational(-1);
            mats.push_back(std::move(m));
            names.push_back("M" + std::to_string(i + 1) + std::to_string(j + 1));
        }
}

// Embeds d x d acting matrices and the acted-on column space F^d into
// (d+1) x (d+1) block matrices [[A, v], [0, 0]]; commutators then realize the
// natural semidirect bracket.
CatalogEntry semidirect_entry(const std::string& name, const std::vector<Matrix>& acting,
                              const std::vector<std::string>& acting_names, std::size_t d) {
    std::vector<Matrix> mats;
    std::vector<std::string> names = acting_names;
    for (const auto& a : acting) {
        Matrix m(d + 1, d + 1);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = a(i, j);
        mats.push_back(std::move(m));
    }
    for (std::size_t v = 0; v < d; ++v) {
        mats.push_back(unit_matrix(d + 1, v, d));
        names.push_back("e" + std::to_string(v + 1));
    }
    CatalogEntry entry;
    entry.name = name;
    entry.algebra = LieAlgebra::from_matrices(mats, names);
    const std::size_t k = acting.size();
    std::vector<Vector> levi_rows, rad_rows;
    for (std::size_t t = 0; t < k; ++t) {
        Vector row(k + d);
        row[t] = Rational(1);
        levi_rows.push_back(std::move(row));
    }
    for (std::size_t t = 0; t < d; ++t) {
        Vector row(k + d);
        row[k + t] = Rational(1);
        rad_rows.push_back(std::move(row));
    }
    entry.levi = Subspace::span(k + d, levi_rows);
    entry.radical = Subspace::span(k + d, rad_rows);
    entry.nilradical = entry.radical;
    return entry;
}

CatalogEntry matrix_entry(const std::string& name, const std::vector<Matrix>& mats,
                          const std::vector<std::string>& names, bool semisimple) {
    CatalogEntry entry;
    entry.name = name;
    entry.algebra = LieAlgebra::from_matrices(mats, names);
    entry.natural_rep = Representation(entry.algebra, mats.front().rows(), mats);
    if (semisimple) {
        entry.levi = Subspace::whole(entry.algebra.dim());
        entry.radical = Subspace::zero(entry.algebra.dim());
        entry.nilradical = entry.radical;
    }
    return entry;
}

std::size_t single_param(const std::string& family, const std::vector<std::size_t>& params) {
    if (params.size() != 1)
        throw ValidationError("catalog family '" + family + "' needs exactly one parameter");
    return params[0];
}

} // namespace

CatalogEntry make(const std::string& family, const std::vector<std::size_t>& params) {
    if (family == "sl") {
        const std::size_t n = single_param(family, params);
        if (n < 2) throw ValidationError("sl(n) needs n >= 2");
        if (n == 2) return matrix_entry("sl2", sl2_matrices(), sl2_names(), true);
        std::vector<Matrix> mats;
        std::vector<std::string> names;
        sl_basis(n, mats, names);
        return matrix_entry("sl" + std::to_string(n), mats, names, true);
    }
    if (family == "gl") {
        const std::size_t n = single_param(family, params);
        if (n < 1) throw ValidationError("gl(n) needs n >= 1");
        std::vector<Matrix> mats;
        std::vector<std::string> names;
        gl_basis(n, mats, names);
        auto entry = matrix_entry("gl" + std::to_string(n), mats, names, false);
        // gl(n) = sl(n) + scalars: the radical is the span of the identity.
        Vector id_row(n * n);
        for (std::size_t i = 0; i < n; ++i) id_row[i * n + i] = Rational(1);
        entry.radical = Subspace::span(n * n, std::vector<Vector>{id_row});
        std::vector<Vector> levi_rows;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Vector row(n * n);
                row[i * n + j] = Rational(1);
                levi_rows.push_back(std::move(row));
            }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Vector row(n * n);
            row[i * n + i] = Rational(1);
            row[(i + 1) * n + (i + 1)] = Rational(-1);
            levi_rows.push_back(std::move(row));
        }
        entry.levi = Subspace::span(n * n, levi_rows);
        return entry;
    }
    if (family == "so" || family == "su2") {
        std::size_t n = family == "su2" ? 3 : single_param(family, params);
        if (n < 2) throw ValidationError("so(n) needs n >= 2");
        if (n == 3) {
            auto entry = matrix_entry(family == "su2" ? "su2" : "so3", so3_matrices(),
                                      so3_names(), true);
            return entry;
        }
        std::vector<Matrix> mats;
        std::vector<std::string> names;
        so_basis(n, mats, names);
        // so(2) is abelian, not semisimple; leave it unannotated.
        return matrix_entry("so" + std::to_string(n), mats, names, n > 2);
    }
    if (family == "abelian") {
        const std::size_t n = single_param(family, params);
        CatalogEntry entry;
        entry.name = "abelian" + std::to_string(n);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
        entry.algebra = LieAlgebra(std::move(names));
        entry.levi = Subspace::zero(n);
        entry.radical = Subspace::whole(n);
        entry.nilradical = entry.radical;
        return entry;
    }
    if (family == "heisenberg") {
        const std::size_t dim = single_param(family, params);
        if (dim < 3 || dim % 2 == 0)
            throw ValidationError("heisenberg needs an odd dimension >= 3");
        const std::size_t k = (dim - 1) / 2;
        // Strictly upper triangular model: x_i = E_{0,i}, y_i = E_{i,k+1}, z = E_{0,k+1}.
        std::vector<Matrix> mats;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i) {
            mats.push_back(unit_matrix(k + 2, 0, i + 1));
            names.push_back("x" + std::to_string(i + 1));
        }
        for (std::size_t i = 0; i < k; ++i) {
            mats.push_back(unit_matrix(k + 2, i + 1, k + 1));
            names.push_back("y" + std::to_string(i + 1));
        }
        mats.push_back(unit_matrix(k + 2, 0, k + 1));
        names.push_back("z");
        CatalogEntry entry;
        entry.name = "heisenberg" + std::to_string(dim);
        entry.algebra = LieAlgebra::from_matrices(mats, names);
        entry.levi = Subspace::zero(dim);
        entry.radical = Subspace::whole(dim);
        entry.nilradical = entry.radical;
        return entry;
    }
    if (family == "r2") {
        Matrix x(2, 2), y(2, 2);
        x(0, 0) = Rational(1);
        y(0, 1) = Rational(1);
        CatalogEntry entry;
        entry.name = "r2";
        entry.algebra = LieAlgebra::from_matrices({x, y}, {"x", "y"});
        entry.levi = Subspace::zero(2);
        entry.radical = Subspace::whole(2);
        {
            Vector row(2);
            row[1] = Rational(1);
            entry.nilradical = Subspace::span(2, std::vector<Vector>{row});
        }
        return entry;
    }
    if (family == "remark_lorentz") {
        // Two copies of r2 with the Lorentz pairing between the x-directions.
        Matrix x1(2, 2), y1(2, 2);
        x1(0, 0) = Rational(1);
        y1(0, 1) = Rational(1);
        Matrix zero(2, 2);
        auto embed = [&](const Matrix& m, bool first) {
            Matrix big(4, 4);
            const std::size_t off = first ? 0 : 2;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) big(off + i, off + j) = m(i, j);
            return big;
        };
        std::vector<Matrix> mats{embed(x1, true), embed(y1, true), embed(x1, false),
                                 embed(y1, false)};
        CatalogEntry entry;
        entry.name = "remark_lorentz";
        entry.algebra = LieAlgebra::from_matrices(mats, {"x1", "y1", "x2", "y2"});
        Matrix b(4, 4);
        b(0, 2) = Rational(1);
        b(2, 0) = Rational(1);
        b(1, 1) = Rational(1);
        b(3, 3) = Rational(1);
        entry.distinguished_form = BilinearForm(std::move(b));
        entry.levi = Subspace::zero(4);
        entry.radical = Subspace::whole(4);
        {
            std::vector<Vector> rows(2, Vector(4));
            rows[0][1] = Rational(1);
            rows[1][3] = Rational(1);
            entry.nilradical = Subspace::span(4, rows);
        }
        return entry;
    }
    if (family == "sl2_semidirect_F2")
        return semidirect_entry("sl2_semidirect_F2", sl2_matrices(), sl2_names(), 2);
    if (family == "gl2_semidirect_F2") {
        std::vector<Matrix> mats;
        std::vector<std::string> names;
        gl_basis(2, mats, names);
        return semidirect_entry("gl2_semidirect_F2", mats, names, 2);
    }
    if (family == "so3_semidirect_F3")
        return semidirect_entry("so3_semidirect_F3", so3_matrices(), so3_names(), 3);
    if (family == "sl3_semidirect_F3") {
        std::vector<Matrix> mats;
        std::vector<std::string> names;
        sl_basis(3, mats, names);
        return semidirect_entry("sl3_semidirect_F3", mats, names, 3);
    }
    throw ValidationError("unknown catalog family '" + family + "'");
}

CatalogEntry make_by_id(const std::string& id) {
    static const std::vector<std::string> parameterless = {
        "su2",
        "r2",
        "remark_lorentz",
        "sl2_semidirect_F2",
        "gl2_semidirect_F2",
        "so3_semidirect_F3",
        "sl3_semidirect_F3",
    };
    for (const auto& f : parameterless)
        if (id == f) return make(f);
    std::size_t split = id.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(id[split - 1]))) --split;
    if (split == id.size() || split == 0)
        throw ValidationError("unknown catalog entry '" + id + "'");
    const std::string family = id.substr(0, split);
    const std::size_t n = static_cast<std::size_t>(std::stoul(id.substr(split)));
    return make(family, {n});
}

MetricAlgebra remark_lorentz_metric() {
    auto entry = make("remark_lorentz");
    return MetricAlgebra(std::move(entry.algebra), std::move(*entry.distinguished_form));
}

std::vector<std::string> catalog_families() {
    return {"sl",
            "gl",
            "so",
            "su2",
            "abelian",
            "heisenberg",
            "r2",
            "remark_lorentz",
            "sl2_semidirect_F2",
            "gl2_semidirect_F2",
            "so3_semidirect_F3",
            "sl3_semidirect_F3"};
}

} // namespace cyclic
