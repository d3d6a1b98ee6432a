// Acceptance runner: exercises every stated criterion at its exact tolerance
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include "support/generators.hpp"
#include "support/rng.hpp"

#include "cyclic/catalog.hpp"
#include "cyclic/constructions.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/forms.hpp"
#include "cyclic/representation.hpp"
#include "cyclic/structure.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

using namespace cyclic;
using cyclic::testing::central_cocycle_space;
using cyclic::testing::full_cyclic_system;
using cyclic::testing::random_nondegenerate_symmetric;
using cyclic::testing::Rng;
using cyclic::testing::sample_cocycle;
using cyclic::testing::sample_form;
using cyclic::testing::sample_nondegenerate_form;

namespace {

struct Criterion {
    std::string name;
    std::size_t passed = 0, failed = 0;

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
            std::cout << "  [ok]   " << what << "\n";
        } else {
            ++failed;
            std::cout << "  [FAIL] " << what << "\n";
        }
    }
    // batch-style counter for randomized sweeps: only failures are printed
    void count(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            std::cout << "  [FAIL] " << what << "\n";
        }
    }
};

std::vector<Criterion> criteria;

Criterion& begin_criterion(const std::string& name) {
    std::cout << "== " << name << " ==\n";
    criteria.push_back(Criterion{name});
    return criteria.back();
}

std::string show(std::size_t got, std::size_t expected) {
    std::ostringstream os;
    if (got == expected)
        os << "= " << expected;
    else
        os << "expected " << expected << ", got " << got;
    return os.str();
}

Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = Rational(1);
    return v;
}

bool certified(const MetricAlgebra& ma) {
    return ma.algebra().validate().ok && cyclic_defect(ma.algebra(), ma.form()).empty();
}

// ---- criterion 1 -----------------------------------------------------------

void criterion_solver_dimensions() {
    auto& c = begin_criterion("criterion 1: cyclic-space dimensions");
    auto dim_check = [&](const LieAlgebra& g, const char* label, std::size_t expected) {
        const auto space = cyclic_space(g);
        c.check(space.dimension() == expected,
                std::string("cyclic_space(") + label + ") " + show(space.dimension(), expected));
        return space;
    };
    dim_check(make_by_id("sl2").algebra, "sl2", 5);
    dim_check(make_by_id("so3").algebra, "so3", 5);
    dim_check(make_by_id("sl3").algebra, "sl3", 0);
    dim_check(make_by_id("so4").algebra, "so4", 0);
    dim_check(direct_sum(make_by_id("sl2").algebra, make_by_id("sl3").algebra), "sl2+sl3", 5);

    {
        const CatalogEntry e = make_by_id("sl2_semidirect_F2");
        const auto space = dim_check(e.algebra, "sl2:F2", 5);
        bool vanishes = true;
        for (const auto& b : space.basis)
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 3; j < 5; ++j)
                    vanishes = vanishes && b.matrix()(i, j).is_zero() &&
                               b.matrix()(j, i).is_zero();
        c.check(vanishes, "every basis form vanishes on the translation block of sl2:F2");
    }
    {
        const CatalogEntry e = make_by_id("gl2_semidirect_F2");
        const auto space = dim_check(e.algebra, "gl2:F2", 6);
        bool in_radical = true;
        for (const auto& b : space.basis)
            in_radical = in_radical && form_radical(e.algebra, b).contains(*e.radical);
        c.check(in_radical, "the translation block lies in every form's radical for gl2:F2");
    }
    {
        const CatalogEntry e = make_by_id("so3_semidirect_F3");
        const auto space = dim_check(e.algebra, "so3:F3", 10);
        bool shaped = true;
        for (const auto& b : space.basis) {
            const auto& m = b.matrix();
            Rational trp, trq;
            for (std::size_t i = 0; i < 3; ++i) {
                trp += m(i, i);
                trq += m(i, 3 + i);
                for (std::size_t j = 0; j < 3; ++j) {
                    shaped = shaped && m(3 + i, 3 + j).is_zero(); // zero lower-right block
                    shaped = shaped && m(i, 3 + j) == m(j, 3 + i); // symmetric pairing block
                }
            }
            shaped = shaped && trp.is_zero() && trq.is_zero();
        }
        c.check(shaped, "so3:F3 basis forms carry two symmetric traceless blocks");
    }
    dim_check(make_by_id("sl3_semidirect_F3").algebra, "sl3:F3", 0);
}

// ---- criterion 2 -----------------------------------------------------------

void criterion_quadruple_dimensions() {
    auto& c = begin_criterion("criterion 2: quadruple-space dimensions");
    for (std::size_t k : {0u, 1u, 3u, 4u}) {
        const auto space = quadruple_space(vk_module(k));
        c.check(space.basis.empty(),
                "quadruple_space(sl2, V(" + std::to_string(k) + ")) " +
                    show(space.basis.size(), 0));
    }
    bool tensors_trivial = true;
    for (std::size_t k1 = 0; k1 <= 3; ++k1)
        for (std::size_t k2 = 0; k2 <= 3; ++k2) {
            if ((k1 + 1) * (k2 + 1) == 3) continue;
            const auto space = quadruple_space(tensor_rep(vk_module(k1), vk_module(k2)));
            if (!space.basis.empty()) {
                tensors_trivial = false;
                c.count(false, "quadruple_space(sl2+sl2, V(" + std::to_string(k1) + ")xV(" +
                                   std::to_string(k2) + ")) " +
                                   show(space.basis.size(), 0));
            }
        }
    c.check(tensors_trivial,
            "every tensor module with k1, k2 <= 3 and total dimension != 3 carries rho = 0");

    const Representation v2 = vk_module(2);
    const auto space = quadruple_space(v2);
    c.check(space.basis.size() >= 5,
            "quadruple_space(sl2, V(2)) >= 5 (got " + std::to_string(space.basis.size()) + ")");

    // intertwiner from the adjoint module to V(2)
    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    const Representation ad = adjoint_rep(sl2);
    Matrix system(27, 9);
    std::size_t row = 0;
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                // (pi_v2(x) U - U ad(x))(a,b) as a linear functional of U
                Vector eq(9);
                for (std::size_t l = 0; l < 3; ++l) {
                    if (!v2.op(x)(a, l).is_zero()) eq[l * 3 + b] += v2.op(x)(a, l);
                    if (!ad.op(x)(l, b).is_zero()) eq[a * 3 + l] -= ad.op(x)(l, b);
                }
                system.set_row(row++, eq);
            }
    const Matrix sols = nullspace(system);
    bool transported_all = false;
    if (sols.rows() >= 1) {
        Matrix u(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) u(i, j) = sols(0, i * 3 + j);
        const Matrix u_inv = inverse(u);
        std::vector<Vector> rows;
        for (const auto& rho : space.basis) {
            Vector flat;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) flat.push_back(rho(i, j));
            rows.push_back(std::move(flat));
        }
        const std::size_t base_rank = rank_of(Matrix::from_rows(rows));
        transported_all = true;
        for (const auto& b : cyclic_space(sl2).basis) {
            const Matrix rho_v2 = b.matrix() * u_inv;
            Vector flat;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) flat.push_back(rho_v2(i, j));
            auto probe = rows;
            probe.push_back(std::move(flat));
            bool inside = rank_of(Matrix::from_rows(probe)) == base_rank;
            try {
                const Quadruple q(v2, rho_v2);
                (void)q;
            } catch (const ValidationError&) {
                inside = false;
            }
            transported_all = transported_all && inside;
        }
    }
    c.check(transported_all,
            "all five adjoint-quadruple images lie inside quadruple_space(sl2, V(2))");
}

// ---- criterion 3 -----------------------------------------------------------

struct SpaceCache {
    std::map<std::string, FormSpace> spaces;
    const FormSpace& of(const std::string& id, const LieAlgebra& g) {
        auto it = spaces.find(id);
        if (it == spaces.end()) it = spaces.emplace(id, cyclic_space(g)).first;
        return it->second;
    }
};

void criterion_constructor_soundness() {
    auto& c = begin_criterion("criterion 3: randomized constructor soundness");
    SpaceCache cache;
    Rng rng(20260808);

    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    const LieAlgebra so3 = make_by_id("so3").algebra;
    const LieAlgebra heis3 = make_by_id("heisenberg3").algebra;
    const LieAlgebra r2 = make_by_id("r2").algebra;
    const Representation so3_natural = *make_by_id("so3").natural_rep;

    // --- semidirect ---
    std::size_t good = 0;
    for (int t = 0; t < 1000; ++t) {
        try {
            MetricAlgebra result = [&]() -> MetricAlgebra {
                switch (t % 4) {
                case 0: {
                    // commuting diagonal operators against a diagonal form
                    const std::size_t n1 = static_cast<std::size_t>(rng.range(1, 3));
                    const std::size_t n2 = static_cast<std::size_t>(rng.range(2, 4));
                    std::vector<std::string> names1, names2;
                    for (std::size_t i = 0; i < n1; ++i) names1.push_back("a" + std::to_string(i));
                    for (std::size_t i = 0; i < n2; ++i) names2.push_back("b" + std::to_string(i));
                    std::vector<Matrix> ops;
                    for (std::size_t i = 0; i < n1; ++i)
                        ops.push_back(Matrix::diagonal(rng.vector(n2)));
                    const MetricAlgebra left{LieAlgebra(names1), BilinearForm(rng.symmetric(n1))};
                    const MetricAlgebra right{LieAlgebra(names2),
                                              BilinearForm(Matrix::diagonal(rng.vector(n2)))};
                    return semidirect(left, right, Representation(left.algebra(), n2, ops));
                }
                case 1: {
                    // a semisimple algebra acting on an unpaired module
                    const bool use_sl2 = rng.chance(2);
                    const LieAlgebra& g1 = use_sl2 ? sl2 : so3;
                    const auto& space = cache.of(use_sl2 ? "sl2" : "so3", g1);
                    Representation pi = [&] {
                        if (!use_sl2) return so3_natural;
                        const std::size_t k = static_cast<std::size_t>(rng.range(1, 3));
                        const Representation vk = vk_module(k);
                        return conjugate_rep(vk, rng.invertible(vk.module_dim()));
                    }();
                    std::vector<std::string> names2;
                    for (std::size_t i = 0; i < pi.module_dim(); ++i)
                        names2.push_back("m" + std::to_string(i));
                    const MetricAlgebra left(g1, sample_form(space, g1.dim(), rng));
                    const MetricAlgebra right{LieAlgebra(names2),
                                              BilinearForm::zero(pi.module_dim())};
                    return semidirect(left, right,
                                      Representation(g1, pi.module_dim(), pi.ops()));
                }
                case 2: {
                    // the solvable plane acting through one form-symmetric operator
                    const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
                    const Matrix s = rng.invertible(m);
                    const Matrix b2 = s.transpose() * s;
                    const Matrix op = inverse(b2) * rng.symmetric(m);
                    std::vector<std::string> names2;
                    for (std::size_t i = 0; i < m; ++i) names2.push_back("n" + std::to_string(i));
                    const MetricAlgebra left(r2, BilinearForm(rng.symmetric(2)));
                    const MetricAlgebra right{LieAlgebra(names2), BilinearForm(b2)};
                    return semidirect(left, right, Representation(r2, m, {op, Matrix(m, m)}));
                }
                default: {
                    // an inner derivation of the nilpotent model, orthogonal to z
                    const auto& space = cache.of("heisenberg3", heis3);
                    const BilinearForm b2 = sample_form(space, 3, rng);
                    const Matrix constraint =
                        Matrix::from_rows({b2.matrix().apply(unit(3, 2))});
                    const Matrix basis = nullspace(constraint);
                    Vector v(3);
                    for (std::size_t r = 0; r < basis.rows(); ++r)
                        v = add(v, scaled(basis.row(r), rng.rational()));
                    const MetricAlgebra left(LieAlgebra({"t"}),
                                             BilinearForm(rng.symmetric(1)));
                    const MetricAlgebra right(heis3, b2);
                    return semidirect(left, right,
                                      Representation(left.algebra(), 3, {heis3.ad(v)}));
                }
                }
            }();
            if (certified(result)) ++good;
        } catch (const Error&) {
        }
    }
    c.check(good == 1000, "semidirect: " + std::to_string(good) + "/1000 certified outputs");

    // --- quadruple_extension ---
    good = 0;
    const RhoSpace v2_space = quadruple_space(vk_module(2));
    for (int t = 0; t < 1000; ++t) {
        try {
            MetricAlgebra result = [&]() -> MetricAlgebra {
                switch (t % 4) {
                case 0: {
                    const char* ids[] = {"sl2", "so3", "heisenberg3",
                                         "r2",  "abelian3", "remark_lorentz"};
                    const char* id = ids[rng.range(0, 5)];
                    const LieAlgebra g = make_by_id(id).algebra;
                    const BilinearForm b = sample_form(cache.of(id, g), g.dim(), rng);
                    return quadruple_extension(adjoint_quadruple(g, b), b);
                }
                case 1: {
                    const Representation v2 = vk_module(2);
                    Matrix rho(3, 3);
                    for (const auto& base : v2_space.basis) {
                        const Rational f = rng.rational();
                        if (!f.is_zero()) rho += f * base;
                    }
                    const BilinearForm bg = sample_form(cache.of("sl2", sl2), 3, rng);
                    return quadruple_extension(Quadruple(v2, rho), bg);
                }
                case 2: {
                    const std::size_t k = static_cast<std::size_t>(rng.range(0, 3));
                    const Representation vk = vk_module(k);
                    const BilinearForm bg = rng.chance(2)
                                                ? BilinearForm::zero(3)
                                                : sample_form(cache.of("sl2", sl2), 3, rng);
                    return quadruple_extension(Quadruple(vk, Matrix(3, k + 1)), bg);
                }
                default: {
                    const std::size_t k1 = static_cast<std::size_t>(rng.range(0, 2));
                    const std::size_t k2 = static_cast<std::size_t>(rng.range(0, 2));
                    const Representation tr = tensor_rep(vk_module(k1), vk_module(k2));
                    return quadruple_extension(Quadruple(tr, Matrix(6, (k1 + 1) * (k2 + 1))),
                                               BilinearForm::zero(6));
                }
                }
            }();
            if (certified(result)) ++good;
        } catch (const Error&) {
        }
    }
    c.check(good == 1000,
            "quadruple_extension: " + std::to_string(good) + "/1000 certified outputs");

    // --- double_extension with a derived cochain ---
    good = 0;
    for (int t = 0; t < 1000; ++t) {
        try {
            MetricAlgebra result = [&]() -> MetricAlgebra {
                switch (t % 4) {
                case 0: {
                    // s acting on its own adjoint module, transported by U
                    const bool use_sl2 = rng.chance(2);
                    const LieAlgebra& s_alg = use_sl2 ? sl2 : so3;
                    const auto& space = cache.of(use_sl2 ? "sl2" : "so3", s_alg);
                    const BilinearForm bs = sample_nondegenerate_form(s_alg, space, rng);
                    const std::size_t n = s_alg.dim();
                    const Matrix u = rng.invertible(n);
                    const Matrix u_inv = inverse(u);
                    std::vector<Matrix> ops;
                    for (std::size_t i = 0; i < n; ++i)
                        ops.push_back(u * s_alg.ad_basis(i) * u_inv);
                    const Rational mu = rng.nonzero_rational();
                    const Matrix bh = mu * (u_inv.transpose() * bs.matrix() * u_inv);
                    std::vector<std::string> names;
                    for (std::size_t i = 0; i < n; ++i)
                        names.push_back("w" + std::to_string(i));
                    const MetricAlgebra s(s_alg, bs);
                    const MetricAlgebra h{LieAlgebra(names), BilinearForm(bh)};
                    const Representation pi(s_alg, n, ops);
                    const BilinearForm btilde =
                        rng.chance(2) ? BilinearForm::zero(n) : sample_form(space, n, rng);
                    return double_extension(h, s, pi, derive_cocycle(h, s, pi), btilde);
                }
                case 1: {
                    // one-dimensional s with the canonical symmetric-free action
                    const std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
                    const Rational cscale = rng.nonzero_rational();
                    Matrix bs(1, 1);
                    bs(0, 0) = cscale;
                    std::vector<std::string> names;
                    for (std::size_t i = 0; i < n; ++i)
                        names.push_back("u" + std::to_string(i));
                    const MetricAlgebra s(LieAlgebra({"d"}), BilinearForm(bs));
                    const MetricAlgebra h{LieAlgebra(names), random_nondegenerate_symmetric(n, rng)};
                    const Matrix theta_mat = rng.antisymmetric(n);
                    const Matrix action =
                        Rational(1, 2) * (inverse(h.form().matrix()) * theta_mat);
                    Cocycle2 theta(n, 1);
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = i + 1; j < n; ++j)
                            theta.set(i, j, {theta_mat(i, j) / cscale});
                    const Representation pi(s.algebra(), n, {action});
                    return double_extension(h, s, pi, theta, BilinearForm::zero(1));
                }
                case 2: {
                    // both the action on h and the cochain vanish
                    const bool use_sl2 = rng.chance(2);
                    const LieAlgebra& s_alg = use_sl2 ? sl2 : so3;
                    const auto& space = cache.of(use_sl2 ? "sl2" : "so3", s_alg);
                    const MetricAlgebra s(s_alg, sample_nondegenerate_form(s_alg, space, rng));
                    const std::size_t k = static_cast<std::size_t>(rng.range(1, 3));
                    std::vector<std::string> names;
                    for (std::size_t i = 0; i < k; ++i)
                        names.push_back("p" + std::to_string(i));
                    const MetricAlgebra h{LieAlgebra(names), random_nondegenerate_symmetric(k, rng)};
                    const Representation pi = trivial_rep(s_alg, k);
                    return double_extension(h, s, pi, Cocycle2(k, s_alg.dim()),
                                            sample_form(space, s_alg.dim(), rng));
                }
                default: {
                    // no h at all: the two copies of s pair hyperbolically
                    const auto& space = cache.of("so3", so3);
                    const MetricAlgebra s(so3, sample_nondegenerate_form(so3, space, rng));
                    const MetricAlgebra h(LieAlgebra(), BilinearForm::zero(0));
                    const Representation pi(so3, 0, std::vector<Matrix>(3, Matrix(0, 0)));
                    return double_extension(h, s, pi, Cocycle2(0, 3),
                                            sample_form(space, 3, rng));
                }
                }
            }();
            if (certified(result)) ++good;
        } catch (const Error&) {
        }
    }
    c.check(good == 1000,
            "double_extension: " + std::to_string(good) + "/1000 certified outputs");

    // --- central_double_extension_1d ---
    good = 0;
    for (int t = 0; t < 1000; ++t) {
        try {
            MetricAlgebra result = [&]() -> MetricAlgebra {
                if (t % 2 == 0) {
                    const std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
                    std::vector<std::string> names;
                    for (std::size_t i = 0; i < n; ++i)
                        names.push_back("e" + std::to_string(i));
                    const MetricAlgebra h{LieAlgebra(names), random_nondegenerate_symmetric(n, rng)};
                    return central_double_extension_1d(
                        h, Cocycle2::from_matrix(rng.antisymmetric(n)));
                }
                // the five-dimensional Heisenberg algebra has no nondegenerate
                // cyclic metric (the central row is forced to vanish), so the
                // nilpotent families are heisenberg3 and heisenberg3 + lines
                const LieAlgebra base =
                    t % 4 == 1 ? make_by_id("heisenberg3").algebra
                               : direct_sum(make_by_id("heisenberg3").algebra,
                                            make_by_id("abelian2").algebra);
                const std::string id = t % 4 == 1 ? "heisenberg3" : "heisenberg3+2";
                const MetricAlgebra h(
                    base, sample_nondegenerate_form(base, cache.of(id, base), rng));
                const auto cocycles = central_cocycle_space(h);
                return central_double_extension_1d(h,
                                                   sample_cocycle(cocycles, base.dim(), rng));
            }();
            if (certified(result)) ++good;
        } catch (const Error&) {
        }
    }
    c.check(good == 1000, "central_double_extension_1d: " + std::to_string(good) +
                              "/1000 certified outputs");
}

// ---- criterion 4 -----------------------------------------------------------

void criterion_round_trip() {
    auto& c = begin_criterion("criterion 4: extend-then-reduce round trips");
    SpaceCache cache;
    Rng rng(4040);
    std::size_t good = 0;
    for (int t = 0; t < 200; ++t) {
        try {
            const MetricAlgebra h = [&]() -> MetricAlgebra {
                if (t % 2 == 0) {
                    const std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
                    std::vector<std::string> names;
                    for (std::size_t i = 0; i < n; ++i)
                        names.push_back("e" + std::to_string(i));
                    return MetricAlgebra{LieAlgebra(names), random_nondegenerate_symmetric(n, rng)};
                }
                const LieAlgebra base =
                    t % 4 == 1 ? make_by_id("heisenberg3").algebra
                               : direct_sum(make_by_id("heisenberg3").algebra,
                                            make_by_id("abelian1").algebra);
                const std::string id = t % 4 == 1 ? "heisenberg3" : "heisenberg3+1";
                return MetricAlgebra(base,
                                     sample_nondegenerate_form(base, cache.of(id, base), rng));
            }();
            const Cocycle2 theta = [&] {
                if (t % 2 == 0) return Cocycle2::from_matrix(rng.antisymmetric(h.dim()));
                return sample_cocycle(central_cocycle_space(h), h.dim(), rng);
            }();
            const MetricAlgebra e = central_double_extension_1d(h, theta);
            Vector z(e.dim());
            z[e.dim() - 1] = Rational(1);
            const CentralReduction red = reduce_central(e, z);
            const bool exact = red.reduced.algebra().same_structure(h.algebra()) &&
                               red.reduced.form().matrix() == h.form().matrix() &&
                               red.cocycle.as_matrix() == theta.as_matrix() &&
                               red.x_choice == unit(e.dim(), 0);
            if (exact) ++good;
        } catch (const Error&) {
        }
    }
    c.check(good == 200, "exact recovery of (h, theta): " + std::to_string(good) + "/200");
}

// ---- criterion 5 -----------------------------------------------------------

void criterion_lemma_suite() {
    auto& c = begin_criterion("criterion 5: lemma suite over catalog metric algebras");
    const std::vector<std::string> ids = {"sl2",
                                          "sl3",
                                          "so3",
                                          "so4",
                                          "su2",
                                          "gl2",
                                          "abelian2",
                                          "abelian3",
                                          "abelian4",
                                          "heisenberg3",
                                          "heisenberg5",
                                          "r2",
                                          "remark_lorentz",
                                          "sl2_semidirect_F2",
                                          "gl2_semidirect_F2",
                                          "so3_semidirect_F3",
                                          "sl3_semidirect_F3"};

    Rng rng(5050);
    std::size_t forms_checked = 0, violations = 0;
    const std::size_t target_forms = 500;

    struct Prepared {
        CatalogEntry entry;
        FormSpace space;
        std::vector<Subspace> subalgebras;
        std::vector<Subspace> ideals;
        std::vector<std::pair<Subspace, Subspace>> splits;
    };
    std::vector<Prepared> prepared;
    for (const auto& id : ids) {
        Prepared p{make_by_id(id), {}, {}, {}, {}};
        const LieAlgebra& g = p.entry.algebra;
        p.space = cyclic_space(g);

        std::vector<Subspace> candidates{center(g)};
        for (const auto& s : derived_series(g)) candidates.push_back(s);
        for (const auto& s : lower_central_series(g)) candidates.push_back(s);
        for (const auto& s : upper_central_series(g)) candidates.push_back(s);
        if (p.entry.levi) candidates.push_back(*p.entry.levi);
        if (p.entry.radical) candidates.push_back(*p.entry.radical);
        if (p.entry.nilradical) candidates.push_back(*p.entry.nilradical);
        candidates.push_back(Subspace::whole(g.dim()));
        candidates.push_back(Subspace::zero(g.dim()));
        for (const auto& s : candidates) {
            if (is_subalgebra(g, s) &&
                std::find(p.subalgebras.begin(), p.subalgebras.end(), s) ==
                    p.subalgebras.end())
                p.subalgebras.push_back(s);
            if (is_ideal(g, s) &&
                std::find(p.ideals.begin(), p.ideals.end(), s) == p.ideals.end())
                p.ideals.push_back(s);
        }
        if (p.entry.levi && p.entry.radical &&
            p.entry.levi->dim() + p.entry.radical->dim() == g.dim() &&
            intersect(*p.entry.levi, *p.entry.radical).dim() == 0)
            p.splits.emplace_back(*p.entry.levi, *p.entry.radical);
        p.splits.emplace_back(Subspace::whole(g.dim()), Subspace::zero(g.dim()));
        p.splits.emplace_back(Subspace::zero(g.dim()), Subspace::whole(g.dim()));
        prepared.push_back(std::move(p));
    }

    std::size_t cursor = 0;
    while (forms_checked < target_forms) {
        Prepared& p = prepared[cursor % prepared.size()];
        ++cursor;
        const LieAlgebra& g = p.entry.algebra;
        const BilinearForm b = sample_form(p.space, g.dim(), rng);
        ++forms_checked;

        // (a) restriction to any subalgebra stays cyclic
        for (const auto& h : p.subalgebras)
            if (!cyclic_defect(restrict_to(g, h), restrict_form(b, h)).empty()) {
                ++violations;
                c.count(false, p.entry.name + ": restriction to a subalgebra is not cyclic");
            }
        // (b) B([h,h], V) = 0 whenever [h, V] = 0
        for (const auto& h : p.subalgebras) {
            const Subspace hh = subspace_bracket(g, h, h);
            const Subspace v = centralizer(g, h);
            for (std::size_t a = 0; a < hh.dim(); ++a)
                for (std::size_t w = 0; w < v.dim(); ++w)
                    if (!b.eval(hh.basis_row(a), v.basis_row(w)).is_zero()) {
                        ++violations;
                        c.count(false,
                                p.entry.name + ": derived block pairs with a centralizer");
                    }
        }
        // (c) the orthogonal complement of an ideal is a subalgebra
        for (const auto& ideal : p.ideals)
            if (!is_subalgebra(g, orthogonal_complement(g, b, ideal))) {
                ++violations;
                c.count(false, p.entry.name + ": some ideal's complement is not a subalgebra");
            }
        // (d) the center meets the derived algebra isotropically
        const Subspace cap =
            intersect(center(g), subspace_bracket(g, Subspace::whole(g.dim()),
                                                  Subspace::whole(g.dim())));
        if (!is_isotropic(g, b, cap)) {
            ++violations;
            c.count(false, p.entry.name + ": center cap derived algebra is not isotropic");
        }
        // (e) the split criterion holds on every subalgebra + ideal decomposition
        for (const auto& [h, i] : p.splits)
            if (!check_abc(g, b, h, i).all()) {
                ++violations;
                c.count(false, p.entry.name + ": split criterion failed on a decomposition");
            }
    }
    c.check(violations == 0, "no lemma violations over " + std::to_string(forms_checked) +
                                 " sampled cyclic forms");
}

// ---- criterion 6 -----------------------------------------------------------

void criterion_signature() {
    auto& c = begin_criterion("criterion 6: signature and index of the Lorentz example");
    const MetricAlgebra remark = remark_lorentz_metric();
    const Signature sig = signature(remark.form().matrix());
    c.check(sig == Signature{3, 1, 0}, "signature of the Lorentz metric is (3, 1, 0)");
    c.check(index_of(remark.form()) == 1, "index of the Lorentz metric is 1");

    Rng rng(6060);
    std::size_t stable = 0;
    for (int t = 0; t < 100; ++t) {
        const Matrix s = rng.invertible(4);
        if (signature(s.transpose() * remark.form().matrix() * s) == sig) ++stable;
    }
    c.check(stable == 100, "signature invariant under 100 random congruences: " +
                               std::to_string(stable) + "/100");
}

// ---- criterion 7 -----------------------------------------------------------

void criterion_equation_reduction() {
    auto& c = begin_criterion("criterion 7: full and reduced cyclic systems agree in rank");
    Rng rng(7070);
    std::size_t agree = 0;
    for (int t = 0; t < 20; ++t) {
        const LieAlgebra g = [&]() -> LieAlgebra {
            switch (rng.range(0, 7)) {
            case 0: return make("sl", {static_cast<std::size_t>(rng.range(2, 3))}).algebra;
            case 1: return make("so", {static_cast<std::size_t>(rng.range(3, 4))}).algebra;
            case 2: return make("gl", {static_cast<std::size_t>(rng.range(1, 2))}).algebra;
            case 3:
                return make("abelian", {static_cast<std::size_t>(rng.range(1, 5))}).algebra;
            case 4:
                return make("heisenberg", {static_cast<std::size_t>(2 * rng.range(1, 3) + 1)})
                    .algebra;
            case 5: return make_by_id("r2").algebra;
            case 6: return make_by_id("remark_lorentz").algebra;
            default: return make_by_id("sl2_semidirect_F2").algebra;
            }
        }();
        if (rank_of(full_cyclic_system(g)) == cyclic_space(g).system.rank) ++agree;
    }
    c.check(agree == 20,
            "rank agreement on 20 random catalog algebras: " + std::to_string(agree) + "/20");
}

} // namespace

int main() {
    criterion_solver_dimensions();
    criterion_quadruple_dimensions();
    criterion_constructor_soundness();
    criterion_round_trip();
    criterion_lemma_suite();
    criterion_signature();
    criterion_equation_reduction();

    std::cout << "\n== summary ==\n";
    int failed_criteria = 0;
    for (const auto& c : criteria) {
        const bool ok = c.failed == 0;
        if (!ok) ++failed_criteria;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.passed << "/"
                  << c.passed + c.failed << " checks)\n";
    }
    std::cout << "acceptance: " << criteria.size() - failed_criteria << "/" << criteria.size()
              << " criteria passed\n";
    return failed_criteria;
}
