#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/generators.hpp"
#include "support/rng.hpp"

#include "cyclic/catalog.hpp"
#include "cyclic/constructions.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/forms.hpp"
#include "cyclic/structure.hpp"

using namespace cyclic;
using cyclic::testing::central_cocycle_space;
using cyclic::testing::random_nondegenerate_symmetric;
using cyclic::testing::Rng;
using cyclic::testing::sample_cocycle;
using cyclic::testing::sample_form;
using cyclic::testing::sample_nondegenerate_form;

namespace {

Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = Rational(1);
    return v;
}

BilinearForm sl2_family(const Rational& t) {
    Matrix b(3, 3);
    b(0, 0) = Rational(-4) * t;
    b(1, 2) = t;
    b(2, 1) = t;
    return BilinearForm(b);
}

// shared sanity block: certified cyclic, valid, and with an isotropic
// center-cap-derived subspace
void assert_certified(const MetricAlgebra& ma) {
    CHECK(ma.algebra().validate().ok);
    CHECK(cyclic_defect(ma.algebra(), ma.form()).empty());
    const Subspace cap =
        intersect(center(ma.algebra()),
                  subspace_bracket(ma.algebra(), Subspace::whole(ma.dim()),
                                   Subspace::whole(ma.dim())));
    if (form_radical(ma.algebra(), ma.form()).dim() == 0)
        CHECK(is_isotropic(ma.algebra(), ma.form(), cap));
}

MetricAlgebra oscillator() {
    MetricAlgebra h(LieAlgebra({"e1", "e2"}), BilinearForm(Matrix::identity(2)));
    Matrix th(2, 2);
    th(0, 1) = Rational(1);
    th(1, 0) = Rational(-1);
    return central_double_extension_1d(h, Cocycle2::from_matrix(th));
}

} // namespace

TEST_CASE("metric algebras certify their form at construction") {
    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    CHECK_NOTHROW(MetricAlgebra(sl2, sl2_family(Rational(1))));
    CHECK_THROWS_WITH_AS(MetricAlgebra(sl2, killing_form(sl2)),
                         doctest::Contains("not cyclic"), ValidationError);
    CHECK_THROWS_AS(MetricAlgebra(sl2, BilinearForm::zero(4)), ValidationError);
}

TEST_CASE("cochain container") {
    Cocycle2 theta(3, 2);
    theta.set(0, 1, {Rational(1), Rational(2)});
    CHECK(theta(1, 0) == Vector{Rational(-1), Rational(-2)});
    CHECK(theta.eval(unit(3, 0), unit(3, 1)) == Vector{Rational(1), Rational(2)});
    CHECK_THROWS_AS(theta.set(0, 0, {Rational(1), Rational(0)}), ValidationError);
    CHECK_THROWS_AS(theta.as_matrix(), ValidationError);

    Rng rng(41);
    const Matrix a = rng.antisymmetric(4);
    CHECK(Cocycle2::from_matrix(a).as_matrix() == a);
    CHECK_THROWS_AS(Cocycle2::from_matrix(rng.symmetric(3)), ValidationError);
}

TEST_CASE("a vanishing action reduces the semidirect product to the orthogonal sum") {
    Rng rng(42);
    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    const LieAlgebra ab3 = make_by_id("abelian3").algebra;
    const MetricAlgebra left(sl2, sl2_family(Rational(1)));
    const MetricAlgebra right(ab3, BilinearForm(rng.symmetric(3)));
    const MetricAlgebra prod = semidirect(left, right, trivial_rep(sl2, 3));
    assert_certified(prod);
    CHECK(prod.algebra().same_structure(direct_sum(sl2, ab3)));
    // block-diagonal form
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) CHECK(prod.form().matrix()(i, j).is_zero());
}

TEST_CASE("the four-dimensional Lorentz example arises as a semidirect product") {
    Matrix pairing(2, 2);
    pairing(0, 1) = Rational(1);
    pairing(1, 0) = Rational(1);
    const MetricAlgebra acting(LieAlgebra({"x1", "x2"}), BilinearForm(pairing));
    const MetricAlgebra target(LieAlgebra({"y1", "y2"}), BilinearForm(Matrix::identity(2)));
    const Representation pi(acting.algebra(), 2,
                            {Matrix::diagonal({Rational(1), Rational(0)}),
                             Matrix::diagonal({Rational(0), Rational(1)})});
    const MetricAlgebra g = semidirect(acting, target, pi);
    assert_certified(g);
    CHECK(index_of(g.form()) == 1);
    CHECK(signature(g.form().matrix()) == Signature{3, 1, 0});
    // bracket table: [x1, y1] = y1, [x2, y2] = y2, everything else zero
    const auto& a = g.algebra();
    CHECK(a.bracket_basis(0, 2) == unit(4, 2));
    CHECK(a.bracket_basis(1, 3) == unit(4, 3));
    CHECK(is_zero(a.bracket_basis(0, 1)));
    CHECK(is_zero(a.bracket_basis(0, 3)));
    CHECK(is_zero(a.bracket_basis(1, 2)));
    CHECK(is_zero(a.bracket_basis(2, 3)));
    // same structure constants as the catalog model, up to basis order
    const MetricAlgebra remark = remark_lorentz_metric();
    CHECK(cyclic_space(a).dimension() == cyclic_space(remark.algebra()).dimension());
}

TEST_CASE("rotations acting on an unpaired translation space") {
    const CatalogEntry so3 = make_by_id("so3");
    const auto space = cyclic_space(so3.algebra);
    Rng rng(43);
    const MetricAlgebra acting(so3.algebra, sample_form(space, 3, rng));
    const MetricAlgebra target(make_by_id("abelian3").algebra, BilinearForm::zero(3));
    const MetricAlgebra g = semidirect(acting, target, *so3.natural_rep);
    assert_certified(g);
    CHECK(g.dim() == 6);
}

TEST_CASE("semidirect rejects non-symmetric and non-derivation actions") {
    const CatalogEntry sl2 = make_by_id("sl2");
    const MetricAlgebra acting(sl2.algebra, sl2_family(Rational(1)));
    const MetricAlgebra target(make_by_id("abelian2").algebra,
                               BilinearForm(Matrix::identity(2)));
    CHECK_THROWS_WITH_AS(semidirect(acting, target, *sl2.natural_rep),
                         doctest::Contains("not symmetric"), ValidationError);

    // an action failing the derivation law on a nonabelian target
    const MetricAlgebra heis(make_by_id("heisenberg3").algebra, BilinearForm::zero(3));
    const MetricAlgebra line(LieAlgebra({"t"}), BilinearForm::zero(1));
    Matrix bad(3, 3);
    bad(2, 0) = Rational(1); // maps x to z but not compatibly
    bad(0, 2) = Rational(1);
    CHECK_THROWS_WITH_AS(
        semidirect(line, heis, Representation(line.algebra(), 3, {bad})),
        doctest::Contains("not a derivation"), ValidationError);
}

TEST_CASE("adjoint quadruples") {
    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    CHECK(adjoint_quadruple(sl2, BilinearForm::zero(3)).rho().is_zero());
    for (long t = -2; t <= 2; ++t)
        if (t != 0) CHECK_NOTHROW(adjoint_quadruple(sl2, sl2_family(Rational(t))));
    Rng rng(44);
    const LieAlgebra ab4 = make_by_id("abelian4").algebra;
    CHECK_NOTHROW(adjoint_quadruple(ab4, BilinearForm(rng.symmetric(4))));
    CHECK_THROWS_AS(adjoint_quadruple(sl2, killing_form(sl2)), ValidationError);
}

TEST_CASE("quadruple extensions") {
    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    Rng rng(45);

    // rho = 0 with a zero base form gives the semidirect algebra with zero form
    {
        const Representation v1 = vk_module(1);
        const MetricAlgebra l =
            quadruple_extension(Quadruple(v1, Matrix(3, 2)), BilinearForm::zero(3));
        assert_certified(l);
        CHECK(l.dim() == 5);
        CHECK(l.form().is_zero());
        CHECK(l.algebra().same_structure(make_by_id("sl2_semidirect_F2").algebra));
    }
    // the adjoint quadruple of a nondegenerate form extends nondegenerately
    {
        const BilinearForm b = sl2_family(Rational(1));
        const MetricAlgebra l = quadruple_extension(adjoint_quadruple(sl2, b), b);
        assert_certified(l);
        CHECK(l.dim() == 6);
        CHECK(form_radical(l.algebra(), l.form()).dim() == 0);
    }
    // a degenerate base form extends degenerately
    {
        Matrix b(3, 3);
        b(0, 0) = Rational(-4);
        b(1, 2) = Rational(1);
        b(2, 1) = Rational(1);
        b(1, 1) = Rational(7); // still cyclic: the constraint touches only (H,H),(X,Y)
        const BilinearForm base(b);
        REQUIRE(is_cyclic(sl2, base));
        const MetricAlgebra l = quadruple_extension(adjoint_quadruple(sl2, base), base);
        CHECK(form_radical(l.algebra(), l.form()).dim() ==
              form_radical(sl2, base).dim());
    }
    // forced rho = 0 on the plane module: the plane lands in the radical
    {
        const Representation v1 = vk_module(1);
        REQUIRE(quadruple_space(v1).basis.empty());
        const MetricAlgebra l =
            quadruple_extension(Quadruple(v1, Matrix(3, 2)), sl2_family(Rational(1)));
        assert_certified(l);
        const Subspace rad = form_radical(l.algebra(), l.form());
        CHECK(rad == Subspace::span(5, std::vector<Vector>{unit(5, 3), unit(5, 4)}));
    }
}

TEST_CASE("quadruple extension block invariants") {
    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    Rng rng(46);
    const auto space = cyclic_space(sl2);
    for (int t = 0; t < 5; ++t) {
        const BilinearForm b = sample_form(space, 3, rng);
        const Quadruple q = adjoint_quadruple(sl2, b);
        const MetricAlgebra l = quadruple_extension(q, b);
        const Subspace module_block =
            Subspace::span(6, std::vector<Vector>{unit(6, 3), unit(6, 4), unit(6, 5)});
        CHECK(is_ideal(l.algebra(), module_block));
        CHECK(subspace_bracket(l.algebra(), module_block, module_block).dim() == 0);
        CHECK(is_isotropic(l.algebra(), l.form(), module_block));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t m = 0; m < 3; ++m)
                CHECK(l.form().matrix()(i, 3 + m) == q.rho()(i, m));
    }
}

TEST_CASE("double extension: the hyperbolic plane over a symplectic cochain") {
    const MetricAlgebra e = oscillator();
    assert_certified(e);
    CHECK(e.dim() == 4);
    CHECK(form_radical(e.algebra(), e.form()).dim() == 0);
    // the new central direction is isotropic
    const Subspace c = center(e.algebra());
    CHECK(c.dim() == 1);
    CHECK(is_isotropic(e.algebra(), e.form(), c));
    CHECK(signature(e.form().matrix()) == Signature{3, 1, 0});
}

TEST_CASE("double extension with no h at all pairs the two copies hyperbolically") {
    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    const MetricAlgebra s(sl2, sl2_family(Rational(1)));
    const MetricAlgebra h(LieAlgebra(), BilinearForm::zero(0));
    const Representation pi(sl2, 0, std::vector<Matrix>(3, Matrix(0, 0)));
    const MetricAlgebra g =
        double_extension(h, s, pi, Cocycle2(0, 3), BilinearForm::zero(3));
    assert_certified(g);
    CHECK(g.dim() == 6);
    // B(s, s) = b_tilde = 0, B(s, s-copy) = B_s, B(s-copy, s-copy) = 0
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            CHECK(g.form().matrix()(a, b).is_zero());
            CHECK(g.form().matrix()(3 + a, 3 + b).is_zero());
            CHECK(g.form().matrix()(a, 3 + b) == sl2_family(Rational(1)).matrix()(a, b));
        }
}

TEST_CASE("the central copy is central when both the action and the cochain vanish") {
    Rng rng(47);
    const MetricAlgebra s(make_by_id("abelian2").algebra,
                          random_nondegenerate_symmetric(2, rng));
    const MetricAlgebra h(LieAlgebra({"u"}), BilinearForm(Matrix::identity(1)));
    const Representation pi(s.algebra(), 1, {Matrix(1, 1), Matrix(1, 1)});
    const MetricAlgebra g = double_extension(h, s, pi, Cocycle2(1, 2), BilinearForm::zero(2));
    assert_certified(g);
    CHECK(g.dim() == 5);
    const Subspace copy = Subspace::span(5, std::vector<Vector>{unit(5, 3), unit(5, 4)});
    CHECK(center(g.algebra()).contains(copy));
}

TEST_CASE("the nine-dimensional double extension over the adjoint module") {
    // the derived cochain is exactly the bracket map when B_h matches B_s
    // under the module-to-algebra identification
    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    const BilinearForm bs = sl2_family(Rational(1));
    const MetricAlgebra s(sl2, bs);
    const MetricAlgebra h(LieAlgebra({"a1", "a2", "a3"}), bs);
    const Representation pi = adjoint_rep(sl2); // as matrices acting on h
    const Representation action(sl2, 3, pi.ops());
    const Cocycle2 theta = derive_cocycle(h, s, action);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(theta(i, j) == sl2.bracket_basis(i, j));
    const MetricAlgebra g = double_extension(h, s, action, theta, BilinearForm::zero(3));
    assert_certified(g);
    CHECK(g.dim() == 9);
    CHECK(form_radical(g.algebra(), g.form()).dim() == 0);
}

TEST_CASE("double extension rejects each broken precondition with a witness") {
    const LieAlgebra sl2 = make_by_id("sl2").algebra;
    const BilinearForm bs = sl2_family(Rational(1));
    const MetricAlgebra s(sl2, bs);
    const MetricAlgebra h(LieAlgebra({"a1", "a2", "a3"}), bs);
    const Representation action(sl2, 3, adjoint_rep(sl2).ops());
    const Cocycle2 theta = derive_cocycle(h, s, action);

    // degenerate form on h
    CHECK_THROWS_WITH_AS(
        double_extension(MetricAlgebra(h.algebra(), BilinearForm::zero(3)), s, action, theta,
                         BilinearForm::zero(3)),
        doctest::Contains("nondegenerate"), ValidationError);
    // b_tilde not cyclic
    CHECK_THROWS_WITH_AS(
        double_extension(h, s, action, theta, killing_form(sl2)),
        doctest::Contains("cyclic"), ValidationError);
    // wrong cochain: compatibility fails
    Cocycle2 wrong(3, 3);
    wrong.set(0, 1, unit(3, 0));
    CHECK_THROWS_WITH_AS(double_extension(h, s, action, wrong, BilinearForm::zero(3)),
                         doctest::Contains("compatibility"), ValidationError);
}

TEST_CASE("one-dimensional central extensions") {
    Rng rng(48);
    // a zero cochain just glues a hyperbolic plane on top
    {
        const MetricAlgebra h(make_by_id("heisenberg3").algebra,
                              sample_nondegenerate_form(
                                  make_by_id("heisenberg3").algebra,
                                  cyclic_space(make_by_id("heisenberg3").algebra), rng));
        const MetricAlgebra e = central_double_extension_1d(h, Cocycle2(3, 1));
        assert_certified(e);
        CHECK(e.dim() == 5);
        CHECK(form_radical(e.algebra(), e.form()).dim() == 0);
        // the two new directions bracket to nothing
        CHECK(is_zero(e.algebra().bracket_basis(0, 4)));
        for (std::size_t i = 0; i < 3; ++i) CHECK(is_zero(e.algebra().bracket_basis(0, i + 1)));
    }
    // a degenerate cochain row is fine as long as everything still closes
    {
        const MetricAlgebra h(make_by_id("abelian3").algebra,
                              BilinearForm(Matrix::identity(3)));
        Matrix t(3, 3);
        t(0, 1) = Rational(1);
        t(1, 0) = Rational(-1); // third row zero
        const MetricAlgebra e = central_double_extension_1d(h, Cocycle2::from_matrix(t));
        assert_certified(e);
        CHECK(e.dim() == 5);
        CHECK(form_radical(e.algebra(), e.form()).dim() == 0);
    }
    CHECK_THROWS_AS(central_double_extension_1d(
                        MetricAlgebra(make_by_id("abelian2").algebra, BilinearForm::zero(2)),
                        Cocycle2(2, 1)),
                    ValidationError);
}

TEST_CASE("reducing the oscillator recovers its data exactly") {
    const MetricAlgebra e = oscillator();
    Vector z(4);
    z[3] = Rational(1);
    const CentralReduction red = reduce_central(e, z);
    CHECK(red.reduced.dim() == 2);
    CHECK(red.reduced.form().matrix() == Matrix::identity(2));
    CHECK(red.reduced.algebra().same_structure(LieAlgebra({"a", "b"})));
    Matrix th(2, 2);
    th(0, 1) = Rational(1);
    th(1, 0) = Rational(-1);
    CHECK(red.cocycle.as_matrix() == th);
    CHECK(red.x_choice == unit(4, 0));
}

TEST_CASE("reducing a trivial extension recovers the abelian block") {
    Rng rng(49);
    const MetricAlgebra h(make_by_id("abelian3").algebra, random_nondegenerate_symmetric(3, rng));
    const MetricAlgebra e = central_double_extension_1d(h, Cocycle2(3, 1));
    Vector z(5);
    z[4] = Rational(1);
    const CentralReduction red = reduce_central(e, z);
    CHECK(red.reduced.dim() == 3);
    CHECK(red.reduced.form().matrix() == h.form().matrix());
    CHECK(red.cocycle.as_matrix().is_zero());
}

TEST_CASE("reduction rejects bad centers, non-isotropic directions and degenerate forms") {
    const MetricAlgebra e = oscillator();
    CHECK_THROWS_WITH_AS(reduce_central(e, unit(4, 1)), doctest::Contains("not central"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(reduce_central(e, Vector(4)), doctest::Contains("nonzero"),
                         ValidationError);

    // an extension with B(z, z) != 0 at the candidate direction
    Rng rng(50);
    const MetricAlgebra flat(make_by_id("abelian3").algebra,
                             BilinearForm(Matrix::identity(3)));
    CHECK_THROWS_WITH_AS(reduce_central(flat, unit(3, 0)),
                         doctest::Contains("not isotropic"), ValidationError);
    const MetricAlgebra degenerate(make_by_id("abelian2").algebra, BilinearForm::zero(2));
    CHECK_THROWS_WITH_AS(reduce_central(degenerate, unit(2, 0)),
                         doctest::Contains("nondegenerate"), ValidationError);
}

TEST_CASE("extension followed by reduction is the identity on the data") {
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
        const MetricAlgebra h(LieAlgebra(names), random_nondegenerate_symmetric(n, rng));
        const Cocycle2 theta = Cocycle2::from_matrix(rng.antisymmetric(n));
        const MetricAlgebra e = central_double_extension_1d(h, theta);
        Vector z(n + 2);
        z[n + 1] = Rational(1);
        const CentralReduction red = reduce_central(e, z);
        CHECK(red.reduced.dim() == n);
        CHECK(red.reduced.form().matrix() == h.form().matrix());
        CHECK(red.cocycle.as_matrix() == theta.as_matrix());
        CHECK(red.reduced.algebra().same_structure(h.algebra()));
    }
}

TEST_CASE("reduction followed by extension matches under the recorded basis") {
    Rng rng(52);
    const MetricAlgebra h(make_by_id("heisenberg3").algebra,
                          sample_nondegenerate_form(make_by_id("heisenberg3").algebra,
                                                    cyclic_space(make_by_id("heisenberg3").algebra),
                                                    rng));
    const auto cocycles = central_cocycle_space(h);
    const Cocycle2 theta = sample_cocycle(cocycles, 3, rng);
    const MetricAlgebra e = central_double_extension_1d(h, theta);
    Vector z(5);
    z[4] = Rational(1);
    const CentralReduction red = reduce_central(e, z);
    const MetricAlgebra rebuilt = central_double_extension_1d(red.reduced, red.cocycle);
    REQUIRE(rebuilt.dim() == e.dim());

    // recorded change of basis: x, complement rows, z
    std::vector<Vector> rows{red.x_choice};
    for (std::size_t t = 0; t < red.complement.dim(); ++t)
        rows.push_back(red.complement.basis_row(t));
    rows.push_back(z);
    const Matrix t_mat = Matrix::from_rows(rows);
    // forms agree after transport
    CHECK(t_mat * e.form().matrix() * t_mat.transpose() == rebuilt.form().matrix());
    // brackets agree after transport
    const auto& ge = e.algebra();
    const auto& gr = rebuilt.algebra();
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b) {
            const Vector lhs = ge.bracket(t_mat.row(a), t_mat.row(b));
            Vector rhs(5);
            const Vector coeffs = gr.bracket_basis(a, b);
            for (std::size_t t = 0; t < 5; ++t)
                if (!coeffs[t].is_zero()) rhs = add(rhs, scaled(t_mat.row(t), coeffs[t]));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("central cochain spaces for the nilpotent model") {
    Rng rng(53);
    const LieAlgebra h3 = make_by_id("heisenberg3").algebra;
    const auto space = cyclic_space(h3);
    for (int t = 0; t < 5; ++t) {
        const MetricAlgebra h(h3, sample_nondegenerate_form(h3, space, rng));
        const auto basis = central_cocycle_space(h);
        for (const auto& theta : basis)
            CHECK_NOTHROW(central_double_extension_1d(h, theta));
    }
}
