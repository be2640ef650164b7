#include <doctest.h>

#include "lycas/catalog.hpp"
#include "lycas/lyalg.hpp"

using namespace lycas;

namespace {

Rat q(long n, long d = 1) { return frac(n, d); }

// e1*e2 = e1 with zero ternary bracket.
LYAlgebra affine_line_algebra() {
    LYAlgebra T(2, "aff");
    T.set_b(0, 1, 0, q(1));
    return T;
}

LYAlgebra sl2_as_ly() { return make_g_alpha_beta(make_sl(2), q(1), q(1)); }

}  // namespace

TEST_CASE("a small hand-built algebra satisfies the axioms") {
    LYAlgebra T = affine_line_algebra();
    AxiomReport rep = check_ly_axioms(T);
    CHECK(rep.pass());
    CHECK(rep.checks.size() == 6);
    const char* labels[] = {"LY1", "LY2", "LY3", "LY4", "LY5", "LY6"};
    for (size_t i = 0; i < 6; ++i) CHECK(rep.checks[i].axiom == labels[i]);
    CHECK(!T.validated());
    LYAlgebra V = validated(T);
    CHECK(V.validated());
    CHECK(V.same_structure(T));
}

TEST_CASE("bin and tern agree with the structure tables") {
    LYAlgebra T = sl2_as_ly();
    CHECK(T.bin(unit_vec(3, 0), unit_vec(3, 1)) == Vec{q(0), q(0), q(1)});
    // [e,f,f] = [h,f] = -2f, bilinearity over a combination:
    Vec x{q(1), q(2), q(0)};
    Vec lhs = T.tern(x, unit_vec(3, 1), unit_vec(3, 1));
    Vec expect = add(T.t_basis(0, 1, 1), scale(q(2), T.t_basis(1, 1, 1)));
    CHECK(lhs == expect);
    CHECK(T.t_basis(0, 1, 1) == Vec{q(0), q(-2), q(0)});
}

TEST_CASE("corrupted tables report the first failing tuple") {
    {
        LYAlgebra T = sl2_as_ly();
        T.b(1, 0, 2) += 1;  // raw write, mirror left stale
        AxiomReport rep = check_ly_axioms(T);
        CHECK(!rep.pass());
        CHECK(rep.failing()->axiom == "LY1");
        CHECK(rep.failing()->witness == std::vector<int>{0, 1});
    }
    {
        LYAlgebra T = sl2_as_ly();
        T.t(2, 1, 0, 0) += 1;
        AxiomReport rep = check_ly_axioms(T);
        CHECK(rep.checks[0].pass);
        CHECK(rep.failing()->axiom == "LY2");
        CHECK(rep.failing()->witness == std::vector<int>{1, 2, 0});
    }
    {
        // An antisymmetric single-entry perturbation cancels inside the
        // cyclic sums of LY3 and LY4 and first surfaces in LY5.
        LYAlgebra T = sl2_as_ly();
        T.set_t(0, 1, 0, 1, T.t(0, 1, 0, 1) + 1);
        AxiomReport rep = check_ly_axioms(T);
        for (int a = 0; a < 4; ++a) CHECK(rep.checks[a].pass);
        CHECK(!rep.checks[4].pass);
        CHECK(rep.checks[4].witness == std::vector<int>{0, 1, 0, 2});
        CHECK_THROWS_AS(validated(T), std::invalid_argument);
    }
}

TEST_CASE("inner derivations of sl2 with both products") {
    LYAlgebra T = sl2_as_ly();
    // D_{e,f} = [h, .] = diag(2, -2, 0).
    Mat def = d_map(T, unit_vec(3, 0), unit_vec(3, 1));
    Mat expect(3, 3);
    expect(0, 0) = q(2);
    expect(1, 1) = q(-2);
    CHECK(def == expect);

    DerivationSpace ds = inner_derivation_space(T);
    CHECK(ds.pairs == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(ds.space.dim() == 3);
    CHECK(ds.basis_pairs == std::vector<int>{0, 1, 2});
    CHECK(ds.pair_mat.rows() == 9);
    CHECK(ds.pair_mat.cols() == 3);
    CHECK(ds.pair_mat.col(0) == def.flatten());

    CHECK(triple_product_span(T) == Subspace::full(3));
    LYAlgebra flat = make_g_alpha_beta(make_sl(2), q(1), q(0));
    CHECK(triple_product_span(flat).dim() == 0);
    CHECK(inner_derivation_space(flat).space.dim() == 0);
}

TEST_CASE("d_sub spans derivations with one argument constrained") {
    LYAlgebra T = sl2_as_ly();
    Subspace e_line = Subspace::span(Mat::from_rows({unit_vec(3, 0)}));
    Subspace all = Subspace::full(3);
    // D_{e,e} = 0, D_{e,f} = ad h, D_{e,h} = -2 ad e: two dimensions.
    CHECK(d_sub(T, e_line, all).dim() == 2);
    CHECK(d_sub(T, all, all).dim() == 3);
    CHECK(d_sub(T, e_line, e_line).dim() == 0);
}

TEST_CASE("subalgebra and ideal predicates") {
    LYAlgebra T = sl2_as_ly();
    Subspace e_line = Subspace::span(Mat::from_rows({unit_vec(3, 0)}));
    CHECK(is_subalgebra(T, e_line).pass);
    CheckResult id = is_ideal(T, e_line);
    CHECK(!id.pass);
    CHECK(id.witness == std::vector<int>{0, 1});
    CHECK(id.detail == "U*T leaves U");

    LYAlgebra A = affine_line_algebra();
    Subspace first = Subspace::span(Mat::from_rows({unit_vec(2, 0)}));
    CHECK(is_ideal(A, first).pass);
    CHECK(is_abelian_ideal(A, first).pass);
    Subspace second = Subspace::span(Mat::from_rows({unit_vec(2, 1)}));
    CHECK(!is_ideal(A, second).pass);
}

TEST_CASE("homomorphism check") {
    LYAlgebra T = sl2_as_ly();
    LYHom id{T, T, Mat::identity(3)};
    CHECK(check_hom(id).pass);

    // e <-> f, h -> -h is an automorphism for both products.
    Mat swap(3, 3);
    swap(1, 0) = q(1);
    swap(0, 1) = q(1);
    swap(2, 2) = q(-1);
    CHECK(check_hom(LYHom{T, T, swap}).pass);

    Mat stretch = Mat::identity(3);
    stretch(2, 2) = q(2);
    CheckResult bad = check_hom(LYHom{T, T, stretch});
    CHECK(!bad.pass);
    CHECK(bad.witness == std::vector<int>{0, 1});
    CHECK(bad.detail == "binary product not preserved");

    LYHom shape{T, T, Mat::identity(2)};
    CHECK_THROWS_AS(check_hom(shape), std::invalid_argument);
}

TEST_CASE("s-manifold axioms") {
    LYAlgebra line(1, "Q");
    CHECK(check_ism(InfSManifold{line, Mat::from_rows({{q(2)}})}).pass());
    AxiomReport fixed = check_ism(InfSManifold{line, Mat::from_rows({{q(1)}})});
    CHECK(!fixed.pass());
    CHECK(fixed.failing()->axiom == "ISM0");
    AxiomReport sing = check_ism(InfSManifold{line, Mat::from_rows({{q(0)}})});
    CHECK(sing.failing()->axiom == "ISM0");

    LYAlgebra T = sl2_as_ly();
    AxiomReport doubled = check_ism(InfSManifold{T, q(2) * Mat::identity(3)});
    CHECK(doubled.checks[0].pass);
    CHECK(doubled.failing()->axiom == "ISM1");
    CHECK(doubled.failing()->witness == std::vector<int>{0, 1});

    // For x*y = 0 and [x,y,z] = [[x,y],z], sigma = -id satisfies everything:
    // ISM3 because the bracket is linear in each slot and sigma scales all
    // three slots by -1 while ISM2 needs the product of the three signs.
    LYAlgebra anti = make_g_alpha_beta(make_sl(2), q(0), q(1));
    CHECK(check_ism(InfSManifold{anti, q(-1) * Mat::identity(3)}).pass());
}
