#include <doctest.h>

#include "lycas/catalog.hpp"
#include "lycas/liealg.hpp"

using namespace lycas;

namespace {

Rat q(long n, long d = 1) { return frac(n, d); }

LieAlgebra heisenberg() {
    LieAlgebra g(3, "heis");
    g.set_c(0, 1, 2, q(1));
    return g;
}

Subspace line(int n, int i) { return Subspace::span(Mat::from_rows({unit_vec(n, i)})); }

}  // namespace

TEST_CASE("sl2 structure, Killing form and semisimplicity") {
    LieAlgebra g = make_sl(2);
    CHECK(g.dim() == 3);
    CHECK(check_jacobi(g).pass());
    CHECK(g.bracket_basis(0, 1) == Vec{q(0), q(0), q(1)});   // [e,f] = h
    CHECK(g.bracket_basis(2, 0) == Vec{q(2), q(0), q(0)});   // [h,e] = 2e
    CHECK(g.bracket_basis(2, 1) == Vec{q(0), q(-2), q(0)});  // [h,f] = -2f

    Mat k = killing_form(g);
    CHECK(k == Mat::from_rows({{q(0), q(4), q(0)}, {q(4), q(0), q(0)}, {q(0), q(0), q(8)}}));
    CHECK(is_semisimple(g));
    CHECK(derived_subalgebra(g) == Subspace::full(3));
    CHECK(center(g).dim() == 0);

    CHECK(make_sl(3).dim() == 8);
    CHECK(check_jacobi(make_sl(3)).pass());
    CHECK(is_semisimple(make_sl(3)));
    CHECK_THROWS_AS(make_sl(1), std::invalid_argument);
}

TEST_CASE("non-semisimple examples") {
    LieAlgebra h = heisenberg();
    CHECK(check_jacobi(h).pass());
    CHECK(!is_semisimple(h));
    CHECK(center(h) == line(3, 2));
    CHECK(derived_subalgebra(h) == line(3, 2));
    CHECK(killing_form(h).is_zero());

    CHECK(is_lie_ideal(h, line(3, 2)).pass);
    CHECK(is_lie_subalgebra(h, sum(line(3, 0), line(3, 2))).pass);
    CHECK(!is_lie_ideal(h, line(3, 0)).pass);
}

TEST_CASE("a corrupted bracket fails Jacobi at (e,f,h)") {
    LieAlgebra g = make_sl(2);
    g.set_c(0, 2, 0, q(2));  // flips [e,h] = -2e to +2e
    AxiomReport rep = check_jacobi(g);
    CHECK(rep.checks[0].pass);  // antisymmetry intact
    CHECK(!rep.checks[1].pass);
    CHECK(rep.checks[1].axiom == "jacobi");
    CHECK(rep.checks[1].witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("reductive triples and the induced algebra") {
    ReductiveTriple rt = make_sl2_ef_triple();
    CHECK(check_reductive_triple(rt).pass());

    ReductiveTriple bad{rt.g, sum(line(3, 0), line(3, 2)), line(3, 1)};
    AxiomReport br = check_reductive_triple(bad);
    CHECK(!br.pass());
    CHECK(br.failing()->axiom == "h-action");

    LYAlgebra ind = induced_ly(rt);
    CHECK(ind.dim() == 2);
    CHECK(ind.validated());
    // [e,f] = h leaves m, so the binary product vanishes; the ternary one
    // is [[e,f],.] = [h,.] = diag(2,-2) on (e,f).
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) CHECK(ind.b(i, j, k) == 0);
    CHECK(ind.t_basis(0, 1, 0) == Vec{q(2), q(0)});
    CHECK(ind.t_basis(0, 1, 1) == Vec{q(0), q(-2)});
    CHECK(ind.t_basis(1, 0, 0) == Vec{q(-2), q(0)});
    CHECK(is_zero(ind.t_basis(0, 0, 1)));

    TripleSplit split(rt);
    CHECK(split.dm() == 2);
    CHECK(split.dh() == 1);
    Vec v{q(1), q(2), q(3)};
    CHECK(add(split.project_m(v), split.project_h(v)) == v);
    CHECK(split.m_coords(unit_vec(3, 1)) == Vec{q(0), q(1)});
}

TEST_CASE("enveloping algebra of sl2 with both products") {
    LYAlgebra T = make_g_alpha_beta(make_sl(2), q(1), q(1));
    Enveloping env = enveloping(T);
    CHECK(env.n() == 3);
    CHECK(env.k() == 3);
    CHECK(env.L.dim() == 6);
    CHECK(check_jacobi(env.L).pass());
    CHECK(check_reductive_triple(env.triple).pass());
    CHECK(env.d_pairs == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(induced_ly(env.triple).same_structure(T));
    CHECK(is_minimal_triple(env.triple));
    CHECK(is_effective_triple(env.triple));

    // embed and d_coords are mutually inverse on D(T).
    Vec dc{q(1), q(-2), q(1, 3)};
    Vec inside = env.embed(zero_vec(3), dc);
    Vec flat = zero_vec(9);
    for (int a = 0; a < 3; ++a) flat = add(flat, scale(dc[a], env.d_basis.row(a)));
    auto back = env.d_coords(flat);
    REQUIRE(back);
    CHECK(*back == dc);
    CHECK(inside == Vec{q(0), q(0), q(0), q(1), q(-2), q(1, 3)});
}

TEST_CASE("L-semisimplicity over the two-parameter family on sl2") {
    LieAlgebra sl2 = make_sl(2);
    const Rat betas[] = {q(-1), q(-1, 4), q(0), q(1, 4), q(1)};
    for (const Rat& alpha : {q(0), q(1)}) {
        for (const Rat& beta : betas) {
            LYAlgebra T = make_g_alpha_beta(sl2, alpha, beta);
            LSemisimpleReport r = l_semisimple_report(T);
            bool expect = (alpha * alpha + 4 * beta != 0);
            CHECK(r.semisimple == expect);
            CHECK(is_L_semisimple(T) == expect);
            if (alpha == 1 && beta == 0)
                CHECK(r.l_dim == 3);
            else if (alpha == 1 || beta != 0)
                CHECK(r.l_dim == 6);
        }
    }
}

TEST_CASE("effectiveness and minimality of triples") {
    CHECK(is_minimal_triple(make_sl2_ef_triple()));
    CHECK(is_effective_triple(make_sl2_ef_triple()));
    CHECK(is_minimal_triple(make_sln_diag_split(3)));
    CHECK(is_effective_triple(make_sln_diag_split(3)));

    // sl2 + a central line, split as (sl2-part, the line): the line acts
    // trivially on m, so the triple is neither effective nor minimal.
    LieAlgebra g(4, "sl2+z");
    LieAlgebra sl2 = make_sl(2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (sl2.c(i, j, k) != 0) g.c(i, j, k) = sl2.c(i, j, k);
    g = validated(std::move(g));
    Subspace m = Subspace::span(Mat::from_rows({unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)}));
    ReductiveTriple rt{g, m, line(4, 3)};
    CHECK(check_reductive_triple(rt).pass());
    CHECK(!is_effective_triple(rt));
    CHECK(!is_minimal_triple(rt));

    CanonicalHom ch = canonical_hom(rt);
    CHECK(ch.hom_ok);
    CHECK(ch.id_on_m);
    CHECK(!ch.injective);
    // The central line acts by zero, so the image still collapses onto
    // L(m) even though the triple is not minimal.
    CHECK(ch.surjective_onto_Lm);
    CHECK(!ch.minimal);
    CHECK(!ch.effective);
}

TEST_CASE("canonical morphism into L(m) for the ef triple") {
    CanonicalHom ch = canonical_hom(make_sl2_ef_triple());
    CHECK(ch.hom_ok);
    CHECK(ch.id_on_m);
    CHECK(ch.injective);
    CHECK(ch.surjective_onto_Lm);
    CHECK(ch.effective);
    CHECK(ch.minimal);
    CHECK(ch.image == ch.lm_space);
    CHECK(ch.f.rows() == 2 + 4);
    CHECK(ch.f.cols() == 3);
}

TEST_CASE("subalgebras of the form m' + [m',m']") {
    ReductiveTriple rt = make_sl2_ef_triple();
    LSubResult full = l_sub(rt, rt.m);
    CHECK(full.m_contained);
    CHECK(full.ly_subalgebra.pass);
    CHECK(full.l == Subspace::full(3));
    CHECK(full.lie_subalgebra.pass);
    CHECK(full.minimal);
    CHECK(full.ly_ideal.pass);
    CHECK(full.ideal_claimed);
    CHECK(full.lie_ideal.pass);

    LSubResult e_only = l_sub(rt, line(3, 0));
    CHECK(e_only.m_contained);
    CHECK(e_only.ly_subalgebra.pass);
    CHECK(e_only.l == line(3, 0));
    CHECK(!e_only.ly_ideal.pass);
    CHECK(!e_only.ideal_claimed);
}

TEST_CASE("s-pair axioms") {
    LocalRegularSPair p = make_sl2_ad_pair();
    CHECK(p.phi == Mat::from_rows({{q(4), q(0), q(0)}, {q(0), q(1, 4), q(0)}, {q(0), q(0), q(1)}}));
    CHECK(check_lrsp(p).pass());

    // A unipotent phi on an abelian algebra: automorphism, but the fixed
    // part is strictly smaller than the generalized eigenspace of 1.
    LieAlgebra ab(2, "ab");
    Mat uni = Mat::from_rows({{q(1), q(1)}, {q(0), q(1)}});
    AxiomReport rep = check_lrsp(LocalRegularSPair{ab, uni});
    CHECK(rep.checks[0].pass);
    CHECK(rep.checks[1].pass);
    CHECK(!rep.checks[2].pass);
    CHECK(rep.failing()->axiom == "fixed-part");

    // A non-automorphism: swap e and f in sl2 without negating h.
    Mat swp(3, 3);
    swp(1, 0) = q(1);
    swp(0, 1) = q(1);
    swp(2, 2) = q(1);
    AxiomReport bad = check_lrsp(LocalRegularSPair{make_sl(2), swp});
    CHECK(!bad.pass());
    CHECK(bad.failing()->axiom == "automorphism");

    CHECK_THROWS_AS(check_lrsp(LocalRegularSPair{make_sl(2), Mat::identity(2)}),
                    std::invalid_argument);
}

TEST_CASE("associated triple of the doubled algebra with the swap") {
    LieAlgebra sl2 = make_sl(2);
    LocalRegularSPair p = make_core_quandle_pair(sl2);
    CHECK(p.g.dim() == 6);
    CHECK(check_lrsp(p).pass());

    AssociatedTriple at = associated_triple(p);
    CHECK(at.rt.m.dim() == 3);
    CHECK(at.rt.h.dim() == 3);
    CHECK(at.rt.m.basis() == hstack(Mat::identity(3), q(-1) * Mat::identity(3)));
    CHECK(at.rt.h.basis() == hstack(Mat::identity(3), Mat::identity(3)));
    CHECK(at.ism.sigma == q(-1) * Mat::identity(3));
    CHECK(check_ism(at.ism).pass());
    CHECK(at.ism.T.same_structure(make_g_alpha_beta(sl2, q(0), q(1))));

    AssociatedTriple ad = associated_triple(make_sl2_ad_pair());
    ReductiveTriple ef = make_sl2_ef_triple();
    CHECK(ad.rt.m == ef.m);
    CHECK(ad.rt.h == ef.h);
    CHECK(ad.ism.sigma == Mat::from_rows({{q(4), q(0)}, {q(0), q(1, 4)}}));
}

TEST_CASE("degenerate pairs are rejected") {
    LieAlgebra ab(2, "ab");
    Mat uni = Mat::from_rows({{q(1), q(1)}, {q(0), q(1)}});
    CHECK_THROWS_AS(associated_triple(LocalRegularSPair{ab, uni}), std::invalid_argument);
}

TEST_CASE("the induced automorphism of the enveloping algebra") {
    LieAlgebra sl2 = make_sl(2);
    InfSManifold S = associated_triple(make_core_quandle_pair(sl2)).ism;
    InducedLSigma ls = induced_L_sigma(S);
    CHECK(ls.automorphism);
    CHECK(ls.env.L.dim() == 6);
    Mat expect(6, 6);
    for (int i = 0; i < 3; ++i) expect(i, i) = q(-1);
    for (int i = 3; i < 6; ++i) expect(i, i) = q(1);
    CHECK(ls.l_sigma == expect);
    CHECK(check_lrsp(ls.pair).pass());
}

TEST_CASE("the induced morphism of enveloping algebras") {
    LYAlgebra T = make_g_alpha_beta(make_sl(2), q(1), q(1));
    InducedLPi lp = induced_L_pi(LYHom{T, T, Mat::identity(3)});
    CHECK(lp.well_defined);
    CHECK(lp.hom_ok);
    CHECK(lp.surjective);
    CHECK(lp.kernel.dim() == 0);
    CHECK(lp.map == Mat::identity(6));
}
