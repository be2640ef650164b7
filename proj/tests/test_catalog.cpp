#include <doctest.h>

#include "lycas/catalog.hpp"
#include "lycas/json_io.hpp"
#include "lycas/random_reps.hpp"

using namespace lycas;

namespace {

Rat q(long n, long d = 1) { return frac(n, d); }

}  // namespace

TEST_CASE("the catalog lists every constructor once") {
    const auto& entries = catalog_list();
    CHECK(entries.size() == 16);
    std::vector<std::string> names;
    for (const auto& e : entries) names.push_back(e.name);
    CHECK(names == std::vector<std::string>{
                       "sl", "g-alpha-beta", "sl2-ef-triple", "sln-diag-split",
                       "nontight-rep", "rank2-nontight-rep", "matrix-example",
                       "core-quandle", "core-quandle-ism", "sl2-ad-pair", "trivial-line",
                       "random-triple-rep", "random-module", "random-ly-rep",
                       "random-ism-rep", "random-spair-rep"});
    for (const auto& e : entries) {
        CHECK(!e.summary.empty());
        CHECK(!e.kind.empty());
    }
}

TEST_CASE("special linear algebras in the elementary-matrix basis") {
    LieAlgebra sl2 = make_sl(2);
    CHECK(sl2.dim() == 3);
    CHECK(sl2.validated());
    CHECK(sl2.bracket_basis(0, 1) == unit_vec(3, 2));
    CHECK(sl2.bracket_basis(2, 0) == scale(q(2), unit_vec(3, 0)));
    CHECK(sl2.bracket_basis(2, 1) == scale(q(-2), unit_vec(3, 1)));

    // sl3 basis: E12 E13 E21 E23 E31 E32, then H1 = E11-E22, H2 = E22-E33.
    LieAlgebra sl3 = make_sl(3);
    CHECK(sl3.dim() == 8);
    CHECK(sl3.bracket_basis(0, 2) == unit_vec(8, 6));
    CHECK(sl3.bracket_basis(0, 3) == unit_vec(8, 1));
    CHECK(sl3.bracket_basis(1, 4) == add(unit_vec(8, 6), unit_vec(8, 7)));
    CHECK(sl3.bracket_basis(6, 0) == scale(q(2), unit_vec(8, 0)));
    CHECK(is_semisimple(sl3));
    CHECK_THROWS_AS(make_sl(1), std::invalid_argument);
}

TEST_CASE("the two-parameter family over a Lie algebra") {
    LieAlgebra sl2 = make_sl(2);
    LYAlgebra T = make_g_alpha_beta(sl2, q(1), q(1));
    CHECK(T.dim() == 3);
    CHECK(T.validated());

    CHECK(T.b(0, 1, 2) == q(1));
    CHECK(T.b(1, 0, 2) == q(-1));
    CHECK(T.b(0, 2, 0) == q(-2));
    CHECK(T.b(1, 2, 1) == q(2));

    CHECK(T.t(0, 1, 0, 0) == q(2));
    CHECK(T.t(0, 1, 1, 1) == q(-2));
    CHECK(T.t(0, 2, 1, 2) == q(-2));
    CHECK(T.t(0, 2, 2, 0) == q(4));
    CHECK(T.t(1, 2, 0, 2) == q(-2));
    CHECK(T.t(1, 2, 2, 1) == q(4));

    // alpha scales the binary product, beta the ternary one.
    LYAlgebra Th = make_g_alpha_beta(sl2, frac(1, 2), q(-3));
    CHECK(Th.b(0, 1, 2) == frac(1, 2));
    CHECK(Th.t(0, 1, 0, 0) == q(-6));

    LYAlgebra T10 = make_g_alpha_beta(sl2, q(1), q(0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) CHECK(T10.t(i, j, k, l) == q(0));

    LYAlgebra T01 = make_g_alpha_beta(sl2, q(0), q(1));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(T01.b(i, j, k) == q(0));
}

TEST_CASE("reductive splittings of the special linear algebras") {
    ReductiveTriple ef = make_sl2_ef_triple();
    CHECK(ef.g.same_structure(make_sl(2)));
    CHECK(ef.m == Subspace::span(Mat::from_rows({unit_vec(3, 0), unit_vec(3, 1)})));
    CHECK(ef.h == Subspace::span(Mat::from_rows({unit_vec(3, 2)})));
    CHECK(check_reductive_triple(ef).pass());

    ReductiveTriple d3 = make_sln_diag_split(3);
    CHECK(d3.g.dim() == 8);
    CHECK(d3.m.dim() == 6);
    CHECK(d3.h.dim() == 2);
    CHECK(check_reductive_triple(d3).pass());
    CHECK_THROWS_AS(make_sln_diag_split(1), std::invalid_argument);
}

TEST_CASE("linear functionals evaluate by coefficients") {
    LinearFunctional lam{{q(0), q(0), q(1)}};
    CHECK(lam(Vec{q(1), q(2), q(3)}) == q(3));
    CHECK(lam(Vec{q(5), q(7), q(0)}) == q(0));
    CHECK_THROWS_AS(lam(Vec{q(1)}), std::invalid_argument);
    CHECK_THROWS_AS(make_nontight_rep(make_sl(2), LinearFunctional{{q(1)}}),
                    std::invalid_argument);
}

TEST_CASE("scalar non-tight representations have the stated matrices") {
    LieAlgebra sl2 = make_sl(2);
    LinearFunctional lam{{q(0), q(0), q(1)}};

    LYRep r = make_nontight_rep(sl2, lam);
    CHECK(r.T.same_structure(make_g_alpha_beta(sl2, q(1), q(0))));
    CHECK(r.v_dim == 1);
    CHECK(r.rho[0].is_zero());
    CHECK(r.rho[1].is_zero());
    CHECK(r.rho[2] == Mat::identity(1));
    for (const Mat& th : r.theta) CHECK(th.is_zero());
    CHECK(r.dl(0, 1) == q(-1) * Mat::identity(1));
    CHECK(r.dl(0, 2).is_zero());
    CHECK(r.dl(1, 2).is_zero());

    LYRep r3 = make_nontight_rep(sl2, lam, 3);
    CHECK(r3.v_dim == 3);
    CHECK(r3.rho[2] == Mat::identity(3));
    CHECK(r3.dl(0, 1) == q(-1) * Mat::identity(3));

    LYRep r2 = make_rank2_nontight_rep(sl2, lam);
    CHECK(r2.v_dim == 2);
    CHECK(r2.rho[2] == Mat::from_rows({Vec{q(0), q(1)}, Vec{q(0), q(0)}}));
    CHECK(r2.rho[0].is_zero());
    CHECK(r2.dl(0, 1) == Mat::from_rows({Vec{q(0), q(-1)}, Vec{q(0), q(0)}}));
}

TEST_CASE("the three-dimensional module and its subquotients are as documented") {
    MatrixExample mx = make_matrix_example();
    CHECK(mx.rt.g.dim() == 1);
    CHECK(mx.rt.m.dim() == 1);
    CHECK(mx.rt.h.dim() == 0);
    CHECK(check_reductive_triple(mx.rt).pass());

    CHECK(mx.M.p == 3);
    CHECK(mx.M.n_dim == 2);
    CHECK(mx.M.action.size() == 1);
    CHECK(mx.M.action[0] == Mat::from_rows({Vec{q(0), q(0), q(1)},
                                            Vec{q(0), q(0), q(0)},
                                            Vec{q(0), q(1), q(0)}}));

    CHECK(mx.M1.p == 1);
    CHECK(mx.M1.n_dim == 1);
    CHECK(mx.M1.action[0].is_zero());

    CHECK(mx.M2.p == 2);
    CHECK(mx.M2.n_dim == 1);
    CHECK(mx.M2.action[0] == Mat::from_rows({Vec{q(0), q(1)}, Vec{q(0), q(0)}}));

    CHECK(mx.M_mod_M1.action[0] == Mat::from_rows({Vec{q(0), q(0)}, Vec{q(1), q(0)}}));
    CHECK(mx.M_mod_M2.p == 1);
    CHECK(mx.M_mod_M2.action[0].is_zero());

    for (const TripleRep* m : {&mx.M, &mx.M1, &mx.M2, &mx.M_mod_M1, &mx.M_mod_M2})
        CHECK(check_triple_rep(*m).pass());
}

TEST_CASE("the core quandle pair swaps the two summands") {
    LieAlgebra sl2 = make_sl(2);
    LocalRegularSPair p = make_core_quandle_pair(sl2);
    CHECK(p.g.dim() == 6);
    Mat swap(6, 6);
    for (int i = 0; i < 3; ++i) {
        swap(i, 3 + i) = q(1);
        swap(3 + i, i) = q(1);
    }
    CHECK(p.phi == swap);
    CHECK(check_lrsp(p).pass());

    // The same construction works over any base, with the documented
    // induced structure.
    LocalRegularSPair p3 = make_core_quandle_pair(make_sl(3));
    AssociatedTriple at = associated_triple(p3);
    CHECK(at.rt.m.dim() == 8);
    CHECK(at.ism.T.same_structure(make_g_alpha_beta(make_sl(3), q(0), q(1))));
}

TEST_CASE("the adjoint pair of sl2 is diagonal in the weight basis") {
    LocalRegularSPair p = make_sl2_ad_pair();
    CHECK(p.g.same_structure(make_sl(2)));
    Mat phi(3, 3);
    phi(0, 0) = q(4);
    phi(1, 1) = frac(1, 4);
    phi(2, 2) = q(1);
    CHECK(p.phi == phi);
    CHECK(check_lrsp(p).pass());
}

TEST_CASE("trivial lines exist exactly away from the singular parameters") {
    InfSManifold line = make_trivial_line(q(2));
    CHECK(line.T.dim() == 1);
    CHECK(line.sigma == q(2) * Mat::identity(1));
    CHECK(check_ism(line).pass());

    InfSManifold half = make_trivial_line(frac(1, 2));
    CHECK(check_ism(half).pass());

    CHECK_THROWS_AS(make_trivial_line(q(0)), std::invalid_argument);
    CHECK_THROWS_AS(make_trivial_line(q(1)), std::invalid_argument);
}

TEST_CASE("catalog builders emit loadable payloads") {
    OJson lie = catalog_build({"sl", "2"}, kDefaultSeed);
    CHECK(lie.at("format") == "lie");
    CHECK(lie_from_json(lie).same_structure(make_sl(2)));

    OJson ly = catalog_build({"g-alpha-beta", "sl2", "1", "1"}, kDefaultSeed);
    CHECK(ly.at("format") == "ly");
    CHECK(ly_from_json(ly).same_structure(make_g_alpha_beta(make_sl(2), q(1), q(1))));

    OJson rep = catalog_build({"random-ly-rep", "g-alpha-beta", "sl2", "1", "1"}, 5);
    CHECK(rep.at("format") == "lyrep");
    LYRep r = lyrep_from_json(rep);
    CHECK(check_rly(r).pass());
    CHECK(r.rho == random_ly_rep(make_g_alpha_beta(make_sl(2), q(1), q(1)), 5).rho);

    CHECK_THROWS_AS(catalog_build({"no-such-entry"}, kDefaultSeed), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build({"g-alpha-beta", "sl2", "2/4", "1"}, kDefaultSeed),
                    std::invalid_argument);
}
