#include <doctest.h>

#include "lycas/catalog.hpp"
#include "lycas/random_reps.hpp"
#include "lycas/reps.hpp"

using namespace lycas;

namespace {

Rat q(long n, long d = 1) { return frac(n, d); }

LYRep lambda_rep() { return make_nontight_rep(make_sl(2), LinearFunctional{{q(0), q(0), q(1)}}); }

TripleRep adjoint_over(const ReductiveTriple& rt, int n_dim) {
    TripleRep M;
    M.rt = rt;
    M.p = rt.g.dim();
    M.n_dim = n_dim;
    for (int i = 0; i < rt.g.dim(); ++i) M.action.push_back(rt.g.ad(unit_vec(rt.g.dim(), i)));
    return validated_triple_rep(std::move(M));
}

}  // namespace

TEST_CASE("representation axioms and the forced delta") {
    LYRep r = lambda_rep();
    CHECK(r.validated);
    CHECK(check_rly(r).pass());
    CHECK(r.dl(0, 1) == q(-1) * Mat::identity(1));
    CHECK(delta_default(r.T, r.rho, r.theta) == r.delta);

    // Breaking one delta entry surfaces in RLY1 at that pair.
    LYRep bad = r;
    bad.delta[0 * 3 + 1] = Mat::identity(1);
    bad.delta[1 * 3 + 0] = q(-1) * Mat::identity(1);
    bad.validated = false;
    AxiomReport rep = check_rly(bad);
    CHECK(!rep.checks[0].pass);
    CHECK(rep.checks[0].axiom == "RLY1");
    CHECK(rep.checks[0].witness == std::vector<int>{0, 1});
    CHECK_THROWS_AS(validated_rep(bad), std::invalid_argument);
}

TEST_CASE("the extension algebra encodes the representation") {
    LYRep r = lambda_rep();
    Extension ext = extension_algebra(r);
    CHECK(ext.ext.dim() == 4);
    CHECK(ext.ext.validated());
    CHECK(check_hom(ext.pi).pass);
    CHECK(ext.pi.map * ext.iota == Mat::identity(3));

    // V sits as an abelian ideal; T as a complementary subalgebra.
    Subspace U = Subspace::span(Mat::from_rows({unit_vec(4, 3)}));
    Subspace W = Subspace::span(
        Mat::from_rows({unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)}));
    CHECK(is_abelian_ideal(ext.ext, U).pass);
    ExtractedRep back = rep_from_extension(ext.ext, U, W);
    CHECK(back.rep.T.same_structure(r.T));
    CHECK(back.rep.rho == r.rho);
    CHECK(back.rep.theta == r.theta);
    CHECK(back.rep.delta == r.delta);
}

TEST_CASE("subquotients of the three-dimensional module") {
    MatrixExample mx = make_matrix_example();
    CHECK(check_triple_rep(mx.M).pass());
    CHECK(is_effective_rep(mx.M));
    CHECK(is_minimal_rep(mx.M));

    CHECK(is_effective_rep(mx.M1));
    CHECK(is_minimal_rep(mx.M1));

    CHECK(is_effective_rep(mx.M2));
    CHECK(!is_minimal_rep(mx.M2));

    CHECK(!is_effective_rep(mx.M_mod_M1));
    CHECK(is_minimal_rep(mx.M_mod_M1));

    CHECK(is_effective_rep(mx.M_mod_M2));
    CHECK(is_minimal_rep(mx.M_mod_M2));
}

TEST_CASE("effectivize and minimalize repair the failing property") {
    MatrixExample mx = make_matrix_example();

    TripleRep m2min = minimalize(mx.M2);
    CHECK(m2min.p == 1);
    CHECK(m2min.n_dim == 1);
    CHECK(m2min.s_dim() == 0);
    CHECK(m2min.action == mx.M1.action);
    CHECK(is_effective_rep(m2min));
    CHECK(is_minimal_rep(m2min));

    TripleRep m1eff = effectivize(mx.M_mod_M1);
    CHECK(m1eff.p == 1);
    CHECK(m1eff.n_dim == 1);
    CHECK(is_effective_rep(m1eff));
    CHECK(is_minimal_rep(m1eff));

    // Idempotent on modules that already have the property.
    CHECK(effectivize(mx.M).action == mx.M.action);
    CHECK(minimalize(mx.M).action == mx.M.action);
}

TEST_CASE("tightness and its witness") {
    LYRep r = lambda_rep();
    TightReport tr = is_tight(r);
    CHECK(!tr.tight);
    CHECK(tr.rel_pairs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(tr.rel_coeffs == Vec{q(1)});
    CHECK(!tr.delta_sum.is_zero());

    LYRep r2 = make_rank2_nontight_rep(make_sl(2), LinearFunctional{{q(0), q(0), q(1)}});
    CHECK(check_rly(r2).pass());
    CHECK(!is_tight(r2).tight);

    // The first coordinate of the rank-2 rep carries the zero action.
    LYRep sub = make_rep(r2.T, 1);
    CHECK(is_tight(validated_rep(sub)).tight);

    RrtResult rr = functor_rrt(r);
    CHECK(!rr.ok);
    CHECK(!rr.tight_report.tight);
    CHECK(rr.detail == "input representation is not tight");

    // Without tightness the transported action is not an L(T)-module:
    // rho(h) = 1 but the bracket of the transported e and f actions is 0.
    RrtResult forced = functor_rrt(r, false);
    CHECK(!forced.ok);
    CHECK(forced.detail == "constructed module fails check module");
}

TEST_CASE("module functor on the adjoint module of the ef triple") {
    TripleRep M = adjoint_over(make_sl2_ef_triple(), 2);
    CHECK(is_effective_rep(M));
    CHECK(is_minimal_rep(M));
    LYRep r = functor_rly(M);
    CHECK(r.v_dim == 2);
    CHECK(check_rly(r).pass());
    CHECK(is_tight(r).tight);

    BetaReport beta = roundtrip_beta(M);
    CHECK(beta.em_input);
    CHECK(beta.intertwines);
    CHECK(beta.ok);

    BetaReport mex = roundtrip_beta(make_matrix_example().M);
    CHECK(mex.em_input);
    CHECK(mex.ok);

    BetaReport not_em = roundtrip_beta(make_matrix_example().M2);
    CHECK(!not_em.em_input);
    CHECK(!not_em.ok);
}

TEST_CASE("alpha round trip is exact on seeded tight representations") {
    LYAlgebra T = make_g_alpha_beta(make_sl(2), q(1), q(1));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        LYRep r = random_ly_rep(T, seed);
        CHECK(check_rly(r).pass());
        CHECK(is_tight(r).tight);
        AlphaReport a = roundtrip_alpha(r);
        CHECK(a.ok);
        CHECK(a.back.rho == r.rho);
        CHECK(a.back.theta == r.theta);
        CHECK(a.back.delta == r.delta);
    }
}

TEST_CASE("beta round trip on seeded effective minimal modules") {
    LYAlgebra T = make_g_alpha_beta(make_sl(2), q(1), q(1));
    Enveloping env = enveloping(T);
    for (std::uint64_t seed : {4u, 5u, 6u}) {
        TripleRep M = random_triple_rep(env, seed, true);
        CHECK(is_effective_rep(M));
        CHECK(is_minimal_rep(M));
        BetaReport b = roundtrip_beta(M);
        CHECK(b.em_input);
        CHECK(b.ok);
    }
}

TEST_CASE("modules that fail effectiveness or minimality can be repaired") {
    LYAlgebra T = make_g_alpha_beta(make_sl(2), q(1), q(1));
    Enveloping env = enveloping(T);
    for (std::uint64_t seed : {7u, 8u}) {
        TripleRep M = random_triple_rep(env, seed, false);
        CHECK(check_triple_rep(M).pass());
        CHECK(!is_effective_rep(M));
        TripleRep em = effectivize(minimalize(M));
        CHECK(is_effective_rep(em));
        CHECK(is_minimal_rep(em));
    }
}

TEST_CASE("levi section over an L-semisimple base with a tight representation") {
    LYAlgebra T = make_g_alpha_beta(make_sl(2), q(1), q(1));
    LYRep r = random_ly_rep(T, 9);
    LeviReport lev = levi_section(r);
    CHECK(lev.ok);
    for (int i = 0; i < 6; ++i) CHECK(lev.conds[i]);
    CHECK(lev.tight);
    CHECK(lev.all_agree);
}

TEST_CASE("levi section on the non-tight scalar example") {
    LYRep r = lambda_rep();
    LeviReport lev = levi_section(r);
    CHECK(lev.ok);

    // T~ = T + V is four-dimensional and D(T~) is spanned by the single
    // derivation D_{e,f} = -p_V, so L(T~) has dimension five. The section
    // is { (x, -lambda(x) p_V) }, spanned by e, f and h + D_{e,f}.
    CHECK(lev.base.ext.ext.dim() == 4);
    CHECK(lev.base.lpi.src.L.dim() == 5);
    CHECK(lev.base.l_sub.dim() == 4);
    CHECK(lev.base.dsub_part ==
          Subspace::span(Mat::from_rows({unit_vec(5, 4)})));
    CHECK(lev.section_image ==
          Subspace::span(Mat::from_rows(
              {unit_vec(5, 0), unit_vec(5, 1), add(unit_vec(5, 2), unit_vec(5, 4))})));
    for (int i = 0; i < 6; ++i) CHECK(!lev.conds[i]);
    CHECK(!lev.tight);
    CHECK(lev.all_agree);

    CHECK(lev.base.ker == Subspace::span(Mat::from_rows({unit_vec(5, 4)})));
    CHECK(lev.base.kernel_central);
    CHECK(lev.base.kernel_in_dsub);
}

TEST_CASE("sufficient conditions for tightness") {
    LYAlgebra T = make_g_alpha_beta(make_sl(2), q(1), q(1));
    SufficientReport s = tight_sufficient(random_ly_rep(T, 10), "ttt");
    CHECK(s.hypothesis);
    CHECK(s.tight);
    CHECK(s.implication_ok);

    SufficientReport flat = tight_sufficient(lambda_rep(), "ttt");
    CHECK(!flat.hypothesis);
    CHECK(!flat.tight);
    CHECK(flat.implication_ok);
    CHECK_THROWS_AS(tight_sufficient(lambda_rep(), "nope"), std::invalid_argument);
}

TEST_CASE("equivariant representations of s-manifolds") {
    InfSManifold S = associated_triple(make_core_quandle_pair(make_sl(2))).ism;
    for (std::uint64_t seed : {11u, 12u}) {
        ISMRep ir = random_ism_rep(S, seed);
        CHECK(check_rly(ir.rep).pass());
        CHECK(check_rism(ir, S).pass());
        CHECK(is_tight(ir.rep).tight);

        SufficientReport s = tight_sufficient_ism(ir, S);
        CHECK(s.hypothesis);
        CHECK(s.implication_ok);

        RlrsResult rr = functor_rlrs(ir, S);
        CHECK(rr.ok);
        CHECK(check_spair_rep(rr.sr, rr.ls.pair).pass());
        CHECK(is_effective_rep(rr.sr.rep));
        CHECK(is_minimal_rep(rr.sr.rep));

        IsmAlphaReport a = roundtrip_alpha_ism(ir, S);
        CHECK(a.ok);
        CHECK(a.back.psi == ir.psi);
    }

    // Breaking psi is caught by the equivariance axioms.
    ISMRep ir = random_ism_rep(S, 13);
    ir.psi(0, 0) += 1;
    AxiomReport rep = check_rism(ir, S);
    CHECK(!rep.pass());
}

TEST_CASE("modules over s-pairs and their round trip") {
    LocalRegularSPair p = make_sl2_ad_pair();
    for (std::uint64_t seed : {14u, 15u}) {
        SPairRep sr = random_spair_rep(p, seed);
        CHECK(check_spair_rep(sr, p).pass());

        ISMRep ir = functor_rism(sr, p);
        InfSManifold S = associated_triple(p).ism;
        CHECK(check_rism(ir, S).pass());

        IsmBetaReport b = roundtrip_beta_ism(sr, p);
        CHECK(b.base.em_input);
        CHECK(b.base.ok);
        CHECK(b.psi_intertwined);
        CHECK(b.ok);
    }
}

TEST_CASE("seeded generators are reproducible and unimodular matrices are integral") {
    LYAlgebra T = make_g_alpha_beta(make_sl(2), q(1), q(1));
    Enveloping env = enveloping(T);
    TripleRep a = random_triple_rep(env, 42, true);
    TripleRep b = random_triple_rep(env, 42, true);
    CHECK(a.p == b.p);
    CHECK(a.action == b.action);
    TripleRep c = random_triple_rep(env, 43, true);
    CHECK((c.p != a.p || !(c.action == a.action)));

    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Mat u = random_unimodular(4, seed);
        auto inv = invert(u);
        REQUIRE(inv);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                CHECK(u(i, j).get_den() == 1);
                CHECK((*inv)(i, j).get_den() == 1);
            }
    }
}
