#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lycas/liealg.hpp"

namespace lycas {

// Representation (rho, theta, delta) of an algebra T on V = Q^v_dim.
// theta and delta are indexed by basis pairs (i,j) at position i*n + j.
struct LYRep {
    LYAlgebra T;
    int v_dim = 0;
    std::vector<Mat> rho;
    std::vector<Mat> theta;
    std::vector<Mat> delta;
    bool validated = false;

    const Mat& th(int i, int j) const { return theta[static_cast<size_t>(i) * T.dim() + j]; }
    const Mat& dl(int i, int j) const { return delta[static_cast<size_t>(i) * T.dim() + j]; }
    Mat rho_vec(const Vec& x) const;
    Mat theta_vec(const Vec& x, const Vec& y) const;
    Mat delta_vec(const Vec& x, const Vec& y) const;
};

// Zero-initialized representation shell.
LYRep make_rep(LYAlgebra T, int v_dim);

// delta forced by the first axiom:
// delta(x,y) = [rho(x),rho(y)] - rho(x*y) - theta(x,y) + theta(y,x).
std::vector<Mat> delta_default(const LYAlgebra& T, const std::vector<Mat>& rho,
                               const std::vector<Mat>& theta);

// Axioms, labels RLY1..RLY6:
//   RLY1  delta(x,y) + theta(x,y) - theta(y,x) = [rho(x),rho(y)] - rho(x*y)
//   RLY2  theta(x,y*z) - rho(y)theta(x,z) + rho(z)theta(x,y) = 0
//   RLY3  theta(x*y,z) - theta(x,z)rho(y) + theta(y,z)rho(x) = 0
//   RLY4  theta(z,w)theta(x,y) - theta(y,w)theta(x,z) - theta(x,[y,z,w])
//         + delta(y,z)theta(x,w) = 0
//   RLY5  [delta(x,y),rho(z)] = rho([x,y,z])
//   RLY6  [delta(x,y),theta(z,w)] = theta([x,y,z],w) + theta(z,[x,y,w])
AxiomReport check_rly(const LYRep& r);
LYRep validated_rep(LYRep r);

// T + V with
//   (x1,v1)*(x2,v2)    = (x1*x2, rho(x1)v2 - rho(x2)v1)
//   [(x1,v1),(x2,v2),(x3,v3)] =
//     ([x1,x2,x3], theta(x2,x3)v1 - theta(x1,x3)v2 + delta(x1,x2)v3)
// T sits in the first block, V in the second; V is an abelian ideal.
struct Extension {
    LYAlgebra ext;
    LYHom pi;  // ext -> T, projection
    Mat iota;  // T -> ext, inclusion
};
Extension extension_algebra(const LYRep& r);

// Reads a representation off a decomposition T~ = W + U with U an abelian
// ideal and W a complementary subalgebra. The result lives over the
// induced algebra on W, in the RREF bases of W and U.
struct ExtractedRep {
    LYRep rep;
    Mat w_basis, u_basis;
};
ExtractedRep rep_from_extension(const LYAlgebra& Tt, const Subspace& U, const Subspace& W);

// g-module M = Mn + Ms over a reductive triple, with h Mn in Mn,
// h Ms in Ms and m Ms in Mn. Mn occupies the first n_dim coordinates.
struct TripleRep {
    ReductiveTriple rt;
    int p = 0;
    int n_dim = 0;
    std::vector<Mat> action;  // one p x p matrix per g basis vector
    bool validated = false;

    int s_dim() const { return p - n_dim; }
    Mat act_vec(const Vec& x) const;
};

// Checks "module", "h-preserves-n", "h-preserves-s", "m-sends-s-to-n".
AxiomReport check_triple_rep(const TripleRep& M);
TripleRep validated_triple_rep(TripleRep M);

// Effective: Ms -> Hom(m, Mn), s -> (x -> x s), is injective.
bool is_effective_rep(const TripleRep& M);
// Minimal: the s-components of m Mn span Ms.
bool is_minimal_rep(const TripleRep& M);

// Quotients Ms by the kernel of the effectiveness map; preserves
// minimality. The kernel is checked to be killed by m and kept by h.
TripleRep effectivize(const TripleRep& M);
// Restricts Ms to the s-components of m Mn; preserves effectiveness.
TripleRep minimalize(const TripleRep& M);

// Representation of the induced algebra on Mn:
//   rho(x) v    = (x v)_n
//   theta(x,y)v = y (x v)_s
//   delta(x,y)v = [x,y]_h v
LYRep functor_rly(const TripleRep& M);

// A representation is tight when every vanishing combination of inner
// derivations D_{x,y} forces the matching combination of delta(x,y) to
// vanish. A failure is witnessed by a relation taken from the first
// offending kernel RREF row.
struct TightReport {
    bool tight = true;
    std::vector<std::pair<int, int>> rel_pairs;
    Vec rel_coeffs;
    Mat delta_sum;
};
TightReport is_tight(const LYRep& r);

// V + D_{T~}(T,V) as a module over L(T). The s-part collects the maps
// theta2(x,v): y -> theta(x,y)v, with basis the lex-first independent
// subfamily of {theta2(e_i, v_b)}; D_{x,v} = -theta2(x,v). Requires a
// tight input so that delta extends to D(T); pass require_tight=false to
// attempt the construction regardless.
struct RrtResult {
    bool ok = false;
    std::string detail;
    Enveloping env;
    TripleRep tr;
    std::vector<std::pair<int, int>> s_family;  // (i, b) per family column
    Mat s_basis;                                // s x (v_dim * n) flattened maps
    std::vector<int> s_basis_idx;
    TightReport tight_report;
};
RrtResult functor_rrt(const LYRep& r, bool require_tight = true);

// functor_rly(functor_rrt(r)) compared entrywise with r.
struct AlphaReport {
    bool ok = false;
    std::string detail;
    RrtResult rrt;
    LYRep back;
};
AlphaReport roundtrip_alpha(const LYRep& r);

// For an effective minimal M over (g,m,h): transports M along the
// canonical isomorphism g = L(m), then compares with
// functor_rrt(functor_rly(M)) through beta = id on Mn,
// s -> (x -> -(x s)) on Ms.
struct BetaReport {
    bool ok = false;
    bool em_input = false;
    std::string detail;
    Mat beta;
    bool intertwines = false;
    RrtResult rrt;
};
BetaReport roundtrip_beta(const TripleRep& M);

// L(pi,iota): the restriction of L(pi): L(T~) -> L(T) to
// iota(T) + D_{T~}(iota T), for the extension T~ = T + V of r.
struct LPiIota {
    Extension ext;
    InducedLPi lpi;
    Subspace l_sub;      // inside L(T~)
    Subspace dsub_part;  // D_{T~}(iota T) inside L(T~)
    Mat restricted;      // dim L(T) x dim l_sub
    bool surjective = false;
    Subspace ker;        // kernel of the restriction, in L(T~)
    bool kernel_central = false;
    bool kernel_in_dsub = false;
};
LPiIota l_pi_iota(const LYRep& r);

// When T is L-semisimple, the derived subalgebra of l_sub is the unique
// Levi section of L(pi,iota). Reports the six equivalent tightness
// conditions evaluated on that section:
//   (a) L(pi,iota) bijective
//   (b) section spans l_sub
//   (c) section compatible with the splitting iota(T) + D_{T~}(iota T)
//   (d) f(T) contains iota(T)
//   (e) f(L(T)) contains iota(T)
//   (f) f(T) contained in iota(T)
struct LeviReport {
    bool ok = false;
    std::string detail;
    LPiIota base;
    Subspace section_image;
    Mat section;  // dim L(T~) x dim L(T)
    bool conds[6] = {false, false, false, false, false, false};
    bool tight = false;
    bool all_agree = false;
};
LeviReport levi_section(const LYRep& r);

// Sufficient tightness criteria.
//   mode "ttt": [T,T,T] = T forces tightness.
struct SufficientReport {
    std::string mode;
    bool hypothesis = false;
    bool tight = false;
    bool implication_ok = false;
};
SufficientReport tight_sufficient(const LYRep& r, const std::string& mode);

// Representation of (T,sigma): an LYRep together with psi subject to
//   RISM1  rho(sigma x) = psi rho(x) psi^{-1}
//   RISM2  theta(x,sigma y) = psi theta(x,y),
//          theta(sigma x,y) = theta(x,y) psi^{-1}
//   RISM3  delta(x,y) = psi delta(x,y) psi^{-1}
// Regular means id - psi invertible.
struct ISMRep {
    LYRep rep;
    Mat psi;
};
AxiomReport check_rism(const ISMRep& ir, const InfSManifold& S);

//   mode "perfect-ism": [L(T),L(T)] = L(T) together with a valid regular
//   (T,sigma)-representation structure forces tightness.
SufficientReport tight_sufficient_ism(const ISMRep& ir, const InfSManifold& S);

// Module over an s-pair (g,phi): psi_tilde fixes Ms pointwise, keeps Mn,
// and intertwines the action twisted by phi.
struct SPairRep {
    TripleRep rep;
    Mat psi_tilde;
};
AxiomReport check_spair_rep(const SPairRep& sr, const LocalRegularSPair& p);

// (Mn, psi_tilde|Mn) as a representation of the associated manifold.
ISMRep functor_rism(const SPairRep& sr, const LocalRegularSPair& p);

// (V + D_{T~}(T,V), psi x id) over (L(T), L(sigma)).
struct RlrsResult {
    bool ok = false;
    std::string detail;
    RrtResult rrt;
    InducedLSigma ls;
    SPairRep sr;
};
RlrsResult functor_rlrs(const ISMRep& ir, const InfSManifold& S);

// ISM-aware round trips: alpha additionally compares psi, beta
// additionally checks that beta intertwines the two psi_tilde maps.
struct IsmAlphaReport {
    bool ok = false;
    std::string detail;
    RlrsResult rlrs;
    ISMRep back;
};
IsmAlphaReport roundtrip_alpha_ism(const ISMRep& ir, const InfSManifold& S);

struct IsmBetaReport {
    bool ok = false;
    std::string detail;
    BetaReport base;
    bool psi_intertwined = false;
};
IsmBetaReport roundtrip_beta_ism(const SPairRep& sr, const LocalRegularSPair& p);

}  // namespace lycas
