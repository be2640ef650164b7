#pragma once

#include <string>
#include <vector>

#include "lycas/liealg.hpp"
#include "lycas/lyalg.hpp"
#include "lycas/reps.hpp"

namespace lycas {

// sl_n with basis { E_ij : i != j, lex on (i,j) } then { E_ii - E_{i+1,i+1} }.
// For n = 2 this is (e, f, h) with [e,f] = h. Throws for n < 2.
LieAlgebra make_sl(int n);

// Binary x*y = alpha [x,y], ternary [x,y,z] = beta [[x,y],z] on a Lie
// algebra g. Valid for every (alpha, beta); validated at construction.
LYAlgebra make_g_alpha_beta(const LieAlgebra& g, const Rat& alpha, const Rat& beta);

// (sl2, <e,f>, <h>).
ReductiveTriple make_sl2_ef_triple();

// (sl_n, off-diagonal part, diagonal part). Throws for n < 2.
ReductiveTriple make_sln_diag_split(int n);

// A functional given by one coefficient per basis vector.
struct LinearFunctional {
    Vec coeffs;

    Rat operator()(const Vec& x) const;
};

// Over the algebra make_g_alpha_beta(g, 1, 0):
//   rho(x) = lambda(x) I,  theta = 0,  delta(x,y) = -lambda([x,y]) I
// on a v_dim-dimensional space. Tight exactly when lambda kills [g,g].
LYRep make_nontight_rep(const LieAlgebra& g, const LinearFunctional& lambda, int v_dim = 1);

// Same base algebra, V two-dimensional:
//   rho(x) = [[0, lambda(x)], [0, 0]],  theta = 0,
//   delta(x,y) = [[0, -lambda([x,y])], [0, 0]].
// The first coordinate spans a subrepresentation that is always tight.
LYRep make_rank2_nontight_rep(const LieAlgebra& g, const LinearFunctional& lambda);

// Modules over the triple (Q, Q, 0): M is three-dimensional with
// Mn = <e1,e2>, Ms = <e3> and generator action
//   [[0,0,1],[0,0,0],[0,1,0]].
// Subquotients in their induced bases:
//   M1     = <e1>        action [0]          effective, minimal
//   M2     = <e1,e3>     action [[0,1],[0,0]] effective, not minimal
//   M/M1   = <e2,e3>     action [[0,0],[1,0]] minimal, not effective
//   M/M2   = <e2>        action [0]          effective, minimal
struct MatrixExample {
    ReductiveTriple rt;
    TripleRep M, M1, M2, M_mod_M1, M_mod_M2;
};
MatrixExample make_matrix_example();

// (g + g, swap). The associated triple has m = the antidiagonal,
// h = the diagonal and sigma = -id; its induced algebra matches
// make_g_alpha_beta(g, 0, 1) coordinate for coordinate.
LocalRegularSPair make_core_quandle_pair(const LieAlgebra& g);

// (sl2, Ad diag(2,1/2)) = (sl2, diag(4,1/4,1) in (e,f,h)). Its associated
// triple is make_sl2_ef_triple with sigma = diag(4,1/4).
LocalRegularSPair make_sl2_ad_pair();

// One-dimensional trivial algebra with sigma = (a). Throws for a in {0,1}.
InfSManifold make_trivial_line(const Rat& a);

struct CatalogEntry {
    std::string name;
    std::string params;  // positional-parameter help, empty if none
    std::string summary;
    std::string kind;  // JSON kind the CLI emits for this entry
};
const std::vector<CatalogEntry>& catalog_list();

}  // namespace lycas
