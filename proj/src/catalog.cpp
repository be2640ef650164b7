#include "lycas/catalog.hpp"

#include <stdexcept>
#include <utility>

namespace lycas {

namespace {

// Structure constants of a Lie algebra given by explicit matrices that are
// linearly independent and closed under commutators.
LieAlgebra lie_from_matrices(const std::vector<Mat>& basis, std::string label) {
    const int n = static_cast<int>(basis.size());
    std::vector<Vec> flat;
    flat.reserve(basis.size());
    for (const auto& b : basis) flat.push_back(b.flatten());
    Mat cols = Mat::from_rows(flat).transpose();
    LieAlgebra g(n, std::move(label));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto co = solve(cols, commutator(basis[i], basis[j]).flatten());
            if (!co) throw std::logic_error("lie_from_matrices: commutator left the span");
            for (int k = 0; k < n; ++k) g.set_c(i, j, k, (*co)[k]);
        }
    return validated(std::move(g));
}

LieAlgebra ensure_lie(const LieAlgebra& g) { return g.validated() ? g : validated(g); }

}  // namespace

LieAlgebra make_sl(int n) {
    if (n < 2) throw std::invalid_argument("make_sl: n must be at least 2");
    std::vector<Mat> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                Mat e(n, n);
                e(i, j) = 1;
                basis.push_back(e);
            }
    for (int i = 0; i + 1 < n; ++i) {
        Mat e(n, n);
        e(i, i) = 1;
        e(i + 1, i + 1) = -1;
        basis.push_back(e);
    }
    return lie_from_matrices(basis, "sl" + std::to_string(n));
}

LYAlgebra make_g_alpha_beta(const LieAlgebra& g, const Rat& alpha, const Rat& beta) {
    const LieAlgebra gv = ensure_lie(g);
    const int n = gv.dim();
    std::string label = "g(" + rat_str(alpha) + "," + rat_str(beta) + ")";
    if (!gv.label().empty()) label += "[" + gv.label() + "]";
    LYAlgebra T(n, std::move(label));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int k = 0; k < n; ++k)
                if (gv.c(i, j, k) != 0) T.set_b(i, j, k, alpha * gv.c(i, j, k));
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rat v = 0;
                    for (int s = 0; s < n; ++s) v += gv.c(i, j, s) * gv.c(s, k, l);
                    if (v != 0) T.set_t(i, j, k, l, beta * v);
                }
        }
    return validated(std::move(T));
}

ReductiveTriple make_sl2_ef_triple() {
    return ReductiveTriple{make_sl(2),
                           Subspace::span(Mat::from_rows({unit_vec(3, 0), unit_vec(3, 1)})),
                           Subspace::span(Mat::from_rows({unit_vec(3, 2)}))};
}

ReductiveTriple make_sln_diag_split(int n) {
    LieAlgebra g = make_sl(n);
    const int d = g.dim(), off = n * n - n;
    std::vector<Vec> mrows, hrows;
    for (int i = 0; i < off; ++i) mrows.push_back(unit_vec(d, i));
    for (int i = off; i < d; ++i) hrows.push_back(unit_vec(d, i));
    return ReductiveTriple{std::move(g), Subspace::span(Mat::from_rows(mrows)),
                           Subspace::span(Mat::from_rows(hrows))};
}

Rat LinearFunctional::operator()(const Vec& x) const {
    if (coeffs.size() != x.size())
        throw std::invalid_argument("LinearFunctional: vector has dimension " +
                                    std::to_string(x.size()) + ", functional has " +
                                    std::to_string(coeffs.size()));
    Rat v = 0;
    for (size_t i = 0; i < x.size(); ++i) v += coeffs[i] * x[i];
    return v;
}

LYRep make_nontight_rep(const LieAlgebra& g, const LinearFunctional& lambda, int v_dim) {
    if (v_dim < 0) throw std::invalid_argument("make_nontight_rep: negative dimension");
    const LieAlgebra gv = ensure_lie(g);
    const int n = gv.dim();
    LYRep r = make_rep(make_g_alpha_beta(gv, 1, 0), v_dim);
    for (int i = 0; i < n; ++i) r.rho[i] = lambda(unit_vec(n, i)) * Mat::identity(v_dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.delta[static_cast<size_t>(i) * n + j] =
                -lambda(gv.bracket_basis(i, j)) * Mat::identity(v_dim);
    return validated_rep(std::move(r));
}

LYRep make_rank2_nontight_rep(const LieAlgebra& g, const LinearFunctional& lambda) {
    const LieAlgebra gv = ensure_lie(g);
    const int n = gv.dim();
    LYRep r = make_rep(make_g_alpha_beta(gv, 1, 0), 2);
    for (int i = 0; i < n; ++i) r.rho[i](0, 1) = lambda(unit_vec(n, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.delta[static_cast<size_t>(i) * n + j](0, 1) = -lambda(gv.bracket_basis(i, j));
    return validated_rep(std::move(r));
}

MatrixExample make_matrix_example() {
    ReductiveTriple rt{validated(LieAlgebra(1, "Q")), Subspace::full(1), Subspace(1)};
    auto module = [&rt](int p, int n_dim, Mat act) {
        TripleRep M;
        M.rt = rt;
        M.p = p;
        M.n_dim = n_dim;
        M.action.push_back(std::move(act));
        return validated_triple_rep(std::move(M));
    };
    MatrixExample ex;
    ex.rt = rt;
    Mat act3(3, 3);
    act3(0, 2) = 1;
    act3(2, 1) = 1;
    ex.M = module(3, 2, std::move(act3));
    ex.M1 = module(1, 1, Mat(1, 1));
    Mat act2(2, 2);
    act2(0, 1) = 1;
    ex.M2 = module(2, 1, std::move(act2));
    Mat actq(2, 2);
    actq(1, 0) = 1;
    ex.M_mod_M1 = module(2, 1, std::move(actq));
    ex.M_mod_M2 = module(1, 1, Mat(1, 1));
    return ex;
}

LocalRegularSPair make_core_quandle_pair(const LieAlgebra& g) {
    const LieAlgebra gv = ensure_lie(g);
    const int n = gv.dim();
    std::string label = gv.label().empty() ? "core-quandle" : gv.label() + "+" + gv.label();
    LieAlgebra gg(2 * n, std::move(label));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (gv.c(i, j, k) != 0) {
                    gg.set_c(i, j, k, gv.c(i, j, k));
                    gg.set_c(n + i, n + j, n + k, gv.c(i, j, k));
                }
    Mat phi(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        phi(i, n + i) = 1;
        phi(n + i, i) = 1;
    }
    return LocalRegularSPair{validated(std::move(gg)), std::move(phi)};
}

LocalRegularSPair make_sl2_ad_pair() {
    Mat phi(3, 3);
    phi(0, 0) = 4;
    phi(1, 1) = frac(1, 4);
    phi(2, 2) = 1;
    return LocalRegularSPair{make_sl(2), std::move(phi)};
}

InfSManifold make_trivial_line(const Rat& a) {
    if (a == 0 || a == 1)
        throw std::invalid_argument("make_trivial_line: sigma = (" + rat_str(a) +
                                    ") violates ISM0");
    LYAlgebra T(1, "line");
    T.mark_validated(true);
    Mat s(1, 1);
    s(0, 0) = a;
    return InfSManifold{std::move(T), std::move(s)};
}

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = {
        {"sl", "<n>", "sl_n in the elementary-matrix basis; sl2 is (e,f,h)", "lie"},
        {"g-alpha-beta", "<base> <alpha> <beta>",
         "x*y = alpha[x,y] and [x,y,z] = beta[[x,y],z] over a base Lie algebra (base: sl2, "
         "sl3, ...)",
         "ly"},
        {"sl2-ef-triple", "", "(sl2, <e,f>, <h>)", "triple"},
        {"sln-diag-split", "<n>", "(sl_n, off-diagonal part, diagonal part)", "triple"},
        {"nontight-rep", "[c1 c2 c3]",
         "rho = lambda Id, delta = -lambda([.,.]) Id over g-alpha-beta sl2 1 0; default "
         "lambda = 0 0 1",
         "lyrep"},
        {"rank2-nontight-rep", "[c1 c2 c3]",
         "two-dimensional strictly triangular variant; default lambda = 0 0 1", "lyrep"},
        {"matrix-example", "[m|m1|m2|mod-m1|mod-m2]",
         "three-dimensional module over (Q, Q, 0) and its subquotients; default m",
         "triplerep"},
        {"core-quandle", "<base>", "(g + g, swap)", "spair"},
        {"core-quandle-ism", "<base>",
         "s-manifold of the associated triple of (g + g, swap): sigma = -id on the "
         "antidiagonal",
         "ism"},
        {"sl2-ad-pair", "", "(sl2, Ad diag(2,1/2)) = diag(4,1/4,1) in (e,f,h)", "spair"},
        {"trivial-line", "<a>", "one-dimensional trivial algebra with sigma = (a)", "ism"},
        {"random-triple-rep", "<ly entry...>",
         "seeded effective+minimal module over the enveloping triple of an algebra entry",
         "triplerep"},
        {"random-module", "<ly entry...>",
         "seeded module over the enveloping triple; may fail effectiveness and minimality",
         "triplerep"},
        {"random-ly-rep", "<ly entry...>", "seeded tight representation of an algebra entry",
         "lyrep"},
        {"random-ism-rep", "<ism entry...>",
         "seeded regular equivariant representation of an s-manifold entry", "ismrep"},
        {"random-spair-rep", "<spair entry...>",
         "seeded module with compatible automorphism over an s-pair entry", "spairrep"},
    };
    return entries;
}

}  // namespace lycas
