#include "lycas/reps.hpp"

#include <stdexcept>

namespace lycas {

namespace {

void require_shapes(const LYRep& r) {
    const size_t n = static_cast<size_t>(r.T.dim());
    if (r.rho.size() != n || r.theta.size() != n * n || r.delta.size() != n * n)
        throw std::invalid_argument("representation: structure table sizes do not match dim");
    for (const Mat& m : r.rho)
        if (m.rows() != r.v_dim || m.cols() != r.v_dim)
            throw std::invalid_argument("representation: rho matrix shape mismatch");
    for (const Mat& m : r.theta)
        if (m.rows() != r.v_dim || m.cols() != r.v_dim)
            throw std::invalid_argument("representation: theta matrix shape mismatch");
    for (const Mat& m : r.delta)
        if (m.rows() != r.v_dim || m.cols() != r.v_dim)
            throw std::invalid_argument("representation: delta matrix shape mismatch");
}

LYAlgebra ensure_valid_algebra(const LYAlgebra& T) {
    if (T.validated()) return T;
    return validated(T);
}

Vec subvec(const Vec& v, int from, int to) { return Vec(v.begin() + from, v.begin() + to); }

Mat block(const Mat& a, int r0, int r1, int c0, int c1) {
    Mat b(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) b(i - r0, j - c0) = a(i, j);
    return b;
}

}  // namespace

Mat LYRep::rho_vec(const Vec& x) const {
    Mat m(v_dim, v_dim);
    for (int i = 0; i < T.dim(); ++i)
        if (x[i] != 0) m = m + x[i] * rho[i];
    return m;
}

Mat LYRep::theta_vec(const Vec& x, const Vec& y) const {
    Mat m(v_dim, v_dim);
    for (int i = 0; i < T.dim(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < T.dim(); ++j)
            if (y[j] != 0) m = m + (x[i] * y[j]) * th(i, j);
    }
    return m;
}

Mat LYRep::delta_vec(const Vec& x, const Vec& y) const {
    Mat m(v_dim, v_dim);
    for (int i = 0; i < T.dim(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < T.dim(); ++j)
            if (y[j] != 0) m = m + (x[i] * y[j]) * dl(i, j);
    }
    return m;
}

LYRep make_rep(LYAlgebra T, int v_dim) {
    LYRep r;
    const size_t n = static_cast<size_t>(T.dim());
    r.T = std::move(T);
    r.v_dim = v_dim;
    r.rho.assign(n, Mat(v_dim, v_dim));
    r.theta.assign(n * n, Mat(v_dim, v_dim));
    r.delta.assign(n * n, Mat(v_dim, v_dim));
    return r;
}

std::vector<Mat> delta_default(const LYAlgebra& T, const std::vector<Mat>& rho,
                               const std::vector<Mat>& theta) {
    const int n = T.dim();
    const int v = rho.empty() ? 0 : rho[0].rows();
    auto rho_vec = [&](const Vec& x) {
        Mat m(v, v);
        for (int i = 0; i < n; ++i)
            if (x[i] != 0) m = m + x[i] * rho[i];
        return m;
    };
    std::vector<Mat> delta(static_cast<size_t>(n) * n, Mat(v, v));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            delta[static_cast<size_t>(i) * n + j] =
                commutator(rho[i], rho[j]) - rho_vec(T.b_basis(i, j)) -
                theta[static_cast<size_t>(i) * n + j] + theta[static_cast<size_t>(j) * n + i];
    return delta;
}

AxiomReport check_rly(const LYRep& r) {
    require_shapes(r);
    const int n = r.T.dim();
    const LYAlgebra& T = r.T;
    AxiomReport rep;
    {
        AxiomCheck c{"RLY1"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j) {
                Mat lhs = r.dl(i, j) + r.th(i, j) - r.th(j, i);
                Mat rhs = commutator(r.rho[i], r.rho[j]) - r.rho_vec(T.b_basis(i, j));
                if (!(lhs == rhs)) {
                    c.pass = false;
                    c.witness = {i, j};
                }
            }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"RLY2"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k) {
                    Mat m = r.theta_vec(unit_vec(n, i), T.b_basis(j, k)) -
                            r.rho[j] * r.th(i, k) + r.rho[k] * r.th(i, j);
                    if (!m.is_zero()) {
                        c.pass = false;
                        c.witness = {i, j, k};
                    }
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"RLY3"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k) {
                    Mat m = r.theta_vec(T.b_basis(i, j), unit_vec(n, k)) -
                            r.th(i, k) * r.rho[j] + r.th(j, k) * r.rho[i];
                    if (!m.is_zero()) {
                        c.pass = false;
                        c.witness = {i, j, k};
                    }
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"RLY4"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k)
                    for (int l = 0; l < n && c.pass; ++l) {
                        Mat m = r.th(k, l) * r.th(i, j) - r.th(j, l) * r.th(i, k) -
                                r.theta_vec(unit_vec(n, i), T.t_basis(j, k, l)) +
                                r.dl(j, k) * r.th(i, l);
                        if (!m.is_zero()) {
                            c.pass = false;
                            c.witness = {i, j, k, l};
                        }
                    }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"RLY5"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k) {
                    Mat m = commutator(r.dl(i, j), r.rho[k]) - r.rho_vec(T.t_basis(i, j, k));
                    if (!m.is_zero()) {
                        c.pass = false;
                        c.witness = {i, j, k};
                    }
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"RLY6"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k)
                    for (int l = 0; l < n && c.pass; ++l) {
                        Mat m = commutator(r.dl(i, j), r.th(k, l)) -
                                r.theta_vec(T.t_basis(i, j, k), unit_vec(n, l)) -
                                r.theta_vec(unit_vec(n, k), T.t_basis(i, j, l));
                        if (!m.is_zero()) {
                            c.pass = false;
                            c.witness = {i, j, k, l};
                        }
                    }
        rep.checks.push_back(c);
    }
    return rep;
}

LYRep validated_rep(LYRep r) {
    r.T = ensure_valid_algebra(r.T);
    AxiomReport rep = check_rly(r);
    if (!rep.pass()) {
        const AxiomCheck* f = rep.failing();
        std::string w;
        for (int i : f->witness) w += (w.empty() ? "" : ",") + std::to_string(i);
        throw std::invalid_argument("representation axiom " + f->axiom +
                                    " fails at basis tuple (" + w + ")");
    }
    r.validated = true;
    return r;
}

Extension extension_algebra(const LYRep& r0) {
    LYRep r = r0.validated ? r0 : validated_rep(r0);
    const int n = r.T.dim(), v = r.v_dim, nn = n + v;
    LYAlgebra ext(nn, r.T.label().empty() ? "" : r.T.label() + "+V");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int k = 0; k < n; ++k) ext.set_b(i, j, k, r.T.b(i, j, k));
            for (int i2 = 0; i2 < n; ++i2)
                for (int k = 0; k < n; ++k) ext.set_t(i, j, i2, k, r.T.t(i, j, i2, k));
        }
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < v; ++b)
            for (int a = 0; a < v; ++a) ext.set_b(i, n + b, n + a, r.rho[i](a, b));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int b = 0; b < v; ++b)
                for (int a = 0; a < v; ++a) {
                    // first slot in V: theta(x2,x3) v1
                    ext.t(n + b, j, k, n + a) = r.th(j, k)(a, b);
                    // third slot in V: delta(x1,x2) v3
                    ext.t(j, k, n + b, n + a) = r.dl(j, k)(a, b);
                }
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int b = 0; b < v; ++b)
                for (int a = 0; a < v; ++a)
                    // second slot in V: -theta(x1,x3) v2
                    ext.t(i, n + b, k, n + a) = -r.th(i, k)(a, b);
    LYAlgebra checked = validated(std::move(ext));
    Mat proj(n, nn);
    for (int i = 0; i < n; ++i) proj(i, i) = 1;
    Mat inc(nn, n);
    for (int i = 0; i < n; ++i) inc(i, i) = 1;
    return Extension{checked, LYHom{checked, r.T, proj}, inc};
}

ExtractedRep rep_from_extension(const LYAlgebra& Tt0, const Subspace& U, const Subspace& W) {
    LYAlgebra Tt = ensure_valid_algebra(Tt0);
    const int nn = Tt.dim();
    if (U.ambient() != nn || W.ambient() != nn)
        throw std::invalid_argument("rep_from_extension: ambient mismatch");
    if (U.dim() + W.dim() != nn || intersect(U, W).dim() != 0)
        throw std::invalid_argument("rep_from_extension: U and W are not complementary");
    CheckResult ab = is_abelian_ideal(Tt, U);
    if (!ab.pass)
        throw std::invalid_argument("rep_from_extension: U is not an abelian ideal (" + ab.detail +
                                    ")");
    CheckResult sub = is_subalgebra(Tt, W);
    if (!sub.pass)
        throw std::invalid_argument("rep_from_extension: complement is not a subalgebra (" +
                                    sub.detail + ")");
    const int w = W.dim(), u = U.dim();
    auto wc = [&](const Vec& x) {
        auto c = W.coords(x);
        if (!c) throw std::invalid_argument("rep_from_extension: product leaves the complement");
        return *c;
    };
    auto uc = [&](const Vec& x) {
        auto c = U.coords(x);
        if (!c) throw std::invalid_argument("rep_from_extension: product leaves the ideal");
        return *c;
    };
    LYAlgebra TW(w, Tt.label().empty() ? "" : Tt.label() + ".complement");
    for (int a = 0; a < w; ++a)
        for (int b = a + 1; b < w; ++b) {
            Vec p = wc(Tt.bin(W.basis_row(a), W.basis_row(b)));
            for (int k = 0; k < w; ++k) TW.set_b(a, b, k, p[k]);
        }
    for (int a = 0; a < w; ++a)
        for (int b = a + 1; b < w; ++b)
            for (int c = 0; c < w; ++c) {
                Vec p = wc(Tt.tern(W.basis_row(a), W.basis_row(b), W.basis_row(c)));
                for (int l = 0; l < w; ++l) TW.set_t(a, b, c, l, p[l]);
            }
    LYRep r = make_rep(validated(std::move(TW)), u);
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < u; ++b)
            r.rho[a].set_col(b, uc(Tt.bin(W.basis_row(a), U.basis_row(b))));
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b)
            for (int c = 0; c < u; ++c) {
                r.theta[static_cast<size_t>(a) * w + b].set_col(
                    c, uc(Tt.tern(U.basis_row(c), W.basis_row(a), W.basis_row(b))));
                r.delta[static_cast<size_t>(a) * w + b].set_col(
                    c, uc(Tt.tern(W.basis_row(a), W.basis_row(b), U.basis_row(c))));
            }
    return ExtractedRep{validated_rep(std::move(r)), W.basis(), U.basis()};
}

Mat TripleRep::act_vec(const Vec& x) const {
    Mat m(p, p);
    for (int i = 0; i < rt.g.dim(); ++i)
        if (x[i] != 0) m = m + x[i] * action[i];
    return m;
}

AxiomReport check_triple_rep(const TripleRep& M) {
    const int ng = M.rt.g.dim();
    if (static_cast<int>(M.action.size()) != ng)
        throw std::invalid_argument("triple rep: one action matrix per basis vector required");
    for (const Mat& a : M.action)
        if (a.rows() != M.p || a.cols() != M.p)
            throw std::invalid_argument("triple rep: action matrix shape mismatch");
    if (M.n_dim < 0 || M.n_dim > M.p)
        throw std::invalid_argument("triple rep: n_dim out of range");
    AxiomReport rep = check_reductive_triple(M.rt);
    {
        AxiomCheck c{"module"};
        for (int i = 0; i < ng && c.pass; ++i)
            for (int j = i + 1; j < ng && c.pass; ++j) {
                Mat lhs = M.act_vec(M.rt.g.bracket_basis(i, j));
                Mat rhs = commutator(M.action[i], M.action[j]);
                if (!(lhs == rhs)) {
                    c.pass = false;
                    c.witness = {i, j};
                }
            }
        rep.checks.push_back(c);
    }
    auto block_zero = [&](const Mat& a, int r0, int r1, int c0, int c1, AxiomCheck& c, int idx) {
        for (int col = c0; col < c1 && c.pass; ++col)
            for (int row = r0; row < r1; ++row)
                if (a(row, col) != 0) {
                    c.pass = false;
                    c.witness = {idx, col};
                    break;
                }
    };
    {
        AxiomCheck c{"h-preserves-n"};
        for (int a = 0; a < M.rt.h.dim() && c.pass; ++a)
            block_zero(M.act_vec(M.rt.h.basis_row(a)), M.n_dim, M.p, 0, M.n_dim, c, a);
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"h-preserves-s"};
        for (int a = 0; a < M.rt.h.dim() && c.pass; ++a)
            block_zero(M.act_vec(M.rt.h.basis_row(a)), 0, M.n_dim, M.n_dim, M.p, c, a);
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"m-sends-s-to-n"};
        for (int a = 0; a < M.rt.m.dim() && c.pass; ++a)
            block_zero(M.act_vec(M.rt.m.basis_row(a)), M.n_dim, M.p, M.n_dim, M.p, c, a);
        rep.checks.push_back(c);
    }
    return rep;
}

TripleRep validated_triple_rep(TripleRep M) {
    AxiomReport rep = check_triple_rep(M);
    if (!rep.pass()) {
        const AxiomCheck* f = rep.failing();
        std::string w;
        for (int i : f->witness) w += (w.empty() ? "" : ",") + std::to_string(i);
        throw std::invalid_argument("triple rep check " + f->axiom + " fails at (" + w + ")");
    }
    M.validated = true;
    return M;
}

namespace {

// Columns: the effectiveness map Ms -> Hom(m, Mn) stacked over the m-basis.
Mat effectiveness_matrix(const TripleRep& M) {
    const int dm = M.rt.m.dim(), s = M.s_dim();
    Mat e(dm * M.n_dim, s);
    for (int a = 0; a < dm; ++a) {
        Mat act = M.act_vec(M.rt.m.basis_row(a));
        for (int c = 0; c < s; ++c)
            for (int row = 0; row < M.n_dim; ++row)
                e(a * M.n_dim + row, c) = act(row, M.n_dim + c);
    }
    return e;
}

// Rows span (m Mn)_s inside Q^{s_dim}.
Subspace reached_s_part(const TripleRep& M) {
    const int dm = M.rt.m.dim(), s = M.s_dim();
    std::vector<Vec> rows;
    for (int a = 0; a < dm; ++a) {
        Mat act = M.act_vec(M.rt.m.basis_row(a));
        for (int b = 0; b < M.n_dim; ++b) {
            Vec v(static_cast<size_t>(s));
            for (int c = 0; c < s; ++c) v[c] = act(M.n_dim + c, b);
            if (!is_zero(v)) rows.push_back(v);
        }
    }
    if (rows.empty()) return Subspace(s);
    return Subspace::span(Mat::from_rows(rows));
}

}  // namespace

bool is_effective_rep(const TripleRep& M) {
    if (M.s_dim() == 0) return true;
    return kernel(effectiveness_matrix(M)).dim() == 0;
}

bool is_minimal_rep(const TripleRep& M) { return reached_s_part(M).dim() == M.s_dim(); }

TripleRep effectivize(const TripleRep& M0) {
    TripleRep M = M0.validated ? M0 : validated_triple_rep(M0);
    const int s = M.s_dim(), n = M.n_dim;
    Subspace K = s > 0 ? kernel(effectiveness_matrix(M)) : Subspace(0);
    if (K.dim() == 0) return M;
    auto embed_s = [&](const Vec& sc) {
        Vec v = zero_vec(M.p);
        for (int c = 0; c < s; ++c) v[n + c] = sc[c];
        return v;
    };
    for (int a = 0; a < M.rt.m.dim(); ++a)
        for (int i = 0; i < K.dim(); ++i)
            if (!is_zero(mul(M.act_vec(M.rt.m.basis_row(a)), embed_s(K.basis_row(i)))))
                throw std::logic_error("effectivize: m does not kill the kernel");
    for (int a = 0; a < M.rt.h.dim(); ++a)
        for (int i = 0; i < K.dim(); ++i) {
            Vec img = mul(M.act_vec(M.rt.h.basis_row(a)), embed_s(K.basis_row(i)));
            if (!K.contains(subvec(img, n, M.p)))
                throw std::logic_error("effectivize: kernel is not h-invariant");
        }
    Echelon ke = rref(K.basis());
    std::vector<bool> piv(static_cast<size_t>(s), false);
    for (int pcol : ke.pivots) piv[pcol] = true;
    std::vector<int> rest;
    for (int c = 0; c < s; ++c)
        if (!piv[c]) rest.push_back(c);
    const int q = static_cast<int>(rest.size());
    // proj: quotient coordinates (entries at non-pivot positions after
    // reducing modulo K); sect: representatives.
    Mat proj(q, s), sect(s, q);
    for (int b = 0; b < s; ++b) {
        Vec w = unit_vec(s, b);
        for (int i = 0; i < K.dim(); ++i) {
            Rat c = w[ke.pivots[i]];
            if (c != 0) w = sub(w, scale(c, K.basis_row(i)));
        }
        for (int t = 0; t < q; ++t) proj(t, b) = w[rest[t]];
    }
    for (int t = 0; t < q; ++t) sect(rest[t], t) = 1;
    TripleRep out;
    out.rt = M.rt;
    out.p = n + q;
    out.n_dim = n;
    for (const Mat& a : M.action) {
        Mat ann = block(a, 0, n, 0, n), ans = block(a, 0, n, n, M.p);
        Mat asn = block(a, n, M.p, 0, n), ass = block(a, n, M.p, n, M.p);
        Mat top = hstack(ann, ans * sect);
        Mat bot = hstack(proj * asn, proj * ass * sect);
        out.action.push_back(vstack(top, bot));
    }
    return validated_triple_rep(std::move(out));
}

TripleRep minimalize(const TripleRep& M0) {
    TripleRep M = M0.validated ? M0 : validated_triple_rep(M0);
    const int s = M.s_dim(), n = M.n_dim;
    Subspace R = reached_s_part(M);
    if (R.dim() == s) return M;
    const int q = R.dim();
    Mat bt = R.basis().transpose();  // s x q
    TripleRep out;
    out.rt = M.rt;
    out.p = n + q;
    out.n_dim = n;
    for (const Mat& a : M.action) {
        Mat ann = block(a, 0, n, 0, n), ans = block(a, 0, n, n, M.p);
        Mat asn = block(a, n, M.p, 0, n), ass = block(a, n, M.p, n, M.p);
        auto xn = solve_all(bt, asn);
        auto xs = solve_all(bt, ass * bt);
        if (!xn || !xs) throw std::logic_error("minimalize: (m Mn)_s is not invariant");
        out.action.push_back(vstack(hstack(ann, ans * bt), hstack(*xn, *xs)));
    }
    return validated_triple_rep(std::move(out));
}

LYRep functor_rly(const TripleRep& M0) {
    TripleRep M = M0.validated ? M0 : validated_triple_rep(M0);
    TripleSplit sp(M.rt);
    LYAlgebra Tm = induced_ly(M.rt);
    const int dm = sp.dm(), n = M.n_dim;
    LYRep r = make_rep(Tm, n);
    std::vector<Mat> acts;
    for (int a = 0; a < dm; ++a) acts.push_back(M.act_vec(M.rt.m.basis_row(a)));
    for (int a = 0; a < dm; ++a) r.rho[a] = block(acts[a], 0, n, 0, n);
    for (int a = 0; a < dm; ++a) {
        Mat sa = block(acts[a], n, M.p, 0, n);  // v -> (x_a v)_s
        for (int b = 0; b < dm; ++b) {
            Mat bn = block(acts[b], 0, n, n, M.p);  // s -> x_b s
            r.theta[static_cast<size_t>(a) * dm + b] = bn * sa;
        }
    }
    for (int a = 0; a < dm; ++a)
        for (int b = 0; b < dm; ++b) {
            Vec hb = sp.project_h(M.rt.g.bracket(M.rt.m.basis_row(a), M.rt.m.basis_row(b)));
            r.delta[static_cast<size_t>(a) * dm + b] = block(M.act_vec(hb), 0, n, 0, n);
        }
    return validated_rep(std::move(r));
}

TightReport is_tight(const LYRep& r) {
    TightReport out;
    DerivationSpace ds = inner_derivation_space(r.T);
    if (ds.pairs.empty()) return out;
    Subspace rel = kernel(ds.pair_mat);
    for (int i = 0; i < rel.dim(); ++i) {
        Vec kappa = rel.basis_row(i);
        Mat sum(r.v_dim, r.v_dim);
        for (size_t c = 0; c < ds.pairs.size(); ++c)
            if (kappa[c] != 0) sum = sum + kappa[c] * r.dl(ds.pairs[c].first, ds.pairs[c].second);
        if (!sum.is_zero()) {
            out.tight = false;
            for (size_t c = 0; c < ds.pairs.size(); ++c)
                if (kappa[c] != 0) {
                    out.rel_pairs.push_back(ds.pairs[c]);
                    out.rel_coeffs.push_back(kappa[c]);
                }
            out.delta_sum = sum;
            return out;
        }
    }
    return out;
}

RrtResult functor_rrt(const LYRep& r0, bool require_tight) {
    LYRep r = r0.validated ? r0 : validated_rep(r0);
    RrtResult out;
    out.tight_report = is_tight(r);
    out.env = enveloping(r.T);
    if (!out.tight_report.tight && require_tight) {
        out.detail = "input representation is not tight";
        return out;
    }
    const int n = r.T.dim(), v = r.v_dim, k = out.env.k();

    // theta2(e_i, v_b) as flattened v x n matrices, in lex order over (i,b).
    std::vector<Vec> fam_cols;
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < v; ++b) {
            Mat t2(v, n);
            for (int j = 0; j < n; ++j) t2.set_col(j, r.th(i, j).col(b));
            fam_cols.push_back(t2.flatten());
            out.s_family.emplace_back(i, b);
        }
    Mat fam = fam_cols.empty() ? Mat(v * n, 0) : Mat::from_rows(fam_cols).transpose();
    out.s_basis_idx = rref(fam).pivots;
    const int s = static_cast<int>(out.s_basis_idx.size());
    {
        std::vector<Vec> rows;
        for (int c : out.s_basis_idx) rows.push_back(fam.col(c));
        out.s_basis = rows.empty() ? Mat(0, v * n) : Mat::from_rows(rows);
    }
    Mat sbt = out.s_basis.transpose();
    auto s_coords = [&](const Vec& flat) { return solve(sbt, flat); };

    const int p = v + s;
    std::vector<Mat> action(static_cast<size_t>(n + k), Mat(p, p));
    std::vector<Mat> fmats;
    for (int c = 0; c < s; ++c) fmats.push_back(Mat::unflatten(out.s_basis.row(c), v, n));
    for (int i = 0; i < n; ++i) {
        Mat& A = action[i];
        for (int b = 0; b < v; ++b) {
            for (int row = 0; row < v; ++row) A(row, b) = r.rho[i](row, b);
            auto sc = s_coords(fam.col(i * v + b));
            if (!sc) {
                out.detail = "theta2 family member escapes its own span";
                return out;
            }
            for (int c = 0; c < s; ++c) A(v + c, b) = -(*sc)[c];
        }
        for (int c = 0; c < s; ++c)
            for (int row = 0; row < v; ++row) A(row, v + c) = -fmats[c](row, i);
    }
    for (int a = 0; a < k; ++a) {
        Mat& A = action[n + a];
        auto [pi, qi] = out.env.d_pairs[a];
        Mat dhat = r.dl(pi, qi);
        Mat dmat = Mat::unflatten(out.env.d_basis.row(a), n, n);
        for (int b = 0; b < v; ++b)
            for (int row = 0; row < v; ++row) A(row, b) = dhat(row, b);
        for (int c = 0; c < s; ++c) {
            auto sc = s_coords((dhat * fmats[c] - fmats[c] * dmat).flatten());
            if (!sc) {
                out.detail = "derivation action leaves the theta2 span";
                return out;
            }
            for (int c2 = 0; c2 < s; ++c2) A(v + c2, v + c) = (*sc)[c2];
        }
    }
    TripleRep tr;
    tr.rt = out.env.triple;
    tr.p = p;
    tr.n_dim = v;
    tr.action = std::move(action);
    AxiomReport rep = check_triple_rep(tr);
    if (!rep.pass()) {
        out.detail = "constructed module fails check " + rep.failing()->axiom;
        return out;
    }
    tr.validated = true;
    out.tr = std::move(tr);
    out.ok = true;
    return out;
}

AlphaReport roundtrip_alpha(const LYRep& r0) {
    LYRep r = r0.validated ? r0 : validated_rep(r0);
    AlphaReport out;
    out.rrt = functor_rrt(r);
    if (!out.rrt.ok) {
        out.detail = out.rrt.detail;
        return out;
    }
    out.back = functor_rly(out.rrt.tr);
    if (!out.back.T.same_structure(r.T)) {
        out.detail = "round trip changed the base algebra";
        return out;
    }
    if (out.back.v_dim != r.v_dim || !(out.back.rho == r.rho) || !(out.back.theta == r.theta) ||
        !(out.back.delta == r.delta)) {
        out.detail = "round trip differs from the original representation";
        return out;
    }
    out.ok = true;
    return out;
}

BetaReport roundtrip_beta(const TripleRep& M0) {
    TripleRep M = M0.validated ? M0 : validated_triple_rep(M0);
    BetaReport out;
    out.em_input = is_effective_rep(M) && is_minimal_rep(M);
    if (!out.em_input) {
        out.detail = "round trip is defined for effective minimal modules";
        return out;
    }
    CanonicalHom ch = canonical_hom(M.rt);
    if (!ch.hom_ok || !ch.injective || !ch.surjective_onto_Lm) {
        out.detail = "canonical morphism onto L(m) is not an isomorphism";
        return out;
    }
    LYRep r = functor_rly(M);
    out.rrt = functor_rrt(r);
    if (!out.rrt.ok) {
        out.detail = out.rrt.detail;
        return out;
    }
    const Enveloping& env = out.rrt.env;
    const int dm = M.rt.m.dim(), N = env.L.dim(), n = M.n_dim;
    if (out.rrt.tr.p != M.p) {
        out.detail = "round trip module has a different dimension";
        return out;
    }
    // chi: g -> L(m) coordinates.
    Mat chi(N, M.rt.g.dim());
    for (int i = 0; i < M.rt.g.dim(); ++i) {
        Vec col = ch.f.col(i);
        auto dc = env.d_coords(subvec(col, dm, dm + dm * dm));
        if (!dc) {
            out.detail = "canonical image leaves T + D(T)";
            return out;
        }
        chi.set_col(i, env.embed(subvec(col, 0, dm), *dc));
    }
    auto chi_inv = invert(chi);
    if (!chi_inv) {
        out.detail = "canonical morphism is singular";
        return out;
    }
    // Original action transported to the L(m) basis.
    std::vector<Mat> transported;
    for (int j = 0; j < N; ++j) {
        Mat a(M.p, M.p);
        for (int i = 0; i < M.rt.g.dim(); ++i)
            if ((*chi_inv)(i, j) != 0) a = a + (*chi_inv)(i, j) * M.action[i];
        transported.push_back(a);
    }
    // beta: identity on Mn; s -> (x -> -(x s)) expressed in the theta2 basis.
    out.beta = Mat(M.p, M.p);
    for (int b = 0; b < n; ++b) out.beta(b, b) = 1;
    Mat sbt = out.rrt.s_basis.transpose();
    for (int c = 0; c < M.s_dim(); ++c) {
        Mat f(n, dm);
        for (int a = 0; a < dm; ++a) {
            Vec img = mul(transported[a], unit_vec(M.p, n + c));
            if (!is_zero(subvec(img, n, M.p))) {
                out.detail = "transported module does not send m Ms into Mn";
                return out;
            }
            f.set_col(a, scale(-1, subvec(img, 0, n)));
        }
        auto sc = solve(sbt, f.flatten());
        if (!sc) {
            out.detail = "beta image leaves the theta2 span";
            return out;
        }
        for (int c2 = 0; c2 < M.s_dim(); ++c2) out.beta(n + c2, n + c) = (*sc)[c2];
    }
    if (!invert(out.beta)) {
        out.detail = "beta is singular";
        return out;
    }
    out.intertwines = true;
    for (int j = 0; j < N && out.intertwines; ++j)
        if (!(out.beta * transported[j] == out.rrt.tr.action[j] * out.beta))
            out.intertwines = false;
    if (!out.intertwines) {
        out.detail = "beta does not intertwine the two modules";
        return out;
    }
    out.ok = true;
    return out;
}

LPiIota l_pi_iota(const LYRep& r0) {
    LYRep r = r0.validated ? r0 : validated_rep(r0);
    LPiIota out;
    out.ext = extension_algebra(r);
    out.lpi = induced_L_pi(out.ext.pi);
    const int n = r.T.dim();
    const int nn = out.ext.ext.dim();
    const int NN = out.lpi.src.L.dim();
    std::vector<Vec> drows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec flat = d_map(out.ext.ext, unit_vec(nn, i), unit_vec(nn, j)).flatten();
            auto dc = out.lpi.src.d_coords(flat);
            if (!dc) throw std::logic_error("l_pi_iota: inner derivation outside D(T~)");
            Vec row = zero_vec(NN);
            for (int a = 0; a < out.lpi.src.k(); ++a) row[nn + a] = (*dc)[a];
            if (!is_zero(row)) drows.push_back(row);
        }
    out.dsub_part =
        drows.empty() ? Subspace(NN) : Subspace::span(Mat::from_rows(drows));
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) rows.push_back(unit_vec(NN, i));
    for (const Vec& d : drows) rows.push_back(d);
    out.l_sub = Subspace::span(Mat::from_rows(rows));
    out.restricted = out.lpi.map * out.l_sub.basis().transpose();
    out.surjective = (rref(out.restricted).rank == out.lpi.dst.L.dim());
    Subspace kc = kernel(out.restricted);
    std::vector<Vec> krows;
    for (int i = 0; i < kc.dim(); ++i)
        krows.push_back(mul(out.l_sub.basis().transpose(), kc.basis_row(i)));
    out.ker = krows.empty() ? Subspace(NN) : Subspace::span(Mat::from_rows(krows));
    out.kernel_central = true;
    for (int i = 0; i < out.ker.dim() && out.kernel_central; ++i)
        for (int j = 0; j < out.l_sub.dim() && out.kernel_central; ++j)
            if (!is_zero(out.lpi.src.L.bracket(out.ker.basis_row(i), out.l_sub.basis_row(j))))
                out.kernel_central = false;
    out.kernel_in_dsub = out.dsub_part.contains(out.ker);
    return out;
}

LeviReport levi_section(const LYRep& r0) {
    LYRep r = r0.validated ? r0 : validated_rep(r0);
    if (!is_L_semisimple(r.T))
        throw std::invalid_argument("levi_section: the base algebra is not L-semisimple");
    LeviReport out;
    out.base = l_pi_iota(r);
    const LieAlgebra& Lsrc = out.base.lpi.src.L;
    const int n = r.T.dim();
    const int NN = Lsrc.dim();
    const int Nt = out.base.lpi.dst.L.dim();
    std::vector<Vec> grows;
    for (int i = 0; i < out.base.l_sub.dim(); ++i)
        for (int j = i + 1; j < out.base.l_sub.dim(); ++j) {
            Vec v = Lsrc.bracket(out.base.l_sub.basis_row(i), out.base.l_sub.basis_row(j));
            if (!is_zero(v)) grows.push_back(v);
        }
    out.section_image = grows.empty() ? Subspace(NN) : Subspace::span(Mat::from_rows(grows));
    if (out.section_image.dim() != Nt) {
        out.detail = "derived subalgebra does not have the dimension of L(T)";
        return out;
    }
    Mat mg = out.base.lpi.map * out.section_image.basis().transpose();
    auto mg_inv = invert(mg);
    if (!mg_inv) {
        out.detail = "restriction of L(pi,iota) to the section is singular";
        return out;
    }
    out.section = out.section_image.basis().transpose() * (*mg_inv);
    Subspace tprime = [&] {
        std::vector<Vec> rows;
        for (int i = 0; i < n; ++i) rows.push_back(unit_vec(NN, i));
        return Subspace::span(Mat::from_rows(rows));
    }();
    Subspace ft = [&] {
        std::vector<Vec> rows;
        for (int i = 0; i < r.T.dim(); ++i) rows.push_back(out.section.col(i));
        return Subspace::span(Mat::from_rows(rows));
    }();
    out.conds[0] = (out.base.ker.dim() == 0);
    out.conds[1] = (out.section_image == out.base.l_sub);
    out.conds[2] = (intersect(out.section_image, tprime).dim() +
                        intersect(out.section_image, out.base.dsub_part).dim() ==
                    out.section_image.dim());
    out.conds[3] = ft.contains(tprime);
    out.conds[4] = out.section_image.contains(tprime);
    out.conds[5] = tprime.contains(ft);
    out.tight = is_tight(r).tight;
    out.all_agree = true;
    for (int i = 0; i < 6; ++i)
        if (out.conds[i] != out.tight) out.all_agree = false;
    out.ok = true;
    return out;
}

SufficientReport tight_sufficient(const LYRep& r, const std::string& mode) {
    if (mode != "ttt") throw std::invalid_argument("tight_sufficient: unknown mode " + mode);
    SufficientReport out;
    out.mode = mode;
    out.hypothesis = (triple_product_span(r.T).dim() == r.T.dim());
    out.tight = is_tight(r).tight;
    out.implication_ok = !out.hypothesis || out.tight;
    return out;
}

AxiomReport check_rism(const ISMRep& ir, const InfSManifold& S) {
    const int n = S.T.dim(), v = ir.rep.v_dim;
    AxiomReport rep;
    {
        AxiomCheck c{"manifold-match"};
        if (!ir.rep.T.same_structure(S.T)) {
            c.pass = false;
            c.detail = "representation algebra differs from the manifold algebra";
        }
        rep.checks.push_back(c);
        if (!c.pass) return rep;
    }
    {
        AxiomCheck c{"psi-invertible"};
        if (ir.psi.rows() != v || ir.psi.cols() != v || !invert(ir.psi)) {
            c.pass = false;
            c.detail = "psi is not an invertible v x v matrix";
        }
        rep.checks.push_back(c);
        if (!c.pass) return rep;
    }
    {
        AxiomCheck c{"RISM1"};
        for (int i = 0; i < n && c.pass; ++i)
            if (!(ir.rep.rho_vec(S.sigma.col(i)) * ir.psi == ir.psi * ir.rep.rho[i])) {
                c.pass = false;
                c.witness = {i};
            }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"RISM2"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j) {
                Mat lhs = ir.rep.theta_vec(unit_vec(n, i), S.sigma.col(j));
                if (!(lhs == ir.psi * ir.rep.th(i, j))) {
                    c.pass = false;
                    c.witness = {i, j};
                    break;
                }
                Mat lhs2 = ir.rep.theta_vec(S.sigma.col(i), unit_vec(n, j));
                if (!(lhs2 * ir.psi == ir.rep.th(i, j))) {
                    c.pass = false;
                    c.witness = {i, j};
                }
            }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"RISM3"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                if (!(ir.rep.dl(i, j) * ir.psi == ir.psi * ir.rep.dl(i, j))) {
                    c.pass = false;
                    c.witness = {i, j};
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"regular"};
        if (!invert(Mat::identity(v) - ir.psi)) {
            c.pass = false;
            c.detail = "id - psi is singular";
        }
        rep.checks.push_back(c);
    }
    return rep;
}

SufficientReport tight_sufficient_ism(const ISMRep& ir, const InfSManifold& S) {
    SufficientReport out;
    out.mode = "perfect-ism";
    Enveloping env = enveloping(S.T);
    bool perfect = (derived_subalgebra(env.L).dim() == env.L.dim());
    bool valid = check_ism(S).pass() && check_rism(ir, S).pass();
    out.hypothesis = perfect && valid;
    out.tight = is_tight(ir.rep).tight;
    out.implication_ok = !out.hypothesis || out.tight;
    return out;
}

AxiomReport check_spair_rep(const SPairRep& sr, const LocalRegularSPair& p) {
    AxiomReport rep;
    AssociatedTriple at = associated_triple(p);
    {
        AxiomCheck c{"triple-match"};
        if (!sr.rep.rt.g.same_structure(p.g) || !(sr.rep.rt.m == at.rt.m) ||
            !(sr.rep.rt.h == at.rt.h)) {
            c.pass = false;
            c.detail = "module triple differs from the associated triple of the pair";
        }
        rep.checks.push_back(c);
        if (!c.pass) return rep;
    }
    AxiomReport mod = check_triple_rep(sr.rep);
    rep.checks.insert(rep.checks.end(), mod.checks.begin(), mod.checks.end());
    const int n = sr.rep.n_dim, pt = sr.rep.p;
    {
        AxiomCheck c{"psi-invertible"};
        if (sr.psi_tilde.rows() != pt || sr.psi_tilde.cols() != pt || !invert(sr.psi_tilde)) {
            c.pass = false;
            c.detail = "psi_tilde is not invertible";
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"n-invariant"};
        for (int col = 0; col < n && c.pass; ++col)
            for (int row = n; row < pt; ++row)
                if (sr.psi_tilde(row, col) != 0) {
                    c.pass = false;
                    c.witness = {col};
                    break;
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"s-identity"};
        for (int col = n; col < pt && c.pass; ++col)
            for (int row = 0; row < pt; ++row)
                if (sr.psi_tilde(row, col) != ((row == col) ? Rat(1) : Rat(0))) {
                    c.pass = false;
                    c.witness = {col};
                    break;
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"equivariance"};
        const int ng = p.g.dim();
        for (int i = 0; i < ng && c.pass; ++i)
            if (!(sr.rep.act_vec(p.phi.col(i)) * sr.psi_tilde == sr.psi_tilde * sr.rep.action[i])) {
                c.pass = false;
                c.witness = {i};
            }
        rep.checks.push_back(c);
    }
    return rep;
}

ISMRep functor_rism(const SPairRep& sr, const LocalRegularSPair& p) {
    AssociatedTriple at = associated_triple(p);
    if (!sr.rep.rt.g.same_structure(p.g) || !(sr.rep.rt.m == at.rt.m) || !(sr.rep.rt.h == at.rt.h))
        throw std::invalid_argument("functor_rism: module triple does not match the pair");
    ISMRep out;
    out.rep = functor_rly(sr.rep);
    out.psi = block(sr.psi_tilde, 0, sr.rep.n_dim, 0, sr.rep.n_dim);
    return out;
}

RlrsResult functor_rlrs(const ISMRep& ir, const InfSManifold& S) {
    RlrsResult out;
    if (!ir.rep.T.same_structure(S.T))
        throw std::invalid_argument("functor_rlrs: representation algebra does not match the manifold");
    out.rrt = functor_rrt(ir.rep);
    if (!out.rrt.ok) {
        out.detail = out.rrt.detail;
        return out;
    }
    out.ls = induced_L_sigma(S);
    const int v = ir.rep.v_dim, p = out.rrt.tr.p;
    Mat pt(p, p);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) pt(i, j) = ir.psi(i, j);
    for (int c = v; c < p; ++c) pt(c, c) = 1;
    out.sr = SPairRep{out.rrt.tr, pt};
    out.ok = true;
    return out;
}

IsmAlphaReport roundtrip_alpha_ism(const ISMRep& ir, const InfSManifold& S) {
    IsmAlphaReport out;
    out.rlrs = functor_rlrs(ir, S);
    if (!out.rlrs.ok) {
        out.detail = out.rlrs.detail;
        return out;
    }
    out.back = functor_rism(out.rlrs.sr, out.rlrs.ls.pair);
    if (!out.back.rep.T.same_structure(ir.rep.T)) {
        out.detail = "round trip changed the base algebra";
        return out;
    }
    if (out.back.rep.v_dim != ir.rep.v_dim || !(out.back.rep.rho == ir.rep.rho) ||
        !(out.back.rep.theta == ir.rep.theta) || !(out.back.rep.delta == ir.rep.delta)) {
        out.detail = "round trip differs from the original representation";
        return out;
    }
    if (!(out.back.psi == ir.psi)) {
        out.detail = "round trip changed psi";
        return out;
    }
    out.ok = true;
    return out;
}

IsmBetaReport roundtrip_beta_ism(const SPairRep& sr, const LocalRegularSPair& p) {
    IsmBetaReport out;
    out.base = roundtrip_beta(sr.rep);
    if (!out.base.ok) {
        out.detail = out.base.detail;
        return out;
    }
    ISMRep ir = functor_rism(sr, p);
    AssociatedTriple at = associated_triple(p);
    RlrsResult rl = functor_rlrs(ir, at.ism);
    if (!rl.ok) {
        out.detail = rl.detail;
        return out;
    }
    out.psi_intertwined = (out.base.beta * sr.psi_tilde == rl.sr.psi_tilde * out.base.beta);
    out.ok = out.psi_intertwined;
    if (!out.ok) out.detail = "beta does not intertwine psi_tilde";
    return out;
}

}  // namespace lycas
