#include "lycas/liealg.hpp"

#include <stdexcept>

namespace lycas {

Vec LieAlgebra::bracket_basis(int i, int j) const {
    Vec v(static_cast<size_t>(n_));
    for (int k = 0; k < n_; ++k) v[k] = c(i, j, k);
    return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec r(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j] == 0) continue;
            Rat cf = x[i] * y[j];
            for (int k = 0; k < n_; ++k) {
                const Rat& s = c(i, j, k);
                if (s != 0) r[k] += cf * s;
            }
        }
    }
    return r;
}

Mat LieAlgebra::ad(const Vec& x) const {
    Mat m(n_, n_);
    for (int j = 0; j < n_; ++j) m.set_col(j, bracket(x, unit_vec(n_, j)));
    return m;
}

AxiomReport check_jacobi(const LieAlgebra& g) {
    const int n = g.dim();
    AxiomReport rep;
    {
        AxiomCheck c{"antisymmetry"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = i; j < n && c.pass; ++j)
                if (!is_zero(add(g.bracket_basis(i, j), g.bracket_basis(j, i)))) {
                    c.pass = false;
                    c.witness = {i, j};
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"jacobi"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k) {
                    Vec v = g.bracket(unit_vec(n, i), g.bracket_basis(j, k));
                    v = add(v, g.bracket(unit_vec(n, j), g.bracket_basis(k, i)));
                    v = add(v, g.bracket(unit_vec(n, k), g.bracket_basis(i, j)));
                    if (!is_zero(v)) {
                        c.pass = false;
                        c.witness = {i, j, k};
                    }
                }
        rep.checks.push_back(c);
    }
    return rep;
}

LieAlgebra validated(LieAlgebra g) {
    AxiomReport rep = check_jacobi(g);
    if (!rep.pass()) {
        const AxiomCheck* f = rep.failing();
        std::string w;
        for (int i : f->witness) w += (w.empty() ? "" : ",") + std::to_string(i);
        throw std::invalid_argument("Lie axiom " + f->axiom + " fails at basis tuple (" + w + ")" +
                                    (g.label().empty() ? "" : " in " + g.label()));
    }
    g.mark_validated(true);
    return g;
}

Mat killing_form(const LieAlgebra& g) {
    const int n = g.dim();
    std::vector<Mat> ads;
    ads.reserve(n);
    for (int i = 0; i < n; ++i) ads.push_back(g.ad(unit_vec(n, i)));
    Mat k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rat t = (ads[i] * ads[j]).trace();
            k(i, j) = t;
            k(j, i) = t;
        }
    return k;
}

bool is_semisimple(const LieAlgebra& g) {
    if (g.dim() == 0) return true;
    return rref(killing_form(g)).rank == g.dim();
}

Subspace derived_subalgebra(const LieAlgebra& g) {
    const int n = g.dim();
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec v = g.bracket_basis(i, j);
            if (!is_zero(v)) rows.push_back(v);
        }
    if (rows.empty()) return Subspace(n);
    return Subspace::span(Mat::from_rows(rows));
}

Subspace center(const LieAlgebra& g) {
    const int n = g.dim();
    if (n == 0) return Subspace(0);
    Mat a(n * n, n);
    for (int i = 0; i < n; ++i) a.set_col(i, g.ad(unit_vec(n, i)).flatten());
    return kernel(a);
}

CheckResult is_lie_subalgebra(const LieAlgebra& g, const Subspace& U) {
    CheckResult r{"lie-subalgebra"};
    for (int a = 0; a < U.dim(); ++a)
        for (int b = a + 1; b < U.dim(); ++b)
            if (!U.contains(g.bracket(U.basis_row(a), U.basis_row(b)))) {
                r.pass = false;
                r.witness = {a, b};
                return r;
            }
    return r;
}

CheckResult is_lie_ideal(const LieAlgebra& g, const Subspace& U) {
    CheckResult r{"lie-ideal"};
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < U.dim(); ++a)
            if (!U.contains(g.bracket(unit_vec(n, i), U.basis_row(a)))) {
                r.pass = false;
                r.witness = {i, a};
                return r;
            }
    return r;
}

AxiomReport check_reductive_triple(const ReductiveTriple& rt) {
    AxiomReport rep;
    const int n = rt.g.dim();
    {
        AxiomCheck c{"decomposition"};
        if (rt.m.ambient() != n || rt.h.ambient() != n) {
            c.pass = false;
            c.detail = "ambient dimension mismatch";
        } else if (rt.m.dim() + rt.h.dim() != n || intersect(rt.m, rt.h).dim() != 0) {
            c.pass = false;
            c.detail = "m and h are not complementary";
        }
        rep.checks.push_back(c);
        if (!c.pass) return rep;
    }
    {
        AxiomCheck c{"h-subalgebra"};
        for (int a = 0; a < rt.h.dim() && c.pass; ++a)
            for (int b = a + 1; b < rt.h.dim() && c.pass; ++b)
                if (!rt.h.contains(rt.g.bracket(rt.h.basis_row(a), rt.h.basis_row(b)))) {
                    c.pass = false;
                    c.witness = {a, b};
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"h-action"};
        for (int a = 0; a < rt.h.dim() && c.pass; ++a)
            for (int b = 0; b < rt.m.dim() && c.pass; ++b)
                if (!rt.m.contains(rt.g.bracket(rt.h.basis_row(a), rt.m.basis_row(b)))) {
                    c.pass = false;
                    c.witness = {a, b};
                }
        rep.checks.push_back(c);
    }
    return rep;
}

TripleSplit::TripleSplit(const ReductiveTriple& rt)
    : dm_(rt.m.dim()), dh_(rt.h.dim()), m_basis_(rt.m.basis()), h_basis_(rt.h.basis()) {
    const int n = rt.g.dim();
    if (dm_ + dh_ != n) throw std::invalid_argument("triple split: m + h does not have full dimension");
    Mat b = (dh_ > 0 ? vstack(m_basis_, h_basis_) : m_basis_).transpose();
    auto inv = invert(b);
    if (!inv) throw std::invalid_argument("triple split: m and h are not complementary");
    to_coords_ = *inv;
}

Vec TripleSplit::m_coords(const Vec& x) const {
    Vec full = mul(to_coords_, x);
    return Vec(full.begin(), full.begin() + dm_);
}

Vec TripleSplit::h_coords(const Vec& x) const {
    Vec full = mul(to_coords_, x);
    return Vec(full.begin() + dm_, full.end());
}

Vec TripleSplit::project_m(const Vec& x) const { return from_m(m_coords(x)); }
Vec TripleSplit::project_h(const Vec& x) const { return from_h(h_coords(x)); }
Vec TripleSplit::from_m(const Vec& mc) const { return mul(m_basis_.transpose(), mc); }
Vec TripleSplit::from_h(const Vec& hc) const { return mul(h_basis_.transpose(), hc); }

Mat TripleSplit::ad_on_m(const LieAlgebra& g, const Vec& x) const {
    Mat m(dm_, dm_);
    for (int a = 0; a < dm_; ++a) m.set_col(a, m_coords(g.bracket(x, m_basis_.row(a))));
    return m;
}

LYAlgebra induced_ly(const ReductiveTriple& rt) {
    AxiomReport rep = check_reductive_triple(rt);
    if (!rep.pass())
        throw std::invalid_argument("induced_ly: reductive triple check fails (" +
                                    rep.failing()->axiom + ")");
    TripleSplit sp(rt);
    const int dm = sp.dm();
    LYAlgebra T(dm, rt.g.label().empty() ? "" : rt.g.label() + ".m");
    std::vector<Vec> hparts(static_cast<size_t>(dm) * dm);
    for (int a = 0; a < dm; ++a)
        for (int b = a + 1; b < dm; ++b) {
            Vec br = rt.g.bracket(rt.m.basis_row(a), rt.m.basis_row(b));
            Vec bm = sp.m_coords(br);
            for (int k = 0; k < dm; ++k) T.set_b(a, b, k, bm[k]);
            hparts[static_cast<size_t>(a) * dm + b] = sp.from_h(sp.h_coords(br));
        }
    for (int a = 0; a < dm; ++a)
        for (int b = a + 1; b < dm; ++b)
            for (int c = 0; c < dm; ++c) {
                Vec t = sp.m_coords(
                    rt.g.bracket(hparts[static_cast<size_t>(a) * dm + b], rt.m.basis_row(c)));
                for (int l = 0; l < dm; ++l) T.set_t(a, b, c, l, t[l]);
            }
    return validated(std::move(T));
}

std::optional<Vec> Enveloping::d_coords(const Vec& flat) const {
    if (k() == 0) return is_zero(flat) ? std::optional<Vec>(Vec{}) : std::nullopt;
    return solve(d_basis.transpose(), flat);
}

Vec Enveloping::embed(const Vec& x, const Vec& dc) const {
    Vec v(static_cast<size_t>(n() + k()));
    for (int i = 0; i < n(); ++i) v[i] = x[i];
    for (int a = 0; a < k(); ++a) v[n() + a] = dc[a];
    return v;
}

Enveloping enveloping(const LYAlgebra& T) {
    if (!T.validated()) {
        AxiomReport rep = check_ly_axioms(T);
        if (!rep.pass())
            throw std::invalid_argument("enveloping: input is not a valid algebra (axiom " +
                                        rep.failing()->axiom + " fails)");
    }
    Enveloping env;
    env.T = T;
    env.T.mark_validated(true);
    env.dspace = inner_derivation_space(T);
    const int n = T.dim();
    const int k = static_cast<int>(env.dspace.basis_pairs.size());
    std::vector<Vec> rows;
    for (int a = 0; a < k; ++a) {
        env.d_pairs.push_back(env.dspace.pairs[env.dspace.basis_pairs[a]]);
        rows.push_back(env.dspace.pair_mat.col(env.dspace.basis_pairs[a]));
    }
    env.d_basis = rows.empty() ? Mat(0, n * n) : Mat::from_rows(rows);

    const int N = n + k;
    LieAlgebra L(N, T.label().empty() ? "" : "L(" + T.label() + ")");
    std::vector<Mat> dmats;
    for (int a = 0; a < k; ++a) dmats.push_back(Mat::unflatten(env.d_basis.row(a), n, n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec bp = T.b_basis(i, j);
            auto dc = env.d_coords(d_map(T, unit_vec(n, i), unit_vec(n, j)).flatten());
            if (!dc) throw std::logic_error("enveloping: inner derivation outside its own span");
            for (int l = 0; l < n; ++l) L.set_c(i, j, l, bp[l]);
            for (int a = 0; a < k; ++a) L.set_c(i, j, n + a, (*dc)[a]);
        }
    for (int a = 0; a < k; ++a)
        for (int j = 0; j < n; ++j) {
            Vec img = dmats[a].col(j);
            for (int l = 0; l < n; ++l) L.set_c(n + a, j, l, img[l]);
        }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            auto dc = env.d_coords(commutator(dmats[a], dmats[b]).flatten());
            if (!dc)
                throw std::logic_error("enveloping: commutator of inner derivations leaves D(T)");
            for (int l = 0; l < k; ++l) L.set_c(n + a, n + b, n + l, (*dc)[l]);
        }
    env.L = validated(std::move(L));

    Mat mrows(n, N), hrows(k, N);
    for (int i = 0; i < n; ++i) mrows(i, i) = 1;
    for (int a = 0; a < k; ++a) hrows(a, n + a) = 1;
    env.triple = ReductiveTriple{env.L, Subspace::span(mrows),
                                 k ? Subspace::span(hrows) : Subspace(N)};
    return env;
}

bool is_L_semisimple(const LYAlgebra& T) { return is_semisimple(enveloping(T).L); }

LSemisimpleReport l_semisimple_report(const LYAlgebra& T) {
    Enveloping env = enveloping(T);
    LSemisimpleReport r;
    r.l_dim = env.L.dim();
    r.killing_rank = rref(killing_form(env.L)).rank;
    r.semisimple = (r.killing_rank == r.l_dim);
    r.center_dim = center(env.L).dim();
    r.derived_dim = derived_subalgebra(env.L).dim();
    return r;
}

bool is_minimal_triple(const ReductiveTriple& rt) {
    TripleSplit sp(rt);
    std::vector<Vec> rows;
    for (int a = 0; a < sp.dm(); ++a)
        for (int b = a + 1; b < sp.dm(); ++b)
            rows.push_back(sp.h_coords(rt.g.bracket(rt.m.basis_row(a), rt.m.basis_row(b))));
    Subspace s(sp.dh());
    if (!rows.empty()) s = Subspace::span(Mat::from_rows(rows));
    return s.dim() == sp.dh();
}

bool is_effective_triple(const ReductiveTriple& rt) {
    TripleSplit sp(rt);
    if (sp.dh() == 0) return true;
    Mat a(sp.dm() * sp.dm(), sp.dh());
    for (int c = 0; c < sp.dh(); ++c)
        a.set_col(c, sp.ad_on_m(rt.g, rt.h.basis_row(c)).flatten());
    return kernel(a).dim() == 0;
}

LSubResult l_sub(const ReductiveTriple& rt, const Subspace& m_prime) {
    LSubResult res;
    res.l = Subspace(rt.g.dim());
    res.ideal_space = Subspace(rt.g.dim());
    res.m_contained = rt.m.contains(m_prime);
    if (!res.m_contained) {
        res.ly_subalgebra = CheckResult{"subalgebra", false, {}, "m' is not contained in m"};
        return res;
    }
    TripleSplit sp(rt);
    LYAlgebra Tm = induced_ly(rt);
    std::vector<Vec> crows;
    for (int a = 0; a < m_prime.dim(); ++a) crows.push_back(sp.m_coords(m_prime.basis_row(a)));
    Subspace um = crows.empty() ? Subspace(sp.dm()) : Subspace::span(Mat::from_rows(crows));
    res.ly_subalgebra = is_subalgebra(Tm, um);
    res.ly_ideal = is_ideal(Tm, um);
    res.minimal = is_minimal_triple(rt);

    std::vector<Vec> rows;
    for (int a = 0; a < m_prime.dim(); ++a) rows.push_back(m_prime.basis_row(a));
    for (int a = 0; a < m_prime.dim(); ++a)
        for (int b = a + 1; b < m_prime.dim(); ++b)
            rows.push_back(rt.g.bracket(m_prime.basis_row(a), m_prime.basis_row(b)));
    res.l = Subspace::span(Mat::from_rows(rows));
    res.lie_subalgebra = is_lie_subalgebra(rt.g, res.l);

    std::vector<Vec> irows;
    for (int a = 0; a < m_prime.dim(); ++a) irows.push_back(m_prime.basis_row(a));
    for (int a = 0; a < rt.m.dim(); ++a)
        for (int b = 0; b < m_prime.dim(); ++b)
            irows.push_back(rt.g.bracket(rt.m.basis_row(a), m_prime.basis_row(b)));
    res.ideal_space = Subspace::span(Mat::from_rows(irows));
    res.ideal_claimed = res.minimal && res.ly_ideal.pass;
    res.lie_ideal = is_lie_ideal(rt.g, res.ideal_space);
    return res;
}

CanonicalHom canonical_hom(const ReductiveTriple& rt) {
    TripleSplit sp(rt);
    LYAlgebra Tm = induced_ly(rt);
    const int ng = rt.g.dim(), dm = sp.dm();
    const int cod = dm + dm * dm;
    CanonicalHom ch;
    ch.f = Mat(cod, ng);
    for (int i = 0; i < ng; ++i) {
        Vec e = unit_vec(ng, i);
        Vec mc = sp.m_coords(e);
        Vec df = sp.ad_on_m(rt.g, sp.project_h(e)).flatten();
        Vec col(static_cast<size_t>(cod));
        for (int a = 0; a < dm; ++a) col[a] = mc[a];
        for (int a = 0; a < dm * dm; ++a) col[dm + a] = df[a];
        ch.f.set_col(i, col);
    }
    auto split = [&](const Vec& v) {
        Vec m(v.begin(), v.begin() + dm);
        Mat f = Mat::unflatten(Vec(v.begin() + dm, v.end()), dm, dm);
        return std::pair<Vec, Mat>(m, f);
    };
    auto lbracket = [&](const Vec& a, const Vec& b) {
        auto [v1, f1] = split(a);
        auto [v2, f2] = split(b);
        Vec m = add(Tm.bin(v1, v2), sub(mul(f1, v2), mul(f2, v1)));
        Vec d = (commutator(f1, f2) + d_map(Tm, v1, v2)).flatten();
        Vec out(static_cast<size_t>(cod));
        for (int i = 0; i < dm; ++i) out[i] = m[i];
        for (int i = 0; i < dm * dm; ++i) out[dm + i] = d[i];
        return out;
    };
    ch.hom_ok = true;
    for (int i = 0; i < ng && ch.hom_ok; ++i)
        for (int j = i + 1; j < ng && ch.hom_ok; ++j) {
            Vec lhs = mul(ch.f, rt.g.bracket_basis(i, j));
            Vec rhs = lbracket(ch.f.col(i), ch.f.col(j));
            if (!is_zero(sub(lhs, rhs))) ch.hom_ok = false;
        }
    ch.id_on_m = true;
    for (int a = 0; a < dm && ch.id_on_m; ++a) {
        Vec img = mul(ch.f, rt.m.basis_row(a));
        if (img != unit_vec(cod, a)) ch.id_on_m = false;
    }
    ch.injective = (kernel(ch.f).dim() == 0);
    ch.image = Subspace::span(ch.f.transpose());
    std::vector<Vec> lmrows;
    for (int a = 0; a < dm; ++a) lmrows.push_back(unit_vec(cod, a));
    Subspace dspace = inner_derivation_space(Tm).space;
    for (int a = 0; a < dspace.dim(); ++a) {
        Vec r = zero_vec(cod);
        Vec b = dspace.basis_row(a);
        for (int i = 0; i < dm * dm; ++i) r[dm + i] = b[i];
        lmrows.push_back(r);
    }
    ch.lm_space = Subspace::span(Mat::from_rows(lmrows));
    ch.surjective_onto_Lm = (ch.image == ch.lm_space);
    ch.effective = is_effective_triple(rt);
    ch.minimal = is_minimal_triple(rt);
    return ch;
}

AxiomReport check_lrsp(const LocalRegularSPair& p) {
    AxiomReport rep;
    const int n = p.g.dim();
    if (p.phi.rows() != n || p.phi.cols() != n)
        throw std::invalid_argument("check_lrsp: phi shape mismatch");
    {
        AxiomCheck c{"invertible"};
        if (!invert(p.phi)) {
            c.pass = false;
            c.detail = "phi is singular";
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"automorphism"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = i + 1; j < n && c.pass; ++j) {
                Vec lhs = mul(p.phi, p.g.bracket_basis(i, j));
                Vec rhs = p.g.bracket(p.phi.col(i), p.phi.col(j));
                if (!is_zero(sub(lhs, rhs))) {
                    c.pass = false;
                    c.witness = {i, j};
                }
            }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"fixed-part"};
        Mat d = p.phi - Mat::identity(n);
        if (!(kernel(d) == stabilized_kernel(d))) {
            c.pass = false;
            c.detail = "fixed points do not exhaust the generalized eigenspace of 1";
        }
        rep.checks.push_back(c);
    }
    return rep;
}

AssociatedTriple associated_triple(const LocalRegularSPair& p) {
    const int n = p.g.dim();
    Mat d = p.phi - Mat::identity(n);
    Subspace m = Subspace::span(d.transpose());
    Subspace h = kernel(d);
    ReductiveTriple rt{p.g, m, h};
    AxiomReport rep = check_reductive_triple(rt);
    if (!rep.pass())
        throw std::invalid_argument("associated_triple: image/kernel of phi - 1 do not form a "
                                    "reductive pair (" + rep.failing()->axiom + ")");
    LYAlgebra Tm = induced_ly(rt);
    Mat sigma(m.dim(), m.dim());
    for (int a = 0; a < m.dim(); ++a) {
        auto c = m.coords(mul(p.phi, m.basis_row(a)));
        if (!c) throw std::invalid_argument("associated_triple: phi does not preserve its image");
        sigma.set_col(a, *c);
    }
    return AssociatedTriple{rt, InfSManifold{Tm, sigma}};
}

InducedLSigma induced_L_sigma(const InfSManifold& S) {
    InducedLSigma out;
    out.env = enveloping(S.T);
    const int n = out.env.n(), k = out.env.k(), N = n + k;
    out.l_sigma = Mat(N, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.l_sigma(i, j) = S.sigma(i, j);
    for (int a = 0; a < k; ++a) out.l_sigma(n + a, n + a) = 1;
    out.pair = LocalRegularSPair{out.env.L, out.l_sigma};
    out.automorphism = true;
    if (!invert(out.l_sigma)) out.automorphism = false;
    for (int i = 0; i < N && out.automorphism; ++i)
        for (int j = i + 1; j < N && out.automorphism; ++j) {
            Vec lhs = mul(out.l_sigma, out.env.L.bracket_basis(i, j));
            Vec rhs = out.env.L.bracket(out.l_sigma.col(i), out.l_sigma.col(j));
            if (!is_zero(sub(lhs, rhs))) out.automorphism = false;
        }
    return out;
}

InducedLPi induced_L_pi(const LYHom& pi) {
    const int ns = pi.source.dim(), nt = pi.target.dim();
    if (pi.map.rows() != nt || pi.map.cols() != ns)
        throw std::invalid_argument("induced_L_pi: map shape mismatch");
    if (rref(pi.map).rank != nt)
        throw std::invalid_argument("induced_L_pi: pi must be surjective");
    InducedLPi out;
    out.src = enveloping(pi.source);
    out.dst = enveloping(pi.target);
    const int Ns = out.src.n() + out.src.k();
    const int Nt = out.dst.n() + out.dst.k();

    out.map = Mat(Nt, Ns);
    for (int i = 0; i < ns; ++i)
        for (int l = 0; l < nt; ++l) out.map(l, i) = pi.map(l, i);
    for (int a = 0; a < out.src.k(); ++a) {
        auto [p, q] = out.src.d_pairs[a];
        Mat dimg = d_map(pi.target, pi.map.col(p), pi.map.col(q));
        auto dc = out.dst.d_coords(dimg.flatten());
        if (!dc) throw std::logic_error("induced_L_pi: image derivation outside D(T)");
        for (int l = 0; l < out.dst.k(); ++l) out.map(nt + l, ns + a) = (*dc)[l];
    }

    // Relations among the D_{e_p,e_q} of the source must map to relations.
    out.well_defined = true;
    if (!out.src.dspace.pairs.empty()) {
        const int P = static_cast<int>(out.src.dspace.pairs.size());
        Mat mapped(nt * nt, P);
        for (int c = 0; c < P; ++c) {
            auto [p, q] = out.src.dspace.pairs[c];
            mapped.set_col(c, d_map(pi.target, pi.map.col(p), pi.map.col(q)).flatten());
        }
        Subspace rel = kernel(out.src.dspace.pair_mat);
        for (int i = 0; i < rel.dim() && out.well_defined; ++i)
            if (!is_zero(mul(mapped, rel.basis_row(i)))) out.well_defined = false;
    }

    out.hom_ok = true;
    for (int i = 0; i < Ns && out.hom_ok; ++i)
        for (int j = i + 1; j < Ns && out.hom_ok; ++j) {
            Vec lhs = mul(out.map, out.src.L.bracket_basis(i, j));
            Vec rhs = out.dst.L.bracket(out.map.col(i), out.map.col(j));
            if (!is_zero(sub(lhs, rhs))) out.hom_ok = false;
        }
    out.surjective = (rref(out.map).rank == Nt);
    out.kernel = kernel(out.map);
    return out;
}

}  // namespace lycas
