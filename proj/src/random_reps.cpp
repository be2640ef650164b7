#include "lycas/random_reps.hpp"

#include <random>
#include <stdexcept>

namespace lycas {

namespace {

Mat unimodular_from(std::mt19937_64& rng, int n, int steps) {
    Mat m = Mat::identity(n);
    if (n <= 1) return m;
    std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2), op(0, 3);
    for (int s = 0; s < steps; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        if (op(rng) == 0) {
            for (int c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
            for (int c = 0; c < n; ++c) m(i, c) = -m(i, c);
        } else {
            int cf = coef(rng);
            if (cf == 0) cf = 1;
            for (int c = 0; c < n; ++c) m(j, c) += cf * m(i, c);
        }
    }
    return m;
}

TripleRep adjoint_module(const Enveloping& env) {
    TripleRep m;
    m.rt = env.triple;
    m.p = env.L.dim();
    m.n_dim = env.n();
    for (int i = 0; i < env.L.dim(); ++i) m.action.push_back(env.L.ad(unit_vec(env.L.dim(), i)));
    return validated_triple_rep(std::move(m));
}

TripleRep trivial_module(const ReductiveTriple& rt, int k) {
    TripleRep m;
    m.rt = rt;
    m.p = k;
    m.n_dim = k;
    m.action.assign(static_cast<size_t>(rt.g.dim()), Mat(k, k));
    m.validated = true;
    return m;
}

TripleRep dud_module(const ReductiveTriple& rt) {
    TripleRep m;
    m.rt = rt;
    m.p = 1;
    m.n_dim = 0;
    m.action.assign(static_cast<size_t>(rt.g.dim()), Mat(1, 1));
    m.validated = true;
    return m;
}

// Sum coordinates: a.Mn, b.Mn, a.Ms, b.Ms.
void sum_maps(const TripleRep& a, const TripleRep& b, std::vector<int>& amap,
              std::vector<int>& bmap) {
    const int nd = a.n_dim + b.n_dim;
    amap.resize(a.p);
    bmap.resize(b.p);
    for (int i = 0; i < a.p; ++i) amap[i] = i < a.n_dim ? i : nd + (i - a.n_dim);
    for (int i = 0; i < b.p; ++i)
        bmap[i] = i < b.n_dim ? a.n_dim + i : nd + a.s_dim() + (i - b.n_dim);
}

TripleRep direct_sum(const TripleRep& a, const TripleRep& b) {
    TripleRep m;
    m.rt = a.rt;
    m.n_dim = a.n_dim + b.n_dim;
    m.p = a.p + b.p;
    std::vector<int> amap, bmap;
    sum_maps(a, b, amap, bmap);
    for (int g = 0; g < a.rt.g.dim(); ++g) {
        Mat act(m.p, m.p);
        for (int r = 0; r < a.p; ++r)
            for (int c = 0; c < a.p; ++c)
                if (a.action[g](r, c) != 0) act(amap[r], amap[c]) = a.action[g](r, c);
        for (int r = 0; r < b.p; ++r)
            for (int c = 0; c < b.p; ++c)
                if (b.action[g](r, c) != 0) act(bmap[r], bmap[c]) = b.action[g](r, c);
        m.action.push_back(act);
    }
    return m;
}

Mat split_conjugator(std::mt19937_64& rng, int n_dim, int s_dim) {
    Mat pn = unimodular_from(rng, n_dim, 2 * n_dim + 2);
    Mat ps = unimodular_from(rng, s_dim, 2 * s_dim + 2);
    Mat p(n_dim + s_dim, n_dim + s_dim);
    for (int i = 0; i < n_dim; ++i)
        for (int j = 0; j < n_dim; ++j) p(i, j) = pn(i, j);
    for (int i = 0; i < s_dim; ++i)
        for (int j = 0; j < s_dim; ++j) p(n_dim + i, n_dim + j) = ps(i, j);
    return p;
}

TripleRep conjugate_module(const TripleRep& m, const Mat& p) {
    Mat pinv = *invert(p);
    TripleRep out = m;
    out.validated = false;
    for (auto& a : out.action) a = pinv * a * p;
    return out;
}

LYRep rep_direct_sum(const LYRep& a, const LYRep& b) {
    LYRep r = make_rep(a.T, a.v_dim + b.v_dim);
    auto emb = [&](const Mat& ma, const Mat& mb) {
        Mat m(r.v_dim, r.v_dim);
        for (int i = 0; i < a.v_dim; ++i)
            for (int j = 0; j < a.v_dim; ++j) m(i, j) = ma(i, j);
        for (int i = 0; i < b.v_dim; ++i)
            for (int j = 0; j < b.v_dim; ++j) m(a.v_dim + i, a.v_dim + j) = mb(i, j);
        return m;
    };
    const int n = a.T.dim();
    for (int i = 0; i < n; ++i) r.rho[i] = emb(a.rho[i], b.rho[i]);
    for (size_t c = 0; c < r.theta.size(); ++c) {
        r.theta[c] = emb(a.theta[c], b.theta[c]);
        r.delta[c] = emb(a.delta[c], b.delta[c]);
    }
    return r;
}

}  // namespace

Mat random_unimodular(int n, std::uint64_t seed, int steps) {
    std::mt19937_64 rng(seed);
    return unimodular_from(rng, n, steps < 0 ? 2 * n + 2 : steps);
}

TripleRep random_triple_rep(const Enveloping& env, std::uint64_t seed, bool force_em) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nblocks(0, 2), bsize(1, 2), coin(0, 1);
    TripleRep m = adjoint_module(env);
    int t = nblocks(rng);
    for (int i = 0; i < t; ++i) m = direct_sum(m, trivial_module(env.triple, bsize(rng)));
    if (!force_em) {
        m = direct_sum(m, dud_module(env.triple));
        if (coin(rng)) m = direct_sum(m, dud_module(env.triple));
    }
    m = conjugate_module(m, split_conjugator(rng, m.n_dim, m.s_dim()));
    return validated_triple_rep(std::move(m));
}

LYRep random_ly_rep(const LYAlgebra& T, std::uint64_t seed) {
    Enveloping env = enveloping(T);
    return functor_rly(random_triple_rep(env, seed, true));
}

ISMRep random_ism_rep(const InfSManifold& S, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Enveloping env = enveloping(S.T);
    LYRep base = functor_rly(adjoint_module(env));
    Mat psi = S.sigma;
    static const Rat scalars[] = {Rat(2), Rat(3), Rat(-1), frac(1, 2)};
    std::uniform_int_distribution<int> nblocks(0, 2), which(0, 3);
    int t = nblocks(rng);
    for (int i = 0; i < t; ++i) {
        LYRep triv = make_rep(S.T, 1);
        base = rep_direct_sum(base, triv);
        Mat np(base.v_dim, base.v_dim);
        for (int r = 0; r < base.v_dim - 1; ++r)
            for (int c = 0; c < base.v_dim - 1; ++c) np(r, c) = psi(r, c);
        np(base.v_dim - 1, base.v_dim - 1) = scalars[which(rng)];
        psi = np;
    }
    Mat p = unimodular_from(rng, base.v_dim, 2 * base.v_dim + 2);
    Mat pinv = *invert(p);
    for (auto& m : base.rho) m = pinv * m * p;
    for (auto& m : base.theta) m = pinv * m * p;
    for (auto& m : base.delta) m = pinv * m * p;
    base.validated = false;
    return ISMRep{validated_rep(std::move(base)), pinv * psi * p};
}

SPairRep random_spair_rep(const LocalRegularSPair& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    AssociatedTriple at = associated_triple(p);
    const int ng = p.g.dim(), dm = at.rt.m.dim();
    Mat c = vstack(at.rt.m.basis(), at.rt.h.basis()).transpose();
    Mat cinv = *invert(c);
    TripleRep adj;
    adj.rt = at.rt;
    adj.p = ng;
    adj.n_dim = dm;
    for (int i = 0; i < ng; ++i) adj.action.push_back(cinv * p.g.ad(unit_vec(ng, i)) * c);
    Mat psi = cinv * p.phi * c;

    static const Rat scalars[] = {Rat(2), Rat(3), Rat(-1), frac(1, 2)};
    std::uniform_int_distribution<int> nblocks(0, 2), bsize(1, 2), which(0, 3);
    int t = nblocks(rng);
    TripleRep m = adj;
    for (int i = 0; i < t; ++i) {
        TripleRep triv = trivial_module(adj.rt, bsize(rng));
        std::vector<int> amap, bmap;
        sum_maps(m, triv, amap, bmap);
        Mat np(m.p + triv.p, m.p + triv.p);
        for (int r = 0; r < m.p; ++r)
            for (int cc = 0; cc < m.p; ++cc)
                if (psi(r, cc) != 0) np(amap[r], amap[cc]) = psi(r, cc);
        Rat a = scalars[which(rng)];
        for (int r = 0; r < triv.p; ++r) np(bmap[r], bmap[r]) = a;
        m = direct_sum(m, triv);
        psi = np;
    }
    Mat conj = split_conjugator(rng, m.n_dim, m.s_dim());
    Mat conj_inv = *invert(conj);
    m = conjugate_module(m, conj);
    psi = conj_inv * psi * conj;
    return SPairRep{validated_triple_rep(std::move(m)), psi};
}

}  // namespace lycas
