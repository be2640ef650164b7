#include "lycas/lyalg.hpp"

#include <stdexcept>

namespace lycas {

Vec LYAlgebra::b_basis(int i, int j) const {
    Vec v(static_cast<size_t>(n_));
    for (int k = 0; k < n_; ++k) v[k] = b(i, j, k);
    return v;
}

Vec LYAlgebra::t_basis(int i, int j, int k) const {
    Vec v(static_cast<size_t>(n_));
    for (int l = 0; l < n_; ++l) v[l] = t(i, j, k, l);
    return v;
}

Vec LYAlgebra::bin(const Vec& x, const Vec& y) const {
    Vec r(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j] == 0) continue;
            Rat c = x[i] * y[j];
            for (int k = 0; k < n_; ++k) {
                const Rat& s = b(i, j, k);
                if (s != 0) r[k] += c * s;
            }
        }
    }
    return r;
}

Vec LYAlgebra::tern(const Vec& x, const Vec& y, const Vec& z) const {
    Vec r(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j] == 0) continue;
            Rat cij = x[i] * y[j];
            for (int k = 0; k < n_; ++k) {
                if (z[k] == 0) continue;
                Rat c = cij * z[k];
                for (int l = 0; l < n_; ++l) {
                    const Rat& s = t(i, j, k, l);
                    if (s != 0) r[l] += c * s;
                }
            }
        }
    }
    return r;
}

AxiomReport check_ly_axioms(const LYAlgebra& T) {
    const int n = T.dim();
    AxiomReport rep;
    auto& checks = rep.checks;

    {
        AxiomCheck c{"LY1"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = i; j < n && c.pass; ++j)
                if (!is_zero(add(T.b_basis(i, j), T.b_basis(j, i)))) {
                    c.pass = false;
                    c.witness = {i, j};
                }
        checks.push_back(c);
    }
    {
        AxiomCheck c{"LY2"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = i; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k)
                    if (!is_zero(add(T.t_basis(i, j, k), T.t_basis(j, i, k)))) {
                        c.pass = false;
                        c.witness = {i, j, k};
                    }
        checks.push_back(c);
    }
    {
        AxiomCheck c{"LY3"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k) {
                    Vec v = add(add(T.t_basis(i, j, k), T.t_basis(j, k, i)), T.t_basis(k, i, j));
                    Vec ek = unit_vec(n, k), ei = unit_vec(n, i), ej = unit_vec(n, j);
                    v = add(v, T.bin(T.b_basis(i, j), ek));
                    v = add(v, T.bin(T.b_basis(j, k), ei));
                    v = add(v, T.bin(T.b_basis(k, i), ej));
                    if (!is_zero(v)) {
                        c.pass = false;
                        c.witness = {i, j, k};
                    }
                }
        checks.push_back(c);
    }
    {
        AxiomCheck c{"LY4"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k)
                    for (int l = 0; l < n && c.pass; ++l) {
                        Vec ek = unit_vec(n, k), ei = unit_vec(n, i), ej = unit_vec(n, j);
                        Vec el = unit_vec(n, l);
                        Vec v = T.tern(T.b_basis(i, j), ek, el);
                        v = add(v, T.tern(T.b_basis(j, k), ei, el));
                        v = add(v, T.tern(T.b_basis(k, i), ej, el));
                        if (!is_zero(v)) {
                            c.pass = false;
                            c.witness = {i, j, k, l};
                        }
                    }
        checks.push_back(c);
    }
    {
        AxiomCheck c{"LY5"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k)
                    for (int l = 0; l < n && c.pass; ++l) {
                        Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
                        Vec ek = unit_vec(n, k), el = unit_vec(n, l);
                        Vec lhs = T.tern(ei, ej, T.b_basis(k, l));
                        Vec rhs = add(T.bin(T.t_basis(i, j, k), el), T.bin(ek, T.t_basis(i, j, l)));
                        if (!is_zero(sub(lhs, rhs))) {
                            c.pass = false;
                            c.witness = {i, j, k, l};
                        }
                    }
        checks.push_back(c);
    }
    {
        AxiomCheck c{"LY6"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k)
                    for (int l = 0; l < n && c.pass; ++l)
                        for (int m = 0; m < n && c.pass; ++m) {
                            Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
                            Vec ek = unit_vec(n, k), el = unit_vec(n, l);
                            Vec em = unit_vec(n, m);
                            Vec lhs = T.tern(ei, ej, T.t_basis(k, l, m));
                            Vec rhs = T.tern(T.t_basis(i, j, k), el, em);
                            rhs = add(rhs, T.tern(ek, T.t_basis(i, j, l), em));
                            rhs = add(rhs, T.tern(ek, el, T.t_basis(i, j, m)));
                            if (!is_zero(sub(lhs, rhs))) {
                                c.pass = false;
                                c.witness = {i, j, k, l, m};
                            }
                        }
        checks.push_back(c);
    }
    return rep;
}

LYAlgebra validated(LYAlgebra T) {
    AxiomReport rep = check_ly_axioms(T);
    if (!rep.pass()) {
        const AxiomCheck* f = rep.failing();
        std::string w;
        for (int i : f->witness) w += (w.empty() ? "" : ",") + std::to_string(i);
        throw std::invalid_argument("axiom " + f->axiom + " fails at basis tuple (" + w + ")" +
                                    (T.label().empty() ? "" : " in " + T.label()));
    }
    T.mark_validated(true);
    return T;
}

Mat d_map(const LYAlgebra& T, const Vec& x, const Vec& y) {
    const int n = T.dim();
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m.set_col(k, T.tern(x, y, unit_vec(n, k)));
    return m;
}

DerivationSpace inner_derivation_space(const LYAlgebra& T) {
    const int n = T.dim();
    DerivationSpace ds{Subspace(n * n), {}, Mat(0, 0), {}};
    std::vector<Vec> cols;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ds.pairs.emplace_back(i, j);
            cols.push_back(d_map(T, unit_vec(n, i), unit_vec(n, j)).flatten());
        }
    if (cols.empty()) return ds;
    Mat fam = Mat::from_rows(cols);
    ds.pair_mat = fam.transpose();
    // Pivot columns of the pair matrix = lex-first independent pairs.
    ds.basis_pairs = rref(ds.pair_mat).pivots;
    ds.space = Subspace::span(fam);
    return ds;
}

Subspace d_sub(const LYAlgebra& T, const Subspace& V, const Subspace& W) {
    const int n = T.dim();
    if (V.ambient() != n || W.ambient() != n) throw std::invalid_argument("d_sub: ambient mismatch");
    std::vector<Vec> rows;
    for (int a = 0; a < V.dim(); ++a)
        for (int b = 0; b < W.dim(); ++b)
            rows.push_back(d_map(T, V.basis_row(a), W.basis_row(b)).flatten());
    if (rows.empty()) return Subspace(n * n);
    return Subspace::span(Mat::from_rows(rows));
}

Subspace triple_product_span(const LYAlgebra& T) {
    const int n = T.dim();
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec v = T.t_basis(i, j, k);
                if (!is_zero(v)) rows.push_back(v);
            }
    if (rows.empty()) return Subspace(n);
    return Subspace::span(Mat::from_rows(rows));
}

CheckResult is_subalgebra(const LYAlgebra& T, const Subspace& U) {
    CheckResult r{"subalgebra"};
    if (U.ambient() != T.dim()) throw std::invalid_argument("is_subalgebra: ambient mismatch");
    const int d = U.dim();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (!U.contains(T.bin(U.basis_row(a), U.basis_row(b)))) {
                r.pass = false;
                r.witness = {a, b};
                r.detail = "binary product leaves the subspace";
                return r;
            }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                if (!U.contains(T.tern(U.basis_row(a), U.basis_row(b), U.basis_row(c)))) {
                    r.pass = false;
                    r.witness = {a, b, c};
                    r.detail = "ternary product leaves the subspace";
                    return r;
                }
    return r;
}

CheckResult is_ideal(const LYAlgebra& T, const Subspace& U) {
    CheckResult r{"ideal"};
    if (U.ambient() != T.dim()) throw std::invalid_argument("is_ideal: ambient mismatch");
    const int n = T.dim(), d = U.dim();
    for (int a = 0; a < d; ++a)
        for (int j = 0; j < n; ++j)
            if (!U.contains(T.bin(U.basis_row(a), unit_vec(n, j)))) {
                r.pass = false;
                r.witness = {a, j};
                r.detail = "U*T leaves U";
                return r;
            }
    for (int a = 0; a < d; ++a)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!U.contains(T.tern(U.basis_row(a), unit_vec(n, j), unit_vec(n, k)))) {
                    r.pass = false;
                    r.witness = {a, j, k};
                    r.detail = "[U,T,T] leaves U";
                    return r;
                }
    return r;
}

CheckResult is_abelian_ideal(const LYAlgebra& T, const Subspace& U) {
    CheckResult r = is_ideal(T, U);
    r.check = "abelian-ideal";
    if (!r.pass) return r;
    const int n = T.dim(), d = U.dim();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (!is_zero(T.bin(U.basis_row(a), U.basis_row(b)))) {
                r.pass = false;
                r.witness = {a, b};
                r.detail = "U*U nonzero";
                return r;
            }
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                if (!is_zero(T.tern(unit_vec(n, i), U.basis_row(a), U.basis_row(b)))) {
                    r.pass = false;
                    r.witness = {i, a, b};
                    r.detail = "[T,U,U] nonzero";
                    return r;
                }
    return r;
}

CheckResult check_hom(const LYHom& f) {
    CheckResult r{"hom"};
    const int n = f.source.dim();
    if (f.map.cols() != n || f.map.rows() != f.target.dim())
        throw std::invalid_argument("check_hom: map shape mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = mul(f.map, f.source.b_basis(i, j));
            Vec rhs = f.target.bin(mul(f.map, unit_vec(n, i)), mul(f.map, unit_vec(n, j)));
            if (!is_zero(sub(lhs, rhs))) {
                r.pass = false;
                r.witness = {i, j};
                r.detail = "binary product not preserved";
                return r;
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = mul(f.map, f.source.t_basis(i, j, k));
                Vec rhs = f.target.tern(mul(f.map, unit_vec(n, i)), mul(f.map, unit_vec(n, j)),
                                        mul(f.map, unit_vec(n, k)));
                if (!is_zero(sub(lhs, rhs))) {
                    r.pass = false;
                    r.witness = {i, j, k};
                    r.detail = "ternary product not preserved";
                    return r;
                }
            }
    return r;
}

AxiomReport check_ism(const InfSManifold& S) {
    const int n = S.T.dim();
    if (S.sigma.rows() != n || S.sigma.cols() != n)
        throw std::invalid_argument("check_ism: sigma shape mismatch");
    AxiomReport rep;
    {
        AxiomCheck c{"ISM0"};
        if (!invert(S.sigma)) {
            c.pass = false;
            c.detail = "sigma is singular";
        } else if (!invert(Mat::identity(n) - S.sigma)) {
            c.pass = false;
            c.detail = "id - sigma is singular";
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"ISM1"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j) {
                Vec lhs = mul(S.sigma, S.T.b_basis(i, j));
                Vec rhs = S.T.bin(S.sigma.col(i), S.sigma.col(j));
                if (!is_zero(sub(lhs, rhs))) {
                    c.pass = false;
                    c.witness = {i, j};
                }
            }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"ISM2"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k) {
                    Vec lhs = mul(S.sigma, S.T.t_basis(i, j, k));
                    Vec rhs = S.T.tern(S.sigma.col(i), S.sigma.col(j), S.sigma.col(k));
                    if (!is_zero(sub(lhs, rhs))) {
                        c.pass = false;
                        c.witness = {i, j, k};
                    }
                }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"ISM3"};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k) {
                    Vec lhs = mul(S.sigma, S.T.t_basis(i, j, k));
                    Vec rhs = S.T.tern(unit_vec(n, i), unit_vec(n, j), S.sigma.col(k));
                    if (!is_zero(sub(lhs, rhs))) {
                        c.pass = false;
                        c.witness = {i, j, k};
                    }
                }
        rep.checks.push_back(c);
    }
    return rep;
}

}  // namespace lycas
