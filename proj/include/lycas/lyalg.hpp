#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lycas/linalg.hpp"

namespace lycas {

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::vector<int> witness;  // basis indices of the first failing instance
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const AxiomCheck* failing() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

struct CheckResult {
    std::string check;
    bool pass = true;
    std::vector<int> witness;
    std::string detail;
};

// Finite-dimensional algebra with a bilinear product x*y and a trilinear
// bracket [x,y,z], both stored densely through structure constants:
//   e_i * e_j         = sum_k b(i,j,k) e_k
//   [e_i, e_j, e_k]   = sum_l t(i,j,k,l) e_l
// Both tables are stored redundantly (all orientations); construction does
// not validate, so ill-formed tables can be represented and then rejected
// by check_ly_axioms.
class LYAlgebra {
public:
    LYAlgebra() = default;
    explicit LYAlgebra(int dim, std::string label = "")
        : n_(dim),
          label_(std::move(label)),
          b_(static_cast<size_t>(dim) * dim * dim),
          t_(static_cast<size_t>(dim) * dim * dim * dim) {}

    int dim() const { return n_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    const Rat& b(int i, int j, int k) const { return b_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    const Rat& t(int i, int j, int k, int l) const {
        return t_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l];
    }
    Rat& b(int i, int j, int k) { return b_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    Rat& t(int i, int j, int k, int l) {
        return t_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l];
    }

    // Sets b(i,j,.) and its antisymmetric counterpart.
    void set_b(int i, int j, int k, const Rat& v) {
        b(i, j, k) = v;
        b(j, i, k) = -v;
    }
    void set_t(int i, int j, int k, int l, const Rat& v) {
        t(i, j, k, l) = v;
        t(j, i, k, l) = -v;
    }

    Vec b_basis(int i, int j) const;
    Vec t_basis(int i, int j, int k) const;
    Vec bin(const Vec& x, const Vec& y) const;
    Vec tern(const Vec& x, const Vec& y, const Vec& z) const;

    bool validated() const { return validated_; }
    void mark_validated(bool v) { validated_ = v; }

    bool same_structure(const LYAlgebra& o) const { return n_ == o.n_ && b_ == o.b_ && t_ == o.t_; }

private:
    int n_ = 0;
    std::string label_;
    bool validated_ = false;
    std::vector<Rat> b_, t_;
};

// Axioms, with the conventional labels used in reports:
//   LY1  x*x = 0
//   LY2  [x,x,y] = 0
//   LY3  cyc([x,y,z]) + cyc((x*y)*z) = 0
//   LY4  cyc([x*y,z,w]) = 0                  (cyclic in x,y,z)
//   LY5  [x,y,z*w] = [x,y,z]*w + z*[x,y,w]
//   LY6  [x,y,[z,v,w]] = [[x,y,z],v,w] + [z,[x,y,v],w] + [z,v,[x,y,w]]
// Each check scans basis tuples in lexicographic order and reports the
// first failing tuple.
AxiomReport check_ly_axioms(const LYAlgebra& T);

// Validates and flags in one step; throws when an axiom fails.
LYAlgebra validated(LYAlgebra T);

// D_{x,y} = [x, y, .] as a matrix acting on column vectors.
Mat d_map(const LYAlgebra& T, const Vec& x, const Vec& y);

// Inner derivation space D(T) = span{D_{e_i,e_j} : i < j}, flattened
// row-major into Q^{n^2}.  basis_pairs indexes the lexicographically first
// maximal independent subfamily; pair_mat holds one flattened D per column.
struct DerivationSpace {
    Subspace space;
    std::vector<std::pair<int, int>> pairs;
    Mat pair_mat;
    std::vector<int> basis_pairs;
};
DerivationSpace inner_derivation_space(const LYAlgebra& T);

// span{D_{v,w} : v in V, w in W} inside flattened End(T).
Subspace d_sub(const LYAlgebra& T, const Subspace& V, const Subspace& W);

// [T,T,T] as a subspace of T.
Subspace triple_product_span(const LYAlgebra& T);

CheckResult is_subalgebra(const LYAlgebra& T, const Subspace& U);
// Ideal: U*T in U and [U,T,T] in U (the remaining slots follow).
CheckResult is_ideal(const LYAlgebra& T, const Subspace& U);
// Abelian ideal: additionally U*U = 0 and [T,U,U] = 0.
CheckResult is_abelian_ideal(const LYAlgebra& T, const Subspace& U);

struct LYHom {
    LYAlgebra source, target;
    Mat map;  // target.dim() x source.dim()
};
CheckResult check_hom(const LYHom& f);

// An algebra together with an automorphism sigma subject to
//   ISM0  sigma and id - sigma invertible
//   ISM1  sigma(x*y) = sigma(x)*sigma(y)
//   ISM2  sigma[x,y,z] = [sigma(x),sigma(y),sigma(z)]
//   ISM3  sigma[x,y,z] = [x,y,sigma(z)]
struct InfSManifold {
    LYAlgebra T;
    Mat sigma;
};
AxiomReport check_ism(const InfSManifold& S);

}  // namespace lycas
