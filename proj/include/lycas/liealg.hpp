#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lycas/lyalg.hpp"

namespace lycas {

// Finite-dimensional Lie algebra, [e_i,e_j] = sum_k c(i,j,k) e_k, stored
// redundantly like LYAlgebra and validated separately.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(int dim, std::string label = "")
        : n_(dim), label_(std::move(label)), c_(static_cast<size_t>(dim) * dim * dim) {}

    int dim() const { return n_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    const Rat& c(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    Rat& c(int i, int j, int k) { return c_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
    void set_c(int i, int j, int k, const Rat& v) {
        c(i, j, k) = v;
        c(j, i, k) = -v;
    }

    Vec bracket_basis(int i, int j) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    Mat ad(const Vec& x) const;

    bool validated() const { return validated_; }
    void mark_validated(bool v) { validated_ = v; }
    bool same_structure(const LieAlgebra& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    int n_ = 0;
    std::string label_;
    bool validated_ = false;
    std::vector<Rat> c_;
};

// Checks "antisymmetry" and "jacobi", each with a first failing witness.
AxiomReport check_jacobi(const LieAlgebra& g);
LieAlgebra validated(LieAlgebra g);

Mat killing_form(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);
Subspace derived_subalgebra(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);
CheckResult is_lie_subalgebra(const LieAlgebra& g, const Subspace& U);
CheckResult is_lie_ideal(const LieAlgebra& g, const Subspace& U);

// (g, m, h) with g = m + h, [h,h] in h, [h,m] in m.
struct ReductiveTriple {
    LieAlgebra g;
    Subspace m, h;
};

// Checks "decomposition", "h-subalgebra", "h-action".
AxiomReport check_reductive_triple(const ReductiveTriple& rt);

// Coordinate helper along g = m + h. Construction fails unless the two
// subspaces are complementary.
class TripleSplit {
public:
    explicit TripleSplit(const ReductiveTriple& rt);

    int dm() const { return dm_; }
    int dh() const { return dh_; }
    Vec m_coords(const Vec& x) const;
    Vec h_coords(const Vec& x) const;
    Vec project_m(const Vec& x) const;
    Vec project_h(const Vec& x) const;
    Vec from_m(const Vec& mc) const;
    Vec from_h(const Vec& hc) const;
    // ad(x) restricted to m, in m-basis coordinates (the h-component of
    // bracket values is discarded, which is exact when x normalizes m).
    Mat ad_on_m(const LieAlgebra& g, const Vec& x) const;

private:
    int dm_ = 0, dh_ = 0;
    Mat m_basis_, h_basis_, to_coords_;
};

// x*y = [x,y]_m, [x,y,z] = [[x,y]_h, z] in m-basis coordinates; validated.
LYAlgebra induced_ly(const ReductiveTriple& rt);

// Standard enveloping Lie algebra L(T) = T + D(T) with
//   [(x1,h1),(x2,h2)] = (x1*x2 + h1 x2 - h2 x1, D_{x1,x2} + [h1,h2]).
// Basis: the n unit vectors of T followed by the chosen D(T) basis
// (lex-first independent D_{e_i,e_j}, i < j).
struct Enveloping {
    LieAlgebra L;
    ReductiveTriple triple;  // (L, T-part, D-part)
    LYAlgebra T;
    DerivationSpace dspace;
    std::vector<std::pair<int, int>> d_pairs;  // basis pairs
    Mat d_basis;                               // k x n^2, one flattened derivation per row

    int n() const { return T.dim(); }
    int k() const { return d_basis.rows(); }
    // Coordinates of a flattened endomorphism in the D(T) basis.
    std::optional<Vec> d_coords(const Vec& flat) const;
    // Embeds (x, D-coordinates) into L.
    Vec embed(const Vec& x, const Vec& dc) const;
};
Enveloping enveloping(const LYAlgebra& T);

bool is_L_semisimple(const LYAlgebra& T);

struct LSemisimpleReport {
    bool semisimple = false;
    int l_dim = 0;
    int killing_rank = 0;
    int center_dim = 0;
    int derived_dim = 0;
};
LSemisimpleReport l_semisimple_report(const LYAlgebra& T);

bool is_minimal_triple(const ReductiveTriple& rt);
bool is_effective_triple(const ReductiveTriple& rt);

// L_g(m') = m' + [m',m'] for a subspace m' of m that is a subalgebra of
// the induced structure. The ideal part is only asserted when m' is an
// ideal of the induced algebra and the triple is minimal.
struct LSubResult {
    bool m_contained = false;       // m' in m
    CheckResult ly_subalgebra;      // m' against the induced algebra
    Subspace l;                     // m' + [m',m']
    CheckResult lie_subalgebra;     // verified on l
    bool minimal = false;
    CheckResult ly_ideal;           // m' as ideal of the induced algebra
    bool ideal_claimed = false;     // minimal && ly_ideal
    Subspace ideal_space;           // m' + [m,m']
    CheckResult lie_ideal;          // verified when claimed
};
LSubResult l_sub(const ReductiveTriple& rt, const Subspace& m_prime);

// x + h -> (x_m, ad(h)|_m) into m + End(m), with the expected facts
// reported: it is a morphism into L(m), restricts to the identity on m,
// is injective iff the triple is effective, and for effective triples has
// image L(m) iff the triple is minimal.
struct CanonicalHom {
    Mat f;  // (dm + dm^2) x dim g
    bool hom_ok = false;
    bool id_on_m = false;
    bool injective = false;
    bool surjective_onto_Lm = false;
    bool effective = false;
    bool minimal = false;
    Subspace image;
    Subspace lm_space;  // m + D(m) inside m + End(m)
};
CanonicalHom canonical_hom(const ReductiveTriple& rt);

// Lie algebra with an automorphism phi whose fixed-point subalgebra
// equals the generalized eigenspace of 1.
struct LocalRegularSPair {
    LieAlgebra g;
    Mat phi;
};
// Checks "invertible", "automorphism", "fixed-part".
AxiomReport check_lrsp(const LocalRegularSPair& p);

// m = Im(phi - 1) with basis the RREF of that image, h = Ker(phi - 1);
// sigma is phi restricted to m, written in the m-basis.
struct AssociatedTriple {
    ReductiveTriple rt;
    InfSManifold ism;
};
AssociatedTriple associated_triple(const LocalRegularSPair& p);

// L(sigma) acts as sigma on T and as the identity on D(T).
struct InducedLSigma {
    Enveloping env;
    Mat l_sigma;
    LocalRegularSPair pair;
    bool automorphism = false;
};
InducedLSigma induced_L_sigma(const InfSManifold& S);

// For a surjective morphism pi: T~ -> T, the unique Lie algebra morphism
// L(T~) -> L(T) extending pi, sending D_{x,y} to D_{pi x, pi y}.
struct InducedLPi {
    Enveloping src, dst;
    Mat map;  // dim L(T) x dim L(T~)
    bool well_defined = false;  // relations among D_{x,y} are preserved
    bool hom_ok = false;
    bool surjective = false;
    Subspace kernel;
};
InducedLPi induced_L_pi(const LYHom& pi);

}  // namespace lycas
