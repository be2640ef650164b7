#pragma once

#include <cstdint>

#include "lycas/reps.hpp"

namespace lycas {

// Default seed used by every randomized command and generator.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Seeded generators. Each builds a direct sum of verified blocks (the
// adjoint module L(T) itself, trivial blocks, and optionally degenerate
// blocks that break effectiveness and minimality) and then conjugates by
// a random unimodular change of basis that respects the Mn/Ms split.
// Identical seeds produce identical output.

// Module over env.triple; e+m blocks only when force_em.
TripleRep random_triple_rep(const Enveloping& env, std::uint64_t seed, bool force_em);

// Tight representation of T, obtained from a random effective minimal
// module over L(T).
LYRep random_ly_rep(const LYAlgebra& T, std::uint64_t seed);

// Regular representation of a given manifold (adjoint-derived block plus
// scalar blocks), conjugated; tight.
ISMRep random_ism_rep(const InfSManifold& S, std::uint64_t seed);

// Effective minimal module with compatible psi_tilde over a given pair.
SPairRep random_spair_rep(const LocalRegularSPair& p, std::uint64_t seed);

// Random unimodular integer matrix (product of elementary operations).
Mat random_unimodular(int n, std::uint64_t seed, int steps = -1);

}  // namespace lycas
