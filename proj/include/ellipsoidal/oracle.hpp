#pragma once

#include <cstddef>
#include <vector>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/linf.hpp"
#include "ellipsoidal/orbits.hpp"

// Slow reference implementations. Nothing here calls the lattice-path walk,
// the shuffle tables or the extension routines they are used to check.
namespace ellipsoidal::oracle {

/// argmin over all compositions of k into n parts of max_i a_i v_i, with the
/// perturbation of p. Requires k <= 40 and n <= 5.
LatticePoint gamma_bruteforce(const SpectrumParams& p, int k);

struct SpectrumEntry {
  DualRational action;
  OrbitId orbit;
};

/// The first `count` perturbed actions {m * a_i}, obtained by listing every
/// multiple below a safe cutoff and sorting. Requires count <= 10^4.
std::vector<SpectrumEntry> merge_spectrum(const SpectrumParams& p, std::size_t count);

/// The coalgebra extension of the level maps of `levels` on `word`, summed
/// over every permutation and every composition of the word length with weight
/// 1/(s! k_1! ... k_s!). Requires |word| <= 5.
linf::Combination morphism_bruteforce(const linf::LinfMorphism& levels, const linf::Word& word);

}  // namespace ellipsoidal::oracle
