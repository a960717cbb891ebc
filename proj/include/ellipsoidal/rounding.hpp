#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ellipsoidal/linf.hpp"
#include "ellipsoidal/orbits.hpp"

namespace ellipsoidal::rounding {

/// alpha_{i,j} (i, j >= 1), odd of degree -1-2i-2j.
linf::Generator alpha(int i, int j);
/// beta_{i,j} ((i, j) != (0, 0)), even of degree -2-2i-2j.
linf::Generator beta(int i, int j);

linf::GeneratorSet v_generators();

/// ell^1 and ell^2 of V on a canonical word; zero on longer words.
linf::Combination v_ell(const linf::Word& w);

linf::LinfStructure v_algebra();

/// alpha and beta generators with i + j <= bound.
std::vector<linf::Generator> v_window(int bound);

/// eps-tilde : V -> C_o. On all-beta words
/// beta_{i_1,j_1} ... beta_{i_k,j_k} |-> q_{sum i + sum j + k - 1} / ((sum i)! (sum j)!),
/// zero on any word containing an alpha.
linf::LinfMorphism tilde_epsilon();

struct AugReport {
  bool ok = true;
  std::size_t words_checked = 0;
  std::size_t structure_words_checked = 0;
  std::optional<std::string> witness;
  std::string detail;
};

/// Checks pi_1(eps-tilde-hat(ell-hat(w))) = 0 for every word with exactly one
/// alpha and at most L-1 betas over indices i + j <= B, and ell-hat o ell-hat = 0
/// on the words of length <= min(L, structure_length) over the same window.
AugReport verify_aug(int B, int L, const linf::LinfStructure& v, std::size_t structure_length = 3);
AugReport verify_aug(int B, int L);

/// Psi_a : C_a -> V with Psi^1(o_j) = beta_{Gamma_j} and no higher terms.
linf::LinfMorphism psi_map(const SpectrumParams& p);

/// Compares eps-tilde o Psi_a with eps_a on words of length <= bound over o_1..o_window.
linf::CheckReport check_psi_factorization(const SpectrumParams& p, std::size_t bound, int window);

}  // namespace ellipsoidal::rounding
