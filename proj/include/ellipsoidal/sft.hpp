#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ellipsoidal/linf.hpp"
#include "ellipsoidal/orbits.hpp"

namespace ellipsoidal::sft {

/// Generator families used by the concrete algebras.
enum Family : int { kOrbit = 1, kDescendant = 2, kAlpha = 3, kBeta = 4 };

/// o_k in C_a.
inline linf::Generator orbit_generator(int k) { return {kOrbit, k, 0}; }
/// q_k in C_o.
inline linf::Generator descendant_generator(int k) { return {kDescendant, k, 0}; }

/// C_a: generators o_1, o_2, ... with |o_k| = -2 - 2k, filtered by action.
linf::GeneratorSet ellipsoid_generators(const SpectrumParams& p);
/// C_o: generators q_1, q_2, ... with |q_k| = -2 - 2k, unfiltered.
linf::GeneratorSet descendant_generators();

linf::LinfStructure ellipsoid_algebra(const SpectrumParams& p);
linf::LinfStructure descendant_algebra();

/// o_1, ..., o_n as a window for checks.
std::vector<linf::Generator> orbit_window(int n);
std::vector<linf::Generator> descendant_window(int n);

/// The descendant augmentation eps_a : C_a -> C_o,
/// eps^k(o_{i_1}, ..., o_{i_k}) = q_{i_1+...+i_k+k-1} / (Gamma_{i_1} + ... + Gamma_{i_k})!.
linf::LinfMorphism epsilon(const SpectrumParams& p);

/// eta_a : C_o -> C_a, the inverse of eps_a up to word length `bound`.
linf::LinfMorphism eta(const SpectrumParams& p, std::size_t bound);

/// The cobordism map Xi from C_source to C_target, computed as
/// eta_target o eps_source. Asserts the index bookkeeping on every value.
linf::LinfMorphism xi(const SpectrumParams& source, const SpectrumParams& target, std::size_t bound);

using HomologyClass = std::vector<std::int64_t>;

/// The Maurer-Cartan element wt_T * o_{c1(A)-1} for a single class.
struct MCElement {
  HomologyClass homology_class;
  Rational coefficient;     // wt_T_{M,A}
  std::size_t orbit_index;  // c1(A) - 1

  [[nodiscard]] linf::Combination as_combination() const;
};

using MCFamily = std::function<MCElement(const HomologyClass&)>;
/// All unordered decompositions A = A_1 + ... + A_k (k >= 1) into classes with
/// c1 >= 2, each returned as a sorted list.
using Decomposer = std::function<std::vector<std::vector<HomologyClass>>(const HomologyClass&)>;

/// exp_A(m) = sum over decompositions of m_{A_1} (.) ... (.) m_{A_k} / |Aut|.
linf::Combination exp_mc(const MCFamily& family, const HomologyClass& A, const Decomposer& decomposer,
                         const SpectrumParams& p);

}  // namespace ellipsoidal::sft
