#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ellipsoidal/orbits.hpp"
#include "ellipsoidal/rational.hpp"

namespace ellipsoidal {

/// J^{a-}_{a+}(i) = Gamma^{a+}_i! / Gamma^{a-}_i!: equals a when a lies in J_i, else 1.
Rational jump_cylinder(const Rational& a, int i);

/// Closed form for J^{a-}_{a+}(i, j).
Rational jump_pants(const Rational& a, int i, int j);

/// J^{a-}_{a+}(i_1, ..., i_k) by recursion over set partitions of the inputs.
Rational jump_general(const Rational& a, std::span<const int> indices);

/// The same count read off the cobordism map Xi from (1,a)- to (1,a)+.
Rational jump_via_xi(const Rational& a, std::span<const int> indices);

struct JumpHit {
  Rational a;
  std::vector<int> indices;  // sorted, k >= 2
  Rational value;
};

/// Every nonzero k >= 2 jump with i_1 + ... + i_k + k - 1 <= bound, for a
/// ranging over J_1 u ... u J_bound. Checks the energy inequality on each hit.
std::vector<JumpHit> support_scan(int total_index_bound);

/// T-tilde_d^a for CP^2 as (1/d!) <(Xi^{1+}_a)^d(o_2, ..., o_2), o_{3d-1}>.
Rational wt_T_via_cobordism(int d, const SpectrumParams& p);

/// T-tilde_d^a for CP^2 by pushing exp(o_2) through the chain of thin
/// cobordisms across every breakpoint in (1, a), one Xi at a time.
Rational wt_T_via_infinitesimal_cobordisms(int d, const SpectrumParams& p);

}  // namespace ellipsoidal
