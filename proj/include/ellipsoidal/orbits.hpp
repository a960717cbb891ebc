#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/rational.hpp"

namespace ellipsoidal {

/// Which infinitesimal perturbation resolves action ties.
///
/// Canonical scales a_i by (1 + i*eps), which breaks every tie toward the
/// lower axis index. Plus and Minus exist only in dimension two and move the
/// second component up or down by an infinitesimal: (a_1, a_2 +- delta).
enum class Side { Minus, Canonical, Plus };

std::string to_string(Side side);

/// An ellipsoid parameter vector together with its perturbation side.
class SpectrumParams {
 public:
  /// Throws InvalidInput if a is empty, has a non-positive entry, or uses
  /// Plus/Minus outside dimension two.
  SpectrumParams(std::vector<Rational> a, Side side = Side::Canonical);

  /// The normalized four-dimensional vector (1, a).
  static SpectrumParams normalized(const Rational& a, Side side = Side::Canonical);

  [[nodiscard]] std::size_t dimension() const { return a_.size(); }
  [[nodiscard]] const std::vector<Rational>& a() const { return a_; }
  [[nodiscard]] const Rational& a(std::size_t axis) const { return a_[axis]; }
  [[nodiscard]] Side side() const { return side_; }
  [[nodiscard]] SpectrumParams with_side(Side side) const { return {a_, side}; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const SpectrumParams&, const SpectrumParams&) = default;
  friend auto operator<=>(const SpectrumParams&, const SpectrumParams&) = default;

 private:
  std::vector<Rational> a_;
  Side side_;
};

/// The Reeb orbit nu_axis^multiplicity. Axes are 1-based.
struct OrbitId {
  std::size_t axis = 1;
  std::int64_t multiplicity = 1;

  friend bool operator==(const OrbitId&, const OrbitId&) = default;
};

/// Perturbed action of nu_axis^mult (axis is 1-based, mult >= 1).
DualRational perturbed_value(const SpectrumParams& p, std::size_t axis, std::int64_t mult);

/// The lattice path Gamma^a with its orbit labels, computed greedily and
/// extended on demand. Not thread-safe; share via the free functions below.
class LatticePath {
 public:
  explicit LatticePath(SpectrumParams params);

  const LatticePoint& point(std::size_t k);
  const OrbitId& orbit(std::size_t k);  // k >= 1
  [[nodiscard]] const SpectrumParams& params() const { return params_; }

 private:
  void extend_to(std::size_t k);

  SpectrumParams params_;
  std::vector<LatticePoint> points_;
  std::vector<OrbitId> orbits_;  // orbits_[k-1] is o_k
  std::vector<DualRational> next_values_;
};

/// Gamma^a_k. Backed by a per-thread memo of the prefix walk.
LatticePoint gamma(const SpectrumParams& p, std::size_t k);

/// The orbit o_k of k-th smallest action (k >= 1).
OrbitId orbit(const SpectrumParams& p, std::size_t k);

/// The action of o_k: the k-th smallest element of {j * a_i}.
Rational action(const SpectrumParams& p, std::size_t k);

/// J_k = { (k - j) / (j + 1) : j = 0..k-1 }, ascending.
std::vector<Rational> jump_set(int k);

/// Union of J_{3i-1} for i = 1..d, restricted to values strictly above lower,
/// sorted and deduplicated.
std::vector<Rational> candidate_discontinuities(int d, const Rational& lower);

}  // namespace ellipsoidal
