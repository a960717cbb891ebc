#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ellipsoidal/orbits.hpp"
#include "ellipsoidal/rational.hpp"
#include "ellipsoidal/sft.hpp"

namespace ellipsoidal {

using sft::HomologyClass;

/// A closed target manifold as seen by the recursion: first Chern class,
/// area, the stationary descendant and the decomposition enumerator.
class TargetSpace {
 public:
  virtual ~TargetSpace() = default;

  [[nodiscard]] virtual std::string name() const = 0;
  [[nodiscard]] virtual std::int64_t c1(const HomologyClass& A) const = 0;
  [[nodiscard]] virtual Rational area(const HomologyClass& A) const = 0;
  /// N_{M,A}<psi^{c1(A)-2} pt>.
  [[nodiscard]] virtual Rational closed_descendant(const HomologyClass& A) const = 0;
  /// Every unordered decomposition A = A_1 + ... + A_k (k >= 1, including
  /// A itself) into classes with c1 >= 2. Each list is sorted.
  [[nodiscard]] virtual std::vector<std::vector<HomologyClass>> decompositions(const HomologyClass& A) const = 0;
};

/// CP^2 with classes d[L], encoded as {d}.
class CP2Target final : public TargetSpace {
 public:
  static HomologyClass degree(std::int64_t d) { return {d}; }

  [[nodiscard]] std::string name() const override { return "cp2"; }
  [[nodiscard]] std::int64_t c1(const HomologyClass& A) const override;
  [[nodiscard]] Rational area(const HomologyClass& A) const override;
  [[nodiscard]] Rational closed_descendant(const HomologyClass& A) const override;
  [[nodiscard]] std::vector<std::vector<HomologyClass>> decompositions(const HomologyClass& A) const override;
};

/// (d_1! ... d_n!)^{-1} for a Fano toric target with A.[D_i] = d_i > 0.
Rational closed_descendant_toric(std::span<const std::int64_t> divisor_degrees);

/// T-tilde_{M,A} at parameter p. Zero when c1(A) < 2. Memoized on (target, A, p).
Rational wt_T(const TargetSpace& target, const HomologyClass& A, const SpectrumParams& p);

/// T_{M,A} = wt_T / mult(o_{c1(A)-1}).
Rational T(const TargetSpace& target, const HomologyClass& A, const SpectrumParams& p);

/// T-tilde_d for CP^2 in the limit a -> infinity.
Rational wt_T_infinity(int d);

enum class TableQuantity { WtT, T };

struct TableInterval {
  Rational lo;
  std::optional<Rational> hi;  // nullopt: unbounded
  Rational value;
};

struct TableBreakpoint {
  Rational at;
  Rational minus_value;
  Rational plus_value;
};

struct PiecewiseTable {
  std::vector<TableInterval> intervals;     // open intervals, ascending
  std::vector<TableBreakpoint> breakpoints;  // only where the value changes

  /// Scan report: whether the values never decrease in a.
  [[nodiscard]] bool nondecreasing() const;
};

/// Sweeps a over (lo, hi) for CP^2 in degree d. When hi is absent or exceeds
/// every candidate, the last interval is unbounded. With refine_orbit_id the
/// points of J_{3d-2}, where the orbit o_{3d-1} changes identity, are also
/// sampled; this matters only for TableQuantity::T.
PiecewiseTable piecewise_table(const CP2Target& target, int d, const Rational& lo,
                               const std::optional<Rational>& hi, TableQuantity quantity = TableQuantity::WtT,
                               bool refine_orbit_id = false);

struct GenfunRow {
  int d = 0;
  Rational coefficient;
  Rational expected;
  bool ok = false;
};

struct GenfunReport {
  std::vector<GenfunRow> rows;
  bool ok = true;
};

/// With F(x) = 1 + sum_d T-tilde_d x^d, compares [x^d] F^{3d} with (3d)!/(d!)^3.
GenfunReport genfun_check(int dmax);

/// omega(A) / A(o_{c1(A)-1}), or nullopt when the superpotential vanishes and
/// there is no obstruction.
std::optional<Rational> embedding_bound(const TargetSpace& target, const HomologyClass& A,
                                        const SpectrumParams& p);

}  // namespace ellipsoidal
