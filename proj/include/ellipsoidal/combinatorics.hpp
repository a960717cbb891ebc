#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ellipsoidal/rational.hpp"

namespace ellipsoidal {

/// A point of Z^n (components are naturals for lattice-path points, but
/// the type also carries the integer vectors used by the maximality checks).
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t dimension) : coords_(dimension, 0) {}
  LatticePoint(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  [[nodiscard]] std::size_t dimension() const { return coords_.size(); }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  [[nodiscard]] std::span<const std::int64_t> coords() const { return coords_; }
  [[nodiscard]] std::int64_t total() const;

  /// Componentwise <= (the partial order, not the lexicographic one).
  [[nodiscard]] bool dominated_by(const LatticePoint& other) const;

  LatticePoint& operator+=(const LatticePoint& other);
  friend LatticePoint operator+(LatticePoint lhs, const LatticePoint& rhs) { return lhs += rhs; }
  friend LatticePoint operator-(const LatticePoint& lhs, const LatticePoint& rhs);

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

/// v_1! * ... * v_n!. Components must be non-negative.
BigInt vec_factorial(const LatticePoint& v);

struct Partition {
  std::vector<int> parts;  // non-increasing, positive
  BigInt automorphisms;    // product over distinct values of (multiplicity)!
};

/// Partitions of d, lexicographically descending: (d), (d-1,1), ..., (1,...,1).
/// d = 0 yields no partitions.
std::vector<Partition> partitions(int d);

/// |Aut| of a multiset given as a sorted sequence: product of multiplicity factorials.
template <typename T>
BigInt multiset_automorphisms(std::span<const T> sorted) {
  BigInt out = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
    out *= static_cast<unsigned long>(run);
  }
  return out;
}

/// All v in Z_{>=0}^n with v_1 + ... + v_n = k, lexicographically descending.
std::vector<LatticePoint> compositions(int k, std::size_t n);

/// A permutation of {0..k-1}; images[p] is the original position that lands at
/// position p after rearranging.
struct Permutation {
  std::vector<int> images;

  [[nodiscard]] std::size_t size() const { return images.size(); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Sh(k_1, ..., k_s): permutations increasing on each consecutive block.
std::vector<Permutation> shuffles(std::span<const int> block_sizes);

/// The canonical subset of Sh(k_1 <= ... <= k_s) in which equal-length blocks
/// appear in lexicographically increasing order. The result is cached and
/// immutable; the reference stays valid for the life of the process.
const std::vector<Permutation>& ordered_shuffles(std::span<const int> block_sizes);

/// Koszul sign of rearranging v_1...v_k into v_{sigma(1)}...v_{sigma(k)}:
/// (-1)^{number of inverted pairs whose elements both have odd degree}.
int koszul_sign(const Permutation& sigma, std::span<const int> degrees);

/// multinomial(k_1 + ... + k_s; k_1, ..., k_s)
BigInt multinomial(std::span<const int> block_sizes);

}  // namespace ellipsoidal
