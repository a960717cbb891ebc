#include "ellipsoidal/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ellipsoidal/errors.hpp"

namespace ellipsoidal {

std::int64_t LatticePoint::total() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

bool LatticePoint::dominated_by(const LatticePoint& other) const {
  require(dimension() == other.dimension(), "lattice points of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  require(dimension() == other.dimension(), "lattice points of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticePoint operator-(const LatticePoint& lhs, const LatticePoint& rhs) {
  require(lhs.dimension() == rhs.dimension(), "lattice points of different dimension");
  LatticePoint out = lhs;
  for (std::size_t i = 0; i < lhs.dimension(); ++i) out[i] -= rhs[i];
  return out;
}

std::string LatticePoint::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

BigInt vec_factorial(const LatticePoint& v) {
  BigInt out = 1;
  for (auto c : v.coords()) {
    require(c >= 0, "factorial of a negative component");
    out *= factorial(static_cast<unsigned long>(c));
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({prefix, multiset_automorphisms(std::span<const int>(prefix))});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void compositions_rec(int remaining, std::size_t axis, LatticePoint& current,
                      std::vector<LatticePoint>& out) {
  if (axis + 1 == current.dimension()) {
    current[axis] = remaining;
    out.push_back(current);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current[axis] = v;
    compositions_rec(remaining - v, axis + 1, current, out);
  }
}

}  // namespace

std::vector<Partition> partitions(int d) {
  std::vector<Partition> out;
  if (d <= 0) return out;
  std::vector<int> prefix;
  partitions_rec(d, d, prefix, out);
  return out;
}

std::vector<LatticePoint> compositions(int k, std::size_t n) {
  require(n >= 1, "compositions need at least one part");
  require(k >= 0, "compositions of a negative integer");
  std::vector<LatticePoint> out;
  LatticePoint current(n);
  compositions_rec(k, 0, current, out);
  return out;
}

std::vector<Permutation> shuffles(std::span<const int> block_sizes) {
  int total = 0;
  for (int size : block_sizes) {
    require(size >= 1, "shuffle blocks must be non-empty");
    total += size;
  }
  // Each shuffle is determined by which block every original position goes
  // to; enumerate those labelings in lexicographic order.
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(total));
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    labels.insert(labels.end(), static_cast<std::size_t>(block_sizes[b]), static_cast<int>(b));
  }
  std::vector<int> offsets(block_sizes.size() + 1, 0);
  for (std::size_t b = 0; b < block_sizes.size(); ++b) offsets[b + 1] = offsets[b] + block_sizes[b];

  std::vector<Permutation> out;
  do {
    Permutation sigma{std::vector<int>(static_cast<std::size_t>(total))};
    std::vector<int> fill(offsets.begin(), offsets.end() - 1);
    for (int pos = 0; pos < total; ++pos) {
      const auto block = static_cast<std::size_t>(labels[static_cast<std::size_t>(pos)]);
      sigma.images[static_cast<std::size_t>(fill[block]++)] = pos;
    }
    out.push_back(std::move(sigma));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Permutation>& ordered_shuffles(std::span<const int> block_sizes) {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::vector<Permutation>> cache;

  std::vector<int> key(block_sizes.begin(), block_sizes.end());
  require(std::is_sorted(key.begin(), key.end()), "ordered shuffles need non-decreasing block sizes");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  std::vector<Permutation> selected;
  for (auto& sigma : shuffles(block_sizes)) {
    bool canonical = true;
    int start = 0;
    for (std::size_t b = 0; b + 1 < key.size() && canonical; ++b) {
      const int next = start + key[b];
      if (key[b] == key[b + 1]) {
        const auto first = sigma.images.begin() + start;
        const auto second = sigma.images.begin() + next;
        canonical = std::lexicographical_compare(first, second, second, second + key[b + 1]);
      }
      start = next;
    }
    if (canonical) selected.push_back(std::move(sigma));
  }

  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(selected)).first->second;
}

int koszul_sign(const Permutation& sigma, std::span<const int> degrees) {
  require(sigma.size() == degrees.size(), "koszul sign: degree count does not match permutation");
  int odd_inversions = 0;
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    const auto x = static_cast<std::size_t>(sigma.images[p]);
    if (degrees[x] % 2 == 0) continue;
    for (std::size_t q = p + 1; q < sigma.size(); ++q) {
      const auto y = static_cast<std::size_t>(sigma.images[q]);
      if (x > y && degrees[y] % 2 != 0) ++odd_inversions;
    }
  }
  return odd_inversions % 2 == 0 ? 1 : -1;
}

BigInt multinomial(std::span<const int> block_sizes) {
  unsigned long total = 0;
  BigInt denominator = 1;
  for (int size : block_sizes) {
    require(size >= 0, "multinomial of a negative block");
    total += static_cast<unsigned long>(size);
    denominator *= factorial(static_cast<unsigned long>(size));
  }
  return factorial(total) / denominator;
}

}  // namespace ellipsoidal
