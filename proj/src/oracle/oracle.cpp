#include "ellipsoidal/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "ellipsoidal/errors.hpp"

namespace ellipsoidal::oracle {

namespace {

DualRational scaled(const SpectrumParams& p, std::size_t axis, std::int64_t v) {
  if (v == 0) return {};
  const Rational main = p.a(axis) * Rational(v);
  switch (p.side()) {
    case Side::Canonical:
      return {main, main * Rational(static_cast<std::int64_t>(axis + 1))};
    case Side::Plus:
      return {main, axis == 1 ? Rational(v) : Rational(0)};
    case Side::Minus:
      return {main, axis == 1 ? Rational(-v) : Rational(0)};
  }
  throw InvariantViolation("unhandled side");
}

void enumerate(std::vector<std::int64_t>& v, std::size_t pos, std::int64_t left,
               const std::function<void(const std::vector<std::int64_t>&)>& f) {
  if (pos + 1 == v.size()) {
    v[pos] = left;
    f(v);
    return;
  }
  for (std::int64_t x = 0; x <= left; ++x) {
    v[pos] = x;
    enumerate(v, pos + 1, left - x, f);
  }
}

// Sorts letters by bubble sort; returns 0 for a repeated odd letter.
int sort_with_sign(std::vector<linf::Generator>& letters, const linf::GeneratorSet& set) {
  int sign = 1;
  for (std::size_t pass = 0; pass < letters.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i + 1] < letters[i]) {
        if (set.degree(letters[i]) % 2 != 0 && set.degree(letters[i + 1]) % 2 != 0) sign = -sign;
        std::swap(letters[i], letters[i + 1]);
      }
    }
  }
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i] == letters[i + 1] && set.degree(letters[i]) % 2 != 0) return 0;
  }
  return sign;
}

Rational fact(std::size_t n) {
  Rational out(1);
  for (std::size_t i = 2; i <= n; ++i) out *= Rational(static_cast<std::int64_t>(i));
  return out;
}

void compositions_of(std::size_t k, std::vector<std::size_t>& current,
                     std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t first = 1; first <= k; ++first) {
    current.push_back(first);
    compositions_of(k - first, current, out);
    current.pop_back();
  }
}

}  // namespace

LatticePoint gamma_bruteforce(const SpectrumParams& p, int k) {
  require(k >= 0 && k <= 40, "brute-force lattice path needs 0 <= k <= 40");
  require(p.dimension() <= 5, "brute-force lattice path needs n <= 5");
  const std::size_t n = p.dimension();
  std::vector<std::int64_t> v(n, 0);
  std::optional<DualRational> best;
  std::vector<std::int64_t> argmin;
  bool tie = false;
  enumerate(v, 0, k, [&](const std::vector<std::int64_t>& cand) {
    DualRational worst;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, scaled(p, i, cand[i]));
    if (!best || worst < *best) {
      best = worst;
      argmin = cand;
      tie = false;
    } else if (worst == *best) {
      tie = true;
    }
  });
  ensure(!tie, "brute-force minimizer is not unique");
  return LatticePoint(argmin);
}

std::vector<SpectrumEntry> merge_spectrum(const SpectrumParams& p, std::size_t count) {
  require(count <= 10000, "brute-force spectrum is limited to 10^4 entries");
  if (count == 0) return {};
  Rational smallest = p.a(0);
  for (const auto& x : p.a()) smallest = std::min(smallest, x);
  // The first axis alone supplies `count` values at or below this cutoff.
  const Rational cutoff = smallest * Rational(static_cast<std::int64_t>(count));

  std::vector<SpectrumEntry> all;
  for (std::size_t axis = 0; axis < p.dimension(); ++axis) {
    for (std::int64_t m = 1; p.a(axis) * Rational(m) <= cutoff; ++m) {
      all.push_back({scaled(p, axis, m), {axis + 1, m}});
    }
  }
  std::sort(all.begin(), all.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
    if (x.action.main != y.action.main) return x.action.main < y.action.main;
    return x.action.eps < y.action.eps;
  });
  ensure(all.size() >= count, "spectrum cutoff too small");
  all.resize(count);
  return all;
}

linf::Combination morphism_bruteforce(const linf::LinfMorphism& levels, const linf::Word& word) {
  const std::size_t k = word.size();
  require(k >= 1 && k <= 5, "brute-force extension needs 1 <= |word| <= 5");
  const auto& source = levels.source();
  const auto& target = levels.target();

  std::vector<linf::Generator> letters(word.begin(), word.end());
  std::vector<bool> odd(k);
  for (std::size_t i = 0; i < k; ++i) odd[i] = source.degree(letters[i]) % 2 != 0;

  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> scratch;
  compositions_of(k, scratch, comps);

  std::map<std::vector<linf::Generator>, Rational> acc;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int perm_sign = 1;
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) {
        if (perm[x] > perm[y] && odd[perm[x]] && odd[perm[y]]) perm_sign = -perm_sign;
      }
    }
    for (const auto& comp : comps) {
      Rational weight = Rational(perm_sign) / fact(comp.size());
      for (auto size : comp) weight /= fact(size);

      // Expand the product of block images term by term.
      std::vector<std::pair<std::vector<linf::Generator>, Rational>> partial{{{}, weight}};
      std::size_t offset = 0;
      for (auto size : comp) {
        std::vector<linf::Generator> block;
        for (std::size_t t = 0; t < size; ++t) block.push_back(letters[perm[offset + t]]);
        offset += size;
        const int block_sign = sort_with_sign(block, source);
        if (block_sign == 0) {
          partial.clear();
          break;
        }
        const linf::Combination& image = levels.level(linf::Word::from_sorted(block));
        std::vector<std::pair<std::vector<linf::Generator>, Rational>> next;
        for (const auto& [out_letters, c] : partial) {
          for (const auto& [w, d] : image) {
            auto grown = out_letters;
            grown.insert(grown.end(), w.begin(), w.end());
            next.emplace_back(std::move(grown), c * d * Rational(block_sign));
          }
        }
        partial = std::move(next);
      }
      for (auto& [out_letters, c] : partial) {
        const int s = sort_with_sign(out_letters, target);
        if (s == 0) continue;
        acc[out_letters] += Rational(s) * c;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  linf::Combination out;
  for (const auto& [out_letters, c] : acc) {
    if (!c.is_zero()) out.add(linf::Word::from_sorted(out_letters), c);
  }
  return out;
}

}  // namespace ellipsoidal::oracle
