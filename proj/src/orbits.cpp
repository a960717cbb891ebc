#include "ellipsoidal/orbits.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "ellipsoidal/errors.hpp"

namespace ellipsoidal {

std::string to_string(Side side) {
  switch (side) {
    case Side::Minus:
      return "minus";
    case Side::Plus:
      return "plus";
    case Side::Canonical:
      break;
  }
  return "canonical";
}

SpectrumParams::SpectrumParams(std::vector<Rational> a, Side side) : a_(std::move(a)), side_(side) {
  require(!a_.empty(), "ellipsoid parameters need at least one component");
  for (const auto& x : a_) require(x.sign() > 0, "ellipsoid parameters must be positive");
  require(side_ == Side::Canonical || a_.size() == 2,
          "plus/minus sides are only defined for two-component parameters");
}

SpectrumParams SpectrumParams::normalized(const Rational& a, Side side) {
  return SpectrumParams({Rational(1), a}, side);
}

std::string SpectrumParams::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) os << ',';
    os << a_[i];
  }
  os << ')';
  if (side_ == Side::Plus) os << '+';
  if (side_ == Side::Minus) os << '-';
  return os.str();
}

DualRational perturbed_value(const SpectrumParams& p, std::size_t axis, std::int64_t mult) {
  require(axis >= 1 && axis <= p.dimension(), "axis out of range");
  require(mult >= 1, "orbit multiplicity must be positive");
  const Rational value = p.a(axis - 1) * Rational(mult);
  switch (p.side()) {
    case Side::Canonical:
      return {value, Rational(static_cast<std::int64_t>(axis)) * value};
    case Side::Plus:
      return {value, axis == 2 ? Rational(mult) : Rational(0)};
    case Side::Minus:
      return {value, axis == 2 ? Rational(-mult) : Rational(0)};
  }
  throw InvariantViolation("unhandled side");
}

LatticePath::LatticePath(SpectrumParams params) : params_(std::move(params)) {
  points_.emplace_back(params_.dimension());
  for (std::size_t i = 1; i <= params_.dimension(); ++i) {
    next_values_.push_back(perturbed_value(params_, i, 1));
  }
}

void LatticePath::extend_to(std::size_t k) {
  while (points_.size() <= k) {
    const auto best = std::min_element(next_values_.begin(), next_values_.end());
    const auto axis = static_cast<std::size_t>(best - next_values_.begin());
    LatticePoint next = points_.back();
    next[axis] += 1;
    orbits_.push_back({axis + 1, next[axis]});
    next_values_[axis] = perturbed_value(params_, axis + 1, next[axis] + 1);
    points_.push_back(std::move(next));
  }
}

const LatticePoint& LatticePath::point(std::size_t k) {
  extend_to(k);
  return points_[k];
}

const OrbitId& LatticePath::orbit(std::size_t k) {
  require(k >= 1, "orbit index must be positive");
  extend_to(k);
  return orbits_[k - 1];
}

namespace {

LatticePath& cached_path(const SpectrumParams& p) {
  thread_local std::map<SpectrumParams, std::unique_ptr<LatticePath>> cache;
  auto it = cache.find(p);
  if (it == cache.end()) {
    if (cache.size() > 4096) cache.clear();
    it = cache.emplace(p, std::make_unique<LatticePath>(p)).first;
  }
  return *it->second;
}

}  // namespace

LatticePoint gamma(const SpectrumParams& p, std::size_t k) { return cached_path(p).point(k); }

OrbitId orbit(const SpectrumParams& p, std::size_t k) { return cached_path(p).orbit(k); }

Rational action(const SpectrumParams& p, std::size_t k) {
  const OrbitId o = orbit(p, k);
  return p.a(o.axis - 1) * Rational(o.multiplicity);
}

std::vector<Rational> jump_set(int k) {
  require(k >= 1, "jump sets are indexed by positive integers");
  std::vector<Rational> out;
  for (int j = k - 1; j >= 0; --j) out.emplace_back(BigInt(k - j), BigInt(j + 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> candidate_discontinuities(int d, const Rational& lower) {
  require(d >= 1, "degree must be positive");
  std::vector<Rational> out;
  for (int i = 1; i <= d; ++i) {
    for (auto& r : jump_set(3 * i - 1)) {
      if (r > lower) out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ellipsoidal
