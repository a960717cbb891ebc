#include "ellipsoidal/sft.hpp"

#include <span>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/errors.hpp"

namespace ellipsoidal::sft {

using linf::Combination;
using linf::Generator;
using linf::GeneratorSet;
using linf::LinfMorphism;
using linf::Word;

GeneratorSet ellipsoid_generators(const SpectrumParams& p) {
  return GeneratorSet({
      .name = "C_" + p.str(),
      .contains = [](const Generator& g) { return g.family == kOrbit && g.i >= 1 && g.j == 0; },
      .degree = [](const Generator& g) { return -2 - 2 * g.i; },
      .action = [p](const Generator& g) -> std::optional<Rational> {
        return action(p, static_cast<std::size_t>(g.i));
      },
      .label = [](const Generator& g) { return "o_" + std::to_string(g.i); },
  });
}

GeneratorSet descendant_generators() {
  return GeneratorSet({
      .name = "C_o",
      .contains = [](const Generator& g) { return g.family == kDescendant && g.i >= 1 && g.j == 0; },
      .degree = [](const Generator& g) { return -2 - 2 * g.i; },
      .action = {},
      .label = [](const Generator& g) { return "q_" + std::to_string(g.i); },
  });
}

linf::LinfStructure ellipsoid_algebra(const SpectrumParams& p) {
  return linf::LinfStructure::abelian(ellipsoid_generators(p));
}

linf::LinfStructure descendant_algebra() { return linf::LinfStructure::abelian(descendant_generators()); }

std::vector<Generator> orbit_window(int n) {
  std::vector<Generator> out;
  for (int k = 1; k <= n; ++k) out.push_back(orbit_generator(k));
  return out;
}

std::vector<Generator> descendant_window(int n) {
  std::vector<Generator> out;
  for (int k = 1; k <= n; ++k) out.push_back(descendant_generator(k));
  return out;
}

LinfMorphism epsilon(const SpectrumParams& p) {
  return {ellipsoid_generators(p), descendant_generators(), [p](const Word& w) {
            LatticePoint sum(p.dimension());
            int index = static_cast<int>(w.size()) - 1;
            for (const auto& g : w) {
              sum += gamma(p, static_cast<std::size_t>(g.i));
              index += g.i;
            }
            return Combination(Word(descendant_generator(index)),
                               Rational(BigInt(1), vec_factorial(sum)));
          }};
}

LinfMorphism eta(const SpectrumParams& p, std::size_t bound) {
  return linf::invert(epsilon(p), bound, [](const Generator& q) { return orbit_generator(q.i); });
}

LinfMorphism xi(const SpectrumParams& source, const SpectrumParams& target, std::size_t bound) {
  auto composed = linf::compose(eta(target, bound), epsilon(source), bound);
  return {ellipsoid_generators(source), ellipsoid_generators(target),
          [composed](const Word& w) {
            const Combination& value = composed.level(w);
            int index = static_cast<int>(w.size()) - 1;
            for (const auto& g : w) index += g.i;
            for (const auto& [out, c] : value) {
              ensure(out[0].i == index, "cobordism map breaks index bookkeeping");
            }
            return value;
          },
          bound};
}

Combination MCElement::as_combination() const {
  return {Word(orbit_generator(static_cast<int>(orbit_index))), coefficient};
}

Combination exp_mc(const MCFamily& family, const HomologyClass& A, const Decomposer& decomposer,
                   const SpectrumParams& p) {
  const auto set = ellipsoid_generators(p);
  Combination out;
  for (const auto& parts : decomposer(A)) {
    require(!parts.empty(), "empty decomposition");
    Combination term = Combination::unit();
    for (const auto& part : parts) {
      term = linf::symmetric_product(term, family(part).as_combination(), set);
    }
    const BigInt aut = multiset_automorphisms(std::span<const HomologyClass>(parts));
    out += Rational(BigInt(1), aut) * term;
  }
  return out;
}

}  // namespace ellipsoidal::sft
