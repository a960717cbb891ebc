#include "ellipsoidal/rounding.hpp"

#include <algorithm>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/errors.hpp"
#include "ellipsoidal/sft.hpp"

namespace ellipsoidal::rounding {

using linf::Combination;
using linf::Generator;
using linf::GeneratorSet;
using linf::Word;

Generator alpha(int i, int j) { return {sft::kAlpha, i, j}; }
Generator beta(int i, int j) { return {sft::kBeta, i, j}; }

namespace {

bool is_alpha(const Generator& g) { return g.family == sft::kAlpha; }

bool valid_beta(int i, int j) { return i >= 0 && j >= 0 && (i > 0 || j > 0); }

void add_term(Combination& out, const Generator& g, std::int64_t coefficient) {
  if (coefficient == 0) return;
  if (g.family == sft::kBeta && !valid_beta(g.i, g.j)) return;
  out.add(Word(g), Rational(coefficient));
}

}  // namespace

GeneratorSet v_generators() {
  return GeneratorSet({
      .name = "V",
      .contains =
          [](const Generator& g) {
            if (g.family == sft::kAlpha) return g.i >= 1 && g.j >= 1;
            if (g.family == sft::kBeta) return valid_beta(g.i, g.j);
            return false;
          },
      .degree = [](const Generator& g) { return (is_alpha(g) ? -1 : -2) - 2 * g.i - 2 * g.j; },
      .action = {},
      .label =
          [](const Generator& g) {
            return std::string(is_alpha(g) ? "alpha_" : "beta_") + std::to_string(g.i) + "," +
                   std::to_string(g.j);
          },
  });
}

Combination v_ell(const Word& w) {
  static const GeneratorSet set = v_generators();
  for (const auto& g : w) (void)set.degree(g);
  Combination out;
  if (w.size() == 1) {
    const Generator& g = w[0];
    if (is_alpha(g)) {
      add_term(out, beta(g.i - 1, g.j), g.j);
      add_term(out, beta(g.i, g.j - 1), -g.i);
    }
  } else if (w.size() == 2) {
    // Canonical order puts alphas before betas.
    const Generator& x = w[0];
    const Generator& y = w[1];
    if (is_alpha(x)) {
      const std::int64_t det = std::int64_t{x.i} * y.j - std::int64_t{x.j} * y.i;
      add_term(out, is_alpha(y) ? alpha(x.i + y.i, x.j + y.j) : beta(x.i + y.i, x.j + y.j), det);
    }
  }
  return out;
}

linf::LinfStructure v_algebra() { return {v_generators(), v_ell}; }

std::vector<Generator> v_window(int bound) {
  std::vector<Generator> out;
  for (int s = 1; s <= bound; ++s) {
    for (int i = 0; i <= s; ++i) {
      if (i >= 1 && s - i >= 1) out.push_back(alpha(i, s - i));
      out.push_back(beta(i, s - i));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

linf::LinfMorphism tilde_epsilon() {
  return {v_generators(), sft::descendant_generators(), [](const Word& w) {
            long si = 0;
            long sj = 0;
            for (const auto& g : w) {
              if (is_alpha(g)) return Combination();
              si += g.i;
              sj += g.j;
            }
            const int index = static_cast<int>(si + sj + static_cast<long>(w.size()) - 1);
            return Combination(Word(sft::descendant_generator(index)),
                               Rational(BigInt(1), factorial(static_cast<unsigned long>(si)) *
                                                       factorial(static_cast<unsigned long>(sj))));
          }};
}

AugReport verify_aug(int B, int L) { return verify_aug(B, L, v_algebra(), static_cast<std::size_t>(L)); }

AugReport verify_aug(int B, int L, const linf::LinfStructure& v, std::size_t structure_length) {
  require(B >= 1 && L >= 1, "window and length bounds must be positive");
  const auto set = v.generators();
  const auto window = v_window(B);
  std::vector<Generator> alphas;
  std::vector<Generator> betas;
  for (const auto& g : window) (is_alpha(g) ? alphas : betas).push_back(g);

  std::vector<Word> beta_words{Word()};
  if (L >= 2) {
    auto more = linf::words_up_to(betas, static_cast<std::size_t>(L - 1), set);
    beta_words.insert(beta_words.end(), more.begin(), more.end());
  }

  const auto eps = tilde_epsilon();
  AugReport report;
  for (const auto& a : alphas) {
    for (const auto& bw : beta_words) {
      std::vector<Generator> letters{a};
      letters.insert(letters.end(), bw.begin(), bw.end());
      const auto word = linf::normalize(std::move(letters), set);
      ensure(word.sign != 0, "a single alpha cannot vanish");
      ++report.words_checked;
      const Combination value = linf::project_extension(eps, linf::extend_coderivation(v, word.word));
      if (!value.is_zero()) {
        report.ok = false;
        report.witness = linf::to_string(word.word, set);
        report.detail = "eps-tilde is not a homomorphism on " + *report.witness + ": " +
                        value.str(eps.target());
        return report;
      }
    }
  }

  const auto length = std::min(static_cast<std::size_t>(L), structure_length);
  const auto structure = linf::check_structure(v, length, window);
  report.structure_words_checked = structure.words_checked;
  if (!structure.ok) {
    report.ok = false;
    report.witness = linf::to_string(*structure.witness, set);
    report.detail = structure.detail;
  }
  return report;
}

linf::LinfMorphism psi_map(const SpectrumParams& p) {
  require(p.dimension() == 2, "the rounding map is only defined in dimension four");
  return {sft::ellipsoid_generators(p), v_generators(), [p](const Word& w) {
            if (w.size() != 1) return Combination();
            const LatticePoint g = gamma(p, static_cast<std::size_t>(w[0].i));
            return Combination(Word(beta(static_cast<int>(g[0]), static_cast<int>(g[1]))), Rational(1));
          }};
}

linf::CheckReport check_psi_factorization(const SpectrumParams& p, std::size_t bound, int window) {
  const auto composed = linf::compose(tilde_epsilon(), psi_map(p), bound);
  const auto gens = sft::orbit_window(window);
  return linf::compare_morphisms(composed, sft::epsilon(p), bound, gens);
}

}  // namespace ellipsoidal::rounding
