#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ellipsoidal/rational.hpp"

namespace ellipsoidal::linf {

/// Opaque generator key. The owning GeneratorSet decides which keys exist,
/// their degrees and their actions; the engine only compares keys.
struct Generator {
  int family = 0;
  int i = 0;
  int j = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A (possibly infinite) graded family of generators, described by rules.
class GeneratorSet {
 public:
  struct Rules {
    std::string name;
    std::function<bool(const Generator&)> contains;
    std::function<int(const Generator&)> degree;
    std::function<std::optional<Rational>(const Generator&)> action;  // optional
    std::function<std::string(const Generator&)> label;               // optional
  };

  explicit GeneratorSet(Rules rules);

  [[nodiscard]] const std::string& name() const { return rules_->name; }
  [[nodiscard]] bool contains(const Generator& g) const { return rules_->contains(g); }
  /// Throws UnknownGenerator for keys outside the set.
  [[nodiscard]] int degree(const Generator& g) const;
  [[nodiscard]] std::optional<Rational> action(const Generator& g) const;
  [[nodiscard]] bool has_actions() const { return static_cast<bool>(rules_->action); }
  [[nodiscard]] std::string label(const Generator& g) const;

 private:
  std::shared_ptr<const Rules> rules_;
};

/// A word g_1 (.) ... (.) g_k of the reduced symmetric coalgebra, stored with
/// its letters in canonical (sorted) order. Signs live in coefficients.
class Word {
 public:
  Word() = default;
  explicit Word(Generator g) : letters_{g} {}

  /// Letters must already be sorted; used by the engine for sub-blocks of
  /// canonical words.
  static Word from_sorted(std::vector<Generator> letters);

  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] const Generator& operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] std::span<const Generator> letters() const { return letters_; }
  [[nodiscard]] auto begin() const { return letters_.begin(); }
  [[nodiscard]] auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Generator> letters_;
};

struct SignedWord {
  int sign = 0;  // 0 when the word vanishes (a repeated odd generator)
  Word word;
};

/// Sorts letters into canonical order, tracking the Koszul sign.
SignedWord normalize(std::vector<Generator> letters, const GeneratorSet& set);

int total_degree(const Word& w, const GeneratorSet& set);
std::string to_string(const Word& w, const GeneratorSet& set);

/// Finite linear combination of words with rational coefficients. Zero
/// coefficients are never stored.
class Combination {
 public:
  Combination() = default;
  Combination(Word w, Rational coefficient);
  static Combination unit() { return {Word{}, Rational(1)}; }

  void add(const Word& w, const Rational& coefficient);
  Combination& operator+=(const Combination& other);
  Combination& operator-=(const Combination& other);
  Combination& operator*=(const Rational& scalar);
  friend Combination operator*(const Rational& scalar, Combination c) { return c *= scalar; }
  friend Combination operator+(Combination lhs, const Combination& rhs) { return lhs += rhs; }
  friend Combination operator-(Combination lhs, const Combination& rhs) { return lhs -= rhs; }

  [[nodiscard]] Rational coefficient(const Word& w) const;
  [[nodiscard]] Rational coefficient(const Generator& g) const { return coefficient(Word(g)); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }
  [[nodiscard]] std::string str(const GeneratorSet& set) const;

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  std::map<Word, Rational> terms_;
};

/// The supersymmetric product x (.) y, with Koszul signs.
Combination symmetric_product(const Combination& x, const Combination& y, const GeneratorSet& set);

/// pi_1: keep only the word-length-one part.
Combination project_length_one(const Combination& c);

/// ell^k or Phi^k evaluated on a canonical word of length k; the result is a
/// combination of length-one words.
using LevelRule = std::function<Combination(const Word&)>;

/// An L-infinity structure given by its level maps ell^1, ell^2, ...
class LinfStructure {
 public:
  LinfStructure(GeneratorSet generators, LevelRule rule);

  /// Abelian structure: every ell^k vanishes.
  static LinfStructure abelian(GeneratorSet generators);

  [[nodiscard]] const GeneratorSet& generators() const { return generators_; }
  /// ell^{|w|}(w); checks that the result has degree |w| + 1.
  [[nodiscard]] Combination level(const Word& w) const;
  [[nodiscard]] bool is_abelian() const { return abelian_; }

 private:
  GeneratorSet generators_;
  LevelRule rule_;
  bool abelian_ = false;
};

/// An L-infinity morphism given by level maps Phi^k, evaluated lazily and
/// memoized. Copies share the memo. Evaluation is safe from several threads.
class LinfMorphism {
 public:
  using RecursiveRule = std::function<Combination(const LinfMorphism& self, const Word&)>;

  LinfMorphism(GeneratorSet source, GeneratorSet target, LevelRule rule,
               std::optional<std::size_t> max_length = std::nullopt);

  /// A morphism whose level maps are defined in terms of its own lower levels.
  static LinfMorphism recursive(GeneratorSet source, GeneratorSet target, RecursiveRule rule,
                                std::optional<std::size_t> max_length = std::nullopt);

  static LinfMorphism identity(const GeneratorSet& set);

  [[nodiscard]] const GeneratorSet& source() const;
  [[nodiscard]] const GeneratorSet& target() const;
  [[nodiscard]] std::optional<std::size_t> max_length() const;

  /// Declares the morphism filtered: every evaluation then checks that the
  /// output action never exceeds the input action.
  void declare_filtered();
  [[nodiscard]] bool filtered() const;

  /// Phi^{|w|}(w) for a canonical source word; memoized.
  [[nodiscard]] const Combination& level(const Word& w) const;

 private:
  struct State;
  explicit LinfMorphism(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// hat(ell)(w): the coderivation extension of the level maps.
Combination extend_coderivation(const LinfStructure& structure, const Word& w);
Combination extend_coderivation(const LinfStructure& structure, const Combination& c);

/// hat(Phi)(w): the coalgebra-morphism extension, summed over ordered shuffles.
Combination extend_morphism(const LinfMorphism& morphism, const Word& w);
Combination extend_morphism(const LinfMorphism& morphism, const Combination& c);

/// pi_1 hat(Phi)(c): only the single-block term survives, so this is the sum
/// of Phi^{|w|}(w) over the words of c.
Combination project_extension(const LinfMorphism& morphism, const Combination& c);

/// G o F with levels defined up to word length `bound`.
LinfMorphism compose(const LinfMorphism& outer, const LinfMorphism& inner, std::size_t bound);

/// Maps a target generator of F to the source generator whose image it is.
using Preimage = std::function<Generator(const Generator&)>;

/// The two-sided inverse of F up to word length `bound`. Requires
/// Phi^1(preimage(g)) = c * g with c != 0 for every target generator g.
LinfMorphism invert(const LinfMorphism& morphism, std::size_t bound, Preimage preimage);

/// All non-vanishing canonical words of length 1..max_length over `window`.
std::vector<Word> words_up_to(std::span<const Generator> window, std::size_t max_length,
                              const GeneratorSet& set);

struct CheckReport {
  bool ok = true;
  std::size_t words_checked = 0;
  std::optional<Word> witness;
  Combination residual;
  std::string detail;
};

/// Checks hat(ell) o hat(ell) = 0 on every word of length <= bound over the window.
CheckReport check_structure(const LinfStructure& structure, std::size_t bound,
                            std::span<const Generator> window);

/// Checks hat(Phi) o hat(ell_V) = hat(ell_W) o hat(Phi) on every word of
/// length <= bound over the window.
CheckReport check_homomorphism(const LinfMorphism& morphism, const LinfStructure& source,
                               const LinfStructure& target, std::size_t bound,
                               std::span<const Generator> window);

/// Compares the level maps of two morphisms on every word of length <= bound.
CheckReport compare_morphisms(const LinfMorphism& lhs, const LinfMorphism& rhs, std::size_t bound,
                              std::span<const Generator> window);

}  // namespace ellipsoidal::linf
