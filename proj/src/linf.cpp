#include "ellipsoidal/linf.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/errors.hpp"

namespace ellipsoidal::linf {

GeneratorSet::GeneratorSet(Rules rules) : rules_(std::make_shared<const Rules>(std::move(rules))) {
  require(static_cast<bool>(rules_->contains) && static_cast<bool>(rules_->degree),
          "generator set needs membership and degree rules");
}

int GeneratorSet::degree(const Generator& g) const {
  if (!contains(g)) throw UnknownGenerator("generator " + label(g) + " is not in " + name());
  return rules_->degree(g);
}

std::optional<Rational> GeneratorSet::action(const Generator& g) const {
  if (!rules_->action) return std::nullopt;
  return rules_->action(g);
}

std::string GeneratorSet::label(const Generator& g) const {
  if (rules_->label) return rules_->label(g);
  std::ostringstream os;
  os << "g[" << g.family << ',' << g.i << ',' << g.j << ']';
  return os.str();
}

Word Word::from_sorted(std::vector<Generator> letters) {
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

SignedWord normalize(std::vector<Generator> letters, const GeneratorSet& set) {
  std::vector<int> parity(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) parity[i] = set.degree(letters[i]) % 2 != 0;
  int sign = 1;
  // Insertion sort; each adjacent swap of two odd letters flips the sign.
  for (std::size_t i = 1; i < letters.size(); ++i) {
    for (std::size_t j = i; j > 0 && letters[j] < letters[j - 1]; --j) {
      std::swap(letters[j], letters[j - 1]);
      std::swap(parity[j], parity[j - 1]);
      if (parity[j] && parity[j - 1]) sign = -sign;
    }
  }
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (parity[i] && letters[i] == letters[i - 1]) return {0, Word{}};
  }
  return {sign, Word::from_sorted(std::move(letters))};
}

int total_degree(const Word& w, const GeneratorSet& set) {
  int total = 0;
  for (const auto& g : w) total += set.degree(g);
  return total;
}

std::string to_string(const Word& w, const GeneratorSet& set) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += set.label(w[i]);
  }
  return out;
}

Combination::Combination(Word w, Rational coefficient) { add(w, coefficient); }

void Combination::add(const Word& w, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Combination& Combination::operator+=(const Combination& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

Combination& Combination::operator-=(const Combination& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

Combination& Combination::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

Rational Combination::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string Combination::str(const GeneratorSet& set) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")" + to_string(w, set);
  }
  return out;
}

Combination symmetric_product(const Combination& x, const Combination& y, const GeneratorSet& set) {
  Combination out;
  for (const auto& [wx, cx] : x) {
    for (const auto& [wy, cy] : y) {
      std::vector<Generator> letters(wx.begin(), wx.end());
      letters.insert(letters.end(), wy.begin(), wy.end());
      auto [sign, w] = normalize(std::move(letters), set);
      if (sign != 0) out.add(w, Rational(sign) * cx * cy);
    }
  }
  return out;
}

Combination project_length_one(const Combination& c) {
  Combination out;
  for (const auto& [w, coefficient] : c) {
    if (w.size() == 1) out.add(w, coefficient);
  }
  return out;
}

namespace {

void check_level_degree(const Combination& value, int expected, const GeneratorSet& set,
                        const char* what) {
  for (const auto& [w, c] : value) {
    ensure(w.size() == 1, std::string(what) + " must produce length-one words");
    ensure(set.degree(w[0]) == expected, std::string(what) + " violates degree bookkeeping");
  }
}

Word block_word(const Word& w, const Permutation& sigma, std::size_t begin, std::size_t end) {
  std::vector<Generator> letters;
  letters.reserve(end - begin);
  for (std::size_t p = begin; p < end; ++p) {
    letters.push_back(w[static_cast<std::size_t>(sigma.images[p])]);
  }
  return Word::from_sorted(std::move(letters));
}

std::vector<int> degrees_of(const Word& w, const GeneratorSet& set) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& g : w) out.push_back(set.degree(g));
  return out;
}

const std::vector<Permutation>& two_block_shuffles(int first, int second) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({first, second});
  if (it == cache.end()) {
    std::vector<int> sizes{first};
    if (second > 0) sizes.push_back(second);
    it = cache.emplace(std::pair{first, second}, shuffles(sizes)).first;
  }
  return it->second;
}

const std::vector<std::vector<int>>& ascending_partitions(std::size_t k) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<std::vector<int>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) {
    std::vector<std::vector<int>> out;
    for (auto& p : partitions(static_cast<int>(k))) {
      std::reverse(p.parts.begin(), p.parts.end());
      out.push_back(std::move(p.parts));
    }
    it = cache.emplace(k, std::move(out)).first;
  }
  return it->second;
}

}  // namespace

LinfStructure::LinfStructure(GeneratorSet generators, LevelRule rule)
    : generators_(std::move(generators)), rule_(std::move(rule)) {}

LinfStructure LinfStructure::abelian(GeneratorSet generators) {
  LinfStructure out(std::move(generators), [](const Word&) { return Combination{}; });
  out.abelian_ = true;
  return out;
}

Combination LinfStructure::level(const Word& w) const {
  Combination value = rule_(w);
  check_level_degree(value, total_degree(w, generators_) + 1, generators_, "ell^k");
  return value;
}

struct LinfMorphism::State {
  State(GeneratorSet s, GeneratorSet t) : source(std::move(s)), target(std::move(t)) {}

  GeneratorSet source;
  GeneratorSet target;
  RecursiveRule rule;
  std::optional<std::size_t> max_length;
  bool filtered = false;
  std::mutex mutex;
  std::map<Word, Combination> memo;
};

LinfMorphism::LinfMorphism(GeneratorSet source, GeneratorSet target, LevelRule rule,
                           std::optional<std::size_t> max_length)
    : LinfMorphism(recursive(
          std::move(source), std::move(target),
          [rule = std::move(rule)](const LinfMorphism&, const Word& w) { return rule(w); },
          max_length)) {}

LinfMorphism LinfMorphism::recursive(GeneratorSet source, GeneratorSet target, RecursiveRule rule,
                                     std::optional<std::size_t> max_length) {
  auto state = std::make_shared<State>(std::move(source), std::move(target));
  state->rule = std::move(rule);
  state->max_length = max_length;
  return LinfMorphism(std::move(state));
}

LinfMorphism LinfMorphism::identity(const GeneratorSet& set) {
  return {set, set, [](const Word& w) {
            return w.size() == 1 ? Combination(w, Rational(1)) : Combination{};
          }};
}

const GeneratorSet& LinfMorphism::source() const { return state_->source; }
const GeneratorSet& LinfMorphism::target() const { return state_->target; }
std::optional<std::size_t> LinfMorphism::max_length() const { return state_->max_length; }
void LinfMorphism::declare_filtered() { state_->filtered = true; }
bool LinfMorphism::filtered() const { return state_->filtered; }

const Combination& LinfMorphism::level(const Word& w) const {
  State& s = *state_;
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.memo.find(w); it != s.memo.end()) return it->second;
  }
  require(!w.empty(), "level maps take non-empty words");
  require(!s.max_length || w.size() <= *s.max_length,
          "word length " + std::to_string(w.size()) + " exceeds the morphism's bound");
  const int degree = total_degree(w, s.source);  // also rejects unknown keys

  Combination value = s.rule(*this, w);
  check_level_degree(value, degree, s.target, "Phi^k");

  if (s.filtered && s.source.has_actions() && s.target.has_actions()) {
    Rational input;
    for (const auto& g : w) input += s.source.action(g).value_or(Rational(0));
    for (const auto& [out, c] : value) {
      ensure(s.target.action(out[0]).value_or(Rational(0)) <= input,
             "filtered morphism increases action on " + to_string(w, s.source));
    }
  }

  std::lock_guard lock(s.mutex);
  return s.memo.try_emplace(w, std::move(value)).first->second;
}

Combination extend_coderivation(const LinfStructure& structure, const Word& w) {
  const auto& set = structure.generators();
  const auto degrees = degrees_of(w, set);
  Combination out;
  if (structure.is_abelian()) return out;
  const int k = static_cast<int>(w.size());
  for (int i = 1; i <= k; ++i) {
    for (const auto& sigma : two_block_shuffles(i, k - i)) {
      const Combination head = structure.level(block_word(w, sigma, 0, static_cast<std::size_t>(i)));
      if (head.is_zero()) continue;
      const Combination tail(block_word(w, sigma, static_cast<std::size_t>(i), w.size()), Rational(1));
      out += Rational(koszul_sign(sigma, degrees)) * symmetric_product(head, tail, set);
    }
  }
  return out;
}

Combination extend_coderivation(const LinfStructure& structure, const Combination& c) {
  Combination out;
  for (const auto& [w, coefficient] : c) out += coefficient * extend_coderivation(structure, w);
  return out;
}

Combination extend_morphism(const LinfMorphism& morphism, const Word& w) {
  const auto& target = morphism.target();
  const auto degrees = degrees_of(w, morphism.source());
  Combination out;
  for (const auto& sizes : ascending_partitions(w.size())) {
    for (const auto& sigma : ordered_shuffles(sizes)) {
      Combination product = Combination::unit();
      std::size_t offset = 0;
      for (int size : sizes) {
        const auto end = offset + static_cast<std::size_t>(size);
        product = symmetric_product(product, morphism.level(block_word(w, sigma, offset, end)), target);
        if (product.is_zero()) break;
        offset = end;
      }
      if (!product.is_zero()) out += Rational(koszul_sign(sigma, degrees)) * product;
    }
  }
  return out;
}

Combination extend_morphism(const LinfMorphism& morphism, const Combination& c) {
  Combination out;
  for (const auto& [w, coefficient] : c) out += coefficient * extend_morphism(morphism, w);
  return out;
}

Combination project_extension(const LinfMorphism& morphism, const Combination& c) {
  Combination out;
  for (const auto& [w, coefficient] : c) {
    if (!w.empty()) out += coefficient * morphism.level(w);
  }
  return out;
}

LinfMorphism compose(const LinfMorphism& outer, const LinfMorphism& inner, std::size_t bound) {
  require(bound >= 1, "composition bound must be positive");
  require(inner.target().name() == outer.source().name(),
          "cannot compose: " + inner.target().name() + " is not " + outer.source().name());
  return {inner.source(), outer.target(),
          [outer, inner](const Word& w) {
            return project_extension(outer, extend_morphism(inner, w));
          },
          bound};
}

LinfMorphism invert(const LinfMorphism& morphism, std::size_t bound, Preimage preimage) {
  require(bound >= 1, "inversion bound must be positive");
  auto rule = [F = morphism, preimage = std::move(preimage)](const LinfMorphism& self,
                                                             const Word& u) -> Combination {
    if (u.size() == 1) {
      const Generator g = preimage(u[0]);
      const Combination& image = F.level(Word(g));
      const Rational c = image.coefficient(u);
      require(image.size() == 1 && !c.is_zero(),
              "cannot invert: linear term is not an invertible rescaling at " +
                  F.target().label(u[0]));
      return {Word(g), c.inverse()};
    }
    // w = (H^1)^{(.)k}(u); then hat(F)(w) = u + (shorter words), and
    // H^k(u) = -pi_1 hat(H)(shorter words).
    Combination w = Combination::unit();
    for (const auto& letter : u) w = symmetric_product(w, self.level(Word(letter)), F.source());
    Combination lower;
    Combination top;
    for (const auto& [word, c] : extend_morphism(F, w)) {
      if (word.size() == u.size()) {
        top.add(word, c);
      } else {
        lower.add(word, c);
      }
    }
    ensure(top == Combination(u, Rational(1)), "inverse: linear part does not round-trip");
    Combination value = project_extension(self, lower);
    value *= Rational(-1);
    return value;
  };
  return LinfMorphism::recursive(morphism.target(), morphism.source(), std::move(rule), bound);
}

std::vector<Word> words_up_to(std::span<const Generator> window, std::size_t max_length,
                              const GeneratorSet& set) {
  std::vector<Generator> sorted(window.begin(), window.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<bool> odd(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) odd[i] = set.degree(sorted[i]) % 2 != 0;

  std::vector<Word> out;
  std::vector<Generator> prefix;
  // Multisets as non-decreasing index sequences; odd letters may not repeat.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!prefix.empty()) out.push_back(Word::from_sorted(prefix));
    if (prefix.size() == max_length) return;
    for (std::size_t i = start; i < sorted.size(); ++i) {
      prefix.push_back(sorted[i]);
      self(self, odd[i] ? i + 1 : i);
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

CheckReport check_structure(const LinfStructure& structure, std::size_t bound,
                            std::span<const Generator> window) {
  CheckReport report;
  for (const auto& w : words_up_to(window, bound, structure.generators())) {
    ++report.words_checked;
    Combination residual = extend_coderivation(structure, extend_coderivation(structure, w));
    if (!residual.is_zero()) {
      report.ok = false;
      report.witness = w;
      report.detail = "ell o ell != 0 on " + to_string(w, structure.generators()) + ": " +
                      residual.str(structure.generators());
      report.residual = std::move(residual);
      return report;
    }
  }
  return report;
}

CheckReport check_homomorphism(const LinfMorphism& morphism, const LinfStructure& source,
                               const LinfStructure& target, std::size_t bound,
                               std::span<const Generator> window) {
  CheckReport report;
  for (const auto& w : words_up_to(window, bound, source.generators())) {
    ++report.words_checked;
    Combination lhs = extend_morphism(morphism, extend_coderivation(source, w));
    Combination rhs = extend_coderivation(target, extend_morphism(morphism, w));
    Combination residual = lhs - rhs;
    if (!residual.is_zero()) {
      report.ok = false;
      report.witness = w;
      report.detail = "homomorphism equation fails on " + to_string(w, source.generators()) +
                      ": " + residual.str(target.generators());
      report.residual = std::move(residual);
      return report;
    }
  }
  return report;
}

CheckReport compare_morphisms(const LinfMorphism& lhs, const LinfMorphism& rhs, std::size_t bound,
                              std::span<const Generator> window) {
  CheckReport report;
  for (const auto& w : words_up_to(window, bound, lhs.source())) {
    ++report.words_checked;
    Combination residual = lhs.level(w) - rhs.level(w);
    if (!residual.is_zero()) {
      report.ok = false;
      report.witness = w;
      report.detail = "level maps differ on " + to_string(w, lhs.source()) + ": " +
                      lhs.level(w).str(lhs.target()) + " vs " + rhs.level(w).str(rhs.target());
      report.residual = std::move(residual);
      return report;
    }
  }
  return report;
}

}  // namespace ellipsoidal::linf
