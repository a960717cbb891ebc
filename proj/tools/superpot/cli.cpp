#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "ellipsoidal/combinatorics.hpp"
#include "ellipsoidal/errors.hpp"
#include "ellipsoidal/jumps.hpp"
#include "ellipsoidal/oracle.hpp"
#include "ellipsoidal/orbits.hpp"
#include "ellipsoidal/rounding.hpp"
#include "ellipsoidal/sft.hpp"
#include "ellipsoidal/superpotential.hpp"

namespace superpot {

namespace {

using json = nlohmann::ordered_json;
using namespace ellipsoidal;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty(), "invalid integer for " + what + ": '" + text + "'");
  return value;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_int(item, what));
  require(!out.empty(), what + " must not be empty");
  return out;
}

Side parse_side(const std::string& text) {
  if (text == "plus" || text == "+") return Side::Plus;
  if (text == "minus" || text == "-") return Side::Minus;
  if (text == "canonical") return Side::Canonical;
  throw InvalidInput("unknown side '" + text + "' (expected plus, minus or canonical)");
}

/// "--a 1,13/2+" or "--a 13/2 --side plus". A single value means (1, a) when
/// `single_means_normalized` is set.
SpectrumParams parse_params(std::string text, const std::string& side_flag, bool single_means_normalized) {
  require(!text.empty(), "--a is required");
  std::optional<Side> suffix;
  if (text.back() == '+' || text.back() == '-') {
    suffix = text.back() == '+' ? Side::Plus : Side::Minus;
    text.pop_back();
  }
  std::optional<Side> flag;
  if (!side_flag.empty()) flag = parse_side(side_flag);
  require(!suffix || !flag || *suffix == *flag, "the side suffix and --side disagree");
  const Side side = suffix.value_or(flag.value_or(Side::Canonical));

  std::vector<Rational> a;
  for (const auto& item : split(text, ',')) a.push_back(Rational::parse(item));
  if (single_means_normalized && a.size() == 1) a.insert(a.begin(), Rational(1));
  return SpectrumParams(std::move(a), side);
}

json point_json(const LatticePoint& v) {
  json arr = json::array();
  for (auto c : v.coords()) arr.push_back(c);
  return arr;
}

json params_json(const SpectrumParams& p) {
  json a = json::array();
  for (const auto& x : p.a()) a.push_back(x.str());
  return {{"a", a}, {"side", to_string(p.side())}};
}

std::string csv_point(const LatticePoint& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dimension(); ++i) out += (i ? ";" : "") + std::to_string(v[i]);
  return out;
}

struct Output {
  json payload;
  std::string csv;  // non-empty when the command rendered CSV instead
  bool ok = true;   // false for failed check suites
};

void require_format(const std::string& format, bool csv_supported) {
  require(format == "json" || (csv_supported && format == "csv"),
          csv_supported ? "--format must be json or csv" : "this command only emits json");
}

// ---- gamma / spectrum / descendant ----

Output cmd_gamma(const std::string& a_text, const std::string& side, const std::string& k_text,
                 const std::string& format) {
  require_format(format, true);
  const auto p = parse_params(a_text, side, false);
  int lo = 0;
  int hi = 0;
  if (auto dots = k_text.find(".."); dots != std::string::npos) {
    lo = parse_int(k_text.substr(0, dots), "--k");
    hi = parse_int(k_text.substr(dots + 2), "--k");
  } else {
    lo = hi = parse_int(k_text, "--k");
  }
  require(lo >= 0 && hi >= lo, "--k must be n or n..m with 0 <= n <= m");
  require(hi <= 1000000, "--k is limited to 10^6");

  Output out;
  json rows = json::array();
  out.csv = "k,point\n";
  for (int k = lo; k <= hi; ++k) {
    const auto g = gamma(p, static_cast<std::size_t>(k));
    rows.push_back({{"k", k}, {"point", point_json(g)}});
    out.csv += std::to_string(k) + "," + csv_point(g) + "\n";
  }
  out.payload = {{"command", "gamma"},
                 {"input", {{"params", params_json(p)}, {"k", {lo, hi}}}},
                 {"result", rows}};
  if (format != "csv") out.csv.clear();
  return out;
}

Output cmd_spectrum(const std::string& a_text, const std::string& side, int count, const std::string& format) {
  require_format(format, true);
  const auto p = parse_params(a_text, side, false);
  require(count >= 1 && count <= 1000000, "--count must be between 1 and 10^6");
  Output out;
  json rows = json::array();
  out.csv = "k,axis,mult,action\n";
  for (int k = 1; k <= count; ++k) {
    const auto o = orbit(p, static_cast<std::size_t>(k));
    const auto act = action(p, static_cast<std::size_t>(k));
    rows.push_back({{"k", k}, {"axis", o.axis}, {"mult", o.multiplicity}, {"action", act.str()}});
    out.csv += std::to_string(k) + "," + std::to_string(o.axis) + "," + std::to_string(o.multiplicity) + "," +
               act.str() + "\n";
  }
  out.payload = {{"command", "spectrum"},
                 {"input", {{"params", params_json(p)}, {"count", count}}},
                 {"result", rows}};
  if (format != "csv") out.csv.clear();
  return out;
}

Output cmd_descendant(const std::string& a_text, const std::string& side, const std::string& orbits_text) {
  const auto p = parse_params(a_text, side, false);
  const auto indices = parse_int_list(orbits_text, "--orbits");
  std::vector<linf::Generator> letters;
  for (int i : indices) {
    require(i >= 1, "orbit indices start at 1");
    letters.push_back(sft::orbit_generator(i));
  }
  const auto eps = sft::epsilon(p);
  const auto word = linf::normalize(std::move(letters), eps.source());
  int j = static_cast<int>(indices.size()) - 1;
  for (int i : indices) j += i;
  const Rational value = Rational(word.sign) * eps.level(word.word).coefficient(sft::descendant_generator(j));
  Output out;
  out.payload = {{"command", "descendant"},
                 {"input", {{"params", params_json(p)}, {"orbits", indices}}},
                 {"result", {{"value", value.str()}, {"psi_power", j - 1}, {"descendant_index", j}}}};
  return out;
}

// ---- superpotential / table / bound ----

const CP2Target& cp2(const std::string& target) {
  require(target == "cp2", "unknown target '" + target + "' (only cp2 is built in)");
  static const CP2Target instance;
  return instance;
}

Output cmd_superpotential(const std::string& target, int d, const std::string& a_text, const std::string& side) {
  const auto& t = cp2(target);
  require(d >= 1, "--d must be positive");
  const auto p = parse_params(a_text, side, true);
  const auto A = CP2Target::degree(d);
  const auto mult = orbit(p, static_cast<std::size_t>(3 * d - 1)).multiplicity;
  Output out;
  out.payload = {{"command", "superpotential"},
                 {"input", {{"target", target}, {"d", d}, {"params", params_json(p)}}},
                 {"result", {{"wt_T", wt_T(t, A, p).str()}, {"mult", mult}, {"T", T(t, A, p).str()}}}};
  return out;
}

Output cmd_table(const std::string& target, int d, const std::string& min_text, const std::string& max_text,
                 bool refine, const std::string& quantity_text, const std::string& format) {
  require_format(format, true);
  const auto& t = cp2(target);
  require(d >= 1, "--d must be positive");
  TableQuantity quantity = TableQuantity::WtT;
  if (quantity_text == "T") {
    quantity = TableQuantity::T;
  } else {
    require(quantity_text == "wt_T", "--quantity must be wt_T or T");
  }
  const Rational lo = Rational::parse(min_text);
  std::optional<Rational> hi;
  if (!max_text.empty() && max_text != "inf") hi = Rational::parse(max_text);
  const auto table = piecewise_table(t, d, lo, hi, quantity, refine);

  Output out;
  json intervals = json::array();
  out.csv = "lo,hi,value\n";
  for (const auto& iv : table.intervals) {
    const std::string hi_text = iv.hi ? iv.hi->str() : "inf";
    intervals.push_back(
        {{"lo", iv.lo.str()}, {"hi", hi_text}, {"lo_open", true}, {"hi_open", true}, {"value", iv.value.str()}});
    out.csv += iv.lo.str() + "," + hi_text + "," + iv.value.str() + "\n";
  }
  json breakpoints = json::array();
  for (const auto& b : table.breakpoints) {
    breakpoints.push_back({{"at", b.at.str()}, {"minus", b.minus_value.str()}, {"plus", b.plus_value.str()}});
  }
  out.payload = {{"command", "table"},
                 {"input",
                  {{"target", target},
                   {"d", d},
                   {"min", lo.str()},
                   {"max", hi ? hi->str() : "inf"},
                   {"quantity", quantity_text},
                   {"refine_orbit_id", refine}}},
                 {"result",
                  {{"intervals", intervals},
                   {"breakpoints", breakpoints},
                   {"nondecreasing", table.nondecreasing()}}}};
  if (format != "csv") out.csv.clear();
  return out;
}

Output cmd_bound(const std::string& target, int d, const std::string& a_text, const std::string& side) {
  const auto& t = cp2(target);
  require(d >= 1, "--d must be positive");
  const auto p = parse_params(a_text, side, true);
  const auto bound = embedding_bound(t, CP2Target::degree(d), p);
  Output out;
  out.payload = {{"command", "bound"},
                 {"input", {{"target", target}, {"d", d}, {"params", params_json(p)}}},
                 {"result", bound ? json(bound->str()) : json("no-obstruction")}};
  return out;
}

// ---- jumps ----

Output cmd_jumps(const std::string& a_text, const std::string& orbits_text, const std::string& route) {
  const Rational a = Rational::parse(a_text);
  const auto indices = parse_int_list(orbits_text, "--orbits");
  json result = json::object();
  auto closed = [&]() -> Rational {
    require(indices.size() <= 2, "the closed forms cover one or two inputs");
    return indices.size() == 1 ? jump_cylinder(a, indices[0]) : jump_pants(a, indices[0], indices[1]);
  };
  if (route == "closed") {
    result = closed().str();
  } else if (route == "recursive") {
    result = jump_general(a, indices).str();
  } else if (route == "xi") {
    result = jump_via_xi(a, indices).str();
  } else if (route == "all") {
    if (indices.size() <= 2) result["closed"] = closed().str();
    result["recursive"] = jump_general(a, indices).str();
    result["xi"] = jump_via_xi(a, indices).str();
  } else {
    throw InvalidInput("--route must be closed, recursive, xi or all");
  }
  Output out;
  out.payload = {{"command", "jumps"},
                 {"input", {{"a", a.str()}, {"orbits", indices}, {"route", route}}},
                 {"result", result}};
  return out;
}

// ---- check suites ----

json check_gamma(int bound) {
  require(bound >= 1 && bound <= 40, "gamma suite bound must be between 1 and 40");
  const std::vector<SpectrumParams> cases{
      SpectrumParams({Rational(1), Rational::parse("3/2")}),
      SpectrumParams({Rational(1), Rational(1)}),
      SpectrumParams({Rational(2), Rational(13)}, Side::Plus),
      SpectrumParams({Rational(1), Rational::parse("5/4")}, Side::Minus),
      SpectrumParams({Rational(1), Rational::parse("5/4")}, Side::Plus),
      SpectrumParams({Rational(1), Rational(2), Rational(3)}),
      SpectrumParams({Rational(3), Rational(5), Rational(7), Rational(11)}),
  };
  std::size_t checked = 0;
  for (const auto& p : cases) {
    const auto spectrum = oracle::merge_spectrum(p, static_cast<std::size_t>(bound));
    for (int k = 0; k <= bound; ++k) {
      ++checked;
      if (gamma(p, static_cast<std::size_t>(k)) != oracle::gamma_bruteforce(p, k)) {
        return {{"ok", false}, {"checked", checked}, {"witness", p.str() + " k=" + std::to_string(k)}};
      }
      if (k >= 1) {
        const auto& entry = spectrum[static_cast<std::size_t>(k - 1)];
        if (!(orbit(p, static_cast<std::size_t>(k)) == entry.orbit) ||
            action(p, static_cast<std::size_t>(k)) != entry.action.main) {
          return {{"ok", false}, {"checked", checked}, {"witness", p.str() + " orbit k=" + std::to_string(k)}};
        }
      }
    }
  }
  return {{"ok", true}, {"checked", checked}};
}

json check_linf(int bound) {
  require(bound >= 1 && bound <= 5, "linf suite bound must be between 1 and 5");
  const auto length = static_cast<std::size_t>(bound);
  const std::vector<SpectrumParams> cases{
      SpectrumParams::normalized(Rational::parse("3/2")),
      SpectrumParams::normalized(Rational(2), Side::Minus),
      SpectrumParams::normalized(Rational(2), Side::Plus),
      SpectrumParams::normalized(Rational(3)),
  };
  std::size_t checked = 0;
  for (const auto& p : cases) {
    const auto eps = sft::epsilon(p);
    const auto eta = sft::eta(p, length);
    const auto left = linf::compare_morphisms(linf::compose(eta, eps, length),
                                              linf::LinfMorphism::identity(eps.source()), length,
                                              sft::orbit_window(6));
    const auto right = linf::compare_morphisms(linf::compose(eps, eta, length),
                                               linf::LinfMorphism::identity(eta.source()), length,
                                               sft::descendant_window(6));
    checked += left.words_checked + right.words_checked;
    if (!left.ok || !right.ok) {
      return {{"ok", false}, {"checked", checked}, {"witness", p.str() + ": " + (left.ok ? right : left).detail}};
    }
  }
  return {{"ok", true}, {"checked", checked}};
}

json check_aug(int bound, int length) {
  const auto report = rounding::verify_aug(bound, length);
  json out = {{"ok", report.ok},
              {"words_checked", report.words_checked},
              {"structure_words_checked", report.structure_words_checked}};
  if (report.witness) out["witness"] = report.detail;
  return out;
}

json check_jumps(int bound) {
  require(bound >= 2 && bound <= 14, "jumps suite bound must be between 2 and 14");
  const auto hits = support_scan(bound);
  std::size_t compared = 0;
  for (const auto& h : hits) {
    if (h.indices.size() == 2) {
      ++compared;
      if (jump_pants(h.a, h.indices[0], h.indices[1]) != h.value) {
        return {{"ok", false}, {"hits", hits.size()}, {"witness", "pants route at a=" + h.a.str()}};
      }
    }
    if (h.indices.size() <= 3) {
      ++compared;
      if (jump_via_xi(h.a, h.indices) != h.value) {
        return {{"ok", false}, {"hits", hits.size()}, {"witness", "xi route at a=" + h.a.str()}};
      }
    }
  }
  return {{"ok", true}, {"hits", hits.size()}, {"route_comparisons", compared}};
}

json check_genfun(int bound) {
  const auto report = genfun_check(bound);
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back(
        {{"d", r.d}, {"coefficient", r.coefficient.str()}, {"expected", r.expected.str()}, {"ok", r.ok}});
  }
  return {{"ok", report.ok}, {"rows", rows}};
}

Output cmd_check(const std::string& suite, int bound, int length) {
  json result;
  if (suite == "gamma") {
    result = check_gamma(bound);
  } else if (suite == "linf") {
    result = check_linf(bound);
  } else if (suite == "aug") {
    result = check_aug(bound, length);
  } else if (suite == "jumps") {
    result = check_jumps(bound);
  } else if (suite == "genfun") {
    result = check_genfun(bound);
  } else {
    throw InvalidInput("unknown suite '" + suite + "' (expected gamma, linf, aug, jumps or genfun)");
  }
  Output out;
  out.ok = result["ok"].get<bool>();
  out.payload = {{"command", "check"},
                 {"input", {{"suite", suite}, {"bound", bound}, {"length", length}}},
                 {"result", result}};
  return out;
}

void write_error(std::ostream& err, const std::string& type, const std::string& message) {
  err << json{{"error", {{"type", type}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ellipsoidal superpotentials in exact rational arithmetic", "superpot"};
  app.require_subcommand(1);

  std::string a_text;
  std::string side;
  std::string k_text;
  std::string format = "json";
  std::string orbits_text;
  std::string target = "cp2";
  std::string min_text;
  std::string max_text;
  std::string route = "recursive";
  std::string quantity = "wt_T";
  std::string suite;
  int count = 0;
  int d = 0;
  int bound = 4;
  int length = 4;
  bool refine = false;

  auto* gamma_cmd = app.add_subcommand("gamma", "lattice path points");
  gamma_cmd->add_option("--a", a_text, "ellipsoid parameters r,...,r with optional +/- suffix")->required();
  gamma_cmd->add_option("--k", k_text, "index n or range n..m")->required();
  gamma_cmd->add_option("--side", side, "plus, minus or canonical");
  gamma_cmd->add_option("--format", format, "json or csv");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "orbits in order of action");
  spectrum_cmd->add_option("--a", a_text)->required();
  spectrum_cmd->add_option("--count", count)->required();
  spectrum_cmd->add_option("--side", side);
  spectrum_cmd->add_option("--format", format);

  auto* descendant_cmd = app.add_subcommand("descendant", "ellipsoid stationary descendant");
  descendant_cmd->add_option("--a", a_text)->required();
  descendant_cmd->add_option("--orbits", orbits_text, "orbit indices i1,i2,...")->required();
  descendant_cmd->add_option("--side", side);

  auto* super_cmd = app.add_subcommand("superpotential", "wt_T, mult and T");
  super_cmd->add_option("--target", target);
  super_cmd->add_option("--d", d)->required();
  super_cmd->add_option("--a", a_text, "a or r,r with optional +/- suffix")->required();
  super_cmd->add_option("--side", side);

  auto* table_cmd = app.add_subcommand("table", "piecewise-constant table in a");
  table_cmd->add_option("--target", target);
  table_cmd->add_option("--d", d)->required();
  table_cmd->add_option("--min", min_text)->required();
  table_cmd->add_option("--max", max_text, "upper end, or inf");
  table_cmd->add_flag("--refine-orbit-id", refine, "also sample where o_{3d-1} changes identity");
  table_cmd->add_option("--quantity", quantity, "wt_T or T");
  table_cmd->add_option("--format", format);

  auto* jumps_cmd = app.add_subcommand("jumps", "infinitesimal cobordism counts");
  jumps_cmd->add_option("--a", a_text)->required();
  jumps_cmd->add_option("--orbits", orbits_text)->required();
  jumps_cmd->add_option("--route", route, "closed, recursive, xi or all");

  auto* bound_cmd = app.add_subcommand("bound", "embedding obstruction");
  bound_cmd->add_option("--target", target);
  bound_cmd->add_option("--d", d)->required();
  bound_cmd->add_option("--a", a_text)->required();
  bound_cmd->add_option("--side", side);

  auto* check_cmd = app.add_subcommand("check", "self-check suites");
  check_cmd->add_option("--suite", suite, "gamma, linf, aug, jumps or genfun")->required();
  check_cmd->add_option("--bound", bound);
  check_cmd->add_option("--length", length, "word length for the aug suite");

  std::vector<const char*> argv{"superpot"};
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    write_error(err, "invalid_input", e.what());
    return 1;
  }

  try {
    Output result;
    if (gamma_cmd->parsed()) {
      result = cmd_gamma(a_text, side, k_text, format);
    } else if (spectrum_cmd->parsed()) {
      result = cmd_spectrum(a_text, side, count, format);
    } else if (descendant_cmd->parsed()) {
      result = cmd_descendant(a_text, side, orbits_text);
    } else if (super_cmd->parsed()) {
      result = cmd_superpotential(target, d, a_text, side);
    } else if (table_cmd->parsed()) {
      result = cmd_table(target, d, min_text, max_text, refine, quantity, format);
    } else if (jumps_cmd->parsed()) {
      result = cmd_jumps(a_text, orbits_text, route);
    } else if (bound_cmd->parsed()) {
      result = cmd_bound(target, d, a_text, side);
    } else {
      result = cmd_check(suite, bound, length);
    }
    if (!result.csv.empty()) {
      out << result.csv;
    } else {
      out << result.payload.dump() << '\n';
    }
    return result.ok ? 0 : 2;
  } catch (const InvalidInput& e) {
    write_error(err, "invalid_input", e.what());
    return 1;
  } catch (const InvariantViolation& e) {
    write_error(err, "invariant_violation", e.what());
    return 2;
  } catch (const std::exception& e) {
    write_error(err, "internal_error", e.what());
    return 2;
  }
}

}  // namespace superpot
