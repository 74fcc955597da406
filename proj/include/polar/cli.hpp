#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polar/polar.hpp"

namespace polar::cli {

using Json = nlohmann::json;

/// Bad command line or malformed input; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string command;
  std::optional<std::string> ideal;  ///< absent: fuzz mode for check commands
  std::optional<std::vector<std::string>> vars;
  std::optional<std::string> prime;
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::size_t max_facets = 7;
  Exponent max_degree = 4;
};

/// verdict strings that make the process exit with 1.
inline bool is_failure(const std::string& verdict) { return verdict == "fail"; }

struct Report {
  Json doc;

  int exit_code() const { return is_failure(doc.value("verdict", "")) ? 1 : 0; }

  /// Single JSON document; nlohmann objects keep keys sorted.
  std::string machine() const { return doc.dump(2); }

  /// One `path: value` line per leaf of the same document.
  std::string human() const {
    std::ostringstream os;
    flatten(os, "", doc);
    return os.str();
  }

 private:
  static void flatten(std::ostringstream& os, const std::string& path, const Json& j) {
    if (j.is_object()) {
      if (j.empty()) os << path << ": {}\n";
      for (const auto& [k, v] : j.items()) flatten(os, path.empty() ? k : path + "." + k, v);
    } else if (j.is_array()) {
      if (j.empty()) os << path << ": []\n";
      for (std::size_t i = 0; i < j.size(); ++i) flatten(os, path + "[" + std::to_string(i) + "]", j[i]);
    } else {
      os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
  }
};

namespace detail {

inline Json ideal_json(const MonomialIdeal& I) {
  Json gens = Json::array();
  for (const auto& g : I.generators()) gens.push_back(to_string(g));
  return gens;
}

inline Json ring_json(const RingPtr& r) { return r->names(); }

template <typename T>
Json strings_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json sets_json(const std::vector<VertexSet>& sets, const Ring& r) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(to_string(s, r));
  return out;
}

inline Json complex_json(const SimplicialComplex& D) { return sets_json(D.facets(), *D.vertices()); }

inline MonomialIdeal parse(const Options& o) {
  if (!o.ideal) throw UsageError("command '" + o.command + "' needs an ideal");
  try {
    return parse_ideal(*o.ideal, o.vars);
  } catch (const ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
}

inline MonomialPrime parse_prime_option(const Options& o, const RingPtr& ring) {
  if (!o.prime) throw UsageError("command '" + o.command + "' needs --prime");
  try {
    return polar::parse_prime(*o.prime, ring);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad --prime: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(std::string("bad --prime: ") + e.what());
  }
}

/// Square-free input is taken as a facet ideal; anything else is replaced by
/// its polarization.
inline MonomialIdeal square_free_input(const MonomialIdeal& I, Json& inputs) {
  if (I.is_square_free()) return I;
  auto P = polarize_ideal(I).ideal;
  inputs["polarized"] = ideal_json(P);
  return P;
}

/// Reads an ideal in x[i,j] variables and builds its polar ring. Base
/// names come from --vars (after the polar names are collected) or x1..xn.
inline std::pair<MonomialIdeal, PolarRing> parse_polar(const Options& o) {
  if (!o.ideal) throw UsageError("depolarize needs an ideal");
  MonomialIdeal raw = [&] {
    try {
      return parse_ideal(*o.ideal);
    } catch (const ParseError& e) {
      throw UsageError(std::string("parse error: ") + e.what());
    }
  }();
  static const std::regex polar_var(R"(x\[(\d+),(\d+)\])");
  std::vector<Exponent> slots;
  for (const auto& name : raw.ring()->names()) {
    std::smatch m;
    if (!std::regex_match(name, m, polar_var)) throw UsageError("'" + name + "' is not a polar variable x[i,j]");
    const auto i = std::stoul(m[1]), j = std::stoul(m[2]);
    if (i == 0 || j == 0) throw UsageError("polar indices start at 1");
    if (slots.size() < i) slots.resize(i, 1);
    slots[i - 1] = std::max<Exponent>(slots[i - 1], static_cast<Exponent>(j));
  }
  RingPtr base;
  if (o.vars) {
    if (o.vars->size() < slots.size()) throw UsageError("--vars names fewer base variables than the input uses");
    slots.resize(o.vars->size(), 1);
    base = make_ring(*o.vars);
  } else {
    base = make_ring("x", slots.size());
  }
  PolarRing ring(base, slots);
  return {parse_ideal(*o.ideal, ring.ring()->names()), ring};
}

inline Json component_json(const std::vector<IrreducibleComponent>& comps) { return strings_json(comps); }

inline Json prime_heights(const std::vector<MonomialPrime>& ps) {
  Json out = Json::object();
  for (const auto& p : ps) out[std::to_string(p.height())].push_back(to_string(p));
  return out;
}

inline std::string verdict_string(Verdict v) { return to_string(v); }

struct Context {
  const Options& opt;
  Json inputs = Json::object();
  Json results = Json::object();
  std::string verdict = "ok";
  Json witness = nullptr;
};

// Single-ideal theorem checks, shared by direct and fuzz mode. Each returns a
// verdict string and fills `results` / `witness`.
using Check = std::function<std::string(const MonomialIdeal&, const Options&, Json&, Json&)>;

inline std::string konig(const MonomialIdeal& I, const Options& o, Json& results, Json&) {
  auto r = konig_check(I, std::max<std::size_t>(o.max_facets, kDefaultMaxFacets));
  results["height"] = r.height;
  results["beta"] = r.beta;
  results["tree"] = r.tree;
  return to_string(r.verdict);
}

inline std::string joint_removal(const MonomialIdeal& I, const Options&, Json& results, Json& witness) {
  auto r = joint_removal_check(I);
  results["applicable"] = r.applicable;
  results["height"] = r.height;
  Json drops = Json::array();
  std::vector<Monomial> joints;
  for (const auto& d : r.drops) {
    drops.push_back({{"generator", to_string(d.generator)},
                     {"leaves", strings_json(d.leaves)},
                     {"height_after", d.height_after},
                     {"preserved", d.preserved}});
    joints.push_back(d.generator);
    if (!d.preserved && witness.is_null()) witness = to_string(d.generator);
  }
  results["drops"] = drops;
  if (r.applicable && joints.size() <= 10) {
    Json combos = Json::array();
    for (const auto& [J, h] : heights_after_dropping(I, joints)) combos.push_back({{"ideal", ideal_json(J)}, {"height", h}});
    results["drop_combinations"] = combos;
  }
  return to_string(r.verdict);
}

/// Every variable-subset prime containing I, or just --prime.
inline std::string localization(const MonomialIdeal& I, const Options& o, Json& results, Json& witness) {
  std::vector<MonomialPrime> primes;
  if (o.prime) {
    primes.push_back(parse_prime_option(o, I.ring()));
    if (!primes.back().contains(I)) throw UsageError("prime " + to_string(primes.back()) + " does not contain the ideal");
  } else {
    const std::size_t n = I.ring()->size();
    if (n > 16) throw UsageError("too many variables to enumerate primes; pass --prime");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> vars;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) vars.push_back(i);
      MonomialPrime p(I.ring(), vars);
      if (p.contains(I)) primes.push_back(std::move(p));
    }
    std::sort(primes.begin(), primes.end());
  }
  const std::size_t budget = std::max<std::size_t>(o.max_facets, kDefaultMaxFacets);
  Verdict overall = Verdict::NoAssertion;
  Json rows = Json::array();
  for (const auto& p : primes) {
    auto r = localization_forest_check(I, p, budget);
    rows.push_back({{"prime", to_string(p)},
                    {"localized", ideal_json(r.localized)},
                    {"polar_localized", ideal_json(r.polar_localized)},
                    {"polar_then_local", ideal_json(r.polar_then_local)},
                    {"commutes", r.commutes},
                    {"forest", r.forest.forest},
                    {"verdict", to_string(r.verdict)}});
    if (r.verdict == Verdict::Fail) {
      overall = Verdict::Fail;
      if (witness.is_null()) witness = to_string(p);
    } else if (r.verdict == Verdict::Pass && overall != Verdict::Fail) {
      overall = Verdict::Pass;
    }
  }
  results["tree_hypothesis"] = is_tree(polar_complex(I), budget);
  results["localizations"] = rows;
  return to_string(overall);
}

inline std::string appendix(const MonomialIdeal& I, const Options& o, Json& results, Json& witness) {
  auto c = verify_filtration_ass_strata(I, std::max<std::size_t>(o.max_facets, kDefaultMaxFacets));
  results["forest_hypothesis"] = c.forest_hypothesis;
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json sub = Json::array();
    for (const auto& a : s.ass_of_submodule) sub.push_back({{"prime", to_string(a.prime)}, {"witness", to_string(a.witness)}});
    steps.push_back({{"index", s.index},
                     {"bound", s.bound},
                     {"term", ideal_json(s.term)},
                     {"ass_quotient", strings_json(s.ass_of_quotient)},
                     {"strata_at_most_bound", strings_json(s.strata_below)},
                     {"quotient_matches", s.quotient_matches},
                     {"ass_submodule", sub},
                     {"strata_at_least_bound", strings_json(s.strata_above)},
                     {"submodule_matches", s.submodule_matches},
                     {"decomposition_matches", s.decomposition_matches}});
    if (witness.is_null() && !(s.quotient_matches && s.submodule_matches && s.decomposition_matches))
      witness = s.index;
  }
  results["steps"] = steps;
  if (c.passed()) return "pass";
  return c.forest_hypothesis ? "fail" : "no-assertion";
}

inline std::string cm(const MonomialIdeal& I, const Options& o, Json& results, Json&) {
  auto v = cm_tree_criterion(I, std::max<std::size_t>(o.max_facets, kDefaultMaxFacets));
  results["cm"] = to_string(v);
  return v == CmVerdict::Inapplicable ? "inapplicable" : "ok";
}

inline std::string scm(const MonomialIdeal& I, const Options& o, Json& results, Json&) {
  auto r = sequentially_cm_verdict(I, std::max<std::size_t>(o.max_facets, kDefaultMaxFacets));
  results["scm"] = to_string(r.verdict);
  results["forest"] = r.forest;
  results["connected"] = r.connected;
  results["forest_extension"] = r.forest_extension;
  return "ok";
}

inline const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table{
      {"check-konig", konig},         {"check-joint-removal", joint_removal},
      {"check-localization", localization}, {"check-appendix", appendix},
      {"cm-verdict", cm},             {"scm-verdict", scm},
  };
  return table;
}

/// Random ideals for fuzz mode: depolarized random forests, and plain random
/// ideals of bounded degree.
inline void fuzz(Context& ctx, const Check& check) {
  const auto& o = ctx.opt;
  Rng rng(o.seed);
  RandomForestOptions fo;
  fo.max_facets = std::max<std::size_t>(1, std::min<std::size_t>(o.max_facets, kDefaultMaxFacets));
  RandomIdealOptions io;
  io.max_degree = std::max<Exponent>(1, o.max_degree);
  std::size_t failures = 0, asserted = 0;
  std::map<std::string, std::size_t> counts;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const bool forest_family = t % 2 == 0;
    MonomialIdeal I = forest_family ? random_depolarization(rng, random_forest(rng, fo))
                                    : random_ideal(rng, make_ring("x", io.max_variables), io);
    Options local = o;
    local.prime.reset();
    Json results = Json::object(), witness = nullptr;
    std::string v = check(I, local, results, witness);
    ++counts[v];
    if (v == "pass" || v == "fail") ++asserted;
    if (v == "fail") {
      ++failures;
      if (ctx.witness.is_null()) ctx.witness = {{"ideal", to_text(I)}, {"results", results}, {"detail", witness}};
    }
  }
  ctx.inputs["seed"] = o.seed;
  ctx.inputs["trials"] = o.trials;
  ctx.inputs["max_facets"] = fo.max_facets;
  ctx.inputs["max_degree"] = io.max_degree;
  ctx.results["asserted"] = asserted;
  ctx.results["failures"] = failures;
  ctx.results["verdicts"] = counts;
  ctx.verdict = failures ? "fail" : (asserted ? "pass" : "no-assertion");
}

inline void run_command(Context& ctx) {
  const auto& o = ctx.opt;
  const auto& cmd = o.command;

  if (auto it = checks().find(cmd); it != checks().end()) {
    if (!o.ideal) return fuzz(ctx, it->second);
    auto I = parse(o);
    if (I.is_zero()) throw UsageError("the zero ideal is not supported");
    ctx.inputs["ideal"] = ideal_json(I);
    ctx.inputs["ring"] = ring_json(I.ring());
    if (o.prime) ctx.inputs["prime"] = *o.prime;
    ctx.verdict = it->second(I, o, ctx.results, ctx.witness);
    return;
  }

  if (cmd == "depolarize") {
    auto [Q, S] = parse_polar(o);
    ctx.inputs["ideal"] = ideal_json(Q);
    ctx.inputs["ring"] = ring_json(S.ring());
    auto I = depolarize_ideal(Q, S);
    ctx.results["ideal"] = ideal_json(I);
    ctx.results["ring"] = ring_json(I.ring());
    ctx.results["text"] = to_text(I);
    return;
  }

  auto I = parse(o);
  ctx.inputs["ideal"] = ideal_json(I);
  ctx.inputs["ring"] = ring_json(I.ring());
  if (I.is_zero()) throw UsageError("the zero ideal is not supported");

  if (cmd == "polarize") {
    auto [S, P] = polarize_ideal(I);
    ctx.results["ideal"] = ideal_json(P);
    ctx.results["ring"] = ring_json(S.ring());
    ctx.results["slots"] = S.slots();
    ctx.results["sequence"] = strings_json(polarization_sequence(S));
    ctx.results["text"] = to_text(P);
  } else if (cmd == "decompose") {
    ctx.results["components"] = component_json(irreducible_decomposition(I));
    ctx.results["polar_components"] = strings_json(polar_decomposition_general(I));
  } else if (cmd == "ass") {
    Json rows = Json::array();
    for (const auto& a : ass_quotient(I)) rows.push_back({{"prime", to_string(a.prime)}, {"witness", to_string(a.witness)}});
    ctx.results["associated"] = rows;
    ctx.results["minimal"] = strings_json(minimal_primes(I));
    ctx.results["by_height"] = prime_heights(associated_primes(I));
    auto corr = ass_correspondence_report(I);
    ctx.results["polar_associated"] = strings_json(corr.polar_ass);
    ctx.results["projection_matches"] = corr.projection_matches;
    ctx.results["saturated"] = corr.saturated;
    ctx.results["strictly_saturated"] = corr.strictly_saturated;
    ctx.verdict = corr.passed() ? "pass" : "fail";
  } else if (cmd == "height") {
    ctx.results["height"] = height(I);
    ctx.results["minimal"] = strings_json(minimal_primes(I));
  } else if (cmd == "beta") {
    ctx.results["beta"] = beta_coprime(I);
  } else if (cmd == "localize") {
    auto p = parse_prime_option(o, I.ring());
    ctx.inputs["prime"] = to_string(p);
    auto r = localize(I, p);
    if (is_unit(r))
      ctx.results["ideal"] = "unit";
    else
      ctx.results["ideal"] = ideal_json(std::get<MonomialIdeal>(r));
  } else if (cmd == "dual") {
    auto J = square_free_input(I, ctx.inputs);
    auto D = nonface_complex(J);
    ctx.results["nonface_complex"] = complex_json(D);
    auto dual = alexander_dual_complex(D);
    ctx.results["dual_complex"] = dual.is_void() ? Json("void") : complex_json(dual);
    ctx.results["ideal"] = ideal_json(nonface_ideal(dual));
  } else if (cmd == "complex-info" || cmd == "is-tree" || cmd == "leaves" || cmd == "covers") {
    auto J = square_free_input(I, ctx.inputs);
    auto D = facet_complex(J);
    const auto& V = *D.vertices();
    if (cmd == "complex-info") {
      ctx.results["facets"] = complex_json(D);
      ctx.results["alpha"] = alpha(D);
      ctx.results["beta"] = beta_complex(D);
      ctx.results["unmixed"] = is_unmixed(D);
      ctx.results["connected"] = is_connected(D);
      auto N = nonface_ideal(D);
      ctx.results["nonface_ideal"] = N.is_zero() ? Json::array() : ideal_json(N);
      if (D.isolated().any()) ctx.results["isolated"] = to_string(D.isolated(), V);
      if (D.facet_count() <= std::max<std::size_t>(o.max_facets, kDefaultMaxFacets))
        ctx.results["forest"] = is_forest(D, std::max<std::size_t>(o.max_facets, kDefaultMaxFacets)).forest;
    } else if (cmd == "is-tree") {
      auto r = is_forest(D, std::max<std::size_t>(o.max_facets, kDefaultMaxFacets));
      ctx.results["forest"] = r.forest;
      ctx.results["connected"] = is_connected(D);
      ctx.results["tree"] = r.forest && is_connected(D);
      if (!r.forest) {
        std::vector<VertexSet> w;
        for (auto k : r.witness) w.push_back(D.facet(k));
        ctx.witness = sets_json(w, V);
      }
    } else if (cmd == "leaves") {
      Json rows = Json::array();
      for (std::size_t k = 0; k < D.facet_count(); ++k) {
        std::vector<VertexSet> js;
        for (auto g : joints(D, k)) js.push_back(D.facet(g));
        rows.push_back({{"facet", to_string(D.facet(k), V)},
                        {"leaf", is_leaf(D, k)},
                        {"joints", is_leaf(D, k) ? sets_json(js, V) : Json::array()},
                        {"free_vertices", to_string(free_vertices(D, D.facet(k)), V)}});
      }
      ctx.results["facets"] = rows;
    } else {
      ctx.results["covers"] = sets_json(minimal_vertex_covers(D), V);
      ctx.results["alpha"] = alpha(D);
      ctx.results["unmixed"] = is_unmixed(D);
    }
  } else if (cmd == "filtration") {
    auto f = scm_filtration(I);
    Json chain = Json::array();
    for (std::size_t i = 0; i < f.chain.size(); ++i)
      chain.push_back({{"bound", f.bounds[i]}, {"ideal", ideal_json(f.chain[i])}});
    ctx.results["chain"] = chain;
    Json strata = Json::object();
    for (const auto& [h, comps] : f.strata.strata) strata[std::to_string(h)] = component_json(comps);
    ctx.results["strata"] = strata;
    ctx.results["h"] = f.strata.h;
    ctx.results["s"] = f.strata.s;
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "polarize", "depolarize", "decompose",   "ass",         "height",          "beta",
      "localize", "dual",       "complex-info", "is-tree",    "leaves",          "covers",
      "filtration", "check-konig", "check-joint-removal", "check-localization", "cm-verdict",
      "scm-verdict", "check-appendix"};
  return names;
}

/// Runs one command. UsageError for bad input; library domain errors on
/// malformed input are converted to UsageError as well.
inline Report run(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  if (std::find(commands().begin(), commands().end(), opt.command) == commands().end())
    throw UsageError("unknown command '" + opt.command + "'");
  detail::Context ctx{opt};
  try {
    detail::run_command(ctx);
  } catch (const UsageError&) {
    throw;
  } catch (const std::logic_error& e) {
    throw UsageError(e.what());
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Report r;
  r.doc = {{"command", opt.command},
           {"inputs", ctx.inputs},
           {"results", ctx.results},
           {"verdict", ctx.verdict},
           {"witness", ctx.witness},
           {"elapsed_ms", ms}};
  return r;
}

}  // namespace polar::cli
