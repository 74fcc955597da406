#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polar/decomposition.hpp"
#include "polar/polarization.hpp"
#include "polar/simplicial.hpp"

namespace polar {

/// Irreducible components of I grouped by height (size of support).
struct HeightStrata {
  std::map<std::size_t, std::vector<IrreducibleComponent>> strata;
  std::size_t h = 0;  ///< height(I), the smallest stratum
  std::size_t s = 0;  ///< largest component height

  /// Stratum heights, largest first.
  std::vector<std::size_t> descending_heights() const {
    std::vector<std::size_t> out;
    for (auto it = strata.rbegin(); it != strata.rend(); ++it) out.push_back(it->first);
    return out;
  }

  std::vector<IrreducibleComponent> components_up_to(std::size_t bound) const {
    std::vector<IrreducibleComponent> out;
    for (const auto& [ht, comps] : strata)
      if (ht <= bound) out.insert(out.end(), comps.begin(), comps.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<MonomialPrime> primes_where(auto pred) const {
    std::set<MonomialPrime> out;
    for (const auto& [ht, comps] : strata)
      if (pred(ht))
        for (const auto& c : comps) out.insert(c.radical());
    return {out.begin(), out.end()};
  }
};

inline HeightStrata height_strata(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError();
  HeightStrata hs;
  for (auto& c : irreducible_decomposition(I)) {
    auto ht = c.height();
    hs.strata[ht].push_back(std::move(c));
  }
  hs.h = hs.strata.begin()->first;
  hs.s = hs.strata.rbegin()->first;
  return hs;
}

/// I = I_0 < I_1 < ... where each term intersects the components of height
/// at most its bound. Bounds run through the stratum heights from s down to
/// h, so no two terms coincide.
struct Filtration {
  std::vector<MonomialIdeal> chain;
  std::vector<std::size_t> bounds;
  HeightStrata strata;
};

inline Filtration scm_filtration(const MonomialIdeal& I) {
  Filtration f;
  f.strata = height_strata(I);
  for (auto bound : f.strata.descending_heights()) {
    f.chain.push_back(intersect_components(f.strata.components_up_to(bound)));
    f.bounds.push_back(bound);
  }
  return f;
}

struct FiltrationStep {
  std::size_t index = 0;
  std::size_t bound = 0;
  MonomialIdeal term;
  std::vector<MonomialPrime> ass_of_quotient;  ///< Ass(R/I_i), recomputed
  std::vector<MonomialPrime> strata_below;     ///< strata of height <= bound
  bool quotient_matches = false;
  std::optional<MonomialIdeal> next;            ///< I_{i+1}; empty means R
  std::vector<AssociatedPrime> ass_of_submodule;  ///< Ass(I_{i+1}/I)
  std::vector<MonomialPrime> strata_above;        ///< strata of height >= bound
  bool submodule_matches = false;
  bool decomposition_matches = false;  ///< I_i decomposes into exactly its strata
};

struct FiltrationCheck {
  Filtration filtration;
  bool forest_hypothesis = false;
  std::vector<FiltrationStep> steps;

  bool passed() const {
    return std::all_of(steps.begin(), steps.end(), [](const FiltrationStep& s) {
      return s.quotient_matches && s.submodule_matches && s.decomposition_matches;
    });
  }
};

namespace detail {

inline std::vector<MonomialPrime> primes_of(const std::vector<AssociatedPrime>& v) {
  std::vector<MonomialPrime> out;
  for (const auto& a : v) out.push_back(a.prime);
  return out;
}

}  // namespace detail

/// For every term I_i of the filtration: Ass(R/I_i) equals the strata of
/// height <= bound, Ass(I_{i+1}/I) equals the strata of height >= bound, and
/// the irreducible decomposition of I_i is exactly those low strata.
inline FiltrationCheck verify_filtration_ass_strata(const MonomialIdeal& I,
                                                    std::size_t max_facets = kDefaultMaxFacets) {
  FiltrationCheck out{scm_filtration(I), false, {}};
  const auto& f = out.filtration;
  const auto P = polarize_ideal(I).ideal;
  const auto D = facet_complex(P);
  out.forest_hypothesis = D.facet_count() <= max_facets && is_forest(D, max_facets).forest;

  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    const std::size_t bound = f.bounds[i];
    FiltrationStep step{i, bound, f.chain[i], {}, {}, false, std::nullopt, {}, {}, false, false};
    step.ass_of_quotient = associated_primes(f.chain[i]);
    step.strata_below = f.strata.primes_where([&](std::size_t ht) { return ht <= bound; });
    step.quotient_matches = step.ass_of_quotient == step.strata_below;

    if (i + 1 < f.chain.size()) {
      step.next = f.chain[i + 1];
      step.ass_of_submodule = ass_quotient(I, *step.next);
    } else {
      step.ass_of_submodule = ass_quotient(I);
    }
    step.strata_above = f.strata.primes_where([&](std::size_t ht) { return ht >= bound; });
    step.submodule_matches = detail::primes_of(step.ass_of_submodule) == step.strata_above;

    step.decomposition_matches = irreducible_decomposition(f.chain[i]) == f.strata.components_up_to(bound);
    out.steps.push_back(std::move(step));
  }
  return out;
}

/// Facet complex of the polarization of I.
inline SimplicialComplex polar_complex(const MonomialIdeal& I) { return facet_complex(polarize_ideal(I).ideal); }

enum class Verdict { Pass, Fail, NoAssertion, Inapplicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NoAssertion: return "no-assertion";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

struct KonigReport {
  std::size_t height = 0;
  std::size_t beta = 0;
  bool tree = false;
  Verdict verdict = Verdict::NoAssertion;
};

/// When P(I) is a tree, height(I) must equal beta(I).
inline KonigReport konig_check(const MonomialIdeal& I, std::size_t max_facets = kDefaultMaxFacets) {
  KonigReport r;
  r.height = height(I);
  r.beta = beta_coprime(I);
  r.tree = is_tree(polar_complex(I), max_facets);
  if (r.tree) r.verdict = r.height == r.beta ? Verdict::Pass : Verdict::Fail;
  return r;
}

namespace detail {

/// Facet index in the polar complex for each generator of I.
inline std::vector<std::size_t> generator_facets(const MonomialIdeal& I, const PolarRing& ring,
                                                 const SimplicialComplex& D) {
  std::vector<std::size_t> out;
  for (const auto& g : I.generators()) {
    auto pm = polarize_monomial(g, ring);
    out.push_back(*D.facet_index(make_vertex_set(D.vertex_count(), pm.support())));
  }
  return out;
}

inline MonomialIdeal drop_generators(const MonomialIdeal& I, const std::vector<std::size_t>& drop) {
  std::vector<Monomial> kept;
  for (std::size_t k = 0; k < I.size(); ++k)
    if (std::find(drop.begin(), drop.end(), k) == drop.end()) kept.push_back(I.generators()[k]);
  return minimalize(I.ring(), std::move(kept));
}

}  // namespace detail

struct JointDrop {
  Monomial generator;                 ///< generator whose polarization is a joint
  std::vector<Monomial> leaves;       ///< generators polarizing to leaves it is a joint of
  std::size_t height_after = 0;
  bool preserved = false;
};

struct JointRemovalReport {
  bool applicable = false;
  std::size_t height = 0;
  std::vector<JointDrop> drops;
  Verdict verdict = Verdict::Inapplicable;
};

/// Drops, one at a time, each generator whose polarization is a joint of a
/// leaf of the polar complex and compares heights.
inline JointRemovalReport joint_removal_check(const MonomialIdeal& I) {
  JointRemovalReport r;
  r.height = height(I);
  auto [ring, P] = polarize_ideal(I);
  const auto D = facet_complex(P);
  const auto facet_of = detail::generator_facets(I, ring, D);
  auto generator_of = [&](std::size_t facet) {
    return static_cast<std::size_t>(std::find(facet_of.begin(), facet_of.end(), facet) - facet_of.begin());
  };

  std::map<std::size_t, std::vector<std::size_t>> leaves_by_joint;
  for (std::size_t k = 0; k < D.facet_count(); ++k) {
    if (!is_leaf(D, k)) continue;
    for (auto g : joints(D, k)) leaves_by_joint[g].push_back(k);
  }
  if (leaves_by_joint.empty()) return r;

  r.applicable = true;
  r.verdict = Verdict::Pass;
  for (const auto& [joint, leaves] : leaves_by_joint) {
    const auto gen = generator_of(joint);
    JointDrop d{I.generators()[gen], {}, 0, false};
    for (auto leaf : leaves) d.leaves.push_back(I.generators()[generator_of(leaf)]);
    d.height_after = height(detail::drop_generators(I, {gen}));
    d.preserved = d.height_after == r.height;
    if (!d.preserved) r.verdict = Verdict::Fail;
    r.drops.push_back(std::move(d));
  }
  std::sort(r.drops.begin(), r.drops.end(),
            [](const JointDrop& a, const JointDrop& b) { return LexGreater{}(a.generator, b.generator); });
  return r;
}

/// Heights of I with every subset of `drop` removed (bitmask order). Subsets
/// that would leave the zero ideal are skipped.
inline std::vector<std::pair<MonomialIdeal, std::size_t>> heights_after_dropping(const MonomialIdeal& I,
                                                                                 const std::vector<Monomial>& drop) {
  std::vector<std::pair<MonomialIdeal, std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << drop.size()); ++mask) {
    std::vector<Monomial> kept;
    for (const auto& g : I.generators()) {
      bool dropped = false;
      for (std::size_t k = 0; k < drop.size(); ++k)
        if ((mask >> k & 1) && drop[k] == g) dropped = true;
      if (!dropped) kept.push_back(g);
    }
    if (kept.empty()) continue;
    auto J = minimalize(I.ring(), std::move(kept));
    auto h = height(J);
    out.emplace_back(std::move(J), h);
  }
  return out;
}

struct LocalizationReport {
  bool tree_hypothesis = false;
  MonomialIdeal localized;           ///< I_p
  MonomialIdeal polar_localized;     ///< P(I_p)
  ForestResult forest;               ///< forest check of P(I_p)
  MonomialIdeal polar_then_local;    ///< P(I) localized at P(p)
  bool commutes = false;             ///< P(I_p) equals P(I)_{P(p)} in the polar ring of I
  Verdict verdict = Verdict::NoAssertion;
};

/// Localizes I at a variable prime p containing it and checks that P(I_p)
/// is a forest; the assertion is only made when P(I) is a tree.
inline LocalizationReport localization_forest_check(const MonomialIdeal& I, const MonomialPrime& p,
                                                    std::size_t max_facets = kDefaultMaxFacets) {
  if (!p.contains(I)) throw std::invalid_argument("prime " + to_string(p) + " does not contain the ideal");
  auto [ring, P] = polarize_ideal(I);
  const bool tree = is_tree(facet_complex(P), max_facets);
  auto Ip = std::get<MonomialIdeal>(localize(I, p));
  auto PIp = polarize_ideal(Ip).ideal;
  auto forest = is_forest(facet_complex(PIp), max_facets);
  auto local = std::get<MonomialIdeal>(localize(P, map_prime(p, ring)));
  const bool commutes = polarize_ideal(Ip, ring) == local;
  LocalizationReport r{tree, Ip, PIp, forest, local, commutes, Verdict::NoAssertion};
  if (tree) r.verdict = forest.forest ? Verdict::Pass : Verdict::Fail;
  return r;
}

enum class CmVerdict { CohenMacaulay, NotCohenMacaulay, Inapplicable };

inline std::string to_string(CmVerdict v) {
  switch (v) {
    case CmVerdict::CohenMacaulay: return "cohen-macaulay";
    case CmVerdict::NotCohenMacaulay: return "not-cohen-macaulay";
    case CmVerdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

/// Under a tree polarization, R/I is Cohen-Macaulay exactly when I is unmixed.
inline CmVerdict cm_tree_criterion(const MonomialIdeal& I, std::size_t max_facets = kDefaultMaxFacets) {
  if (!is_tree(polar_complex(I), max_facets)) return CmVerdict::Inapplicable;
  const auto h = height(I);
  const auto ass = associated_primes(I);
  const bool unmixed = std::all_of(ass.begin(), ass.end(), [&](const MonomialPrime& p) { return p.height() == h; });
  return unmixed ? CmVerdict::CohenMacaulay : CmVerdict::NotCohenMacaulay;
}

enum class ScmVerdict { SequentiallyCM, Unknown };

inline std::string to_string(ScmVerdict v) { return v == ScmVerdict::SequentiallyCM ? "sequentially-cm" : "unknown"; }

struct ScmReport {
  ScmVerdict verdict = ScmVerdict::Unknown;
  bool forest = false;
  bool connected = false;
  /// Forest that is not a tree: the verdict extends the tree case
  /// componentwise.
  bool forest_extension = false;
};

inline ScmReport sequentially_cm_verdict(const MonomialIdeal& I, std::size_t max_facets = kDefaultMaxFacets) {
  const auto D = polar_complex(I);
  ScmReport r;
  r.forest = is_forest(D, max_facets).forest;
  r.connected = is_connected(D);
  if (r.forest) {
    r.verdict = ScmVerdict::SequentiallyCM;
    r.forest_extension = !r.connected;
  }
  return r;
}

/// I_[k]: all square-free monomials of degree k lying in I.
inline MonomialIdeal sqfree_component(const MonomialIdeal& I, std::size_t k) {
  if (!I.is_square_free()) throw NotSquareFree();
  if (k == 0) throw std::invalid_argument("degree must be positive");
  const std::size_t n = I.ring()->size();
  std::vector<Monomial> gens;
  if (k > n) return MonomialIdeal::zero(I.ring());
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<Exponent> e(n, 0);
    for (auto v : pick) e[v] = 1;
    Monomial m(I.ring(), std::move(e));
    if (I.contains(m)) gens.push_back(std::move(m));
    std::size_t t = k;
    while (t > 0 && pick[t - 1] == n - k + t - 1) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
  }
  return gens.empty() ? MonomialIdeal::zero(I.ring()) : minimalize(I.ring(), std::move(gens));
}

}  // namespace polar
