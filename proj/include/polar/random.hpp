#pragma once

#include <algorithm>
#include <iterator>
#include <random>
#include <set>
#include <vector>

#include "polar/ideal.hpp"
#include "polar/simplicial.hpp"

namespace polar {

using Rng = std::mt19937_64;

struct RandomIdealOptions {
  std::size_t max_variables = 5;
  Exponent max_degree = 4;
  std::size_t max_generators = 6;
};

namespace detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace detail

/// Random nonconstant monomial of total degree in [1, max_degree].
inline Monomial random_monomial(Rng& rng, const RingPtr& ring, Exponent max_degree) {
  const auto degree = detail::uniform(rng, 1, max_degree);
  std::vector<Exponent> e(ring->size(), 0);
  for (std::size_t k = 0; k < degree; ++k) ++e[detail::uniform(rng, 0, ring->size() - 1)];
  return Monomial(ring, std::move(e));
}

inline MonomialIdeal random_ideal(Rng& rng, const RingPtr& ring, const RandomIdealOptions& opt = {}) {
  const auto count = detail::uniform(rng, 1, opt.max_generators);
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(random_monomial(rng, ring, opt.max_degree));
  return minimalize(ring, std::move(gens));
}

struct RandomForestOptions {
  std::size_t max_facets = 7;
  std::size_t max_first_facet = 3;
  std::size_t max_new_vertices = 2;
};

/// Grows a forest by attaching, one at a time, a facet made of fresh vertices
/// plus a subset S of an existing facet G. S is accepted only when its
/// intersections with the existing facets form a chain under inclusion, so
/// every attached facet is a good leaf and the result has a good leaf order.
/// Vertices are named v1, v2, ...
inline SimplicialComplex random_forest(Rng& rng, const RandomForestOptions& opt = {}) {
  const auto q = detail::uniform(rng, 1, opt.max_facets);
  std::vector<std::vector<std::size_t>> facets;
  std::size_t next_vertex = 0;
  auto fresh = [&](std::size_t count) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(next_vertex++);
    return out;
  };
  facets.push_back(fresh(detail::uniform(rng, 1, opt.max_first_facet)));

  auto is_chain = [&](const std::vector<std::size_t>& s) {
    std::vector<std::vector<std::size_t>> cuts;
    for (const auto& h : facets) {
      std::vector<std::size_t> cut;
      std::set_intersection(s.begin(), s.end(), h.begin(), h.end(), std::back_inserter(cut));
      cuts.push_back(std::move(cut));
    }
    for (const auto& a : cuts)
      for (const auto& b : cuts)
        if (!std::includes(a.begin(), a.end(), b.begin(), b.end()) &&
            !std::includes(b.begin(), b.end(), a.begin(), a.end()))
          return false;
    return true;
  };

  while (facets.size() < q) {
    const auto& g = facets[detail::uniform(rng, 0, facets.size() - 1)];
    std::vector<std::size_t> shared;
    // Occasionally start a new component.
    if (detail::uniform(rng, 0, 5) != 0) {
      for (int attempt = 0; attempt < 8 && shared.empty(); ++attempt) {
        std::vector<std::size_t> s;
        for (auto v : g)
          if (detail::uniform(rng, 0, 1)) s.push_back(v);
        if (!s.empty() && s.size() < g.size() && is_chain(s)) shared = std::move(s);
      }
      if (shared.empty()) shared.push_back(g[detail::uniform(rng, 0, g.size() - 1)]);
    }
    auto extra = fresh(detail::uniform(rng, 1, opt.max_new_vertices));
    shared.insert(shared.end(), extra.begin(), extra.end());
    facets.push_back(std::move(shared));
  }
  return SimplicialComplex::from_facets(make_ring("v", next_vertex), facets);
}

/// A monomial ideal whose polarization is the facet ideal of D up to
/// renaming variables. Vertices are grouped into chains; a chain of length e
/// becomes the slots x_{c,1}, ..., x_{c,e} of one base variable. Two chains
/// A, B may be concatenated only if every facet meeting B contains all of A,
/// which keeps every facet's intersection with a chain a prefix of it.
/// Requires every vertex to lie in some facet.
inline MonomialIdeal random_depolarization(Rng& rng, const SimplicialComplex& D, std::size_t merge_attempts = 16) {
  if (D.isolated().any()) throw std::invalid_argument("depolarization needs every vertex in a facet");
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t v = 0; v < D.vertex_count(); ++v) chains.push_back({v});

  for (std::size_t attempt = 0; attempt < merge_attempts && chains.size() > 1; ++attempt) {
    const auto a = detail::uniform(rng, 0, chains.size() - 1);
    auto b = detail::uniform(rng, 0, chains.size() - 2);
    if (b >= a) ++b;
    bool ok = true;
    for (const auto& f : D.facets()) {
      const bool meets_b = std::any_of(chains[b].begin(), chains[b].end(), [&](std::size_t v) { return f.test(v); });
      if (!meets_b) continue;
      ok = std::all_of(chains[a].begin(), chains[a].end(), [&](std::size_t v) { return f.test(v); });
      if (!ok) break;
    }
    if (!ok) continue;
    chains[a].insert(chains[a].end(), chains[b].begin(), chains[b].end());
    chains.erase(chains.begin() + static_cast<std::ptrdiff_t>(b));
  }
  std::shuffle(chains.begin(), chains.end(), rng);

  auto ring = make_ring("x", chains.size());
  std::vector<Monomial> gens;
  for (const auto& f : D.facets()) {
    std::vector<Exponent> e(chains.size(), 0);
    for (std::size_t c = 0; c < chains.size(); ++c)
      for (auto v : chains[c]) e[c] += f.test(v) ? 1 : 0;
    gens.emplace_back(ring, std::move(e));
  }
  return minimalize(ring, std::move(gens));
}

}  // namespace polar
