#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polar/ideal.hpp"

namespace polar {

using VertexSet = boost::dynamic_bitset<>;

class NotSquareFree : public std::invalid_argument {
 public:
  NotSquareFree() : std::invalid_argument("ideal is not square-free") {}
};

inline std::vector<std::size_t> members(const VertexSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

inline VertexSet make_vertex_set(std::size_t n, const std::vector<std::size_t>& vs) {
  VertexSet s(n);
  for (auto v : vs) s.set(v);
  return s;
}

/// Canonical order on vertex sets: lexicographic on sorted member lists.
struct VertexSetLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const { return members(a) < members(b); }
};

/// A simplicial complex given by its facets over an ordered vertex list.
/// Vertices in no facet are isolated: they stay in the vertex list but are
/// not faces. No facets at all is the void complex; a single empty facet is
/// the complex {emptyset}.
class SimplicialComplex {
 public:
  /// Keeps the inclusion-maximal members of `faces`.
  SimplicialComplex(RingPtr vertices, std::vector<VertexSet> faces) : vertices_(std::move(vertices)) {
    for (auto& f : faces) {
      if (f.size() != vertices_->size()) throw std::invalid_argument("face size does not match vertex count");
    }
    std::sort(faces.begin(), faces.end(), VertexSetLess{});
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (std::size_t a = 0; a < faces.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < faces.size() && !dominated; ++b)
        dominated = a != b && faces[a].is_proper_subset_of(faces[b]);
      if (!dominated) facets_.push_back(faces[a]);
    }
  }

  static SimplicialComplex from_facets(RingPtr vertices, const std::vector<std::vector<std::size_t>>& facets) {
    const auto n = vertices->size();
    std::vector<VertexSet> f;
    for (const auto& vs : facets) f.push_back(make_vertex_set(n, vs));
    return SimplicialComplex(std::move(vertices), std::move(f));
  }

  static SimplicialComplex void_complex(RingPtr vertices) { return SimplicialComplex(std::move(vertices), {}); }

  const RingPtr& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_->size(); }
  const std::vector<VertexSet>& facets() const { return facets_; }
  const VertexSet& facet(std::size_t k) const { return facets_.at(k); }
  std::size_t facet_count() const { return facets_.size(); }
  bool is_void() const { return facets_.empty(); }

  VertexSet empty_set() const { return VertexSet(vertex_count()); }

  bool is_face(const VertexSet& s) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) { return s.is_subset_of(f); });
  }

  std::optional<std::size_t> facet_index(const VertexSet& s) const {
    for (std::size_t k = 0; k < facets_.size(); ++k)
      if (facets_[k] == s) return k;
    return std::nullopt;
  }

  /// Vertices lying in no facet.
  VertexSet isolated() const {
    VertexSet used = empty_set();
    for (const auto& f : facets_) used |= f;
    return ~used;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return same_ring(a.vertices_, b.vertices_) && a.facets_ == b.facets_;
  }

 private:
  RingPtr vertices_;
  std::vector<VertexSet> facets_;
};

inline std::string to_string(const VertexSet& s, const Ring& names) {
  std::string out = "{";
  bool first = true;
  for (auto v : members(s)) {
    if (!first) out += ",";
    first = false;
    out += names.name(v);
  }
  return out + "}";
}

inline std::string to_string(const SimplicialComplex& D) {
  std::string out = "<";
  for (std::size_t k = 0; k < D.facet_count(); ++k) {
    if (k) out += ", ";
    out += to_string(D.facet(k), *D.vertices());
  }
  return out + ">";
}

/// One facet per generator support. The ideal's ring becomes the vertex list.
inline SimplicialComplex facet_complex(const MonomialIdeal& I) {
  if (!I.is_square_free()) throw NotSquareFree();
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& g : I.generators()) facets.push_back(g.support());
  return SimplicialComplex::from_facets(I.ring(), facets);
}

inline Monomial vertex_product(const RingPtr& ring, const VertexSet& s) {
  std::vector<Exponent> e(ring->size(), 0);
  for (auto v : members(s)) e[v] = 1;
  return Monomial(ring, std::move(e));
}

/// One square-free generator per facet; the void complex gives the zero ideal.
inline MonomialIdeal facet_ideal(const SimplicialComplex& D) {
  std::vector<Monomial> gens;
  for (const auto& f : D.facets()) gens.push_back(vertex_product(D.vertices(), f));
  return minimalize(D.vertices(), std::move(gens));
}

/// Generated by the minimal non-faces, found breadth-first over the subset
/// lattice: a candidate of size k is built only when all of its (k-1)-subsets
/// are faces. A simplex on every vertex yields the zero ideal.
inline MonomialIdeal nonface_ideal(const SimplicialComplex& D) {
  if (D.is_void()) throw UnitIdealError();
  const std::size_t n = D.vertex_count();
  std::set<VertexSet> level{D.empty_set()};
  std::vector<Monomial> gens;
  while (!level.empty()) {
    std::set<VertexSet> next;
    for (const auto& f : level) {
      const auto top = f.find_first() == VertexSet::npos ? 0 : members(f).back() + 1;
      for (std::size_t v = top; v < n; ++v) {
        if (f.test(v)) continue;
        VertexSet c = f;
        c.set(v);
        bool boundary_ok = true;
        for (auto w : members(c)) {
          if (w == v) continue;
          VertexSet sub = c;
          sub.reset(w);
          if (!level.count(sub)) {
            boundary_ok = false;
            break;
          }
        }
        if (!boundary_ok) continue;
        if (D.is_face(c))
          next.insert(std::move(c));
        else
          gens.push_back(vertex_product(D.vertices(), c));
      }
    }
    level = std::move(next);
  }
  return minimalize(D.vertices(), std::move(gens));
}

/// All inclusion-minimal vertex covers, built facet by facet (each partial
/// family is the set of minimal transversals of the facets seen so far).
inline std::vector<VertexSet> minimal_vertex_covers(const SimplicialComplex& D) {
  std::vector<VertexSet> covers{D.empty_set()};
  for (const auto& f : D.facets()) {
    if (f.none()) return {};
    std::vector<VertexSet> grown;
    for (const auto& c : covers) {
      if (c.intersects(f)) {
        grown.push_back(c);
        continue;
      }
      for (auto v : members(f)) {
        VertexSet e = c;
        e.set(v);
        grown.push_back(std::move(e));
      }
    }
    std::sort(grown.begin(), grown.end(), VertexSetLess{});
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    covers.clear();
    for (std::size_t a = 0; a < grown.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < grown.size() && !dominated; ++b)
        dominated = a != b && grown[b].is_proper_subset_of(grown[a]);
      if (!dominated) covers.push_back(grown[a]);
    }
  }
  std::sort(covers.begin(), covers.end(), VertexSetLess{});
  return covers;
}

/// Facets are the maximal sets whose product avoids I, i.e. complements of
/// the minimal vertex covers of the facet complex.
inline SimplicialComplex nonface_complex(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError();
  const auto covers = minimal_vertex_covers(facet_complex(I));
  std::vector<VertexSet> facets;
  for (const auto& c : covers) facets.push_back(~c);
  return SimplicialComplex(I.ring(), std::move(facets));
}

/// Faces are the complements of non-faces of D.
inline SimplicialComplex alexander_dual_complex(const SimplicialComplex& D) {
  if (D.is_void()) return SimplicialComplex(D.vertices(), {~D.empty_set()});
  const MonomialIdeal N = nonface_ideal(D);
  std::vector<VertexSet> facets;
  for (const auto& g : N.generators()) facets.push_back(~make_vertex_set(D.vertex_count(), g.support()));
  return SimplicialComplex(D.vertices(), std::move(facets));
}

inline MonomialIdeal alexander_dual_ideal(const MonomialIdeal& I) {
  if (!I.is_square_free()) throw NotSquareFree();
  return nonface_ideal(alexander_dual_complex(nonface_complex(I)));
}

/// Vertex covering number.
inline std::size_t alpha(const SimplicialComplex& D) {
  const auto covers = minimal_vertex_covers(D);
  if (covers.empty()) throw std::domain_error("complex with an empty facet has no vertex cover");
  std::size_t best = covers.front().count();
  for (const auto& c : covers) best = std::min(best, c.count());
  return best;
}

inline bool is_unmixed(const SimplicialComplex& D) {
  const auto covers = minimal_vertex_covers(D);
  return std::all_of(covers.begin(), covers.end(),
                     [&](const VertexSet& c) { return c.count() == covers.front().count(); });
}

/// Largest number of pairwise disjoint facets.
inline std::size_t beta_complex(const SimplicialComplex& D) {
  const auto& f = D.facets();
  std::size_t best = 0;
  auto search = [&](auto&& self, std::size_t next, const VertexSet& used, std::size_t taken) -> void {
    best = std::max(best, taken);
    if (taken + (f.size() - next) <= best) return;
    for (std::size_t k = next; k < f.size(); ++k) {
      if (f[k].intersects(used)) continue;
      self(self, k + 1, used | f[k], taken + 1);
    }
  };
  search(search, 0, D.empty_set(), 0);
  return best;
}

namespace detail {

inline std::size_t require_facet(const SimplicialComplex& D, const VertexSet& F) {
  auto k = D.facet_index(F);
  if (!k) throw std::invalid_argument(to_string(F, *D.vertices()) + " is not a facet");
  return *k;
}

}  // namespace detail

/// Drops F; vertices only in F become isolated.
inline SimplicialComplex remove_facet(const SimplicialComplex& D, const VertexSet& F) {
  const auto k = detail::require_facet(D, F);
  std::vector<VertexSet> rest = D.facets();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  return SimplicialComplex(D.vertices(), std::move(rest));
}

/// Vertices of F shared with some other facet.
inline VertexSet shared_part(const SimplicialComplex& D, std::size_t k) {
  VertexSet others = D.empty_set();
  for (std::size_t g = 0; g < D.facet_count(); ++g)
    if (g != k) others |= D.facet(g);
  return D.facet(k) & others;
}

/// Indices of the facets G != F containing F's shared part with F and G
/// meeting.
inline std::vector<std::size_t> joints(const SimplicialComplex& D, std::size_t k) {
  const VertexSet shared = shared_part(D, k);
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < D.facet_count(); ++g)
    if (g != k && shared.is_subset_of(D.facet(g)) && D.facet(g).intersects(D.facet(k))) out.push_back(g);
  return out;
}

inline std::vector<VertexSet> joints(const SimplicialComplex& D, const VertexSet& F) {
  std::vector<VertexSet> out;
  for (auto g : joints(D, detail::require_facet(D, F))) out.push_back(D.facet(g));
  return out;
}

inline bool is_leaf(const SimplicialComplex& D, std::size_t k) {
  if (D.facet_count() == 1) return k == 0;
  const VertexSet shared = shared_part(D, k);
  for (std::size_t g = 0; g < D.facet_count(); ++g)
    if (g != k && shared.is_subset_of(D.facet(g))) return true;
  return false;
}

inline bool is_leaf(const SimplicialComplex& D, const VertexSet& F) { return is_leaf(D, detail::require_facet(D, F)); }

/// Vertices of F in no other facet.
inline VertexSet free_vertices(const SimplicialComplex& D, const VertexSet& F) {
  const auto k = detail::require_facet(D, F);
  return D.facet(k) - shared_part(D, k);
}

inline bool is_connected(const SimplicialComplex& D) {
  const std::size_t q = D.facet_count();
  std::vector<std::size_t> parent(q);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      if (D.facet(a).intersects(D.facet(b))) parent[find(a)] = find(b);
  for (std::size_t a = 1; a < q; ++a)
    if (find(a) != find(0)) return false;
  return true;
}

struct ForestResult {
  bool forest = true;
  /// Facet indices of a smallest leafless subcollection, when not a forest.
  std::vector<std::size_t> witness;
};

/// Exhaustive-search ceiling for the subcollection check.
inline constexpr std::size_t kDefaultMaxFacets = 20;

namespace detail {

/// Leaf test for facet `k` inside the subcollection `mask`.
inline bool is_leaf_in(const std::vector<VertexSet>& f, std::uint64_t mask, std::size_t k) {
  if (mask == (std::uint64_t{1} << k)) return true;
  VertexSet others(f[k].size());
  for (std::size_t g = 0; g < f.size(); ++g)
    if (g != k && (mask >> g & 1)) others |= f[g];
  const VertexSet shared = f[k] & others;
  for (std::size_t g = 0; g < f.size(); ++g)
    if (g != k && (mask >> g & 1) && shared.is_subset_of(f[g])) return true;
  return false;
}

inline bool has_leaf(const std::vector<VertexSet>& f, std::uint64_t mask) {
  for (std::size_t k = 0; k < f.size(); ++k)
    if ((mask >> k & 1) && is_leaf_in(f, mask, k)) return true;
  return false;
}

}  // namespace detail

/// Checks every nonempty subcollection for a leaf, smallest first, so the
/// witness returned on failure is a smallest leafless subcollection.
inline ForestResult is_forest(const SimplicialComplex& D, std::size_t max_facets = kDefaultMaxFacets) {
  const std::size_t q = D.facet_count();
  if (q > max_facets || q > 62) throw std::length_error("too many facets for the exhaustive forest check");
  const auto& f = D.facets();
  // Subcollections of size 1 and 2 always have a leaf.
  for (std::size_t size = 3; size <= q; ++size) {
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << q;
    while (mask < limit) {
      if (!detail::has_leaf(f, mask)) {
        ForestResult r{false, {}};
        for (std::size_t k = 0; k < q; ++k)
          if (mask >> k & 1) r.witness.push_back(k);
        return r;
      }
      // Next mask with the same popcount.
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return {};
}

inline bool is_tree(const SimplicialComplex& D, std::size_t max_facets = kDefaultMaxFacets) {
  return is_forest(D, max_facets).forest && is_connected(D);
}

}  // namespace polar
