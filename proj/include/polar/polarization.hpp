#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polar/decomposition.hpp"

namespace polar {

/// The variable x_{i,j} of a polarization ring: base variable i, slot j >= 1.
struct PolarVariable {
  std::size_t base = 0;
  Exponent slot = 1;

  friend auto operator<=>(const PolarVariable&, const PolarVariable&) = default;
};

/// Text name of x_{i,j}, using 1-based base indices: `x[i,j]`.
inline std::string polar_name(std::size_t base, Exponent slot) {
  return "x[" + std::to_string(base + 1) + "," + std::to_string(slot) + "]";
}

/// k[x_{i,j} | 1 <= j <= slots(i)] over a base ring. Polar variables are
/// ordered by base index, then slot.
class PolarRing {
 public:
  PolarRing(RingPtr base, std::vector<Exponent> slots) : base_(std::move(base)), slots_(std::move(slots)) {
    if (slots_.size() != base_->size()) throw std::invalid_argument("slot vector length does not match base ring");
    std::vector<std::string> names;
    offsets_.reserve(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (slots_[i] == 0) throw std::invalid_argument("every base variable needs at least one slot");
      offsets_.push_back(names.size());
      for (Exponent j = 1; j <= slots_[i]; ++j) {
        names.push_back(polar_name(i, j));
        vars_.push_back({i, j});
      }
    }
    ring_ = make_ring(std::move(names));
  }

  const RingPtr& base() const { return base_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Exponent>& slots() const { return slots_; }
  Exponent slots(std::size_t base_index) const { return slots_.at(base_index); }
  std::size_t size() const { return vars_.size(); }

  std::size_t index(std::size_t base_index, Exponent slot) const {
    if (slot == 0 || slot > slots_.at(base_index)) throw std::out_of_range("slot outside polar ring");
    return offsets_[base_index] + slot - 1;
  }
  std::size_t index(const PolarVariable& v) const { return index(v.base, v.slot); }

  const PolarVariable& variable(std::size_t polar_index) const { return vars_.at(polar_index); }

  friend bool operator==(const PolarRing& a, const PolarRing& b) {
    return *a.base_ == *b.base_ && a.slots_ == b.slots_;
  }

 private:
  RingPtr base_;
  std::vector<Exponent> slots_;
  std::vector<std::size_t> offsets_;
  std::vector<PolarVariable> vars_;
  RingPtr ring_;
};

/// Thrown when a monomial needs more slots than the polar ring offers.
class SlotOverflow : public std::invalid_argument {
 public:
  SlotOverflow() : std::invalid_argument("exponent exceeds the available polar slots") {}
};

/// Slots sized to the largest exponents of I; every base variable keeps at
/// least one slot so that x_i can be identified with x_{i,1}.
inline PolarRing polar_ring_for(const MonomialIdeal& I) {
  auto slots = I.max_exponents();
  for (auto& s : slots) s = std::max<Exponent>(s, 1);
  return PolarRing(I.ring(), std::move(slots));
}

/// One ambient polar ring for two ideals: slots are the larger of the two.
inline PolarRing joint_polar_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  auto a = polar_ring_for(I).slots(), b = polar_ring_for(J).slots();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::max(a[i], b[i]);
  return PolarRing(I.ring(), std::move(a));
}

inline Monomial polarize_monomial(const Monomial& m, const PolarRing& ring) {
  require_same_ring(m.ring(), ring.base());
  std::vector<Exponent> e(ring.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > ring.slots(i)) throw SlotOverflow();
    for (Exponent j = 1; j <= m[i]; ++j) e[ring.index(i, j)] = 1;
  }
  return Monomial(ring.ring(), std::move(e));
}

struct Polarization {
  PolarRing ring;
  MonomialIdeal ideal;
};

inline MonomialIdeal polarize_ideal(const MonomialIdeal& I, const PolarRing& ring) {
  if (I.is_zero()) throw ZeroIdealError();
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(polarize_monomial(g, ring));
  return minimalize(ring.ring(), std::move(gens));
}

inline Polarization polarize_ideal(const MonomialIdeal& I) {
  PolarRing ring = polar_ring_for(I);
  MonomialIdeal P = polarize_ideal(I, ring);
  return {std::move(ring), std::move(P)};
}

/// Pair (x_{i,1}, x_{i,j}) standing for the linear form x_{i,1} - x_{i,j}.
struct SequenceElement {
  PolarVariable head;
  PolarVariable tail;

  friend bool operator==(const SequenceElement&, const SequenceElement&) = default;
};

using PolarizingSequence = std::vector<SequenceElement>;

inline PolarizingSequence polarization_sequence(const PolarRing& ring) {
  PolarizingSequence seq;
  for (std::size_t i = 0; i < ring.slots().size(); ++i)
    for (Exponent j = 2; j <= ring.slots(i); ++j) seq.push_back({{i, 1}, {i, j}});
  return seq;
}

inline std::string to_string(const SequenceElement& e) {
  return polar_name(e.head.base, e.head.slot) + " - " + polar_name(e.tail.base, e.tail.slot);
}

/// Substitutes x_{i,j} -> x_i and minimalizes.
inline MonomialIdeal depolarize_ideal(const MonomialIdeal& Q, const PolarRing& ring) {
  require_same_ring(Q.ring(), ring.ring());
  if (Q.is_zero()) throw ZeroIdealError();
  std::vector<Monomial> gens;
  for (const auto& g : Q.generators()) {
    std::vector<Exponent> e(ring.base()->size(), 0);
    for (std::size_t k = 0; k < g.size(); ++k) e[ring.variable(k).base] += g[k];
    gens.emplace_back(ring.base(), std::move(e));
  }
  return minimalize(ring.base(), std::move(gens));
}

/// Works in S: replaces each tail x_{i,j} of the sequence by its head
/// x_{i,1}, i.e. reduces the generators modulo the linear forms.
inline MonomialIdeal apply_polarizing_sequence(const MonomialIdeal& Q, const PolarRing& ring,
                                               const PolarizingSequence& seq) {
  require_same_ring(Q.ring(), ring.ring());
  std::vector<Monomial> gens = Q.generators();
  for (const auto& el : seq) {
    const auto h = ring.index(el.head), t = ring.index(el.tail);
    for (auto& g : gens) {
      if (g[t] == 0) continue;
      g = g.with_exponent(h, g[h] + g[t]).with_exponent(t, 0);
    }
  }
  return minimalize(ring.ring(), std::move(gens));
}

/// Image of a base ideal under x_i -> x_{i,1}.
inline MonomialIdeal embed_in_polar_ring(const MonomialIdeal& I, const PolarRing& ring) {
  require_same_ring(I.ring(), ring.base());
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Exponent> e(ring.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) e[ring.index(i, 1)] = g[i];
    gens.emplace_back(ring.ring(), std::move(e));
  }
  return minimalize(ring.ring(), std::move(gens));
}

/// All primes (x_{i_1,c_1}, ..., x_{i_r,c_r}) with 1 <= c_j <= a_j for the
/// component (x_{i_1}^{a_1}, ..., x_{i_r}^{a_r}).
inline std::vector<MonomialPrime> polar_decomposition_irreducible(const IrreducibleComponent& c,
                                                                  const PolarRing& ring) {
  require_same_ring(c.ring(), ring.base());
  const auto support = c.support();
  for (auto i : support)
    if (c.power(i) > ring.slots(i)) throw SlotOverflow();
  std::vector<MonomialPrime> out;
  std::vector<std::size_t> vars;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == support.size()) {
      out.emplace_back(ring.ring(), vars);
      return;
    }
    for (Exponent slot = 1; slot <= c.power(support[k]); ++slot) {
      vars.push_back(ring.index(support[k], slot));
      self(self, k + 1);
      vars.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Primes of P((x_{i_1}, ..., x_{i_r})^m): 1 <= c_j <= m and
/// c_1 + ... + c_r <= m + r - 1.
inline std::vector<MonomialPrime> polar_decomposition_power(const std::vector<std::size_t>& vars, Exponent m,
                                                            const PolarRing& ring) {
  if (m == 0) throw std::invalid_argument("power must be positive");
  if (vars.empty()) throw std::invalid_argument("power of an empty variable set");
  std::set<std::size_t> distinct(vars.begin(), vars.end());
  if (distinct.size() != vars.size()) throw std::invalid_argument("variables must be distinct");
  for (auto i : vars)
    if (m > ring.slots(i)) throw SlotOverflow();

  const std::size_t r = vars.size();
  const std::uint64_t budget = m + r - 1;
  std::vector<MonomialPrime> out;
  std::vector<Exponent> choice;
  auto rec = [&](auto&& self, std::uint64_t used) -> void {
    if (choice.size() == r) {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < r; ++k) idx.push_back(ring.index(vars[k], choice[k]));
      out.emplace_back(ring.ring(), std::move(idx));
      return;
    }
    const std::uint64_t remaining = r - choice.size() - 1;
    for (Exponent c = 1; c <= m && used + c + remaining <= budget; ++c) {
      choice.push_back(c);
      self(self, used + c);
      choice.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Convenience overload building a polar ring with m slots on every base
/// variable.
inline std::vector<MonomialPrime> polar_decomposition_power(const RingPtr& base, const std::vector<std::size_t>& vars,
                                                            Exponent m) {
  return polar_decomposition_power(vars, m, PolarRing(base, std::vector<Exponent>(base->size(), m)));
}

/// Union of the polarized components of every irreducible component of I,
/// reduced to an irredundant family; its intersection is P(I).
inline std::vector<MonomialPrime> polar_decomposition_general(const MonomialIdeal& I, const PolarRing& ring) {
  if (I.is_zero()) throw ZeroIdealError();
  std::vector<MonomialPrime> all;
  for (const auto& c : irreducible_decomposition(I)) {
    auto part = polar_decomposition_irreducible(c, ring);
    all.insert(all.end(), part.begin(), part.end());
  }
  auto primes = detail::minimal_under_inclusion(std::move(all));
  // Drop-and-compare pass; with prime components this confirms what the
  // inclusion pruning already produced.
  const MonomialIdeal target = polarize_ideal(I, ring);
  for (std::size_t k = 0; k < primes.size() && primes.size() > 1;) {
    std::optional<MonomialIdeal> rest;
    for (std::size_t t = 0; t < primes.size(); ++t) {
      if (t == k) continue;
      rest = rest ? intersect(*rest, primes[t].as_ideal()) : primes[t].as_ideal();
    }
    if (*rest == target)
      primes.erase(primes.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }
  return primes;
}

inline std::vector<MonomialPrime> polar_decomposition_general(const MonomialIdeal& I) {
  return polar_decomposition_general(I, polar_ring_for(I));
}

/// (x_{i_1}, ..., x_{i_r}) -> (x_{i_1,1}, ..., x_{i_r,1}).
inline MonomialPrime map_prime(const MonomialPrime& p, const PolarRing& ring) {
  require_same_ring(p.ring(), ring.base());
  std::vector<std::size_t> vars;
  for (auto i : p.variables()) vars.push_back(ring.index(i, 1));
  return MonomialPrime(ring.ring(), std::move(vars));
}

/// (x_{i_1,c_1}, ..., x_{i_r,c_r}) -> (x_{i_1}, ..., x_{i_r}). Rejects primes
/// holding two slots of one base variable.
inline MonomialPrime unmap_prime(const MonomialPrime& q, const PolarRing& ring) {
  require_same_ring(q.ring(), ring.ring());
  std::vector<std::size_t> bases;
  for (auto k : q.variables()) bases.push_back(ring.variable(k).base);
  std::vector<std::size_t> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("prime " + to_string(q) + " holds two slots of one base variable");
  return MonomialPrime(ring.base(), std::move(bases));
}

/// Saturation data for one polar associated prime: every prime obtained by
/// lowering its slots. Each of them lies over P(I); they need not be
/// associated, e.g. for (x1^2, x1*x2) the prime (x[1,2], x[2,1]) is
/// associated but (x[1,1], x[2,1]) is not.
struct SaturationEntry {
  MonomialPrime prime;
  std::vector<MonomialPrime> lowered;
  bool all_over_ideal = true;  ///< every lowered prime contains P(I)
  bool all_associated = true;  ///< every lowered prime is in Ass(S/P(I))
};

struct StratumCount {
  std::size_t base = 0;
  std::size_t polar = 0;
};

struct AssCorrespondence {
  std::vector<MonomialPrime> base_ass;
  std::vector<MonomialPrime> polar_ass;
  bool projection_matches = false;
  bool saturated = false;          ///< lowered primes all lie over P(I)
  bool strictly_saturated = false;  ///< lowered primes all associated
  std::vector<SaturationEntry> saturation;
  std::map<std::size_t, StratumCount> strata;

  bool passed() const { return projection_matches && saturated; }
};

/// Compares Ass(R/I) with Ass(S/P(I)): base-variable projections agree, the
/// polar side is closed under lowering slots, and per-height counts.
inline AssCorrespondence ass_correspondence_report(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError();
  auto [ring, P] = polarize_ideal(I);
  AssCorrespondence r;
  r.base_ass = associated_primes(I);
  r.polar_ass = associated_primes(P);

  std::set<MonomialPrime> projected;
  for (const auto& q : r.polar_ass) projected.insert(unmap_prime(q, ring));
  r.projection_matches = std::vector<MonomialPrime>(projected.begin(), projected.end()) == r.base_ass;

  const std::set<MonomialPrime> polar_set(r.polar_ass.begin(), r.polar_ass.end());
  r.saturated = true;
  r.strictly_saturated = true;
  for (const auto& q : r.polar_ass) {
    SaturationEntry entry{q, {}, true, true};
    std::vector<PolarVariable> top;
    for (auto k : q.variables()) top.push_back(ring.variable(k));
    std::vector<Exponent> slot(top.size(), 1);
    while (true) {
      bool is_top = true;
      std::vector<std::size_t> idx;
      for (std::size_t t = 0; t < top.size(); ++t) {
        idx.push_back(ring.index(top[t].base, slot[t]));
        is_top = is_top && slot[t] == top[t].slot;
      }
      if (!is_top) {
        MonomialPrime lower(ring.ring(), std::move(idx));
        if (!lower.contains(P)) entry.all_over_ideal = false;
        if (!polar_set.count(lower)) entry.all_associated = false;
        entry.lowered.push_back(std::move(lower));
      }
      std::size_t t = 0;
      for (; t < top.size(); ++t) {
        if (slot[t] < top[t].slot) {
          ++slot[t];
          break;
        }
        slot[t] = 1;
      }
      if (t == top.size()) break;
    }
    std::sort(entry.lowered.begin(), entry.lowered.end());
    r.saturated = r.saturated && entry.all_over_ideal;
    r.strictly_saturated = r.strictly_saturated && entry.all_associated;
    r.saturation.push_back(std::move(entry));
  }

  for (const auto& p : r.base_ass) ++r.strata[p.height()].base;
  for (const auto& q : r.polar_ass) ++r.strata[q.height()].polar;
  return r;
}

}  // namespace polar
