#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "polar/monomial.hpp"

namespace polar {

/// Thrown when a constant monomial would make an ideal the whole ring.
class UnitIdealError : public std::domain_error {
 public:
  UnitIdealError() : std::domain_error("unit ideal is not supported") {}
};

/// Thrown by operations whose input must be a nonzero ideal.
class ZeroIdealError : public std::domain_error {
 public:
  ZeroIdealError() : std::domain_error("operation requires a nonzero ideal") {}
};

class MonomialIdeal;
MonomialIdeal minimalize(const RingPtr& ring, std::vector<Monomial> gens);

/// Proper monomial ideal given by its minimal generating set. An empty
/// generating set is the zero ideal; the unit ideal is not representable.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(RingPtr ring) {
    MonomialIdeal I;
    I.ring_ = std::move(ring);
    return I;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  bool is_square_free() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_square_free(); });
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
  }

  bool contains(const MonomialIdeal& J) const {
    require_same_ring(ring_, J.ring_);
    return std::all_of(J.gens_.begin(), J.gens_.end(), [&](const Monomial& g) { return contains(g); });
  }

  /// Lcm of all generators; 1 for the zero ideal.
  Monomial lcm_of_generators() const {
    Monomial l = Monomial::one(ring_);
    for (const auto& g : gens_) l = lcm(l, g);
    return l;
  }

  /// Largest exponent of each variable over the generators.
  std::vector<Exponent> max_exponents() const { return lcm_of_generators().exponents(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

  friend MonomialIdeal minimalize(const RingPtr& ring, std::vector<Monomial> gens);

 private:
  MonomialIdeal() = default;

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Marker returned where an operation degenerates to the whole ring.
struct UnitIdeal {
  friend bool operator==(UnitIdeal, UnitIdeal) { return true; }
};

using IdealOrUnit = std::variant<MonomialIdeal, UnitIdeal>;

inline bool is_unit(const IdealOrUnit& r) { return std::holds_alternative<UnitIdeal>(r); }

/// Reduces a set of monomials to a minimal generating set in canonical order.
inline MonomialIdeal minimalize(const RingPtr& ring, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_one()) throw UnitIdealError();
  }
  // After sorting by degree, a monomial can only be divided by earlier ones.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a.exponents() > b.exponents();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
    if (!absorbed) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), LexGreater{});
  MonomialIdeal I;
  I.ring_ = ring;
  I.gens_ = std::move(kept);
  return I;
}

inline MonomialIdeal make_ideal(const RingPtr& ring, std::vector<Monomial> gens) {
  return minimalize(ring, std::move(gens));
}

inline bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  return I == J;
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return minimalize(I.ring(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Monomial> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& m : I.generators())
    for (const auto& n : J.generators()) gens.push_back(lcm(m, n));
  return minimalize(I.ring(), std::move(gens));
}

/// Intersection of a nonempty family.
inline MonomialIdeal intersect_all(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of an empty family");
  MonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

/// (I : u), generated by M / gcd(M, u). Yields UnitIdeal when u lies in I.
inline IdealOrUnit colon(const MonomialIdeal& I, const Monomial& u) {
  require_same_ring(I.ring(), u.ring());
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& m : I.generators()) {
    Monomial q = strip(m, u);
    if (q.is_one()) return UnitIdeal{};
    gens.push_back(std::move(q));
  }
  return minimalize(I.ring(), std::move(gens));
}

}  // namespace polar
