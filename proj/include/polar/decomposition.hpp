#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polar/ideal.hpp"

namespace polar {

/// Prime generated by a nonempty set of variables.
class MonomialPrime {
 public:
  MonomialPrime(RingPtr ring, std::vector<std::size_t> vars) : ring_(std::move(ring)), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    if (vars_.empty()) throw std::invalid_argument("a monomial prime needs at least one variable");
    if (vars_.back() >= ring_->size()) throw std::out_of_range("prime variable outside ring");
  }

  /// The irrelevant prime (x_1, ..., x_n).
  static MonomialPrime full(const RingPtr& ring) {
    std::vector<std::size_t> all(ring->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return MonomialPrime(ring, std::move(all));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::size_t>& variables() const { return vars_; }
  std::size_t height() const { return vars_.size(); }

  bool has_variable(std::size_t i) const { return std::binary_search(vars_.begin(), vars_.end(), i); }

  /// True when every generator of I involves a variable of this prime.
  bool contains(const MonomialIdeal& I) const {
    require_same_ring(ring_, I.ring());
    for (const auto& g : I.generators()) {
      bool hit = std::any_of(vars_.begin(), vars_.end(), [&](std::size_t v) { return g[v] != 0; });
      if (!hit) return false;
    }
    return true;
  }

  bool contains(const MonomialPrime& q) const {
    require_same_ring(ring_, q.ring_);
    return std::includes(vars_.begin(), vars_.end(), q.vars_.begin(), q.vars_.end());
  }

  MonomialIdeal as_ideal() const {
    std::vector<Monomial> gens;
    for (auto v : vars_) gens.push_back(Monomial::variable(ring_, v));
    return minimalize(ring_, std::move(gens));
  }

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return same_ring(a.ring_, b.ring_) && a.vars_ == b.vars_;
  }
  friend auto operator<=>(const MonomialPrime& a, const MonomialPrime& b) { return a.vars_ <=> b.vars_; }

 private:
  RingPtr ring_;
  std::vector<std::size_t> vars_;
};

inline std::string to_string(const MonomialPrime& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.variables().size(); ++k) {
    if (k) s += ", ";
    s += p.ring()->name(p.variables()[k]);
  }
  return s + ")";
}

/// Pure-power ideal (x_{i_1}^{a_1}, ..., x_{i_r}^{a_r}); absent variables
/// carry exponent 0.
class IrreducibleComponent {
 public:
  IrreducibleComponent(RingPtr ring, std::vector<Exponent> powers) : ring_(std::move(ring)), powers_(std::move(powers)) {
    if (powers_.size() != ring_->size()) throw std::invalid_argument("power vector length does not match ring");
    if (std::all_of(powers_.begin(), powers_.end(), [](Exponent e) { return e == 0; }))
      throw std::invalid_argument("irreducible component needs nonempty support");
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Exponent>& powers() const { return powers_; }
  Exponent power(std::size_t i) const { return powers_.at(i); }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < powers_.size(); ++i)
      if (powers_[i]) s.push_back(i);
    return s;
  }

  std::size_t height() const { return support().size(); }
  MonomialPrime radical() const { return MonomialPrime(ring_, support()); }

  MonomialIdeal as_ideal() const {
    std::vector<Monomial> gens;
    for (auto i : support()) gens.push_back(Monomial::variable(ring_, i, powers_[i]));
    return minimalize(ring_, std::move(gens));
  }

  /// Ideal containment between pure-power ideals.
  bool is_contained_in(const IrreducibleComponent& other) const {
    for (std::size_t i = 0; i < powers_.size(); ++i) {
      if (powers_[i] == 0) continue;
      if (other.powers_[i] == 0 || other.powers_[i] > powers_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return same_ring(a.ring_, b.ring_) && a.powers_ == b.powers_;
  }
  friend auto operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.powers_ <=> b.powers_;
  }

 private:
  RingPtr ring_;
  std::vector<Exponent> powers_;
};

inline std::string to_string(const IrreducibleComponent& c) {
  std::string s = "(";
  bool first = true;
  for (auto i : c.support()) {
    if (!first) s += ", ";
    first = false;
    s += to_string(Monomial::variable(c.ring(), i, c.power(i)));
  }
  return s + ")";
}

/// Deletes every variable outside p from each generator. A generator with
/// no variable in p turns the localization into the unit ideal.
inline IdealOrUnit localize(const MonomialIdeal& I, const MonomialPrime& p) {
  require_same_ring(I.ring(), p.ring());
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Exponent> e(g.size(), 0);
    for (auto v : p.variables()) e[v] = g[v];
    Monomial image(I.ring(), std::move(e));
    if (image.is_one()) return UnitIdeal{};
    gens.push_back(std::move(image));
  }
  return minimalize(I.ring(), std::move(gens));
}

namespace detail {

inline void split_into_pure_powers(const MonomialIdeal& I, std::set<std::vector<Exponent>>& leaves,
                                   std::set<std::vector<Monomial>>& seen) {
  if (!seen.insert(I.generators()).second) return;
  auto mixed = std::find_if(I.generators().begin(), I.generators().end(),
                            [](const Monomial& m) { return m.support_size() > 1; });
  if (mixed == I.generators().end()) {
    std::vector<Exponent> powers(I.ring()->size(), 0);
    for (const auto& g : I.generators()) {
      auto i = g.support().front();
      powers[i] = g[i];
    }
    leaves.insert(std::move(powers));
    return;
  }
  // M = u * v with u the pure power of M's first variable.
  const std::size_t i = mixed->support().front();
  Monomial u = Monomial::variable(I.ring(), i, (*mixed)[i]);
  Monomial v = mixed->with_exponent(i, 0);
  std::vector<Monomial> with_u = I.generators(), with_v = I.generators();
  with_u.push_back(u);
  with_v.push_back(v);
  split_into_pure_powers(minimalize(I.ring(), std::move(with_u)), leaves, seen);
  split_into_pure_powers(minimalize(I.ring(), std::move(with_v)), leaves, seen);
}

inline MonomialIdeal intersect_components(const std::vector<IrreducibleComponent>& comps, std::size_t skip) {
  std::optional<MonomialIdeal> acc;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (k == skip) continue;
    acc = acc ? intersect(*acc, comps[k].as_ideal()) : comps[k].as_ideal();
  }
  return *acc;
}

}  // namespace detail

/// Intersection of pure-power components.
inline MonomialIdeal intersect_components(const std::vector<IrreducibleComponent>& comps) {
  if (comps.empty()) throw std::invalid_argument("intersection of an empty family");
  return detail::intersect_components(comps, comps.size());
}

/// The unique irredundant irreducible decomposition, sorted. The zero ideal
/// yields an empty list.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_zero()) return {};
  std::set<std::vector<Exponent>> leaves;
  std::set<std::vector<Monomial>> seen;
  detail::split_into_pure_powers(I, leaves, seen);

  std::vector<IrreducibleComponent> comps;
  for (const auto& p : leaves) comps.emplace_back(I.ring(), p);
  // A component containing another one is redundant.
  std::vector<IrreducibleComponent> pruned;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b)
      redundant = a != b && comps[b].is_contained_in(comps[a]);
    if (!redundant) pruned.push_back(comps[a]);
  }
  for (std::size_t k = 0; k < pruned.size() && pruned.size() > 1;) {
    if (detail::intersect_components(pruned, k) == I)
      pruned.erase(pruned.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }
  std::sort(pruned.begin(), pruned.end());
  return pruned;
}

namespace detail {

inline std::vector<MonomialPrime> minimal_under_inclusion(std::vector<MonomialPrime> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<MonomialPrime> out;
  for (std::size_t a = 0; a < primes.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < primes.size() && !dominated; ++b)
      dominated = a != b && primes[a].contains(primes[b]);
    if (!dominated) out.push_back(primes[a]);
  }
  return out;
}

}  // namespace detail

inline std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError();
  std::vector<MonomialPrime> radicals;
  for (const auto& c : irreducible_decomposition(I)) radicals.push_back(c.radical());
  return detail::minimal_under_inclusion(std::move(radicals));
}

/// Radicals of the irredundant irreducible components, sorted and distinct.
inline std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError();
  std::set<MonomialPrime> out;
  for (const auto& c : irreducible_decomposition(I)) out.insert(c.radical());
  return {out.begin(), out.end()};
}

inline std::size_t height(const MonomialIdeal& I) {
  std::size_t h = I.ring()->size();
  for (const auto& p : minimal_primes(I)) h = std::min(h, p.height());
  return h;
}

/// An associated prime of J/I together with a monomial u in J \ I such that
/// (I : u) equals the prime.
struct AssociatedPrime {
  MonomialPrime prime;
  Monomial witness;
};

namespace detail {

/// Calls f on every monomial dividing `bound`, in odometer order.
template <typename F>
void for_each_divisor(const Monomial& bound, F&& f) {
  std::vector<Exponent> e(bound.size(), 0);
  while (true) {
    f(Monomial(bound.ring(), e));
    std::size_t i = 0;
    for (; i < e.size(); ++i) {
      if (e[i] < bound[i]) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == e.size()) return;
  }
}

inline std::optional<MonomialPrime> as_prime(const MonomialIdeal& I) {
  std::vector<std::size_t> vars;
  for (const auto& g : I.generators()) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(g.support().front());
  }
  if (vars.empty()) return std::nullopt;
  return MonomialPrime(I.ring(), std::move(vars));
}

inline std::vector<AssociatedPrime> ass_by_witness(const MonomialIdeal& I, const MonomialIdeal* J) {
  if (I.is_zero()) throw ZeroIdealError();
  Monomial bound = I.lcm_of_generators();
  if (J) {
    require_same_ring(I.ring(), J->ring());
    if (!J->contains(I)) throw std::invalid_argument("ass_quotient requires I to be contained in J");
    bound = lcm(bound, J->lcm_of_generators());
  }
  std::map<MonomialPrime, Monomial> found;
  for_each_divisor(bound, [&](const Monomial& u) {
    if (J && !J->contains(u)) return;
    if (I.contains(u)) return;
    auto c = colon(I, u);
    if (auto p = as_prime(std::get<MonomialIdeal>(c))) found.try_emplace(*p, u);
  });
  std::vector<AssociatedPrime> out;
  for (auto& [p, u] : found) out.push_back({p, u});
  return out;
}

}  // namespace detail

/// Ass(J/I) for monomial ideals I contained in J, found as the prime colon
/// ideals (I : u) with u a monomial of J outside I. Only divisors of the lcm
/// of all generators are searched; larger exponents do not change (I : u).
inline std::vector<AssociatedPrime> ass_quotient(const MonomialIdeal& I, const MonomialIdeal& J) {
  return detail::ass_by_witness(I, &J);
}

/// Ass(R/I) by the same witness search, with J the whole ring.
inline std::vector<AssociatedPrime> ass_quotient(const MonomialIdeal& I) { return detail::ass_by_witness(I, nullptr); }

/// Size of a largest set of pairwise coprime minimal generators.
inline std::size_t beta_coprime(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError();
  const auto& g = I.generators();
  const std::size_t q = g.size();
  std::vector<std::vector<bool>> ok(q, std::vector<bool>(q));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) ok[a][b] = coprime(g[a], g[b]);

  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t next) -> void {
    best = std::max(best, chosen.size());
    if (chosen.size() + (q - next) <= best) return;
    for (std::size_t k = next; k < q; ++k) {
      bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return ok[c][k]; });
      if (!fits) continue;
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return best;
}

}  // namespace polar
