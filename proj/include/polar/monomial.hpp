#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polar/ring.hpp"

namespace polar {

using Exponent = std::uint32_t;

/// A monomial x_1^{a_1} ... x_n^{a_n}, stored as a dense exponent vector over
/// its ring. A zero entry means the variable is absent; the constant 1 is
/// the all-zero vector.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(RingPtr ring) : ring_(std::move(ring)), exp_(ring_->size(), 0) {}

  Monomial(RingPtr ring, std::vector<Exponent> exponents)
      : ring_(std::move(ring)), exp_(std::move(exponents)) {
    if (exp_.size() != ring_->size())
      throw std::invalid_argument("exponent vector length does not match ring");
  }

  static Monomial one(RingPtr ring) { return Monomial(std::move(ring)); }

  static Monomial variable(RingPtr ring, std::size_t index, Exponent power = 1) {
    Monomial m(std::move(ring));
    m.exp_.at(index) = power;
    return m;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return exp_.size(); }
  Exponent operator[](std::size_t i) const { return exp_[i]; }
  Exponent exponent(std::size_t i) const { return exp_.at(i); }
  const std::vector<Exponent>& exponents() const { return exp_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exp_) d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e == 0; });
  }

  bool is_square_free() const {
    return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e <= 1; });
  }

  /// Indices of the variables that occur.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] != 0) s.push_back(i);
    return s;
  }

  std::size_t support_size() const {
    return static_cast<std::size_t>(
        std::count_if(exp_.begin(), exp_.end(), [](Exponent e) { return e != 0; }));
  }

  bool is_pure_power() const { return support_size() == 1; }

  Monomial with_exponent(std::size_t i, Exponent e) const {
    Monomial m = *this;
    m.exp_.at(i) = e;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return same_ring(a.ring_, b.ring_) && a.exp_ == b.exp_;
  }

  /// Lexicographic on exponent vectors; rings are assumed equal.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exp_ <=> b.exp_;
  }

 private:
  RingPtr ring_;
  std::vector<Exponent> exp_;
};

/// Canonical generator order: descending lex, so x1^2 comes before x1*x2.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() > b.exponents();
  }
};

inline bool divides(const Monomial& m, const Monomial& n) {
  require_same_ring(m.ring(), n.ring());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > n[i]) return false;
  return true;
}

inline Monomial lcm(const Monomial& m, const Monomial& n) {
  require_same_ring(m.ring(), n.ring());
  std::vector<Exponent> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = std::max(m[i], n[i]);
  return Monomial(m.ring(), std::move(e));
}

inline Monomial gcd(const Monomial& m, const Monomial& n) {
  require_same_ring(m.ring(), n.ring());
  std::vector<Exponent> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = std::min(m[i], n[i]);
  return Monomial(m.ring(), std::move(e));
}

inline Monomial operator*(const Monomial& m, const Monomial& n) {
  require_same_ring(m.ring(), n.ring());
  std::vector<Exponent> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i] + n[i];
  return Monomial(m.ring(), std::move(e));
}

/// m / gcd(m, n).
inline Monomial strip(const Monomial& m, const Monomial& n) {
  require_same_ring(m.ring(), n.ring());
  std::vector<Exponent> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i] > n[i] ? m[i] - n[i] : 0;
  return Monomial(m.ring(), std::move(e));
}

inline bool coprime(const Monomial& m, const Monomial& n) {
  require_same_ring(m.ring(), n.ring());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0 && n[i] != 0) return false;
  return true;
}

/// Renders as `x1^2*x2`; the constant monomial renders as `1`.
inline std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << m.ring()->name(i);
    if (m[i] > 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

}  // namespace polar
