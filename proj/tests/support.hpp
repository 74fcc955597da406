#pragma once

#include <string>
#include <vector>

#include "polar/polar.hpp"

namespace test {

inline polar::RingPtr ring(std::vector<std::string> names) { return polar::make_ring(std::move(names)); }

inline polar::RingPtr xs(std::size_t n) { return polar::make_ring("x", n); }

inline polar::MonomialIdeal ideal(const std::string& text, const polar::RingPtr& r) {
  return polar::parse_ideal(text, r->names());
}

inline polar::Monomial mono(const std::string& text, const polar::RingPtr& r) {
  return ideal(text, r).generators().front();
}

inline polar::MonomialPrime prime(const polar::RingPtr& r, std::vector<std::string> names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(*r->index_of(n));
  return polar::MonomialPrime(r, idx);
}

template <typename T>
std::vector<std::string> strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(polar::to_string(x));
  return out;
}

}  // namespace test
