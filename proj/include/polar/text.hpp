#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polar/decomposition.hpp"

namespace polar {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

/// Recursive-descent reader for
///   text    := [ 'vars:' var (',' var)* (';' | newline) ] ideal
///   ideal   := monomial (',' monomial)*
///   monomial:= factor ('*' factor)*
///   factor  := var ('^' nat)?
///   var     := letter alnum* | letter alnum* '[' nat ',' nat ']'
class IdealReader {
 public:
  explicit IdealReader(std::string_view text) : s_(text) {}

  std::vector<std::string> header() {
    skip_ws();
    if (s_.substr(pos_, 5) != "vars:") return {};
    pos_ += 5;
    std::vector<std::string> names;
    while (true) {
      skip_ws(false);
      names.push_back(identifier());
      skip_ws(false);
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    if (pos_ < s_.size() && (s_[pos_] == ';' || s_[pos_] == '\n')) {
      ++pos_;
    } else {
      throw ParseError("expected ';' or newline after variable header", pos_);
    }
    return names;
  }

  /// Each monomial as a list of (variable name, exponent) factors.
  std::vector<std::vector<std::pair<std::string, Exponent>>> ideal() {
    std::vector<std::vector<std::pair<std::string, Exponent>>> out;
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("empty ideal", pos_);
    while (true) {
      out.push_back(monomial());
      skip_ws();
      if (pos_ >= s_.size()) break;
      expect(',');
    }
    return out;
  }

  std::size_t position() const { return pos_; }

 private:
  void skip_ws(bool newlines = true) {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) && (newlines || s_[pos_] != '\n'))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::uint64_t natural() {
    skip_ws();
    const auto start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return v;
  }

  std::string identifier() {
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("constant monomials are not allowed", pos_);
      throw ParseError("expected a variable", pos_);
    }
    const auto start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    auto save = pos_;
    skip_ws(false);
    if (pos_ < s_.size() && s_[pos_] == '[') {
      ++pos_;
      auto i = natural();
      expect(',');
      auto j = natural();
      expect(']');
      if (i == 0 || j == 0) throw ParseError("polar indices start at 1", start);
      return name + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    pos_ = save;
    return name;
  }

  std::vector<std::pair<std::string, Exponent>> monomial() {
    std::vector<std::pair<std::string, Exponent>> factors;
    while (true) {
      skip_ws();
      auto name = identifier();
      Exponent e = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        const auto at = pos_;
        auto v = natural();
        if (v == 0) throw ParseError("exponent must be positive", at);
        e = static_cast<Exponent>(v);
      }
      factors.emplace_back(std::move(name), e);
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return factors;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

/// Splits an undeclared identifier into declared variable names, e.g. "xy"
/// into x and y. Empty result when no split exists.
inline std::vector<std::size_t> split_identifier(const std::string& id, const Ring& ring) {
  std::vector<std::size_t> out;
  auto rec = [&](auto&& self, std::size_t at) -> bool {
    if (at == id.size()) return true;
    for (std::size_t len = id.size() - at; len > 0; --len) {
      if (auto k = ring.index_of(id.substr(at, len))) {
        out.push_back(*k);
        if (self(self, at + len)) return true;
        out.pop_back();
      }
    }
    return false;
  };
  if (!rec(rec, 0)) out.clear();
  return out;
}

}  // namespace detail

/// Parses an ideal. Variables come from, in order of precedence, `vars`,
/// a leading `vars: a,b,c;` header, or first appearance in the text. With a
/// declared ring, an undeclared identifier is read as a product of declared
/// variables when it splits that way.
inline MonomialIdeal parse_ideal(std::string_view text, const std::optional<std::vector<std::string>>& vars = {}) {
  detail::IdealReader reader(text);
  auto header = reader.header();
  const auto body_start = reader.position();
  auto monomials = reader.ideal();

  std::vector<std::string> names;
  const bool declared = vars.has_value() || !header.empty();
  if (vars) {
    names = *vars;
  } else if (!header.empty()) {
    names = header;
  } else {
    for (const auto& m : monomials)
      for (const auto& [name, e] : m)
        if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  }
  RingPtr ring;
  try {
    ring = make_ring(names);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }

  std::vector<Monomial> gens;
  for (const auto& m : monomials) {
    Monomial g = Monomial::one(ring);
    for (const auto& [name, e] : m) {
      std::vector<std::size_t> idx;
      if (auto k = ring->index_of(name))
        idx.push_back(*k);
      else if (declared)
        idx = detail::split_identifier(name, *ring);
      if (idx.empty()) throw ParseError("unknown variable '" + name + "'", body_start);
      for (auto k : idx) g = g.with_exponent(k, g[k] + e);
    }
    gens.push_back(std::move(g));
  }
  return minimalize(ring, std::move(gens));
}

/// Parses `x1, x3` or `(x1, x3)` as a prime of `ring`.
inline MonomialPrime parse_prime(std::string_view text, const RingPtr& ring) {
  std::string body(text);
  auto l = body.find_first_not_of(" \t\n");
  auto r = body.find_last_not_of(" \t\n");
  if (l == std::string::npos) throw ParseError("empty prime", 0);
  body = body.substr(l, r - l + 1);
  if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  auto I = parse_ideal(body, ring->names());
  std::vector<std::size_t> vars;
  for (const auto& g : I.generators()) {
    if (g.degree() != 1) throw ParseError("a prime is generated by variables", 0);
    vars.push_back(g.support().front());
  }
  return MonomialPrime(ring, std::move(vars));
}

/// Generators in canonical order, `x1^2, x1*x2`; the zero ideal is `0`.
inline std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) out += ", ";
    out += to_string(I.generators()[k]);
  }
  return out;
}

/// Full serialization with the ring header; parse_ideal inverts it.
inline std::string to_text(const MonomialIdeal& I) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < I.ring()->size(); ++i) {
    if (i) out += ",";
    out += I.ring()->name(i);
  }
  return out + "; " + to_string(I);
}

}  // namespace polar
