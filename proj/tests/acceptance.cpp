// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "polar/polar.hpp"

using namespace polar;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int number, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << number << "] " << name;
  if (auto d = o.detail.str(); !d.empty()) std::cout << " -- " << d;
  std::cout << std::endl;
}

MonomialIdeal parse(const std::string& text, const RingPtr& R) { return parse_ideal(text, R->names()); }

template <typename T>
std::vector<std::string> strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> set_strings(const std::vector<VertexSet>& v, const Ring& R) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(to_string(s, R));
  return out;
}

// Shared random corpus of ideal pairs for the polarization properties.
struct Pair {
  MonomialIdeal I, J;
};

std::vector<Pair> corpus() {
  Rng rng(20240601);
  RandomIdealOptions opt;  // at most 5 variables, degree 4, 6 generators
  std::vector<Pair> out;
  for (int t = 0; t < 240; ++t) {
    auto R = make_ring("x", 1 + t % opt.max_variables);
    out.push_back({random_ideal(rng, R, opt), random_ideal(rng, R, opt)});
  }
  return out;
}

oracle::Gens prime_intersection(const std::vector<MonomialPrime>& primes, std::size_t n) {
  std::vector<oracle::Gens> family;
  for (const auto& p : primes) family.push_back(oracle::gens(p.as_ideal()));
  return oracle::intersection(family, n);
}

const RingPtr R2 = make_ring("x", 2);
const RingPtr R3 = make_ring("x", 3);

}  // namespace

int main() {
  const auto pairs = corpus();

  criterion(1, "polarization of (x1^2, x1*x2, x2^3)", [](Outcome& o) {
    auto P = polarize_ideal(parse("x1^2, x1*x2, x2^3", R2)).ideal;
    o.expect(to_string(P) == "x[1,1]*x[1,2], x[1,1]*x[2,1], x[2,1]*x[2,2]*x[2,3]", to_string(P));
  });

  criterion(2, "polar primes of (x1^2, x1*x2, x2^3)", [](Outcome& o) {
    auto primes = strings(polar_decomposition_general(parse("x1^2, x1*x2, x2^3", R2)));
    const std::vector<std::string> expected{"(x[1,1], x[2,1])", "(x[1,1], x[2,2])", "(x[1,1], x[2,3])",
                                            "(x[1,2], x[2,1])"};
    o.expect(primes == expected, "got " + std::to_string(primes.size()) + " primes");
  });

  criterion(3, "tree ideal (x1^3, x1^2*x2*x3, x3^2, x2^3*x3)", [](Outcome& o) {
    auto I = parse("x1^3, x1^2*x2*x3, x3^2, x2^3*x3", R3);
    auto D = polar_complex(I);
    o.expect(is_tree(D), "P(I) not a tree");
    o.expect(alpha(D) == 2 && height(I) == 2, "alpha/height");
    o.expect(beta_coprime(I) == 2, "beta");
    auto jr = joint_removal_check(I);
    std::vector<Monomial> joints;
    for (const auto& d : jr.drops) joints.push_back(d.generator);
    o.expect(strings(joints) == std::vector<std::string>{"x1^2*x2*x3", "x2^3*x3"}, "joint generators");
    auto variants = heights_after_dropping(I, joints);
    o.expect(variants.size() == 4, "four variants");
    for (const auto& [J, h] : variants) o.expect(h == 2 && oracle::height(oracle::gens(J), 3) == 2, to_string(J));
    o.detail << "variants at height 2: " << variants.size();
  });

  criterion(4, "covers and nonface ideal of <xyz, yu, uvw>", [](Outcome& o) {
    auto V = make_ring({"x", "y", "z", "u", "v", "w"});
    auto D = facet_complex(parse("x*y*z, y*u, u*v*w", V));
    auto covers = set_strings(minimal_vertex_covers(D), *V);
    std::sort(covers.begin(), covers.end());
    std::vector<std::string> expected{"{x,u}", "{y,u}", "{y,v}", "{y,w}", "{z,u}"};
    std::sort(expected.begin(), expected.end());
    o.expect(covers == expected, "covers");
    o.expect(is_unmixed(D), "unmixed");
    auto N = nonface_ideal(D);
    o.expect(N == parse("x*u, x*v, x*w, y*v, y*w, z*u, z*v, z*w", V), to_string(N));
  });

  criterion(5, "leaves of <xyz, yzu, zuv>", [](Outcome& o) {
    auto V = make_ring({"x", "y", "z", "u", "v"});
    auto D = facet_complex(parse("x*y*z, y*z*u, z*u*v", V));
    auto k = [&](const std::string& m) { return *D.facet_index(make_vertex_set(5, parse(m, V).generators()[0].support())); };
    o.expect(is_leaf(D, k("x*y*z")), "xyz is a leaf");
    o.expect(!is_leaf(D, k("y*z*u")), "yzu is not a leaf");
  });

  criterion(6, "localization of (x1^3, x1^2*x2) at (x1)", [](Outcome& o) {
    auto r = localization_forest_check(parse("x1^3, x1^2*x2", R2), MonomialPrime(R2, {0}));
    o.expect(r.localized == parse("x1^2", R2), "I_p");
    o.expect(to_string(r.polar_localized) == "x[1,1]*x[1,2]", "P(I_p)");
    o.expect(to_string(r.polar_then_local) == "x[1,1]", "P(I)_P(p)");
    o.expect(!r.commutes, "should not commute");
  });

  criterion(7, "polarization commutes with sum, intersection, divisibility, height", [&](Outcome& o) {
    Rng rng(7);
    std::size_t checked = 0;
    for (const auto& [I, J] : pairs) {
      const auto S = joint_polar_ring(I, J);
      const auto n = S.size();
      auto PI = polarize_ideal(I, S), PJ = polarize_ideal(J, S);
      auto gI = oracle::gens(PI), gJ = oracle::gens(PJ);
      o.expect(polarize_ideal(sum(I, J), S) == sum(PI, PJ), "sum " + to_text(I));
      o.expect(oracle::same_ideal(oracle::gens(polarize_ideal(intersect(I, J), S)), oracle::intersection(gI, gJ, n), n),
               "intersection " + to_text(I) + " / " + to_text(J));
      o.expect(height(I) == oracle::height(gI, n), "height " + to_text(I));
      for (int k = 0; k < 5; ++k) {
        auto a = random_monomial(rng, I.ring(), 4), b = random_monomial(rng, I.ring(), 4);
        PolarRing T(I.ring(), std::vector<Exponent>(I.ring()->size(), 8));
        o.expect(oracle::le(oracle::exps(a), oracle::exps(b)) ==
                     oracle::le(oracle::exps(polarize_monomial(a, T)), oracle::exps(polarize_monomial(b, T))),
                 "divisibility " + to_string(a) + " | " + to_string(b));
      }
      ++checked;
    }
    o.detail << checked << " pairs";
  });

  criterion(8, "polar primes of irreducible ideals and powers", [](Outcome& o) {
    std::size_t cases = 0;
    for (std::size_t r = 1; r <= 3; ++r) {
      auto R = make_ring("x", r);
      for (const auto& e : oracle::box(oracle::Exps(r, 4))) {
        if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })) continue;
        IrreducibleComponent c(R, std::vector<Exponent>(e.begin(), e.end()));
        auto [S, P] = polarize_ideal(c.as_ideal());
        o.expect(oracle::same_ideal(prime_intersection(polar_decomposition_irreducible(c, S), S.size()),
                                    oracle::gens(P), S.size()),
                 to_string(c));
        ++cases;
      }
      std::vector<std::size_t> vars(r);
      for (std::size_t i = 0; i < r; ++i) vars[i] = i;
      for (Exponent m = 1; m <= 4; ++m) {
        PolarRing S(R, std::vector<Exponent>(r, m));
        std::vector<Monomial> gens;
        for (const auto& e : oracle::box(oracle::Exps(r, m))) {
          unsigned d = 0;
          for (auto x : e) d += x;
          if (d == m) gens.emplace_back(R, std::vector<Exponent>(e.begin(), e.end()));
        }
        auto P = polarize_ideal(minimalize(R, gens), S);
        o.expect(oracle::same_ideal(prime_intersection(polar_decomposition_power(vars, m, S), S.size()),
                                    oracle::gens(P), S.size()),
                 "power r=" + std::to_string(r) + " m=" + std::to_string(m));
        ++cases;
      }
    }
    o.detail << cases << " ideals";
  });

  criterion(9, "associated primes of I and P(I) correspond", [&](Outcome& o) {
    std::size_t checked = 0, strict_misses = 0;
    for (const auto& pr : pairs) {
      for (const auto* I : {&pr.I, &pr.J}) {
        auto rep = ass_correspondence_report(*I);
        auto [S, P] = polarize_ideal(*I);
        auto polar_ass = oracle::associated(oracle::gens(P), S.size());
        o.expect(oracle::index_sets(rep.polar_ass) == polar_ass, "polar Ass " + to_text(*I));
        // Projection to base variables, by name.
        std::set<oracle::Index> projected;
        for (const auto& q : polar_ass) {
          oracle::Index b;
          for (auto k : q) b.insert(S.variable(k).base);
          projected.insert(b);
        }
        o.expect(projected == oracle::associated(oracle::gens(*I), I->ring()->size()), "projection " + to_text(*I));
        // Lowering slots keeps a prime over P(I).
        for (const auto& q : polar_ass) {
          oracle::Index low;
          for (auto k : q) low.insert(S.index(S.variable(k).base, 1));
          bool over = std::all_of(P.generators().begin(), P.generators().end(),
                                  [&](const Monomial& g) { return oracle::hits(low, oracle::exps(g)); });
          o.expect(over, "saturation " + to_text(*I));
        }
        o.expect(rep.passed(), "report " + to_text(*I));
        if (!rep.strictly_saturated) ++strict_misses;
        ++checked;
      }
    }
    o.detail << checked << " ideals; lowered primes lie over P(I) in all; lowered primes are themselves "
             << "associated in " << checked - strict_misses << " (not in " << strict_misses
             << ", e.g. (x1^2, x1*x2))";
  });

  criterion(10, "polarizing sequence recovers I", [&](Outcome& o) {
    std::size_t checked = 0;
    for (const auto& pr : pairs) {
      for (const auto* I : {&pr.I, &pr.J}) {
        auto [S, P] = polarize_ideal(*I);
        o.expect(depolarize_ideal(P, S) == *I, "depolarize " + to_text(*I));
        o.expect(apply_polarizing_sequence(P, S, polarization_sequence(S)) == embed_in_polar_ring(*I, S),
                 "sequence " + to_text(*I));
        ++checked;
      }
    }
    o.detail << checked << " ideals";
  });

  criterion(11, "forests: height = beta, joint removal, localizations", [](Outcome& o) {
    Rng rng(11);
    RandomForestOptions opt;
    opt.max_facets = 7;
    std::size_t forests = 0, drops = 0, localizations = 0;
    for (int t = 0; t < 150; ++t) {
      auto I = random_depolarization(rng, random_forest(rng, opt));
      const auto n = I.ring()->size();
      auto gI = oracle::gens(I);
      o.expect(oracle::is_forest(oracle::facets(polar_complex(I))), "not a forest " + to_text(I));
      o.expect(oracle::height(gI, n) == oracle::beta(gI), "height = beta " + to_text(I));
      o.expect(height(I) == beta_coprime(I), "library height/beta " + to_text(I));
      auto jr = joint_removal_check(I);
      for (const auto& d : jr.drops) {
        oracle::Gens kept;
        for (const auto& g : I.generators())
          if (!(g == d.generator)) kept.push_back(oracle::exps(g));
        o.expect(oracle::height(kept, n) == oracle::height(gI, n), "drop " + to_string(d.generator) + " " + to_text(I));
        ++drops;
      }
      o.expect(jr.verdict != Verdict::Fail, "joint removal verdict " + to_text(I));
      for (const auto& p : oracle::subsets(n)) {
        if (p.empty() || !std::all_of(gI.begin(), gI.end(), [&](const oracle::Exps& g) { return oracle::hits(p, g); }))
          continue;
        bool unit = false;
        auto local = oracle::localize(gI, p, unit);
        if (unit) {
          o.expect(false, "unit localization at a prime containing I");
          continue;
        }
        std::vector<Monomial> gens;
        for (const auto& e : local) gens.emplace_back(I.ring(), std::vector<Exponent>(e.begin(), e.end()));
        auto Ip = minimalize(I.ring(), gens);
        o.expect(Ip == std::get<MonomialIdeal>(localize(I, MonomialPrime(I.ring(), {p.begin(), p.end()}))),
                 "localize " + to_text(I));
        o.expect(oracle::is_forest(oracle::facets(facet_complex(polarize_ideal(Ip).ideal))),
                 "localization not a forest " + to_text(I));
        ++localizations;
      }
      ++forests;
    }
    o.detail << forests << " forests, " << drops << " joint drops, " << localizations << " localizations";
  });

  criterion(12, "filtration terms have the expected associated primes", [](Outcome& o) {
    auto check = [&](const MonomialIdeal& I) {
      const auto n = I.ring()->size();
      const auto gI = oracle::gens(I);
      auto comps = oracle::irreducible_components(gI, n);
      std::set<std::size_t> heights;
      for (const auto& c : comps) heights.insert(oracle::support(c).size());
      const std::vector<std::size_t> bounds(heights.rbegin(), heights.rend());
      auto f = scm_filtration(I);
      o.expect(f.bounds == bounds, "bounds " + to_text(I));
      if (f.bounds != bounds) return;
      auto term = [&](std::size_t bound) {
        std::vector<oracle::Gens> family;
        for (const auto& c : comps)
          if (oracle::support(c).size() <= bound) family.push_back(oracle::component_ideal(c));
        return oracle::intersection(family, n);
      };
      auto strata = [&](auto keep) {
        std::set<oracle::Index> out;
        for (const auto& c : comps)
          if (keep(oracle::support(c).size())) out.insert(oracle::support(c));
        return out;
      };
      for (std::size_t i = 0; i < bounds.size(); ++i) {
        const auto Ii = term(bounds[i]);
        o.expect(oracle::same_ideal(oracle::gens(f.chain[i]), Ii, n), "term " + std::to_string(i) + " " + to_text(I));
        o.expect(oracle::associated(Ii, n) == strata([&](std::size_t h) { return h <= bounds[i]; }),
                 "Ass(R/I_i) " + to_text(I));
        std::set<oracle::Index> sub;
        if (i + 1 < bounds.size()) {
          const auto next = term(bounds[i + 1]);
          sub = oracle::associated(gI, n, &next);
        } else {
          sub = oracle::associated(gI, n);
        }
        o.expect(sub == strata([&](std::size_t h) { return h >= bounds[i]; }), "Ass(I_i+1/I) " + to_text(I));
      }
      o.expect(verify_filtration_ass_strata(I).passed(), "library check " + to_text(I));
    };

    auto I = parse("x1^2, x1*x2", R2);
    auto f = scm_filtration(I);
    o.expect(f.chain.size() == 2 && f.chain[0] == I && f.chain[1] == parse("x1", R2), "(x1^2, x1*x2) chain");
    check(I);

    Rng rng(12);
    RandomForestOptions small;
    small.max_facets = 5;
    std::size_t found = 0, tried = 0;
    while (found < 60 && tried < 5000) {
      ++tried;
      auto J = random_depolarization(rng, random_forest(rng, small));
      if (height_strata(J).strata.size() < 2) continue;
      // The witness oracle scans 2^n primes times the exponent box.
      const auto gJ = oracle::gens(J);
      std::size_t work = std::size_t{1} << J.ring()->size();
      for (auto b : oracle::bound_of(J.ring()->size(), {&gJ})) work *= b + 1;
      if (work > 200000) continue;
      check(J);
      ++found;
    }
    o.expect(found >= 50, "only " + std::to_string(found) + " ideals with two strata");
    o.detail << found << " ideals with at least two strata";
  });

  criterion(13, "triangle <xy, yz, zx> is rejected", [](Outcome& o) {
    auto V = make_ring({"x", "y", "z"});
    auto I = parse("x*y, y*z, z*x", V);
    auto r = is_forest(facet_complex(I));
    o.expect(!r.forest && r.witness.size() == 3, "forest witness");
    o.expect(!oracle::is_forest(oracle::facets(facet_complex(I))), "oracle");
    o.expect(cm_tree_criterion(I) == CmVerdict::Inapplicable, "cm verdict");
    auto k = konig_check(I);
    o.expect(k.height == 2 && k.beta == 1 && k.verdict == Verdict::NoAssertion, "konig");
  });

  std::cout << (failures ? "FAIL" : "PASS") << " overall: " << failures << " failing criteria" << std::endl;
  return failures ? 1 : 0;
}
