#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "polar/cli.hpp"
#include "support.hpp"

using namespace polar;

TEST(Parse, Examples) {
  auto I = parse_ideal("x1^2, x1*x2, x2^3");
  EXPECT_EQ(I.ring()->names(), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(to_string(I), "x1^2, x1*x2, x2^3");
  EXPECT_EQ(to_string(parse_ideal("x")), "x");
  EXPECT_EQ(to_string(parse_ideal("  x2 * x1 ,x1^3*x2^2")), "x2*x1");

  EXPECT_THROW(parse_ideal("x^0"), ParseError);
  EXPECT_THROW(parse_ideal("1"), ParseError);
  EXPECT_THROW(parse_ideal(""), ParseError);
  EXPECT_THROW(parse_ideal("x,,y"), ParseError);
  EXPECT_THROW(parse_ideal("x^"), ParseError);
  try {
    parse_ideal("x1*x2, x3^0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
}

TEST(Parse, RingOrder) {
  // First appearance, then header, then an explicit list.
  EXPECT_EQ(parse_ideal("y*x, z").ring()->names(), (std::vector<std::string>{"y", "x", "z"}));
  auto h = parse_ideal("vars: x,y,z; y*x, z");
  EXPECT_EQ(h.ring()->names(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(to_string(h), "x*y, z");
  auto v = parse_ideal("y", std::vector<std::string>{"a", "y"});
  EXPECT_EQ(v.ring()->size(), 2u);
  EXPECT_THROW(parse_ideal("q", std::vector<std::string>{"a", "y"}), ParseError);
}

TEST(Parse, SplitsJuxtapositionUnderDeclaredRing) {
  auto I = parse_ideal("xy,yz,zx", std::vector<std::string>{"x", "y", "z"});
  EXPECT_EQ(to_string(I), "x*y, x*z, y*z");
  EXPECT_EQ(to_string(parse_ideal("vars: x,y\nxy*y")), "x*y^2");
  // Without declared names "xy" is one variable.
  EXPECT_EQ(parse_ideal("xy,yz,zx").ring()->size(), 3u);
}

TEST(Parse, PolarNamesAndPrimes) {
  auto Q = parse_ideal("x[1,1]*x[1,2], x[2,1]");
  EXPECT_EQ(Q.ring()->names(), (std::vector<std::string>{"x[1,1]", "x[1,2]", "x[2,1]"}));
  auto R = test::xs(3);
  EXPECT_EQ(to_string(parse_prime("(x1, x3)", R)), "(x1, x3)");
  EXPECT_EQ(to_string(parse_prime("x3,x1", R)), "(x1, x3)");
  EXPECT_THROW(parse_prime("x1*x2", R), ParseError);
}

TEST(Parse, RoundTrip) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    auto R = make_ring("x", 1 + t % 6);
    auto I = random_ideal(rng, R);
    auto back = parse_ideal(to_text(I));
    EXPECT_EQ(back.ring()->names(), R->names());
    EXPECT_EQ(to_string(back), to_string(I));
    EXPECT_EQ(to_text(back), to_text(I));
    auto P = polarize_ideal(I).ideal;
    EXPECT_EQ(to_text(parse_ideal(to_text(P))), to_text(P));
  }
}

namespace {

cli::Options opts(std::string command, std::optional<std::string> ideal = {}) {
  cli::Options o;
  o.command = std::move(command);
  o.ideal = std::move(ideal);
  return o;
}

// Leaves of a JSON document keyed by path, written independently of the
// report's own renderer.
void leaves(const nlohmann::json& j, const std::string& path, std::map<std::string, std::string>& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) leaves(*it, path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) leaves(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out[path] = j.is_string() ? j.get<std::string>() : j.dump();
  }
}

std::map<std::string, std::string> human_lines(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    auto k = line.find(": ");
    out[line.substr(0, k)] = line.substr(k + 2);
  }
  return out;
}

}  // namespace

TEST(Report, Examples) {
  auto d = cli::run(opts("decompose", "x1^2,x1*x2,x2^3")).doc;
  EXPECT_EQ(d["results"]["components"], nlohmann::json({"(x1, x2^3)", "(x1^2, x2)"}));

  auto o = opts("is-tree", "xy,yz,zx");
  o.vars = std::vector<std::string>{"x", "y", "z"};
  auto t = cli::run(o);
  EXPECT_FALSE(t.doc["results"]["tree"].get<bool>());
  EXPECT_EQ(t.doc["witness"].size(), 3u);
  EXPECT_EQ(t.exit_code(), 0);

  auto p = cli::run(opts("polarize", "x1^2,x1*x2,x2^3")).doc;
  EXPECT_EQ(p["results"]["ideal"], nlohmann::json({"x[1,1]*x[1,2]", "x[1,1]*x[2,1]", "x[2,1]*x[2,2]*x[2,3]"}));

  auto back = opts("depolarize", "x[1,1]*x[1,2], x[1,1]*x[2,1], x[2,1]*x[2,2]*x[2,3]");
  EXPECT_EQ(cli::run(back).doc["results"]["ideal"], nlohmann::json({"x1^2", "x1*x2", "x2^3"}));
  back.ideal = "x[1,1]*y";
  EXPECT_THROW(cli::run(back), cli::UsageError);

  auto loc = opts("localize", "x1^3, x1^2*x2");
  loc.prime = "x1";
  EXPECT_EQ(cli::run(loc).doc["results"]["ideal"], nlohmann::json({"x1^2"}));
  loc.prime = "x2";
  EXPECT_EQ(cli::run(loc).doc["results"]["ideal"], "unit");
}

TEST(Report, MachineAndHumanCarryTheSameContent) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"decompose", "x1^2,x1*x2,x2^3"},  {"ass", "x1^2, x1*x2"},        {"filtration", "x1^2, x1*x2^2, x1*x2*x3"},
      {"leaves", "x1^3, x1^2*x2*x3, x3^2, x2^3*x3"}, {"complex-info", "x*y, y*z, z*u"}, {"dual", "x*y, y*z"},
      {"covers", "x*y, y*z"},            {"check-appendix", "x1^2, x1*x2"}, {"check-joint-removal", "x1^3, x1^2*x2*x3, x3^2, x2^3*x3"},
      {"check-localization", "x1^3, x1^2*x2"}, {"height", "x1*x2"}, {"beta", "x*y, z"}, {"scm-verdict", "x1^2, x2"},
      {"cm-verdict", "x1^2, x1*x2, x2^3"}, {"check-konig", "x*y, y*z, z*x"}};
  for (const auto& [cmd, text] : cases) {
    auto r = cli::run(opts(cmd, text));
    std::map<std::string, std::string> expected;
    leaves(nlohmann::json::parse(r.machine()), "", expected);
    EXPECT_EQ(human_lines(r.human()), expected) << cmd;
    // Keys sorted at every level.
    auto doc = nlohmann::json::parse(r.machine());
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "elapsed_ms", "inputs", "results", "verdict", "witness"}));
  }
}

TEST(Report, ExitCodes) {
  EXPECT_THROW(cli::run(opts("frobnicate", "x")), cli::UsageError);
  EXPECT_THROW(cli::run(opts("height", "x^0")), cli::UsageError);
  EXPECT_THROW(cli::run(opts("height")), cli::UsageError);
  EXPECT_THROW(cli::run(opts("localize", "x")), cli::UsageError);

  cli::Report fail;
  fail.doc = {{"verdict", "fail"}};
  EXPECT_EQ(fail.exit_code(), 1);
  for (const char* v : {"pass", "ok", "no-assertion", "inapplicable"}) {
    cli::Report r;
    r.doc = {{"verdict", v}};
    EXPECT_EQ(r.exit_code(), 0) << v;
  }
}

TEST(Report, FuzzIsSeeded) {
  auto o = opts("check-appendix");
  o.trials = 30;
  o.seed = 5;
  auto a = cli::run(o).doc, b = cli::run(o).doc;
  EXPECT_EQ(a["results"], b["results"]);
  EXPECT_EQ(a["verdict"], "pass");
  EXPECT_EQ(a["results"]["asserted"], 30);
}
