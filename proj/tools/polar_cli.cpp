#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "polar/cli.hpp"

namespace {

std::string usage_commands() {
  std::string out;
  for (const auto& c : polar::cli::commands()) out += (out.empty() ? "" : ", ") + c;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideals through polarization"};
  polar::cli::Options opt;
  std::string format = "human";
  std::string vars;

  app.add_option("command", opt.command, "one of: " + usage_commands())->required();
  app.add_option("ideal", opt.ideal, "ideal text, e.g. \"x1^2, x1*x2\"; '-' reads stdin; omit for fuzzing check commands");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--vars", vars, "comma separated ring variables, in order");
  app.add_option("--prime", opt.prime, "prime for localize / check-localization, e.g. \"x1,x3\"");
  app.add_option("--seed", opt.seed, "seed for fuzzing");
  app.add_option("--trials", opt.trials, "fuzz trials");
  app.add_option("--max-facets", opt.max_facets, "forest size budget");
  app.add_option("--max-degree", opt.max_degree, "degree budget for random ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!vars.empty()) {
    std::vector<std::string> names;
    std::stringstream ss(vars);
    for (std::string name; std::getline(ss, name, ',');) {
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (!name.empty()) names.push_back(name);
    }
    opt.vars = names;
  }
  if (opt.ideal && *opt.ideal == "-")
    opt.ideal = std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());

  try {
    auto report = polar::cli::run(opt);
    std::cout << (format == "machine" ? report.machine() + "\n" : report.human());
    return report.exit_code();
  } catch (const polar::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
