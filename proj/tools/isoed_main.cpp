// Command-line front end: parses flags and dispatches to isoed::cli.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "isoed/commands.hpp"

int main(int argc, char** argv) {
  using namespace isoed::cli;

  CLI::App app{"Essential dimension bounds for isogenies of abelian varieties, and abelian p-group action bounds"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;

  auto* kernel = app.add_subcommand("kernel", "Kernel structure of the instance's isogeny");
  kernel->add_option("file", file, "Instance file")->required();
  kernel->add_flag("--json", json, "Print the structured block");

  auto* subs = app.add_subcommand("subvarieties", "Enumerate the abelian subvarieties of the instance");
  subs->add_option("file", file, "Instance file")->required();
  subs->add_flag("--json", json, "Print the structured block");

  BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "Certified lower bound, upper bound and exact value when available");
  bounds->add_option("file", file, "Instance file")->required();
  bounds->add_flag("--json", bounds_opts.json, "Print the structured block");
  bounds->add_flag("--require-lower", bounds_opts.require_lower, "Fail with exit 3 if no lower bound can be certified");

  auto* exact = app.add_subcommand("exact", "Exact essential dimension under the coprimality hypothesis");
  exact->add_option("file", file, "Instance file")->required();
  exact->add_flag("--json", json, "Print the structured block");

  GroupBoundArgs gb;
  std::string chi_text;
  auto* group = app.add_subcommand("groupbound", "Rank and degree bounds for abelian p-group actions");
  group->add_option("--kind", gb.kind, "Bound to compute")
      ->required()
      ->check(CLI::IsMember({"rc", "abelian", "orbit", "symalt", "local", "cy", "todd"}));
  group->add_option("--n", gb.n, "Dimension of the variety");
  group->add_option("--p", gb.p, "Prime");
  group->add_option("--chi", chi_text, "Holomorphic Euler characteristic");
  group->add_flag("--json", gb.json, "Print the structured block");

  auto* verify = app.add_subcommand("verify-paper", "Run the golden battery of published values");

  isoed::OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "Seeded randomized cross-checks against brute-force oracles");
  oracle->add_option("--trials", oracle_opts.trials, "Trials per suite");
  oracle->add_option("--seed", oracle_opts.seed, "Random seed");
  oracle->add_option("--max-dim", oracle_opts.max_dim, "Largest matrix side");
  oracle->add_option("--max-entry", oracle_opts.max_entry, "Largest absolute matrix entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  if (*kernel) return cmd_kernel(file, json, std::cout, std::cerr);
  if (*subs) return cmd_subvarieties(file, json, std::cout, std::cerr);
  if (*bounds) return cmd_bounds(file, bounds_opts, std::cout, std::cerr);
  if (*exact) return cmd_exact(file, json, std::cout, std::cerr);
  if (*group) {
    if (!chi_text.empty()) {
      isoed::Integer chi;
      if (chi.set_str(chi_text, 10) != 0) {
        std::cerr << "error: --chi must be an integer\n";
        return kInvalidInput;
      }
      gb.chi = chi;
    }
    return cmd_groupbound(gb, std::cout, std::cerr);
  }
  if (*verify) return cmd_verify_paper(std::cout, std::cerr);
  if (*oracle) return cmd_oracle(oracle_opts, std::cout, std::cerr);
  return kInvalidInput;
}
