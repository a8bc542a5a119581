#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "gre/cli.hpp"

namespace {

gre::RewriteType parse_type(const std::string& s) { return gre::rewrite_type_from_string(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gre — compositional graph rewriting with tracelet analysis"};
  app.require_subcommand(1);

  std::string type_flag = "dpo";
  gre::CliOptions opts;
  int bound_flag = -1;
  int nmax_flag = -1;
  app.add_option("--type", type_flag, "rewriting semantics")
      ->check(CLI::IsMember({"dpo", "sqpo"}));
  app.add_option("--bound", bound_flag, "condition model-check size (vertices and edges)");
  app.add_option("--nmax", nmax_flag, "maximal pathway length override");
  app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--seed", opts.seed, "seed for randomized property-test corpora");

  std::string grammar_path, rule_name, graph_name, rule2_name, rule1_name, query_name;
  int match_index = 0;

  CLI::App* check = app.add_subcommand("check", "validate a grammar file");
  check->fallthrough();
  check->add_option("grammar", grammar_path, "grammar JSON file")->required();

  CLI::App* apply = app.add_subcommand("apply", "apply a rule at a chosen match");
  apply->fallthrough();
  apply->add_option("grammar", grammar_path, "grammar JSON file")->required();
  apply->add_option("--rule", rule_name, "rule name")->required();
  apply->add_option("--graph", graph_name, "host graph name")->required();
  apply->add_option("--match", match_index, "index into the monomorphism list");

  CLI::App* compose = app.add_subcommand("compose", "enumerate all composites of two rules");
  compose->fallthrough();
  compose->add_option("grammar", grammar_path, "grammar JSON file")->required();
  compose->add_option("--rule2", rule2_name, "second rule (applied after)")->required();
  compose->add_option("--rule1", rule1_name, "first rule (applied before)")->required();

  CLI::App* feta = app.add_subcommand("feta", "synthesize pathways for a query");
  feta->fallthrough();
  feta->add_option("grammar", grammar_path, "grammar JSON file")->required();
  feta->add_option("--query", query_name, "query name")->required();

  CLI11_PARSE(app, argc, argv);

  opts.type = parse_type(type_flag);
  if (bound_flag >= 0)
    opts.bound = bound_flag;
  else if (const char* env = std::getenv("GRE_BOUND"))
    opts.bound = std::atoi(env);
  if (nmax_flag >= 0) opts.nmax = nmax_flag;

  try {
    if (check->parsed()) return gre::cmd_check(grammar_path, std::cout, std::cerr);
    if (apply->parsed())
      return gre::cmd_apply(grammar_path, rule_name, graph_name, match_index, opts, std::cout,
                            std::cerr);
    if (compose->parsed())
      return gre::cmd_compose(grammar_path, rule2_name, rule1_name, opts, std::cout, std::cerr);
    if (feta->parsed())
      return gre::cmd_feta(grammar_path, query_name, opts, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
