#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "ortholat/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"finite orthocomplemented lattice analyzer"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit the JSON report instead of text");

  std::string check_file;
  auto* check = app.add_subcommand(
      "check", "validate a lattice file and classify its type");
  check->add_option("file", check_file, "lattice file")->required();

  std::string gen_kind;
  unsigned gen_m = 2;
  unsigned gen_atoms = 2;
  auto* gen = app.add_subcommand("gen", "emit a generated lattice file");
  gen->add_option("kind", gen_kind,
                  "pentagon | hexagon | boolean | lm | section3")
      ->required();
  gen->add_option("--m", gen_m, "middle pairs for 'lm' (default 2)");
  gen->add_option("--atoms", gen_atoms, "atom count for 'boolean' (default 2)");

  std::string dec_file;
  auto* dec = app.add_subcommand(
      "decompose", "central decomposition into 2-chains and horizontal sums");
  dec->add_option("file", dec_file, "lattice file")->required();

  std::string reg_file;
  bool reg_enum = false;
  auto* reg = app.add_subcommand(
      "regular", "perspectivity classes and regularity of the relation");
  reg->add_option("file", reg_file, "lattice file")->required();
  reg->add_flag("--enumerate", reg_enum,
                "scan every partition for regular relations (small lattices)");

  unsigned sub_dim = 3;
  std::uint64_t sub_trials = 200;
  std::uint64_t sub_seed = 0;
  std::string sub_suite = "all";
  auto* sub = app.add_subcommand(
      "subspace", "sampled law checks on the subspace lattice of Q^n");
  sub->add_option("--dim", sub_dim, "ambient dimension, 2..6 (default 3)");
  sub->add_option("--trials", sub_trials, "trials per law (default 200)");
  sub->add_option("--seed", sub_seed, "64-bit generator seed (default 0)");
  sub->add_option("--suite", sub_suite,
                  "all | lattice | modular | commutation | regular | lemmas | "
                  "dimension (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is an input error
  }

  ortholat::CmdResult result;
  if (*check) result = ortholat::cmd_check(check_file);
  else if (*gen) result = ortholat::cmd_gen(gen_kind, gen_m, gen_atoms);
  else if (*dec) result = ortholat::cmd_decompose(dec_file);
  else if (*reg) result = ortholat::cmd_regular(reg_file, reg_enum);
  else result = ortholat::cmd_subspace(sub_dim, sub_trials, sub_seed, sub_suite);

  if (json)
    std::fputs((result.json.dump(2) + "\n").c_str(), stdout);
  else
    std::fputs(result.text.c_str(), stdout);
  return result.exit_code;
}
