#include <CLI11.hpp>

#include "reflekta/cli.hpp"

int main(int argc, char** argv) {
  using reflekta::cli::CommandRequest;
  CLI::App app{"Reflectable sets and bases of affine reflection systems"};
  app.set_version_flag("--version", reflekta::cli::kVersion);
  app.require_subcommand(1);
  CommandRequest req;

  auto add_output = [&](CLI::App* c) { c->add_option("--output,-o", req.output, "Report path, - for stdout"); };
  auto add_system = [&](CLI::App* c) { c->add_option("--system", req.system_path, "System spec JSON")->required(); };
  auto add_set = [&](CLI::App* c) { c->add_option("--set", req.set_path, "Root set JSON")->required(); };
  auto add_box = [&](CLI::App* c) {
    c->add_option("--box", req.box, "Isotropic coordinate bound for truncated closure");
    c->add_option("--margin", req.margin, "Inner window is box minus margin");
  };

  auto* construct = app.add_subcommand("construct", "Validate a system spec and echo its canonical form");
  add_system(construct);
  construct->add_option("--radius", req.radius, "Window radius for the axiom audit");
  add_output(construct);

  auto* check = app.add_subcommand("check", "Decide whether a set is reflectable");
  add_system(check);
  add_set(check);
  check->add_flag("--base", req.base, "Ask for a reflectable base");
  check->add_flag("--integral", req.integral, "Ask for a basis of the root lattice");
  check->add_flag("--oracle", req.oracle, "Cross-check with truncated orbit closure");
  check->add_flag("--recheck", req.recheck, "Re-verify the certificate");
  add_box(check);
  add_output(check);

  auto* orbit = app.add_subcommand("orbit", "Truncated orbit closure of a set");
  add_system(orbit);
  add_set(orbit);
  orbit->add_option("--box", req.box, "Isotropic coordinate bound");
  add_output(orbit);

  auto* enumerate = app.add_subcommand("enumerate", "Catalog reflectable bases");
  add_system(enumerate);
  enumerate->add_option("--max-size", req.max_size, "Largest base size to list (0: no limit)");
  enumerate->add_flag("--orbits", req.orbits, "Partition the catalog into Weyl orbits");
  enumerate->add_option("--bound", req.bound, "Word length cap for affine orbits");
  enumerate->add_option("--radius", req.radius, "Window radius for affine catalogs");
  add_output(enumerate);

  auto* generate = app.add_subcommand("generate", "Build a reflectable set from reflectable data");
  generate->add_option("--data", req.data_path, "Data JSON")->required();
  add_output(generate);

  auto* oracle = app.add_subcommand("oracle", "Brute-force closure verdicts only");
  add_system(oracle);
  add_set(oracle);
  oracle->add_flag("--base", req.base, "Exit status reflects the base verdict");
  add_box(oracle);
  add_output(oracle);

  auto* selftest = app.add_subcommand("selftest", "Decider against closure at reduced scale");
  selftest->add_option("--samples", req.selftest_samples, "Random subsets per affine case");
  add_output(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : reflekta::cli::kInvalid;
  }
  req.command = app.get_subcommands().front()->get_name();
  return reflekta::cli::run(req);
}
