#include <iostream>

#include "CLI11.hpp"
#include "run.hpp"

int main(int argc, char** argv) {
  using namespace orbikt::cli;
  RunConfig cfg;
  std::string format = "table";

  CLI::App app{"Equivariant K-theory of finite group actions on simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--group", cfg.group_source, "Group file, or builtin:<spec> (cyclic n, dihedral n, product a b)");
  app.add_option("--complex", cfg.complex_file, "Complex file");
  app.add_option("--action", cfg.action_file, "Extra act lines for the complex file");
  app.add_option("--fixture", cfg.fixture, "Built-in fixture name");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--max-order", cfg.max_order, "Largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--max-simplices", cfg.max_simplices, "Largest complex accepted")->check(CLI::PositiveNumber);
  bool no_subdivide = false;
  app.add_flag("--no-subdivide", no_subdivide, "Refuse irregular quotients instead of subdividing");

  auto positional = [&](CLI::App* sub, const char* name, const char* help) {
    sub->add_option(name, cfg.args, help);
  };
  auto* euler = app.add_subcommand("euler", "Equivariant Euler characteristic");
  euler->add_option("--method", cfg.method, "Formula")
      ->check(CLI::IsMember({"bc", "pairs", "isolated", "quotient-check"}));
  auto* prim = app.add_subcommand("prim", "Specialization order on the primitive ideal space");
  prim->add_flag("--aggregate", cfg.aggregate, "Merge orbits into isotropy strata");
  auto* fixture = app.add_subcommand("fixture", "Describe or write a built-in fixture");
  positional(fixture, "name", "Fixture name");
  fixture->add_flag("--emit", cfg.emit, "Write <name>.group and <name>.complex");
  fixture->add_option("--out-dir", cfg.out_dir, "Directory for --emit");
  positional(app.add_subcommand("fixed", "Fixed subcomplex of a set of elements"), "elements", "Names or indices");
  positional(app.add_subcommand("fiber", "Block decomposition of a fiber algebra"), "generators",
             "Subgroup generators");
  positional(app.add_subcommand("filtration", "Validate a filtration by open sets"), "file", "Filtration file");
  for (const char* name : {"group", "complex", "orbits", "quotient", "betti", "bc", "ktheory", "identity-check"})
    app.add_subcommand(name, std::string("Run ") + name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Table;
  if (no_subdivide) cfg.policy = orbikt::SubdivisionPolicy::Forbid;

  const Report rep = run(cfg);
  std::cout << rep.render(cfg.format);
  if (!rep.error.is_null() && cfg.format == OutputFormat::Table)
    std::cerr << "orbikt: " << rep.error["module"].get<std::string>() << ": " << rep.error["kind"].get<std::string>()
              << ": " << rep.error["message"].get<std::string>() << '\n';
  return rep.exit_code;
}
