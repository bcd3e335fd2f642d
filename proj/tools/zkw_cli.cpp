// zkw: moment-angle complexes, higher Whitehead products and Taylor cycles from the command line.
#include <iostream>

#include "CLI11.hpp"
#include "zkw/cli/commands.hpp"

int main(int argc, char** argv) {
  zkw::cli::Options o;
  CLI::App app{"Homology of moment-angle complexes and realisability of higher Whitehead products"};
  app.add_option("verb", o.verb, "homology|mf|subst|delta-w|hurewicz|status|realises|taylor|taylor-cycle|zigzag|hochster|wedge-basis|verify")
      ->required()
      ->check(CLI::IsMember(zkw::cli::verbs()));
  app.add_option("--complex", o.complex, "complex expression, or a path ending in .json");
  app.add_option("--w", o.w, "Whitehead expression such as [[1,2,3],4,5]");
  app.add_option("--chain", o.chain, "cellular chain for zigzag, e.g. 'D1S2 + S1D2'");
  app.add_option("--subset", o.subset, "restrict to the full subcomplex on these labels (csv)");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "seed for randomised checks");
  app.add_option("--max-vertices", o.max_vertices, "refuse larger inputs");
  app.add_flag("--timing", o.timing, "add wall-clock time to the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : zkw::cli::kInputError;
  }
  auto report = zkw::cli::run(o);
  std::cout << report.render(o.format);
  return report.exit_code;
}
