#include <iostream>

#include "cli_common.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pointfree: finite frames, congruences, nuclei and the pointless line"};
  app.require_subcommand(1);
  pointfree::cli::Globals g;
  int status = 0;
  app.add_flag("--json", g.json, "Machine-readable output");
  pointfree::cli::add_finite_commands(app, g, status);
  pointfree::cli::add_carrier_commands(app, g, status);
  pointfree::cli::add_verify_commands(app, g, status);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const pointfree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
