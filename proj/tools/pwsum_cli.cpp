#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pwsum/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Summation methods for Lagrange interpolation series in the Paley-Wiener space"};
  std::string config, sub;
  app.add_option("config", config, "key=value configuration file")->required();
  app.add_option("-s,--subcommand", sub,
                 "diagnose | weights | converge | compare-norms | contours | factorize-check "
                 "(overrides the subcommand key)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return pwsum::run_cli(config, sub, std::cerr);
}
