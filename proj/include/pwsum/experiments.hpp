#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pwsum/config.hpp"
#include "pwsum/engine.hpp"
#include "pwsum/spectrum.hpp"
#include "pwsum/weights.hpp"

namespace pwsum {

Spectrum spectrum_from_config(const Config& cfg);
// "mu_re:mu_im:c_re:c_im" atoms separated by ';'
PWFunction function_from_config(const Config& cfg);
std::vector<SchemeKind> schemes_from_config(const Config& cfg);
WeightScheme scheme_from_config(SchemeKind kind, const Spectrum& s, const Config& cfg);

// Runs one subcommand and writes its CSV files into output.dir.
void run_subcommand(const std::string& name, const Config& cfg);

// Exit status: 0 success, 2 config error, 3 numerical precondition failure.
int run_cli(const std::string& config_path, const std::string& subcommand, std::ostream& err);

}  // namespace pwsum
