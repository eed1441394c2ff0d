#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "beamgeneric/config.hpp"

namespace beamgeneric::cli {

enum ExitCode : int { ok = 0, validation = 1, runtime = 2 };

void write_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records);

int cmd_simulate(const std::string& config_path, std::ostream& out, std::ostream& err);
/// `model` is a model name or "all".
int cmd_verify(const std::string& model, int trials, std::uint64_t seed, std::ostream& out,
               std::ostream& err);
int cmd_decay(const std::string& config_path, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int run(int argc, char** argv);

}  // namespace beamgeneric::cli
