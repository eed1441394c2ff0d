#include "beamgeneric/cli.hpp"

int main(int argc, char** argv) { return beamgeneric::cli::run(argc, argv); }
