#include "nusamp_cli/cli.hpp"

int main(int argc, char** argv) { return nusamp::cli::run_cli(argc, argv); }
