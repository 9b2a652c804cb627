#pragma once

#include <complex>
#include <string>

namespace nusamp::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Parses "0.3", "-2i", "0.3+0.2i" or "1e-3-4.5e-1i". Throws
// std::invalid_argument on anything else.
std::complex<double> parse_complex(const std::string& text);

int run_cli(int argc, char** argv);

}  // namespace nusamp::cli
