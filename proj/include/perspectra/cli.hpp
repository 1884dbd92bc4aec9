#ifndef PERSPECTRA_CLI_HPP
#define PERSPECTRA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "perspectra/graph.hpp"

namespace perspectra::cli {

/// Exit codes used by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,   // bad flags / unknown subcommand
    kInput = 2,   // unparsable graph, bad root, malformed graph6
    kCap = 3,     // engine or enumeration size guard hit
    kOutput = 4,  // unwritable output path
};

/// Runs the full command line (argv[0] is the program name) writing to
/// the given streams; this is the whole CLI, kept callable for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

/// Parses a graph family name such as "K_{2,3}", "P_5", "C_6", "K_4",
/// "E_3", "theta(1,2,3)", "G_8" or "G_11".
/// Throws std::invalid_argument for anything else.
Graph parse_family(const std::string& name);

}  // namespace perspectra::cli

#endif
