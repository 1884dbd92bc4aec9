#include "perspectra/cli.hpp"

int main(int argc, char** argv) { return perspectra::cli::run_main(argc, argv); }
