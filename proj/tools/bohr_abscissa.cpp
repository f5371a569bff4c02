#include "bohr/cli.hpp"

int main(int argc, char** argv) { return bohr::cli::run(argc, argv); }
