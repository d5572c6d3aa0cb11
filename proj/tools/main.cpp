#include "../src/cli_commands.hpp"

int main(int argc, char** argv) { return monolap::cli::run(argc, argv); }
