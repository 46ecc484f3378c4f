#include "rankers/cli.hpp"

int main(int argc, char** argv) { return rankers::cli::run_cli(argc, argv); }
