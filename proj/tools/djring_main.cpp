#include "djring/cli.hpp"

int main(int argc, char** argv) { return djring::cli::run_cli(argc, argv); }
