#include "capring/cli.hpp"

int main(int argc, char** argv) { return capring::cli::run(argc, argv); }
