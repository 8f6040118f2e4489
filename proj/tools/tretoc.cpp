#include "tretoc/cli.hpp"

int main(int argc, char** argv) { return tretoc::cli::run(argc, argv); }
