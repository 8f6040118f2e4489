// cli.hpp
// Command-line front end: ingest, analyze, compare, overlap, synth.
//
// Exit codes: 0 success, 1 domain error, 2 usage or I/O error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tretoc::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace tretoc::cli
