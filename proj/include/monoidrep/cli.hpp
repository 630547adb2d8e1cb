#pragma once

// Command-line front end: generator-file parsing, command dispatch,
// serialization (text / json / csv / dot), and the benchmark harness.

#include <iosfwd>
#include <string>
#include <vector>

#include "monoidrep/transformation.hpp"

namespace monoidrep {

struct RunConfig {
  std::string command;
  std::string input;            // generator file path
  std::string format = "text";  // json | csv | text | dot (dot: green only)
  std::string element;          // membership argument, e.g. "1 1 3"
  int jobs = 1;
  int repeat = 3;      // bench repetitions
  int oracle_max = 512;  // size bound for the trace-form oracle
};

// One transformation per line (whitespace-separated 1-based images),
// '#' starts a comment, blank lines skipped; the degree is inferred
// from the first transformation and every line must agree. Throws
// ParseError carrying the offending line number.
std::vector<Transformation> read_generators(std::istream& in);
std::vector<Transformation> read_generators_file(const std::string& path);

// Executes one command. Results go to out, diagnostics to err.
// Returns 0 on success, 1 on parse/usage errors, 2 on contract
// violations (reported with the pipeline stage that raised them).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full argv front end around run(); same exit-status contract.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace monoidrep
