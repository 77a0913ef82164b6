#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rquant::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kParse = 3,
  kMismatch = 4,
  kExtraction = 5,
  kDomain = 6,
  kInternal = 7,
  kIo = 8,
};

struct JobConfig {
  std::string command;
  int order = 4;
  std::string input;
  std::string input_b;  // second operand of compare
  std::string output;
  std::string output_R;
  std::string report;  // empty: report goes to stdout

  // example
  std::string family;      // permutation | algebra | line
  int n = 1;
  std::string c = "1";     // scalar c for line and scalar algebras
  std::string field;       // vector field file for permutation
  std::optional<unsigned> monomial;  // permutation with v = x^k d/dx
  std::string algebra;     // algebra file
  std::string matrix_c;    // "e11", "identity" or four rationals "a,b,c,d"
};

/// Runs one job. The report document goes to `report` (or `out`), human
/// readable diagnostics to `err`.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a JobConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rquant::cli
