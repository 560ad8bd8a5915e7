#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/instance_file.hpp"
#include "qapblock/permutation.hpp"
#include "qapblock/qap.hpp"

namespace qapblock::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitBadInput = 2,
  kExitUnsupported = 3,
};

/// No solver applies to the instance (and no oracle was requested).
class UnsupportedStructure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  bool oracle = false;
  /// Attest an uncertified block pattern for the product-block solver.
  bool force = false;
  std::size_t max_n = kDefaultOracleCap;
};

struct SolveReport {
  std::string solver;
  Rational value;
  Permutation permutation;  // maps positions of B to rows of A, as in the objective
  std::string certification;
  std::optional<std::vector<std::size_t>> block_order;
};

SolveReport solve_instance(const InstanceFile& file, const SolveOptions& options);

Json recognize_matrix(const SymMatrix& m, std::string_view kind);
Json classify_report(const SymMatrix& pattern);
InstanceFile reduce_partition_file(const Json& input);
InstanceFile reduce_bisection_file(const Json& input);

/// Full command line (argv[0] is the program name). Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qapblock::cli
