#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poincare/field.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/power_series.hpp"

namespace poincare::cli {

enum class Command { Solve, Schroder, Iterate, FracIterate, QDiff, Verify, Interp };
enum class OutputFormat { Text, Json };
enum class SolveMethod { Recursive, Nonrecursive };

/// Raised for malformed command lines; the message names the offending flag.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CliRequest {
  Command command = Command::Solve;
  Field field = Field::Q;
  std::optional<Polynomial> p;
  std::optional<FieldElement> q;
  int precision = 0;
  std::optional<int> n;
  std::optional<FieldElement> t;
  std::optional<int> j;
  std::vector<Polynomial> g;
  std::optional<PowerSeries> f;
  SolveMethod method = SolveMethod::Recursive;
  OutputFormat output = OutputFormat::Text;
};

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 success, 1 verification found a nonzero residual, 2 usage or
/// parse error, 3 violated mathematical precondition.
inline constexpr int kExitOk = 0;
inline constexpr int kExitResidual = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMath = 3;

/// args excludes the program name. Throws UsageError, or poincare::Error with
/// ParseError for malformed numbers.
CliRequest parse_args(const std::vector<std::string>& args);

CliResult run(const CliRequest& request);

/// parse_args + run with every failure mapped to its exit code.
CliResult execute(const std::vector<std::string>& args);

}  // namespace poincare::cli
