#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lambert::cli {

inline constexpr int exit_ok = 0;       // success
inline constexpr int exit_failure = 1;  // verification failure / internal inconsistency
inline constexpr int exit_usage = 2;    // usage or input error

enum class Format { csv, jsonl };

// Where the function pair comes from: a builtin name (mu, phi, sigma,
// lambda; sigma parameterized by alpha) or a tabulated CSV whose header
// (`n,f` / `n,g`) decides which side is given.
struct PairSource {
  std::string pair_name;
  std::int64_t alpha = 1;
  std::string g_csv_path;
};

struct TableOptions {
  PairSource source;
  std::int64_t n = 0;
  std::vector<std::string> columns = {"f", "g"};  // subset of f, g, B, a_f, sigma
  Format format = Format::csv;
};

struct MatrixOptions {
  std::int64_t n = 0;
  std::string which = "A";  // "A" or "Ainv"
  Format format = Format::csv;
  std::int64_t cap = 2000;  // guards accidental huge allocations
};

struct RecoverOptions {
  PairSource source;  // tabulated sources must be g-valued
  std::int64_t n = 0;
  Format format = Format::csv;
};

struct VerifyOptions {
  std::int64_t n = 0;
  std::int64_t alpha = 1;
  std::vector<std::string> suites;  // empty means all suites
};

// Each command writes its payload to `out` and diagnostics to `err`,
// returning one of the exit codes above.
int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);
int cmd_matrix(const MatrixOptions& options, std::ostream& out, std::ostream& err);
int cmd_recover(const RecoverOptions& options, std::ostream& out, std::ostream& err);

// Human-readable summary to `human`, machine-readable JSON report to
// `report` (they may be the same stream).
int cmd_verify(const VerifyOptions& options, std::ostream& report, std::ostream& human,
               std::ostream& err);

}  // namespace lambert::cli
