#include "lambert/cli.hpp"

#include "lambert/arithmetic.hpp"
#include "lambert/factorization.hpp"
#include "lambert/table_io.hpp"
#include "lambert/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace lambert::cli {

namespace {

using nlohmann::ordered_json;

struct ResolvedPair {
  FunctionPair pair;
  std::int64_t tabulated_rows = -1;  // -1 for builtin pairs
  char tabulated_column = ' ';
};

// Builds the pair from a PairSource, reporting usage problems on `err`.
std::optional<ResolvedPair> resolve_pair(const PairSource& source, std::ostream& err) {
  const bool have_name = !source.pair_name.empty();
  const bool have_csv = !source.g_csv_path.empty();
  if (have_name == have_csv) {
    err << "error: exactly one of --pair and --g-csv is required\n";
    return std::nullopt;
  }
  if (have_name) {
    if (source.alpha < 0) {
      err << "error: --alpha must be nonnegative\n";
      return std::nullopt;
    }
    try {
      return ResolvedPair{find_builtin(source.pair_name, source.alpha), -1, ' '};
    } catch (const UnknownPairError& e) {
      err << "error: " << e.what() << "\n";
      return std::nullopt;
    }
  }
  try {
    TabulatedColumn column = read_tabulated_csv_file(source.g_csv_path);
    const std::int64_t rows = static_cast<std::int64_t>(column.values.size());
    FunctionPair pair =
        column.column == 'f'
            ? FunctionPair::from_f_values("tabulated-f", std::move(column.values))
            : FunctionPair::from_g_values("tabulated-g", std::move(column.values));
    return ResolvedPair{std::move(pair), rows, column.column};
  } catch (const CsvFormatError& e) {
    err << "error: " << e.what() << "\n";
    return std::nullopt;
  }
}

bool check_tabulated_rows(const ResolvedPair& resolved, std::int64_t n, std::ostream& err) {
  if (resolved.tabulated_rows >= 0 && resolved.tabulated_rows < n) {
    err << "error: CSV provides " << resolved.tabulated_rows << " rows but --n is " << n
        << "\n";
    return false;
  }
  return true;
}

const std::vector<std::string>& column_vocabulary() {
  static const std::vector<std::string> names = {"f", "g", "B", "a_f", "sigma"};
  return names;
}

}  // namespace

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
  if (options.n < 1) {
    err << "error: --n must be at least 1\n";
    return exit_usage;
  }
  if (options.columns.empty()) {
    err << "error: --cols must name at least one column\n";
    return exit_usage;
  }
  std::vector<std::string> columns;
  for (const std::string& name : options.columns) {
    const auto& vocab = column_vocabulary();
    if (std::find(vocab.begin(), vocab.end(), name) == vocab.end()) {
      err << "error: unknown column '" << name << "' (expected f, g, B, a_f, sigma)\n";
      return exit_usage;
    }
    if (std::find(columns.begin(), columns.end(), name) == columns.end()) {
      columns.push_back(name);
    }
  }
  const std::optional<ResolvedPair> resolved = resolve_pair(options.source, err);
  if (!resolved) return exit_usage;
  if (!check_tabulated_rows(*resolved, options.n, err)) return exit_usage;
  const FunctionPair& pair = resolved->pair;
  const std::int64_t n = options.n;

  const bool want_b = std::find(columns.begin(), columns.end(), "B") != columns.end();
  const bool want_af = std::find(columns.begin(), columns.end(), "a_f") != columns.end();
  const bool want_sigma = std::find(columns.begin(), columns.end(), "sigma") != columns.end();
  BVector b;
  if (want_b) b = compute_B(pair, n);
  AfSequence af;
  if (want_af) af = a_f_sequence(pair, n);
  AverageOrderTable summatory;
  if (want_sigma) summatory = sigma_recurrence(pair, n);

  // value of `column` at row i (B rows are 0-indexed: row i shows index i-1)
  auto cell = [&](const std::string& column, std::int64_t i) -> BigInt {
    if (column == "f") return pair.f(i);
    if (column == "g") return pair.g(i);
    if (column == "B") return b.values[static_cast<std::size_t>(i) - 1];
    if (column == "a_f") return af.values[static_cast<std::size_t>(i)];
    return summatory.values[static_cast<std::size_t>(i)];
  };

  if (options.format == Format::csv) {
    out << "n";
    for (const std::string& column : columns) out << "," << column;
    out << "\n";
    for (std::int64_t i = 1; i <= n; ++i) {
      out << i;
      for (const std::string& column : columns) out << "," << cell(column, i).str();
      out << "\n";
    }
  } else {
    for (std::int64_t i = 1; i <= n; ++i) {
      ordered_json record;
      record["n"] = i;
      for (const std::string& column : columns) record[column] = cell(column, i).str();
      out << record.dump() << "\n";
    }
  }
  return exit_ok;
}

int cmd_matrix(const MatrixOptions& options, std::ostream& out, std::ostream& err) {
  if (options.n < 1) {
    err << "error: --n must be at least 1\n";
    return exit_usage;
  }
  if (options.n > options.cap) {
    err << "error: --n " << options.n << " exceeds the size cap " << options.cap
        << " (raise --cap to allow O(n^2) memory)\n";
    return exit_usage;
  }
  if (options.which != "A" && options.which != "Ainv") {
    err << "error: --which must be A or Ainv\n";
    return exit_usage;
  }
  const UnitLowerTriangular matrix =
      options.which == "A" ? build_A(options.n) : build_A_inverse(options.n);
  if (options.format == Format::csv) {
    for (std::int64_t r = 1; r <= options.n; ++r) {
      for (std::int64_t c = 1; c <= r; ++c) {
        if (c > 1) out << ",";
        out << matrix.entry(r, c).str();
      }
      out << "\n";
    }
  } else {
    for (std::int64_t r = 1; r <= options.n; ++r) {
      ordered_json record;
      record["row"] = r;
      ordered_json entries = ordered_json::array();
      for (std::int64_t c = 1; c <= r; ++c) entries.push_back(matrix.entry(r, c).str());
      record["entries"] = std::move(entries);
      out << record.dump() << "\n";
    }
  }
  return exit_ok;
}

int cmd_recover(const RecoverOptions& options, std::ostream& out, std::ostream& err) {
  if (options.n < 1) {
    err << "error: --n must be at least 1\n";
    return exit_usage;
  }
  const std::optional<ResolvedPair> resolved = resolve_pair(options.source, err);
  if (!resolved) return exit_usage;
  if (resolved->tabulated_rows >= 0 && resolved->tabulated_column != 'g') {
    err << "error: recover needs g values; the CSV header must be n,g\n";
    return exit_usage;
  }
  if (!check_tabulated_rows(*resolved, options.n, err)) return exit_usage;

  std::vector<BigInt> f;
  try {
    f = recover_f(resolved->pair, options.n);
  } catch (const InconsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_failure;
  }

  if (options.format == Format::csv) {
    out << "n,f\n";
    for (std::int64_t i = 1; i <= options.n; ++i) {
      out << i << "," << f[static_cast<std::size_t>(i) - 1].str() << "\n";
    }
  } else {
    for (std::int64_t i = 1; i <= options.n; ++i) {
      ordered_json record;
      record["n"] = i;
      record["f"] = f[static_cast<std::size_t>(i) - 1].str();
      out << record.dump() << "\n";
    }
  }
  return exit_ok;
}

int cmd_verify(const VerifyOptions& options, std::ostream& report, std::ostream& human,
               std::ostream& err) {
  if (options.n < 1) {
    err << "error: --n must be at least 1\n";
    return exit_usage;
  }
  if (options.alpha < 0) {
    err << "error: --alpha must be nonnegative\n";
    return exit_usage;
  }
  std::vector<std::string> suites = options.suites;
  if (suites.empty()) suites = verify_suite_names();
  for (const std::string& suite : suites) {
    const auto& known = verify_suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      err << "error: unknown suite '" << suite
          << "' (expected inverse, roundtrip, entries, recurrence, closedB, sigma)\n";
      return exit_usage;
    }
  }

  bool all_passed = true;
  ordered_json suites_json = ordered_json::array();
  for (const std::string& suite : suites) {
    const SuiteResult result = run_verify_suite(suite, options.n, options.alpha);
    all_passed = all_passed && result.passed;
    human << (result.passed ? "[PASS] " : "[FAIL] ") << result.suite << "\n";
    for (const std::string& note : result.notes) human << "       " << note << "\n";
    suites_json.push_back({{"suite", result.suite},
                           {"passed", result.passed},
                           {"notes", result.notes},
                           {"details", result.details}});
  }
  human << (all_passed ? "verify: all suites passed" : "verify: FAILURES present") << " ("
        << suites.size() << " suite" << (suites.size() == 1 ? "" : "s") << ", n = "
        << options.n << ")\n";

  const ordered_json document = {{"n", options.n},
                                 {"alpha", options.alpha},
                                 {"passed", all_passed},
                                 {"suites", suites_json}};
  report << document.dump(2) << "\n";
  return all_passed ? exit_ok : exit_failure;
}

}  // namespace lambert::cli
