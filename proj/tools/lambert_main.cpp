#include "lambert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using lambert::cli::Format;

// "a,b,c" (possibly repeated) -> flat token list.
std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& chunk : raw) {
    std::stringstream stream(chunk);
    std::string token;
    while (std::getline(stream, token, ',')) {
      if (!token.empty()) out.push_back(token);
    }
  }
  return out;
}

Format parse_format(const std::string& name) {
  return name == "jsonl" ? Format::jsonl : Format::csv;
}

// Runs `emit` against --out (when given) or stdout.
int with_output(const std::string& out_path, const std::function<int(std::ostream&)>& emit) {
  if (out_path.empty()) return emit(std::cout);
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open --out file " << out_path << "\n";
    return lambert::cli::exit_usage;
  }
  return emit(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lambert-series factorization toolkit: tables of arithmetic "
               "function pairs, factor matrices, recovery of f from g, and "
               "self-verification sweeps."};
  app.require_subcommand(1);

  std::string format_name = "csv";
  std::string out_path;

  // ---- table ----
  lambert::cli::TableOptions table_options;
  std::vector<std::string> table_cols_raw;
  CLI::App* table = app.add_subcommand(
      "table", "Emit rows n = 1..N of the requested columns for a pair");
  table->add_option("--pair", table_options.source.pair_name,
                    "Builtin pair: mu, phi, sigma, lambda");
  table->add_option("--alpha", table_options.source.alpha,
                    "Exponent for the sigma pair (default 1)");
  table->add_option("--g-csv", table_options.source.g_csv_path,
                    "Tabulated pair from CSV (header n,f or n,g)");
  table->add_option("--n", table_options.n, "Number of rows")->required();
  table->add_option("--cols", table_cols_raw,
                    "Comma-separated columns among f,g,B,a_f,sigma (default f,g)");
  table->add_option("--format", format_name, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  table->add_option("--out", out_path, "Write output to a file instead of stdout");

  // ---- matrix ----
  lambert::cli::MatrixOptions matrix_options;
  CLI::App* matrix = app.add_subcommand(
      "matrix", "Dump the n x n factor matrix or its inverse (lower triangle)");
  matrix->add_option("--n", matrix_options.n, "Matrix size")->required();
  matrix->add_option("--which", matrix_options.which, "A or Ainv")->required();
  matrix->add_option("--format", format_name, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  matrix->add_option("--cap", matrix_options.cap,
                     "Size cap guarding O(n^2) allocations (default 2000)");
  matrix->add_option("--out", out_path, "Write output to a file instead of stdout");

  // ---- recover ----
  lambert::cli::RecoverOptions recover_options;
  CLI::App* recover = app.add_subcommand(
      "recover", "Reconstruct f(1..N) from g values alone");
  recover->add_option("--pair", recover_options.source.pair_name,
                      "Builtin pair supplying g: mu, phi, sigma, lambda");
  recover->add_option("--alpha", recover_options.source.alpha,
                      "Exponent for the sigma pair (default 1)");
  recover->add_option("--g-csv", recover_options.source.g_csv_path,
                      "CSV of g values (header n,g)");
  recover->add_option("--n", recover_options.n, "How many values to recover")->required();
  recover->add_option("--format", format_name, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  recover->add_option("--out", out_path, "Write output to a file instead of stdout");

  // ---- verify ----
  lambert::cli::VerifyOptions verify_options;
  std::vector<std::string> suites_raw;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run self-verification sweeps and emit a JSON report");
  verify->add_option("--n", verify_options.n, "Sweep bound")->required();
  verify->add_option("--alpha", verify_options.alpha,
                     "Exponent for the sigma pair (default 1)");
  verify->add_option("--suite", suites_raw,
                     "Suites to run: inverse, roundtrip, entries, recurrence, closedB, "
                     "sigma (default all; repeatable or comma-separated)");
  verify->add_option("--out", out_path, "Write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? lambert::cli::exit_ok : lambert::cli::exit_usage;
  }

  if (table->parsed()) {
    if (!table_cols_raw.empty()) table_options.columns = split_list(table_cols_raw);
    table_options.format = parse_format(format_name);
    return with_output(out_path, [&](std::ostream& out) {
      return lambert::cli::cmd_table(table_options, out, std::cerr);
    });
  }
  if (matrix->parsed()) {
    matrix_options.format = parse_format(format_name);
    return with_output(out_path, [&](std::ostream& out) {
      return lambert::cli::cmd_matrix(matrix_options, out, std::cerr);
    });
  }
  if (recover->parsed()) {
    recover_options.format = parse_format(format_name);
    return with_output(out_path, [&](std::ostream& out) {
      return lambert::cli::cmd_recover(recover_options, out, std::cerr);
    });
  }
  if (verify->parsed()) {
    verify_options.suites = split_list(suites_raw);
    if (out_path.empty()) {
      return lambert::cli::cmd_verify(verify_options, std::cout, std::cout, std::cerr);
    }
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot open --out file " << out_path << "\n";
      return lambert::cli::exit_usage;
    }
    return lambert::cli::cmd_verify(verify_options, file, std::cout, std::cerr);
  }
  return lambert::cli::exit_usage;
}
