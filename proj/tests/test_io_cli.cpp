#include "lambert/cli.hpp"

#include "lambert/arithmetic.hpp"
#include "lambert/table_io.hpp"

#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace lambert;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TabulatedColumn parse_csv(const std::string& text) {
  std::istringstream in(text);
  return read_tabulated_csv(in, "inline");
}

struct CommandResult {
  int code = -1;
  std::string out;
  std::string err;
};

CommandResult run_table(const cli::TableOptions& options) {
  std::ostringstream out, err;
  const int code = cli::cmd_table(options, out, err);
  return {code, out.str(), err.str()};
}

CommandResult run_matrix(const cli::MatrixOptions& options) {
  std::ostringstream out, err;
  const int code = cli::cmd_matrix(options, out, err);
  return {code, out.str(), err.str()};
}

CommandResult run_recover(const cli::RecoverOptions& options) {
  std::ostringstream out, err;
  const int code = cli::cmd_recover(options, out, err);
  return {code, out.str(), err.str()};
}

#ifdef LAMBERT_CLI_PATH
// Exit code of the real binary, stdout captured into `out_capture`.
int run_binary(const std::string& args, const std::filesystem::path& out_capture) {
  const std::string command = std::string("\"") + LAMBERT_CLI_PATH + "\" " + args + " > " +
                              out_capture.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  return (status >> 8) & 0xff;  // POSIX exit status
}
#endif

}  // namespace

TEST_CASE("csv reader accepts both headers and strict row numbering") {
  const TabulatedColumn f_column = parse_csv("n,f\n1,1\n2,-1\n3,0\n");
  CHECK(f_column.column == 'f');
  CHECK(f_column.values == std::vector<BigInt>{1, -1, 0});

  const TabulatedColumn g_column = parse_csv("n,g\n1,5\n2,12\n");
  CHECK(g_column.column == 'g');
  CHECK(g_column.values == std::vector<BigInt>{5, 12});

  // CRLF endings and BOM are tolerated; huge integers survive exactly
  const TabulatedColumn windows =
      parse_csv("\xEF\xBB\xBFn,g\r\n1,123456789012345678901234567890\r\n");
  CHECK(windows.values[0] == BigInt("123456789012345678901234567890"));
}

TEST_CASE("csv reader rejects malformed input with line numbers") {
  auto error_of = [](const std::string& text) -> std::string {
    try {
      parse_csv(text);
      return "";
    } catch (const CsvFormatError& e) {
      return e.what();
    }
  };
  CHECK(error_of("x,y\n1,1\n") == "inline:1: expected header 'n,f' or 'n,g', got 'x,y'");
  CHECK(error_of("n,h\n1,1\n").find("inline:1") == 0);
  CHECK(error_of("").find("missing header") != std::string::npos);
  CHECK(error_of("n,f\n2,1\n").find("inline:2") == 0);             // must start at 1
  CHECK(error_of("n,f\n1,1\n3,1\n").find("inline:3") == 0);        // no gaps
  CHECK(error_of("n,f\n1,1\n1,1\n").find("inline:3") == 0);        // no repeats
  CHECK(error_of("n,f\n1,abc\n").find("bad value") != std::string::npos);
  CHECK(error_of("n,f\n1,1.5\n").find("inline:2") == 0);           // integers only
  CHECK(error_of("n,f\n1\n").find("expected 2 fields") != std::string::npos);
  CHECK(error_of("n,f\n1,2,3\n").find("expected 2 fields") != std::string::npos);
}

TEST_CASE("parse_decimal exactness") {
  CHECK(parse_decimal("0") == 0);
  CHECK(parse_decimal("-17") == -17);
  CHECK(parse_decimal("999999999999999999999999") == BigInt("999999999999999999999999"));
  CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("+5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal("1e3"), std::invalid_argument);
}

TEST_CASE("cmd_table emits exact csv rows") {
  cli::TableOptions options;
  options.source.pair_name = "phi";
  options.n = 7;
  options.columns = {"f"};
  const CommandResult result = run_table(options);
  CHECK(result.code == cli::exit_ok);
  CHECK(result.out == "n,f\n1,1\n2,1\n3,2\n4,2\n5,4\n6,2\n7,6\n");

  // identical invocations are byte-identical
  CHECK(run_table(options).out == result.out);
}

TEST_CASE("cmd_table single B row and multi-column output") {
  cli::TableOptions b_options;
  b_options.source.pair_name = "mu";
  b_options.n = 1;
  b_options.columns = {"B"};
  CHECK(run_table(b_options).out == "n,B\n1,1\n");

  cli::TableOptions sigma_options;
  sigma_options.source.pair_name = "sigma";
  sigma_options.source.alpha = 1;
  sigma_options.n = 10;
  sigma_options.columns = {"g"};
  const CommandResult sigma_result = run_table(sigma_options);
  CHECK(sigma_result.out == "n,g\n1,1\n2,3\n3,4\n4,7\n5,6\n6,12\n7,8\n8,15\n9,13\n10,18\n");

  cli::TableOptions multi;
  multi.source.pair_name = "lambda";
  multi.n = 4;
  multi.columns = {"f", "g", "B", "a_f", "sigma"};
  const CommandResult result = run_table(multi);
  CHECK(result.code == cli::exit_ok);
  // columns: f = lambda, g = square indicator, B, a_f, prefix sums of g
  CHECK(result.out ==
        "n,f,g,B,a_f,sigma\n"
        "1,1,1,1,1,1\n"
        "2,-1,0,-1,-1,1\n"
        "3,-1,0,-1,-1,1\n"
        "4,1,1,1,1,2\n");
}

TEST_CASE("cmd_table jsonl format") {
  cli::TableOptions options;
  options.source.pair_name = "mu";
  options.n = 2;
  options.columns = {"f", "g"};
  options.format = cli::Format::jsonl;
  const CommandResult result = run_table(options);
  CHECK(result.code == cli::exit_ok);
  CHECK(result.out == "{\"n\":1,\"f\":\"1\",\"g\":\"1\"}\n{\"n\":2,\"f\":\"-1\",\"g\":\"0\"}\n");
}

TEST_CASE("cmd_table usage errors") {
  cli::TableOptions options;
  options.source.pair_name = "nope";
  options.n = 3;
  CHECK(run_table(options).code == cli::exit_usage);

  options.source.pair_name = "mu";
  options.n = 0;
  CHECK(run_table(options).code == cli::exit_usage);

  options.n = 3;
  options.columns = {"f", "weird"};
  CHECK(run_table(options).code == cli::exit_usage);

  options.columns = {"f"};
  options.source.g_csv_path = "also-set.csv";  // both sources at once
  CHECK(run_table(options).code == cli::exit_usage);

  cli::TableOptions csv_options;
  csv_options.source.g_csv_path = temp_file("lambert_missing.csv").string();
  csv_options.n = 3;
  CHECK(run_table(csv_options).code == cli::exit_usage);
}

TEST_CASE("cmd_table from tabulated csv sources") {
  const auto f_path = temp_file("lambert_tab_f.csv");
  write_file(f_path, "n,f\n1,1\n2,1\n3,2\n4,2\n");
  cli::TableOptions from_f;
  from_f.source.g_csv_path = f_path.string();
  from_f.n = 4;
  from_f.columns = {"g"};
  CHECK(run_table(from_f).out == "n,g\n1,1\n2,2\n3,3\n4,4\n");  // divisor sums of phi

  const auto g_path = temp_file("lambert_tab_g.csv");
  write_file(g_path, "n,g\n1,1\n2,2\n3,3\n4,4\n5,5\n");
  cli::TableOptions from_g;
  from_g.source.g_csv_path = g_path.string();
  from_g.n = 5;
  from_g.columns = {"f"};
  CHECK(run_table(from_g).out == "n,f\n1,1\n2,1\n3,2\n4,2\n5,4\n");  // Moebius inversion

  // asking past the table is a usage error, not an exception
  from_g.n = 6;
  const CommandResult too_far = run_table(from_g);
  CHECK(too_far.code == cli::exit_usage);
  CHECK(too_far.err.find("5 rows") != std::string::npos);

  std::filesystem::remove(f_path);
  std::filesystem::remove(g_path);
}

TEST_CASE("cmd_matrix dumps and caps") {
  cli::MatrixOptions options;
  options.n = 1;
  options.which = "A";
  CHECK(run_matrix(options).out == "1\n");

  options.n = 5;
  options.which = "Ainv";
  CHECK(run_matrix(options).out == "1\n0,1\n1,1,1\n2,1,1,1\n4,3,2,1,1\n");

  options.which = "A";
  CHECK(run_matrix(options).out == "1\n0,1\n-1,-1,1\n-1,0,-1,1\n-1,-1,-1,-1,1\n");

  options.format = cli::Format::jsonl;
  options.n = 2;
  CHECK(run_matrix(options).out ==
        "{\"row\":1,\"entries\":[\"1\"]}\n{\"row\":2,\"entries\":[\"0\",\"1\"]}\n");

  cli::MatrixOptions bad;
  bad.n = 3000;  // default cap is 2000
  bad.which = "A";
  CHECK(run_matrix(bad).code == cli::exit_usage);
  bad.cap = 4000;
  bad.n = 3;
  bad.which = "B";
  CHECK(run_matrix(bad).code == cli::exit_usage);
  bad.which = "A";
  bad.n = 0;
  CHECK(run_matrix(bad).code == cli::exit_usage);
}

TEST_CASE("cmd_recover builtin and csv sources") {
  cli::RecoverOptions options;
  options.source.pair_name = "lambda";
  options.n = 7;
  const CommandResult result = run_recover(options);
  CHECK(result.code == cli::exit_ok);
  CHECK(result.out == "n,f\n1,1\n2,-1\n3,-1\n4,1\n5,-1\n6,1\n7,-1\n");

  options.source.pair_name = "mu";
  options.n = 1;
  CHECK(run_recover(options).out == "n,f\n1,1\n");

  const auto g_path = temp_file("lambert_recover_g.csv");
  write_file(g_path, "n,g\n1,1\n2,2\n3,3\n4,4\n5,5\n6,6\n7,7\n");
  cli::RecoverOptions from_csv;
  from_csv.source.g_csv_path = g_path.string();
  from_csv.n = 7;
  CHECK(run_recover(from_csv).out == "n,f\n1,1\n2,1\n3,2\n4,2\n5,4\n6,2\n7,6\n");

  from_csv.n = 9;  // short csv
  CHECK(run_recover(from_csv).code == cli::exit_usage);

  const auto f_path = temp_file("lambert_recover_f.csv");
  write_file(f_path, "n,f\n1,1\n2,1\n");
  cli::RecoverOptions wrong_side;
  wrong_side.source.g_csv_path = f_path.string();
  wrong_side.n = 2;
  const CommandResult wrong = run_recover(wrong_side);
  CHECK(wrong.code == cli::exit_usage);
  CHECK(wrong.err.find("n,g") != std::string::npos);

  std::filesystem::remove(g_path);
  std::filesystem::remove(f_path);
}

TEST_CASE("table to recover round trip preserves f exactly") {
  for (const std::string pair : {"mu", "phi", "sigma", "lambda"}) {
    cli::TableOptions g_table;
    g_table.source.pair_name = pair;
    g_table.n = 30;
    g_table.columns = {"g"};
    const CommandResult g_result = run_table(g_table);
    REQUIRE(g_result.code == cli::exit_ok);

    const auto path = temp_file("lambert_roundtrip_" + pair + ".csv");
    write_file(path, g_result.out);

    cli::RecoverOptions recover_options;
    recover_options.source.g_csv_path = path.string();
    recover_options.n = 30;
    const CommandResult recovered = run_recover(recover_options);
    CHECK(recovered.code == cli::exit_ok);

    cli::TableOptions f_table;
    f_table.source.pair_name = pair;
    f_table.n = 30;
    f_table.columns = {"f"};
    CHECK(recovered.out == run_table(f_table).out);

    std::filesystem::remove(path);
  }
}

TEST_CASE("cmd_verify report structure and exit codes") {
  cli::VerifyOptions options;
  options.n = 25;
  options.suites = {"entries", "closedB", "sigma"};
  std::ostringstream report, human, err;
  const int code = cli::cmd_verify(options, report, human, err);
  CHECK(code == cli::exit_ok);
  CHECK(human.str().find("[PASS] entries") != std::string::npos);
  CHECK(human.str().find("[PASS] closedB") != std::string::npos);
  CHECK(human.str().find("[PASS] sigma") != std::string::npos);
  CHECK(human.str().find("all suites passed") != std::string::npos);
  // the report records where the rejected placement fails
  CHECK(report.str().find("\"rejected_first_mismatch\": 1") != std::string::npos);
  CHECK(report.str().find("\"passed\": true") != std::string::npos);

  cli::VerifyOptions bad;
  bad.n = 10;
  bad.suites = {"bogus"};
  std::ostringstream r2, h2, e2;
  CHECK(cli::cmd_verify(bad, r2, h2, e2) == cli::exit_usage);

  bad.suites = {};
  bad.n = 0;
  CHECK(cli::cmd_verify(bad, r2, h2, e2) == cli::exit_usage);
}

#ifdef LAMBERT_CLI_PATH
TEST_CASE("installed binary end-to-end exit codes and determinism") {
  const auto capture_a = temp_file("lambert_e2e_a.txt");
  const auto capture_b = temp_file("lambert_e2e_b.txt");

  CHECK(run_binary("table --pair phi --n 7 --cols f", capture_a) == 0);
  CHECK(read_file(capture_a) == "n,f\n1,1\n2,1\n3,2\n4,2\n5,4\n6,2\n7,6\n");

  // determinism: identical invocations, byte-identical output
  CHECK(run_binary("table --pair sigma --alpha 2 --n 40 --cols f,g,B,a_f,sigma",
                   capture_a) == 0);
  CHECK(run_binary("table --pair sigma --alpha 2 --n 40 --cols f,g,B,a_f,sigma",
                   capture_b) == 0);
  const std::string first = read_file(capture_a);
  CHECK(first == read_file(capture_b));
  CHECK(first.find("n,f,g,B,a_f,sigma\n") == 0);

  CHECK(run_binary("matrix --n 5 --which Ainv", capture_a) == 0);
  CHECK(read_file(capture_a) == "1\n0,1\n1,1,1\n2,1,1,1\n4,3,2,1,1\n");

  CHECK(run_binary("recover --pair lambda --n 7", capture_a) == 0);
  CHECK(read_file(capture_a) == "n,f\n1,1\n2,-1\n3,-1\n4,1\n5,-1\n6,1\n7,-1\n");

  CHECK(run_binary("verify --n 12 --suite inverse,roundtrip", capture_a) == 0);
  CHECK(read_file(capture_a).find("\"passed\": true") != std::string::npos);

  // usage errors exit 2
  CHECK(run_binary("table --pair nope --n 3", capture_a) == 2);
  CHECK(run_binary("table --pair mu", capture_a) == 2);           // missing --n
  CHECK(run_binary("frobnicate --n 3", capture_a) == 2);          // unknown verb
  CHECK(run_binary("matrix --n 9999 --which A", capture_a) == 2); // cap exceeded
  const auto bad_csv = temp_file("lambert_bad.csv");
  write_file(bad_csv, "n,f\n1,1\n4,2\n");
  CHECK(run_binary("recover --g-csv " + bad_csv.string() + " --n 2", capture_a) == 2);
  CHECK(run_binary("table --g-csv " + bad_csv.string() + " --n 2 --cols f", capture_a) == 2);
  std::filesystem::remove(bad_csv);

  // --help reports success
  CHECK(run_binary("--help", capture_a) == 0);

  // --out writes the same bytes as stdout capture
  const auto out_file = temp_file("lambert_e2e_out.csv");
  CHECK(run_binary("table --pair mu --n 5 --cols f,B --out " + out_file.string(),
                   capture_a) == 0);
  CHECK(run_binary("table --pair mu --n 5 --cols f,B", capture_b) == 0);
  CHECK(read_file(out_file) == read_file(capture_b));

  std::filesystem::remove(capture_a);
  std::filesystem::remove(capture_b);
  std::filesystem::remove(out_file);
}
#endif
