#include "lambert/verify.hpp"

#include "lambert/arithmetic.hpp"
#include "lambert/factorization.hpp"
#include "lambert/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace lambert {

namespace {

using nlohmann::ordered_json;

// Display names keep sigma pairs at different alpha apart.
std::string pair_label(const FunctionPair& pair, std::int64_t alpha) {
  if (pair.name() == "sigma") return "sigma(alpha=" + std::to_string(alpha) + ")";
  return pair.name();
}

SuiteResult suite_inverse(std::int64_t n) {
  SuiteResult result;
  result.suite = "inverse";
  std::vector<std::int64_t> failures;
  for (std::int64_t size = 1; size <= n; ++size) {
    if (!multiply(build_A(size), build_A_inverse(size)).is_identity()) {
      failures.push_back(size);
    }
  }
  result.passed = failures.empty();
  result.notes.push_back(
      result.passed
          ? "factor matrix times its inverse is the identity for every n <= " +
                std::to_string(n)
          : std::to_string(failures.size()) + " matrix sizes failed the identity check");
  result.details = {{"max_n", n}, {"failing_sizes", failures}};
  return result;
}

SuiteResult suite_roundtrip(std::int64_t n, std::int64_t alpha) {
  SuiteResult result;
  result.suite = "roundtrip";
  result.passed = true;
  ordered_json pairs_report = ordered_json::array();
  for (const FunctionPair& pair : builtin_pairs(alpha)) {
    const std::vector<BigInt> recovered = recover_f(pair, n);
    std::int64_t first_mismatch = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
      if (recovered[static_cast<std::size_t>(i) - 1] != pair.f(i)) {
        first_mismatch = i;
        break;
      }
    }
    const std::string label = pair_label(pair, alpha);
    if (first_mismatch == 0) {
      result.notes.push_back(label + ": recovered f(1.." + std::to_string(n) +
                             ") matches exactly");
    } else {
      result.passed = false;
      result.notes.push_back(label + ": first mismatch at n = " +
                             std::to_string(first_mismatch));
    }
    pairs_report.push_back(
        {{"pair", label}, {"first_mismatch", first_mismatch}, {"ok", first_mismatch == 0}});
  }
  result.details = {{"max_n", n}, {"pairs", pairs_report}};
  return result;
}

SuiteResult suite_entries(std::int64_t n) {
  SuiteResult result;
  result.suite = "entries";
  std::vector<ordered_json> mismatches;
  const std::int64_t combinatorial_bound = std::min<std::int64_t>(n, 25);
  for (std::int64_t row = 1; row <= n; ++row) {
    for (std::int64_t col = 1; col <= row; ++col) {
      const std::int64_t direct = entry_a(row, col);
      const std::int64_t via_series = series_a_ni(row, col);
      if (direct != via_series) {
        mismatches.push_back({{"n", row}, {"i", col}, {"route", "series"},
                              {"direct", direct}, {"other", via_series}});
      }
      if (row <= combinatorial_bound) {
        const std::int64_t via_partitions = distinct_partition_stat(row, col);
        if (direct != via_partitions) {
          mismatches.push_back({{"n", row}, {"i", col}, {"route", "partitions"},
                                {"direct", direct}, {"other", via_partitions}});
        }
      }
    }
  }
  result.passed = mismatches.empty();
  result.notes.push_back(
      result.passed
          ? "entry routes agree: series for n <= " + std::to_string(n) +
                ", distinct-part partitions for n <= " + std::to_string(combinatorial_bound)
          : std::to_string(mismatches.size()) + " entry disagreements");
  result.details = {{"max_n", n},
                    {"combinatorial_max_n", combinatorial_bound},
                    {"mismatches", mismatches}};
  return result;
}

SuiteResult suite_recurrence(std::int64_t n, std::int64_t alpha) {
  SuiteResult result;
  result.suite = "recurrence";
  result.passed = true;
  // The four pairs, with the power pair at alpha in {0, 1, 2} plus the
  // requested alpha when it differs.
  std::vector<std::pair<FunctionPair, std::int64_t>> pairs;
  pairs.emplace_back(mu_pair(), alpha);
  pairs.emplace_back(phi_pair(), alpha);
  pairs.emplace_back(lambda_pair(), alpha);
  for (std::int64_t a : {std::int64_t{0}, std::int64_t{1}, std::int64_t{2}}) {
    pairs.emplace_back(sigma_pair(a), a);
  }
  if (alpha != 0 && alpha != 1 && alpha != 2) pairs.emplace_back(sigma_pair(alpha), alpha);

  ordered_json pairs_report = ordered_json::array();
  for (const auto& [pair, pair_alpha] : pairs) {
    const std::vector<BigInt> rebuilt = g_recurrence(pair, n);
    std::int64_t first_mismatch = 0;
    for (std::int64_t t = 1; t <= n; ++t) {
      if (rebuilt[static_cast<std::size_t>(t) - 1] != divisor_sum_transform(
              [&pair](std::int64_t d) { return pair.f(d); }, t)) {
        first_mismatch = t;
        break;
      }
    }
    const std::string label = pair_label(pair, pair_alpha);
    if (first_mismatch == 0) {
      result.notes.push_back(label + ": recurrence rebuilds g(1.." + std::to_string(n) +
                             ") exactly");
    } else {
      result.passed = false;
      result.notes.push_back(label + ": recurrence first differs from divisor sums at n = " +
                             std::to_string(first_mismatch));
    }
    pairs_report.push_back(
        {{"pair", label}, {"first_mismatch", first_mismatch}, {"ok", first_mismatch == 0}});
  }
  result.details = {{"max_n", n}, {"pairs", pairs_report}};
  return result;
}

SuiteResult suite_closedB(std::int64_t n) {
  SuiteResult result;
  result.suite = "closedB";
  result.passed = true;
  struct ClosedForm {
    const char* name;
    FunctionPair pair;
    std::int64_t (*eval)(std::int64_t);
  };
  const ClosedForm forms[] = {{"mu", mu_pair(), &closed_B_mu},
                              {"phi", phi_pair(), &closed_B_phi},
                              {"lambda", lambda_pair(), &closed_B_lambda}};
  ordered_json report = ordered_json::array();
  for (const ClosedForm& form : forms) {
    const BVector direct = compute_B(form.pair, n);
    std::int64_t first_mismatch = -1;
    for (std::int64_t m = 0; m < n; ++m) {
      if (direct.values[static_cast<std::size_t>(m)] != form.eval(m)) {
        first_mismatch = m;
        break;
      }
    }
    if (first_mismatch < 0) {
      result.notes.push_back(std::string(form.name) + ": closed form matches for m < " +
                             std::to_string(n));
    } else {
      result.passed = false;
      result.notes.push_back(std::string(form.name) +
                             ": closed form first differs at m = " +
                             std::to_string(first_mismatch));
    }
    report.push_back({{"pair", form.name},
                      {"first_mismatch", first_mismatch},
                      {"ok", first_mismatch < 0}});
  }
  result.details = {{"max_m_exclusive", n}, {"pairs", report}};
  return result;
}

SuiteResult suite_sigma(std::int64_t n, std::int64_t alpha) {
  SuiteResult result;
  result.suite = "sigma";
  result.passed = true;
  ordered_json report = ordered_json::array();
  for (const FunctionPair& pair : builtin_pairs(alpha)) {
    // Ground truth: direct prefix sums of g.
    std::vector<BigInt> prefix(static_cast<std::size_t>(n) + 1);
    for (std::int64_t x = 1; x <= n; ++x) {
      prefix[static_cast<std::size_t>(x)] = prefix[static_cast<std::size_t>(x) - 1] + pair.g(x);
    }

    const AverageOrderTable selected = sigma_recurrence(pair, n, AfSumPlacement::outside);
    std::int64_t selected_mismatch = 0;
    for (std::int64_t x = 1; x <= n; ++x) {
      if (selected.values[static_cast<std::size_t>(x)] != prefix[static_cast<std::size_t>(x)]) {
        selected_mismatch = x;
        break;
      }
    }

    // The rejected literal reading must fail somewhere; record where.
    const AverageOrderTable rejected = sigma_recurrence(pair, n, AfSumPlacement::inside);
    std::int64_t rejected_mismatch = 0;
    std::string rejected_expected;
    std::string rejected_got;
    for (std::int64_t x = 1; x <= n; ++x) {
      if (rejected.values[static_cast<std::size_t>(x)] != prefix[static_cast<std::size_t>(x)]) {
        rejected_mismatch = x;
        rejected_expected = prefix[static_cast<std::size_t>(x)].str();
        rejected_got = rejected.values[static_cast<std::size_t>(x)].str();
        break;
      }
    }

    const std::string label = pair_label(pair, alpha);
    const bool ok = selected_mismatch == 0 && rejected_mismatch != 0;
    if (!ok) result.passed = false;
    if (selected_mismatch == 0) {
      result.notes.push_back(label + ": selected placement reproduces prefix sums to x = " +
                             std::to_string(n));
    } else {
      result.notes.push_back(label + ": selected placement FAILS at x = " +
                             std::to_string(selected_mismatch));
    }
    if (rejected_mismatch != 0) {
      result.notes.push_back(label + ": rejected placement fails first at x = " +
                             std::to_string(rejected_mismatch) + " (expected " +
                             rejected_expected + ", got " + rejected_got + ")");
    } else {
      result.notes.push_back(label +
                             ": rejected placement unexpectedly matched everywhere");
    }
    report.push_back({{"pair", label},
                      {"selected_placement", "outside"},
                      {"selected_first_mismatch", selected_mismatch},
                      {"rejected_placement", "inside"},
                      {"rejected_first_mismatch", rejected_mismatch},
                      {"rejected_expected", rejected_expected},
                      {"rejected_got", rejected_got},
                      {"ok", ok}});
  }
  result.details = {{"max_x", n}, {"pairs", report}};
  return result;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"inverse",    "roundtrip", "entries",
                                                 "recurrence", "closedB",   "sigma"};
  return names;
}

SuiteResult run_verify_suite(const std::string& suite, std::int64_t n, std::int64_t alpha) {
  if (n < 1) throw std::invalid_argument("verify: n must be positive");
  if (suite == "inverse") return suite_inverse(n);
  if (suite == "roundtrip") return suite_roundtrip(n, alpha);
  if (suite == "entries") return suite_entries(n);
  if (suite == "recurrence") return suite_recurrence(n, alpha);
  if (suite == "closedB") return suite_closedB(n);
  if (suite == "sigma") return suite_sigma(n, alpha);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace lambert
