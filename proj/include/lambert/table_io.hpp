#pragma once

#include "lambert/bigint.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambert {

class CsvFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One parsed value column: values[k] belongs to n = k+1.
struct TabulatedColumn {
  char column = 'f';  // 'f' or 'g', taken from the header
  std::vector<BigInt> values;
};

// Strict reader for the tabulated-pair format: UTF-8, header `n,f` or `n,g`,
// decimal integer values, n contiguous and ascending from 1.  Violations
// throw CsvFormatError with `source_name:line: message`.
TabulatedColumn read_tabulated_csv(std::istream& in, const std::string& source_name);
TabulatedColumn read_tabulated_csv_file(const std::string& path);

// Exact decimal-string to integer; rejects anything but [-]digits.
BigInt parse_decimal(const std::string& text);

}  // namespace lambert
