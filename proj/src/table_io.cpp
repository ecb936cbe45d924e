#include "lambert/table_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace lambert {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw CsvFormatError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer field");
  std::size_t start = (text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("sign without digits: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not a decimal integer: " + text);
    }
  }
  return BigInt(text);
}

TabulatedColumn read_tabulated_csv(std::istream& in, const std::string& source_name) {
  TabulatedColumn out;
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  std::int64_t expected_n = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
      line.erase(0, 3);  // UTF-8 byte-order mark
    }
    if (trim(line).empty()) {
      if (seen_header) continue;  // tolerate trailing blank lines only after data starts
      fail(source_name, line_no, "expected header 'n,f' or 'n,g'");
    }
    const std::vector<std::string> fields = split_fields(line);
    if (!seen_header) {
      if (fields.size() != 2 || fields[0] != "n" || (fields[1] != "f" && fields[1] != "g")) {
        fail(source_name, line_no, "expected header 'n,f' or 'n,g', got '" + line + "'");
      }
      out.column = fields[1][0];
      seen_header = true;
      continue;
    }
    if (fields.size() != 2) {
      fail(source_name, line_no,
           "expected 2 fields, got " + std::to_string(fields.size()));
    }
    BigInt row_n;
    try {
      row_n = parse_decimal(fields[0]);
    } catch (const std::invalid_argument& e) {
      fail(source_name, line_no, std::string("bad n value: ") + e.what());
    }
    if (row_n != expected_n) {
      fail(source_name, line_no,
           "n must be contiguous from 1; expected " + std::to_string(expected_n) +
               ", got " + fields[0]);
    }
    try {
      out.values.push_back(parse_decimal(fields[1]));
    } catch (const std::invalid_argument& e) {
      fail(source_name, line_no, std::string("bad value: ") + e.what());
    }
    ++expected_n;
  }
  if (!seen_header) fail(source_name, std::max<std::size_t>(line_no, 1), "missing header row");
  return out;
}

TabulatedColumn read_tabulated_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvFormatError(path + ": cannot open file");
  return read_tabulated_csv(in, path);
}

}  // namespace lambert
