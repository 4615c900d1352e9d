#include "teichlab/io/csv.hpp"

#include <array>

#include "teichlab/util/error.hpp"

namespace teichlab::io {

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  if (columns_ == 0) throw input_error("csv needs at least one column");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ',';
    out_ += header[i];
  }
  out_ += '\n';
}

void CsvWriter::row_begin() {
  if (row_open_) throw input_error("csv row already open");
  row_open_ = true;
  in_row_ = 0;
}

void CsvWriter::cell(const std::string& value) {
  if (!row_open_) throw input_error("csv cell outside row");
  if (in_row_) out_ += ',';
  out_ += value;
  ++in_row_;
}

void CsvWriter::cell(double value) { cell(format_double(value)); }

void CsvWriter::cell(std::int64_t value) { cell(std::to_string(value)); }

void CsvWriter::row_end() {
  if (!row_open_ || in_row_ != columns_)
    throw input_error("csv row has wrong arity");
  out_ += '\n';
  row_open_ = false;
}

std::string CsvWriter::format_double(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

}  // namespace teichlab::io
