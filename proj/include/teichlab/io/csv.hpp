#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

namespace teichlab::io {

/// Deterministic CSV assembly: '.' decimal separator, '\n' line endings,
/// header row always, shortest round-trip float formatting.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void row_begin();
  void cell(const std::string& value);
  void cell(double value);
  void cell(std::int64_t value);
  void row_end();

  const std::string& str() const { return out_; }

  static std::string format_double(double value);

 private:
  std::size_t columns_ = 0;
  std::size_t in_row_ = 0;
  bool row_open_ = false;
  std::string out_;
};

}  // namespace teichlab::io
