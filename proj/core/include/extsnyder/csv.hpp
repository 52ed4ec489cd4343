#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace extsnyder {

/// Round-trip text of a double: 17 significant digits, general notation.
std::string format_double(double value);

/// Quotes a field when it contains a comma, quote or newline (RFC 4180).
std::string csv_field(std::string_view text);

/// Accumulates CSV rows with '\n' line endings.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);

  // Throws StructuralError when the column count differs from the header.
  void row(const std::vector<std::string>& fields);
  void raw_line(std::string_view line);

  const std::string& str() const { return text_; }

 private:
  std::size_t columns_;
  std::string text_;
};

}  // namespace extsnyder
