#pragma once

// Minimal CSV emitter: LF line endings, '#' comment lines, numbers with 17
// significant digits, non-finite or missing numbers as empty fields.

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace erange::tools {

std::string format_number(double x);

class CsvWriter {
 public:
  using Cell = std::variant<std::optional<double>, std::string>;

  void comment(std::string_view text);
  void header(std::initializer_list<std::string_view> names);
  void row(std::initializer_list<Cell> cells);

  const std::string& str() const noexcept { return buf_; }
  std::size_t rows() const noexcept { return rows_; }

 private:
  std::size_t columns_ = 0;
  std::size_t rows_ = 0;
  std::string buf_;
};

/// Parsed CSV with '#' lines and blank lines skipped. Empty and non-numeric
/// fields read as nullopt.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  /// Column index by name, or nullopt.
  std::optional<std::size_t> find(std::string_view name) const;
};

/// Throws erange::Error(precondition) on a ragged row or a missing header.
CsvTable parse_csv(std::string_view text);

}  // namespace erange::tools
