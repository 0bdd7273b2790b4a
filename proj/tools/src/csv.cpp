#include "erange/tools/csv.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "erange/error.hpp"

namespace erange::tools {

std::string format_number(double x) {
  if (!std::isfinite(x)) return {};
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void CsvWriter::comment(std::string_view text) {
  buf_ += "# ";
  buf_ += text;
  buf_ += '\n';
}

void CsvWriter::header(std::initializer_list<std::string_view> names) {
  columns_ = names.size();
  bool first = true;
  for (auto n : names) {
    if (!first) buf_ += ',';
    buf_ += n;
    first = false;
  }
  buf_ += '\n';
}

void CsvWriter::row(std::initializer_list<Cell> cells) {
  if (cells.size() != columns_)
    throw Error(Errc::precondition, "csv row width does not match header");
  bool first = true;
  for (const auto& c : cells) {
    if (!first) buf_ += ',';
    first = false;
    if (const auto* s = std::get_if<std::string>(&c)) {
      buf_ += *s;
    } else if (const auto& v = std::get<std::optional<double>>(c)) {
      buf_ += format_number(*v);
    }
  }
  buf_ += '\n';
  ++rows_;
}

std::optional<std::size_t> CsvTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  return std::nullopt;
}

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    auto field = line.substr(start, pos == std::string_view::npos ? pos : pos - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
      field.remove_suffix(1);
    out.emplace_back(field);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t line_no = 0;
  bool have_header = false;
  while (!text.empty()) {
    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line);
    if (!have_header) {
      table.columns = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      std::ostringstream os;
      os << "csv line " << line_no << " has " << fields.size() << " fields, expected "
         << table.columns.size();
      throw Error(Errc::precondition, os.str());
    }
    std::vector<std::optional<double>> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      if (f.empty()) {
        row.emplace_back();
        continue;
      }
      double v = 0.0;
      auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        row.emplace_back();  // non-numeric field (e.g. a kind token)
        continue;
      }
      row.emplace_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(Errc::precondition, "csv input has no header row");
  return table;
}

}  // namespace erange::tools
