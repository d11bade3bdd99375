#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace firelink::csv {

struct Row {
  std::size_t line = 0;  // 1-based line number in the file
  std::vector<std::string> fields;
};

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;

  /// Index of `name` in the header; throws ValidationError if missing.
  std::size_t column(std::string_view name) const;
};

/// Plain comma-separated file with a header line. Blank lines and lines
/// starting with '#' are skipped; fields are trimmed. No quoting support.
/// Throws ValidationError for an empty file or ragged rows.
Table read(const std::filesystem::path& path);

/// Throws ValidationError naming `what` and `line` on malformed input.
double to_double(std::string_view field, std::string_view what, std::size_t line);
std::int64_t to_int(std::string_view field, std::string_view what, std::size_t line);

/// Shortest text that parses back to exactly `value`.
std::string format(double value);

/// Header line then rows, newline-terminated.
std::string render(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// Writes render(header, rows) to `path`.
void write(const std::filesystem::path& path, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows);

}  // namespace firelink::csv
