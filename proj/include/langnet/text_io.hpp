#ifndef LANGNET_TEXT_IO_HPP
#define LANGNET_TEXT_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace langnet::text {

/// Shortest round-trip decimal representation ("6", "0.75", "1.3333333333333333").
std::string format_double(double value);

/// format_double, or an empty string when absent.
std::string format_optional(const std::optional<double>& value);

std::string_view trim(std::string_view s);

std::string to_lower(std::string_view s);

/// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv(std::string_view line);

/// Quotes a field if it contains a comma, quote, or leading/trailing space.
std::string csv_field(std::string_view s);

/// Strict parsers: the whole (trimmed) string must be consumed.
std::optional<std::int64_t> parse_int(std::string_view s);
std::optional<std::uint64_t> parse_uint(std::string_view s);
std::optional<double> parse_double(std::string_view s);

/// Reads a whole file; throws DataError if it cannot be opened.
std::string read_file(const std::string& path);

/// Writes a whole file; throws std::runtime_error on failure.
void write_file(const std::string& path, std::string_view content);

/// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string> split_lines(std::string_view content);

}  // namespace langnet::text

#endif  // LANGNET_TEXT_IO_HPP
