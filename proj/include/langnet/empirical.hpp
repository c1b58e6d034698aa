#ifndef LANGNET_EMPIRICAL_HPP
#define LANGNET_EMPIRICAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace langnet::empirical {

struct CountryRecord {
  std::string country;
  std::uint64_t population = 0;
  std::uint64_t languages = 0;
};

/// Half-open population interval [lower, upper).
struct BinRow {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<double> mean_languages;  // absent for empty bins
  std::size_t country_count = 0;
};

/// Parses "country,population,languages" CSV text. Every invalid row is
/// collected; if any exist a DataError lists them all by line number.
std::vector<CountryRecord> parse_countries(const std::string& content);

/// parse_countries on a file. Throws DataError if the file cannot be read.
std::vector<CountryRecord> load_countries(const std::string& path);

struct ExclusionResult {
  std::vector<CountryRecord> kept;
  std::vector<std::string> warnings;  // one per name that matched nothing
};

/// Drops records whose trimmed name equals one of `names`, ignoring case.
ExclusionResult exclude(std::span<const CountryRecord> records,
                        std::span<const std::string> names);

/// Names from an exclusion file: one per line, '#' comments and blanks skipped.
std::vector<std::string> parse_name_list(const std::string& content);

/// Countries dropped from the binned view by default: two population outliers
/// and two language-count outliers.
std::vector<std::string> default_exclusions();

/// Fixed-width bins [k w, (k+1) w) from 0 through the bin holding the largest population.
std::vector<BinRow> bin_average(std::span<const CountryRecord> records, std::uint64_t bin_width);

/// Geometric bins [ceil(b^k), ceil(b^(k+1))) spanning the populated range. base > 1.
std::vector<BinRow> log_bin_average(std::span<const CountryRecord> records, double base);

/// Records sorted by population, then country name.
std::vector<CountryRecord> scatter_sorted(std::span<const CountryRecord> records);

inline constexpr const char* kScatterHeader = "population,languages,country";
inline constexpr const char* kBinHeader = "lower,upper,mean_languages,country_count";

std::string format_scatter_csv(std::span<const CountryRecord> records);
std::string format_bins_csv(std::span<const BinRow> bins);

}  // namespace langnet::empirical

#endif  // LANGNET_EMPIRICAL_HPP
