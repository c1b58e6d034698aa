#include "langnet/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "langnet/errors.hpp"
#include "langnet/text_io.hpp"

namespace langnet::empirical {

std::vector<CountryRecord> parse_countries(const std::string& content) {
  const auto lines = text::split_lines(content);
  std::size_t first = 0;
  while (first < lines.size() && text::trim(lines[first]).empty()) ++first;
  if (first == lines.size()) throw DataError("country file is empty; expected header 'country,population,languages'");

  std::string header = lines[first];
  if (header.starts_with("\xEF\xBB\xBF")) header.erase(0, 3);
  const auto cols = text::split_csv(header);
  if (cols.size() != 3 || text::to_lower(text::trim(cols[0])) != "country" ||
      text::to_lower(text::trim(cols[1])) != "population" ||
      text::to_lower(text::trim(cols[2])) != "languages") {
    throw DataError("line " + std::to_string(first + 1) + ": expected header 'country,population,languages', got '" +
                    header + "'");
  }

  std::vector<CountryRecord> records;
  std::vector<std::string> problems;
  for (std::size_t k = first + 1; k < lines.size(); ++k) {
    if (text::trim(lines[k]).empty()) continue;
    const std::string where = "line " + std::to_string(k + 1) + ": ";
    const auto fields = text::split_csv(lines[k]);
    if (fields.size() != 3) {
      problems.push_back(where + "expected 3 fields, found " + std::to_string(fields.size()));
      continue;
    }
    CountryRecord r;
    r.country = std::string(text::trim(fields[0]));
    const auto population = text::parse_uint(fields[1]);
    const auto languages = text::parse_uint(fields[2]);
    if (r.country.empty()) {
      problems.push_back(where + "empty country name");
    } else if (!population) {
      problems.push_back(where + "population '" + fields[1] + "' is not an integer");
    } else if (!languages) {
      problems.push_back(where + "languages '" + fields[2] + "' is not an integer");
    } else if (*population < 1) {
      problems.push_back(where + "population must be >= 1");
    } else if (*languages < 1) {
      problems.push_back(where + "languages must be >= 1");
    } else {
      r.population = *population;
      r.languages = *languages;
      records.push_back(std::move(r));
    }
  }
  if (!problems.empty()) {
    std::string msg = "rejected " + std::to_string(problems.size()) + " row(s):";
    for (const auto& p : problems) msg += "\n  " + p;
    throw DataError(msg);
  }
  return records;
}

std::vector<CountryRecord> load_countries(const std::string& path) {
  return parse_countries(text::read_file(path));
}

ExclusionResult exclude(std::span<const CountryRecord> records, std::span<const std::string> names) {
  std::map<std::string, bool> wanted;  // normalized name -> matched
  for (const auto& n : names) {
    const std::string key = text::to_lower(text::trim(n));
    if (!key.empty()) wanted.emplace(key, false);
  }
  ExclusionResult out;
  for (const auto& r : records) {
    auto it = wanted.find(text::to_lower(text::trim(r.country)));
    if (it == wanted.end()) {
      out.kept.push_back(r);
    } else {
      it->second = true;
    }
  }
  for (const auto& n : names) {
    const std::string key = text::to_lower(text::trim(n));
    auto it = wanted.find(key);
    if (it != wanted.end() && !it->second) {
      out.warnings.push_back("exclusion '" + std::string(text::trim(n)) + "' matched no record");
      it->second = true;  // warn once
    }
  }
  return out;
}

std::vector<std::string> parse_name_list(const std::string& content) {
  std::vector<std::string> names;
  for (const auto& line : text::split_lines(content)) {
    const auto name = text::trim(line);
    if (name.empty() || name.front() == '#') continue;
    names.emplace_back(name);
  }
  return names;
}

std::vector<std::string> default_exclusions() {
  return {"China", "India", "Indonesia", "Papua New Guinea"};
}

namespace {

std::vector<BinRow> fill_bins(std::span<const CountryRecord> records, const std::vector<std::uint64_t>& edges) {
  std::vector<BinRow> bins;
  std::vector<std::uint64_t> sums(edges.size() - 1, 0);
  for (std::size_t b = 0; b + 1 < edges.size(); ++b) bins.push_back({edges[b], edges[b + 1], std::nullopt, 0});
  for (const auto& r : records) {
    auto it = std::upper_bound(edges.begin(), edges.end(), r.population);
    const auto b = static_cast<std::size_t>(it - edges.begin()) - 1;
    sums[b] += r.languages;
    ++bins[b].country_count;
  }
  for (std::size_t b = 0; b < bins.size(); ++b) {
    if (bins[b].country_count > 0) {
      bins[b].mean_languages = static_cast<double>(sums[b]) / static_cast<double>(bins[b].country_count);
    }
  }
  return bins;
}

}  // namespace

std::vector<BinRow> bin_average(std::span<const CountryRecord> records, std::uint64_t bin_width) {
  if (bin_width == 0) throw ParameterError("bin width must be positive");
  if (records.empty()) return {};
  std::uint64_t top = 0;
  for (const auto& r : records) top = std::max(top, r.population);
  std::vector<std::uint64_t> edges;
  for (std::uint64_t k = 0; k <= top / bin_width + 1; ++k) edges.push_back(k * bin_width);
  return fill_bins(records, edges);
}

std::vector<BinRow> log_bin_average(std::span<const CountryRecord> records, double base) {
  if (!(base > 1.0) || !std::isfinite(base)) throw ParameterError("log bin base must be > 1");
  if (records.empty()) return {};
  std::uint64_t lo = UINT64_MAX, hi = 0;
  for (const auto& r : records) {
    lo = std::min(lo, r.population);
    hi = std::max(hi, r.population);
  }
  auto boundary = [base](int k) { return static_cast<std::uint64_t>(std::ceil(std::pow(base, k))); };
  int k = static_cast<int>(std::floor(std::log(static_cast<double>(lo)) / std::log(base)));
  while (k > 0 && boundary(k) > lo) --k;
  while (boundary(k + 1) <= lo) ++k;
  std::vector<std::uint64_t> edges{boundary(k)};
  while (edges.back() <= hi) {
    const std::uint64_t next = boundary(++k);
    if (next > edges.back()) edges.push_back(next);
  }
  return fill_bins(records, edges);
}

std::vector<CountryRecord> scatter_sorted(std::span<const CountryRecord> records) {
  std::vector<CountryRecord> out(records.begin(), records.end());
  std::stable_sort(out.begin(), out.end(), [](const CountryRecord& a, const CountryRecord& b) {
    if (a.population != b.population) return a.population < b.population;
    return a.country < b.country;
  });
  return out;
}

std::string format_scatter_csv(std::span<const CountryRecord> records) {
  std::string out = std::string(kScatterHeader) + "\n";
  for (const auto& r : scatter_sorted(records)) {
    out += std::to_string(r.population) + ',' + std::to_string(r.languages) + ',' + text::csv_field(r.country) + '\n';
  }
  return out;
}

std::string format_bins_csv(std::span<const BinRow> bins) {
  std::string out = std::string(kBinHeader) + "\n";
  for (const auto& b : bins) {
    out += std::to_string(b.lower) + ',' + std::to_string(b.upper) + ',' + text::format_optional(b.mean_languages) +
           ',' + std::to_string(b.country_count) + '\n';
  }
  return out;
}

}  // namespace langnet::empirical
