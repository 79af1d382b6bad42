#pragma once

// Serializable run reports. JSON output is deterministic (ordered keys, no
// wall-clock data) so identical inputs give byte-identical files, and doubles
// are written in shortest round-trip form so the reader restores them exactly.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hankel {

enum class Provenance { ClosedForm, Truncation, Quadrature, Residual, Sampling, Series };

std::string_view provenance_name(Provenance p);
Provenance parse_provenance(std::string_view s);

struct Check {
  std::string name;
  double value;
  double expected;
  double tolerance;
  bool pass;
  Provenance provenance;

  bool operator==(const Check&) const = default;
};

/// |value - expected| <= tolerance, with NaN failing.
Check make_check(std::string name, double value, double expected, double tolerance, Provenance provenance);
/// value <= bound.
Check make_upper_check(std::string name, double value, double bound, Provenance provenance);

using ResultValue = std::variant<double, std::vector<double>, std::string>;

struct Report {
  std::string command;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
  std::string tolerance_profile = "default";
  std::string version = HANKEL_VERSION;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, ResultValue>> results;  // insertion order is kept
  std::vector<std::string> artifacts;

  bool all_pass() const;
  void add_result(std::string name, ResultValue v) { results.emplace_back(std::move(name), std::move(v)); }
  const ResultValue* find_result(std::string_view name) const;

  bool operator==(const Report&) const = default;
};

std::string to_json(const Report& r);
/// Inverse of to_json. Throws std::runtime_error on malformed input.
Report report_from_json(std::string_view text);

/// Rows of doubles under a header; numbers in shortest round-trip form with '.' decimals.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(std::vector<double> row);
  std::string str() const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

/// Shortest decimal string that reads back to exactly v (locale independent).
std::string format_double(double v);

std::uint64_t fnv1a64(std::string_view data);
std::string hex16(std::uint64_t h);

/// Writes content to dir/<stem>-<hash>.<ext> and returns the path. Existing
/// files with the same name already hold the same content and are left alone.
std::filesystem::path write_content_addressed(const std::filesystem::path& dir, std::string_view stem,
                                              std::string_view ext, std::string_view content);

}  // namespace hankel
