#include "hankel/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace hankel {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 6> kProvenanceNames = {"closed-form", "truncation", "quadrature",
                                                              "residual",    "sampling",   "series"};

// JSON has no NaN or infinity; those travel as strings.
Json encode(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  return v;
}

double decode(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "NaN") return std::numeric_limits<double>::quiet_NaN();
    if (s == "Infinity") return std::numeric_limits<double>::infinity();
    if (s == "-Infinity") return -std::numeric_limits<double>::infinity();
  }
  throw std::runtime_error("report: expected a number, got " + j.dump());
}

Json encode(const ResultValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return Json{{"type", "scalar"}, {"value", encode(*d)}};
  if (const auto* s = std::get_if<std::string>(&v)) return Json{{"type", "text"}, {"value", *s}};
  Json arr = Json::array();
  for (double d : std::get<std::vector<double>>(v)) arr.push_back(encode(d));
  return Json{{"type", "array"}, {"value", arr}};
}

ResultValue decode_result(const Json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "scalar") return decode(j.at("value"));
  if (type == "text") return j.at("value").get<std::string>();
  if (type == "array") {
    std::vector<double> out;
    for (const auto& e : j.at("value")) out.push_back(decode(e));
    return out;
  }
  throw std::runtime_error("report: unknown result type '" + type + "'");
}

}  // namespace

std::string_view provenance_name(Provenance p) { return kProvenanceNames[static_cast<std::size_t>(p)]; }

Provenance parse_provenance(std::string_view s) {
  for (std::size_t i = 0; i < kProvenanceNames.size(); ++i)
    if (kProvenanceNames[i] == s) return static_cast<Provenance>(i);
  throw std::runtime_error("report: unknown provenance '" + std::string(s) + "'");
}

Check make_check(std::string name, double value, double expected, double tolerance, Provenance provenance) {
  const bool pass = std::fabs(value - expected) <= tolerance;
  return {std::move(name), value, expected, tolerance, pass, provenance};
}

Check make_upper_check(std::string name, double value, double bound, Provenance provenance) {
  return {std::move(name), value, bound, 0.0, value <= bound, provenance};
}

bool Report::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

const ResultValue* Report::find_result(std::string_view name) const {
  for (const auto& [k, v] : results)
    if (k == name) return &v;
  return nullptr;
}

std::string to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = encode(v);
  j["params"] = params;
  j["seed"] = r.seed;
  j["tolerance_profile"] = r.tolerance_profile;
  j["version"] = r.version;
  j["pass"] = r.all_pass();
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"value", encode(c.value)},
                      {"expected", encode(c.expected)},
                      {"tolerance", encode(c.tolerance)},
                      {"pass", c.pass},
                      {"provenance", provenance_name(c.provenance)}});
  }
  j["checks"] = checks;
  Json results = Json::array();
  for (const auto& [name, v] : r.results) {
    Json e{{"name", name}};
    e.update(encode(v));
    results.push_back(e);
  }
  j["results"] = results;
  j["artifacts"] = r.artifacts;
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("report: invalid JSON: ") + e.what());
  }
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = decode(v);
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tolerance_profile = j.at("tolerance_profile").get<std::string>();
    r.version = j.at("version").get<std::string>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), decode(c.at("value")), decode(c.at("expected")),
                          decode(c.at("tolerance")), c.at("pass").get<bool>(),
                          parse_provenance(c.at("provenance").get<std::string>())});
    }
    for (const auto& e : j.at("results")) r.results.emplace_back(e.at("name").get<std::string>(), decode_result(e));
    r.artifacts = j.at("artifacts").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("report: missing or mistyped field: ") + e.what());
  }
}

std::string format_double(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void CsvTable::add_row(std::vector<double> row) {
  if (row.size() != header_.size()) throw std::invalid_argument("CsvTable: row width does not match header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) out += (i ? "," : "") + header_[i];
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_double(row[i]);
    out += '\n';
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex16(std::uint64_t h) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kDigits[h & 0xf];
  return out;
}

std::filesystem::path write_content_addressed(const std::filesystem::path& dir, std::string_view stem,
                                              std::string_view ext, std::string_view content) {
  std::filesystem::create_directories(dir);
  const auto path = dir / (std::string(stem) + "-" + hex16(fnv1a64(content)) + "." + std::string(ext));
  if (std::filesystem::exists(path)) return path;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw std::runtime_error("failed writing " + path.string());
  return path;
}

}  // namespace hankel
