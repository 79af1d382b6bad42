// hankel: spectra, truncation convergence, validation suites and matrix dumps
// for weighted Hankel matrices and generalized Hilbert matrices.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or parameter error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hankel/errors.hpp"
#include "hankel/harness.hpp"

namespace {

struct TargetFlags {
  std::optional<double> a, b, c, theta;

  void attach(CLI::App* app) {
    app->add_option("--a", a, "parameter a > 0");
    app->add_option("--b", b, "parameter b > 0");
    app->add_option("--c", c, "parameter c > 0");
    app->add_option("--theta", theta, "Hilbert parameter, not 0, -1, -2, ...");
  }

  std::optional<hankel::Target> get() const {
    const int given = a.has_value() + b.has_value() + c.has_value();
    if (theta && given) throw hankel::ParameterError("give either --a --b --c or --theta, not both");
    if (theta) return hankel::Target::hilbert(*theta);
    if (given == 3) return hankel::Target::triple(*a, *b, *c);
    if (given) throw hankel::ParameterError("--a, --b and --c must be given together");
    return std::nullopt;
  }

  hankel::Target required() const {
    auto t = get();
    if (!t) throw hankel::ParameterError("need --a --b --c or --theta");
    return *t;
  }
};

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string checks_csv(const hankel::Report& r) {
  std::string out = "name,value,expected,tolerance,pass,provenance\n";
  for (const auto& c : r.checks) {
    out += csv_quote(c.name) + "," + hankel::format_double(c.value) + "," + hankel::format_double(c.expected) + "," +
           hankel::format_double(c.tolerance) + "," + (c.pass ? "true" : "false") + "," +
           std::string(hankel::provenance_name(c.provenance)) + "\n";
  }
  return out;
}

int emit(hankel::Report report, const std::optional<std::string>& table, const std::string& format,
         const std::string& out_dir) {
  const std::string csv = table ? *table : checks_csv(report);
  if (!out_dir.empty()) {
    report.artifacts.push_back(hankel::write_content_addressed(out_dir, report.command, "csv", csv).string());
    const std::string json = hankel::to_json(report);
    const auto path = hankel::write_content_addressed(out_dir, report.command, "json", json);
    std::cerr << "wrote " << path.string() << "\n";
  }
  std::cout << (format == "csv" ? csv : hankel::to_json(report));
  if (!report.all_pass()) {
    for (const auto& c : report.checks)
      if (!c.pass) std::cerr << "FAIL " << c.name << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral computations for weighted Hankel and generalized Hilbert matrices"};
  app.require_subcommand(1);

  std::string format = "json", tol = "default", out_dir;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", tol, "strict, default or fast")->check(CLI::IsMember({"strict", "default", "fast"}));
    sub->add_option("--out", out_dir, "write content-addressed report files to DIR");
  };

  TargetFlags spectrum_t;
  auto* spectrum = app.add_subcommand("spectrum", "band edge, norm and point spectrum");
  spectrum_t.attach(spectrum);
  common(spectrum);

  TargetFlags converge_t;
  std::vector<std::size_t> sizes = {64, 128, 256, 512};
  std::size_t top = 1;
  auto* converge = app.add_subcommand("converge", "top eigenvalues of growing truncations");
  converge_t.attach(converge);
  converge->add_option("--sizes", sizes, "comma-separated truncation sizes")->delimiter(',');
  converge->add_option("--top", top, "number of top eigenvalues per size");
  common(converge);

  TargetFlags validate_t;
  hankel::ValidateOptions vopts;
  auto* validate = app.add_subcommand("validate", "run the invariant suites");
  validate_t.attach(validate);
  validate->add_option("--check", vopts.checks, "suite name (repeatable); default all")
      ->delimiter(',')
      ->check(CLI::IsMember(hankel::validate_check_names()));
  validate->add_option("--J", vopts.trace_terms, "terms of the trace-defect sum");
  validate->add_option("--trials", vopts.trials, "random sequences for the inequality suite");
  validate->add_option("--seed", vopts.seed, "RNG seed");
  validate->add_flag("!--serial", vopts.concurrent, "run suites one after another");
  common(validate);

  TargetFlags entries_t;
  std::string matrix = "B";
  std::size_t n = 8;
  auto* entries = app.add_subcommand("entries", "dump an n x n truncation");
  entries_t.attach(entries);
  entries->add_option("--matrix", matrix, "B, T, H, A or Z");
  entries->add_option("--n", n, "truncation size");
  common(entries);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const hankel::ToleranceProfile profile = hankel::parse_profile(tol);
    if (*spectrum) return emit(hankel::cmd_spectrum(spectrum_t.required(), profile), std::nullopt, format, out_dir);
    if (*converge) {
      auto r = hankel::cmd_converge(converge_t.required(), sizes, top, profile);
      return emit(std::move(r.report), r.table.str(), format, out_dir);
    }
    if (*validate) {
      vopts.target = validate_t.get();
      return emit(hankel::cmd_validate(vopts, profile), std::nullopt, format, out_dir);
    }
    if (*entries) {
      auto r = hankel::cmd_entries(hankel::parse_matrix_kind(matrix), entries_t.get(), n);
      return emit(std::move(r.report), r.table.str(), format, out_dir);
    }
  } catch (const hankel::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hankel::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
