#pragma once

// Validation harness behind the CLI: tolerance profiles, the check suites run
// by `validate`, and the report builders for `spectrum`, `converge` and `entries`.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/operators.hpp"
#include "hankel/report.hpp"

namespace hankel {

enum class ToleranceProfile { Strict, Default, Fast };

/// Throws ParameterError for unknown names.
ToleranceProfile parse_profile(std::string_view name);
std::string_view profile_name(ToleranceProfile p);

struct Tolerances {
  double residual;       // commutator / intertwining / factorization, relative
  double closed_form;    // hand-derivable closed-form values
  double gram;           // max |G - I| for the orthonormality Gram matrix
  double total_mass;     // |∫ρ + Σμ - 1|
  double h_tail;         // Cauchy tail of the h-series
  double h_limit;        // |h-series limit - h|
  double continuum;      // relative |h - g|
  double wilson;         // absolute Wilson identity residual
  double quad_abs;       // quadrature tolerances used for moments
  double quad_rel;
  std::size_t h_terms;   // terms summed before extrapolating the h-series
};

Tolerances tolerances(ToleranceProfile p);

/// Either a B(a,b,c) triple or a Hilbert parameter θ.
struct Target {
  std::optional<ParamTriple> params;
  std::optional<double> theta;

  static Target triple(double a, double b, double c);
  static Target hilbert(double theta);
  std::map<std::string, double> describe() const;
};

/// Parameter triples exercised by default: (1,1,1), (2,1.5,1), (0.5,1,2), (0.2,0.3,9).
std::vector<ParamTriple> standard_corpus();
/// θ values exercised by default: 1, 0.25, -0.7.
std::vector<double> standard_thetas();
/// 50 triples with a discrete part, mass counts 1 through 5, half of them with b > c.
std::vector<ParamTriple> discrete_grid();

Report cmd_spectrum(const Target& target, ToleranceProfile profile);

struct ConvergeOutput {
  Report report;
  CsvTable table;
};

/// Top eigenvalues of the n×n truncations (B or H(θ)) for each n in sizes.
ConvergeOutput cmd_converge(const Target& target, const std::vector<std::size_t>& sizes, std::size_t top,
                            ToleranceProfile profile);

struct ValidateOptions {
  std::vector<std::string> checks;  // empty: all
  std::optional<Target> target;     // replaces the standard corpus when set
  std::size_t trace_terms = 1000000;
  std::size_t trials = 1000;
  std::uint64_t seed = 20140101;
  bool concurrent = true;
};

std::vector<std::string> validate_check_names();

/// Runs the selected suites (concurrently if asked) and merges their checks in
/// the fixed order of validate_check_names(). Throws ParameterError for an unknown check.
Report cmd_validate(const ValidateOptions& options, ToleranceProfile profile);

enum class MatrixKind { B, T, H, A, Z };

/// Throws ParameterError for unknown names.
MatrixKind parse_matrix_kind(std::string_view name);

struct EntriesOutput {
  Report report;
  CsvTable table;  // long format: row, col, value (nonzeros only for T)
};

/// B and T need a triple, H a θ; A and Z ignore the target.
EntriesOutput cmd_entries(MatrixKind kind, const std::optional<Target>& target, std::size_t n);

}  // namespace hankel
