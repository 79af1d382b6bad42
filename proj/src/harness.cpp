#include "hankel/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <tuple>

#include "hankel/cdh.hpp"
#include "hankel/eigensolve.hpp"
#include "hankel/errors.hpp"
#include "hankel/hilbert.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/spectral.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

namespace {

constexpr double kPi = std::numbers::pi;

struct SuiteOutput {
  std::vector<Check> checks;
  std::vector<std::pair<std::string, ResultValue>> results;
};

struct Context {
  std::vector<ParamTriple> corpus;
  std::vector<double> thetas;
  bool explicit_target = false;
  Tolerances tol;
  ValidateOptions opts;
};

std::string label(const ParamTriple& p) {
  return "(" + format_double(p.a()) + "," + format_double(p.b()) + "," + format_double(p.c()) + ")";
}

std::string theta_label(double theta) { return "theta=" + format_double(theta); }

double max_gram_deviation(const std::vector<std::vector<double>>& g) {
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) worst = std::max(worst, std::fabs(g[i][j] - (i == j ? 1.0 : 0.0)));
  return worst;
}

QuadratureSpec quad_spec(const Tolerances& tol) {
  QuadratureSpec s;
  s.abs_tol = tol.quad_abs;
  s.rel_tol = tol.quad_rel;
  return s;
}

// Largest and smallest possible values of ⟨ξ, M ξ⟩/Σξ² for H(θ).
std::pair<double, double> hilbert_form_bounds(double theta) {
  double hi = kPi, lo = 0.0;
  for (const auto& e : hilbert_spectrum_report(theta).eigen) {
    hi = std::max(hi, e.value);
    lo = std::min(lo, e.value);
  }
  return {lo, hi};
}

SuiteOutput suite_commutator(const Context& ctx) {
  SuiteOutput out;
  for (const ParamTriple& p : ctx.corpus)
    for (std::size_t n : {16u, 64u, 256u})
      out.checks.push_back(make_upper_check("commutator " + label(p) + " n=" + std::to_string(n),
                                            commutator_residual(p, n).relative(), ctx.tol.residual,
                                            Provenance::Residual));
  for (double theta : ctx.thetas)
    for (std::size_t n : {16u, 64u, 256u})
      out.checks.push_back(make_upper_check(
          "commutator H(" + theta_label(theta) + ") n=" + std::to_string(n),
          commutator_residual(h_theta_matrix(theta, n), hilbert_jacobi(theta, n)).relative(), ctx.tol.residual,
          Provenance::Residual));
  return out;
}

SuiteOutput suite_intertwining(const Context& ctx) {
  SuiteOutput out;
  for (const ParamTriple& p : ctx.corpus)
    out.checks.push_back(make_upper_check("intertwining " + label(p) + " n=64", intertwining_residual(p, 64).relative(),
                                          ctx.tol.residual, Provenance::Residual));
  return out;
}

SuiteOutput suite_whw(const Context& ctx) {
  SuiteOutput out;
  for (const ParamTriple& p : ctx.corpus)
    out.checks.push_back(make_upper_check("whw factorization " + label(p) + " n=64",
                                          whw_factorization_residual(p, 64).relative(), ctx.tol.residual,
                                          Provenance::Residual));
  return out;
}

SuiteOutput suite_dilatation(const Context& ctx) {
  SuiteOutput out;
  for (const ParamTriple& p : ctx.corpus)
    out.checks.push_back(make_upper_check("dilatation commutator " + label(p) + " n=64",
                                          dilatation_residual(p, 64).relative(), ctx.tol.residual,
                                          Provenance::Residual));
  return out;
}

SuiteOutput suite_orthogonality(const Context& ctx) {
  SuiteOutput out;
  const QuadratureSpec spec = quad_spec(ctx.tol);
  for (const ParamTriple& p : ctx.corpus)
    out.checks.push_back(make_upper_check("gram max|G-I| " + label(p) + " degree<=8",
                                          max_gram_deviation(gram_matrix(OrthogonalityMeasure::for_params(p), 8, spec)),
                                          ctx.tol.gram, Provenance::Quadrature));
  for (double theta : ctx.thetas)
    out.checks.push_back(make_upper_check(
        "gram max|G-I| H(" + theta_label(theta) + ") degree<=8",
        max_gram_deviation(gram_matrix(OrthogonalityMeasure::for_hilbert(theta), 8, spec)), ctx.tol.gram,
        Provenance::Quadrature));
  return out;
}

SuiteOutput suite_mass_sum(const Context& ctx) {
  SuiteOutput out;
  const QuadratureSpec spec = quad_spec(ctx.tol);
  for (const ParamTriple& p : ctx.corpus)
    out.checks.push_back(make_check("total mass " + label(p),
                                    total_mass(OrthogonalityMeasure::for_params(p, 0), spec).value, 1.0,
                                    ctx.tol.total_mass, Provenance::Quadrature));
  for (double theta : ctx.thetas)
    out.checks.push_back(make_check("total mass H(" + theta_label(theta) + ")",
                                    total_mass(OrthogonalityMeasure::for_hilbert(theta, 0), spec).value, 1.0,
                                    ctx.tol.total_mass, Provenance::Quadrature));
  return out;
}

SuiteOutput suite_h_series(const Context& ctx) {
  SuiteOutput out;
  std::vector<ParamTriple> ps = ctx.explicit_target ? ctx.corpus
                                                     : std::vector{ParamTriple::validate(1, 1, 1),
                                                                   ParamTriple::validate(0.5, 1, 2)};
  for (const ParamTriple& p : ps) {
    for (double x : {0.0, 0.5, 1.0, 2.0}) {
      const std::string where = label(p) + " x=" + format_double(x);
      const SeriesLimit lim = h_series_limit(p, x, ctx.tol.h_terms);
      out.checks.push_back(make_upper_check("h-series tail " + where, lim.tail_estimate, ctx.tol.h_tail,
                                            Provenance::Series));
      out.checks.push_back(
          make_check("h-series limit " + where, lim.value, h_eval(p, x), ctx.tol.h_limit, Provenance::Series));
      if (p.b() + p.c() - p.a() == 1.0)
        out.checks.push_back(make_check("h-series limit vs pi/cosh(pi x) " + where, lim.value, kPi / std::cosh(kPi * x),
                                        ctx.tol.h_limit, Provenance::Series));
    }
  }
  return out;
}

SuiteOutput suite_point_spectrum(const Context& ctx) {
  SuiteOutput out;
  for (const ParamTriple& p : ctx.corpus) {
    const SpectralModel m = spectral_model(p);
    double mass_sum = 0.0;
    for (const MassPoint& mp : m.mass_points) {
      mass_sum += mp.mass;
      out.checks.push_back(make_check("mass*|v|^2 " + label(p) + " k=" + std::to_string(mp.k), mp.mass * mp.v_norm_sq,
                                      1.0, ctx.tol.closed_form, Provenance::ClosedForm));
    }
    out.checks.push_back(make_upper_check("sum of masses " + label(p), mass_sum, 1.0, Provenance::ClosedForm));
  }
  return out;
}

SuiteOutput suite_beta_ordering(const Context& ctx) {
  SuiteOutput out;
  std::vector<ParamTriple> grid = discrete_grid();
  if (ctx.explicit_target) grid = ctx.corpus;
  double violations = 0.0;
  for (const ParamTriple& p : grid) {
    const SpectralModel m = spectral_model(p);
    for (std::size_t k = 0; k < m.mass_points.size(); ++k) {
      const double next = k + 1 < m.mass_points.size() ? m.mass_points[k + 1].beta : m.band_edge;
      if (!(m.mass_points[k].beta > next)) violations += 1.0;
    }
  }
  out.checks.push_back(make_check("beta ordering violations over " + std::to_string(grid.size()) + " triples",
                                  violations, 0.0, 0.0, Provenance::ClosedForm));
  return out;
}

SuiteOutput suite_sign_lemma(const Context& ctx) {
  SuiteOutput out;
  std::vector<ParamTriple> grid = discrete_grid();
  if (ctx.explicit_target) grid = ctx.corpus;
  double violations = 0.0;
  for (const ParamTriple& p : grid) {
    const CanonicalTriple q = p.canonical();
    for (int k = 0; k < p.mass_count(); ++k) {
      const double expected = (k % 2 == 0) ? 1.0 : -1.0;
      for (double t : {q.a + q.b - q.c, q.a - q.c + 1.0, q.b - q.c + 1.0}) {
        const double v = specfun::pochhammer(t, k);
        if (!(v * expected > 0.0)) violations += 1.0;
      }
    }
  }
  out.checks.push_back(make_check("pochhammer sign violations over " + std::to_string(grid.size()) + " triples",
                                  violations, 0.0, 0.0, Provenance::ClosedForm));
  return out;
}

SuiteOutput suite_wilson(const Context& ctx) {
  SuiteOutput out;
  for (double theta : ctx.thetas) {
    std::vector<double> args = {0.25, 1.0};
    for (int k = 0; k <= hilbert_discrete_count(theta); ++k) args.push_back(hilbert_lambda_sq(theta, k));
    double worst = 0.0;
    for (double s : args)
      for (int n = 0; n <= 10; ++n) worst = std::max(worst, wilson_crosscheck(theta, n, s));
    out.checks.push_back(make_upper_check("wilson identity residual " + theta_label(theta) + " n<=10", worst,
                                          ctx.tol.wilson, Provenance::ClosedForm));
  }
  return out;
}

SuiteOutput suite_trace_defect(const Context& ctx) {
  SuiteOutput out;
  const std::size_t J = ctx.opts.trace_terms;
  const double sum = bergman_trace_defect(J);
  const double bound = 1.0 / (8.0 * static_cast<double>(J)) + 1e-12;
  out.checks.push_back(
      make_check("trace defect J=" + std::to_string(J), sum, kPi * kPi / 16.0, bound, Provenance::Series));
  out.results.emplace_back("trace_defect_sum", sum);
  return out;
}

SuiteOutput suite_bergman(const Context& ctx) {
  SuiteOutput out;
  double worst_ulps = 0.0, worst_rel = 0.0;
  const ParamTriple p112 = ParamTriple::validate(1, 1, 2);
  for (std::size_t j = 0; j <= 100; ++j)
    for (std::size_t k = 0; k <= 100; ++k) {
      const BergmanEntry e = bergman_entries(j, k);
      const double ulp = std::nextafter(e.A, 2.0 * e.A) - e.A;
      worst_ulps = std::max(worst_ulps, std::fabs(e.A - (e.B + e.Z)) / ulp);
      worst_rel = std::max(worst_rel, std::fabs(e.B - b_entry(p112, j, k)) / e.B);
    }
  out.checks.push_back(make_upper_check("bergman A-(B+Z) in ulps, j,k<=100", worst_ulps, 1.0, Provenance::ClosedForm));
  out.checks.push_back(make_upper_check("bergman B vs B(1,1,2) entries, relative", worst_rel, ctx.tol.closed_form,
                                        Provenance::ClosedForm));
  out.checks.push_back(make_check("band edge M(1,1,2)", cap_m(p112), 1.0, 0.0, Provenance::ClosedForm));
  return out;
}

SuiteOutput suite_inequality(const Context& ctx) {
  struct Case {
    std::string name;
    DenseSymmetric m;
    double lo;
    double hi;
  };
  constexpr std::size_t kLength = 512;
  std::vector<Case> cases;
  if (ctx.explicit_target) {
    for (const ParamTriple& p : ctx.corpus) cases.push_back({label(p), b_matrix(p, kLength), 0.0, operator_norm(p)});
    for (double theta : ctx.thetas) {
      const auto [lo, hi] = hilbert_form_bounds(theta);
      cases.push_back({"H(" + theta_label(theta) + ")", h_theta_matrix(theta, kLength), lo, hi});
    }
  } else {
    for (const ParamTriple& p : {ParamTriple::validate(1, 1, 1), ParamTriple::validate(0.25, 0.25, 1)})
      cases.push_back({label(p), b_matrix(p, kLength), 0.0, operator_norm(p)});
  }
  SuiteOutput out;
  for (const Case& c : cases) {
    std::mt19937_64 rng(ctx.opts.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0), rate(0.5, 0.95);
    std::uniform_int_distribution<std::size_t> length(1, kLength);
    double violations = 0.0, worst_ratio = 0.0;
    std::vector<double> xi(kLength);
    for (std::size_t t = 0; t < ctx.opts.trials; ++t) {
      const double r = rate(rng);
      const std::size_t len = length(rng);
      double power = 1.0, norm_sq = 0.0;
      for (std::size_t k = 0; k < kLength; ++k) {
        xi[k] = k < len ? unit(rng) * power : 0.0;
        power *= r;
        norm_sq += xi[k] * xi[k];
      }
      const double q = quadratic_form(c.m, xi);
      if (q < c.lo * norm_sq || q > c.hi * norm_sq) violations += 1.0;
      if (norm_sq > 0.0) worst_ratio = std::max(worst_ratio, q / (c.hi * norm_sq));
    }
    out.checks.push_back(make_check("double-series inequality violations " + c.name + " trials=" +
                                        std::to_string(ctx.opts.trials),
                                    violations, 0.0, 0.0, Provenance::Sampling));
    out.results.emplace_back("inequality_max_ratio " + c.name, worst_ratio);
  }
  return out;
}

SuiteOutput suite_continuum(const Context& ctx) {
  SuiteOutput out;
  if (ctx.explicit_target && ctx.corpus.empty()) return out;
  std::mt19937_64 rng(ctx.opts.seed + 1);
  std::uniform_real_distribution<double> param(0.05, 4.0), arg(0.0, 6.0);
  double worst = 0.0;
  std::size_t draws = 0;
  while (draws < 200) {
    const double a = param(rng), b = param(rng), c = param(rng);
    if (!(a < b + c)) continue;
    const ParamTriple p = ctx.explicit_target ? ctx.corpus.front() : ParamTriple::validate(a, b, c);
    const double x = arg(rng);
    const double h = h_eval(p, x);
    const double g = continuum_g(p.b() + p.c() - p.a() - 1.0, x);
    worst = std::max(worst, std::fabs(h - g) / h);
    ++draws;
  }
  out.checks.push_back(make_upper_check("h vs g relative, 200 draws", worst, ctx.tol.continuum, Provenance::ClosedForm));
  return out;
}

SuiteOutput suite_monotonicity(const Context& ctx) {
  SuiteOutput out;
  for (const ParamTriple& p : ctx.corpus) {
    double violations = 0.0;
    double prev = h_eval(p, 0.0);
    for (int i = 1; i < 1000; ++i) {
      const double v = h_eval(p, 0.01 * i);
      if (!(v < prev)) violations += 1.0;
      prev = v;
    }
    out.checks.push_back(make_check("h strictly decreasing on [0,10) " + label(p), violations, 0.0, 0.0,
                                    Provenance::ClosedForm));
  }
  return out;
}

SuiteOutput suite_truncation(const Context& ctx) {
  SuiteOutput out;
  const std::vector<std::size_t> sizes = {32, 64, 128};
  for (const ParamTriple& p : ctx.corpus) {
    const double norm = operator_norm(p);
    double prev = -std::numeric_limits<double>::infinity(), decreases = 0.0, top = 0.0, slack = 0.0;
    for (std::size_t n : sizes) {
      const DenseSymmetric b = b_matrix(p, n);
      top = dense_eigen(b, Selection::top(1)).values.back();
      slack = EigenOptions{}.relative_tolerance * b.inf_norm();
      if (top < prev) decreases += 1.0;
      prev = top;
    }
    out.checks.push_back(make_check("top eigenvalue nondecreasing " + label(p), decreases, 0.0, 0.0,
                                    Provenance::Truncation));
    out.checks.push_back(make_upper_check("top eigenvalue <= norm " + label(p) + " n=128", top, norm + slack,
                                          Provenance::Truncation));
  }
  for (double theta : ctx.thetas) {
    const auto [lo, hi] = hilbert_form_bounds(theta);
    const DenseSymmetric h = h_theta_matrix(theta, 128);
    const EigenResult r = dense_eigen(h, Selection::all());
    const double slack = 1e-12 * h.inf_norm();
    out.checks.push_back(make_upper_check("H(" + theta_label(theta) + ") n=128 top <= bound", r.values.back(), hi + slack,
                                          Provenance::Truncation));
    out.checks.push_back(make_upper_check("H(" + theta_label(theta) + ") n=128 -bottom <= -bound", -r.values.front(),
                                          -lo + slack, Provenance::Truncation));
  }
  return out;
}

using Suite = SuiteOutput (*)(const Context&);

struct NamedSuite {
  std::string_view name;
  Suite run;
};

constexpr NamedSuite kSuites[] = {
    {"commutator", suite_commutator},       {"intertwining", suite_intertwining},
    {"whw", suite_whw},                     {"dilatation", suite_dilatation},
    {"orthogonality", suite_orthogonality}, {"mass-sum", suite_mass_sum},
    {"h-series", suite_h_series},           {"point-spectrum", suite_point_spectrum},
    {"beta-ordering", suite_beta_ordering}, {"sign-lemma", suite_sign_lemma},
    {"wilson", suite_wilson},               {"trace-defect", suite_trace_defect},
    {"bergman", suite_bergman},             {"inequality", suite_inequality},
    {"continuum", suite_continuum},         {"monotonicity", suite_monotonicity},
    {"truncation", suite_truncation},
};

void add_spectral_checks(Report& r, const SpectralModel& m, const Tolerances& tol) {
  double violations = 0.0, mass_sum = 0.0;
  for (std::size_t k = 0; k < m.mass_points.size(); ++k) {
    const MassPoint& mp = m.mass_points[k];
    const double next = k + 1 < m.mass_points.size() ? m.mass_points[k + 1].beta : m.band_edge;
    if (!(mp.beta > next)) violations += 1.0;
    mass_sum += mp.mass;
    r.checks.push_back(make_check("mass*|v|^2 k=" + std::to_string(mp.k), mp.mass * mp.v_norm_sq, 1.0, tol.closed_form,
                                  Provenance::ClosedForm));
  }
  r.checks.push_back(make_check("beta ordering violations", violations, 0.0, 0.0, Provenance::ClosedForm));
  r.checks.push_back(make_upper_check("sum of masses", mass_sum, 1.0, Provenance::ClosedForm));
}

}  // namespace

ToleranceProfile parse_profile(std::string_view name) {
  if (name == "strict") return ToleranceProfile::Strict;
  if (name == "default") return ToleranceProfile::Default;
  if (name == "fast") return ToleranceProfile::Fast;
  throw ParameterError("unknown tolerance profile '" + std::string(name) + "' (strict|default|fast)");
}

std::string_view profile_name(ToleranceProfile p) {
  switch (p) {
    case ToleranceProfile::Strict: return "strict";
    case ToleranceProfile::Default: return "default";
    case ToleranceProfile::Fast: return "fast";
  }
  return "default";
}

Tolerances tolerances(ToleranceProfile p) {
  switch (p) {
    case ToleranceProfile::Strict:
      return {1e-12, 1e-13, 1e-10, 1e-11, 1e-8, 1e-9, 1e-13, 1e-11, 1e-13, 1e-13, 1u << 18};
    case ToleranceProfile::Fast:
      return {1e-10, 1e-10, 1e-6, 1e-7, 1e-5, 1e-6, 1e-11, 1e-9, 1e-9, 1e-9, 1u << 13};
    case ToleranceProfile::Default: break;
  }
  return {1e-11, 1e-12, 1e-8, 1e-9, 1e-6, 1e-8, 1e-12, 1e-10, 1e-12, 1e-12, 1u << 17};
}

Target Target::triple(double a, double b, double c) { return {ParamTriple::validate(a, b, c), std::nullopt}; }

Target Target::hilbert(double theta) { return {std::nullopt, validate_theta(theta)}; }

std::map<std::string, double> Target::describe() const {
  std::map<std::string, double> out;
  if (params) {
    out["a"] = params->a();
    out["b"] = params->b();
    out["c"] = params->c();
  }
  if (theta) out["theta"] = *theta;
  return out;
}

std::vector<ParamTriple> standard_corpus() {
  return {ParamTriple::validate(1, 1, 1), ParamTriple::validate(2, 1.5, 1), ParamTriple::validate(0.5, 1, 2),
          ParamTriple::validate(0.2, 0.3, 9)};
}

std::vector<double> standard_thetas() { return {1.0, 0.25, -0.7}; }

std::vector<ParamTriple> discrete_grid() {
  std::vector<ParamTriple> out;
  bool swap = false;
  for (double a : {0.1, 0.2, 0.5, 1.0, 1.5})
    for (double b : {0.3, 0.7})
      for (double d : {0.3, 1.1, 2.7, 5.3, 8.5}) {
        const double c = a + b + d;
        out.push_back(swap ? ParamTriple::validate(a, c, b) : ParamTriple::validate(a, b, c));
        swap = !swap;
      }
  return out;
}

Report cmd_spectrum(const Target& target, ToleranceProfile profile) {
  const Tolerances tol = tolerances(profile);
  Report r;
  r.command = "spectrum";
  r.params = target.describe();
  r.tolerance_profile = std::string(profile_name(profile));
  if (target.params) {
    const SpectralModel m = spectral_model(*target.params);
    r.add_result("regime", std::string(m.p.regime() == Regime::WithDiscrete ? "with-discrete" : "continuous-only"));
    r.add_result("mass_count", static_cast<double>(m.p.mass_count()));
    r.add_result("M", m.band_edge);
    r.add_result("norm", m.norm);
    std::vector<double> k, lambda_sq, beta, mass, vnorm;
    for (const MassPoint& mp : m.mass_points) {
      k.push_back(mp.k);
      lambda_sq.push_back(mp.lambda_sq);
      beta.push_back(mp.beta);
      mass.push_back(mp.mass);
      vnorm.push_back(mp.v_norm_sq);
    }
    r.add_result("k", k);
    r.add_result("lambda_sq", lambda_sq);
    r.add_result("beta", beta);
    r.add_result("mass", mass);
    r.add_result("v_norm_sq", vnorm);
    add_spectral_checks(r, m, tol);
  }
  if (target.theta) {
    const double theta = *target.theta;
    const HilbertSpectrum hs = hilbert_spectrum_report(theta);
    r.add_result("N", static_cast<double>(hs.N));
    std::vector<double> values, mult, masses;
    int total = 0;
    for (const auto& e : hs.eigen) {
      values.push_back(e.value);
      mult.push_back(e.multiplicity);
      total += e.multiplicity;
    }
    for (int k = 0; k <= hs.N; ++k) masses.push_back(hilbert_mass(theta, k));
    r.add_result("eigenvalues", values);
    r.add_result("multiplicities", mult);
    r.add_result("mass", masses);
    r.add_result("ac_band", std::vector<double>{hs.ac_lo, hs.ac_hi});
    r.checks.push_back(make_check("total multiplicity", total, hs.N + 1, 0.0, Provenance::ClosedForm));
    for (std::size_t k = 0; k < masses.size(); ++k)
      r.checks.push_back(make_upper_check("negated mass k=" + std::to_string(k), -masses[k], 0.0, Provenance::ClosedForm));
    if (theta > 0.0) {
      // H(θ) = B(θ,θ,1): the general closed forms must agree.
      const SpectralModel m = spectral_model(ParamTriple::validate(theta, theta, 1.0));
      r.checks.push_back(make_check("band edge M(theta,theta,1) = pi", m.band_edge, kPi, tol.closed_form * kPi,
                                    Provenance::ClosedForm));
      if (!m.mass_points.empty())
        r.checks.push_back(make_check("beta0(theta,theta,1) = pi/sin(pi theta)", m.mass_points.front().beta,
                                      hs.eigen.front().value, tol.closed_form * hs.eigen.front().value,
                                      Provenance::ClosedForm));
    }
  }
  return r;
}

ConvergeOutput cmd_converge(const Target& target, const std::vector<std::size_t>& sizes, std::size_t top,
                            ToleranceProfile profile) {
  if (sizes.empty()) throw ParameterError("converge: --sizes must not be empty");
  if (top == 0) throw ParameterError("converge: --top must be at least 1");
  for (std::size_t n : sizes)
    if (n < top) throw ParameterError("converge: every size must be at least --top");

  Report r;
  r.command = "converge";
  r.params = target.describe();
  r.params["top"] = static_cast<double>(top);
  r.tolerance_profile = std::string(profile_name(profile));

  std::vector<std::string> header = {"n"};
  for (std::size_t i = 1; i <= top; ++i) header.push_back("top" + std::to_string(i));
  header.push_back("bottom");
  header.push_back("gap");
  CsvTable table(header);

  double target_value = 0.0, lo_bound = 0.0, edge_margin = 0.0;
  double expect_above = 0.0, expect_below = 0.0;
  if (target.params) {
    target_value = operator_norm(*target.params);
  } else {
    const double theta = *target.theta;
    const HilbertSpectrum hs = hilbert_spectrum_report(theta);
    std::tie(lo_bound, target_value) = hilbert_form_bounds(theta);
    edge_margin = std::numeric_limits<double>::infinity();
    for (const auto& e : hs.eigen) {
      edge_margin = std::min(edge_margin, std::fabs(e.value) - kPi);
      if (e.value > kPi) expect_above += e.multiplicity;
      if (e.value < 0.0) expect_below += e.multiplicity;
    }
  }

  std::vector<double> tops, gaps, above, below;
  double decreases = 0.0;
  for (std::size_t n : sizes) {
    const DenseSymmetric m = target.params ? b_matrix(*target.params, n) : h_theta_matrix(*target.theta, n);
    const EigenResult e = dense_eigen(m, Selection::all());
    std::vector<double> row = {static_cast<double>(n)};
    for (std::size_t i = 0; i < top; ++i) row.push_back(e.values[e.values.size() - 1 - i]);
    const double t1 = e.values.back();
    row.push_back(e.values.front());
    row.push_back(target_value - t1);
    table.add_row(row);
    if (!tops.empty() && t1 < tops.back()) decreases += 1.0;
    tops.push_back(t1);
    gaps.push_back(target_value - t1);
    // Eigenvalues are resolved to an absolute 1e-12·‖M‖∞, so a truncation that has
    // converged to an isolated eigenvalue may sit that far above it.
    const double slack = EigenOptions{}.relative_tolerance * m.inf_norm();
    r.checks.push_back(make_upper_check("top eigenvalue <= " + format_double(target_value) + " n=" + std::to_string(n),
                                        t1, target_value + slack, Provenance::Truncation));
    if (target.theta) {
      const double count_above = static_cast<double>(std::count_if(
          e.values.begin(), e.values.end(), [](double v) { return v > kPi + 0.01; }));
      const double count_below = static_cast<double>(std::count_if(
          e.values.begin(), e.values.end(), [](double v) { return v < -0.01; }));
      above.push_back(count_above);
      below.push_back(count_below);
      // Eigenvalues at the band edge cannot be separated from the band by truncation.
      if (edge_margin > 0.05) {
        r.checks.push_back(make_check("eigenvalues above pi n=" + std::to_string(n), count_above, expect_above, 0.0,
                                      Provenance::Truncation));
        r.checks.push_back(make_check("eigenvalues below 0 n=" + std::to_string(n), count_below, expect_below, 0.0,
                                      Provenance::Truncation));
      }
    }
  }
  r.checks.push_back(make_check("top eigenvalue nondecreasing in n", decreases, 0.0, 0.0, Provenance::Truncation));
  std::vector<double> ns(sizes.begin(), sizes.end());
  r.add_result("sizes", ns);
  r.add_result("top", tops);
  r.add_result("gap", gaps);
  r.add_result("target", target_value);
  r.add_result("final_gap", gaps.back());
  if (gaps.back() != 0.0) r.add_result("gap_ratio_first_last", gaps.front() / gaps.back());
  if (target.theta) {
    r.add_result("count_above_pi", above);
    r.add_result("count_below_zero", below);
    r.add_result("lower_bound", lo_bound);
  }
  return {std::move(r), std::move(table)};
}

std::vector<std::string> validate_check_names() {
  std::vector<std::string> out;
  for (const NamedSuite& s : kSuites) out.emplace_back(s.name);
  return out;
}

Report cmd_validate(const ValidateOptions& options, ToleranceProfile profile) {
  for (const std::string& name : options.checks) {
    const bool known = std::any_of(std::begin(kSuites), std::end(kSuites),
                                   [&](const NamedSuite& s) { return s.name == name; });
    if (!known) throw ParameterError("unknown check '" + name + "'");
  }
  if (options.trials == 0) throw ParameterError("validate: --trials must be positive");
  if (options.trace_terms == 0) throw ParameterError("validate: --J must be positive");

  Context ctx;
  ctx.tol = tolerances(profile);
  ctx.opts = options;
  if (options.target) {
    ctx.explicit_target = true;
    if (options.target->params) ctx.corpus.push_back(*options.target->params);
    if (options.target->theta) ctx.thetas.push_back(*options.target->theta);
  } else {
    ctx.corpus = standard_corpus();
    ctx.thetas = standard_thetas();
  }

  std::vector<const NamedSuite*> selected;
  for (const NamedSuite& s : kSuites)
    if (options.checks.empty() || std::find(options.checks.begin(), options.checks.end(), s.name) != options.checks.end())
      selected.push_back(&s);

  std::vector<SuiteOutput> outputs;
  if (options.concurrent) {
    std::vector<std::future<SuiteOutput>> futures;
    for (const NamedSuite* s : selected) futures.push_back(std::async(std::launch::async, s->run, std::cref(ctx)));
    for (auto& f : futures) outputs.push_back(f.get());
  } else {
    for (const NamedSuite* s : selected) outputs.push_back(s->run(ctx));
  }

  Report r;
  r.command = "validate";
  if (options.target) r.params = options.target->describe();
  r.params["J"] = static_cast<double>(options.trace_terms);
  r.params["trials"] = static_cast<double>(options.trials);
  r.seed = options.seed;
  r.tolerance_profile = std::string(profile_name(profile));
  for (SuiteOutput& o : outputs) {
    for (Check& c : o.checks) r.checks.push_back(std::move(c));
    for (auto& res : o.results) r.results.push_back(std::move(res));
  }
  std::string names;
  for (const NamedSuite* s : selected) names += (names.empty() ? "" : ",") + std::string(s->name);
  r.add_result("suites", names);
  return r;
}

MatrixKind parse_matrix_kind(std::string_view name) {
  if (name == "B") return MatrixKind::B;
  if (name == "T") return MatrixKind::T;
  if (name == "H") return MatrixKind::H;
  if (name == "A") return MatrixKind::A;
  if (name == "Z") return MatrixKind::Z;
  throw ParameterError("unknown matrix '" + std::string(name) + "' (B|T|H|A|Z)");
}

EntriesOutput cmd_entries(MatrixKind kind, const std::optional<Target>& target, std::size_t n) {
  if (n == 0) throw ParameterError("entries: --n must be positive");
  Report r;
  r.command = "entries";
  if (target) r.params = target->describe();
  r.params["n"] = static_cast<double>(n);
  CsvTable table({"row", "col", "value"});

  if (kind == MatrixKind::T) {
    if (!target || !target->params) throw ParameterError("entries: matrix T needs --a --b --c");
    const SymTridiagonal t = t_matrix(*target->params, n, false);
    r.add_result("matrix", std::string("T"));
    r.add_result("diag", t.diag);
    r.add_result("offdiag", t.offdiag);
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) table.add_row({double(j), double(j - 1), t.offdiag[j - 1]});
      table.add_row({double(j), double(j), t.diag[j]});
      if (j + 1 < n) table.add_row({double(j), double(j + 1), t.offdiag[j]});
    }
    return {std::move(r), std::move(table)};
  }

  DenseSymmetric m;
  switch (kind) {
    case MatrixKind::B:
      if (!target || !target->params) throw ParameterError("entries: matrix B needs --a --b --c");
      m = b_matrix(*target->params, n);
      break;
    case MatrixKind::H:
      if (!target || !target->theta) throw ParameterError("entries: matrix H needs --theta");
      m = h_theta_matrix(*target->theta, n);
      break;
    case MatrixKind::A: m = bergman_matrix(n); break;
    case MatrixKind::Z: m = bergman_defect_matrix(n); break;
    case MatrixKind::T: break;
  }
  static constexpr const char* kNames[] = {"B", "T", "H", "A", "Z"};
  r.add_result("matrix", std::string(kNames[static_cast<int>(kind)]));
  r.add_result("entries", std::vector<double>(m.data().begin(), m.data().end()));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) table.add_row({double(j), double(k), m(j, k)});
  return {std::move(r), std::move(table)};
}

}  // namespace hankel
