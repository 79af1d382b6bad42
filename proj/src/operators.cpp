#include "hankel/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hankel/errors.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

namespace {

using specfun::log_gamma;

std::vector<double> log_weights(const ParamTriple& p, std::size_t n) {
  std::vector<double> lw(n);
  for (std::size_t j = 0; j < n; ++j) lw[j] = log_weight(p, j);
  return lw;
}

std::vector<double> log_symbols(const ParamTriple& p, std::size_t count) {
  std::vector<double> lh(count);
  for (std::size_t z = 0; z < count; ++z) lh[z] = log_hankel_symbol(p, static_cast<double>(z));
  return lh;
}

void track(Residual& r, double residual, double scale) {
  r.max_abs = std::max(r.max_abs, std::fabs(residual));
  r.scale = std::max(r.scale, scale);
}

}  // namespace

ParamTriple::ParamTriple(double a, double b, double c) : a_(a), b_(b), c_(c) {
  const double lo = std::min(b, c);
  const double hi = std::max(b, c);
  if (a + lo < hi) {
    regime_ = Regime::WithDiscrete;
    mass_count_ = static_cast<int>(std::ceil((hi - a - lo) / 2.0));
  } else {
    regime_ = Regime::ContinuousOnly;
    mass_count_ = 0;
  }
}

ParamTriple ParamTriple::validate(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw ParameterError("parameters must be finite");
  if (a <= 0.0 || b <= 0.0 || c <= 0.0) {
    std::ostringstream os;
    os << "parameters must be positive (a=" << a << ", b=" << b << ", c=" << c << ")";
    throw ParameterError(os.str());
  }
  if (!(a < b + c)) {
    std::ostringstream os;
    os << "a < b+c violated (a=" << a << ", b+c=" << b + c << ")";
    throw ParameterError(os.str());
  }
  if (!(a + std::max(b, c) - std::min(b, c) > 0.0)) throw ParameterError("a + |b-c| > 0 violated");
  return ParamTriple(a, b, c);
}

CanonicalTriple ParamTriple::canonical() const { return {a_, std::min(b_, c_), std::max(b_, c_)}; }

double log_weight(const ParamTriple& p, std::size_t j) {
  const double x = static_cast<double>(j);
  return 0.5 * ((log_gamma(x + p.b()) + log_gamma(x + p.c())) - (log_gamma(x + p.a()) + log_gamma(x + 1.0)));
}

double log_hankel_symbol(const ParamTriple& p, double z) {
  return log_gamma(z + p.a()) - log_gamma(z + (p.b() + p.c()));
}

double b_entry(const ParamTriple& p, std::size_t j, std::size_t k) {
  return std::exp(log_hankel_symbol(p, static_cast<double>(j + k)) + (log_weight(p, j) + log_weight(p, k)));
}

DenseSymmetric b_matrix(const ParamTriple& p, std::size_t n) {
  const std::vector<double> lw = log_weights(p, n);
  const std::vector<double> lh = log_symbols(p, n == 0 ? 0 : 2 * n - 1);
  return DenseSymmetric::from_upper(n, [&](std::size_t j, std::size_t k) {
    return std::exp(lh[j + k] + (lw[j] + lw[k]));
  });
}

SymTridiagonal t_matrix(const ParamTriple& p, std::size_t n, bool shifted) {
  const double a = p.a(), b = p.b(), c = p.c();
  const double shift = shifted ? 0.25 * (a + b - c) * (a + b - c) : 0.0;
  SymTridiagonal t;
  t.diag.resize(n);
  t.offdiag.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    const double j = static_cast<double>(i);
    t.diag[i] = j * (j + c - 1.0) + (j + a) * (j + b) - shift;
    if (i + 1 < n) t.offdiag[i] = -std::sqrt((j + 1.0) * (j + a) * (j + b) * (j + c));
  }
  return t;
}

DilatationData d_and_c(const ParamTriple& p, std::size_t n) {
  DilatationData out;
  out.d.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double j = static_cast<double>(i);
    out.d[2 * i] = std::sqrt((j + p.a()) * (j + p.b()));
    out.d[2 * i + 1] = std::sqrt((j + 1.0) * (j + p.c()));
  }
  out.c.main.resize(n);
  out.c.sub.resize(n > 0 ? n - 1 : 0);
  for (std::size_t j = 0; j < n; ++j) {
    out.c.main[j] = out.d[2 * j];
    if (j + 1 < n) out.c.sub[j] = -out.d[2 * j + 1];
  }
  return out;
}

Residual commutator_residual(const DenseSymmetric& b, const SymTridiagonal& t) {
  const std::size_t n = b.size();
  if (t.size() != n) throw DomainError("commutator_residual: size mismatch");
  const auto& d = t.diag;
  const auto& e = t.offdiag;
  Residual r;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      double bt = b(j, k) * d[k] + b(j, k + 1) * e[k];
      if (k > 0) bt += b(j, k - 1) * e[k - 1];
      double tb = d[j] * b(j, k) + e[j] * b(j + 1, k);
      if (j > 0) tb += e[j - 1] * b(j - 1, k);
      r.max_abs = std::max(r.max_abs, std::fabs(bt - tb));
    }
  }
  r.scale = b.inf_norm() * t.inf_norm();
  return r;
}

Residual commutator_residual(const ParamTriple& p, std::size_t n) {
  return commutator_residual(b_matrix(p, n), t_matrix(p, n, false));
}

Residual intertwining_residual(const ParamTriple& p, std::size_t n) {
  const ParamTriple shifted = ParamTriple::validate(p.a() + 1.0, p.b() + 1.0, p.c());
  const DenseSymmetric b = b_matrix(p, n);
  const DenseSymmetric bs = b_matrix(shifted, n);
  const std::vector<double> d = d_and_c(p, n).d;
  Residual r;
  r.scale = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double bc1 = b(j, k) * d[2 * k];
      const double bc2 = -b(j, k + 1) * d[2 * k + 1];
      const double cb1 = d[2 * j] * bs(j, k);
      const double cb2 = j > 0 ? -d[2 * j - 1] * bs(j - 1, k) : 0.0;
      const double scale = std::max({std::fabs(bc1), std::fabs(bc2), std::fabs(cb1), std::fabs(cb2)});
      track(r, (bc1 + bc2) - (cb1 + cb2), scale);
    }
  }
  return r;
}

Residual whw_factorization_residual(const ParamTriple& p, std::size_t n) {
  const std::vector<double> lw = log_weights(p, n);
  const std::vector<double> lh = log_symbols(p, 2 * n);
  std::vector<double> w(n), h(2 * n);
  std::transform(lw.begin(), lw.end(), w.begin(), [](double v) { return std::exp(v); });
  std::transform(lh.begin(), lh.end(), h.begin(), [](double v) { return std::exp(v); });
  const DenseSymmetric b = b_matrix(p, n);
  const double a = p.a(), bb = p.b(), c = p.c();

  double worst = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double whw = w[j] * h[j + k] * w[k];
      worst = std::max(worst, std::fabs(b(j, k) - whw) / std::fabs(b(j, k)));

      const double jj = static_cast<double>(j), kk = static_cast<double>(k);
      // (H V)_{jk} with V_{k,k} = k+a, V_{k+1,k} = -(k+c)
      const double hv1 = h[j + k] * (kk + a);
      const double hv2 = -h[j + k + 1] * (kk + c);
      // (Ṽ H̃)_{jk} with Ṽ_{j,j} = j+b, Ṽ_{j,j-1} = -j, H̃_{j,k} = h(j+k+1)
      const double vh1 = (jj + bb) * h[j + k + 1];
      const double vh2 = -jj * h[j + k];
      const double scale = std::max({std::fabs(hv1), std::fabs(hv2), std::fabs(vh1), std::fabs(vh2)});
      worst = std::max(worst, std::fabs((hv1 + hv2) - (vh1 + vh2)) / scale);
    }
  }
  Residual r;
  r.max_abs = worst;
  r.scale = 1.0;
  return r;
}

Residual dilatation_residual(const ParamTriple& p, std::size_t n) {
  const ParamTriple shifted = ParamTriple::validate(p.a() + 1.0, p.b() + 1.0, p.c());
  const DenseSymmetric b = b_matrix(p, n);
  const DenseSymmetric bs = b_matrix(shifted, n);
  const std::vector<double> d = d_and_c(p, n).d;
  const std::size_t m = 2 * n;
  auto entry = [&](std::size_t j, std::size_t k) {
    if ((j % 2) != (k % 2)) return 0.0;
    return (j % 2 == 0) ? b(j / 2, k / 2) : bs(j / 2, k / 2);
  };
  auto dd = [&](std::size_t i) { return d[i]; };
  Residual r;
  r.scale = 0.0;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    for (std::size_t k = 0; k + 1 < m; ++k) {
      const double t1 = k > 0 ? dd(k - 1) * entry(j, k - 1) : 0.0;
      const double t2 = -dd(k) * entry(j, k + 1);
      const double t3 = j > 0 ? dd(j - 1) * entry(j - 1, k) : 0.0;
      const double t4 = -dd(j) * entry(j + 1, k);
      const double scale = std::max({std::fabs(t1), std::fabs(t2), std::fabs(t3), std::fabs(t4)});
      track(r, (t1 + t2) + (t3 + t4), scale);
    }
  }
  return r;
}

}  // namespace hankel
