#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qjacobi/error.hpp"
#include "qjacobi/evaluate.hpp"
#include "qjacobi/params.hpp"
#include "qjacobi/recurrence.hpp"
#include "qjacobi/relations.hpp"

namespace qjacobi {

inline constexpr double kRootTol = 1e-12;        // |P/P'| relative to max(1,|z|)
inline constexpr double kSeparationTol = 1e-10;  // minimum gap between zeros
inline constexpr double kBoundaryTol = 1e-10;    // delta vs. x_{2,n} tie band
inline constexpr int kRefineMaxIter = 200;
inline constexpr int kOracleMaxDegree = 12;
inline constexpr double kRoundingFactor = 64.0;  // eps multiples allowed in the evaluation

enum class ZeroMethod { GolubWelsch, BracketedHybrid, Oracle };

constexpr std::string_view to_string(ZeroMethod m) {
  switch (m) {
    case ZeroMethod::GolubWelsch: return "GolubWelsch";
    case ZeroMethod::BracketedHybrid: return "BracketedHybrid";
    case ZeroMethod::Oracle: return "Oracle";
  }
  return "?";
}

/// Sorted real zeros of one polynomial, each certified by its Newton step size.
struct ZeroSet {
  int n = 0;
  ParamPair params;
  std::vector<double> zeros;
  ZeroMethod method = ZeroMethod::GolubWelsch;
  std::vector<double> residuals;

  std::size_t size() const { return zeros.size(); }
  double operator[](std::size_t i) const { return zeros[i]; }
};

/// |P_n(z)/P_n'(z)|, the length of the Newton step at z, with P_n from the
/// compensated explicit sum.
inline double scaled_residual(int n, const ParamPair& p, double z) {
  const double f = eval_sum(n, p, z, SumMode::compensated);
  if (f == 0.0) return 0.0;
  const double df = eval_derivative(n, p, z);
  if (df == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(f / df);
}

/// Safeguarded Newton iteration inside a sign-change bracket.
///
/// Newton steps are accepted only when they land strictly inside the current
/// bracket and shrink it fast enough; otherwise the bracket is bisected. The
/// returned point always lies in [lo, hi].
template <class F, class DF>
double refine_zero(F&& f, DF&& df, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(std::signbit(flo) != std::signbit(fhi))) {
    throw error(errc::bracket_failure, "no sign change on [" + std::to_string(lo) + ", " +
                                           std::to_string(hi) + "]");
  }

  double x = 0.5 * (lo + hi);
  double step_before_last = hi - lo;
  double last_step = step_before_last;
  for (int iter = 0; iter < kRefineMaxIter; ++iter) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double width_tol = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
    if (hi - lo <= width_tol) return x;

    const double dfx = df(x);
    double next = (dfx != 0.0) ? x - fx / dfx : std::numeric_limits<double>::quiet_NaN();
    const bool inside = std::isfinite(next) && next > lo && next < hi;
    if (inside && std::abs(next - x) < 0.5 * std::abs(step_before_last)) {
      step_before_last = last_step;
      last_step = next - x;
      if (std::abs(last_step) <= width_tol) return next;
      x = next;
    } else {
      step_before_last = last_step;
      next = 0.5 * (lo + hi);
      last_step = next - x;
      x = next;
    }
  }
  throw error(errc::convergence_failure,
              "refine_zero did not converge in " + std::to_string(kRefineMaxIter) + " iterations");
}

namespace detail {

/// Newton step length that rounding alone can produce at z: a multiple of
/// eps times the sum of absolute terms of the explicit sum, over |P_n'(z)|.
inline double rounding_floor(int n, const ParamPair& p, double z) {
  const double df = std::abs(eval_derivative(n, p, z));
  if (df == 0.0) return std::numeric_limits<double>::infinity();
  return kRoundingFactor * std::numeric_limits<double>::epsilon() *
         eval_sum(n, p, z, SumMode::absolute) / df;
}

/// A zero passes when its Newton step is below kRootTol (relative to
/// max(1,|z|)) or below the rounding floor of the evaluation.
inline void certify(ZeroSet& zs) {
  zs.residuals.clear();
  for (std::size_t i = 0; i < zs.zeros.size(); ++i) {
    const double z = zs.zeros[i];
    const double r = scaled_residual(zs.n, zs.params, z);
    zs.residuals.push_back(r);
    const double tol = std::max(kRootTol * std::max(1.0, std::abs(z)),
                                rounding_floor(zs.n, zs.params, z));
    if (!(r <= tol)) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "zero %zu at %.17g has scaled residual %.3g > %.3g", i, z, r,
                    tol);
      throw error(errc::convergence_failure, buf);
    }
    if (i > 0 && !(z - zs.zeros[i - 1] > kSeparationTol)) {
      throw error(errc::convergence_failure, "zeros " + std::to_string(i - 1) + " and " +
                                                 std::to_string(i) + " are not separated");
    }
  }
}

inline double newton_polish(int n, const ParamPair& p, double z) {
  const double df = eval_derivative(n, p, z);
  if (df == 0.0) return z;
  return z - eval_sum(n, p, z, SumMode::compensated) / df;
}

inline double refine_polynomial_zero(int n, const ParamPair& p, double lo, double hi) {
  const double z = refine_zero([&](double x) { return eval_recurrence(n, p, x); },
                               [&](double x) { return eval_derivative(n, p, x); }, lo, hi);
  const double polished = newton_polish(n, p, z);
  return polished > lo && polished < hi ? polished : z;
}

}  // namespace detail

/// Zeros of an orthogonal Jacobi polynomial as eigenvalues of the symmetrized
/// Jacobi matrix, each polished by one Newton step.
inline ZeroSet zeros_orthogonal(int n, const ParamPair& p) {
  if (p.regime != Regime::Orthogonal) {
    throw error(errc::invalid_parameter, "zeros_orthogonal requires the orthogonal regime");
  }
  if (n < 1) throw error(errc::invalid_parameter, "degree must be >= 1");

  // x P_m = c_{m+1} P_{m+1} + d_{m+1} P_m + e_{m+1} P_{m-1}
  const double a = p.alpha;
  const double b = p.beta;
  detail::require_nondegenerate(a + b + 2.0, "alpha+beta+2", 1);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 1));
  std::vector<double> upper(n), lower(n + 1);
  diag[0] = (b - a) / (a + b + 2.0);
  upper[0] = 2.0 / (a + b + 2.0);
  for (int m = 1; m < n; ++m) {
    const auto rc = recurrence_coeffs(m + 1, p);
    diag[m] = rc.d;
    upper[m] = rc.c;
    lower[m] = rc.e;
  }
  for (int m = 0; m + 1 < n; ++m) {
    const double prod = upper[m] * lower[m + 1];
    if (!(prod > 0.0)) {
      throw error(errc::degenerate_parameters, "non-positive off-diagonal product in Jacobi matrix");
    }
    off[m] = std::sqrt(prod);
  }

  ZeroSet zs;
  zs.n = n;
  zs.params = p;
  zs.method = ZeroMethod::GolubWelsch;
  if (n == 1) {
    zs.zeros = {diag[0]};
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off.head(n - 1), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw error(errc::convergence_failure, "tridiagonal eigensolver failed");
    }
    const auto& ev = solver.eigenvalues();
    zs.zeros.assign(ev.data(), ev.data() + n);
  }
  for (double& z : zs.zeros) z = detail::newton_polish(n, p, z);
  std::sort(zs.zeros.begin(), zs.zeros.end());
  detail::certify(zs);
  return zs;
}

/// Bounds on the zero below -1: loose_lower < tight_lower < x_{1,n} < upper < -1.
struct BoundChain {
  double loose_lower = 0.0;  ///< -1 + A_n
  double tight_lower = 0.0;  ///< -1 + D_n / C_n
  double upper = 0.0;        ///< -B_n
};

inline BoundChain bound_chain(int n, const ParamPair& p) {
  if (n < 3) throw error(errc::invalid_parameter, "bound chain requires n >= 3");
  if (p.regime != Regime::QuasiOrder1) {
    throw error(errc::invalid_parameter, "bound chain requires the quasi-orthogonal regime");
  }
  const auto m = mixed_relation_coeffs(RelationId::Rn2b4, n, p);
  detail::require_nondegenerate(m.C_n, "C_n", n);
  return {-1.0 + m.A_n, -1.0 + m.D_n / m.C_n, -m.B_n};
}

/// delta = -1 - 2(beta+1)/(alpha+beta+2n+2), the only possible common zero of
/// P_n^(a,b) and P_n^(a,b+2).
inline double askey_delta(int n, const ParamPair& p) {
  const double den = p.alpha + p.beta + 2.0 * n + 2.0;
  detail::require_nondegenerate(den, "alpha+beta+2n+2", n);
  return -1.0 - 2.0 * (p.beta + 1.0) / den;
}

namespace detail {

/// Quasi-orthogonal zeros in the canonical orientation (the outer zero below -1).
/// Interior zeros are bracketed by consecutive zeros of P_n^(a,b+1).
inline std::vector<double> quasi_zeros_canonical(int n, const ParamPair& p) {
  std::vector<double> out;
  out.reserve(n);

  double lo = 0.0, hi = -1.0;
  if (n >= 3) {
    const auto bc = bound_chain(n, p);
    lo = bc.tight_lower;
    hi = bc.upper;
  } else {
    const auto f = [&](double x) { return eval_recurrence(n, p, x); };
    const double fm1 = f(-1.0);
    bool found = false;
    for (int k = 0; k <= 12; ++k) {
      lo = -1.0 - std::ldexp(1.0, k);
      if (std::signbit(f(lo)) != std::signbit(fm1)) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw error(errc::bracket_failure,
                  "no zero below -1 in [-1-2^12, -1] for n=" + std::to_string(n));
    }
  }
  out.push_back(refine_polynomial_zero(n, p, lo, hi));

  if (n >= 2) {
    const auto y = zeros_orthogonal(n, p.shifted_beta(1.0));
    for (int i = 0; i + 1 < n; ++i) {
      out.push_back(refine_polynomial_zero(n, p, y.zeros[i], y.zeros[i + 1]));
    }
  }
  return out;
}

}  // namespace detail

/// All n real zeros of a quasi-orthogonal (order 1) Jacobi polynomial.
///
/// In the mirrored regime the zeros are bracketed directly in the mirrored
/// orientation: interior brackets from P_n^(a+1,b) and the outer zero above 1
/// between the reflected bounds.
inline ZeroSet zeros_quasi(int n, const ParamPair& p) {
  if (n < 1) throw error(errc::invalid_parameter, "degree must be >= 1");
  if (p.regime != Regime::QuasiOrder1 && p.regime != Regime::QuasiOrder1Mirrored) {
    throw error(errc::invalid_parameter, "zeros_quasi requires a quasi-orthogonal regime");
  }
  ZeroSet zs;
  zs.n = n;
  zs.params = p;
  zs.method = ZeroMethod::BracketedHybrid;

  if (n == 1) {
    // Linear; when alpha+beta+2 < 0 the root lies on the far side of [-1,1].
    const double slope = p.alpha + p.beta + 2.0;
    detail::require_nondegenerate(slope, "alpha+beta+2", 1);
    zs.zeros = {(p.beta - p.alpha) / slope};
  } else if (p.regime == Regime::QuasiOrder1) {
    zs.zeros = detail::quasi_zeros_canonical(n, p);
  } else {
    double lo = 1.0, hi = 0.0;
    if (n >= 3) {
      const auto bc = bound_chain(n, reflect(p));
      lo = -bc.upper;
      hi = -bc.tight_lower;
    } else {
      const auto f = [&](double x) { return eval_recurrence(n, p, x); };
      const double f1 = f(1.0);
      bool found = false;
      for (int k = 0; k <= 12; ++k) {
        hi = 1.0 + std::ldexp(1.0, k);
        if (std::signbit(f(hi)) != std::signbit(f1)) {
          found = true;
          break;
        }
      }
      if (!found) {
        throw error(errc::bracket_failure,
                    "no zero above 1 in [1, 1+2^12] for n=" + std::to_string(n));
      }
    }
    if (n >= 2) {
      const auto y = zeros_orthogonal(n, p.shifted(1.0, 0.0));
      for (int i = 0; i + 1 < n; ++i) {
        zs.zeros.push_back(detail::refine_polynomial_zero(n, p, y.zeros[i], y.zeros[i + 1]));
      }
    }
    zs.zeros.push_back(detail::refine_polynomial_zero(n, p, lo, hi));
  }
  std::sort(zs.zeros.begin(), zs.zeros.end());
  detail::certify(zs);
  return zs;
}

/// Dispatch on regime.
inline ZeroSet zeros(int n, const ParamPair& p) {
  switch (p.regime) {
    case Regime::Orthogonal: return zeros_orthogonal(n, p);
    case Regime::QuasiOrder1:
    case Regime::QuasiOrder1Mirrored: return zeros_quasi(n, p);
    case Regime::Unsupported: break;
  }
  throw error(errc::invalid_parameter, "no zero solver for the unsupported regime");
}

/// Brute-force reference: sign scan of the explicit sum over [-5, 5] with step
/// 1e-4, then bisection to 1e-12. Test use only.
inline ZeroSet oracle_zeros(int n, const ParamPair& p) {
  if (n < 1 || n > kOracleMaxDegree) {
    throw error(errc::invalid_parameter,
                "oracle supports 1 <= n <= " + std::to_string(kOracleMaxDegree));
  }
  const auto f = [&](double x) { return eval_sum(n, p, x, SumMode::compensated); };
  constexpr double kLo = -5.0;
  constexpr int kSteps = 100000;
  constexpr double kStep = 1e-4;

  ZeroSet zs;
  zs.n = n;
  zs.params = p;
  zs.method = ZeroMethod::Oracle;

  double x0 = kLo;
  double f0 = f(x0);
  if (f0 == 0.0) zs.zeros.push_back(x0);
  for (int i = 1; i <= kSteps; ++i) {
    const double x1 = kLo + i * kStep;
    const double f1 = f(x1);
    if (f1 == 0.0) {
      zs.zeros.push_back(x1);
    } else if (f0 != 0.0 && std::signbit(f0) != std::signbit(f1)) {
      double a = x0, b = x1, fa = f0;
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      zs.zeros.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  if (static_cast<int>(zs.zeros.size()) != n) {
    throw error(errc::oracle_failure, "found " + std::to_string(zs.zeros.size()) +
                                          " sign changes, expected " + std::to_string(n));
  }
  // Residuals from a centered difference so the oracle never touches the recurrence.
  for (double z : zs.zeros) {
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    const double df = (f(z + h) - f(z - h)) / (2.0 * h);
    zs.residuals.push_back(df == 0.0 ? 0.0 : std::abs(f(z) / df));
  }
  return zs;
}

}  // namespace qjacobi
