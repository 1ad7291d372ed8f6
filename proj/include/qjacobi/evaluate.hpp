#pragma once

#include <cmath>
#include <vector>

#include "qjacobi/error.hpp"
#include "qjacobi/params.hpp"
#include "qjacobi/recurrence.hpp"

namespace qjacobi {

inline constexpr double kEvalTol = 1e-9;   // relative, recurrence vs. explicit sum
inline constexpr double kFiniteDiffTol = 1e-5;

/// P_n^(alpha,beta)(x) by forward three-term recurrence from P_0 = 1 and
/// P_1 = (alpha+beta+2)x/2 + (alpha-beta)/2.
inline double eval_recurrence(int n, const ParamPair& p, double x) {
  if (n < 0) throw error(errc::invalid_parameter, "degree must be non-negative");
  if (!std::isfinite(x)) throw error(errc::invalid_parameter, "x must be finite");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 0.5 * (p.alpha + p.beta + 2.0) * x + 0.5 * (p.alpha - p.beta);
  for (int k = 2; k <= n; ++k) {
    const auto rc = recurrence_coeffs(k, p);
    const double next = ((x - rc.d) * cur - rc.e * prev) / rc.c;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// `absolute` sums |term|, the scale of the rounding error in the other modes.
enum class SumMode { plain, compensated, absolute };

namespace detail {

/// Generalized binomial coefficient C(top, m) for real `top`.
inline double binomial(double top, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= (top - i) / (i + 1);
  return r;
}

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

/// Explicit finite sum
///   P_n(x) = sum_k C(n+alpha, n-k) C(n+beta, k) ((x-1)/2)^k ((x+1)/2)^(n-k),
/// valid for all real alpha, beta. Shares no code with the recurrence path.
inline double eval_sum(int n, const ParamPair& p, double x, SumMode mode = SumMode::plain) {
  if (n < 0) throw error(errc::invalid_parameter, "degree must be non-negative");
  if (!std::isfinite(x) || !std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
    throw error(errc::invalid_parameter, "non-finite input");
  }
  const double u = 0.5 * (x - 1.0);
  const double v = 0.5 * (x + 1.0);
  std::vector<double> upow(n + 1, 1.0), vpow(n + 1, 1.0);
  for (int k = 1; k <= n; ++k) {
    upow[k] = upow[k - 1] * u;
    vpow[k] = vpow[k - 1] * v;
  }
  detail::CompensatedSum acc;
  double plain = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double term = detail::binomial(n + p.alpha, n - k) * detail::binomial(n + p.beta, k) *
                        upow[k] * vpow[n - k];
    if (mode == SumMode::compensated) {
      acc.add(term);
    } else if (mode == SumMode::absolute) {
      plain += std::abs(term);
    } else {
      plain += term;
    }
  }
  return mode == SumMode::compensated ? acc.value() : plain;
}

/// d/dx P_n^(a,b) = (n+a+b+1)/2 * P_{n-1}^(a+1,b+1)
inline double eval_derivative(int n, const ParamPair& p, double x) {
  if (n < 1) throw error(errc::invalid_parameter, "derivative defined for n >= 1");
  const ParamPair raised{p.alpha + 1.0, p.beta + 1.0, regime_of(p.alpha + 1.0, p.beta + 1.0)};
  return 0.5 * (n + p.alpha + p.beta + 1.0) * eval_recurrence(n - 1, raised, x);
}

}  // namespace qjacobi
