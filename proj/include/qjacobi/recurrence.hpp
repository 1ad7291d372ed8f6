#pragma once

#include <cmath>
#include <string>

#include "qjacobi/error.hpp"
#include "qjacobi/params.hpp"

namespace qjacobi {

/// Guard applied to every denominator factor of the recurrence and to n + alpha + beta.
inline constexpr double kDenominatorTol = 1e-9;

namespace detail {

inline void require_nondegenerate(double value, const char* what, int n) {
  if (!(std::abs(value) > kDenominatorTol)) {
    throw error(errc::degenerate_parameters,
                std::string(what) + " vanishes at n=" + std::to_string(n));
  }
}

}  // namespace detail

/// c_n P_n = (x - d_n) P_{n-1} - e_n P_{n-2}
struct RecurrenceCoeffs {
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
};

inline RecurrenceCoeffs recurrence_coeffs(int n, const ParamPair& p) {
  if (n < 2) throw error(errc::invalid_parameter, "recurrence defined for n >= 2");
  const double a = p.alpha;
  const double b = p.beta;
  const double s = 2.0 * n + a + b;
  detail::require_nondegenerate(s - 2.0, "2n+alpha+beta-2", n);
  detail::require_nondegenerate(s - 1.0, "2n+alpha+beta-1", n);
  detail::require_nondegenerate(s, "2n+alpha+beta", n);
  detail::require_nondegenerate(n + a + b, "n+alpha+beta", n);

  RecurrenceCoeffs r;
  r.c = 2.0 * n * (n + a + b) / ((s - 1.0) * s);
  r.d = (b * b - a * a) / ((s - 2.0) * s);
  r.e = 2.0 * (n + a - 1.0) * (n + b - 1.0) / ((s - 2.0) * (s - 1.0));
  return r;
}

}  // namespace qjacobi
