#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>

#include "qjacobi/error.hpp"
#include "qjacobi/evaluate.hpp"
#include "qjacobi/params.hpp"
#include "qjacobi/recurrence.hpp"

namespace qjacobi {

inline constexpr double kRelationTol = 1e-8;

/// Mixed recurrences between Jacobi polynomials with shifted beta.
///
/// Each relation is stored as LHS = RHS and evaluated term by term; the
/// residual is (LHS - RHS) divided by the largest individual term magnitude.
enum class RelationId {
  R217,   ///< 2n(a+b+n)P_n = -(1+x)(a+n-1)(a+b+2n)P_{n-2}^(a,b+1) - [2(b+n)(a+b+n) - (x+1)(a+b+2n-1)(a+b+2n)]P_{n-1}
  R218,   ///< the same identity in the form (k1 - (x+1)k2)P_{n-1} = -(1+x)k3 P_{n-2}^(a,b+1) - k4 P_n
  Rfo,    ///< (x+1)(a+b+n+1)P_{n-1}^(a,b+2) = 2n P_n + 2(b+1)P_{n-1}^(a,b+1)
  Rn2b2,  ///< (b+n)/(2n)(x+1-A_n)P_{n-1} = (x+1)^2(a+n-1)/(4n) P_{n-2}^(a,b+2) + (b+1)/(a+b+2n) P_n
  Rn2b3,  ///< (x+B_n)P_{n-1} - A(x)P_n = (x+1)^3(a+n-1)(a+b+2n)/(4(b+n)(b+n+1)) P_{n-2}^(a,b+3)
  Rn2b4,  ///< (C_n(x+1)-D_n)P_{n-1} = (x+1)^4 E_n/(8(n+b)(b+2)) P_{n-2}^(a,b+4) + n B(x)/(2(n+b)(b+2)) P_n
  R51,    ///< (2(b+1) + (x+1)(a+b+2n+2))P_n^(a,b+1) = (x+1)(a+b+n+2)P_n^(a,b+2) + 2(b+n+1)P_n
  Rain,   ///< (2+a+b+2n)(x+1)/2 P_n^(a,b+1) = (n+1)P_{n+1} + (1+b+n)P_n
};

inline constexpr std::array<RelationId, 8> kAllRelations = {
    RelationId::R217, RelationId::R218, RelationId::Rfo, RelationId::Rn2b2,
    RelationId::Rn2b3, RelationId::Rn2b4, RelationId::R51, RelationId::Rain};

constexpr std::string_view to_string(RelationId id) {
  switch (id) {
    case RelationId::R217: return "R217";
    case RelationId::R218: return "R218";
    case RelationId::Rfo: return "Rfo";
    case RelationId::Rn2b2: return "Rn2b2";
    case RelationId::Rn2b3: return "Rn2b3";
    case RelationId::Rn2b4: return "Rn2b4";
    case RelationId::R51: return "R51";
    case RelationId::Rain: return "Rain";
  }
  return "?";
}

/// Lowest degree at which the relation is defined (it references P_{n-2}).
constexpr int min_degree(RelationId id) {
  switch (id) {
    case RelationId::R217:
    case RelationId::R218:
    case RelationId::Rn2b2:
    case RelationId::Rn2b3:
    case RelationId::Rn2b4:
      return 2;
    case RelationId::Rfo:
      return 1;
    case RelationId::R51:
    case RelationId::Rain:
      return 0;
  }
  return 2;
}

/// Sign pattern of the three-term relation Rn2b3, written as
///   (x+B_n)P_{n-1} + s_A A(x)P_n + s_3 T3(x) = 0,
/// with T3 the (x+1)^3 P_{n-2}^(a,b+3) term.
///
/// The printed form carries no equality sign. Calibration against the
/// explicit-sum evaluator at 12 random (n, a, b, x) tuples with n in [3,12],
/// a in (-0.9,5), b in (-1.95,-1.05), x in (-3,3), at 40 significant digits,
/// gave worst relative residuals: (+,+) 0.74, (+,-) 2.0, (-,+) 2.0, (-,-) 5.6e-39.
/// `RelationsTest.Rn2b3CalibrationSelectsUniqueForm` reruns the selection.
struct Rn2b3Form {
  int sign_a = -1;
  int sign_t3 = -1;
};
inline constexpr Rn2b3Form kRn2b3Calibrated{-1, -1};

/// Coefficients shared by the bound theorem and the n2b* relations.
struct MixedRelationCoeffs {
  RelationId relation = RelationId::R217;
  int n = 0;
  ParamPair params;
  double A_n = 0.0;
  double B_n = 0.0;
  double C_n = 0.0;
  double D_n = 0.0;
  double E_n = 0.0;
  /// A(x) = A_poly[0] + A_poly[1] x
  std::array<double, 2> A_poly{};
  /// B(x) = B_poly[0] + B_poly[1] x + B_poly[2] x^2
  std::array<double, 3> B_poly{};

  double A_of(double x) const { return A_poly[0] + A_poly[1] * x; }
  double B_of(double x) const { return B_poly[0] + (B_poly[1] + B_poly[2] * x) * x; }
};

inline MixedRelationCoeffs mixed_relation_coeffs(RelationId id, int n, const ParamPair& p) {
  const double a = p.alpha;
  const double b = p.beta;
  MixedRelationCoeffs m;
  m.relation = id;
  m.n = n;
  m.params = p;

  detail::require_nondegenerate(2.0 * n + a + b, "2n+alpha+beta", n);
  m.A_n = 2.0 * (b + 1.0) / (2.0 * n + a + b);

  const double bden = (n + b + 1.0) * (n + a + b + 1.0);
  detail::require_nondegenerate(bden, "(n+beta+1)(n+alpha+beta+1)", n);
  m.B_n = 1.0 - 2.0 * (b + 1.0) * (b + 2.0) / bden;

  m.C_n = (b + 3.0) * (a + b + 2.0) + 2.0 * (n - 1.0) * (n + a + b + 2.0);
  m.D_n = 2.0 * (b + 1.0) * (b + 3.0);
  m.E_n = (2.0 * n + a + b) * (n + a - 1.0) * (n + a + b + 1.0) * (n + a + b + 2.0);

  const double aden = (b + n) * (b + n + 1.0) * (a + b + n + 1.0);
  if (std::abs(aden) > kDenominatorTol) {
    // A(x) = n(2(b+1)(b+2) - (n-1)(x+1)(a+n-1)) / ((b+n)(b+n+1)(a+b+n+1))
    const double slope = -n * (n - 1.0) * (a + n - 1.0) / aden;
    m.A_poly = {n * 2.0 * (b + 1.0) * (b + 2.0) / aden + slope, slope};
  } else {
    m.A_poly = {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  }

  const double nn = n;
  m.B_poly[0] = a * a + 5 * a * b + 7 * a + 4 * b * b * b + 24 * b * b + 39 * b - 2 * nn * nn * nn -
                3 * a * nn * nn - 5 * b * nn * nn - 4 * nn * nn - a * a * nn - 5 * a * b * nn -
                4 * a * nn + 10 * b * nn + 14 * nn + 16;
  m.B_poly[1] = -2.0 * (nn - 1.0) * (nn + a - 1.0) * (2.0 * nn + a + 3.0 * b + 4.0);
  m.B_poly[2] = -(nn - 1.0) * (nn + a - 1.0) * (2.0 * nn + a + b);
  return m;
}

/// Constants of the R218 form, fixed by matching coefficients with R217.
struct SplitFormConstants {
  double k1, k2, k3, k4;
};

inline SplitFormConstants split_form_constants(int n, const ParamPair& p) {
  const double a = p.alpha;
  const double b = p.beta;
  return {2.0 * (b + n) * (a + b + n), (a + b + 2.0 * n - 1.0) * (a + b + 2.0 * n),
          (a + n - 1.0) * (a + b + 2.0 * n), 2.0 * n * (a + b + n)};
}

enum class Evaluator { recurrence, sum };

namespace detail {

struct PolyEval {
  Evaluator how;
  double x;
  double operator()(int n, const ParamPair& p) const {
    return how == Evaluator::sum ? eval_sum(n, p, x, SumMode::compensated)
                                 : eval_recurrence(n, p, x);
  }
};

/// (sum of LHS terms - sum of RHS terms) / max |term|
inline double normalized_residual(std::initializer_list<double> lhs,
                                  std::initializer_list<double> rhs) {
  double diff = 0.0;
  double scale = 0.0;
  for (double t : lhs) {
    diff += t;
    scale = std::max(scale, std::abs(t));
  }
  for (double t : rhs) {
    diff -= t;
    scale = std::max(scale, std::abs(t));
  }
  if (scale == 0.0) return 0.0;
  return diff / scale;
}

}  // namespace detail

/// Residual of Rn2b3 under an arbitrary sign pattern; used to calibrate the form.
inline double rn2b3_residual(int n, const ParamPair& p, double x, Rn2b3Form form,
                             Evaluator how = Evaluator::recurrence) {
  if (n < 2) throw error(errc::invalid_parameter, "Rn2b3 requires n >= 2");
  const detail::PolyEval P{how, x};
  const auto m = mixed_relation_coeffs(RelationId::Rn2b3, n, p);
  if (!std::isfinite(m.A_poly[0])) {
    throw error(errc::degenerate_parameters, "A(x) denominator vanishes");
  }
  const double a = p.alpha;
  const double b = p.beta;
  const double t1 = (x + m.B_n) * P(n - 1, p);
  const double t2 = m.A_of(x) * P(n, p);
  const double t3 = std::pow(x + 1.0, 3) * (a + n - 1.0) * (a + b + 2.0 * n) /
                    (4.0 * (b + n) * (b + n + 1.0)) * P(n - 2, p.shifted_beta(3.0));
  return detail::normalized_residual({t1, form.sign_a * t2, form.sign_t3 * t3}, {});
}

inline double mixed_relation_residual(RelationId id, int n, const ParamPair& p, double x,
                                      Evaluator how = Evaluator::recurrence) {
  if (n < min_degree(id)) {
    throw error(errc::invalid_parameter,
                std::string(to_string(id)) + " requires n >= " + std::to_string(min_degree(id)));
  }
  const detail::PolyEval P{how, x};
  const double a = p.alpha;
  const double b = p.beta;
  const double xp1 = x + 1.0;

  switch (id) {
    case RelationId::R217: {
      const double lhs = 2.0 * n * (a + b + n) * P(n, p);
      const double r1 = -xp1 * (a + n - 1.0) * (a + b + 2.0 * n) * P(n - 2, p.shifted_beta(1.0));
      const double r2 = -(2.0 * (b + n) * (a + b + n) -
                          xp1 * (a + b + 2.0 * n - 1.0) * (a + b + 2.0 * n)) *
                        P(n - 1, p);
      return detail::normalized_residual({lhs}, {r1, r2});
    }
    case RelationId::R218: {
      const auto k = split_form_constants(n, p);
      const double lhs = (k.k1 - xp1 * k.k2) * P(n - 1, p);
      const double r1 = -xp1 * k.k3 * P(n - 2, p.shifted_beta(1.0));
      const double r2 = -k.k4 * P(n, p);
      return detail::normalized_residual({lhs}, {r1, r2});
    }
    case RelationId::Rfo: {
      const double lhs = xp1 * (a + b + n + 1.0) * P(n - 1, p.shifted_beta(2.0));
      const double r1 = 2.0 * n * P(n, p);
      const double r2 = 2.0 * (b + 1.0) * P(n - 1, p.shifted_beta(1.0));
      return detail::normalized_residual({lhs}, {r1, r2});
    }
    case RelationId::Rn2b2: {
      const auto m = mixed_relation_coeffs(id, n, p);
      const double lhs = (b + n) / (2.0 * n) * (xp1 - m.A_n) * P(n - 1, p);
      const double r1 = xp1 * xp1 * (a + n - 1.0) / (4.0 * n) * P(n - 2, p.shifted_beta(2.0));
      const double r2 = (b + 1.0) / (a + b + 2.0 * n) * P(n, p);
      return detail::normalized_residual({lhs}, {r1, r2});
    }
    case RelationId::Rn2b3:
      return rn2b3_residual(n, p, x, kRn2b3Calibrated, how);
    case RelationId::Rn2b4: {
      const auto m = mixed_relation_coeffs(id, n, p);
      detail::require_nondegenerate((n + b) * (b + 2.0), "(n+beta)(beta+2)", n);
      const double lhs = (m.C_n * xp1 - m.D_n) * P(n - 1, p);
      const double r1 = std::pow(xp1, 4) * m.E_n / (8.0 * (n + b) * (b + 2.0)) *
                        P(n - 2, p.shifted_beta(4.0));
      const double r2 = n * m.B_of(x) / (2.0 * (n + b) * (b + 2.0)) * P(n, p);
      return detail::normalized_residual({lhs}, {r1, r2});
    }
    case RelationId::R51: {
      const double lhs = (2.0 * (b + 1.0) + xp1 * (a + b + 2.0 * n + 2.0)) * P(n, p.shifted_beta(1.0));
      const double r1 = xp1 * (a + b + n + 2.0) * P(n, p.shifted_beta(2.0));
      const double r2 = 2.0 * (b + n + 1.0) * P(n, p);
      return detail::normalized_residual({lhs}, {r1, r2});
    }
    case RelationId::Rain: {
      const double lhs = 0.5 * (2.0 + a + b + 2.0 * n) * xp1 * P(n, p.shifted_beta(1.0));
      const double r1 = (n + 1.0) * P(n + 1, p);
      const double r2 = (1.0 + b + n) * P(n, p);
      return detail::normalized_residual({lhs}, {r1, r2});
    }
  }
  return 0.0;
}

}  // namespace qjacobi
