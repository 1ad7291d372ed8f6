#pragma once

#include <cmath>
#include <string_view>

#include "qjacobi/error.hpp"

namespace qjacobi {

/// Which family of theorems applies to a Jacobi parameter pair.
enum class Regime {
  Orthogonal,           ///< alpha > -1, beta > -1
  QuasiOrder1,          ///< alpha > -1, -2 < beta < -1
  QuasiOrder1Mirrored,  ///< beta > -1, -2 < alpha < -1
  Unsupported,
};

constexpr std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Orthogonal: return "Orthogonal";
    case Regime::QuasiOrder1: return "QuasiOrder1";
    case Regime::QuasiOrder1Mirrored: return "QuasiOrder1Mirrored";
    case Regime::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

constexpr Regime regime_of(double alpha, double beta) {
  if (alpha > -1.0 && beta > -1.0) return Regime::Orthogonal;
  if (alpha > -1.0 && beta > -2.0 && beta < -1.0) return Regime::QuasiOrder1;
  if (beta > -1.0 && alpha > -2.0 && alpha < -1.0) return Regime::QuasiOrder1Mirrored;
  // Includes the boundaries alpha = -1 or beta = -1 exactly.
  return Regime::Unsupported;
}

struct ParamPair {
  double alpha = 0.0;
  double beta = 0.0;
  Regime regime = Regime::Orthogonal;

  /// Same alpha, beta shifted by `t`, reclassified.
  ParamPair shifted_beta(double t) const;
  ParamPair shifted(double da, double db) const;

  friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

inline ParamPair classify(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw error(errc::invalid_parameter, "alpha and beta must be finite");
  }
  return ParamPair{alpha, beta, regime_of(alpha, beta)};
}

inline ParamPair ParamPair::shifted_beta(double t) const { return classify(alpha, beta + t); }

inline ParamPair ParamPair::shifted(double da, double db) const {
  return classify(alpha + da, beta + db);
}

/// Swap alpha and beta: P_n^(a,b)(x) = (-1)^n P_n^(b,a)(-x).
inline ParamPair reflect(const ParamPair& p) { return classify(p.beta, p.alpha); }

}  // namespace qjacobi
