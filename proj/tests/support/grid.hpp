#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <qjacobi/params.hpp>

namespace qjacobi::testing {

inline constexpr std::array<double, 6> kGridAlpha{-0.9, -0.5, 0.0, 0.93, 2.35, 8.3};
inline constexpr std::array<double, 4> kGridBeta{-1.9, -1.55, -1.5, -1.05};
inline constexpr int kGridNMax = 20;

// alpha + beta = -2 makes P_1 constant; no three-term recurrence exists.
inline bool degenerate_pair(double a, double b) { return std::abs(a + b + 2.0) < 1e-12; }

inline std::vector<ParamPair> grid_pairs() {
  std::vector<ParamPair> out;
  for (double a : kGridAlpha) {
    for (double b : kGridBeta) {
      if (!degenerate_pair(a, b)) out.push_back(classify(a, b));
    }
  }
  return out;
}

/// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// alpha > -1, -2 < beta < -1, kept away from alpha + beta = -2.
  ParamPair quasi() {
    for (;;) {
      const double a = uniform(-0.95, 9.0);
      const double b = uniform(-1.95, -1.02);
      if (std::abs(a + b + 2.0) > 0.05) return classify(a, b);
    }
  }
  ParamPair orthogonal() { return classify(uniform(-0.95, 6.0), uniform(-0.95, 6.0)); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qjacobi::testing
