#pragma once

#include <array>

namespace qjacobi::reference {

// Published values for the smallest zero of P_15^(alpha,beta) and its bounds
// (-1 + D_n/C_n, x_{1,15}, -B_n), as printed, digits unchanged.
struct Table1Row {
  double alpha;
  double beta;
  double tight_lower;
  double zero;
  double upper;
  /// Printed upper bound contradicts the closed form for -B_n; flagged, not compared.
  bool upper_anomaly;
};

inline constexpr int kTable1Degree = 15;

inline constexpr std::array<Table1Row, 5> kTable1 = {{
    {0.93, -1.9, -1.0044, -1.00287, -1.00085, false},
    {-0.93, -1.9, -1.005, -1.00327, -1.00097, false},
    // Printed -1.0045 lies below the printed zero; -B_n evaluates to -1.000453246.
    {-0.93, -1.05, -1.0004636, -1.0004635, -1.0045, true},
    {0.93, -1.05, -1.0004094, -1.0004088, -1.0004001, false},
    {8.3, -1.55, -1.00235, -1.00231, -1.00151, false},
}};

inline constexpr double kTable1Tol = 1e-4;

// Published threshold delta and second-smallest zero for n = 5, alpha = 2.35.
struct AskeyRow {
  int n;
  double alpha;
  double beta;
  double delta;
  double x2;
  bool interlacing;
};

inline constexpr std::array<AskeyRow, 2> kAskeyExamples = {{
    {5, 2.35, -1.5, -0.922179, -0.885666, true},
    {5, 2.35, -1.9, -0.855422, -0.961637, false},
}};

inline constexpr double kAskeyTol = 1e-5;

}  // namespace qjacobi::reference
