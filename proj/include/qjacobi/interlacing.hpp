#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qjacobi/error.hpp"
#include "qjacobi/evaluate.hpp"
#include "qjacobi/params.hpp"
#include "qjacobi/recurrence.hpp"
#include "qjacobi/relations.hpp"
#include "qjacobi/zeros.hpp"

namespace qjacobi {

inline constexpr double kCoprimeTol = 1e-9;

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

namespace detail {

/// first_1 < second_1 < first_2 < second_2 < ...; |first| is |second| or |second|+1.
inline bool alternates(std::span<const double> first, std::span<const double> second) {
  if (first.size() != second.size() && first.size() != second.size() + 1) return false;
  for (std::size_t i = 0; i < second.size(); ++i) {
    if (!(first[i] < second[i])) return false;
    if (i + 1 < first.size() && !(second[i] < first[i + 1])) return false;
  }
  return true;
}

inline void require_sorted(std::span<const double> v, const char* name) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i - 1] < v[i])) {
      throw error(errc::invalid_parameter, std::string(name) + " must be strictly increasing");
    }
  }
}

}  // namespace detail

/// Equal-count interlacing: strict alternation starting from either list.
inline bool interlace_equal(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw error(errc::length_mismatch, "interlace_equal needs equal counts, got " +
                                           std::to_string(a.size()) + " and " +
                                           std::to_string(b.size()));
  }
  return detail::alternates(a, b) || detail::alternates(b, a);
}

/// outer_1 < inner_1 < outer_2 < ... < inner_m < outer_{m+1}
inline bool interlace_nested(std::span<const double> outer, std::span<const double> inner) {
  if (outer.size() != inner.size() + 1) {
    throw error(errc::length_mismatch, "interlace_nested needs |outer| = |inner| + 1");
  }
  return detail::alternates(outer, inner);
}

/// Stieltjes interlacing for m <= n-2: m distinct open gaps between successive
/// entries of `big`, each holding exactly one entry of `small`.
inline bool interlace_stieltjes(std::span<const double> big, std::span<const double> small) {
  if (big.size() < 2 || small.size() + 2 > big.size()) {
    throw error(errc::length_mismatch, "interlace_stieltjes needs m <= n-2, got n=" +
                                           std::to_string(big.size()) +
                                           ", m=" + std::to_string(small.size()));
  }
  detail::require_sorted(big, "big");
  detail::require_sorted(small, "small");
  std::size_t last_gap = std::numeric_limits<std::size_t>::max();
  for (double s : small) {
    // Index of the first big entry >= s; the gap is (big[g-1], big[g]).
    const auto it = std::lower_bound(big.begin(), big.end(), s);
    if (it == big.begin() || it == big.end() || *it == s) return false;
    const auto gap = static_cast<std::size_t>(it - big.begin());
    if (gap == last_gap) return false;
    last_gap = gap;
  }
  return true;
}

inline double min_separation(std::span<const double> a, std::span<const double> b) {
  double best = std::numeric_limits<double>::infinity();
  for (double u : a) {
    for (double v : b) best = std::min(best, std::abs(u - v));
  }
  return best;
}

/// Numerical co-primality: no zero of `a` within `tol` of a zero of `b`.
inline bool coprime(std::span<const double> a, std::span<const double> b,
                    double tol = kCoprimeTol) {
  return min_separation(a, b) > tol;
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

enum class ClaimId {
  Lemma15,  // both chains below
  Lemma15a,
  Lemma15b,
  Thm21,
  CorNonInterlace,
  Cor22,
  Thm31,
  Thm41,
  Thm42,
  Thm43,
  Thm51i,
  Thm51ii,
  Thm61,
  Eq45,
};

constexpr std::string_view to_string(ClaimId c) {
  switch (c) {
    case ClaimId::Lemma15: return "lemma15";
    case ClaimId::Lemma15a: return "lemma15a";
    case ClaimId::Lemma15b: return "lemma15b";
    case ClaimId::Thm21: return "thm21";
    case ClaimId::CorNonInterlace: return "cor_noninterlace";
    case ClaimId::Cor22: return "cor22";
    case ClaimId::Thm31: return "thm31";
    case ClaimId::Thm41: return "thm41";
    case ClaimId::Thm42: return "thm42";
    case ClaimId::Thm43: return "thm43";
    case ClaimId::Thm51i: return "thm51i";
    case ClaimId::Thm51ii: return "thm51ii";
    case ClaimId::Thm61: return "thm61";
    case ClaimId::Eq45: return "eq45";
  }
  return "?";
}

/// A violated strict inequality `lo < hi` (or a point outside its interval).
struct Witness {
  double lo = 0.0;
  double hi = 0.0;
  double point = 0.0;
  std::string what;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct InterlacingVerdict {
  ClaimId claim = ClaimId::Lemma15;
  bool holds = false;
  bool hypothesis_met = false;
  /// Tie inside a tolerance band (common-zero boundary, indeterminate co-primality).
  bool boundary = false;
  std::vector<Witness> witnesses;
  std::string notes;

  friend bool operator==(const InterlacingVerdict&, const InterlacingVerdict&) = default;
};

struct CheckOptions {
  double coprime_tol = kCoprimeTol;
  double tie_tol = kBoundaryTol;
};

namespace detail {

struct Link {
  std::string label;
  double value;
};

/// Chain of labelled values asserted strictly increasing.
class Chain {
 public:
  Chain& add(std::string label, double v) {
    links_.push_back({std::move(label), v});
    return *this;
  }

  /// One witness per violated link.
  std::vector<Witness> violations() const {
    std::vector<Witness> out;
    for (std::size_t i = 1; i < links_.size(); ++i) {
      const auto& a = links_[i - 1];
      const auto& b = links_[i];
      if (!(a.value < b.value)) {
        out.push_back({a.value, b.value, b.value, a.label + " < " + b.label});
      }
    }
    return out;
  }

 private:
  std::vector<Link> links_;
};

inline std::string zlabel(std::string_view sym, int i, int n) {
  return std::string(sym) + "_{" + std::to_string(i) + "," + std::to_string(n) + "}";
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Parameters in the orientation the theorems are stated in (zero below -1).
/// For mirrored input the polynomials are solved in their own orientation and
/// the zeros mapped through x -> -x.
class Frame {
 public:
  explicit Frame(const ParamPair& p) : input_(p) {
    mirrored_ = p.regime == Regime::QuasiOrder1Mirrored;
    canonical_ = mirrored_ ? reflect(p) : p;
  }

  bool supported() const {
    return input_.regime == Regime::QuasiOrder1 || input_.regime == Regime::QuasiOrder1Mirrored;
  }
  bool mirrored() const { return mirrored_; }
  const ParamPair& canonical() const { return canonical_; }

  /// Zeros of P_n^(alpha, beta+shift) in canonical orientation.
  std::vector<double> zeros(int n, double beta_shift) const {
    const ParamPair actual =
        mirrored_ ? input_.shifted(beta_shift, 0.0) : input_.shifted_beta(beta_shift);
    std::vector<double> z;
    if (n == 0) return z;
    if (n == 1) {
      // Linear: solved directly, whichever side of [-1,1] the root lands on.
      const double slope = 0.5 * (actual.alpha + actual.beta + 2.0);
      require_nondegenerate(slope, "alpha+beta+2", 1);
      z.push_back(-0.5 * (actual.alpha - actual.beta) / slope);
    } else {
      z = qjacobi::zeros(n, actual).zeros;
    }
    if (mirrored_) {
      std::reverse(z.begin(), z.end());
      for (double& v : z) v = -v;
    }
    return z;
  }

 private:
  ParamPair input_;
  ParamPair canonical_;
  bool mirrored_ = false;
};

inline InterlacingVerdict vacuous(ClaimId c, std::string why) {
  InterlacingVerdict v;
  v.claim = c;
  v.hypothesis_met = false;
  v.holds = false;
  v.notes = std::move(why);
  return v;
}

inline InterlacingVerdict from_violations(ClaimId c, std::vector<Witness> w, std::string notes) {
  InterlacingVerdict v;
  v.claim = c;
  v.hypothesis_met = true;
  v.holds = w.empty();
  v.witnesses = std::move(w);
  v.notes = std::move(notes);
  return v;
}

inline std::string regime_note(const Frame& f) {
  return f.mirrored() ? "evaluated in mirrored orientation; " : "";
}

inline std::vector<double> interior(const std::vector<double>& x) {
  return {x.begin() + 1, x.end()};
}

inline void append(std::vector<Witness>& to, std::vector<Witness> from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

inline std::vector<Witness> equal_interlace_witnesses(const std::vector<double>& a,
                                                      const std::vector<double>& b,
                                                      std::string_view an, std::string_view bn) {
  if (interlace_equal(a, b)) return {};
  // Report the links of the a-first alternation that break.
  Chain ch;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ch.add(std::string(an) + "[" + std::to_string(i + 1) + "]", a[i]);
    ch.add(std::string(bn) + "[" + std::to_string(i + 1) + "]", b[i]);
  }
  auto w = ch.violations();
  if (w.empty()) w.push_back({a.front(), b.front(), a.front(), "no alternation"});
  return w;
}

inline std::vector<Witness> nested_witnesses(const std::vector<double>& outer,
                                             const std::vector<double>& inner,
                                             std::string_view on, std::string_view in) {
  Chain ch;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    ch.add(std::string(on) + "[" + std::to_string(i + 1) + "]", outer[i]);
    if (i < inner.size()) ch.add(std::string(in) + "[" + std::to_string(i + 1) + "]", inner[i]);
  }
  return ch.violations();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Checkers. Each accepts QuasiOrder1 or mirrored parameters; anything else
// (and degrees below the claim's floor) yields hypothesis_met = false.
// ---------------------------------------------------------------------------

/// x_{1,n} < -1 < y_{1,n} < x_{2,n} < ... < x_{n,n} < y_{n,n} < 1, with y the
/// zeros of P_n^(a,b+1).
inline InterlacingVerdict check_lemma15a(int n, const ParamPair& p) {
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(ClaimId::Lemma15a, "regime not quasi-orthogonal");
  if (n < 1) return detail::vacuous(ClaimId::Lemma15a, "requires n >= 1");
  const auto x = f.zeros(n, 0.0);
  const auto y = f.zeros(n, 1.0);
  detail::Chain ch;
  ch.add(detail::zlabel("x", 1, n), x[0]).add("-1", -1.0);
  for (int i = 0; i < n; ++i) {
    if (i > 0) ch.add(detail::zlabel("x", i + 1, n), x[i]);
    ch.add(detail::zlabel("y", i + 1, n), y[i]);
  }
  ch.add("1", 1.0);
  return detail::from_violations(ClaimId::Lemma15a, ch.violations(), detail::regime_note(f));
}

/// x_{1,n+1} < -1 < y_{1,n} < x_{2,n+1} < ... < y_{n,n} < x_{n+1,n+1} < 1.
inline InterlacingVerdict check_lemma15b(int n, const ParamPair& p) {
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(ClaimId::Lemma15b, "regime not quasi-orthogonal");
  if (n < 1) return detail::vacuous(ClaimId::Lemma15b, "requires n >= 1");
  const auto x = f.zeros(n + 1, 0.0);
  const auto y = f.zeros(n, 1.0);
  detail::Chain ch;
  ch.add(detail::zlabel("x", 1, n + 1), x[0]).add("-1", -1.0);
  for (int i = 0; i < n; ++i) {
    ch.add(detail::zlabel("y", i + 1, n), y[i]);
    ch.add(detail::zlabel("x", i + 2, n + 1), x[i + 1]);
  }
  ch.add("1", 1.0);
  return detail::from_violations(ClaimId::Lemma15b, ch.violations(), detail::regime_note(f));
}

inline InterlacingVerdict check_lemma15(int n, const ParamPair& p) {
  auto a = check_lemma15a(n, p);
  auto b = check_lemma15b(n, p);
  InterlacingVerdict v = a;
  v.claim = ClaimId::Lemma15;
  v.hypothesis_met = a.hypothesis_met && b.hypothesis_met;
  v.holds = a.holds && b.holds;
  detail::append(v.witnesses, std::move(b.witnesses));
  if (!v.hypothesis_met) v.holds = false;
  return v;
}

/// Zeros of P_n and P_{n+1} in the mirrored regime: (1-x)P_n interlaces with
/// P_{n+1}; interior zeros interlace; full sets do not; the zero above 1
/// decreases with n.
inline InterlacingVerdict check_cor22(int n, const ParamPair& p) {
  if (p.regime != Regime::QuasiOrder1Mirrored) {
    return detail::vacuous(ClaimId::Cor22, "requires -2 < alpha < -1, beta > -1");
  }
  if (n < 2) return detail::vacuous(ClaimId::Cor22, "requires n >= 2");
  const auto xn = zeros(n, p).zeros;
  const auto xm = zeros(n + 1, p).zeros;
  std::vector<Witness> w;

  // (i)
  auto with_one = xn;
  with_one.push_back(1.0);
  std::sort(with_one.begin(), with_one.end());
  detail::append(w, detail::equal_interlace_witnesses(xm, with_one, "x(n+1)", "(1-x)x(n)"));

  // (ii) interior zeros: the first n-1 of P_n and first n of P_{n+1}.
  const std::vector<double> in_n(xn.begin(), xn.end() - 1);
  const std::vector<double> in_m(xm.begin(), xm.end() - 1);
  if (!interlace_nested(in_m, in_n)) {
    detail::append(w, detail::nested_witnesses(in_m, in_n, "x(n+1)", "x(n)"));
  }
  for (double v : in_n) {
    if (!(v > -1.0 && v < 1.0)) w.push_back({-1.0, 1.0, v, "interior zero of P_n outside (-1,1)"});
  }

  // (iii)
  if (interlace_nested(xm, xn)) {
    w.push_back({xm.front(), xm.back(), xn.back(), "full zero sets of P_n, P_{n+1} interlace"});
  }

  // (iv)
  detail::Chain ch;
  ch.add("1", 1.0).add(detail::zlabel("x", n + 1, n + 1), xm.back()).add(detail::zlabel("x", n, n), xn.back());
  detail::append(w, ch.violations());

  return detail::from_violations(ClaimId::Cor22, std::move(w),
                                 "outer zeros " + detail::fmt(xn.back()) + " (n), " +
                                     detail::fmt(xm.back()) + " (n+1)");
}

/// x_{1,n} < x_{1,n+1} < -1 < x_{2,n+1} < x_{2,n} < ... < x_{n,n} < x_{n+1,n+1} < 1,
/// plus: (1+x)P_n interlaces with P_{n+1}.
inline InterlacingVerdict check_thm21(int n, const ParamPair& p) {
  if (p.regime == Regime::QuasiOrder1Mirrored) {
    auto v = check_cor22(n, p);
    v.notes = "mirrored parameters checked as cor22; " + v.notes;
    return v;
  }
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(ClaimId::Thm21, "regime not quasi-orthogonal");
  if (n < 1) return detail::vacuous(ClaimId::Thm21, "requires n >= 1");
  const auto x = f.zeros(n, 0.0);
  const auto xm = f.zeros(n + 1, 0.0);

  detail::Chain ch;
  ch.add(detail::zlabel("x", 1, n), x[0])
      .add(detail::zlabel("x", 1, n + 1), xm[0])
      .add("-1", -1.0);
  for (int i = 1; i < n; ++i) {
    ch.add(detail::zlabel("x", i + 1, n + 1), xm[i]);
    ch.add(detail::zlabel("x", i + 1, n), x[i]);
  }
  ch.add(detail::zlabel("x", n + 1, n + 1), xm[n]).add("1", 1.0);
  auto w = ch.violations();

  auto with_m1 = x;
  with_m1.push_back(-1.0);
  std::sort(with_m1.begin(), with_m1.end());
  detail::append(w, detail::equal_interlace_witnesses(with_m1, xm, "(1+x)x(n)", "x(n+1)"));

  return detail::from_violations(
      ClaimId::Thm21, std::move(w),
      "x_{1,n}=" + detail::fmt(x[0]) + " x_{1,n+1}=" + detail::fmt(xm[0]));
}

/// Zeros of P_{n-k} and P_n do not interlace.
inline InterlacingVerdict check_cor_noninterlace(int n, int k, const ParamPair& p) {
  const detail::Frame f(p);
  if (!f.supported()) {
    return detail::vacuous(ClaimId::CorNonInterlace, "regime not quasi-orthogonal");
  }
  if (n < 3 || k < 1 || k > n - 1) {
    return detail::vacuous(ClaimId::CorNonInterlace, "requires n >= 3 and 1 <= k <= n-1");
  }
  const auto big = f.zeros(n, 0.0);
  const auto small = f.zeros(n - k, 0.0);
  const bool interlaced = k == 1 ? interlace_nested(big, small) : interlace_stieltjes(big, small);

  InterlacingVerdict v;
  v.claim = ClaimId::CorNonInterlace;
  v.hypothesis_met = true;
  v.holds = !interlaced;
  std::string notes = detail::regime_note(f) + "k=" + std::to_string(k) + "; ";
  if (small.front() < big.front()) {
    notes += "x_{1,n-k}=" + detail::fmt(small.front()) + " < x_{1,n}=" + detail::fmt(big.front());
  } else {
    notes += "x_{1,n-k}=" + detail::fmt(small.front()) + " >= x_{1,n}=" + detail::fmt(big.front());
  }
  if (interlaced) {
    v.witnesses.push_back({big.front(), big.back(), small.front(), "zeros interlace"});
  }
  v.notes = std::move(notes);
  return v;
}

/// Non-interlacing for every k in 1..n-1.
inline InterlacingVerdict check_cor_noninterlace_all(int n, const ParamPair& p) {
  const detail::Frame f(p);
  if (!f.supported()) {
    return detail::vacuous(ClaimId::CorNonInterlace, "regime not quasi-orthogonal");
  }
  if (n < 3) return detail::vacuous(ClaimId::CorNonInterlace, "requires n >= 3");
  InterlacingVerdict all;
  all.claim = ClaimId::CorNonInterlace;
  all.hypothesis_met = true;
  all.holds = true;
  for (int k = 1; k < n; ++k) {
    auto v = check_cor_noninterlace(n, k, p);
    if (!v.holds) {
      all.holds = false;
      for (auto& w : v.witnesses) {
        w.what = "k=" + std::to_string(k) + ": " + w.what;
        all.witnesses.push_back(std::move(w));
      }
    }
  }
  all.notes = detail::regime_note(f) + "k=1.." + std::to_string(n - 1);
  return all;
}

/// Zeros of (x+1)(x-d_n)P_{n-2} interlace with zeros of P_n, if P_n and P_{n-2}
/// are co-prime.
inline InterlacingVerdict check_thm31(int n, const ParamPair& p, const CheckOptions& opt = {}) {
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(ClaimId::Thm31, "regime not quasi-orthogonal");
  if (n < 3) return detail::vacuous(ClaimId::Thm31, "requires n >= 3");
  const auto x = f.zeros(n, 0.0);
  const auto w = f.zeros(n - 2, 0.0);
  const double dn = recurrence_coeffs(n, f.canonical()).d;
  if (!coprime(x, w, opt.coprime_tol)) {
    auto v = detail::vacuous(ClaimId::Thm31, "P_n and P_{n-2} not numerically co-prime");
    v.boundary = true;
    return v;
  }
  auto aug = w;
  aug.push_back(-1.0);
  aug.push_back(dn);
  std::sort(aug.begin(), aug.end());
  if (std::adjacent_find(aug.begin(), aug.end(), [&](double a, double b) {
        return b - a <= opt.tie_tol;
      }) != aug.end()) {
    auto v = detail::vacuous(ClaimId::Thm31, "d_n coincides with -1 or a zero of P_{n-2}");
    v.boundary = true;
    return v;
  }
  return detail::from_violations(ClaimId::Thm31, detail::equal_interlace_witnesses(aug, x, "aug", "x"),
                                 detail::regime_note(f) + "d_n=" + detail::fmt(dn));
}

/// Zeros of P_n^(a,b) and P_n^(a,b+2) interlace iff delta < x_{2,n}.
/// `holds` reports whether the biconditional is satisfied.
inline InterlacingVerdict check_thm41(int n, const ParamPair& p, const CheckOptions& opt = {}) {
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(ClaimId::Thm41, "regime not quasi-orthogonal");
  if (n < 2) return detail::vacuous(ClaimId::Thm41, "requires n >= 2");
  const auto x = f.zeros(n, 0.0);
  const auto z = f.zeros(n, 2.0);
  const double delta = askey_delta(n, f.canonical());
  const std::string values = detail::regime_note(f) + "delta=" + detail::fmt(delta) +
                             " x_{2,n}=" + detail::fmt(x[1]);
  if (std::abs(delta - x[1]) < opt.tie_tol) {
    auto v = detail::vacuous(ClaimId::Thm41, "CommonZeroBoundary: " + values);
    v.boundary = true;
    return v;
  }
  const bool condition = delta < x[1];
  const bool interlaced = interlace_equal(x, z);
  InterlacingVerdict v;
  v.claim = ClaimId::Thm41;
  v.hypothesis_met = true;
  v.holds = condition == interlaced;
  v.notes = values + " condition=" + (condition ? "true" : "false") +
            " interlacing=" + (interlaced ? "true" : "false");
  if (!v.holds) v.witnesses.push_back({x[0], x[1], delta, "biconditional violated"});
  return v;
}

/// If delta > x_{2,n} and there is no common zero, the interior zeros of
/// P_n^(a,b) together with delta interlace with the zeros of P_n^(a,b+2).
inline InterlacingVerdict check_thm42(int n, const ParamPair& p, const CheckOptions& opt = {}) {
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(ClaimId::Thm42, "regime not quasi-orthogonal");
  if (n < 2) return detail::vacuous(ClaimId::Thm42, "requires n >= 2");
  const auto x = f.zeros(n, 0.0);
  const auto z = f.zeros(n, 2.0);
  const double delta = askey_delta(n, f.canonical());
  const std::string values = detail::regime_note(f) + "delta=" + detail::fmt(delta) +
                             " x_{2,n}=" + detail::fmt(x[1]);
  if (std::abs(delta - x[1]) < opt.tie_tol) {
    auto v = detail::vacuous(ClaimId::Thm42, "CommonZeroBoundary: " + values);
    v.boundary = true;
    return v;
  }
  if (!(delta > x[1])) {
    return detail::vacuous(ClaimId::Thm42, "delta < x_{2,n}; thm41 applies: " + values);
  }
  if (!coprime(x, z, opt.coprime_tol)) {
    auto v = detail::vacuous(ClaimId::Thm42, "common zero within tolerance: " + values);
    v.boundary = true;
    return v;
  }
  auto aug = detail::interior(x);
  aug.push_back(delta);
  std::sort(aug.begin(), aug.end());
  return detail::from_violations(ClaimId::Thm42,
                                 detail::equal_interlace_witnesses(aug, z, "aug", "z"), values);
}

/// x_{1,n} < -1 < x_{2,n} < z_{1,n-1} < ... < x_{n,n} < z_{n-1,n-1} < 1 with z
/// the zeros of P_{n-1}^(a,b+2), and the two polynomials co-prime.
inline InterlacingVerdict check_thm43(int n, const ParamPair& p, const CheckOptions& opt = {}) {
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(ClaimId::Thm43, "regime not quasi-orthogonal");
  if (n < 2) return detail::vacuous(ClaimId::Thm43, "requires n >= 2");
  const auto x = f.zeros(n, 0.0);
  const auto z = f.zeros(n - 1, 2.0);
  detail::Chain ch;
  ch.add(detail::zlabel("x", 1, n), x[0]).add("-1", -1.0);
  for (int i = 1; i < n; ++i) {
    ch.add(detail::zlabel("x", i + 1, n), x[i]);
    ch.add(detail::zlabel("z", i, n - 1), z[i - 1]);
  }
  // z_{n-1,n-1} < 1 follows from orthogonality of P_{n-1}^(a,b+2).
  ch.add("1", 1.0);
  auto w = ch.violations();
  const double sep = min_separation(x, z);
  if (!(sep > opt.coprime_tol)) {
    w.push_back({0.0, opt.coprime_tol, sep, "P_n and P_{n-1}^(a,b+2) share a zero"});
  }
  return detail::from_violations(ClaimId::Thm43, std::move(w),
                                 detail::regime_note(f) + "min separation " + detail::fmt(sep));
}

/// Augmentation point of part (i): 2(n+b)(a+b+n)/((a+b+2n)(a+b+2n-1)) - 1.
inline double thm51_point(int n, const ParamPair& p) {
  const double a = p.alpha;
  const double b = p.beta;
  const double den = (a + b + 2.0 * n) * (a + b + 2.0 * n - 1.0);
  detail::require_nondegenerate(den, "(a+b+2n)(a+b+2n-1)", n);
  return 2.0 * (n + b) * (a + b + n) / den - 1.0;
}

/// t = 1: zeros of P_{n-2}^(a,b+1) plus one point interlace with the n-1
/// interior zeros of P_n (co-primality assumed).
/// t in [2,4]: zeros of P_{n-2}^(a,b+t) interlace with the interior zeros of
/// P_n, and the two are co-prime.
inline InterlacingVerdict check_thm51(int n, const ParamPair& p, double t,
                                      const CheckOptions& opt = {}) {
  const bool part_one = t == 1.0;
  if (!part_one && !(t >= 2.0 && t <= 4.0)) {
    throw error(errc::unsupported_shift, "t must be 1 or lie in [2,4], got " + detail::fmt(t));
  }
  const ClaimId id = part_one ? ClaimId::Thm51i : ClaimId::Thm51ii;
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(id, "regime not quasi-orthogonal");
  if (n < 3) return detail::vacuous(id, "requires n >= 3");
  const auto x = f.zeros(n, 0.0);
  const auto in = detail::interior(x);
  const auto w = f.zeros(n - 2, t);
  const double sep = min_separation(x, w);

  if (part_one) {
    if (!(sep > opt.coprime_tol)) {
      auto v = detail::vacuous(id, "P_{n-2}^(a,b+1) and P_n not numerically co-prime");
      v.boundary = true;
      return v;
    }
    const double pt = thm51_point(n, f.canonical());
    auto aug = w;
    aug.push_back(pt);
    std::sort(aug.begin(), aug.end());
    std::string where;
    if (pt < -1.0) {
      where = "below -1";
    } else if (pt < in.front() || pt > in.back()) {
      where = "outside the interior span";
    } else {
      where = "inside the interior span";
    }
    return detail::from_violations(
        id, detail::equal_interlace_witnesses(aug, in, "aug", "x_int"),
        detail::regime_note(f) + "point=" + detail::fmt(pt) + " (" + where + ")");
  }

  std::vector<Witness> wit;
  if (!interlace_nested(in, w)) detail::append(wit, detail::nested_witnesses(in, w, "x_int", "w"));
  if (!(sep > opt.coprime_tol)) {
    wit.push_back({0.0, opt.coprime_tol, sep, "P_n and P_{n-2}^(a,b+t) share a zero"});
  }
  return detail::from_violations(id, std::move(wit),
                                 detail::regime_note(f) + "t=" + detail::fmt(t));
}

/// -1 + A_n < -1 + D_n/C_n < x_{1,n} < -B_n < -1.
inline InterlacingVerdict check_thm61(int n, const ParamPair& p) {
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(ClaimId::Thm61, "regime not quasi-orthogonal");
  if (n < 3) return detail::vacuous(ClaimId::Thm61, "requires n >= 3");
  const auto x = f.zeros(n, 0.0);
  const auto bc = bound_chain(n, f.canonical());
  detail::Chain ch;
  ch.add("-1+A_n", bc.loose_lower)
      .add("-1+D_n/C_n", bc.tight_lower)
      .add(detail::zlabel("x", 1, n), x[0])
      .add("-B_n", bc.upper)
      .add("-1", -1.0);
  return detail::from_violations(ClaimId::Thm61, ch.violations(),
                                 detail::regime_note(f) + "x_{1,n}=" + detail::fmt(x[0]));
}

/// -1 < y_{1,n} < z_{1,n} < y_{2,n} < ... < y_{n,n} < z_{n,n} < 1 with y, z the
/// zeros of P_n^(a,b+1), P_n^(a,b+2).
inline InterlacingVerdict check_eq45(int n, const ParamPair& p) {
  const detail::Frame f(p);
  if (!f.supported()) return detail::vacuous(ClaimId::Eq45, "regime not quasi-orthogonal");
  if (n < 1) return detail::vacuous(ClaimId::Eq45, "requires n >= 1");
  const auto y = f.zeros(n, 1.0);
  const auto z = f.zeros(n, 2.0);
  detail::Chain ch;
  ch.add("-1", -1.0);
  for (int i = 0; i < n; ++i) {
    ch.add(detail::zlabel("y", i + 1, n), y[i]);
    ch.add(detail::zlabel("z", i + 1, n), z[i]);
  }
  ch.add("1", 1.0);
  return detail::from_violations(ClaimId::Eq45, ch.violations(), detail::regime_note(f));
}

/// Claims proved without side hypotheses; a failure on these is a defect.
constexpr bool is_unconditional(ClaimId c) {
  switch (c) {
    case ClaimId::Lemma15:
    case ClaimId::Lemma15a:
    case ClaimId::Lemma15b:
    case ClaimId::Thm21:
    case ClaimId::CorNonInterlace:
    case ClaimId::Cor22:
    case ClaimId::Thm41:
    case ClaimId::Thm43:
    case ClaimId::Thm51ii:
    case ClaimId::Thm61:
    case ClaimId::Eq45:
      return true;
    case ClaimId::Thm31:
    case ClaimId::Thm42:
    case ClaimId::Thm51i:
      return false;
  }
  return false;
}

}  // namespace qjacobi
