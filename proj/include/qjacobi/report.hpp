#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "qjacobi/error.hpp"
#include "qjacobi/interlacing.hpp"
#include "qjacobi/params.hpp"
#include "qjacobi/reference_values.hpp"
#include "qjacobi/zeros.hpp"

namespace qjacobi {

// ---------------------------------------------------------------------------
// Claim dispatch
// ---------------------------------------------------------------------------

inline constexpr std::array<ClaimId, 14> kAllClaims = {
    ClaimId::CorNonInterlace, ClaimId::Cor22,   ClaimId::Eq45,     ClaimId::Lemma15,
    ClaimId::Lemma15a,        ClaimId::Lemma15b, ClaimId::Thm21,   ClaimId::Thm31,
    ClaimId::Thm41,           ClaimId::Thm42,    ClaimId::Thm43,   ClaimId::Thm51i,
    ClaimId::Thm51ii,         ClaimId::Thm61};

/// Accepts the names produced by to_string(ClaimId), plus "thm51" (part chosen by t).
inline std::optional<ClaimId> parse_claim(std::string_view name) {
  for (ClaimId c : kAllClaims) {
    if (to_string(c) == name) return c;
  }
  if (name == "thm51") return ClaimId::Thm51ii;
  if (name == "cornoninterlace") return ClaimId::CorNonInterlace;
  return std::nullopt;
}

constexpr bool uses_shift(ClaimId c) { return c == ClaimId::Thm51i || c == ClaimId::Thm51ii; }

/// Runs one checker. For the t-dependent claims the part follows t.
inline InterlacingVerdict verify_claim(ClaimId claim, int n, const ParamPair& p,
                                       std::optional<double> t = std::nullopt,
                                       const CheckOptions& opt = {}) {
  switch (claim) {
    case ClaimId::Lemma15: return check_lemma15(n, p);
    case ClaimId::Lemma15a: return check_lemma15a(n, p);
    case ClaimId::Lemma15b: return check_lemma15b(n, p);
    case ClaimId::Thm21: return check_thm21(n, p);
    case ClaimId::CorNonInterlace: return check_cor_noninterlace_all(n, p);
    case ClaimId::Cor22: return check_cor22(n, p);
    case ClaimId::Thm31: return check_thm31(n, p, opt);
    case ClaimId::Thm41: return check_thm41(n, p, opt);
    case ClaimId::Thm42: return check_thm42(n, p, opt);
    case ClaimId::Thm43: return check_thm43(n, p, opt);
    case ClaimId::Thm51i:
    case ClaimId::Thm51ii: {
      const double shift = t.value_or(claim == ClaimId::Thm51i ? 1.0 : 2.0);
      return check_thm51(n, p, shift, opt);
    }
    case ClaimId::Thm61: return check_thm61(n, p);
    case ClaimId::Eq45: return check_eq45(n, p);
  }
  throw error(errc::invalid_parameter, "unknown claim");
}

// ---------------------------------------------------------------------------
// Number formatting
// ---------------------------------------------------------------------------

/// Shortest representation that parses back to the same double.
inline std::string format_shortest(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

/// Twelve significant digits, for CSV.
inline std::string format_sig12(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return buf.data();
}

// ---------------------------------------------------------------------------
// Report rows
// ---------------------------------------------------------------------------

struct ReportRow {
  ClaimId claim = ClaimId::Lemma15;
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> t;
  bool hypothesis_met = false;
  bool holds = false;
  bool boundary = false;
  std::optional<double> delta;
  std::optional<double> x1;
  std::optional<double> x2;
  std::optional<double> loose_lower;
  std::optional<double> tight_lower;
  std::optional<double> upper;
  std::vector<Witness> witnesses;
  std::string notes;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

enum class RowStatus { holds, fails, vacuous, boundary };

inline RowStatus status_of(bool hypothesis_met, bool holds, bool boundary) {
  if (boundary) return RowStatus::boundary;
  if (!hypothesis_met) return RowStatus::vacuous;
  return holds ? RowStatus::holds : RowStatus::fails;
}

inline RowStatus status_of(const ReportRow& r) { return status_of(r.hypothesis_met, r.holds, r.boundary); }

namespace detail {

template <class F>
std::optional<double> try_value(F&& f) {
  try {
    return f();
  } catch (const error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Evaluates one (claim, grid point) and gathers the headline numbers.
/// Degenerate parameters give a vacuous row; solver failures (a bracket the
/// theory guarantees without a sign change) give a failing row.
inline ReportRow make_row(ClaimId claim, int n, const ParamPair& p, std::optional<double> t,
                          const CheckOptions& opt = {}) {
  ReportRow row;
  row.claim = claim;
  row.n = n;
  row.alpha = p.alpha;
  row.beta = p.beta;
  if (uses_shift(claim)) row.t = t.value_or(claim == ClaimId::Thm51i ? 1.0 : 2.0);

  try {
    const auto v = verify_claim(claim, n, p, row.t, opt);
    row.claim = v.claim;
    row.hypothesis_met = v.hypothesis_met;
    row.holds = v.holds;
    row.boundary = v.boundary;
    row.witnesses = v.witnesses;
    row.notes = v.notes;
  } catch (const error& e) {
    if (e.code() == errc::unsupported_shift || e.code() == errc::invalid_parameter) throw;
    row.hypothesis_met = e.code() != errc::degenerate_parameters;
    row.holds = false;
    row.notes = e.what();
  }

  const detail::Frame frame(p);
  if (frame.supported()) {
    const ParamPair& c = frame.canonical();
    row.delta = detail::try_value([&] { return askey_delta(n, c); });
    if (n >= 1) {
      try {
        const auto x = frame.zeros(n, 0.0);
        row.x1 = x.front();
        if (n >= 2) row.x2 = x[1];
      } catch (const error&) {
      }
    }
    if (n >= 3) {
      try {
        const auto bc = bound_chain(n, c);
        row.loose_lower = bc.loose_lower;
        row.tight_lower = bc.tight_lower;
        row.upper = bc.upper;
      } catch (const error&) {
      }
    }
  }
  return row;
}

namespace detail {

inline nlohmann::ordered_json opt_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

inline std::string opt_csv(const std::optional<double>& v) { return v ? format_sig12(*v) : ""; }

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["interval"] = {w.lo, w.hi};
  j["point"] = w.point;
  j["what"] = w.what;
  return j;
}

inline nlohmann::ordered_json to_json(const InterlacingVerdict& v) {
  nlohmann::ordered_json j;
  j["claim_id"] = std::string(to_string(v.claim));
  j["hypothesis_met"] = v.hypothesis_met;
  j["holds"] = v.holds;
  j["boundary"] = v.boundary;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : v.witnesses) j["witnesses"].push_back(to_json(w));
  j["notes"] = v.notes;
  return j;
}

inline nlohmann::ordered_json to_json(const ReportRow& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = std::string(to_string(r.claim));
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["t"] = detail::opt_json(r.t);
  j["hypothesis_met"] = r.hypothesis_met;
  j["holds"] = r.holds;
  j["boundary"] = r.boundary;
  j["delta"] = detail::opt_json(r.delta);
  j["x1"] = detail::opt_json(r.x1);
  j["x2"] = detail::opt_json(r.x2);
  j["loose_lower"] = detail::opt_json(r.loose_lower);
  j["tight_lower"] = detail::opt_json(r.tight_lower);
  j["upper"] = detail::opt_json(r.upper);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  j["notes"] = r.notes;
  return j;
}

inline constexpr std::string_view kRowCsvHeader =
    "claim_id,n,alpha,beta,t,hypothesis_met,holds,boundary,delta,x1,x2,loose_lower,"
    "tight_lower,upper,witnesses,notes";

/// Witnesses flatten to "lo:hi@point" joined by ';'.
inline std::string to_csv(const ReportRow& r) {
  std::string wit;
  for (const auto& w : r.witnesses) {
    if (!wit.empty()) wit += ';';
    wit += format_sig12(w.lo) + ":" + format_sig12(w.hi) + "@" + format_sig12(w.point);
  }
  std::string out;
  out += std::string(to_string(r.claim)) + ',';
  out += std::to_string(r.n) + ',';
  out += format_sig12(r.alpha) + ',';
  out += format_sig12(r.beta) + ',';
  out += detail::opt_csv(r.t) + ',';
  out += (r.hypothesis_met ? "true," : "false,");
  out += (r.holds ? "true," : "false,");
  out += (r.boundary ? "true," : "false,");
  out += detail::opt_csv(r.delta) + ',';
  out += detail::opt_csv(r.x1) + ',';
  out += detail::opt_csv(r.x2) + ',';
  out += detail::opt_csv(r.loose_lower) + ',';
  out += detail::opt_csv(r.tight_lower) + ',';
  out += detail::opt_csv(r.upper) + ',';
  out += detail::csv_escape(wit) + ',';
  out += detail::csv_escape(r.notes);
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

enum class OutputFormat { JSONLines, CSV };

struct SweepConfig {
  std::vector<double> alpha_list;
  std::vector<double> beta_list;
  int n_min = 2;
  int n_max = 20;
  std::vector<double> t_list{2.0, 2.5, 3.0, 3.5, 4.0};
  std::vector<ClaimId> claims;
  OutputFormat output_format = OutputFormat::JSONLines;
  int parallelism = 1;
  CheckOptions options;
};

/// Throws invalid_parameter when the config cannot describe a sweep.
inline void validate(const SweepConfig& c) {
  if (c.claims.empty()) throw error(errc::invalid_parameter, "empty claim list");
  if (c.alpha_list.empty() || c.beta_list.empty()) {
    throw error(errc::invalid_parameter, "alpha and beta lists must be non-empty");
  }
  if (c.n_min < 1 || c.n_max < c.n_min) throw error(errc::invalid_parameter, "bad n range");
  if (c.parallelism < 1) throw error(errc::invalid_parameter, "parallelism must be positive");
  for (ClaimId claim : c.claims) {
    for (double a : c.alpha_list) {
      for (double b : c.beta_list) {
        const Regime r = classify(a, b).regime;
        const Regime want = claim == ClaimId::Cor22 ? Regime::QuasiOrder1Mirrored : Regime::QuasiOrder1;
        if (r != want) {
          throw error(errc::invalid_parameter,
                      "(" + format_sig12(a) + ", " + format_sig12(b) + ") is " +
                          std::string(to_string(r)) + ", claim " +
                          std::string(to_string(claim)) + " needs " + std::string(to_string(want)));
        }
      }
    }
    if (uses_shift(claim)) {
      for (double t : c.t_list) {
        if (!(t == 1.0 || (t >= 2.0 && t <= 4.0))) {
          throw error(errc::unsupported_shift, "t=" + format_sig12(t) + " outside {1} u [2,4]");
        }
      }
    }
  }
}

struct GridPoint {
  ClaimId claim;
  int n;
  double alpha;
  double beta;
  std::optional<double> t;
};

/// Grid points in canonical order: claim name, n, alpha, beta, t.
inline std::vector<GridPoint> expand_grid(const SweepConfig& c) {
  auto sorted = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto alphas = sorted(c.alpha_list);
  const auto betas = sorted(c.beta_list);
  const auto ts = sorted(c.t_list);

  std::vector<GridPoint> pts;
  for (ClaimId claim : c.claims) {
    for (int n = c.n_min; n <= c.n_max; ++n) {
      for (double a : alphas) {
        for (double b : betas) {
          if (claim == ClaimId::Thm51i) {
            pts.push_back({claim, n, a, b, 1.0});
          } else if (claim == ClaimId::Thm51ii) {
            for (double t : ts) {
              pts.push_back({t == 1.0 ? ClaimId::Thm51i : ClaimId::Thm51ii, n, a, b, t});
            }
          } else {
            pts.push_back({claim, n, a, b, std::nullopt});
          }
        }
      }
    }
  }
  auto key = [](const GridPoint& g) {
    return std::make_tuple(to_string(g.claim), g.n, g.alpha, g.beta, g.t.value_or(0.0));
  };
  std::sort(pts.begin(), pts.end(), [&](const GridPoint& a, const GridPoint& b) { return key(a) < key(b); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const GridPoint& a, const GridPoint& b) { return key(a) == key(b); }),
            pts.end());
  return pts;
}

/// Rows are computed on `parallelism` threads and returned in grid order.
inline std::vector<ReportRow> run_sweep(const SweepConfig& c) {
  validate(c);
  const auto pts = expand_grid(c);
  std::vector<ReportRow> rows(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) {
      const auto& g = pts[i];
      rows[i] = make_row(g.claim, g.n, classify(g.alpha, g.beta), g.t, c.options);
    }
  };
  const int threads = std::min<int>(c.parallelism, std::max<std::size_t>(pts.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return rows;
}

struct SweepSummary {
  int holds = 0;
  int fails = 0;
  int vacuous = 0;
  int boundary = 0;
  /// Failures on claims proved without side hypotheses.
  int unconditional_fails = 0;
};

inline SweepSummary summarize(const std::vector<ReportRow>& rows) {
  SweepSummary s;
  for (const auto& r : rows) {
    switch (status_of(r)) {
      case RowStatus::holds: ++s.holds; break;
      case RowStatus::fails:
        ++s.fails;
        if (is_unconditional(r.claim)) ++s.unconditional_fails;
        break;
      case RowStatus::vacuous: ++s.vacuous; break;
      case RowStatus::boundary: ++s.boundary; break;
    }
  }
  return s;
}

inline std::string summary_line(const SweepSummary& s) {
  return "summary: holds=" + std::to_string(s.holds) + " fails=" + std::to_string(s.fails) +
         " vacuous=" + std::to_string(s.vacuous) + " boundary=" + std::to_string(s.boundary);
}

inline std::string render_rows(const std::vector<ReportRow>& rows, OutputFormat fmt) {
  std::string out;
  if (fmt == OutputFormat::CSV) {
    out += kRowCsvHeader;
    out += '\n';
    for (const auto& r : rows) out += to_csv(r) + '\n';
  } else {
    for (const auto& r : rows) out += to_json(r).dump() + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bound table reproduction
// ---------------------------------------------------------------------------

struct Table1Result {
  reference::Table1Row ref;
  double tight_lower = 0.0;
  double zero = 0.0;
  double upper = 0.0;
  double diff_tight_lower = 0.0;
  double diff_zero = 0.0;
  double diff_upper = 0.0;
  /// Computed values satisfy tight_lower < zero < upper < -1.
  bool ordered = false;
  bool match = false;
  bool flagged = false;
};

inline std::vector<Table1Result> compute_table1() {
  std::vector<Table1Result> out;
  constexpr int n = reference::kTable1Degree;
  for (const auto& ref : reference::kTable1) {
    const ParamPair p = classify(ref.alpha, ref.beta);
    Table1Result r;
    r.ref = ref;
    const auto bc = bound_chain(n, p);
    r.tight_lower = bc.tight_lower;
    r.upper = bc.upper;
    r.zero = zeros_quasi(n, p).zeros.front();
    r.diff_tight_lower = std::abs(r.tight_lower - ref.tight_lower);
    r.diff_zero = std::abs(r.zero - ref.zero);
    r.diff_upper = std::abs(r.upper - ref.upper);
    r.ordered = r.tight_lower < r.zero && r.zero < r.upper && r.upper < -1.0;
    const bool tl_ok = r.diff_tight_lower <= reference::kTable1Tol;
    const bool z_ok = r.diff_zero <= reference::kTable1Tol;
    const bool up_ok = r.diff_upper <= reference::kTable1Tol;
    r.flagged = ref.upper_anomaly;
    r.match = tl_ok && z_ok && (ref.upper_anomaly ? r.ordered : up_ok);
    out.push_back(r);
  }
  return out;
}

inline constexpr std::string_view kTable1CsvHeader =
    "alpha,beta,tight_lower,zero,upper,ref_tight_lower,ref_zero,ref_upper,"
    "diff_tight_lower,diff_zero,diff_upper,status";

inline std::string table1_csv(const std::vector<Table1Result>& rows) {
  std::string out(kTable1CsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    const char* status = !r.match ? "mismatch" : (r.flagged ? "flagged_upper" : "ok");
    for (double v : {r.ref.alpha, r.ref.beta, r.tight_lower, r.zero, r.upper, r.ref.tight_lower,
                     r.ref.zero, r.ref.upper, r.diff_tight_lower, r.diff_zero, r.diff_upper}) {
      out += format_sig12(v);
      out += ',';
    }
    out += status;
    out += '\n';
  }
  return out;
}

}  // namespace qjacobi
