#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <qjacobi/report.hpp>

namespace qj = qjacobi;
using qj::ClaimId;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

qj::SweepConfig lemma_config() {
  qj::SweepConfig c;
  c.alpha_list = {0.93};
  c.beta_list = {-1.9};
  c.n_min = 2;
  c.n_max = 10;
  c.claims = {ClaimId::Lemma15};
  return c;
}

std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  return out;
}

}  // namespace

TEST(Format, ShortestRoundTrips) {
  for (double v : {0.1, -1.00287, 1.0 / 3.0, 1e-300, -2.74757e5}) {
    EXPECT_EQ(std::stod(qj::format_shortest(v)), v);
  }
  EXPECT_EQ(qj::format_shortest(0.5), "0.5");
}

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(qj::format_sig12(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(qj::format_sig12(-1.5), "-1.5");
}

TEST(ParseClaim, KnownAndUnknownNames) {
  for (ClaimId c : qj::kAllClaims) EXPECT_EQ(qj::parse_claim(qj::to_string(c)), c);
  EXPECT_EQ(qj::parse_claim("thm51"), ClaimId::Thm51ii);
  EXPECT_FALSE(qj::parse_claim("nope").has_value());
}

TEST(Sweep, LemmaOverDegreesTwoToTen) {
  const auto rows = qj::run_sweep(lemma_config());
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& r : rows) EXPECT_EQ(qj::status_of(r), qj::RowStatus::holds) << r.notes;
  const auto s = qj::summarize(rows);
  EXPECT_EQ(s.holds, 9);
  EXPECT_EQ(qj::summary_line(s), "summary: holds=9 fails=0 vacuous=0 boundary=0");
}

TEST(Sweep, ThresholdGridCarriesDeltaAndX2) {
  qj::SweepConfig c;
  c.alpha_list = {2.35};
  c.beta_list = {-1.9, -1.5};
  c.n_min = c.n_max = 5;
  c.claims = {ClaimId::Thm41};
  const auto rows = qj::run_sweep(c);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].beta, -1.9);
  EXPECT_NEAR(*rows[0].delta, -0.855422, 1e-6);
  EXPECT_NEAR(*rows[0].x2, -0.961637, 1e-6);
  EXPECT_NEAR(*rows[1].delta, -0.922179, 1e-6);
  EXPECT_NEAR(*rows[1].x2, -0.885666, 1e-6);
  for (const auto& r : rows) EXPECT_TRUE(r.holds);
}

TEST(Sweep, EmptyClaimListIsInvalid) {
  auto c = lemma_config();
  c.claims.clear();
  try {
    qj::run_sweep(c);
    FAIL() << "expected throw";
  } catch (const qj::error& e) {
    EXPECT_EQ(e.code(), qj::errc::invalid_parameter);
  }
}

TEST(Sweep, BetaOutsideQuasiBandIsInvalid) {
  auto c = lemma_config();
  c.beta_list = {-0.5};
  EXPECT_THROW(qj::run_sweep(c), qj::error);
}

TEST(Sweep, ShiftOutsideProvenRangeIsRejected) {
  auto c = lemma_config();
  c.claims = {ClaimId::Thm51ii};
  c.t_list = {1.5};
  try {
    qj::run_sweep(c);
    FAIL() << "expected throw";
  } catch (const qj::error& e) {
    EXPECT_EQ(e.code(), qj::errc::unsupported_shift);
  }
}

TEST(Sweep, CanonicalOrderIsLexicographic) {
  qj::SweepConfig c;
  c.alpha_list = {2.35, -0.9};
  c.beta_list = {-1.05, -1.9};
  c.n_min = 3;
  c.n_max = 4;
  c.claims = {ClaimId::Thm51ii, ClaimId::Eq45};
  c.t_list = {3.0, 2.0};
  const auto rows = qj::run_sweep(c);
  ASSERT_EQ(rows.size(), 2u * 2 * 2 + 2u * 2 * 2 * 2);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    const auto key = [](const qj::ReportRow& r) {
      return std::tuple(std::string(qj::to_string(r.claim)), r.n, r.alpha, r.beta, r.t.value_or(0.0));
    };
    EXPECT_LT(key(a), key(b));
  }
}

TEST(Sweep, ParallelMatchesSerial) {
  qj::SweepConfig c;
  c.alpha_list = {-0.9, 0.93, 8.3};
  c.beta_list = {-1.9, -1.05};
  c.n_min = 2;
  c.n_max = 12;
  c.claims = {ClaimId::Thm41, ClaimId::Thm43, ClaimId::Thm21};
  const auto serial = qj::run_sweep(c);
  c.parallelism = 4;
  const auto parallel = qj::run_sweep(c);
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(qj::render_rows(serial, qj::OutputFormat::CSV), qj::render_rows(parallel, qj::OutputFormat::CSV));
}

TEST(Sweep, DegenerateGridPointIsVacuous) {
  qj::SweepConfig c;
  c.alpha_list = {-0.5};
  c.beta_list = {-1.5};
  c.n_min = 2;
  c.n_max = 4;
  c.claims = {ClaimId::Lemma15};
  const auto s = qj::summarize(qj::run_sweep(c));
  EXPECT_EQ(s.vacuous, 3);
  EXPECT_EQ(s.unconditional_fails, 0);
}

TEST(Rows, JsonKeysInFixedOrder) {
  const auto row = qj::make_row(ClaimId::Thm41, 5, qj::classify(2.35, -1.5), std::nullopt);
  const auto j = qj::to_json(row);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> want = {"claim_id", "n", "alpha", "beta", "t", "hypothesis_met",
                                         "holds", "boundary", "delta", "x1", "x2", "loose_lower",
                                         "tight_lower", "upper", "witnesses", "notes"};
  EXPECT_EQ(keys, want);
  EXPECT_EQ(j["delta"].get<double>(), *row.delta);
}

TEST(Rows, CsvHasOneFieldPerHeaderColumn) {
  const auto row = qj::make_row(ClaimId::Thm61, 15, qj::classify(0.93, -1.9), std::nullopt);
  const auto header = split(std::string(qj::kRowCsvHeader), ',');
  const auto fields = csv_fields(qj::to_csv(row));
  EXPECT_EQ(header.size(), fields.size());
  EXPECT_EQ(fields[0], "thm61");
  EXPECT_EQ(fields[13], qj::format_sig12(*row.upper));
  EXPECT_EQ(fields.back(), row.notes);
}

TEST(Rows, MakeRowIsDeterministic) {
  const auto p = qj::classify(-0.9, -1.55);
  EXPECT_EQ(qj::make_row(ClaimId::Thm21, 11, p, std::nullopt), qj::make_row(ClaimId::Thm21, 11, p, std::nullopt));
}

TEST(Table1, RowsMatchExceptFlaggedUpper) {
  const auto rows = qj::compute_table1();
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.match);
    EXPECT_TRUE(r.ordered);
    EXPECT_EQ(r.flagged, r.ref.upper_anomaly);
  }
  EXPECT_TRUE(rows[2].flagged);
  EXPECT_NEAR(rows[2].upper, -1.000453246, 1e-9);
}

TEST(Table1, CsvRoundTripsNumericValues) {
  const auto rows = qj::compute_table1();
  const auto csv = qj::table1_csv(rows);
  const auto lines = split(csv, '\n');
  ASSERT_EQ(lines[0], qj::kTable1CsvHeader);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto f = split(lines[i + 1], ',');
    ASSERT_EQ(f.size(), 12u);
    const double values[] = {rows[i].ref.alpha, rows[i].ref.beta, rows[i].tight_lower, rows[i].zero,
                             rows[i].upper};
    for (int k = 0; k < 5; ++k) {
      EXPECT_EQ(qj::format_sig12(std::stod(f[k])), qj::format_sig12(values[k]));
      EXPECT_NEAR(std::stod(f[k]), values[k], 5e-12 * std::abs(values[k]));
    }
    EXPECT_EQ(f[11], rows[i].flagged ? "flagged_upper" : "ok");
  }
  EXPECT_EQ(csv, qj::table1_csv(qj::compute_table1()));
}
