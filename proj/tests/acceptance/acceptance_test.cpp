// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <grid.hpp>
#include <qjacobi/qjacobi.hpp>

namespace qj = qjacobi;
using qj::testing::grid_pairs;
using qj::testing::kGridNMax;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  double time_limit = 0.0;  // seconds; 0 means none
};

struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      if (failed == 0) first = what;
      ++failed;
    }
  }
  std::string summary() const {
    std::string s = std::to_string(checked - failed) + "/" + std::to_string(checked) + " ok";
    if (failed) s += "; first failure: " + first;
    return s;
  }
};

std::string pt(int n, const qj::ParamPair& p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "n=%d a=%g b=%g", n, p.alpha, p.beta);
  return buf;
}

template <class F>
std::string guarded(F&& f) {
  try {
    f();
    return {};
  } catch (const qj::error& e) {
    return e.what();
  }
}

Outcome table1() {
  Outcome o;
  o.time_limit = 1.0;
  int flagged = 0;
  double worst = 0.0;
  for (const auto& r : qj::compute_table1()) {
    worst = std::max({worst, std::abs(r.diff_tight_lower), std::abs(r.diff_zero),
                      r.flagged ? 0.0 : std::abs(r.diff_upper)});
    o.pass = o.pass && r.match && r.ordered && r.flagged == r.ref.upper_anomaly;
    flagged += r.flagged;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "5 rows, max |diff| %.2e (tol 1e-4), %d flagged upper bound (row -0.93,-1.05)",
                worst, flagged);
  o.detail = buf;
  return o;
}

Outcome askey_remark() {
  Outcome o;
  o.time_limit = 1.0;
  double worst = 0.0;
  for (const auto& ref : qj::reference::kAskeyExamples) {
    const auto p = qj::classify(ref.alpha, ref.beta);
    const double delta = qj::askey_delta(ref.n, p);
    const double x2 = qj::zeros(ref.n, p)[1];
    worst = std::max({worst, std::abs(delta - ref.delta), std::abs(x2 - ref.x2)});
    const bool inter = qj::interlace_equal(qj::zeros(ref.n, p).zeros, qj::zeros(ref.n, p.shifted_beta(2.0)).zeros);
    o.pass = o.pass && inter == ref.interlacing && (delta < x2) == ref.interlacing;
  }
  o.pass = o.pass && worst <= qj::reference::kAskeyTol;
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |diff| %.2e (tol 1e-5)", worst);
  o.detail = buf;
  return o;
}

Outcome biconditional() {
  Outcome o;
  o.time_limit = 30.0;
  const double alphas[] = {-0.9, -0.6, 0.0, 0.5, 0.93, 1.5, 2.35, 4.0, 6.0, 8.3};
  const double betas[] = {-1.9, -1.7, -1.5, -1.3, -1.05};
  const int degrees[] = {3, 7, 12, 20};
  Tally t;
  int excluded = 0, below = 0, above = 0;
  for (double a : alphas) {
    for (double b : betas) {
      for (int n : degrees) {
        const auto p = qj::classify(a, b);
        const std::string err = guarded([&] {
          const auto x = qj::zeros(n, p).zeros;
          const auto z = qj::zeros(n, p.shifted_beta(2.0)).zeros;
          const double delta = qj::askey_delta(n, p);
          if (std::abs(delta - x[1]) <= 1e-8) {
            ++excluded;
            return;
          }
          const bool cond = delta < x[1];
          (cond ? below : above) += 1;
          t.record(qj::interlace_equal(x, z) == cond, pt(n, p));
        });
        if (!err.empty()) t.record(false, pt(n, p) + ": " + err);
      }
    }
  }
  o.pass = t.failed == 0 && t.checked + excluded == 200;
  o.detail = t.summary() + " (delta<x2: " + std::to_string(below) + ", delta>x2: " + std::to_string(above) +
             ", ties excluded: " + std::to_string(excluded) + ")";
  return o;
}

Outcome unconditional_suite() {
  Outcome o;
  o.time_limit = 60.0;
  struct Item {
    qj::ClaimId claim;
    int n_floor;
    std::optional<double> t;
  };
  std::vector<Item> items = {{qj::ClaimId::Lemma15, 1, {}},       {qj::ClaimId::Thm21, 1, {}},
                             {qj::ClaimId::CorNonInterlace, 3, {}}, {qj::ClaimId::Thm43, 2, {}},
                             {qj::ClaimId::Eq45, 1, {}}};
  for (double t : {2.0, 2.5, 3.0, 3.5, 4.0}) items.push_back({qj::ClaimId::Thm51ii, 3, t});
  Tally t;
  for (const auto& p : grid_pairs()) {
    for (int n = 2; n <= kGridNMax; ++n) {
      for (const auto& it : items) {
        if (n < it.n_floor) continue;
        const auto row = qj::make_row(it.claim, n, p, it.t);
        std::string what = std::string(qj::to_string(it.claim)) + " " + pt(n, p);
        if (it.t) what += " t=" + std::to_string(*it.t);
        t.record(qj::status_of(row) == qj::RowStatus::holds, what + ": " + row.notes);
      }
    }
  }
  o.pass = t.failed == 0;
  o.detail = t.summary();
  return o;
}

Outcome bound_chain() {
  Outcome o;
  Tally t;
  double tightest = 1.0;
  for (const auto& p : grid_pairs()) {
    for (int n = 3; n <= kGridNMax; ++n) {
      const std::string err = guarded([&] {
        const auto bc = qj::bound_chain(n, p);
        const double x1 = qj::zeros(n, p)[0];
        const double chain[] = {bc.loose_lower, bc.tight_lower, x1, bc.upper, -1.0};
        bool ok = true;
        for (int i = 0; i + 1 < 5; ++i) {
          ok = ok && chain[i + 1] - chain[i] > 1e-12;
          tightest = std::min(tightest, chain[i + 1] - chain[i]);
        }
        t.record(ok, pt(n, p));
      });
      if (!err.empty()) t.record(false, pt(n, p) + ": " + err);
    }
  }
  o.pass = t.failed == 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "; smallest gap %.3e", tightest);
  o.detail = t.summary() + buf;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Tally t;
  double worst = 0.0;
  auto compare = [&](int n, const qj::ParamPair& p) {
    const std::string err = guarded([&] {
      const auto z = qj::zeros(n, p);
      const auto r = qj::oracle_zeros(n, p);
      bool ok = z.size() == r.size();
      for (std::size_t i = 0; ok && i < z.size(); ++i) {
        worst = std::max(worst, std::abs(z[i] - r[i]));
        ok = std::abs(z[i] - r[i]) <= 1e-10;
      }
      t.record(ok, pt(n, p) + " " + std::string(qj::to_string(z.method)));
    });
    if (!err.empty()) t.record(false, pt(n, p) + ": " + err);
  };
  for (const auto& p : grid_pairs()) {
    for (int n = 2; n <= 10; ++n) {
      compare(n, p);                      // quasi-orthogonal
      compare(n, p.shifted_beta(1.0));    // orthogonal, beta+1 in (-1,0)
      compare(n, p.shifted_beta(2.0));    // orthogonal, beta+2 in (0,1)
    }
  }
  o.pass = t.failed == 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "; max |diff| %.2e (tol 1e-10)", worst);
  o.detail = t.summary() + buf;
  return o;
}

Outcome identity_residuals() {
  Outcome o;
  Tally t;
  double worst = 0.0;
  qj::testing::Gen g(0xac7);
  for (const auto& p : grid_pairs()) {
    for (int n = 2; n <= kGridNMax; ++n) {
      for (int k = 0; k < 100; ++k) {
        const double x = g.uniform(-1.5, 1.5);
        for (auto id : qj::kAllRelations) {
          for (auto how : {qj::Evaluator::recurrence, qj::Evaluator::sum}) {
            const double r = std::abs(qj::mixed_relation_residual(id, n, p, x, how));
            worst = std::max(worst, r);
            t.record(r < qj::kRelationTol, std::string(qj::to_string(id)) + " " + pt(n, p));
          }
        }
      }
    }
  }
  o.pass = t.failed == 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "; max residual %.2e (tol 1e-8)", worst);
  o.detail = t.summary() + buf;
  return o;
}

Outcome monotonicity() {
  Outcome o;
  Tally smallest, largest, shift;
  const double ts[] = {2.0, 2.5, 3.0, 3.5, 4.0};
  for (const auto& p : grid_pairs()) {
    const auto m = qj::reflect(p);
    for (int n = 3; n <= kGridNMax; ++n) {
      smallest.record(qj::zeros(n - 1, p)[0] < qj::zeros(n, p)[0], pt(n, p));
      const auto big = qj::zeros(n, m).zeros;
      const auto prev = qj::zeros(n - 1, m).zeros;
      largest.record(big.back() < prev.back(), pt(n, m));
      for (int i = 0; i + 1 < 5; ++i) {
        const auto lo = qj::zeros(n - 2, p.shifted_beta(ts[i])).zeros;
        const auto hi = qj::zeros(n - 2, p.shifted_beta(ts[i + 1])).zeros;
        bool ok = true;
        for (std::size_t k = 0; k < lo.size(); ++k) ok = ok && lo[k] < hi[k];
        shift.record(ok, pt(n - 2, p) + " t=" + std::to_string(ts[i]));
      }
    }
  }
  o.pass = smallest.failed == 0 && largest.failed == 0 && shift.failed == 0;
  o.detail = "x_{1,n} increasing " + smallest.summary() + "; mirrored largest decreasing " + largest.summary() +
             "; zeros increasing in t " + shift.summary();
  return o;
}

Outcome symmetry() {
  Outcome o;
  Tally eval, verdict;
  qj::testing::Gen g(0x5e1f);
  for (const auto& p : grid_pairs()) {
    const auto m = qj::reflect(p);
    for (int n = 0; n <= kGridNMax; ++n) {
      for (int k = 0; k < 20; ++k) {
        const double x = g.uniform(-2.0, 2.0);
        const double lhs = qj::eval_recurrence(n, p, -x);
        const double rhs = (n % 2 ? -1.0 : 1.0) * qj::eval_recurrence(n, m, x);
        eval.record(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)), pt(n, p));
      }
    }
    for (int n = 2; n <= kGridNMax; ++n) {
      for (qj::ClaimId c : qj::kAllClaims) {
        if (c == qj::ClaimId::Cor22) continue;
        std::optional<double> t;
        if (qj::uses_shift(c)) t = c == qj::ClaimId::Thm51i ? 1.0 : 3.0;
        const auto a = qj::make_row(c, n, p, t);
        const auto b = qj::make_row(c, n, m, t);
        verdict.record(a.holds == b.holds && a.hypothesis_met == b.hypothesis_met && a.boundary == b.boundary,
                       std::string(qj::to_string(c)) + " " + pt(n, p));
      }
    }
  }
  o.pass = eval.failed == 0 && verdict.failed == 0;
  o.detail = "reflection identity " + eval.summary() + "; mirrored verdicts " + verdict.summary();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1 bound table reproduction", table1},
      {"AC2 threshold examples (n=5, alpha=2.35)", askey_remark},
      {"AC3 delta < x2 biconditional on 200-point grid", biconditional},
      {"AC4 unconditional claims over standard grid", unconditional_suite},
      {"AC5 bound chain strict for n >= 3", bound_chain},
      {"AC6 solver vs oracle zeros (n <= 10)", oracle_equivalence},
      {"AC7 mixed recurrence residuals", identity_residuals},
      {"AC8 monotonicity in n and t", monotonicity},
      {"AC9 reflection symmetry", symmetry},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.time_limit > 0.0 && secs >= o.time_limit) {
      o.pass = false;
      o.detail += "; over time limit " + std::to_string(o.time_limit) + " s";
    }
    failures += !o.pass;
    std::printf("%s %s [%.3f s] %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures ? 1 : 0;
}
