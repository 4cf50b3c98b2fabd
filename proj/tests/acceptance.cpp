// Acceptance suite: every criterion below runs at its pinned tolerance and
// prints exactly one PASS/FAIL line. The binary exits nonzero when any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "einalg/fixtures.hpp"
#include "einalg/geninv.hpp"
#include "einalg/io.hpp"
#include "einalg/rol.hpp"
#include "oracles.hpp"

using namespace einalg;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << criterion << " " << what << ": "
            << detail << "\n";
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DenseTensor prod(const DenseTensor& a, const DenseTensor& b) { return einstein_product(a, b); }

// ---- criterion 1: worked-example reproduction via the direct route ----
void criterion1(const ProductExampleFixture& fix) {
  const auto t0 = std::chrono::steady_clock::now();
  const DenseTensor ab = prod(fix.a, fix.b);
  const WeightPair w(fix.m, fix.n);
  const DenseTensor x = wmp_inverse(ab, w);
  const double dev = max_abs_distance(x, fix.expected_winv);
  const CheckReport penrose = penrose_report(ab, x, w, 1e-10);
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << "max-abs dev " << format_double(dev) << " (<= 5e-4), penrose max "
         << format_double(penrose.max_residual()) << " (<= 1e-10), " << format_double(elapsed)
         << " s (< 1)";
  report(1, "worked-example direct route", dev <= 5e-4 && penrose.passed && elapsed < 1.0,
         detail.str());
}

// ---- criterion 2: constructive route with printed intermediates ----
void criterion2(const ProductExampleFixture& fix) {
  const ProductInverseTrace t =
      wmp_product_via_intermediates(fix.a, fix.b, fix.m, fix.n, fix.p);
  const double dev_b1 = max_abs_distance(t.b1, fix.expected_b1);
  const double dev_x = max_abs_distance(t.a1_winv, fix.expected_x);
  const double dev_y = max_abs_distance(t.b1_winv, fix.expected_y);
  const double dev_final = max_abs_distance(t.result, fix.expected_winv);
  const DenseTensor direct = wmp_inverse(prod(fix.a, fix.b), WeightPair(fix.m, fix.n));
  const double agree = relative_distance(t.result, direct);
  std::ostringstream detail;
  detail << "devs b1 " << format_double(dev_b1) << ", x " << format_double(dev_x) << ", y "
         << format_double(dev_y) << ", final " << format_double(dev_final)
         << " (<= 5e-4); route agreement " << format_double(agree) << " (<= 1e-10)";
  const bool ok = dev_b1 <= 5e-4 && dev_x <= 5e-4 && dev_y <= 5e-4 && dev_final <= 5e-4 &&
                  agree <= 1e-10;
  report(2, "intermediate-array route", ok, detail.str());
}

// ---- criterion 3: counterexample chain, rank, and CLI exit code ----
void criterion3(const CounterexampleFixture& fix) {
  const DenseTensor atma = prod(prod(conj_transpose(fix.a), fix.m), fix.a);
  const bool exact = max_abs_distance(atma, fix.expected_atma) == 0.0;
  const bool rank1 = reshape_rank(atma) == 1;

  const std::string cmd = std::string(EINALG_CLI_PATH) + " wpinv -i " + EINALG_FIXTURE_DIR +
                          "/counterexample_a.json --weight-m " + EINALG_FIXTURE_DIR +
                          "/counterexample_m.json --weight-n " + EINALG_FIXTURE_DIR +
                          "/counterexample_n.json --out /tmp/einalg_acceptance_wpinv.json" +
                          " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const int code = WEXITSTATUS(status);
  std::ostringstream detail;
  detail << "product exact " << (exact ? "yes" : "no") << ", rank "
         << reshape_rank(atma) << " (= 1), wpinv exit code " << code << " (= 3)";
  report(3, "counterexample study", exact && rank1 && code == 3, detail.str());
}

// ---- criterion 4: oracle equivalence over seeded random tensors ----
void criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(424242);
  const std::vector<EinsteinShape> shapes = {
      EinsteinShape({2}, {3}),       EinsteinShape({4}, {2}),
      EinsteinShape({1}, {3}),       EinsteinShape({3, 2}, {4}),
      EinsteinShape({2}, {2, 2}),    EinsteinShape({4}, {2, 3}),
      EinsteinShape({2, 2}, {3, 2}), EinsteinShape({3}, {2, 2, 2}),
      EinsteinShape({2, 3, 2}, {4}), EinsteinShape({1, 4}, {2, 2}),
  };
  int tested = 0;
  double worst = 0.0;
  while (tested < 200) {
    const EinsteinShape& shape = shapes[static_cast<size_t>(tested) % shapes.size()];
    const DenseTensor a = random_tensor(rng, shape);
    // The normal-equations oracle squares the condition number; keep
    // instances whose smallest singular value is safely nonzero.
    const SvdFactors f = tensor_svd(a);
    const double smin = f.sigma[std::min(f.sigma.size(), static_cast<size_t>(
                                    std::min(shape.row_count(), shape.col_count()))) - 1];
    if (smin < 1e-2 * f.sigma.front()) continue;
    const DenseTensor mine = mp_inverse(a);
    const DenseTensor ref = oracles::pinv_oracle(a);
    worst = std::max(worst, relative_distance(mine, ref));
    ++tested;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << tested << " full-rank instances, worst relative deviation " << format_double(worst)
         << " (<= 1e-8), " << format_double(elapsed) << " s (< 60)";
  report(4, "normal-equations oracle equivalence", worst <= 1e-8 && elapsed < 60.0,
         detail.str());
}

// ---- criterion 5: Penrose and weighted-Penrose suites ----
void criterion5() {
  Rng rng(515151);
  const std::vector<EinsteinShape> shapes = {
      EinsteinShape({2, 2}, {3}), EinsteinShape({3}, {2, 2}), EinsteinShape({2}, {2, 3}),
      EinsteinShape({4, 2}, {2})};
  bool ok = true;
  double worst = 0.0;
  for (int trial = 0; trial < 120; ++trial) {
    const EinsteinShape& shape = shapes[static_cast<size_t>(trial) % shapes.size()];
    const DenseTensor a = random_tensor(rng, shape);
    const CheckReport plain = penrose_report(a, mp_inverse(a), std::nullopt, 1e-10);
    const WeightPair w(random_hpd(rng, shape.row_modes()), random_hpd(rng, shape.col_modes()));
    const CheckReport weighted = penrose_report(a, wmp_inverse(a, w), w, 1e-10);
    ok = ok && plain.passed && weighted.passed;
    worst = std::max({worst, plain.max_residual(), weighted.max_residual()});
  }
  std::ostringstream detail;
  detail << "120 instances, worst residual " << format_double(worst) << " (<= 1e-10)";
  report(5, "penrose suites", ok, detail.str());
}

// ---- criterion 6: decomposition suites ----
void criterion6() {
  Rng rng(616161);
  bool ok = true;
  double worst_svd = 0.0, worst_frd = 0.0, worst_witness = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const EinsteinShape shape =
        (trial % 2 == 0) ? EinsteinShape({2, 2}, {3}) : EinsteinShape({3}, {2, 2});
    DenseTensor a = random_tensor(rng, shape);
    if (trial % 3 == 0) {
      // rank-deficient input through an inner contraction
      a = prod(random_tensor(rng, EinsteinShape(shape.row_modes(), {2})),
               random_tensor(rng, EinsteinShape({2}, shape.col_modes())));
    }
    const SvdFactors f = tensor_svd(a);
    const DenseTensor rebuilt = prod(prod(f.u, f.d), conj_transpose(f.v));
    const double svd_resid = distance(rebuilt, a) / std::max(1.0, a.frobenius_norm());
    const DenseTensor iu = identity_tensor(shape.row_modes());
    const DenseTensor iv = identity_tensor(shape.col_modes());
    const double unit = std::max(
        distance(prod(f.u, conj_transpose(f.u)), iu) / std::max(1.0, f.u.frobenius_norm()),
        distance(prod(f.v, conj_transpose(f.v)), iv) / std::max(1.0, f.v.frobenius_norm()));
    worst_svd = std::max({worst_svd, svd_resid, unit});

    const FrdFactors frd = full_rank_decomposition(a);
    const DenseTensor ir = identity_tensor({frd.r});
    const double recon = relative_distance(prod(frd.f, frd.g), a);
    const double left = relative_distance(prod(mp_inverse(frd.f), frd.f), ir);
    const double right = relative_distance(prod(frd.g, mp_inverse(frd.g)), ir);
    worst_frd = std::max({worst_frd, recon, left, right});

    const DenseTensor b = random_well_conditioned(rng, {frd.r});
    const FrdFactors other = frd_transform_witness(frd, b);
    const DenseTensor b_inv = inverse(b);
    const double w1 =
        relative_distance(mp_inverse(other.f), prod(b_inv, mp_inverse(frd.f)));
    const double w2 = relative_distance(mp_inverse(other.g), prod(mp_inverse(frd.g), b));
    worst_witness = std::max({worst_witness, w1, w2});
  }
  ok = worst_svd <= 1e-10 && worst_frd <= 1e-10 && worst_witness <= 1e-8;
  std::ostringstream detail;
  detail << "40 instances: svd worst " << format_double(worst_svd) << " (<= 1e-10), frd worst "
         << format_double(worst_frd) << " (<= 1e-10), witness worst "
         << format_double(worst_witness) << " (<= 1e-8)";
  report(6, "decomposition suites", ok, detail.str());
}

// ---- criterion 7: identity catalog ----
void criterion7() {
  const CatalogSummary s = run_catalog(777777, 50, 1e-8);
  bool ok = true;
  double worst = 0.0;
  int total = 0;
  for (const CaseSummary& c : s.cases) {
    ok = ok && c.failures == 0 && c.instances >= 50;
    worst = std::max(worst, c.max_residual);
    total += c.instances;
  }
  std::ostringstream detail;
  detail << s.cases.size() << " cases x 50 seeded instances (" << total
         << " total), zero failures: " << (s.all_passed() ? "yes" : "no") << ", worst residual "
         << format_double(worst);
  report(7, "identity catalog", ok, detail.str());
}

// ---- criterion 8: equivalence theorems, zero iff-disagreements ----
void criterion8() {
  constexpr double kTol = 1e-8;
  int disagreements = 0;
  int conforming = 0;

  {  // unweighted and weighted reverse-order equivalences
    Rng rng(888801);
    for (int trial = 0; trial < 500; ++trial) {
      const bool conform = trial % 2 == 0;
      const DenseTensor a = random_tensor(rng, EinsteinShape({3}, {4}));
      const DenseTensor m = random_hpd(rng, {3});
      const DenseTensor n = random_hpd(rng, {3});
      const DenseTensor p = random_hpd(rng, {4});
      DenseTensor b_plain, b_weighted;
      if (conform) {
        const DenseTensor c = random_well_conditioned(rng, {3});
        b_plain = prod(conj_transpose(a), c);
        b_weighted = prod(weighted_conj_transpose(a, p, m), c);
      } else {
        b_plain = random_tensor(rng, EinsteinShape({4}, {3}));
        b_weighted = b_plain;
      }
      const RolReport r1 = check_rol(a, b_plain, kTol);
      const RolReport r2 = check_weighted_rol(a, b_weighted, m, n, p, kTol);
      if (r1.law_holds != r1.conditions_hold) ++disagreements;
      if (r2.law_holds != r2.conditions_hold) ++disagreements;
      conforming += (r1.conditions_hold ? 1 : 0) + (r2.conditions_hold ? 1 : 0);
    }
  }

  int catalog_instances = 0;
  for (const char* id : {"rv2-corollary", "iff-intermediate"}) {
    const CatalogSummary s = run_catalog(888802, 250, kTol, id);
    for (const CaseSummary& c : s.cases) {
      catalog_instances += c.instances;
      disagreements += c.failures;
    }
  }

  std::ostringstream detail;
  detail << 1000 + catalog_instances << " mixed instances (" << conforming
         << " conforming pairs), disagreements " << disagreements << " (= 0)";
  report(8, "equivalence theorems", disagreements == 0, detail.str());
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const ProductExampleFixture product_fix = load_product_example(EINALG_FIXTURE_DIR);
    const CounterexampleFixture counter_fix = load_counterexample(EINALG_FIXTURE_DIR);
    criterion1(product_fix);
    criterion2(product_fix);
    criterion3(counter_fix);
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance-suite aborted: " << e.what() << "\n";
    return 1;
  }
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
            << format_double(seconds_since(t0)) << " s)\n";
  return g_failures == 0 ? 0 : 1;
}
