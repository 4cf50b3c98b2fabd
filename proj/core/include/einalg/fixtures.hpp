#ifndef EINALG_FIXTURES_HPP
#define EINALG_FIXTURES_HPP

#include <string>
#include <vector>

#include "einalg/report.hpp"
#include "einalg/tensor.hpp"

namespace einalg {

/// The worked three-factor example: A (3 x 2x4), B (2x4 x 3), weights
/// M, N (3x3) and P (2x4 x 2x4), plus the expected intermediate and final
/// arrays it must reproduce (printed to four decimals, hence the 5e-4
/// tolerance used by the studies).
struct ProductExampleFixture {
  DenseTensor a, b, m, n, p;
  DenseTensor expected_b1, expected_a1, expected_x, expected_y, expected_winv;
  bool p_is_hpd = false;  // verified numerically at load time
};

/// The inadmissible-weight counterexample: A (2x3 x 2), Hermitian indefinite
/// weights M (2x3 x 2x3) and N (2 x 2), and the expected exact product
/// A^T * M * A.
struct CounterexampleFixture {
  DenseTensor a, m, n;
  DenseTensor expected_atma;
};

/// Loads a fixture tensor after verifying its FNV-1a checksum against
/// manifest.json in the same directory; throws ParseError on drift.
DenseTensor load_fixture_tensor(const std::string& dir, const std::string& name);

ProductExampleFixture load_product_example(const std::string& dir);
CounterexampleFixture load_counterexample(const std::string& dir);

/// Runs the product-example study: direct weighted inverse of a*b against
/// the expected matrix, both constructive routes, intermediate arrays, and
/// the weighted Penrose residuals. max_dev_tol bounds deviations from the
/// expected four-decimal arrays; residual_tol bounds the Penrose residuals
/// and the agreement between routes.
std::vector<CheckReport> run_product_example_study(const ProductExampleFixture& fix,
                                                   double max_dev_tol = 5e-4,
                                                   double residual_tol = 1e-10);

/// Runs the counterexample study: exact product reproduction, its reshaping
/// rank, rejection of the indefinite weights, and the non-existence sweep
/// over candidate inverses (no candidate satisfies all four generalized
/// weighted conditions).
std::vector<CheckReport> run_counterexample_study(const CounterexampleFixture& fix,
                                                  double tol = 1e-10);

}  // namespace einalg

#endif  // EINALG_FIXTURES_HPP
