#include "einalg/fixtures.hpp"

#include <cmath>

#include "einalg/geninv.hpp"
#include "einalg/io.hpp"
#include "einalg/rol.hpp"
#include "json.hpp"

namespace einalg {

namespace {

std::string checksum_for(const std::string& dir, const std::string& name) {
  const std::string manifest_text = read_file(dir + "/manifest.json");
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(manifest_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(dir + "/manifest.json: " + e.what());
  }
  if (!manifest.contains(name) || !manifest[name].is_string()) {
    throw ParseError("manifest.json has no checksum for " + name);
  }
  return manifest[name].get<std::string>();
}

}  // namespace

DenseTensor load_fixture_tensor(const std::string& dir, const std::string& name) {
  const std::string bytes = read_file(dir + "/" + name);
  const std::string expected = checksum_for(dir, name);
  const std::string actual = fnv1a64_hex(bytes);
  if (actual != expected) {
    throw ParseError("fixture " + name + " drifted from its transcription: checksum " + actual +
                     " != " + expected);
  }
  return tensor_from_json_text(bytes);
}

ProductExampleFixture load_product_example(const std::string& dir) {
  ProductExampleFixture f;
  f.a = load_fixture_tensor(dir, "product_example_a.json");
  f.b = load_fixture_tensor(dir, "product_example_b.json");
  f.m = load_fixture_tensor(dir, "product_example_m.json");
  f.n = load_fixture_tensor(dir, "product_example_n.json");
  f.p = load_fixture_tensor(dir, "product_example_p.json");
  f.expected_b1 = load_fixture_tensor(dir, "product_example_expected_b1.json");
  f.expected_a1 = load_fixture_tensor(dir, "product_example_expected_a1.json");
  f.expected_x = load_fixture_tensor(dir, "product_example_expected_x.json");
  f.expected_y = load_fixture_tensor(dir, "product_example_expected_y.json");
  f.expected_winv = load_fixture_tensor(dir, "product_example_expected_winv.json");
  try {
    hpd_sqrt(f.p);
    f.p_is_hpd = true;
  } catch (const NotPositiveDefinite&) {
    f.p_is_hpd = false;
  }
  return f;
}

CounterexampleFixture load_counterexample(const std::string& dir) {
  CounterexampleFixture f;
  f.a = load_fixture_tensor(dir, "counterexample_a.json");
  f.m = load_fixture_tensor(dir, "counterexample_m.json");
  f.n = load_fixture_tensor(dir, "counterexample_n.json");
  f.expected_atma = load_fixture_tensor(dir, "counterexample_expected_atma.json");
  return f;
}

std::vector<CheckReport> run_product_example_study(const ProductExampleFixture& fix,
                                                   double max_dev_tol, double residual_tol) {
  std::vector<CheckReport> out;
  out.push_back(CheckReport::make("middle-weight-hpd", {{"violation", fix.p_is_hpd ? 0.0 : 1.0}},
                                  0.5));

  const DenseTensor ab = einstein_product(fix.a, fix.b);
  const WeightPair w_mn(fix.m, fix.n);
  const DenseTensor direct = wmp_inverse(ab, w_mn);
  out.push_back(CheckReport::make(
      "direct-weighted-inverse", {{"max-dev", max_abs_distance(direct, fix.expected_winv)}},
      max_dev_tol));
  out.push_back(penrose_report(ab, direct, w_mn, residual_tol));

  const ProductInverseTrace via =
      wmp_product_via_intermediates(fix.a, fix.b, fix.m, fix.n, fix.p);
  out.push_back(CheckReport::make("intermediates-route",
                                  {{"b1-dev", max_abs_distance(via.b1, fix.expected_b1)},
                                   {"a1-dev", max_abs_distance(via.a1, fix.expected_a1)},
                                   {"x-dev", max_abs_distance(via.a1_winv, fix.expected_x)},
                                   {"y-dev", max_abs_distance(via.b1_winv, fix.expected_y)},
                                   {"final-dev", max_abs_distance(via.result, fix.expected_winv)}},
                                  max_dev_tol));
  out.push_back(CheckReport::make("route-agreement",
                                  {{"residual", relative_distance(via.result, direct)}},
                                  residual_tol));

  const ProductInverseTrace alt = wmp_product_via_b1_first(fix.a, fix.b, fix.m, fix.n, fix.p);
  out.push_back(CheckReport::make("b1-first-route",
                                  {{"final-dev", max_abs_distance(alt.result, fix.expected_winv)}},
                                  max_dev_tol));
  return out;
}

std::vector<CheckReport> run_counterexample_study(const CounterexampleFixture& fix, double tol) {
  std::vector<CheckReport> out;
  const DenseTensor atma =
      einstein_product(einstein_product(conj_transpose(fix.a), fix.m), fix.a);
  // Integer data: the product must come out exact in double precision.
  out.push_back(CheckReport::make("product-exact",
                                  {{"max-dev", max_abs_distance(atma, fix.expected_atma)}}, 0.0));
  out.push_back(CheckReport::make(
      "product-rank-deficient",
      {{"violation", reshape_rank(atma) == 1 ? 0.0 : 1.0}}, 0.5));

  bool m_rejected = false, n_rejected = false;
  try {
    hpd_sqrt(fix.m);
  } catch (const NotPositiveDefinite&) {
    m_rejected = true;
  }
  try {
    hpd_sqrt(fix.n);
  } catch (const NotPositiveDefinite&) {
    n_rejected = true;
  }
  out.push_back(CheckReport::make(
      "weights-rejected",
      {{"violation", (m_rejected && n_rejected) ? 0.0 : 1.0}}, 0.5));

  // Non-existence sweep: with the definiteness check suppressed, no candidate
  // satisfies all four generalized weighted conditions.
  const WeightPair lenient(fix.m, fix.n, kDefaultPredicateTol, /*require_hpd=*/false);
  const std::vector<DenseTensor> candidates = {
      mp_inverse(fix.a),
      conj_transpose(fix.a),
      mp_inverse_frd(fix.a),
      weighted_conj_transpose(fix.a, identity_tensor(fix.a.col_modes()),
                              identity_tensor(fix.a.row_modes())),
  };
  bool any_passed = false;
  for (const DenseTensor& x : candidates) {
    any_passed = any_passed || penrose_report(fix.a, x, lenient, tol).passed;
  }
  out.push_back(
      CheckReport::make("no-candidate-inverse", {{"violation", any_passed ? 1.0 : 0.0}}, 0.5));
  return out;
}

}  // namespace einalg
