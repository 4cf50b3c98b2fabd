#ifndef EINALG_ROL_HPP
#define EINALG_ROL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "einalg/geninv.hpp"
#include "einalg/random.hpp"

namespace einalg {

/// Outcome of a reverse-order-law check: both sides of the law, the range
/// conditions equivalent to it, and the two verdicts so the equivalence can
/// be tested empirically in both directions.
struct RolReport {
  DenseTensor direct;    // (a*b)^dag, possibly weighted
  DenseTensor reversed;  // b^dag * a^dag, possibly weighted
  std::vector<CheckReport> condition_checks;
  double law_residual = 0.0;
  bool law_holds = false;
  bool conditions_hold = false;
};

/// Unweighted reverse-order law (a*b)^dag = b^dag * a^dag together with its
/// equivalent range conditions R(a"*a*b) in R(b) and R(b*b"*a") in R(a").
RolReport check_rol(const DenseTensor& a, const DenseTensor& b, double tol);

/// Weighted law (a*b)^dag_{m,n} = b^dag_{p,n} * a^dag_{m,p} with the two
/// weighted-range conditions stated through the weighted conjugate transpose.
RolReport check_weighted_rol(const DenseTensor& a, const DenseTensor& b,
                             const DenseTensor& m, const DenseTensor& n,
                             const DenseTensor& p, double tol);

/// Triple-product law (u*v*w)^dag_{m,n} = w^dag_{I,n} * v^dag * u^dag_{m,I}
/// under the sufficient conditions R(w) in R((u*v)*) and R(u*) in R(v*w).
/// law_holds is asserted only meaningful when conditions_hold.
RolReport check_triple_rol(const DenseTensor& u, const DenseTensor& v,
                           const DenseTensor& w, const DenseTensor& m,
                           const DenseTensor& n, double tol);

/// Intermediate tensors of the constructive product-inverse routes.
struct ProductInverseTrace {
  DenseTensor b1;
  DenseTensor a1;
  DenseTensor b1_winv;  // (b1)^dag_{p,n}
  DenseTensor a1_winv;  // (a1)^dag_{m,p}
  DenseTensor result;   // b1_winv * a1_winv
};

/// (a*b)^dag_{m,n} via b1 = a^dag_{m,p}*a*b, a1 = a*b1*(b1)^dag_{p,n};
/// equals the direct weighted inverse unconditionally.
ProductInverseTrace wmp_product_via_intermediates(const DenseTensor& a, const DenseTensor& b,
                                                  const DenseTensor& m, const DenseTensor& n,
                                                  const DenseTensor& p,
                                                  double tol = kDefaultPredicateTol);

/// Same law with a1 = a*b*b^dag_{p,I} built first, then
/// b1 = (a1)^dag_{m,p}*a1*b.
ProductInverseTrace wmp_product_via_b1_first(const DenseTensor& a, const DenseTensor& b,
                                             const DenseTensor& m, const DenseTensor& n,
                                             const DenseTensor& p,
                                             double tol = kDefaultPredicateTol);

/// Inputs to one identity evaluation, keyed by role: tensors under
/// "A", "B", "U", "V", "W" and weights under "M", "N", "P", "Q".
struct IdentityInputs {
  std::map<std::string, DenseTensor> vals;

  const DenseTensor& get(const std::string& role) const;
  bool has(const std::string& role) const { return vals.count(role) != 0; }
};

/// Mode lists per role group used by the instance generators.
struct ShapeFamily {
  ModeList i, j, k, h;
};

/// One executable identity: deterministic generator of (seeded) instances
/// plus an evaluator mapping inputs to named residuals. For equivalence
/// entries the evaluator reports the iff agreement, not the raw law.
struct IdentityCase {
  std::string id;
  std::string description;
  bool conditional = false;   // hypotheses are constructed by the generator
  bool equivalence = false;   // two-sided empirical-iff protocol
  std::function<IdentityInputs(Rng&, const ShapeFamily&)> generate;
  std::function<CheckReport(const IdentityInputs&, double)> evaluate;
  std::vector<ShapeFamily> families;  // curated, one per shape order mix
};

const std::vector<IdentityCase>& identity_catalog();

/// Looks up an entry by id (case-insensitive) and evaluates it on explicit
/// inputs. Throws ShapeMismatch for unknown ids or missing roles.
CheckReport evaluate_identity(const std::string& id, const IdentityInputs& inputs,
                              double tol);

/// Generates seeded inputs for an entry using the given shape family; throws
/// HypothesisUnsatisfiable when a constructed case cannot realize its
/// hypotheses for those shapes.
IdentityInputs generate_identity_inputs(const std::string& id, Rng& rng,
                                        const ShapeFamily& family);

struct CaseSummary {
  std::string id;
  int instances = 0;
  double max_residual = 0.0;
  int failures = 0;
  int marginals = 0;
};

struct CatalogSummary {
  std::uint64_t seed = 0;
  int instances_per_case = 0;
  double tolerance = 0.0;
  std::vector<CaseSummary> cases;

  bool all_passed() const;
};

/// Runs every catalog entry (or a single one) on seeded instances cycling
/// through the entry's shape families.
CatalogSummary run_catalog(std::uint64_t seed, int instances_per_case, double tol,
                           const std::string& only_case = "");

}  // namespace einalg

#endif  // EINALG_ROL_HPP
