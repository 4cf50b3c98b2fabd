#include "einalg/rol.hpp"

#include <algorithm>
#include <cctype>

#include "einalg/jacobi.hpp"

namespace einalg {

namespace {

DenseTensor prod(const DenseTensor& a, const DenseTensor& b) { return einstein_product(a, b); }

DenseTensor prod(const DenseTensor& a, const DenseTensor& b, const DenseTensor& c) {
  return einstein_product(einstein_product(a, b), c);
}

DenseTensor prod(const DenseTensor& a, const DenseTensor& b, const DenseTensor& c,
                 const DenseTensor& d) {
  return einstein_product(prod(a, b, c), d);
}

DenseTensor wmp(const DenseTensor& a, const DenseTensor& m, const DenseTensor& n) {
  return wmp_inverse(a, WeightPair(m, n));
}

DenseTensor id_over(const ModeList& modes) { return identity_tensor(modes); }

double rel(const DenseTensor& lhs, const DenseTensor& rhs) {
  return relative_distance(lhs, rhs);
}

/// Random tensor with bounded condition number mapping the col group onto the
/// row group; requires equal mode products.
DenseTensor well_conditioned_rect(Rng& rng, const ModeList& rows, const ModeList& cols) {
  if (mode_product(rows) != mode_product(cols)) {
    throw HypothesisUnsatisfiable("constructed hypothesis needs equal mode products " +
                                  mode_list_to_string(rows) + " vs " +
                                  mode_list_to_string(cols));
  }
  const DenseTensor square = random_well_conditioned(rng, rows);
  return rsh_inv(rsh(square), EinsteinShape(rows, cols));
}

struct EquivalenceVerdict {
  double cond_residual = 0.0;
  double law_residual = 0.0;
};

CheckReport equivalence_report(const std::string& id, const EquivalenceVerdict& v, double tol) {
  const bool conds = v.cond_residual <= tol;
  const bool law = v.law_residual <= tol;
  std::map<std::string, double> res;
  res["agreement"] = (conds == law) ? 0.0 : 1.0;
  res["law-under-conditions"] = conds ? v.law_residual : 0.0;
  return CheckReport::make(id, std::move(res), tol);
}

IdentityInputs gen_abmnp(Rng& rng, const ShapeFamily& f) {
  IdentityInputs in;
  in.vals.emplace("A", random_tensor(rng, EinsteinShape(f.i, f.j)));
  in.vals.emplace("B", random_tensor(rng, EinsteinShape(f.j, f.k)));
  in.vals.emplace("M", random_hpd(rng, f.i));
  in.vals.emplace("N", random_hpd(rng, f.j));
  in.vals.emplace("P", random_hpd(rng, f.k));
  return in;
}

IdentityInputs gen_amn(Rng& rng, const ShapeFamily& f) {
  IdentityInputs in;
  in.vals.emplace("A", random_tensor(rng, EinsteinShape(f.i, f.j)));
  in.vals.emplace("M", random_hpd(rng, f.i));
  in.vals.emplace("N", random_hpd(rng, f.j));
  return in;
}

IdentityInputs gen_uvw(Rng& rng, const ShapeFamily& f, bool with_pq) {
  IdentityInputs in;
  in.vals.emplace("U", random_tensor(rng, EinsteinShape(f.i, f.j)));
  in.vals.emplace("V", random_tensor(rng, EinsteinShape(f.j, f.k)));
  in.vals.emplace("W", random_tensor(rng, EinsteinShape(f.k, f.h)));
  in.vals.emplace("M", random_hpd(rng, f.i));
  in.vals.emplace("N", random_hpd(rng, f.h));
  if (with_pq) {
    in.vals.emplace("P", random_hpd(rng, f.j));
    in.vals.emplace("Q", random_hpd(rng, f.k));
  }
  return in;
}

// Weighted reverse-order-law instance; conforming draws construct
// B = A#_{P,M} * C with a well-conditioned C so both range conditions hold.
IdentityInputs gen_equivalence(Rng& rng, const ShapeFamily& f) {
  IdentityInputs in;
  const DenseTensor a = random_tensor(rng, EinsteinShape(f.i, f.j));
  const DenseTensor m = random_hpd(rng, f.i);
  const DenseTensor n = random_hpd(rng, f.k);
  const DenseTensor p = random_hpd(rng, f.j);
  const bool conforming = rng.uniform() < 0.5;
  if (conforming) {
    const DenseTensor c = well_conditioned_rect(rng, f.i, f.k);
    in.vals.emplace("B", prod(weighted_conj_transpose(a, p, m), c));
  } else {
    in.vals.emplace("B", random_tensor(rng, EinsteinShape(f.j, f.k)));
  }
  in.vals.emplace("A", a);
  in.vals.emplace("M", m);
  in.vals.emplace("N", n);
  in.vals.emplace("P", p);
  return in;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

const std::vector<ShapeFamily> kDefaultFamilies = {
    {{3}, {2}, {4}, {2}},
    {{2, 2}, {3}, {2}, {4}},
    {{2, 3}, {2, 2}, {3}, {2, 2}},
};
const std::vector<ShapeFamily> kConstructedFamilies = {
    {{3}, {2}, {3}, {2}},
    {{2, 2}, {3}, {4}, {2}},
    {{2, 3}, {2, 2}, {3, 2}, {2}},
};
const std::vector<ShapeFamily> kEquivalenceFamilies = {
    {{3}, {4}, {3}, {2}},
    {{2, 2}, {3, 2}, {4}, {2}},
    {{2, 3}, {4, 2}, {3, 2}, {2}},
};
const std::vector<ShapeFamily> kTripleFamilies = {
    {{3}, {3}, {2}, {3}},
    {{2, 2}, {3}, {2}, {4}},
    {{2, 3}, {2, 2}, {3}, {2, 2}},
};

std::vector<IdentityCase> build_catalog() {
  std::vector<IdentityCase> cat;

  auto add = [&](IdentityCase c) { cat.push_back(std::move(c)); };

  add({"weighted-hash-involution", "(A#_{N,M})#_{M,N} = A", false, false,
       gen_amn,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor inner = weighted_conj_transpose(a, n, m);
         const double r = rel(weighted_conj_transpose(inner, m, n), a);
         return CheckReport::make("weighted-hash-involution", {{"residual", r}}, tol);
       },
       kDefaultFamilies});

  add({"weighted-hash-reversal", "(A*B)#_{P,M} = B#_{P,N} * A#_{N,M}", false, false,
       gen_abmnp,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& b = in.get("B");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const auto& p = in.get("P");
         const DenseTensor lhs = weighted_conj_transpose(prod(a, b), p, m);
         const DenseTensor rhs =
             prod(weighted_conj_transpose(b, p, n), weighted_conj_transpose(a, n, m));
         return CheckReport::make("weighted-hash-reversal", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"hash-dagger-swap", "(A#_{N,M})+_{N,M} = (A+_{M,N})#_{M,N}", false, false,
       gen_amn,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor lhs = wmp(weighted_conj_transpose(a, n, m), n, m);
         const DenseTensor rhs = weighted_conj_transpose(wmp(a, m, n), m, n);
         return CheckReport::make("hash-dagger-swap", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"hash-sandwich-a", "A = A * A# * (A#)+ = (A#)+ * A# * A", false, false,
       gen_amn,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor ah = weighted_conj_transpose(a, n, m);
         const DenseTensor ahd = wmp(ah, n, m);
         return CheckReport::make("hash-sandwich-a",
                                  {{"left", rel(prod(a, ah, ahd), a)},
                                   {"right", rel(prod(ahd, ah, a), a)}},
                                  tol);
       },
       kDefaultFamilies});

  add({"hash-sandwich-hash", "A# = A+ * A * A# = A# * A * A+", false, false,
       gen_amn,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor ah = weighted_conj_transpose(a, n, m);
         const DenseTensor ad = wmp(a, m, n);
         return CheckReport::make("hash-sandwich-hash",
                                  {{"left", rel(prod(ad, a, ah), ah)},
                                   {"right", rel(prod(ah, a, ad), ah)}},
                                  tol);
       },
       kDefaultFamilies});

  add({"lemma42-a", "A+_{M,I} * A = (M^1/2 A)+ M^1/2 A = A+ * A", false, false,
       gen_amn,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& m = in.get("M");
         const DenseTensor ij = id_over(a.col_modes());
         const DenseTensor ref = prod(mp_inverse(a), a);
         const DenseTensor msq = hpd_sqrt(m).sqrt;
         const double r1 = rel(prod(wmp(a, m, ij), a), ref);
         const double r2 = rel(prod(mp_inverse(prod(msq, a)), msq, a), ref);
         return CheckReport::make("lemma42-a", {{"weighted", r1}, {"sqrt-route", r2}}, tol);
       },
       kDefaultFamilies});

  add({"lemma42-b", "A * A+_{I,N} = A N^-1/2 (A N^-1/2)+ = A * A+", false, false,
       gen_amn,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& n = in.get("N");
         const DenseTensor ii = id_over(a.row_modes());
         const DenseTensor ref = prod(a, mp_inverse(a));
         const DenseTensor nisq = hpd_sqrt(n).inv_sqrt;
         const double r1 = rel(prod(a, wmp(a, ii, n)), ref);
         const double r2 = rel(prod(a, nisq, mp_inverse(prod(a, nisq))), ref);
         return CheckReport::make("lemma42-b", {{"weighted", r1}, {"sqrt-route", r2}}, tol);
       },
       kDefaultFamilies});

  add({"lemma42-c", "(A+_{M,I})* = M^1/2 * (A* M^1/2)+", false, false,
       gen_amn,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& m = in.get("M");
         const DenseTensor ij = id_over(a.col_modes());
         const DenseTensor msq = hpd_sqrt(m).sqrt;
         const DenseTensor lhs = conj_transpose(wmp(a, m, ij));
         const DenseTensor rhs = prod(msq, mp_inverse(prod(conj_transpose(a), msq)));
         return CheckReport::make("lemma42-c", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"lemma42-d", "(A+_{I,N})* = (N^-1/2 A*)+ * N^-1/2", false, false,
       gen_amn,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& n = in.get("N");
         const DenseTensor ii = id_over(a.row_modes());
         const DenseTensor nisq = hpd_sqrt(n).inv_sqrt;
         const DenseTensor lhs = conj_transpose(wmp(a, ii, n));
         const DenseTensor rhs = prod(mp_inverse(prod(nisq, conj_transpose(a))), nisq);
         return CheckReport::make("lemma42-d", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"sandwich-uv",
       "(U*V)+_{M,N} = [(U+_{M,I})* V]+_{M^-1,N} * (V+_{I,N} U+_{M,I})* * [U (V+_{I,N})*]+_{M,N^-1}",
       false, false,
       [](Rng& rng, const ShapeFamily& f) {
         IdentityInputs in;
         in.vals.emplace("U", random_tensor(rng, EinsteinShape(f.i, f.j)));
         in.vals.emplace("V", random_tensor(rng, EinsteinShape(f.j, f.k)));
         in.vals.emplace("M", random_hpd(rng, f.i));
         in.vals.emplace("N", random_hpd(rng, f.k));
         return in;
       },
       [](const IdentityInputs& in, double tol) {
         const auto& u = in.get("U");
         const auto& v = in.get("V");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor ij = id_over(u.col_modes());
         const DenseTensor m_inv = hpd_sqrt(m).inverse();
         const DenseTensor n_inv = hpd_sqrt(n).inverse();
         const DenseTensor ud = wmp(u, m, ij);
         const DenseTensor vd = wmp(v, ij, n);
         const DenseTensor lhs = wmp(prod(u, v), m, n);
         const DenseTensor rhs = prod(wmp(prod(conj_transpose(ud), v), m_inv, n),
                                      conj_transpose(prod(vd, ud)),
                                      wmp(prod(u, conj_transpose(vd)), m, n_inv));
         return CheckReport::make("sandwich-uv", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"a1-decomp-a",
       "A+_{M,N} = X+_{I,N} * V * Y+_{M,I}, X = (U V V+)+ A, Y = A (V+ V W)+", false, false,
       [](Rng& rng, const ShapeFamily& f) { return gen_uvw(rng, f, false); },
       [](const IdentityInputs& in, double tol) {
         const auto& u = in.get("U");
         const auto& v = in.get("V");
         const auto& w = in.get("W");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor a = prod(u, v, w);
         const DenseTensor vd = mp_inverse(v);
         const DenseTensor x = prod(mp_inverse(prod(u, v, vd)), a);
         const DenseTensor y = prod(a, mp_inverse(prod(vd, v, w)));
         const DenseTensor lhs = wmp(a, m, n);
         const DenseTensor rhs = prod(wmp(x, id_over(x.row_modes()), n), v,
                                      wmp(y, m, id_over(y.col_modes())));
         return CheckReport::make("a1-decomp-a", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"a1-decomp-b",
       "A+_{M,N} = X+_{I,N} * V* V V* * Y+_{M,I}, X = [U (V+)*]+ A, Y = A [(V+)* W]+",
       false, false,
       [](Rng& rng, const ShapeFamily& f) { return gen_uvw(rng, f, false); },
       [](const IdentityInputs& in, double tol) {
         const auto& u = in.get("U");
         const auto& v = in.get("V");
         const auto& w = in.get("W");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor a = prod(u, v, w);
         const DenseTensor vds = conj_transpose(mp_inverse(v));
         const DenseTensor x = prod(mp_inverse(prod(u, vds)), a);
         const DenseTensor y = prod(a, mp_inverse(prod(vds, w)));
         const DenseTensor lhs = wmp(a, m, n);
         const DenseTensor vs = conj_transpose(v);
         const DenseTensor rhs =
             prod(prod(wmp(x, id_over(x.row_modes()), n), vs, v),
                  vs, wmp(y, m, id_over(y.col_modes())));
         return CheckReport::make("a1-decomp-b", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"uvw-a",
       "(UVW)+_{M,N} = [(U+_{M,I})* V W]+_{M^-1,N} * (U+_{M,I})* V (W+_{I,N})* * "
       "[U V (W+_{I,N})*]+_{M,N^-1}",
       false, false,
       [](Rng& rng, const ShapeFamily& f) { return gen_uvw(rng, f, false); },
       [](const IdentityInputs& in, double tol) {
         const auto& u = in.get("U");
         const auto& v = in.get("V");
         const auto& w = in.get("W");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor m_inv = hpd_sqrt(m).inverse();
         const DenseTensor n_inv = hpd_sqrt(n).inverse();
         const DenseTensor uds = conj_transpose(wmp(u, m, id_over(u.col_modes())));
         const DenseTensor wds = conj_transpose(wmp(w, id_over(w.row_modes()), n));
         const DenseTensor lhs = wmp(prod(u, v, w), m, n);
         const DenseTensor rhs = prod(wmp(prod(uds, v, w), m_inv, n), prod(uds, v, wds),
                                      wmp(prod(u, v, wds), m, n_inv));
         return CheckReport::make("uvw-a", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"uvw-b",
       "(UVW)+_{M,N} = [((UV)+_{M,I})* W]+_{M^-1,N} * ((UV)+_{M,I})* V+ ((VW)+_{I,N})* * "
       "[U ((VW)+_{I,N})*]+_{M,N^-1}",
       false, false,
       [](Rng& rng, const ShapeFamily& f) { return gen_uvw(rng, f, false); },
       [](const IdentityInputs& in, double tol) {
         const auto& u = in.get("U");
         const auto& v = in.get("V");
         const auto& w = in.get("W");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor m_inv = hpd_sqrt(m).inverse();
         const DenseTensor n_inv = hpd_sqrt(n).inverse();
         const DenseTensor uv = prod(u, v);
         const DenseTensor vw = prod(v, w);
         const DenseTensor uvds = conj_transpose(wmp(uv, m, id_over(uv.col_modes())));
         const DenseTensor vwds = conj_transpose(wmp(vw, id_over(vw.row_modes()), n));
         const DenseTensor lhs = wmp(prod(u, v, w), m, n);
         const DenseTensor rhs =
             prod(wmp(prod(uvds, w), m_inv, n), prod(uvds, mp_inverse(v), vwds),
                  wmp(prod(u, vwds), m, n_inv));
         return CheckReport::make("uvw-b", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"uvw1", "A+_{M,N} = X+_{I,N} * V * Y+_{M,I}, X = U+ A, Y = A W+", false, false,
       [](Rng& rng, const ShapeFamily& f) { return gen_uvw(rng, f, false); },
       [](const IdentityInputs& in, double tol) {
         const auto& u = in.get("U");
         const auto& v = in.get("V");
         const auto& w = in.get("W");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor a = prod(u, v, w);
         const DenseTensor x = prod(mp_inverse(u), a);
         const DenseTensor y = prod(a, mp_inverse(w));
         const DenseTensor lhs = wmp(a, m, n);
         const DenseTensor rhs = prod(wmp(x, id_over(x.row_modes()), n), v,
                                      wmp(y, m, id_over(y.col_modes())));
         return CheckReport::make("uvw1", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kDefaultFamilies});

  add({"uvw1-corollary-a",
       "A+_{M,N} = (U+_{I,P} A)+_{P,N} * V * (A W+_{Q,I})+_{M,Q}", false, false,
       [](Rng& rng, const ShapeFamily& f) { return gen_uvw(rng, f, true); },
       [](const IdentityInputs& in, double tol) {
         const auto& u = in.get("U");
         const auto& v = in.get("V");
         const auto& w = in.get("W");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const auto& p = in.get("P");
         const auto& q = in.get("Q");
         const DenseTensor a = prod(u, v, w);
         const DenseTensor lhs = wmp(a, m, n);
         const DenseTensor left = wmp(prod(wmp(u, id_over(u.row_modes()), p), a), p, n);
         const DenseTensor right = wmp(prod(a, wmp(w, q, id_over(w.col_modes()))), m, q);
         return CheckReport::make("uvw1-corollary-a",
                                  {{"residual", rel(lhs, prod(left, v, right))}}, tol);
       },
       kDefaultFamilies});

  add({"uvw1-corollary-b",
       "A+_{M,N} = [(U V V+_{P,I})+_{M,P} A]+_{P,N} * V * [A (V+_{I,Q} V W)+_{Q,N}]+_{M,Q}",
       false, false,
       [](Rng& rng, const ShapeFamily& f) { return gen_uvw(rng, f, true); },
       [](const IdentityInputs& in, double tol) {
         const auto& u = in.get("U");
         const auto& v = in.get("V");
         const auto& w = in.get("W");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const auto& p = in.get("P");
         const auto& q = in.get("Q");
         const DenseTensor a = prod(u, v, w);
         const DenseTensor lhs = wmp(a, m, n);
         const DenseTensor vd_pi = wmp(v, p, id_over(v.col_modes()));
         const DenseTensor left = wmp(prod(wmp(prod(u, v, vd_pi), m, p), a), p, n);
         const DenseTensor vd_iq = wmp(v, id_over(v.row_modes()), q);
         const DenseTensor right = wmp(prod(a, wmp(prod(vd_iq, v, w), q, n)), m, q);
         return CheckReport::make("uvw1-corollary-b",
                                  {{"residual", rel(lhs, prod(left, v, right))}}, tol);
       },
       kDefaultFamilies});

  add({"rol-sufficient",
       "R(B) = R(A*)  =>  (A*B)+_{M,N} = B+_{I,N} * A+_{M,I}", true, false,
       [](Rng& rng, const ShapeFamily& f) {
         IdentityInputs in;
         const DenseTensor a = random_tensor(rng, EinsteinShape(f.i, f.j));
         const DenseTensor c = well_conditioned_rect(rng, f.i, f.k);
         in.vals.emplace("B", prod(conj_transpose(a), c));
         in.vals.emplace("A", a);
         in.vals.emplace("M", random_hpd(rng, f.i));
         in.vals.emplace("N", random_hpd(rng, f.k));
         return in;
       },
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& b = in.get("B");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const DenseTensor ij = id_over(a.col_modes());
         const DenseTensor lhs = wmp(prod(a, b), m, n);
         const DenseTensor rhs = prod(wmp(b, ij, n), wmp(a, m, ij));
         return CheckReport::make("rol-sufficient", {{"residual", rel(lhs, rhs)}}, tol);
       },
       kConstructedFamilies});

  add({"rv2-corollary",
       "(A*B)+_{M,N} = B+_{P,N} * A+_{M,P}  <=>  two projector equalities", false, true,
       gen_equivalence,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& b = in.get("B");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const auto& p = in.get("P");
         const DenseTensor ah = weighted_conj_transpose(a, p, m);
         const DenseTensor bh = weighted_conj_transpose(b, n, p);
         const DenseTensor bbh_ah = prod(b, bh, ah);
         const DenseTensor ah_ab = prod(ah, a, b);
         EquivalenceVerdict v;
         v.cond_residual = std::max(rel(prod(wmp(a, m, p), prod(a, b), bh, ah), bbh_ah),
                                    rel(prod(prod(b, wmp(b, p, n)), ah_ab), ah_ab));
         v.law_residual = rel(wmp(prod(a, b), m, n), prod(wmp(b, p, n), wmp(a, m, p)));
         return equivalence_report("rv2-corollary", v, tol);
       },
       kEquivalenceFamilies});

  add({"iff-intermediate",
       "(A*B)+_{M,N} = B+_{P,N} * A+_{M,P}  <=>  intermediate-inverse equalities", false, true,
       gen_equivalence,
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& b = in.get("B");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const auto& p = in.get("P");
         const DenseTensor ad = wmp(a, m, p);
         const DenseTensor bd = wmp(b, p, n);
         EquivalenceVerdict v;
         v.cond_residual =
             std::max(rel(wmp(prod(ad, a, b), p, n), prod(bd, ad, a)),
                      rel(wmp(prod(a, b, bd), m, p), prod(b, bd, ad)));
         v.law_residual = rel(wmp(prod(a, b), m, n), prod(bd, ad));
         return equivalence_report("iff-intermediate", v, tol);
       },
       kEquivalenceFamilies});

  add({"rol-weighted-sufficient",
       "R(B) in R(A#_{P,M}) and N(B#_{N^1/2,P^1/2}) in N(A)  =>  weighted reverse order law",
       true, false,
       [](Rng& rng, const ShapeFamily& f) {
         IdentityInputs in;
         const DenseTensor a = random_tensor(rng, EinsteinShape(f.i, f.j));
         const DenseTensor m = random_hpd(rng, f.i);
         const DenseTensor p = random_hpd(rng, f.j);
         const DenseTensor c = well_conditioned_rect(rng, f.i, f.k);
         in.vals.emplace("B", prod(weighted_conj_transpose(a, p, m), c));
         in.vals.emplace("A", a);
         in.vals.emplace("M", m);
         in.vals.emplace("P", p);
         in.vals.emplace("N", random_hpd(rng, f.k));
         return in;
       },
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& b = in.get("B");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const auto& p = in.get("P");
         const DenseTensor ah = weighted_conj_transpose(a, p, m);
         // Null-space hypothesis in its range-equivalent form:
         // R(P^-1/2 A*) in R((B#_{N^1/2,P^1/2})*).
         const DenseTensor psq = hpd_sqrt(p).sqrt;
         const DenseTensor pisq = hpd_sqrt(p).inv_sqrt;
         const DenseTensor nsq = hpd_sqrt(n).sqrt;
         const DenseTensor bh_sqrtw = weighted_conj_transpose(b, nsq, psq);
         const double h1 = range_inclusion(b, ah, tol).max_residual();
         const double h2 = range_inclusion(prod(pisq, conj_transpose(a)),
                                           conj_transpose(bh_sqrtw), tol)
                               .max_residual();
         const DenseTensor lhs = wmp(prod(a, b), m, n);
         const DenseTensor rhs = prod(wmp(b, p, n), wmp(a, m, p));
         return CheckReport::make(
             "rol-weighted-sufficient",
             {{"hypothesis-range", h1}, {"hypothesis-null", h2}, {"law", rel(lhs, rhs)}}, tol);
       },
       kConstructedFamilies});

  add({"frd-nonuniqueness",
       "A = (F*B)*(B^-1*G) for invertible B; (F*B)+ = B^-1*F+, (B^-1*G)+ = G+*B", false, false,
       [](Rng& rng, const ShapeFamily& f) {
         IdentityInputs in;
         const ModeList inner{2};
         const DenseTensor a = prod(random_tensor(rng, EinsteinShape(f.i, inner)),
                                    random_tensor(rng, EinsteinShape(inner, f.j)));
         in.vals.emplace("B", random_well_conditioned(rng, ModeList{reshape_rank(a)}));
         in.vals.emplace("A", a);
         return in;
       },
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& b = in.get("B");
         const FrdFactors frd = full_rank_decomposition(a);
         const FrdFactors other = frd_transform_witness(frd, b);
         const DenseTensor b_inv = inverse(b);
         const double recon = rel(prod(other.f, other.g), a);
         const double fd = rel(mp_inverse(other.f), prod(b_inv, mp_inverse(frd.f)));
         const double gd = rel(mp_inverse(other.g), prod(mp_inverse(frd.g), b));
         return CheckReport::make("frd-nonuniqueness",
                                  {{"reconstruction", recon}, {"f-dagger", fd}, {"g-dagger", gd}},
                                  tol);
       },
       kDefaultFamilies});

  add({"idr1-c", "R(A * B+) = R(A * B*)", false, false,
       [](Rng& rng, const ShapeFamily& f) {
         IdentityInputs in;
         in.vals.emplace("A", random_tensor(rng, EinsteinShape(f.i, f.j)));
         in.vals.emplace("B", random_tensor(rng, EinsteinShape(f.k, f.j)));
         return in;
       },
       [](const IdentityInputs& in, double tol) {
         const auto& a = in.get("A");
         const auto& b = in.get("B");
         const DenseTensor x = prod(a, mp_inverse(b));
         const DenseTensor y = prod(a, conj_transpose(b));
         const double fwd = range_inclusion(x, y, tol).max_residual();
         const double bwd = range_inclusion(y, x, tol).max_residual();
         return CheckReport::make("idr1-c", {{"forward", fwd}, {"backward", bwd}}, tol);
       },
       kDefaultFamilies});

  add({"triple-rol",
       "R(W) in R((U*V)*) and R(U*) in R(V*W)  =>  (UVW)+_{M,N} = W+_{I,N} * V+ * U+_{M,I}",
       true, false,
       [](Rng& rng, const ShapeFamily& f) {
         const Index pk = mode_product(f.k);
         if (mode_product(f.i) < pk || mode_product(f.j) < pk || mode_product(f.h) < pk) {
           throw HypothesisUnsatisfiable(
               "triple reverse-order hypotheses need the inner mode product to be smallest");
         }
         IdentityInputs in;
         const DenseTensor v = random_tensor(rng, EinsteinShape(f.j, f.k));
         const DenseTensor s = random_tensor(rng, EinsteinShape(f.k, f.i));
         in.vals.emplace("U", prod(conj_transpose(s), conj_transpose(v)));
         in.vals.emplace("V", v);
         in.vals.emplace("W", random_tensor(rng, EinsteinShape(f.k, f.h)));
         in.vals.emplace("M", random_hpd(rng, f.i));
         in.vals.emplace("N", random_hpd(rng, f.h));
         return in;
       },
       [](const IdentityInputs& in, double tol) {
         const auto& u = in.get("U");
         const auto& v = in.get("V");
         const auto& w = in.get("W");
         const auto& m = in.get("M");
         const auto& n = in.get("N");
         const RolReport r = check_triple_rol(u, v, w, m, n, tol);
         double conds = 0.0;
         for (const auto& c : r.condition_checks) conds = std::max(conds, c.max_residual());
         return CheckReport::make("triple-rol",
                                  {{"hypotheses", conds}, {"law", r.law_residual}}, tol);
       },
       kTripleFamilies});

  return cat;
}

const IdentityCase& find_case(const std::string& id) {
  const std::string key = lower(id);
  for (const IdentityCase& c : identity_catalog()) {
    if (c.id == key) return c;
  }
  throw ShapeMismatch("unknown identity case: " + id);
}

}  // namespace

const DenseTensor& IdentityInputs::get(const std::string& role) const {
  auto it = vals.find(role);
  if (it == vals.end()) {
    throw ShapeMismatch("missing input role " + role);
  }
  return it->second;
}

RolReport check_rol(const DenseTensor& a, const DenseTensor& b, double tol) {
  if (a.col_modes() != b.row_modes()) {
    throw ShapeMismatch("reverse-order check requires a.col_modes == b.row_modes");
  }
  RolReport r;
  r.direct = mp_inverse(prod(a, b));
  r.reversed = prod(mp_inverse(b), mp_inverse(a));
  const DenseTensor as = conj_transpose(a);
  r.condition_checks.push_back(range_inclusion(prod(as, a, b), b, tol));
  r.condition_checks.push_back(range_inclusion(prod(b, conj_transpose(b), as), as, tol));
  r.law_residual = relative_distance(r.reversed, r.direct);
  r.law_holds = r.law_residual <= tol;
  r.conditions_hold =
      r.condition_checks[0].passed && r.condition_checks[1].passed;
  return r;
}

RolReport check_weighted_rol(const DenseTensor& a, const DenseTensor& b, const DenseTensor& m,
                             const DenseTensor& n, const DenseTensor& p, double tol) {
  if (a.col_modes() != b.row_modes()) {
    throw ShapeMismatch("reverse-order check requires a.col_modes == b.row_modes");
  }
  RolReport r;
  r.direct = wmp(prod(a, b), m, n);
  r.reversed = prod(wmp(b, p, n), wmp(a, m, p));
  const DenseTensor ah = weighted_conj_transpose(a, p, m);
  const DenseTensor bh = weighted_conj_transpose(b, n, p);
  r.condition_checks.push_back(range_inclusion(prod(ah, a, b), b, tol));
  r.condition_checks.push_back(range_inclusion(prod(b, bh, ah), ah, tol));
  r.law_residual = relative_distance(r.reversed, r.direct);
  r.law_holds = r.law_residual <= tol;
  r.conditions_hold =
      r.condition_checks[0].passed && r.condition_checks[1].passed;
  return r;
}

RolReport check_triple_rol(const DenseTensor& u, const DenseTensor& v, const DenseTensor& w,
                           const DenseTensor& m, const DenseTensor& n, double tol) {
  RolReport r;
  const DenseTensor uvw = prod(u, v, w);
  r.direct = wmp(uvw, m, n);
  r.reversed = prod(wmp(w, id_over(w.row_modes()), n), mp_inverse(v),
                    wmp(u, m, id_over(u.col_modes())));
  r.condition_checks.push_back(range_inclusion(w, conj_transpose(prod(u, v)), tol));
  r.condition_checks.push_back(range_inclusion(conj_transpose(u), prod(v, w), tol));
  r.law_residual = relative_distance(r.reversed, r.direct);
  r.law_holds = r.law_residual <= tol;
  r.conditions_hold =
      r.condition_checks[0].passed && r.condition_checks[1].passed;
  return r;
}

ProductInverseTrace wmp_product_via_intermediates(const DenseTensor& a, const DenseTensor& b,
                                                  const DenseTensor& m, const DenseTensor& n,
                                                  const DenseTensor& p, double tol) {
  const WeightPair w_mp(m, p, tol);
  const WeightPair w_pn(p, n, tol);
  ProductInverseTrace t;
  t.b1 = prod(wmp_inverse(a, w_mp), a, b);
  t.b1_winv = wmp_inverse(t.b1, w_pn);
  t.a1 = prod(a, t.b1, t.b1_winv);
  t.a1_winv = wmp_inverse(t.a1, w_mp);
  t.result = prod(t.b1_winv, t.a1_winv);
  return t;
}

ProductInverseTrace wmp_product_via_b1_first(const DenseTensor& a, const DenseTensor& b,
                                             const DenseTensor& m, const DenseTensor& n,
                                             const DenseTensor& p, double tol) {
  const WeightPair w_mp(m, p, tol);
  const WeightPair w_pn(p, n, tol);
  const WeightPair w_pi(p, identity_tensor(b.col_modes()), tol);
  ProductInverseTrace t;
  t.a1 = prod(a, b, wmp_inverse(b, w_pi));
  t.a1_winv = wmp_inverse(t.a1, w_mp);
  t.b1 = prod(t.a1_winv, t.a1, b);
  t.b1_winv = wmp_inverse(t.b1, w_pn);
  t.result = prod(t.b1_winv, t.a1_winv);
  return t;
}

const std::vector<IdentityCase>& identity_catalog() {
  static const std::vector<IdentityCase> cat = build_catalog();
  return cat;
}

CheckReport evaluate_identity(const std::string& id, const IdentityInputs& inputs, double tol) {
  return find_case(id).evaluate(inputs, tol);
}

IdentityInputs generate_identity_inputs(const std::string& id, Rng& rng,
                                        const ShapeFamily& family) {
  return find_case(id).generate(rng, family);
}

bool CatalogSummary::all_passed() const {
  for (const CaseSummary& c : cases) {
    if (c.failures > 0) return false;
  }
  return true;
}

CatalogSummary run_catalog(std::uint64_t seed, int instances_per_case, double tol,
                           const std::string& only_case) {
  CatalogSummary summary;
  summary.seed = seed;
  summary.instances_per_case = instances_per_case;
  summary.tolerance = tol;
  const std::string filter = lower(only_case);
  if (!filter.empty()) find_case(filter);  // reject unknown ids up front
  std::uint64_t case_index = 0;
  for (const IdentityCase& c : identity_catalog()) {
    ++case_index;
    if (!filter.empty() && c.id != filter) continue;
    CaseSummary cs;
    cs.id = c.id;
    for (int i = 0; i < instances_per_case; ++i) {
      Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * case_index) ^
              (0xbf58476d1ce4e5b9ULL * static_cast<std::uint64_t>(i + 1)));
      const ShapeFamily& fam = c.families[static_cast<size_t>(i) % c.families.size()];
      const IdentityInputs in = c.generate(rng, fam);
      const CheckReport rep = c.evaluate(in, tol);
      ++cs.instances;
      cs.max_residual = std::max(cs.max_residual, rep.max_residual());
      if (!rep.passed) ++cs.failures;
      if (rep.marginal) ++cs.marginals;
    }
    summary.cases.push_back(std::move(cs));
  }
  return summary;
}

}  // namespace einalg
