#include "einalg/random.hpp"

#include <cmath>

#include "einalg/decomp.hpp"
#include "einalg/ops.hpp"

namespace einalg {

std::uint64_t Rng::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Rng Rng::fork(std::uint64_t label) {
  Rng child(next_u64() ^ (label * 0x9e3779b97f4a7c15ULL));
  return child;
}

DenseTensor random_tensor(Rng& rng, const EinsteinShape& shape, bool complex_entries) {
  std::vector<Complex> buf(static_cast<size_t>(shape.size()));
  for (Complex& z : buf) {
    const double re = rng.normal();
    z = complex_entries ? Complex{re, rng.normal()} : Complex{re, 0.0};
  }
  return DenseTensor(shape, std::move(buf));
}

DenseTensor random_unitary(Rng& rng, const ModeList& modes) {
  const DenseTensor seed_tensor = random_tensor(rng, EinsteinShape(modes, modes));
  return tensor_svd(seed_tensor).u;
}

DenseTensor random_hpd(Rng& rng, const ModeList& modes, double lo, double hi) {
  const DenseTensor q = random_unitary(rng, modes);
  const Index n = q.row_count();
  std::vector<double> lam(static_cast<size_t>(n));
  for (double& l : lam) l = rng.uniform(lo, hi);
  const DenseTensor d = diagonal_tensor(q.shape(), lam);
  return einstein_product(einstein_product(q, d), conj_transpose(q));
}

DenseTensor random_well_conditioned(Rng& rng, const ModeList& modes) {
  const DenseTensor u = random_unitary(rng, modes);
  const DenseTensor v = random_unitary(rng, modes);
  const Index n = u.row_count();
  std::vector<double> lam(static_cast<size_t>(n));
  for (double& l : lam) l = rng.uniform(0.5, 2.0);
  const DenseTensor d = diagonal_tensor(u.shape(), lam);
  return einstein_product(einstein_product(u, d), conj_transpose(v));
}

}  // namespace einalg
