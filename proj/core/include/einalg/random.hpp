#ifndef EINALG_RANDOM_HPP
#define EINALG_RANDOM_HPP

#include <cstdint>

#include "einalg/tensor.hpp"

namespace einalg {

/// Deterministic 64-bit generator (splitmix64) with Box-Muller normals.
/// Identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal.
  double normal();
  /// Derives an independent stream for a labeled sub-task.
  Rng fork(std::uint64_t label);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Tensor with independent standard-normal real and imaginary parts
/// (imaginary part zero when complex_entries is false).
DenseTensor random_tensor(Rng& rng, const EinsteinShape& shape, bool complex_entries = true);

/// Random unitary tensor over the given modes: U factor of the SVD of a
/// random square tensor.
DenseTensor random_unitary(Rng& rng, const ModeList& modes);

/// Random Hermitian positive definite tensor Q * diag(lambda) * Q* with Q
/// unitary and lambda uniform in [lo, hi]; bounded condition number keeps
/// residual tolerances meaningful.
DenseTensor random_hpd(Rng& rng, const ModeList& modes, double lo = 0.5, double hi = 2.0);

/// Random well-conditioned (generally non-Hermitian) invertible tensor
/// U * diag(lambda) * V* with lambda uniform in [0.5, 2].
DenseTensor random_well_conditioned(Rng& rng, const ModeList& modes);

}  // namespace einalg

#endif  // EINALG_RANDOM_HPP
