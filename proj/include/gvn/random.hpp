#pragma once

#include <cstdint>
#include <random>

#include "gvn/exact.hpp"
#include "gvn/fock.hpp"

namespace gvn {

/// Seeded generator. The draws are built from raw 64-bit output so a seed
/// gives the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t index(std::uint64_t n) { return next() % n; }
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(index(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }
  bool coin() { return (next() >> 63) != 0; }

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(long long max_num, long long max_den) {
    long long p = between(-max_num, max_num);
    long long q = between(1, max_den);
    return Rational(p, q);
  }

  /// Entries with real and imaginary parts in [-1, 1).
  CVector cvector(std::size_t n) {
    CVector h(n);
    for (auto& z : h) z = {symmetric(), symmetric()};
    return h;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gvn
