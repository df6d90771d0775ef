#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "pfista/tensor.hpp"

namespace pfista {

// Deterministic random stream. mt19937_64 output is fixed by the standard;
// the uniform/normal maps below avoid std::*_distribution, whose exact
// sequences differ between standard-library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  /// Complex with independent N(0, 1/2) components (unit total variance).
  cplx cnormal() { return {normal() * std::numbers::sqrt2 / 2.0, normal() * std::numbers::sqrt2 / 2.0}; }

private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline ComplexImage random_image(int rows, int cols, Rng& rng) {
  ComplexImage out(rows, cols);
  for (auto& v : out.flat()) v = rng.cnormal();
  return out;
}

inline MultiCoilImage random_multicoil(int coils, int rows, int cols, Rng& rng) {
  MultiCoilImage out(coils, rows, cols);
  for (auto& c : out.coils)
    for (auto& v : c.flat()) v = rng.cnormal();
  return out;
}

}  // namespace pfista
