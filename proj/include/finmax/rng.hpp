#ifndef FINMAX_RNG_HPP
#define FINMAX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace finmax {

/// Seeded random stream with portable output.
///
/// Draws are derived from the raw mt19937_64 bit stream rather than the
/// standard distribution adaptors, so identical seeds give identical
/// sequences independent of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller, one spare cached per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd normal_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  Eigen::VectorXd uniform_vector(int n, double lo, double hi) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }

  /// Uniformly distributed point of the probability simplex
  /// (normalized standard exponentials).
  Eigen::VectorXd simplex_point(int n) {
    Eigen::VectorXd v(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double u = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
      v[i] = -std::log(u);
      total += v[i];
    }
    return v / total;
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace finmax

#endif  // FINMAX_RNG_HPP
