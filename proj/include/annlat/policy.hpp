#ifndef ANNLAT_POLICY_HPP
#define ANNLAT_POLICY_HPP

#include "annlat/scalar.hpp"

#include <cstdint>
#include <random>

namespace annlat {

enum class NumericMode { Exact, Float };

/// Exact mode compares with zero tolerance; float mode treats magnitudes below
/// `tolerance` as zero. The seed drives all sampled verifications.
struct NumericPolicy {
  NumericMode mode = NumericMode::Exact;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  int samples = 200;

  NumericPolicy with_seed(std::uint64_t s) const {
    NumericPolicy p = *this;
    p.seed = s;
    return p;
  }
};

/// Deterministic source of small rational coefficients. Parallel workers are
/// expected to derive substreams via `substream`, never to share one Sampler.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  Sampler substream(std::uint64_t index) const {
    std::seed_seq seq{seed_, index};
    std::mt19937_64 r(seq);
    return Sampler(r());
  }

  /// Rational in {-3..3}/{1,2,3}, biased toward small integers.
  Rational small_rational() {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng_), den(rng_));
  }

  Scalar small_scalar() { return Scalar(small_rational(), small_rational()); }

  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

} // namespace annlat

#endif
