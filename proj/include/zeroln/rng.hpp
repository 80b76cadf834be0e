#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace zeroln {

// splitmix64; used to derive independent substream seeds from (seed, index)
// so that parallel and serial execution of replicates draw identical numbers.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x51ed270b8a4c1337ULL));
}

// Inverse standard-normal CDF (Wichura's PPND16, AS 241). Max abs error
// ~ 1e-15 on (0,1); pure arithmetic, so draws do not depend on libm quirks.
inline double norm_ppf(double p) {
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
              3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
            4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
              6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
            2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
              2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
            5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
              1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
            5.99832206555887937690e-1) * r + 1.0);
  }
  return (q < 0.0) ? -val : val;
}

// Standard normal CDF via erfc.
inline double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Deterministic stream: mt19937_64 engine with all distributions implemented
// here (std:: distributions are not bit-stable across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  // uniform on [0,1)
  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  double normal() {
    // inverse-CDF; nudge away from 0 so ppf stays finite
    double u = uniform();
    if (u <= 0.0) u = 0x1.0p-53;
    return norm_ppf(u);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  bool bernoulli(double p) { return uniform() < p; }

  // integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    // rejection-free is fine here: modulo bias is < 2^-53 for the n we use
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
  }

  // Gaussian truncated to [lower, +inf), sampled by inverse CDF.
  double truncated_normal_lower(double mean, double sd, double lower) {
    double a = norm_cdf((lower - mean) / sd);
    double u = a + uniform() * (1.0 - a);
    if (u >= 1.0) u = 1.0 - 0x1.0p-53;
    if (u <= 0.0) u = 0x1.0p-53;
    return mean + sd * norm_ppf(u);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace zeroln
