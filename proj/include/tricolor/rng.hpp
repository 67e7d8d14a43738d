#ifndef TRICOLOR_RNG_HPP
#define TRICOLOR_RNG_HPP

#include <cmath>
#include <cstdint>

namespace tricolor {

// splitmix64 step; used both as the generator core and the seed splitter so
// that per-cell / per-retry streams are stable across platforms.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s ^= (a + 0x9e3779b97f4a7c15ULL) * 0xff51afd7ed558ccdULL;
  h ^= splitmix64(s);
  s ^= (b + 0x2545f4914f6cdd1dULL) * 0xc4ceb9fe1a85ec53ULL;
  h ^= splitmix64(s);
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // burn a few outputs so that small seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0,1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [0,n), unbiased
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t lim = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= lim);
    return x % n;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Box-Muller with one cached value
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tricolor

#endif
