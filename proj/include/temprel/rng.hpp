#ifndef TEMPREL_RNG_HPP
#define TEMPREL_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace temprel {

// Deterministic RNG helpers. std::uniform_*_distribution and std::shuffle
// are implementation-defined, so everything that feeds serialized output or
// frozen test values draws through these instead.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return double(engine_() >> 11) * (1.0 / 9007199254740992.0);
  }

  // Uniform in [0, n); unbiased via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform integer in [lo, hi] inclusive.
  long long next_int(long long lo, long long hi) {
    return lo + (long long)next_below((std::uint64_t)(hi - lo + 1));
  }

  bool next_bool(double p_true) { return next_double() < p_true; }

  // Fisher-Yates; deterministic across platforms, unlike std::shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = (std::size_t)next_below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace temprel

#endif  // TEMPREL_RNG_HPP
