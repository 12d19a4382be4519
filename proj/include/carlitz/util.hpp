#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace carlitz {

// Deterministic 64-bit PRNG (splitmix64). Every randomized routine in the
// library takes one of these so runs are reproducible from a single seed.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound >= 1, rejection sampled
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
    uint64_t threshold = -bound % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

// Laurent valuations can exceed any practical precision by astronomical
// amounts (deg D_m ~ m q^m), so valuation arithmetic saturates instead of
// overflowing.
inline constexpr int64_t kValInf = int64_t(1) << 60;

inline int64_t sat_add(int64_t a, int64_t b) {
  if (a >= kValInf || b >= kValInf) return kValInf;
  int64_t s = a + b;
  return s >= kValInf ? kValInf : s;
}

inline int64_t sat_mul(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kValInf || b >= kValInf) return kValInf;
  if (a > 0 && b > 0 && a > kValInf / b) return kValInf;
  return a * b;
}

// q^i as int64 with an explicit overflow guard; exponents in this library
// stay far below the guard in every supported configuration.
inline int64_t ipow(int64_t base, int64_t exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  int64_t r = 1;
  for (int64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > (int64_t(1) << 62) / base)
      throw std::overflow_error("ipow: exponent range exceeded");
    r *= base;
  }
  return r;
}

// saturating power, for valuation bounds of tower constants
inline int64_t ipow_sat(int64_t base, int64_t exp) {
  int64_t r = 1;
  for (int64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

// Thread cap from CARLITZ_LAB_THREADS (default: hardware concurrency).
unsigned thread_cap();

// Runs fn(i) for i in [0, n); results collected by index so the output is
// deterministic no matter how the work is scheduled.
template <class Fn>
void parallel_for_indexed(size_t n, Fn&& fn) {
  unsigned threads = thread_cap();
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> futs;
  std::atomic<size_t> cursor{0};
  unsigned workers = std::min<size_t>(threads, n);
  futs.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&]() {
      for (;;) {
        size_t i = cursor.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    }));
  }
  for (auto& f : futs) f.get();
}

}  // namespace carlitz
