#pragma once

#include <cstdint>

namespace sonmsim {

// splitmix64 stream. std::mt19937 with std distributions is not portable
// across standard libraries; this is, and two runs with the same seed must
// agree byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    if (hi <= lo) return lo;
    return lo + next() % (hi - lo + 1);
  }

  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) {
    if (num == 0) return false;
    if (num >= den) return true;
    return next() % den < num;
  }

  // Child stream derived by label; adding streams never perturbs siblings.
  Rng fork(std::uint64_t label) const {
    Rng child(state_ ^ (label * 0xd1b54a32d192ed03ull + 0x2545f4914f6cdd1dull));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace sonmsim
