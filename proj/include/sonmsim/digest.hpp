#pragma once

#include <cstdint>
#include <string_view>

namespace sonmsim {

// FNV-1a 64-bit. Chosen for cross-platform determinism; std::hash is
// implementation-defined and unusable for replayable traces.
class Fnv64 {
 public:
  static constexpr std::uint64_t kOffset = 1469598103934665603ull;
  static constexpr std::uint64_t kPrime = 1099511628211ull;

  Fnv64& update(const void* data, std::size_t len) {
    auto p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      state_ ^= p[i];
      state_ *= kPrime;
    }
    return *this;
  }
  Fnv64& update(std::string_view s) { return update(s.data(), s.size()); }
  Fnv64& update(std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    return update(buf, 8);
  }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_{kOffset};
};

inline std::uint64_t fnv64(std::string_view s) { return Fnv64().update(s).value(); }

template <typename... Parts>
std::uint64_t digest_of(Parts... parts) {
  Fnv64 h;
  (h.update(parts), ...);
  return h.value();
}

}  // namespace sonmsim
