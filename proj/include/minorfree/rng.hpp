#ifndef MINORFREE_RNG_HPP
#define MINORFREE_RNG_HPP

#include <cstdint>
#include <string_view>

// Keyed deterministic random streams.
//
// Every random draw in the library comes from a stream derived from one
// master seed by labeled key derivation: key = H(seed, label, k1, k2, ...).
// A stream is a pure function of its key, so the answer of any randomized
// procedure depends only on (seed, its own key words) and never on which
// other streams were consumed before it.  That is the property the oracle
// consistency contract needs: repeated or reordered queries see identical
// randomness.

namespace minorfree {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Finalizer with full avalanche; one application per draw keeps walk steps
// cheap while remaining statistically solid for this use.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t absorb(std::uint64_t h, std::uint64_t word) {
  return mix64((h + kGolden) ^ word);
}

}  // namespace detail

class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : state_(key) {}

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  // Uniform in [0, bound); bound >= 1.  Rejection keeps it exactly uniform
  // and platform-independent.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t derive_key(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = detail::mix64(seed ^ detail::kGolden);
  for (const char ch : label) {
    h = detail::absorb(h, static_cast<unsigned char>(ch));
  }
  return h;
}

template <class... Words>
std::uint64_t derive_key(std::uint64_t seed, std::string_view label,
                         Words... words) {
  std::uint64_t h = derive_key(seed, label);
  ((h = detail::absorb(h, static_cast<std::uint64_t>(words))), ...);
  return h;
}

template <class... Words>
RngStream make_stream(std::uint64_t seed, std::string_view label,
                      Words... words) {
  return RngStream(derive_key(seed, label, words...));
}

}  // namespace minorfree

#endif  // MINORFREE_RNG_HPP
