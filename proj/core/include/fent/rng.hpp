#ifndef FENT_RNG_HPP
#define FENT_RNG_HPP

#include <cstdint>

namespace fent {

// splitmix64: fast, well-mixed 64-bit hash used to derive independent
// substreams from (seed, counter) pairs. Counter-based derivation keeps
// every sample reproducible regardless of evaluation order or thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_streams(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

// Uniform double in [0, 1) from a 64-bit word (53-bit mantissa).
inline double to_unit_double(std::uint64_t w) {
  return static_cast<double>(w >> 11) * 0x1.0p-53;
}

// Small counter-based generator: state advances by hashing.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : state_(splitmix64(seed)) {}
  std::uint64_t next_u64() {
    state_ = splitmix64(state_);
    return state_;
  }
  double next_unit() { return to_unit_double(next_u64()); }

 private:
  std::uint64_t state_;
};

}  // namespace fent

#endif
