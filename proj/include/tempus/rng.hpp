#pragma once

#include <cstdint>

// Counter-based splittable generator: every draw is a stateless hash of
// (master_seed, walker_index, event_index), so streams are independent of
// execution order and of the degree of parallelism, and results reproduce
// bit-exactly across platforms.

namespace tempus::rng {

// Murmur3 64-bit finalizer; full avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

inline std::uint64_t keyed_u64(std::uint64_t master_seed,
                               std::uint64_t walker_index,
                               std::uint64_t event_index) {
  std::uint64_t h = mix64(master_seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (walker_index + 0x9e3779b97f4a7c15ULL));
  h = mix64(h ^ (event_index + 0x632be59bd9b4e019ULL));
  return h;
}

// Uniform on (0, 1]: 53 mantissa bits, never zero, so -log stays finite.
inline double keyed_open_unit(std::uint64_t master_seed,
                              std::uint64_t walker_index,
                              std::uint64_t event_index) {
  const std::uint64_t bits = keyed_u64(master_seed, walker_index, event_index);
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

}  // namespace tempus::rng
