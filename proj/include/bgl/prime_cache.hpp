#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "bgl/ntcore.hpp"

namespace bgl {

// On-disk primality bitset over odd integers. Layout (little-endian):
//   magic "BGLPRIME" (8 bytes) | format version u32 | limit u64 | payload
// where payload bit i (LSB-first within bytes) is set iff 2i+1 is prime.
// The even prime 2 is implied by convention.
struct PrimeCache {
  static constexpr char kMagic[9] = "BGLPRIME";
  static constexpr std::uint32_t kFormatVersion = 1;

  std::uint64_t limit = 0;
  std::vector<std::uint8_t> odd_bits;

  bool is_prime(std::uint64_t n) const;
  std::vector<std::uint64_t> primes_upto(std::uint64_t bound) const;

  static std::size_t payload_bytes(std::uint64_t limit);
};

// Loads the cache when the header is valid and covers `limit`; otherwise
// sieves, writes atomically (temp file + rename), and returns the fresh
// cache. A corrupt or truncated file is regenerated, not an error; an
// unwritable path is a ResourceError. `regenerated`, when given, reports
// whether the file was (re)built.
PrimeCache load_or_build_prime_cache(const std::filesystem::path& path,
                                     std::uint64_t limit,
                                     bool* regenerated = nullptr,
                                     std::uint64_t cap = kDefaultSieveCap);

}  // namespace bgl
