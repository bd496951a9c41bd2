#include "bgl/prime_cache.hpp"

#include <cstring>
#include <fstream>

namespace bgl {
namespace {

void put_u32_le(std::vector<std::uint8_t>& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back((v >> (8 * i)) & 0xff);
}

void put_u64_le(std::vector<std::uint8_t>& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back((v >> (8 * i)) & 0xff);
}

std::uint32_t get_u32_le(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(p[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64_le(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(p[i]) << (8 * i);
  return v;
}

constexpr std::size_t kHeaderBytes = 8 + 4 + 8;

PrimeCache build_cache(std::uint64_t limit, std::uint64_t cap) {
  PrimeCache cache;
  cache.limit = limit;
  cache.odd_bits.assign(PrimeCache::payload_bytes(limit), 0);
  for (std::uint64_t q : sieve_primes(limit, cap)) {
    if (q == 2) continue;
    const std::uint64_t i = (q - 1) / 2;
    cache.odd_bits[i >> 3] |= std::uint8_t(1) << (i & 7);
  }
  return cache;
}

}  // namespace

std::size_t PrimeCache::payload_bytes(std::uint64_t limit) {
  const std::uint64_t bits = limit == 0 ? 0 : (limit + 1) / 2;
  return static_cast<std::size_t>((bits + 7) / 8);
}

bool PrimeCache::is_prime(std::uint64_t n) const {
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0 || n > limit) return false;
  const std::uint64_t i = (n - 1) / 2;
  return (odd_bits[i >> 3] >> (i & 7)) & 1;
}

std::vector<std::uint64_t> PrimeCache::primes_upto(std::uint64_t bound) const {
  if (bound > limit) {
    throw DomainError("PrimeCache: bound exceeds cached limit");
  }
  std::vector<std::uint64_t> out;
  if (bound >= 2) out.push_back(2);
  for (std::uint64_t n = 3; n <= bound; n += 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

PrimeCache load_or_build_prime_cache(const std::filesystem::path& path,
                                     std::uint64_t limit, bool* regenerated,
                                     std::uint64_t cap) {
  if (regenerated) *regenerated = false;
  {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::vector<std::uint8_t> header(kHeaderBytes);
      in.read(reinterpret_cast<char*>(header.data()), kHeaderBytes);
      if (in.gcount() == static_cast<std::streamsize>(kHeaderBytes) &&
          std::memcmp(header.data(), PrimeCache::kMagic, 8) == 0 &&
          get_u32_le(header.data() + 8) == PrimeCache::kFormatVersion) {
        const std::uint64_t stored_limit = get_u64_le(header.data() + 12);
        if (stored_limit >= limit) {
          PrimeCache cache;
          cache.limit = stored_limit;
          cache.odd_bits.resize(PrimeCache::payload_bytes(stored_limit));
          in.read(reinterpret_cast<char*>(cache.odd_bits.data()),
                  static_cast<std::streamsize>(cache.odd_bits.size()));
          if (in.gcount() ==
                  static_cast<std::streamsize>(cache.odd_bits.size()) &&
              in.peek() == std::ifstream::traits_type::eof()) {
            return cache;
          }
        }
      }
      // invalid or insufficient; fall through to regeneration
    }
  }

  PrimeCache cache = build_cache(limit, cap);
  std::vector<std::uint8_t> blob;
  blob.reserve(kHeaderBytes + cache.odd_bits.size());
  blob.insert(blob.end(), PrimeCache::kMagic, PrimeCache::kMagic + 8);
  put_u32_le(blob, PrimeCache::kFormatVersion);
  put_u64_le(blob, cache.limit);
  blob.insert(blob.end(), cache.odd_bits.begin(), cache.odd_bits.end());

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ResourceError("prime cache: cannot write " + tmp.string());
    }
    out.write(reinterpret_cast<const char*>(blob.data()),
              static_cast<std::streamsize>(blob.size()));
    if (!out) {
      throw ResourceError("prime cache: short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw ResourceError("prime cache: rename failed: " + ec.message());
  }
  if (regenerated) *regenerated = true;
  return cache;
}

}  // namespace bgl
