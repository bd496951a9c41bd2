#include "bgl/ntcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

namespace bgl {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Jacobi symbol (a|n) for odd n >= 1. Internal only; for prime n this is the
// Legendre symbol.
int jacobi_u64(u64 a, u64 n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    int z = __builtin_ctzll(a);
    a >>= z;
    // (2|n) = -1 iff n = 3, 5 mod 8
    if ((z & 1) && (n % 8 == 3 || n % 8 == 5)) t = -t;
    // reciprocity: both a, n odd here
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = __builtin_ctzll(d);
  d >>= s;
  // This base set is deterministic for every 64-bit integer.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u64> sieve_primes(u64 limit, u64 cap) {
  if (limit > cap) {
    throw ResourceError("sieve_primes: limit " + std::to_string(limit) +
                        " exceeds configured cap " + std::to_string(cap));
  }
  std::vector<u64> primes;
  if (limit < 2) return primes;
  primes.reserve(limit > 100 ? static_cast<std::size_t>(
                                   1.2 * limit / std::log((double)limit))
                             : 32);

  const u64 root = static_cast<u64>(std::sqrt((double)limit)) + 1;
  std::vector<char> small(root + 1, 1);
  small[0] = small[1] = 0;
  for (u64 i = 2; i * i <= root; ++i)
    if (small[i])
      for (u64 j = i * i; j <= root; j += i) small[j] = 0;

  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i)
    if (small[i]) {
      base.push_back(i);
      if (i <= limit) primes.push_back(i);
    }

  const u64 seg = 1u << 20;
  std::vector<char> mark(seg);
  for (u64 lo = root + 1; lo <= limit; lo += seg) {
    const u64 hi = std::min(lo + seg - 1, limit);
    std::fill(mark.begin(), mark.begin() + (hi - lo + 1), 1);
    for (u64 q : base) {
      if (q * q > hi) break;
      u64 start = ((lo + q - 1) / q) * q;
      for (u64 j = start; j <= hi; j += q) mark[j - lo] = 0;
    }
    for (u64 v = lo; v <= hi; ++v)
      if (mark[v - lo]) primes.push_back(v);
  }
  return primes;
}

int legendre(std::int64_t n, u64 p) {
  if (p < 3 || p % 2 == 0) {
    throw DomainError("legendre: modulus must be an odd prime >= 3, got " +
                      std::to_string(p));
  }
  u64 a;
  if (n >= 0) {
    a = static_cast<u64>(n) % p;
  } else {
    u64 r = static_cast<u64>(-(n + 1)) + 1;  // |n| without overflow at INT64_MIN
    a = (p - r % p) % p;
  }
  return jacobi_u64(a, p);
}

PrimeContext::PrimeContext(u64 p, TablePolicy policy) : p_(p), policy_(policy) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) {
    throw DomainError("PrimeContext: " + std::to_string(p) +
                      " is not an odd prime");
  }
}

bool PrimeContext::table_allowed() const {
  return policy_ == TablePolicy::kAuto && p_ <= (1ULL << 31);
}

void PrimeContext::build_table() const {
  residue_bits_.assign((p_ + 63) / 64, 0);
  const u64 half = (p_ - 1) / 2;
  u64 sq = 0;
  for (u64 x = 1; x <= half; ++x) {
    sq += 2 * x - 1;  // x^2 incrementally; increment < p so one subtract reduces
    if (sq >= p_) sq -= p_;
    residue_bits_[sq >> 6] |= 1ULL << (sq & 63);
  }
}

void PrimeContext::ensure_table() const {
  if (!table_allowed()) return;
  std::call_once(table_once_, [this] { build_table(); });
}

bool PrimeContext::has_table() const { return !residue_bits_.empty(); }

int PrimeContext::legendre(std::int64_t n) const {
  if (!residue_bits_.empty()) {
    u64 a;
    if (n >= 0) {
      a = static_cast<u64>(n) % p_;
    } else {
      u64 r = static_cast<u64>(-(n + 1)) + 1;
      a = (p_ - r % p_) % p_;
    }
    if (a == 0) return 0;
    return (residue_bits_[a >> 6] >> (a & 63)) & 1 ? 1 : -1;
  }
  return bgl::legendre(n, p_);
}

CharSumProfile char_sum(const PrimeContext& ctx, std::uint64_t x) {
  if (x < 1) throw DomainError("char_sum: x must be >= 1");
  if (x >= ctx.p() / 16) ctx.ensure_table();
  CharSumProfile prof;
  prof.p = ctx.p();
  prof.x = x;
  for (u64 n = 1; n <= x; ++n) {
    int l = ctx.legendre(static_cast<std::int64_t>(n));
    prof.value += l;
    if (l > 0)
      ++prof.count_res;
    else if (l < 0)
      ++prof.count_nonres;
  }
  return prof;
}

std::uint64_t least_nonresidue(const PrimeContext& ctx) {
  for (u64 n = 2;; ++n) {
    if (ctx.legendre(static_cast<std::int64_t>(n)) == -1) {
      if (!is_prime_u64(n)) {
        throw InternalError("least_nonresidue: value " + std::to_string(n) +
                            " is not prime (mod " + std::to_string(ctx.p()) +
                            ")");
      }
      return n;
    }
  }
}

std::vector<std::uint64_t> prime_nonresidues(const PrimeContext& ctx,
                                             std::uint64_t X) {
  std::vector<u64> out;
  for (u64 q : sieve_primes(X)) {
    if (ctx.legendre(static_cast<std::int64_t>(q)) == -1) out.push_back(q);
  }
  return out;
}

}  // namespace bgl
