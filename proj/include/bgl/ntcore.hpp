#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "bgl/errors.hpp"

namespace bgl {

inline constexpr std::uint64_t kDefaultSieveCap = 1'000'000'000ULL;

// Deterministic Miller-Rabin over the full 64-bit range (12 fixed bases).
bool is_prime_u64(std::uint64_t n);

// Primes <= limit, ascending. Segmented; ResourceError above `cap`.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit,
                                        std::uint64_t cap = kDefaultSieveCap);

// Legendre symbol (n|p) for odd prime p, computed by the reciprocity ladder.
// 0 iff p | n, +1 for nonzero residues, -1 for non-residues.
// DomainError when p is even or p == 1 (primality of p is the caller's
// contract; use PrimeContext for a verified modulus).
int legendre(std::int64_t n, std::uint64_t p);

// An odd prime with optional cached residue table for O(1) symbol lookups.
// Immutable after construction; safe to share across threads (the lazy table
// build is serialized internally).
class PrimeContext {
 public:
  enum class TablePolicy { kAuto, kNever };

  // DomainError unless p is an odd prime.
  explicit PrimeContext(std::uint64_t p,
                        TablePolicy policy = TablePolicy::kAuto);

  std::uint64_t p() const { return p_; }

  int legendre(std::int64_t n) const;

  // Builds the quadratic-residue bitset when the policy and the memory
  // budget allow it (p <= 2^31); otherwise a no-op.
  void ensure_table() const;
  bool has_table() const;

 private:
  std::uint64_t p_;
  TablePolicy policy_;
  mutable std::once_flag table_once_;
  mutable std::vector<std::uint64_t> residue_bits_;  // bit n set <=> n is a QR mod p

  bool table_allowed() const;
  void build_table() const;
};

// Partial character sum S_p(x) = sum_{n<=x} (n|p) together with the
// residue/non-residue counts it decomposes into. Multiples of p contribute 0
// and are counted as neither, so
//   count_res + count_nonres + #{n <= x : p | n} = x.
struct CharSumProfile {
  std::uint64_t p = 0;
  std::uint64_t x = 0;
  std::int64_t value = 0;
  std::uint64_t count_res = 0;
  std::uint64_t count_nonres = 0;
};

CharSumProfile char_sum(const PrimeContext& ctx, std::uint64_t x);

// Smallest n >= 1 with (n|p) = -1; exists for every odd prime p >= 3 and is
// always prime (verified before returning).
std::uint64_t least_nonresidue(const PrimeContext& ctx);

// All primes q <= X with (q|p) = -1, ascending.
std::vector<std::uint64_t> prime_nonresidues(const PrimeContext& ctx,
                                             std::uint64_t X);

}  // namespace bgl
