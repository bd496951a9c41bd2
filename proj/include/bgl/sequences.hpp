#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgl/exppairs.hpp"
#include "bgl/interval.hpp"
#include "bgl/ntcore.hpp"

namespace bgl {

// Parameters of the Beatty sequence floor(alpha n + beta). alpha and beta are
// guaranteed-precision enclosures; fractional-part decisions that land within
// 2^-64 of a boundary raise PrecisionError instead of being guessed.
struct BeattyParams {
  IntervalReal alpha;
  IntervalReal beta;
  bool alpha_irrational = true;
  mpfr_prec_t precision_bits = IntervalReal::kDefaultPrec;

  // Token forms: sqrt2 | sqrt3 | phi | e | decimal literal.
  static BeattyParams make(const std::string& alpha_token,
                           const std::string& beta_token,
                           mpfr_prec_t precision_bits = IntervalReal::kDefaultPrec);
};

// Exact floor(alpha n + beta). For alpha < 0 the value is produced through
// the reflection floor(x) = -floor(-x + 1) (adjusted on exact integers, where
// that identity is off by one). PrecisionError when the floor cannot be
// decided at the working precision.
std::int64_t beatty_term(const BeattyParams& params, std::int64_t n);

struct BeattyMembership {
  bool member = false;
  std::optional<std::int64_t> index;  // witness n with floor(alpha n + beta) = m
};

// Membership of m in the Beatty sequence for alpha > 1 via the criterion
// 0 < {alpha^-1 (m - beta + 1)} <= alpha^-1, with the index recovered as
// ceil(alpha^-1 (m - beta)) and re-verified. DomainError when m <= beta or
// alpha <= 1.
BeattyMembership beatty_contains(const BeattyParams& params, std::int64_t m);

// Smallest n <= cap whose Beatty term is a non-residue mod p; terms <= 0 and
// multiples of p are skipped. nullopt when the cap is reached (the
// "N = infinity" convention).
std::optional<std::int64_t> least_beatty_nonresidue(const BeattyParams& params,
                                                    const PrimeContext& ctx,
                                                    std::int64_t cap = 1'000'000);

// Number of n <= n_max violating floor(alpha n + beta) = -floor(-alpha n - beta + 1),
// for irrational alpha < 0. At most one violation is possible.
std::int64_t negation_identity_exceptions(const BeattyParams& params,
                                          std::int64_t n_max);

// Piatetski-Shapiro exponent c = a/b with 1 < c < 2, coprime.
struct PSParams {
  unsigned long a = 0;
  unsigned long b = 0;

  PSParams(unsigned long a_, unsigned long b_);
  double c() const { return static_cast<double>(a) / static_cast<double>(b); }

  // Parses "a/b"; DomainError on malformed input or out-of-range c.
  static PSParams parse(const std::string& text);
};

// floor(n^(a/b)) as the integer b-th root of n^a; no floating point.
mpz_class ps_term_z(const PSParams& params, std::uint64_t n);
// Same, narrowed to u64; ResourceError if the value does not fit.
std::uint64_t ps_term(const PSParams& params, std::uint64_t n);

std::optional<std::uint64_t> least_ps_nonresidue(const PSParams& params,
                                                 const PrimeContext& ctx,
                                                 std::uint64_t cap = 1'000'000);

// Outcome of the product-witness criterion for a pair (ell, m):
//   1 - 1/(2 (LM)^(1 - 1/c)) <= { (ell m)^(1/c) }  =>  floor(n^c) = ell m
// with n = floor((ell m)^(1/c)) + 1. The implication is only guaranteed for
// large L, M; a criterion hit whose n fails the exact re-check is reported as
// kCriterionUnverified, not an error.
struct WitnessResult {
  enum class Status { kNoCriterion, kVerified, kCriterionUnverified };
  Status status = Status::kNoCriterion;
  std::uint64_t n = 0;
};

WitnessResult ps_product_witness(const PSParams& params, std::uint64_t ell,
                                 std::uint64_t m, std::uint64_t L,
                                 std::uint64_t M,
                                 mpfr_prec_t prec = IntervalReal::kDefaultPrec);

struct PsPipelineWitness {
  std::uint64_t n = 0;
  std::uint64_t ell = 0;
  std::uint64_t m = 0;
  std::uint64_t value = 0;  // ell * m = floor(n^c), verified non-residue
};

struct PsPipelineResult {
  std::uint64_t p = 0;
  double epsilon = 0;
  double delta_hat = 0;   // measured non-residue density in [1, window]
  unsigned j_count = 0;   // J = ceil(log(2/delta_hat)/log 2)
  std::uint64_t L = 0;    // chosen dyadic window endpoint
  std::uint64_t M = 0;    // Hall-window endpoint near L^(2(c-1)/(2-c)) (log L)^A
  std::size_t ell_count = 0;   // non-residues in (L/2, L]
  std::size_t m_count = 0;     // residues in (M/2, M]
  std::size_t criterion_hits = 0;
  std::size_t unverified_hits = 0;
  std::vector<PsPipelineWitness> witnesses;
  bool window_small = false;  // L < 16: below the intended desk-scale regime
};

// Desk-scale analogue of the product construction: pick the dyadic window
// with the most non-residues, pair it with a residue window, and harvest
// witnesses n with floor(n^c) = ell m. Every witness is re-verified exactly
// (integer root and Legendre symbol). DomainError when c is outside the
// pair's admissible range or the window is degenerate.
PsPipelineResult ps_product_pipeline(const PSParams& params, const PrimeContext& ctx,
                                 const ExponentPair& pair, double epsilon,
                                 double log_power_a = 1.0, unsigned jobs = 1);

}  // namespace bgl
