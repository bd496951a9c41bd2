#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bgl/interval.hpp"
#include "bgl/ntcore.hpp"
#include "bgl/sequences.hpp"

namespace bgl {

// Continued-fraction expansion with exact-rational convergents. The
// recurrences p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2},
// coprimality, and |x - p_k/q_k| <= 1/q_k^2 are enforced at construction.
struct Convergent {
  mpz_class num;
  mpz_class den;
};

struct CFExpansion {
  std::vector<mpz_class> partial_quotients;
  std::vector<Convergent> convergents;
  bool terminated = false;  // the target was rational and fully expanded
};

// First K convergents of x (fewer when the expansion terminates).
// PrecisionError naming the count achieved when the enclosure exhausts
// before K quotients.
CFExpansion cf_convergents(const IntervalReal& x, std::size_t K);

// Points in [0, 1); the carrier for discrepancy and exponential sums.
struct UnitSequence {
  std::vector<double> points;
};

UnitSequence kronecker_sequence(const IntervalReal& alpha, std::size_t count);
// Deterministic across platforms: raw 53-bit mantissa mapping of SplitMix-fed
// mt19937_64 output.
UnitSequence random_unit_sequence(std::uint64_t seed, std::size_t count);

// sum_t e(h x_t) with compensated summation; |result| <= T.
std::complex<double> exp_sum(const UnitSequence& seq, long h);

// Exact star discrepancy via the sorted-points formula. DomainError on empty.
double star_discrepancy(const UnitSequence& seq);

// Explicit-constant bound c1/(H+1) + c2 sum_{h<=H} |S_h| / (h T); with the
// default (1, 3) it dominates the star discrepancy.
double erdos_turan_bound(const UnitSequence& seq, unsigned H, double c1 = 1.0,
                         double c2 = 3.0);

// X Y sqrt(1/X + 1/Y + 1/q + q/(X Y)); the bilinear-sum envelope, evaluated
// as a pure formula (no implied constant).
double vinogradov_bound(double X, double Y, std::uint64_t q);

// sum_{n<=N} sum_{m<=M} a_n b_m e(lambda h n m). Unit coefficients use the
// per-row geometric closed form (O(N)); explicit coefficients use the direct
// double sum, capped at N*M <= 10^10.
std::complex<double> bilinear_sum(double lambda, long h, std::uint64_t N,
                                  std::uint64_t M,
                                  std::span<const std::complex<double>> a = {},
                                  std::span<const std::complex<double>> b = {});

// #{(n, m) : n <= N, m <= M, (nm|p) = sigma} by row decomposition, O(N + M).
std::uint64_t pair_count_W(const PrimeContext& ctx, std::uint64_t N,
                           std::uint64_t M, int sigma);

struct PairCountRecord {
  std::uint64_t p = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  int sigma = 0;
  std::uint64_t count_W = 0;
  std::uint64_t count_V = 0;
  double lambda = 0;  // 1/alpha
};

// Joint count of W-pairs whose product lands in the Beatty value set:
// 0 < {lambda n m - lambda beta + lambda} <= lambda. Exact: the double
// fast path escalates to interval arithmetic near the boundary.
// ResourceError when N*M > 10^9.
PairCountRecord pair_count_V(const PrimeContext& ctx, std::uint64_t N,
                             std::uint64_t M, int sigma,
                             const BeattyParams& params);

struct PairExperimentWitness {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t value = 0;       // n*m, a verified non-residue
  std::int64_t beatty_index = 0; // ceil(lambda (value - beta)), re-verified
};

struct PairExperimentResult {
  std::uint64_t p = 0;
  double epsilon = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  double lambda = 0;
  std::uint64_t count_W_plus = 0, count_W_minus = 0;
  std::uint64_t count_V_plus = 0, count_V_minus = 0;
  std::size_t verified_witnesses = 0;  // all of V^- passed both re-checks
  std::vector<PairExperimentWitness> witness_sample;
  unsigned H = 0;          // empirical cutoff: first h with rho_hat > threshold
  double rho_hat_at_H = 0; // |bilinear_sum(lambda, H, N, M)| / (N M)
};

// Builds N = floor(p^(1/(4 sqrt e) + eps/2)), M = floor(p^(eps/2)), counts W
// and V for both signs, and re-verifies every sigma = -1 witness through the
// membership lemma and the Legendre symbol. Requires alpha > 1 irrational.
PairExperimentResult beatty_pair_experiment(const PrimeContext& ctx,
                                   const BeattyParams& params, double epsilon,
                                   std::size_t witness_sample_cap = 32,
                                   double rho_threshold = 0.05);

// Case 3 bookkeeping for alpha < -1: run the experiment on (-alpha, -beta+1)
// with sigma = -(-1|p).
int reflected_sigma(const PrimeContext& ctx);
BeattyParams reflect_params(const BeattyParams& params);

}  // namespace bgl
