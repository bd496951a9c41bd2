#pragma once

#include <cstdint>
#include <vector>

#include "bgl/ntcore.hpp"

namespace bgl {

// Result of scanning non-residue density over the window
// [ceil(p^(1/(4 sqrt e) + eps)), n_hi]. min_density is the minimum of
// count_nonres(N)/N over the scanned N; max_abs_charsum_ratio the maximum of
// |S_p(N)|/N. The contraction predicted for large p is reported, never
// asserted.
struct DensityScanResult {
  std::uint64_t p = 0;
  double epsilon = 0;
  std::uint64_t window_lo = 0;
  std::uint64_t window_hi = 0;
  double min_density = 0;
  std::uint64_t argmin_n = 0;
  double max_abs_charsum_ratio = 0;
  std::uint64_t scanned_points = 0;
  bool epsilon_warning = false;  // epsilon in (0.01, 0.5], accepted with warning
  bool small_p_warning = false;  // p < 11
};

enum class ScanGrid { kExact, kGeometric, kAuto };

// Single pass over n = 1..n_hi with running counts; every N is inspected in
// exact mode, a ratio-1.01 geometric grid plus both endpoints otherwise.
// kAuto picks exact for p <= 10^7. n_hi = 0 means n_hi = p.
// DomainError when the window is empty or epsilon is out of (0, 0.5].
DensityScanResult density_scan(const PrimeContext& ctx, double epsilon,
                               ScanGrid grid = ScanGrid::kAuto,
                               std::uint64_t n_hi = 0);

// S_p(floor(p^(1/4))) / floor(p^(1/4)); diagnostic. Requires p >= 17.
double hildebrand_ratio(const PrimeContext& ctx);

struct MertensTail {
  double sum = 0;         // sum of 1/q over primes y < q <= z
  double prediction = 0;  // log(log z / log y)
  double deviation = 0;
};

// DomainError when y < 2 or z < y; ResourceError when z exceeds the sieve cap.
MertensTail mertens_tail(double y, double z,
                         std::uint64_t sieve_cap = kDefaultSieveCap);

// Sum of 1/q over prime non-residues q <= X.
double reciprocal_nonres_sum(const PrimeContext& ctx, std::uint64_t X);

// Constructive witness list of non-residues <= N built from prime
// non-residues q_j and residues m <= N/q_j, following the two branches of
// the existence argument. Every product is re-verified with the Legendre
// symbol; the list is duplicate-free by construction and asserted so.
struct ConstructionReport {
  std::uint64_t p = 0;
  std::uint64_t n_bound = 0;  // the size bound N
  double epsilon = 0;
  enum class Mode { kSmallQ1, kLargeQ1 } mode = Mode::kSmallQ1;
  std::size_t k = 0;  // number of prime non-residues used (large-q1 branch)
  std::vector<std::uint64_t> products;
  std::size_t verified_count = 0;
  bool epsilon_sum_reached = true;    // sum_{l<=k} 1/q_l >= epsilon achieved
  bool epsilon_sum_overshoot = false; // that sum exceeds 2 epsilon
  bool epsilon_warning = false;       // epsilon in (0.01, 0.5]
};

// DomainError when no prime non-residue <= N exists or epsilon is out of
// (0, 0.5]. epsilon above 0.01 is accepted with a warning flag so the
// large-q1 branch stays reachable at desk scale.
ConstructionReport construct_nonresidues(const PrimeContext& ctx,
                                         std::uint64_t N, double epsilon);

// xi = 1 - 2 log(1 + sqrt e) + 4 * integral_1^sqrt(e) log(t)/(t+1) dt,
// evaluated by adaptive Simpson quadrature to the requested tolerance
// (tolerance >= 1e-12). The value is -0.656999...
double xi_constant(double tolerance);

struct GsCurves {
  double bound = 0;       // max(|xi|, 1/2 + 2 (log alpha)^2)
  double conjecture = 0;  // -2 log alpha
};

// DomainError unless 1/sqrt(e) <= alpha <= 1.
GsCurves gs_curves(double alpha);

}  // namespace bgl
