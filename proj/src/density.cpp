#include "bgl/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bgl {
namespace {

constexpr double kBurgessExponent = 0.15163266492815836;  // 1/(4 sqrt e)

void check_epsilon(double epsilon, bool* warning) {
  if (!(epsilon > 0) || epsilon > 0.5) {
    throw DomainError("epsilon must lie in (0, 0.5], got " +
                      std::to_string(epsilon));
  }
  *warning = epsilon > 0.01;
}

// Simpson value on [a, b] given endpoint/midpoint evaluations.
double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double (*f)(double), double a, double b, double fa,
                        double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double xi_integrand(double t) { return std::log(t) / (t + 1.0); }

}  // namespace

DensityScanResult density_scan(const PrimeContext& ctx, double epsilon,
                               ScanGrid grid, std::uint64_t n_hi) {
  DensityScanResult res;
  res.p = ctx.p();
  res.epsilon = epsilon;
  check_epsilon(epsilon, &res.epsilon_warning);
  res.small_p_warning = ctx.p() < 11;

  const double exponent = kBurgessExponent + epsilon;
  const std::uint64_t lo = static_cast<std::uint64_t>(
      std::ceil(std::pow(static_cast<double>(ctx.p()), exponent)));
  const std::uint64_t hi = n_hi == 0 ? ctx.p() : std::min(n_hi, ctx.p());
  if (lo > hi) {
    throw DomainError("density_scan: empty window [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  }
  res.window_lo = lo;
  res.window_hi = hi;

  const bool exact = grid == ScanGrid::kExact ||
                     (grid == ScanGrid::kAuto && ctx.p() <= 10'000'000ULL);
  ctx.ensure_table();

  // Grid points are consumed in ascending order from a single running pass.
  std::vector<std::uint64_t> gridpoints;
  if (!exact) {
    double g = static_cast<double>(lo);
    std::uint64_t last = 0;
    while (static_cast<std::uint64_t>(g) < hi) {
      std::uint64_t n = static_cast<std::uint64_t>(g);
      if (n > last && n >= lo) {
        gridpoints.push_back(n);
        last = n;
      }
      g *= 1.01;
    }
    if (gridpoints.empty() || gridpoints.front() != lo)
      gridpoints.insert(gridpoints.begin(), lo);
    if (gridpoints.back() != hi) gridpoints.push_back(hi);
  }

  std::int64_t running = 0;
  std::uint64_t nonres = 0;
  std::size_t gi = 0;
  res.min_density = 2.0;
  for (std::uint64_t n = 1; n <= hi; ++n) {
    int l = ctx.legendre(static_cast<std::int64_t>(n));
    running += l;
    if (l < 0) ++nonres;
    if (n < lo) continue;
    bool sample = exact;
    if (!exact && gi < gridpoints.size() && gridpoints[gi] == n) {
      sample = true;
      ++gi;
    }
    if (!sample) continue;
    ++res.scanned_points;
    const double d = static_cast<double>(nonres) / static_cast<double>(n);
    if (d < res.min_density) {
      res.min_density = d;
      res.argmin_n = n;
    }
    const double r = std::abs(static_cast<double>(running)) /
                     static_cast<double>(n);
    res.max_abs_charsum_ratio = std::max(res.max_abs_charsum_ratio, r);
  }
  return res;
}

double hildebrand_ratio(const PrimeContext& ctx) {
  if (ctx.p() < 17) {
    throw DomainError("hildebrand_ratio: requires p >= 17");
  }
  std::uint64_t r = static_cast<std::uint64_t>(
      std::pow(static_cast<double>(ctx.p()), 0.25));
  auto fourth = [](std::uint64_t v) {
    return (unsigned __int128)v * v * v * v;
  };
  while (fourth(r + 1) <= ctx.p()) ++r;
  while (fourth(r) > ctx.p()) --r;
  std::int64_t s = 0;
  for (std::uint64_t n = 1; n <= r; ++n) {
    s += ctx.legendre(static_cast<std::int64_t>(n));
  }
  return static_cast<double>(s) / static_cast<double>(r);
}

MertensTail mertens_tail(double y, double z, std::uint64_t sieve_cap) {
  if (y < 2) throw DomainError("mertens_tail: y must be >= 2");
  if (z < y) throw DomainError("mertens_tail: z must be >= y");
  MertensTail out;
  const std::uint64_t zi = static_cast<std::uint64_t>(z);
  // Kahan summation; reciprocal sums over long prime ranges lose bits otherwise.
  double sum = 0.0, carry = 0.0;
  for (std::uint64_t q : sieve_primes(zi, sieve_cap)) {
    if (static_cast<double>(q) <= y || static_cast<double>(q) > z) continue;
    double term = 1.0 / static_cast<double>(q) - carry;
    double t = sum + term;
    carry = (t - sum) - term;
    sum = t;
  }
  out.sum = sum;
  out.prediction = std::log(std::log(z) / std::log(y));
  out.deviation = std::abs(out.sum - out.prediction);
  return out;
}

double reciprocal_nonres_sum(const PrimeContext& ctx, std::uint64_t X) {
  double sum = 0.0, carry = 0.0;
  for (std::uint64_t q : prime_nonresidues(ctx, X)) {
    double term = 1.0 / static_cast<double>(q) - carry;
    double t = sum + term;
    carry = (t - sum) - term;
    sum = t;
  }
  return sum;
}

ConstructionReport construct_nonresidues(const PrimeContext& ctx,
                                         std::uint64_t N, double epsilon) {
  ConstructionReport rep;
  rep.p = ctx.p();
  rep.n_bound = N;
  rep.epsilon = epsilon;
  check_epsilon(epsilon, &rep.epsilon_warning);

  const std::vector<std::uint64_t> q = prime_nonresidues(ctx, N);
  if (q.empty()) {
    throw DomainError("construct_nonresidues: no prime non-residue <= " +
                      std::to_string(N) + " mod " + std::to_string(ctx.p()));
  }

  auto residues_upto = [&](std::uint64_t bound) {
    std::vector<std::uint64_t> r;
    for (std::uint64_t n = 1; n <= bound; ++n) {
      if (ctx.legendre(static_cast<std::int64_t>(n)) == 1) r.push_back(n);
    }
    return r;
  };

  if (static_cast<double>(q[0]) <= 1.0 / epsilon) {
    rep.mode = ConstructionReport::Mode::kSmallQ1;
    rep.k = 1;
    for (std::uint64_t n : residues_upto(N / q[0])) {
      rep.products.push_back(q[0] * n);
    }
  } else {
    rep.mode = ConstructionReport::Mode::kLargeQ1;
    double sum = 0.0;
    std::size_t k = 0;
    while (k < q.size() && sum < epsilon) {
      sum += 1.0 / static_cast<double>(q[k]);
      ++k;
    }
    rep.k = k;
    rep.epsilon_sum_reached = sum >= epsilon;
    rep.epsilon_sum_overshoot = sum > 2.0 * epsilon;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::uint64_t m : residues_upto(N / q[j])) {
        bool coprime = true;
        for (std::size_t l = 0; l < k; ++l) {
          if (m % q[l] == 0) {
            coprime = false;
            break;
          }
        }
        if (coprime) rep.products.push_back(q[j] * m);
      }
    }
  }

  // Soundness: every product is a non-residue <= N and the list is
  // duplicate-free.
  std::vector<std::uint64_t> sorted = rep.products;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InternalError("construct_nonresidues: duplicate product");
  }
  for (std::uint64_t v : rep.products) {
    if (v > N || ctx.legendre(static_cast<std::int64_t>(v)) != -1) {
      throw InternalError("construct_nonresidues: product " +
                          std::to_string(v) + " failed verification");
    }
  }
  rep.verified_count = rep.products.size();
  return rep;
}

double xi_constant(double tolerance) {
  if (tolerance < 1e-12) {
    throw DomainError("xi_constant: tolerance must be >= 1e-12");
  }
  const double sqrt_e = std::sqrt(std::exp(1.0));
  const double a = 1.0, b = sqrt_e;
  const double fa = xi_integrand(a);
  const double fb = xi_integrand(b);
  const double fm = xi_integrand(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, a, b);
  const double integral =
      adaptive_simpson(xi_integrand, a, b, fa, fm, fb, whole,
                       tolerance / 2.0, 60);
  return 1.0 - 2.0 * std::log(1.0 + sqrt_e) + 4.0 * integral;
}

GsCurves gs_curves(double alpha) {
  const double lo = std::exp(-0.5);
  if (!(alpha >= lo && alpha <= 1.0)) {
    throw DomainError("gs_curves: alpha must lie in [1/sqrt(e), 1]");
  }
  GsCurves out;
  const double la = std::log(alpha);
  static const double xi = std::abs(xi_constant(1e-10));
  out.bound = std::max(xi, 0.5 + 2.0 * la * la);
  out.conjecture = -2.0 * la;
  return out;
}

}  // namespace bgl
