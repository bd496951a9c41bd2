#include "bgl/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace bgl {
namespace {

constexpr double kBurgessExponent = 0.15163266492815836;  // 1/(4 sqrt e)

std::complex<double> unit_phase(double x) {
  const double ang = 2.0 * std::numbers::pi * x;
  return {std::cos(ang), std::sin(ang)};
}

// Decides 0 < {lambda v - lambda beta + lambda} <= lambda for integer v,
// with a double fast path that escalates to interval arithmetic near the
// boundary (PrecisionError when even that cannot decide).
class BeattyValueCriterion {
 public:
  explicit BeattyValueCriterion(const BeattyParams& params)
      : params_(params),
        one_(1, params.precision_bits),
        zero_(0, params.precision_bits),
        lambda_(params.alpha.reciprocal()),
        lam_d_(lambda_.mid_double()),
        off_d_((lambda_ * (one_ - params.beta)).mid_double()) {}

  const IntervalReal& lambda() const { return lambda_; }
  double lambda_mid() const { return lam_d_; }

  bool decide(std::uint64_t v) const {
    const double t = lam_d_ * static_cast<double>(v) + off_d_;
    const double f = t - std::floor(t);
    // double round-off grows with v; stay exact near the boundary
    const double margin = static_cast<double>(v + 16) * 0x1.0p-50;
    if (f > margin && f < lam_d_ - margin) return true;
    if (f > lam_d_ + margin && f < 1.0 - margin) return false;
    return decide_exact(v);
  }

  bool decide_exact(std::uint64_t v) const {
    const IntervalReal t =
        lambda_ * (IntervalReal(static_cast<long>(v), params_.precision_bits) -
                   params_.beta + one_);
    auto frac = t.checked_frac();
    if (!frac) {
      throw PrecisionError("Beatty value criterion: fractional part undecided"
                           " at v = " + std::to_string(v));
    }
    const Trilean pos = zero_.less(*frac);
    const Trilean le = frac->less_equal(lambda_);
    if (pos == Trilean::kUnknown || le == Trilean::kUnknown) {
      throw PrecisionError("Beatty value criterion: boundary at v = " +
                           std::to_string(v));
    }
    return pos == Trilean::kTrue && le == Trilean::kTrue;
  }

 private:
  const BeattyParams& params_;
  IntervalReal one_;
  IntervalReal zero_;
  IntervalReal lambda_;
  double lam_d_;
  double off_d_;
};

// Kahan accumulator for complex terms.
struct CompensatedSum {
  double re = 0, re_c = 0, im = 0, im_c = 0;
  void add(std::complex<double> v) {
    double tr = v.real() - re_c;
    double sr = re + tr;
    re_c = (sr - re) - tr;
    re = sr;
    double ti = v.imag() - im_c;
    double si = im + ti;
    im_c = (si - im) - ti;
    im = si;
  }
  std::complex<double> value() const { return {re, im}; }
};

}  // namespace

CFExpansion cf_convergents(const IntervalReal& x, std::size_t K) {
  if (K < 1) throw DomainError("cf_convergents: K must be >= 1");
  CFExpansion out;
  mpz_class p_prev(1), p_prev2(0);  // p_{-1}, p_{-2}
  mpz_class q_prev(0), q_prev2(1);  // q_{-1}, q_{-2}
  IntervalReal cur = x;
  for (std::size_t k = 0; k < K; ++k) {
    auto a = cur.checked_floor();
    if (!a) {
      throw PrecisionError("cf_convergents: precision exhausted after " +
                           std::to_string(k) + " quotients (requested " +
                           std::to_string(K) + ")");
    }
    if (k >= 1 && *a < 1) {
      throw InternalError("cf_convergents: nonpositive partial quotient");
    }
    const mpz_class pk = *a * p_prev + p_prev2;
    const mpz_class qk = *a * q_prev + q_prev2;
    if (gcd(pk, qk) != 1) {
      throw InternalError("cf_convergents: convergent not in lowest terms");
    }
    // |x - p/q| <= 1/q^2  <=>  |x q - p| <= 1/q; refuted only if provably so
    const IntervalReal err =
        (x * IntervalReal::from_integer(qk, x.precision()) -
         IntervalReal::from_integer(pk, x.precision()))
            .abs();
    const IntervalReal bound =
        IntervalReal::from_integer(qk, x.precision()).reciprocal();
    if (err.less_equal(bound) == Trilean::kFalse) {
      throw InternalError("cf_convergents: approximation bound violated");
    }
    out.partial_quotients.push_back(*a);
    out.convergents.push_back({pk, qk});
    p_prev2 = p_prev;
    p_prev = pk;
    q_prev2 = q_prev;
    q_prev = qk;

    IntervalReal rem = cur - IntervalReal::from_integer(*a, cur.precision());
    if (rem.sign() == 0) {
      if (rem.is_point()) {
        out.terminated = true;  // exact rational, expansion complete
        break;
      }
      throw PrecisionError("cf_convergents: precision exhausted after " +
                           std::to_string(k + 1) + " quotients (requested " +
                           std::to_string(K) + ")");
    }
    cur = rem.reciprocal();
  }
  return out;
}

UnitSequence kronecker_sequence(const IntervalReal& alpha, std::size_t count) {
  UnitSequence seq;
  seq.points.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    const IntervalReal t = alpha.mul_si(static_cast<long>(n));
    auto frac = t.checked_frac();
    if (!frac) {
      throw PrecisionError("kronecker_sequence: point " + std::to_string(n) +
                           " undecided");
    }
    double v = frac->mid_double();
    if (v >= 1.0) v = std::nextafter(1.0, 0.0);
    if (v < 0.0) v = 0.0;
    seq.points.push_back(v);
  }
  return seq;
}

UnitSequence random_unit_sequence(std::uint64_t seed, std::size_t count) {
  UnitSequence seq;
  seq.points.reserve(count);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    // top 53 bits -> [0, 1); avoids distribution-implementation variance
    seq.points.push_back(static_cast<double>(rng() >> 11) * 0x1.0p-53);
  }
  return seq;
}

std::complex<double> exp_sum(const UnitSequence& seq, long h) {
  if (h == 0) throw DomainError("exp_sum: h must be nonzero");
  CompensatedSum acc;
  for (double x : seq.points) {
    double y = std::fmod(static_cast<double>(h) * x, 1.0);
    acc.add(unit_phase(y));
  }
  return acc.value();
}

double star_discrepancy(const UnitSequence& seq) {
  if (seq.points.empty()) throw DomainError("star_discrepancy: empty sequence");
  std::vector<double> pts = seq.points;
  std::sort(pts.begin(), pts.end());
  const double T = static_cast<double>(pts.size());
  double d = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double x = pts[i];
    if (x < 0.0 || x >= 1.0) {
      throw DomainError("star_discrepancy: point outside [0, 1)");
    }
    d = std::max(d, static_cast<double>(i + 1) / T - x);
    d = std::max(d, x - static_cast<double>(i) / T);
  }
  return d;
}

double erdos_turan_bound(const UnitSequence& seq, unsigned H, double c1,
                         double c2) {
  if (H < 1) throw DomainError("erdos_turan_bound: H must be >= 1");
  const double T = static_cast<double>(seq.points.size());
  double sum = 0;
  for (unsigned h = 1; h <= H; ++h) {
    sum += std::abs(exp_sum(seq, static_cast<long>(h))) /
           (static_cast<double>(h) * T);
  }
  return c1 / (H + 1.0) + c2 * sum;
}

double vinogradov_bound(double X, double Y, std::uint64_t q) {
  if (X < 1 || Y < 1) throw DomainError("vinogradov_bound: X, Y must be >= 1");
  if (q < 1) throw DomainError("vinogradov_bound: q must be >= 1");
  const double qd = static_cast<double>(q);
  return X * Y * std::sqrt(1.0 / X + 1.0 / Y + 1.0 / qd + qd / (X * Y));
}

std::complex<double> bilinear_sum(double lambda, long h, std::uint64_t N,
                                  std::uint64_t M,
                                  std::span<const std::complex<double>> a,
                                  std::span<const std::complex<double>> b) {
  const bool unit = a.empty() && b.empty();
  if (!unit && (a.size() < N || b.size() < M)) {
    throw DomainError("bilinear_sum: coefficient spans shorter than N, M");
  }
  if (!unit && (double)N * (double)M > 1e10) {
    throw ResourceError("bilinear_sum: N*M exceeds the direct-path cap 1e10");
  }
  if (unit && N > (1ULL << 34)) {
    throw ResourceError("bilinear_sum: N too large");
  }
  CompensatedSum outer;
  if (unit) {
    // inner geometric sum: sum_{m=1..M} e(theta m)
    for (std::uint64_t n = 1; n <= N; ++n) {
      const double theta =
          std::fmod(lambda * static_cast<double>(h) * static_cast<double>(n),
                    1.0);
      const double s = std::sin(std::numbers::pi * theta);
      if (std::abs(s) < 1e-12) {
        outer.add({static_cast<double>(M), 0.0});
      } else {
        const double mag =
            std::sin(std::numbers::pi * theta * static_cast<double>(M)) / s;
        outer.add(mag * unit_phase(theta * static_cast<double>(M + 1) / 2.0));
      }
    }
  } else {
    for (std::uint64_t n = 1; n <= N; ++n) {
      CompensatedSum inner;
      for (std::uint64_t m = 1; m <= M; ++m) {
        const double y = std::fmod(lambda * static_cast<double>(h) *
                                       static_cast<double>(n) *
                                       static_cast<double>(m),
                                   1.0);
        inner.add(b[m - 1] * unit_phase(y));
      }
      outer.add(a[n - 1] * inner.value());
    }
  }
  return outer.value();
}

std::uint64_t pair_count_W(const PrimeContext& ctx, std::uint64_t N,
                           std::uint64_t M, int sigma) {
  if (N < 1 || M < 1) throw DomainError("pair_count_W: N, M must be >= 1");
  if (sigma != 1 && sigma != -1) {
    throw DomainError("pair_count_W: sigma must be +1 or -1");
  }
  std::uint64_t res_m = 0, nonres_m = 0;
  for (std::uint64_t m = 1; m <= M; ++m) {
    const int l = ctx.legendre(static_cast<std::int64_t>(m));
    if (l > 0)
      ++res_m;
    else if (l < 0)
      ++nonres_m;
  }
  std::uint64_t total = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const int tau = ctx.legendre(static_cast<std::int64_t>(n));
    if (tau == 0) continue;
    total += sigma * tau == 1 ? res_m : nonres_m;
  }
  return total;
}

PairCountRecord pair_count_V(const PrimeContext& ctx, std::uint64_t N,
                             std::uint64_t M, int sigma,
                             const BeattyParams& params) {
  if (sigma != 1 && sigma != -1) {
    throw DomainError("pair_count_V: sigma must be +1 or -1");
  }
  if ((double)N * (double)M > 1e9) {
    throw ResourceError("pair_count_V: N*M exceeds the cap 1e9");
  }
  const IntervalReal one(1, params.precision_bits);
  if (one.less(params.alpha) != Trilean::kTrue) {
    throw DomainError("pair_count_V: requires alpha > 1");
  }
  const BeattyValueCriterion crit(params);

  std::vector<std::int8_t> row(N + 1), col(M + 1);
  for (std::uint64_t n = 1; n <= N; ++n)
    row[n] = static_cast<std::int8_t>(ctx.legendre((std::int64_t)n));
  for (std::uint64_t m = 1; m <= M; ++m)
    col[m] = static_cast<std::int8_t>(ctx.legendre((std::int64_t)m));

  PairCountRecord rec;
  rec.p = ctx.p();
  rec.N = N;
  rec.M = M;
  rec.sigma = sigma;
  rec.lambda = crit.lambda_mid();
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (row[n] == 0) continue;
    for (std::uint64_t m = 1; m <= M; ++m) {
      if (col[m] == 0) continue;
      if (row[n] * col[m] != sigma) continue;
      ++rec.count_W;
      if (crit.decide(n * m)) ++rec.count_V;
    }
  }
  return rec;
}

PairExperimentResult beatty_pair_experiment(const PrimeContext& ctx,
                                   const BeattyParams& params, double epsilon,
                                   std::size_t witness_sample_cap,
                                   double rho_threshold) {
  const IntervalReal one(1, params.precision_bits);
  if (one.less(params.alpha) != Trilean::kTrue) {
    throw DomainError("beatty_pair_experiment: requires alpha > 1");
  }
  if (!params.alpha_irrational) {
    throw DomainError("beatty_pair_experiment: requires irrational alpha");
  }
  if (!(epsilon > 0) || epsilon > 1.0) {
    throw DomainError("beatty_pair_experiment: epsilon must lie in (0, 1]");
  }

  PairExperimentResult res;
  res.p = ctx.p();
  res.epsilon = epsilon;
  const double pd = static_cast<double>(ctx.p());
  res.N = static_cast<std::uint64_t>(
      std::pow(pd, kBurgessExponent + epsilon / 2.0));
  res.M = static_cast<std::uint64_t>(std::pow(pd, epsilon / 2.0));
  if (res.N < 1 || res.M < 1) {
    throw DomainError("beatty_pair_experiment: degenerate N or M");
  }

  const BeattyValueCriterion crit(params);
  res.lambda = crit.lambda_mid();

  const PairCountRecord vp = pair_count_V(ctx, res.N, res.M, +1, params);
  res.count_W_plus = vp.count_W;
  res.count_V_plus = vp.count_V;

  // sigma = -1 pass: count W and V and re-verify every V-hit through the
  // membership lemma (index recovery) plus the Legendre symbol. The lemma
  // applies for v > beta; criterion hits at v <= beta (possible only when
  // beta >= 1) are counted but carry no index.
  std::size_t below_beta_hits = 0;
  for (std::uint64_t n = 1; n <= res.N; ++n) {
    const int ln = ctx.legendre(static_cast<std::int64_t>(n));
    if (ln == 0) continue;
    for (std::uint64_t m = 1; m <= res.M; ++m) {
      const int lm = ctx.legendre(static_cast<std::int64_t>(m));
      if (lm == 0 || ln * lm != -1) continue;
      ++res.count_W_minus;
      const std::uint64_t v = n * m;
      if (!crit.decide(v)) continue;
      ++res.count_V_minus;
      const IntervalReal vv(static_cast<long>(v), params.precision_bits);
      if (params.beta.less(vv) != Trilean::kTrue) {
        ++below_beta_hits;
        continue;
      }
      const BeattyMembership mem =
          beatty_contains(params, static_cast<std::int64_t>(v));
      if (!mem.member) {
        throw InternalError(
            "beatty_pair_experiment: criterion hit failed the membership lemma");
      }
      if (ctx.legendre(static_cast<std::int64_t>(v)) != -1) {
        throw InternalError(
            "beatty_pair_experiment: witness value not a non-residue");
      }
      const std::int64_t idx = *mem.index;  // verified inside beatty_contains
      ++res.verified_witnesses;
      if (res.witness_sample.size() < witness_sample_cap) {
        res.witness_sample.push_back({n, m, v, idx});
      }
    }
  }
  if (res.verified_witnesses + below_beta_hits != res.count_V_minus) {
    throw InternalError(
        "beatty_pair_experiment: verified witness count disagrees with V^-");
  }

  // empirical cancellation profile: first h where the normalized bilinear
  // sum exceeds the threshold
  constexpr unsigned kHMax = 16;
  res.H = kHMax;
  const double nm = static_cast<double>(res.N) * static_cast<double>(res.M);
  for (unsigned h = 1; h <= kHMax; ++h) {
    const double rho =
        std::abs(bilinear_sum(res.lambda, static_cast<long>(h), res.N, res.M)) /
        nm;
    if (rho > rho_threshold) {
      res.H = h;
      res.rho_hat_at_H = rho;
      break;
    }
    res.rho_hat_at_H = rho;
  }
  return res;
}

int reflected_sigma(const PrimeContext& ctx) { return -ctx.legendre(-1); }

BeattyParams reflect_params(const BeattyParams& params) {
  if (params.alpha.sign() >= 0) {
    throw DomainError("reflect_params: requires alpha < 0");
  }
  BeattyParams out;
  out.alpha = -params.alpha;
  out.beta = (-params.beta).add_si(1);
  out.alpha_irrational = params.alpha_irrational;
  out.precision_bits = params.precision_bits;
  return out;
}

}  // namespace bgl
