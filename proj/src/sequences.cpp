#include "bgl/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bgl/parallel.hpp"

namespace bgl {
namespace {

constexpr double kBurgessExponent = 0.15163266492815836;  // 1/(4 sqrt e)

std::int64_t to_i64(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) {
    throw ResourceError(std::string(what) + ": value out of 64-bit range");
  }
  return z.get_si();
}

// Floor of an enclosure, PrecisionError when undecided.
mpz_class require_floor(const IntervalReal& x, const char* what) {
  auto f = x.checked_floor();
  if (!f) {
    throw PrecisionError(std::string(what) +
                         ": floor undecided at the working precision; raise "
                         "precision_bits");
  }
  return *f;
}

}  // namespace

BeattyParams BeattyParams::make(const std::string& alpha_token,
                                const std::string& beta_token,
                                mpfr_prec_t precision_bits) {
  if (precision_bits < 192) {
    throw DomainError("BeattyParams: precision_bits must be >= 192");
  }
  BeattyParams out;
  out.precision_bits = precision_bits;
  out.alpha = parse_real_token(alpha_token, precision_bits, &out.alpha_irrational);
  bool ignored = false;
  out.beta = parse_real_token(beta_token, precision_bits, &ignored);
  if (out.alpha.sign() == 0) {
    throw DomainError("BeattyParams: alpha must be nonzero");
  }
  return out;
}

std::int64_t beatty_term(const BeattyParams& params, std::int64_t n) {
  if (n < 1) throw DomainError("beatty_term: n must be >= 1");
  const IntervalReal t = params.alpha.mul_si(n) + params.beta;
  if (auto z = t.exact_integer()) {
    return to_i64(*z, "beatty_term");  // exact integer: floor is the value itself
  }
  if (params.alpha.sign() < 0) {
    // Reflection floor(x) = -floor(-x + 1), exact for non-integer x.
    const IntervalReal u = (-t).add_si(1);
    return to_i64(-require_floor(u, "beatty_term"), "beatty_term");
  }
  return to_i64(require_floor(t, "beatty_term"), "beatty_term");
}

BeattyMembership beatty_contains(const BeattyParams& params, std::int64_t m) {
  const IntervalReal one(1, params.precision_bits);
  if (one.less(params.alpha) != Trilean::kTrue) {
    throw DomainError("beatty_contains: requires alpha > 1");
  }
  const IntervalReal mm(static_cast<long>(m), params.precision_bits);
  const Trilean above_beta = params.beta.less(mm);
  if (above_beta == Trilean::kUnknown) {
    throw PrecisionError("beatty_contains: m - beta too close to zero");
  }
  if (above_beta == Trilean::kFalse) {
    throw DomainError("beatty_contains: requires m > beta");
  }

  const IntervalReal lambda = params.alpha.reciprocal();
  const IntervalReal t = lambda * (mm - params.beta + one);
  auto frac = t.checked_frac();
  if (!frac) {
    throw PrecisionError("beatty_contains: fractional part undecided");
  }
  const IntervalReal zero(0, params.precision_bits);
  const Trilean positive = zero.less(*frac);
  const Trilean bounded = frac->less_equal(lambda);
  if (positive == Trilean::kUnknown || bounded == Trilean::kUnknown) {
    throw PrecisionError("beatty_contains: criterion on the boundary");
  }

  BeattyMembership out;
  out.member = positive == Trilean::kTrue && bounded == Trilean::kTrue;
  if (out.member) {
    const IntervalReal idx = lambda * (mm - params.beta);
    auto n = idx.checked_ceil();
    if (!n) throw PrecisionError("beatty_contains: index ceil undecided");
    const std::int64_t ni = to_i64(*n, "beatty_contains");
    if (beatty_term(params, ni) != m) {
      throw InternalError("beatty_contains: index witness failed re-check");
    }
    out.index = ni;
  }
  return out;
}

std::optional<std::int64_t> least_beatty_nonresidue(const BeattyParams& params,
                                                    const PrimeContext& ctx,
                                                    std::int64_t cap) {
  if (cap < 1) throw DomainError("least_beatty_nonresidue: cap must be >= 1");
  for (std::int64_t n = 1; n <= cap; ++n) {
    const std::int64_t v = beatty_term(params, n);
    if (v <= 0) continue;  // only positive values are classified
    if (ctx.legendre(v) == -1) return n;
  }
  return std::nullopt;
}

std::int64_t negation_identity_exceptions(const BeattyParams& params,
                                          std::int64_t n_max) {
  if (params.alpha.sign() >= 0) {
    throw DomainError("negation_identity_exceptions: requires alpha < 0");
  }
  std::int64_t exceptions = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const IntervalReal t = params.alpha.mul_si(n) + params.beta;
    const IntervalReal u = (-t).add_si(1);  // -alpha n - beta + 1
    mpz_class lhs, rhs;
    if (auto z = t.exact_integer()) {
      lhs = *z;
      rhs = -(-*z + 1);  // reflection misses exact integers by one
    } else {
      lhs = require_floor(t, "negation_identity_exceptions");
      rhs = -require_floor(u, "negation_identity_exceptions");
      // fall through; equal unless t is an integer, impossible here
    }
    if (lhs != rhs) ++exceptions;
  }
  return exceptions;
}

PSParams::PSParams(unsigned long a_, unsigned long b_) : a(a_), b(b_) {
  if (b == 0 || !(b < a && a < 2 * b)) {
    throw DomainError("PSParams: need 1 < a/b < 2");
  }
  if (std::gcd(a, b) != 1) {
    throw DomainError("PSParams: a/b must be in lowest terms");
  }
}

PSParams PSParams::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw DomainError("PSParams: expected 'a/b', got '" + text + "'");
  }
  unsigned long a = 0, b = 0;
  try {
    a = std::stoul(text.substr(0, slash));
    b = std::stoul(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw DomainError("PSParams: malformed rational '" + text + "'");
  }
  return PSParams(a, b);
}

mpz_class ps_term_z(const PSParams& params, std::uint64_t n) {
  if (n < 1) throw DomainError("ps_term: n must be >= 1");
  mpz_class base(static_cast<unsigned long>(n));
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), params.a);
  mpz_class root;
  mpz_root(root.get_mpz_t(), power.get_mpz_t(), params.b);
  return root;
}

std::uint64_t ps_term(const PSParams& params, std::uint64_t n) {
  mpz_class r = ps_term_z(params, n);
  if (!r.fits_ulong_p()) {
    throw ResourceError("ps_term: value exceeds 64-bit range");
  }
  return r.get_ui();
}

std::optional<std::uint64_t> least_ps_nonresidue(const PSParams& params,
                                                 const PrimeContext& ctx,
                                                 std::uint64_t cap) {
  if (cap < 1) throw DomainError("least_ps_nonresidue: cap must be >= 1");
  for (std::uint64_t n = 1; n <= cap; ++n) {
    const std::uint64_t v = ps_term(params, n);
    if (ctx.legendre(static_cast<std::int64_t>(v)) == -1) return n;
  }
  return std::nullopt;
}

WitnessResult ps_product_witness(const PSParams& params, std::uint64_t ell,
                                 std::uint64_t m, std::uint64_t L,
                                 std::uint64_t M, mpfr_prec_t prec) {
  if (L < 4 || M < 4) {
    throw DomainError("ps_product_witness: L and M must be >= 4");
  }
  if (!(ell > L / 2 && ell <= L && m > M / 2 && m <= M)) {
    throw DomainError("ps_product_witness: (ell, m) outside (L/2,L]x(M/2,M]");
  }

  const mpz_class v = mpz_class(static_cast<unsigned long>(ell)) *
                      mpz_class(static_cast<unsigned long>(m));
  // (ell m)^(1/c) = (v^b)^(1/a); integer part exact, fraction enclosed.
  mpz_class vb;
  mpz_pow_ui(vb.get_mpz_t(), v.get_mpz_t(), params.b);
  mpz_class n0;
  mpz_root(n0.get_mpz_t(), vb.get_mpz_t(), params.a);
  const IntervalReal root = IntervalReal::nth_root(vb, params.a, prec);
  const IntervalReal frac = root - IntervalReal::from_integer(n0, prec);

  // threshold 1 - 1/(2 (LM)^(1 - 1/c)), again through exact integer powers
  mpz_class lm = mpz_class(static_cast<unsigned long>(L)) *
                 mpz_class(static_cast<unsigned long>(M));
  mpz_class lm_pow;
  mpz_pow_ui(lm_pow.get_mpz_t(), lm.get_mpz_t(), params.a - params.b);
  const IntervalReal denom =
      IntervalReal::nth_root(lm_pow, params.a, prec).mul_si(2);
  const IntervalReal threshold =
      IntervalReal(1, prec) - denom.reciprocal();

  WitnessResult out;
  const Trilean hit = threshold.less_equal(frac);
  if (hit == Trilean::kUnknown) {
    throw PrecisionError("ps_product_witness: criterion on the boundary");
  }
  if (hit == Trilean::kFalse) return out;

  const mpz_class n = n0 + 1;
  if (!n.fits_ulong_p()) {
    throw ResourceError("ps_product_witness: witness n out of range");
  }
  out.n = n.get_ui();
  out.status = ps_term_z(params, out.n) == v
                   ? WitnessResult::Status::kVerified
                   : WitnessResult::Status::kCriterionUnverified;
  return out;
}

PsPipelineResult ps_product_pipeline(const PSParams& params, const PrimeContext& ctx,
                                 const ExponentPair& pair, double epsilon,
                                 double log_power_a, unsigned jobs) {
  const mpq_class c(static_cast<unsigned long>(params.a),
                    static_cast<unsigned long>(params.b));
  const mpq_class upper = c_range(pair);
  if (!(c > 1 && c < upper)) {
    throw DomainError("ps_product_pipeline: c = " + c.get_str() +
                      " outside the pair's admissible range (1, " +
                      upper.get_str() + ")");
  }
  if (!(epsilon > 0)) throw DomainError("ps_product_pipeline: epsilon must be > 0");

  PsPipelineResult res;
  res.p = ctx.p();
  res.epsilon = epsilon;

  const double window =
      std::pow(static_cast<double>(ctx.p()), kBurgessExponent + epsilon);
  const std::uint64_t w0 = static_cast<std::uint64_t>(window);
  if (w0 < 4) {
    throw DomainError("ps_product_pipeline: window floor " + std::to_string(w0) +
                      " too small; raise epsilon or p");
  }
  res.window_small = w0 < 16;

  ctx.ensure_table();
  std::uint64_t nonres = 0;
  for (std::uint64_t n = 1; n <= w0; ++n) {
    if (ctx.legendre(static_cast<std::int64_t>(n)) == -1) ++nonres;
  }
  res.delta_hat = static_cast<double>(nonres) / static_cast<double>(w0);
  if (nonres == 0) return res;  // nothing to harvest; reported, not an error

  res.j_count = static_cast<unsigned>(
      std::ceil(std::log(2.0 / res.delta_hat) / std::log(2.0)));

  // Dyadic window with the most non-residues in (L/2, L]; ties to larger L
  // (scanning j ascending keeps the larger L on equal counts).
  std::uint64_t best_l = 0, best_cnt = 0;
  for (unsigned j = 0; j <= res.j_count; ++j) {
    const std::uint64_t lj =
        static_cast<std::uint64_t>(window / std::pow(2.0, j));
    if (lj < 4) break;
    std::uint64_t cnt = 0;
    for (std::uint64_t v = lj / 2 + 1; v <= lj; ++v) {
      if (ctx.legendre(static_cast<std::int64_t>(v)) == -1) ++cnt;
    }
    if (cnt > best_cnt) {
      best_cnt = cnt;
      best_l = lj;
    }
  }
  if (best_l == 0) return res;
  res.L = best_l;

  const double cd = params.c();
  const double m_target = std::pow(static_cast<double>(best_l),
                                   2.0 * (cd - 1.0) / (2.0 - cd)) *
                          std::pow(std::log(static_cast<double>(best_l)),
                                   log_power_a);
  res.M = std::max<std::uint64_t>(4, static_cast<std::uint64_t>(m_target));

  std::vector<std::uint64_t> ells;
  for (std::uint64_t v = best_l / 2 + 1; v <= best_l; ++v) {
    if (ctx.legendre(static_cast<std::int64_t>(v)) == -1) ells.push_back(v);
  }
  std::vector<std::uint64_t> ms;
  for (std::uint64_t v = res.M / 2 + 1; v <= res.M; ++v) {
    if (ctx.legendre(static_cast<std::int64_t>(v)) == 1) ms.push_back(v);
  }
  res.ell_count = ells.size();
  res.m_count = ms.size();
  if (ells.empty() || ms.empty()) return res;

  struct RowResult {
    std::size_t hits = 0;
    std::size_t unverified = 0;
    std::vector<PsPipelineWitness> witnesses;
  };
  auto row = [&](std::size_t i) {
    RowResult r;
    const std::uint64_t ell = ells[i];
    for (std::uint64_t m : ms) {
      const WitnessResult w =
          ps_product_witness(params, ell, m, res.L, res.M);
      if (w.status == WitnessResult::Status::kNoCriterion) continue;
      ++r.hits;
      if (w.status == WitnessResult::Status::kCriterionUnverified) {
        ++r.unverified;
        continue;
      }
      const std::uint64_t value = ell * m;
      if (ctx.legendre(static_cast<std::int64_t>(value)) != -1) {
        throw InternalError("ps_product_pipeline: witness value " +
                            std::to_string(value) + " is not a non-residue");
      }
      r.witnesses.push_back({w.n, ell, m, value});
    }
    return r;
  };
  const auto rows = parallel_map<RowResult>(ells.size(), jobs, row);
  for (const auto& r : rows) {
    res.criterion_hits += r.hits;
    res.unverified_hits += r.unverified;
    res.witnesses.insert(res.witnesses.end(), r.witnesses.begin(),
                         r.witnesses.end());
  }
  return res;
}

}  // namespace bgl
