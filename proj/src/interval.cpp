#include "bgl/interval.hpp"

#include <algorithm>
#include <cctype>

namespace bgl {
namespace {

mpfr_prec_t clamp_prec(mpfr_prec_t prec) {
  return std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN);
}

}  // namespace

IntervalReal::IntervalReal(mpfr_prec_t prec, bool) : prec_(clamp_prec(prec)) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
}

IntervalReal::IntervalReal() : IntervalReal(kDefaultPrec, true) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

IntervalReal::IntervalReal(long value, mpfr_prec_t prec)
    : IntervalReal(prec, true) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

IntervalReal::IntervalReal(const IntervalReal& o) : IntervalReal(o.prec_, true) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

IntervalReal::IntervalReal(IntervalReal&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

IntervalReal& IntervalReal::operator=(const IntervalReal& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

IntervalReal& IntervalReal::operator=(IntervalReal&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

IntervalReal::~IntervalReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

IntervalReal IntervalReal::named(NamedReal which, mpfr_prec_t prec) {
  IntervalReal r(prec, true);
  switch (which) {
    case NamedReal::kSqrt2:
      mpfr_sqrt_ui(r.lo_, 2, MPFR_RNDD);
      mpfr_sqrt_ui(r.hi_, 2, MPFR_RNDU);
      break;
    case NamedReal::kSqrt3:
      mpfr_sqrt_ui(r.lo_, 3, MPFR_RNDD);
      mpfr_sqrt_ui(r.hi_, 3, MPFR_RNDU);
      break;
    case NamedReal::kGoldenRatio: {
      // (1 + sqrt 5) / 2; halving and adding 1 are exact in binary
      mpfr_sqrt_ui(r.lo_, 5, MPFR_RNDD);
      mpfr_sqrt_ui(r.hi_, 5, MPFR_RNDU);
      mpfr_add_ui(r.lo_, r.lo_, 1, MPFR_RNDD);
      mpfr_add_ui(r.hi_, r.hi_, 1, MPFR_RNDU);
      mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
      mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
      break;
    }
    case NamedReal::kEulerE: {
      mpfr_t one;
      mpfr_init2(one, MPFR_PREC_MIN);
      mpfr_set_ui(one, 1, MPFR_RNDN);
      mpfr_exp(r.lo_, one, MPFR_RNDD);
      mpfr_exp(r.hi_, one, MPFR_RNDU);
      mpfr_clear(one);
      break;
    }
  }
  return r;
}

IntervalReal IntervalReal::from_decimal(std::string_view text,
                                        mpfr_prec_t prec) {
  IntervalReal r(prec, true);
  std::string s(text);
  if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0) {
    throw DomainError("invalid decimal literal: " + s);
  }
  return r;
}

IntervalReal IntervalReal::from_integer(const mpz_class& v, mpfr_prec_t prec) {
  IntervalReal r(prec, true);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::nth_root(const mpz_class& x, unsigned long n,
                                    mpfr_prec_t prec) {
  if (sgn(x) < 0) throw DomainError("nth_root: negative radicand");
  if (n == 0) throw DomainError("nth_root: zeroth root");
  // Represent x exactly, then apply the root with directed rounding.
  mpfr_prec_t xbits =
      std::max<mpfr_prec_t>(mpz_sizeinbase(x.get_mpz_t(), 2), MPFR_PREC_MIN);
  mpfr_t exact;
  mpfr_init2(exact, xbits);
  mpfr_set_z(exact, x.get_mpz_t(), MPFR_RNDN);  // exact at xbits
  IntervalReal r(prec, true);
#if MPFR_VERSION_MAJOR >= 4
  mpfr_rootn_ui(r.lo_, exact, n, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, exact, n, MPFR_RNDU);
#else
  mpfr_root(r.lo_, exact, n, MPFR_RNDD);
  mpfr_root(r.hi_, exact, n, MPFR_RNDU);
#endif
  mpfr_clear(exact);
  return r;
}

bool IntervalReal::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

IntervalReal IntervalReal::operator+(const IntervalReal& o) const {
  IntervalReal r(std::max(prec_, o.prec_), true);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::operator-(const IntervalReal& o) const {
  IntervalReal r(std::max(prec_, o.prec_), true);
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::operator-() const {
  IntervalReal r(prec_, true);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::operator*(const IntervalReal& o) const {
  IntervalReal r(std::max(prec_, o.prec_), true);
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lo = min of the four products rounded down
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // hi = max of the four products rounded up
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

IntervalReal IntervalReal::mul_si(long k) const {
  IntervalReal r(prec_, true);
  if (k >= 0) {
    mpfr_mul_si(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_mul_si(r.hi_, hi_, k, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo_, hi_, k, MPFR_RNDD);
    mpfr_mul_si(r.hi_, lo_, k, MPFR_RNDU);
  }
  return r;
}

IntervalReal IntervalReal::add_si(long k) const {
  IntervalReal r(prec_, true);
  mpfr_add_si(r.lo_, lo_, k, MPFR_RNDD);
  mpfr_add_si(r.hi_, hi_, k, MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::reciprocal() const {
  if (mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0) {
    throw PrecisionError("reciprocal of an interval containing zero");
  }
  IntervalReal r(prec_, true);
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

IntervalReal IntervalReal::abs() const {
  IntervalReal r(prec_, true);
  if (mpfr_sgn(lo_) >= 0) {
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
  }
  return r;
}

std::optional<mpz_class> IntervalReal::exact_integer() const {
  if (!is_point() || !mpfr_integer_p(lo_)) return std::nullopt;
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDN);
  return z;
}

std::optional<mpz_class> IntervalReal::checked_floor(int margin_log2) const {
  if (is_point()) {
    // Exact value: the floor is exact even on or next to an integer.
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
    return z;
  }
  mpfr_t a, b;
  mpfr_init2(a, prec_ + 8);
  mpfr_init2(b, prec_ + 8);
  mpfr_t m;
  mpfr_init2(m, MPFR_PREC_MIN);
  mpfr_set_ui_2exp(m, 1, margin_log2, MPFR_RNDU);
  mpfr_sub(a, lo_, m, MPFR_RNDD);
  mpfr_add(b, hi_, m, MPFR_RNDU);
  mpfr_floor(a, a);
  mpfr_floor(b, b);
  std::optional<mpz_class> out;
  if (mpfr_equal_p(a, b)) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), a, MPFR_RNDN);
    out = z;
  }
  mpfr_clear(a);
  mpfr_clear(b);
  mpfr_clear(m);
  return out;
}

std::optional<mpz_class> IntervalReal::checked_ceil(int margin_log2) const {
  if (auto z = exact_integer()) return z;
  IntervalReal neg = -*this;
  if (auto f = neg.checked_floor(margin_log2)) return mpz_class(-*f);
  return std::nullopt;
}

Trilean IntervalReal::less_equal(const IntervalReal& o, int margin_log2) const {
  if (is_point() && o.is_point()) {
    return mpfr_lessequal_p(lo_, o.lo_) ? Trilean::kTrue : Trilean::kFalse;
  }
  mpfr_t gap, m;
  mpfr_init2(gap, std::max(prec_, o.prec_) + 8);
  mpfr_init2(m, MPFR_PREC_MIN);
  mpfr_set_ui_2exp(m, 1, margin_log2, MPFR_RNDU);
  Trilean res = Trilean::kUnknown;
  mpfr_sub(gap, o.lo_, hi_, MPFR_RNDD);  // lower bound of o - this
  if (mpfr_cmp(gap, m) > 0) {
    res = Trilean::kTrue;
  } else {
    mpfr_sub(gap, lo_, o.hi_, MPFR_RNDD);  // lower bound of this - o
    if (mpfr_cmp(gap, m) > 0) res = Trilean::kFalse;
  }
  mpfr_clear(gap);
  mpfr_clear(m);
  return res;
}

Trilean IntervalReal::less(const IntervalReal& o, int margin_log2) const {
  if (is_point() && o.is_point()) {
    return mpfr_less_p(lo_, o.lo_) ? Trilean::kTrue : Trilean::kFalse;
  }
  return less_equal(o, margin_log2);
}

std::optional<IntervalReal> IntervalReal::checked_frac(int margin_log2) const {
  auto f = checked_floor(margin_log2);
  if (!f) return std::nullopt;
  return *this - from_integer(*f, prec_);
}

double IntervalReal::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double IntervalReal::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double IntervalReal::mid_double() const {
  return 0.5 * (lo_double() + hi_double());
}

int IntervalReal::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

std::string IntervalReal::str(std::size_t digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), lo_) < 0) {
    throw InternalError("mpfr_asprintf failed");
  }
  std::string out(s);
  mpfr_free_str(s);
  if (!is_point()) out += "~";
  return out;
}

IntervalReal parse_real_token(std::string_view token, mpfr_prec_t prec,
                              bool* irrational) {
  std::string t(token);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  bool irr = true;
  IntervalReal out;
  if (t == "sqrt2") {
    out = IntervalReal::named(NamedReal::kSqrt2, prec);
  } else if (t == "sqrt3") {
    out = IntervalReal::named(NamedReal::kSqrt3, prec);
  } else if (t == "phi") {
    out = IntervalReal::named(NamedReal::kGoldenRatio, prec);
  } else if (t == "e") {
    out = IntervalReal::named(NamedReal::kEulerE, prec);
  } else {
    out = IntervalReal::from_decimal(token, prec);
    irr = false;
  }
  if (irrational) *irrational = irr;
  return out;
}

}  // namespace bgl
