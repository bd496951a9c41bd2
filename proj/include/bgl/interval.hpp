#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <string_view>

#include "bgl/errors.hpp"

namespace bgl {

// Three-valued comparison result for guarded decisions near a boundary.
enum class Trilean { kFalse, kTrue, kUnknown };

// Named irrational constants accepted as CLI tokens.
enum class NamedReal { kSqrt2, kSqrt3, kGoldenRatio, kEulerE };

// A real number carried as a directed-rounding enclosure [lo, hi] at a fixed
// MPFR precision. All arithmetic keeps the true value inside the enclosure,
// so floor/comparison decisions are sound: they either decide or report
// Unknown when the enclosure (widened by the safety margin 2^margin_log2)
// straddles the boundary. Exact point values decide unconditionally.
class IntervalReal {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 256;
  static constexpr int kDefaultMarginLog2 = -64;

  IntervalReal();  // [0, 0] at default precision
  explicit IntervalReal(long value, mpfr_prec_t prec = kDefaultPrec);
  IntervalReal(const IntervalReal& o);
  IntervalReal(IntervalReal&& o) noexcept;
  IntervalReal& operator=(const IntervalReal& o);
  IntervalReal& operator=(IntervalReal&& o) noexcept;
  ~IntervalReal();

  static IntervalReal named(NamedReal which, mpfr_prec_t prec = kDefaultPrec);
  // Decimal literal, rounded down/up to enclose the written value.
  static IntervalReal from_decimal(std::string_view text,
                                   mpfr_prec_t prec = kDefaultPrec);
  static IntervalReal from_integer(const mpz_class& v,
                                   mpfr_prec_t prec = kDefaultPrec);
  // Enclosure of x^(1/n) for exact integer x >= 0.
  static IntervalReal nth_root(const mpz_class& x, unsigned long n,
                               mpfr_prec_t prec = kDefaultPrec);

  mpfr_prec_t precision() const { return prec_; }
  bool is_point() const;

  IntervalReal operator+(const IntervalReal& o) const;
  IntervalReal operator-(const IntervalReal& o) const;
  IntervalReal operator*(const IntervalReal& o) const;
  IntervalReal operator-() const;
  IntervalReal mul_si(long k) const;
  IntervalReal add_si(long k) const;
  // PrecisionError if the enclosure contains zero.
  IntervalReal reciprocal() const;
  IntervalReal abs() const;

  // Floor of the true value, or nullopt when any integer lies within the
  // margin-widened enclosure. An exact point decides even on an integer.
  std::optional<mpz_class> checked_floor(int margin_log2 = kDefaultMarginLog2) const;
  std::optional<mpz_class> checked_ceil(int margin_log2 = kDefaultMarginLog2) const;

  // The exact integer value when the enclosure is a point on an integer.
  std::optional<mpz_class> exact_integer() const;

  // Truth of (*this <= o) / (*this < o), Unknown when the enclosures come
  // within the margin of one another (exact points compare exactly).
  Trilean less_equal(const IntervalReal& o,
                     int margin_log2 = kDefaultMarginLog2) const;
  Trilean less(const IntervalReal& o,
               int margin_log2 = kDefaultMarginLog2) const;

  // Fractional part {x} = x - floor(x); nullopt when the floor is undecided.
  std::optional<IntervalReal> checked_frac(
      int margin_log2 = kDefaultMarginLog2) const;

  // Enclosure endpoints and width diagnostics.
  double lo_double() const;
  double hi_double() const;
  double mid_double() const;

  // Sign of the whole enclosure: +1, -1, or 0 when it touches zero.
  int sign() const;

  std::string str(std::size_t digits = 20) const;

 private:
  IntervalReal(mpfr_prec_t prec, bool);
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

// Parses either a named-constant token (sqrt2, sqrt3, phi, e) or a decimal
// literal. Sets *irrational to whether the token denotes an irrational value.
IntervalReal parse_real_token(std::string_view token, mpfr_prec_t prec,
                              bool* irrational);

}  // namespace bgl
