#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>

namespace erdos {

/// RAII wrapper over an MPFR number. Every arithmetic helper takes an explicit rounding mode.
class Real {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  Real() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_double(double x);  // exact at 256 bits
  static Real from_integer(const mpz_class& z, mpfr_rnd_t rnd);
  static Real from_u64(std::uint64_t x);  // exact
  static Real infinity(int sign);

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
  std::string to_string(int digits = 20) const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Real add(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd);
/// log2 of a nonnegative integer (−inf for 0).
Real log2_of(const mpz_class& z, mpfr_rnd_t rnd);

enum class Rounding {
  Lower,  // the stored log2 is <= the true log2
  Upper,  // the stored log2 is >= the true log2
};

enum class Verdict { True, False, Indeterminate };

std::string to_string(Verdict v);
std::string to_string(Rounding r);

/// A nonnegative quantity, either exact (mantissa * 2^shift) or known only through a
/// one-sided bound on its log2.
class Magnitude {
 public:
  /// Exact zero.
  Magnitude() = default;

  static Magnitude exact(mpz_class value);
  /// mantissa * 2^shift, kept factored so huge powers of two stay cheap.
  static Magnitude exact_scaled(mpz_class mantissa, std::uint64_t shift);
  static Magnitude from_log2(Real log2_value, Rounding rounding);

  bool is_exact() const noexcept { return exact_; }
  bool is_zero() const noexcept { return exact_ && mantissa_ == 0; }
  const mpz_class& mantissa() const noexcept { return mantissa_; }
  std::uint64_t shift() const noexcept { return shift_; }
  Rounding rounding() const noexcept { return rounding_; }

  /// Lower / upper bound on log2 of the value (−inf / +inf where no bound is known).
  Real log2_lower() const;
  Real log2_upper() const;

  /// Bit length of an exact value (0 for zero).
  std::uint64_t bit_length() const;
  /// The exact integer, if exact and at most max_bits long.
  std::optional<mpz_class> to_integer(std::uint64_t max_bits) const;

  /// Decimal digits when exact and at most max_digits long; otherwise a log2 rendering.
  std::string describe(std::size_t max_digits = 10000) const;

 private:
  bool exact_ = true;
  mpz_class mantissa_;
  std::uint64_t shift_ = 0;
  Real log2_;
  Rounding rounding_ = Rounding::Lower;
};

/// Sound three-valued comparisons. Exact operands compare exactly; otherwise True/False is only
/// reported when the log2 bounds separate the operands.
Verdict less_than(const Magnitude& a, const Magnitude& b);
Verdict less_equal(const Magnitude& a, const Magnitude& b);

}  // namespace erdos
