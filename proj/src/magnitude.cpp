#include "erdos/magnitude.hpp"

#include <vector>

namespace erdos {

Real Real::from_double(double x) {
  Real r;
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::from_integer(const mpz_class& z, mpfr_rnd_t rnd) {
  Real r;
  mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
  return r;
}

Real Real::from_u64(std::uint64_t x) {
  Real r;
  mpfr_set_uj(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::infinity(int sign) {
  Real r;
  mpfr_set_inf(r.v_, sign);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

Real add(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_sub(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_mul(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real log2_of(const mpz_class& z, mpfr_rnd_t rnd) {
  if (z == 0) return Real::infinity(-1);
  Real x = Real::from_integer(z, rnd);
  Real r;
  mpfr_log2(r.get(), x.get(), rnd);
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::string to_string(Rounding r) { return r == Rounding::Lower ? "lower-bound" : "upper-bound"; }

// ---------------------------------------------------------------- Magnitude

Magnitude Magnitude::exact(mpz_class value) { return exact_scaled(std::move(value), 0); }

Magnitude Magnitude::exact_scaled(mpz_class mantissa, std::uint64_t shift) {
  Magnitude m;
  if (mantissa < 0) mantissa = -mantissa;
  // Normalize so equal values share one representation.
  if (mantissa == 0) {
    shift = 0;
  } else {
    auto tz = mpz_scan1(mantissa.get_mpz_t(), 0);
    mantissa >>= tz;
    shift += tz;
  }
  m.exact_ = true;
  m.mantissa_ = std::move(mantissa);
  m.shift_ = shift;
  return m;
}

Magnitude Magnitude::from_log2(Real log2_value, Rounding rounding) {
  Magnitude m;
  m.exact_ = false;
  m.mantissa_ = 0;
  m.log2_ = std::move(log2_value);
  m.rounding_ = rounding;
  return m;
}

Real Magnitude::log2_lower() const {
  if (!exact_) return rounding_ == Rounding::Lower ? log2_ : Real::infinity(-1);
  if (mantissa_ == 0) return Real::infinity(-1);
  return add(log2_of(mantissa_, MPFR_RNDD), Real::from_u64(shift_), MPFR_RNDD);
}

Real Magnitude::log2_upper() const {
  if (!exact_) return rounding_ == Rounding::Upper ? log2_ : Real::infinity(1);
  if (mantissa_ == 0) return Real::infinity(-1);
  return add(log2_of(mantissa_, MPFR_RNDU), Real::from_u64(shift_), MPFR_RNDU);
}

std::uint64_t Magnitude::bit_length() const {
  if (!exact_ || mantissa_ == 0) return 0;
  return mpz_sizeinbase(mantissa_.get_mpz_t(), 2) + shift_;
}

std::optional<mpz_class> Magnitude::to_integer(std::uint64_t max_bits) const {
  if (!exact_ || bit_length() > max_bits) return std::nullopt;
  mpz_class out = mantissa_;
  out <<= static_cast<mp_bitcnt_t>(shift_);
  return out;
}

std::string Magnitude::describe(std::size_t max_digits) const {
  // 3.33 bits per decimal digit; the exact digit count is checked after conversion.
  const std::uint64_t bit_budget = static_cast<std::uint64_t>(max_digits) * 10 / 3 + 8;
  if (auto z = to_integer(bit_budget)) {
    std::string digits = z->get_str();
    if (digits.size() <= max_digits) return digits;
  }
  if (exact_) {
    if (mpz_sizeinbase(mantissa_.get_mpz_t(), 10) <= max_digits)
      return mantissa_.get_str() + "*2^" + std::to_string(shift_);
    return "2^" + log2_lower().to_string() + " .. 2^" + log2_upper().to_string();
  }
  return "2^" + log2_.to_string() + " (" + to_string(rounding_) + ")";
}

namespace {

// Exact three-way comparison of ma*2^sa against mb*2^sb.
int compare_exact(const mpz_class& ma, std::uint64_t sa, const mpz_class& mb, std::uint64_t sb) {
  if (ma == 0 || mb == 0) return ma == 0 ? (mb == 0 ? 0 : -1) : 1;
  const std::uint64_t la = mpz_sizeinbase(ma.get_mpz_t(), 2) + sa;
  const std::uint64_t lb = mpz_sizeinbase(mb.get_mpz_t(), 2) + sb;
  if (la != lb) return la < lb ? -1 : 1;
  // Equal bit lengths, so the shift difference is bounded by the mantissa sizes.
  if (sa >= sb) {
    mpz_class a = ma;
    a <<= static_cast<mp_bitcnt_t>(sa - sb);
    return cmp(a, mb);
  }
  mpz_class b = mb;
  b <<= static_cast<mp_bitcnt_t>(sb - sa);
  return cmp(ma, b);
}

}  // namespace

Verdict less_than(const Magnitude& a, const Magnitude& b) {
  if (a.is_exact() && b.is_exact())
    return compare_exact(a.mantissa(), a.shift(), b.mantissa(), b.shift()) < 0 ? Verdict::True : Verdict::False;
  if (a.log2_upper() < b.log2_lower()) return Verdict::True;
  if (a.log2_lower() >= b.log2_upper()) return Verdict::False;
  return Verdict::Indeterminate;
}

Verdict less_equal(const Magnitude& a, const Magnitude& b) {
  if (a.is_exact() && b.is_exact())
    return compare_exact(a.mantissa(), a.shift(), b.mantissa(), b.shift()) <= 0 ? Verdict::True : Verdict::False;
  if (a.log2_upper() <= b.log2_lower()) return Verdict::True;
  if (a.log2_lower() > b.log2_upper()) return Verdict::False;
  return Verdict::Indeterminate;
}

}  // namespace erdos
