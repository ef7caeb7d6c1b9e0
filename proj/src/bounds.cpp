#include "erdos/bounds.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "erdos/error.hpp"

namespace erdos {

namespace {

std::uint64_t bit_width(std::uint64_t x) { return static_cast<std::uint64_t>(std::bit_width(x)); }

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class to_mpz(std::uint64_t x) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof x, 0, 0, &x);
  return z;
}

std::optional<std::uint64_t> fits_u64(const mpz_class& z) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, z.get_mpz_t());
  return out;
}

// base^exponent with exponent given exactly; exact while it fits the cap or base is a power of two.
Magnitude power_magnitude(std::uint64_t base, const mpz_class& exponent, std::uint64_t exact_bit_cap) {
  const std::uint64_t base_bits = bit_width(base);
  if (auto e = fits_u64(exponent)) {
    if (std::has_single_bit(base)) {
      const std::uint64_t log_base = base_bits - 1;
      if (*e == 0 || log_base <= std::numeric_limits<std::uint64_t>::max() / *e)
        return Magnitude::exact_scaled(1, *e * log_base);
    } else if (*e == 0 || (base_bits <= exact_bit_cap / *e)) {
      mpz_class out;
      mpz_ui_pow_ui(out.get_mpz_t(), base, *e);
      return Magnitude::exact(out);
    }
  }
  Real log_base = log2_of(to_mpz(base), MPFR_RNDD);
  return Magnitude::from_log2(mul(Real::from_integer(exponent, MPFR_RNDD), log_base, MPFR_RNDD), Rounding::Lower);
}

}  // namespace

Magnitude erdos_graph_bound(std::uint64_t n, std::uint64_t exact_bit_cap) {
  if (n < 2) throw_invalid("graph bound needs n >= 2");
  return power_magnitude(2, to_mpz((n - 2) / 2), exact_bit_cap);
}

Magnitude erdos_multicolor_bound(std::uint64_t n, std::uint64_t k, std::uint64_t exact_bit_cap) {
  if (n < 2 || k < 2) throw_invalid("multicolor bound needs n >= 2 and k >= 2");
  return power_magnitude(k, to_mpz((n - 2) / 2), exact_bit_cap);
}

mpz_class hypergraph_exponent(std::uint64_t n, std::uint64_t l) {
  if (l < 1 || n < l) throw_invalid("hypergraph exponent needs n >= l >= 1");
  mpz_class base = to_mpz(n - l + 1);
  mpz_class numerator;
  mpz_pow_ui(numerator.get_mpz_t(), base.get_mpz_t(), l - 1);
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), l);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), numerator.get_mpz_t(), factorial.get_mpz_t());
  return out;
}

Magnitude erdos_hypergraph_bound(std::uint64_t n, std::uint64_t k, std::uint64_t l, std::uint64_t exact_bit_cap) {
  if (l < 1 || n < l || k < 2) throw_invalid("hypergraph bound needs n >= l >= 1 and k >= 2");
  return power_magnitude(k, hypergraph_exponent(n, l), exact_bit_cap);
}

// ---------------------------------------------------------------- discrepancy

namespace {

// ceil(log2((2s)^(2n))), exactly.
mpz_class ceil_log2_target(std::uint64_t n, std::uint64_t s) {
  mpz_class two_s = to_mpz(s) * 2;
  mpz_class target;
  mpz_pow_ui(target.get_mpz_t(), two_s.get_mpz_t(), 2 * n);
  const std::uint64_t bits = mpz_sizeinbase(target.get_mpz_t(), 2);
  const bool power_of_two = mpz_scan1(target.get_mpz_t(), 0) == bits - 1;
  return to_mpz(power_of_two ? bits - 1 : bits);
}

bool exact_is_feasible(std::uint64_t n, std::uint64_t s, std::uint64_t cap) {
  const std::uint64_t per = bit_width(s) + 1;  // bits of 2s
  return n <= cap / (2 * per);
}

// 2n * log2(2s), rounded in direction rnd.
Real target_log2(std::uint64_t n, std::uint64_t s, mpfr_rnd_t rnd) {
  return mul(Real::from_integer(to_mpz(n) * 2, rnd), log2_of(to_mpz(s) * 2, rnd), rnd);
}

}  // namespace

bool discrepancy_condition(std::uint64_t n, std::uint64_t s, std::uint64_t a, std::uint64_t exact_bit_cap) {
  if (n < 1 || s < 1) throw_invalid("discrepancy condition needs n >= 1 and s >= 1");
  const mpz_class a_squared = to_mpz(a) * to_mpz(a);
  if (!exact_is_feasible(n, s, exact_bit_cap)) {
    const Real a2 = Real::from_integer(a_squared, MPFR_RNDN);  // exact at 256 bits
    if (a2 >= target_log2(n, s, MPFR_RNDU)) return true;
    if (a2 < target_log2(n, s, MPFR_RNDD)) return false;
  }
  return a_squared >= ceil_log2_target(n, s);
}

std::uint64_t discrepancy_guarantee(std::uint64_t n, std::uint64_t s, std::uint64_t exact_bit_cap) {
  if (n < 1 || s < 1) throw_invalid("discrepancy guarantee needs n >= 1 and s >= 1");
  std::uint64_t start = 1;
  if (exact_is_feasible(n, s, exact_bit_cap)) {
    mpz_class root;
    mpz_class needed = ceil_log2_target(n, s);
    mpz_sqrt(root.get_mpz_t(), needed.get_mpz_t());
    start = std::max<std::uint64_t>(1, *fits_u64(root));
  } else {
    Real root;
    mpfr_sqrt(root.get(), target_log2(n, s, MPFR_RNDD).get(), MPFR_RNDD);
    start = std::max<std::uint64_t>(1, mpfr_get_uj(root.get(), MPFR_RNDD));
  }
  // Every a below start has a^2 < log2((2s)^(2n)).
  std::uint64_t a = start;
  while (!discrepancy_condition(n, s, a, exact_bit_cap)) ++a;
  return a;
}

// ---------------------------------------------------------------- Markov / Chernoff

MarkovBound markov_count_bound(std::span<const double> weights, double a) {
  if (!(a > 0) || !std::isfinite(a)) throw_invalid("Markov threshold must be positive");
  MarkovBound out;
  double sum = 0;
  for (double w : weights) {
    if (!(w > 0) || !std::isfinite(w)) throw_invalid("Markov weights must be positive");
    sum += w;
    if (w >= a) ++out.count;
  }
  out.bound = sum / a;
  return out;
}

ChernoffBound chernoff_count_bound(std::uint64_t n, std::uint64_t m, double a, std::optional<double> lambda) {
  if (n < 1) throw_invalid("Chernoff bound needs n >= 1");
  if (m > n) throw_invalid("|M| cannot exceed n");
  if (!(a > 0) || !std::isfinite(a)) throw_invalid("deviation a must be positive");
  const double lam = lambda ? *lambda : a / static_cast<double>(n);
  if (!(lam > 0) || !std::isfinite(lam)) throw_invalid("lambda must be positive");

  ChernoffBound out;
  out.lambda = lam;
  const Real L = Real::from_double(lam);
  const Real A = Real::from_double(a);
  const Real N = Real::from_u64(n);
  const Real M = Real::from_u64(m);

  Real ln2_up;
  mpfr_const_log2(ln2_up.get(), MPFR_RNDU);

  // ln(value) = -lambda a + n ln 2 + m ln cosh(lambda), every term rounded up.
  Real neg_la = mul(L, A, MPFR_RNDD);
  mpfr_neg(neg_la.get(), neg_la.get(), MPFR_RNDN);
  Real cosh_up;
  mpfr_cosh(cosh_up.get(), L.get(), MPFR_RNDU);
  Real ln_cosh_up;
  mpfr_log(ln_cosh_up.get(), cosh_up.get(), MPFR_RNDU);
  Real exponent = add(add(neg_la, mul(N, ln2_up, MPFR_RNDU), MPFR_RNDU), mul(M, ln_cosh_up, MPFR_RNDU), MPFR_RNDU);
  Real value;
  mpfr_exp(value.get(), exponent.get(), MPFR_RNDU);
  out.value = value.to_double(MPFR_RNDU);
  Real value_log2;
  mpfr_log2(value_log2.get(), value.get(), MPFR_RNDU);
  out.value_log2 = value_log2.to_double(MPFR_RNDU);

  auto gaussian = [&](const Real& size) {
    // n ln 2 + size lambda^2 / 2 - lambda a
    Real e = mul(mul(L, L, MPFR_RNDN), size, MPFR_RNDN);
    mpfr_div_ui(e.get(), e.get(), 2, MPFR_RNDN);
    e = sub(e, mul(L, A, MPFR_RNDN), MPFR_RNDN);
    Real ln2;
    mpfr_const_log2(ln2.get(), MPFR_RNDN);
    e = add(e, mul(N, ln2, MPFR_RNDN), MPFR_RNDN);
    Real r;
    mpfr_exp(r.get(), e.get(), MPFR_RNDN);
    return r.to_double();
  };
  out.gaussian_m = gaussian(M);
  out.gaussian_n = gaussian(N);

  Real cf_log2 = mul(A, A, MPFR_RNDN);
  mpfr_div(cf_log2.get(), cf_log2.get(), mul(N, Real::from_u64(2), MPFR_RNDN).get(), MPFR_RNDN);
  cf_log2 = sub(N, cf_log2, MPFR_RNDN);
  out.closed_form_log2 = cf_log2.to_double();
  Real cf;
  mpfr_exp2(cf.get(), cf_log2.get(), MPFR_RNDN);
  out.closed_form = cf.to_double();
  return out;
}

CoshMargin cosh_gaussian_margin(double lambda) {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw_invalid("lambda must be positive");
  const Real L = Real::from_double(lambda);
  Real cosh_up;
  mpfr_cosh(cosh_up.get(), L.get(), MPFR_RNDU);
  Real half_sq = mul(L, L, MPFR_RNDD);
  mpfr_div_ui(half_sq.get(), half_sq.get(), 2, MPFR_RNDD);
  Real gauss_down;
  mpfr_exp(gauss_down.get(), half_sq.get(), MPFR_RNDD);
  Real margin = sub(gauss_down, cosh_up, MPFR_RNDD);
  CoshMargin out;
  out.holds = mpfr_sgn(margin.get()) > 0;
  Real rel;
  mpfr_div(rel.get(), margin.get(), cosh_up.get(), MPFR_RNDD);
  out.relative_margin = rel.to_double(MPFR_RNDD);
  return out;
}

bool below_tail_bound(const mpz_class& count, std::uint64_t n, std::uint64_t a, std::uint64_t multiplier) {
  if (n < 1) throw_invalid("tail bound needs n >= 1");
  const mpz_class two_n_sq = to_mpz(n) * to_mpz(n) * 2;
  const mpz_class a_sq = to_mpz(a) * to_mpz(a);
  const mpz_class exponent = two_n_sq - a_sq;  // log2 of the power-of-two factor after raising to 2n
  mpz_class lhs;
  mpz_pow_ui(lhs.get_mpz_t(), count.get_mpz_t(), 2 * n);
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), multiplier, 2 * n);
  const auto shift = fits_u64(exponent >= 0 ? mpz_class(exponent) : mpz_class(-exponent));
  if (!shift) throw_resource("tail bound exponent too large");
  if (exponent >= 0)
    rhs <<= static_cast<mp_bitcnt_t>(*shift);
  else
    lhs <<= static_cast<mp_bitcnt_t>(*shift);
  return lhs < rhs;
}

// ---------------------------------------------------------------- union bounds

namespace {

BadCountBound union_bound(std::uint64_t ground, std::uint64_t n, const mpz_class& all_subsets,
                          const mpz_class& inner_subsets, ArithmeticMode mode, std::uint64_t exact_bit_cap,
                          const char* what) {
  // bad <= 2 C(ground,n) 2^(all - inner), total = 2^all.
  const auto all_u64 = fits_u64(all_subsets);
  const bool exact_ok = all_u64.has_value() && n <= exact_bit_cap / std::max<std::uint64_t>(1, bit_width(ground));
  if (mode == ArithmeticMode::Exact && !exact_ok)
    throw_resource(std::string(what) + ": exact evaluation exceeds the bit cap");

  BadCountBound out;
  if (mode == ArithmeticMode::Exact || (mode == ArithmeticMode::Auto && exact_ok)) {
    const std::uint64_t shift = *all_u64 - *fits_u64(inner_subsets);
    out.bad_bound = Magnitude::exact_scaled(binomial(ground, n) * 2, shift);
    out.total = Magnitude::exact_scaled(1, *all_u64);
  } else {
    // C(ground, n) < ground^n.
    Real log_binom = mul(Real::from_u64(n), log2_of(to_mpz(ground), MPFR_RNDU), MPFR_RNDU);
    Real log_bad = add(Real::from_u64(1), log_binom, MPFR_RNDU);
    log_bad = add(log_bad, Real::from_integer(all_subsets - inner_subsets, MPFR_RNDU), MPFR_RNDU);
    out.bad_bound = Magnitude::from_log2(log_bad, Rounding::Upper);
    out.total = Magnitude::from_log2(Real::from_integer(all_subsets, MPFR_RNDD), Rounding::Lower);
  }
  out.verdict = less_than(out.bad_bound, out.total);
  return out;
}

}  // namespace

BadCountBound ramsey_bad_count_bound(std::uint64_t r, std::uint64_t n, ArithmeticMode mode,
                                     std::uint64_t exact_bit_cap) {
  if (n < 2 || n > r) throw_invalid("Ramsey union bound needs 2 <= n <= r");
  return union_bound(r, n, binomial(r, 2), binomial(n, 2), mode, exact_bit_cap, "Ramsey union bound");
}

BadCountBound hypergraph_bad_count_bound(std::uint64_t m, std::uint64_t n, std::uint64_t l, ArithmeticMode mode,
                                         std::uint64_t exact_bit_cap) {
  if (l < 1 || l > n || n > m) throw_invalid("hypergraph union bound needs 1 <= l <= n <= m");
  return union_bound(m, n, binomial(m, l), binomial(n, l), mode, exact_bit_cap, "hypergraph union bound");
}

}  // namespace erdos
