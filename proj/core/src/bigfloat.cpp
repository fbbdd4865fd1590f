#include "leafine/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>

#include "leafine/errors.hpp"

namespace leafine {

namespace {

mpfr_prec_t clamp_prec(unsigned bits) {
  if (bits < kMinPrecisionBits) bits = kMinPrecisionBits;
  return static_cast<mpfr_prec_t>(bits);
}

}  // namespace

BigFloat::BigFloat(unsigned precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_ui(unsigned long value, unsigned precision) {
  BigFloat r(precision);
  mpfr_set_ui(r.v_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_si(long value, unsigned precision) {
  BigFloat r(precision);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_double(double value, unsigned precision) {
  BigFloat r(precision);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_bigcount(const BigCount& value, unsigned precision) {
  BigFloat r(precision);
  mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_string(const std::string& decimal, unsigned precision) {
  BigFloat r(precision);
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw SyntaxError("not a decimal number: '" + decimal + "'");
  return r;
}

BigFloat BigFloat::sqrt_ui(unsigned long value, unsigned precision) {
  BigFloat r(precision);
  mpfr_sqrt_ui(r.v_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long exponent, unsigned precision) {
  BigFloat r(precision);
  mpfr_set_ui_2exp(r.v_, 1, static_cast<mpfr_exp_t>(exponent), MPFR_RNDN);
  return r;
}

unsigned BigFloat::precision() const noexcept {
  return static_cast<unsigned>(mpfr_get_prec(v_));
}

BigFloat BigFloat::with_precision(unsigned precision_bits) const {
  BigFloat r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {

// Widen the accumulator so a narrow lhs never truncates a wide rhs.
void match_prec(mpfr_ptr acc, mpfr_srcptr rhs) {
  if (mpfr_get_prec(acc) < mpfr_get_prec(rhs)) {
    mpfr_t tmp;
    mpfr_init2(tmp, mpfr_get_prec(rhs));
    mpfr_set(tmp, acc, MPFR_RNDN);
    mpfr_swap(acc, tmp);
    mpfr_clear(tmp);
  }
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  match_prec(v_, rhs.v_);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  match_prec(v_, rhs.v_);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  match_prec(v_, rhs.v_);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  match_prec(v_, rhs.v_);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw NonPositiveLogArgument("log of " + x.to_string(6));
  BigFloat r(x.precision());
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat log1p(const BigFloat& x) {
  if (x.compare(-1.0) <= 0)
    throw NonPositiveLogArgument("log1p of " + x.to_string(6));
  BigFloat r(x.precision());
  mpfr_log1p(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat log10(const BigFloat& x) {
  if (x.sign() <= 0) throw NonPositiveLogArgument("log10 of " + x.to_string(6));
  BigFloat r(x.precision());
  mpfr_log10(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

int BigFloat::sign() const { return mpfr_sgn(v_); }

bool BigFloat::is_zero() const { return mpfr_zero_p(v_) != 0; }

bool BigFloat::is_finite() const { return mpfr_number_p(v_) != 0; }

int BigFloat::compare(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_); }

int BigFloat::compare(double rhs) const { return mpfr_cmp_d(v_, rhs); }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::to_string(unsigned significant_digits) const {
  if (significant_digits == 0) significant_digits = 1;
  char* buf = nullptr;
  int len = mpfr_asprintf(&buf, "%.*R*g", static_cast<int>(significant_digits),
                          MPFR_RNDN, v_);
  if (len < 0 || buf == nullptr) return "?";
  std::string s(buf, static_cast<std::size_t>(len));
  mpfr_free_str(buf);
  return s;
}

}  // namespace leafine
