#pragma once

#include <mpfr.h>

#include <string>

#include "leafine/bigcount.hpp"

namespace leafine {

inline constexpr unsigned kMinPrecisionBits = 64;
inline constexpr unsigned kDefaultPrecisionBits = 256;

// Arbitrary-precision real with an explicit precision in bits (>= 64).
// Every operation rounds to nearest; binary operations carry the larger
// of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(unsigned precision_bits = kMinPrecisionBits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_ui(unsigned long value, unsigned precision);
  static BigFloat from_si(long value, unsigned precision);
  static BigFloat from_double(double value, unsigned precision);
  static BigFloat from_bigcount(const BigCount& value, unsigned precision);
  // Decimal string; throws SyntaxError if the text is not a number.
  static BigFloat from_string(const std::string& decimal, unsigned precision);
  static BigFloat sqrt_ui(unsigned long value, unsigned precision);
  // 2^exponent, exact.
  static BigFloat pow2(long exponent, unsigned precision);

  unsigned precision() const noexcept;
  // Copy rounded to a different precision.
  BigFloat with_precision(unsigned precision_bits) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs);
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs);
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs);
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs);

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat log(const BigFloat& x);
  friend BigFloat log1p(const BigFloat& x);
  friend BigFloat log10(const BigFloat& x);
  friend BigFloat exp(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);

  int sign() const;           // -1 / 0 / +1
  bool is_zero() const;
  bool is_finite() const;
  int compare(const BigFloat& rhs) const;
  int compare(double rhs) const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.compare(b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.compare(b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return a.compare(b) != 0; }

  double to_double() const;
  // Shortest-faithful scientific/positional form with the given number of
  // significant digits.
  std::string to_string(unsigned significant_digits) const;

  mpfr_srcptr raw() const noexcept { return v_; }
  mpfr_ptr raw() noexcept { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace leafine
