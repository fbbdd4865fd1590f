#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "leafine/errors.hpp"

namespace leafine {

// Arbitrary-precision nonnegative integer. Exact arithmetic throughout;
// counting operations never round.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }

// 2^k - 1 as an exact integer. Refuses k past 2^34 (a 2 GiB number)
// rather than letting the allocator abort the process.
inline BigCount pow2_minus_1(std::uint64_t k) {
  if (k > (std::uint64_t{1} << 34)) {
    throw BudgetExceeded("2^" + std::to_string(k) +
                         " does not fit in memory");
  }
  BigCount r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(),
               static_cast<mp_bitcnt_t>(k));
  return r - 1;
}

}  // namespace leafine
