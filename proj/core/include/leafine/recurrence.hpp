#pragma once

#include <cstdint>
#include <vector>

#include "leafine/bigcount.hpp"

namespace leafine {

// Default refusal threshold for the decimal size of sequence entries.
inline constexpr std::uint64_t kDefaultDigitsCap = 10'000'000;

// Asymptotic estimate of the decimal digit count of the n-th sequence
// entry (a couple of digits of slack; exact enough beyond n = 10).
double predicted_digits(unsigned n);

// [A_0 .. A_n_max] with A_0 = 1, A_1 = 2 and
//   A_n = 1 + binom(1 + A_{n-2}, 2) + A_{n-2} (A_{n-1} - A_{n-2}),
// the integer-exact form of the distinct-subtree recurrence. Throws
// DigitsCapExceeded before computing an entry predicted to exceed the cap.
std::vector<BigCount> n_sequence(unsigned n_max,
                                 std::uint64_t digits_cap = kDefaultDigitsCap);

BigCount n_of(unsigned n, std::uint64_t digits_cap = kDefaultDigitsCap);

// Verifies, in exact integers, 2 A_n >= A_{n-1} A_{n-2} for n >= 2 and
// A_n <= A_{n-1} A_{n-2} for n >= 3 over the whole sequence.
bool check_bounds(const std::vector<BigCount>& seq);

}  // namespace leafine
