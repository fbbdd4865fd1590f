#include "leafine/recurrence.hpp"

#include <cmath>
#include <string>

#include "leafine/errors.hpp"

namespace leafine {

namespace {

// digits(A_n) ~ log10(K2) * phi^n with phi^n = F_n*phi + F_{n-1}.
constexpr double kLog10K2 = 0.17134518802570782;
constexpr double kPhi = 1.6180339887498949;

}  // namespace

double predicted_digits(unsigned n) {
  // phi^n in doubles overflows past n ~ 1474; callers hit the cap long before.
  double phi_n = std::pow(kPhi, static_cast<double>(n));
  if (!std::isfinite(phi_n)) return phi_n;
  return kLog10K2 * phi_n + 2.0;
}

std::vector<BigCount> n_sequence(unsigned n_max, std::uint64_t digits_cap) {
  double pred = predicted_digits(n_max);
  if (!(pred <= static_cast<double>(digits_cap)))
    throw DigitsCapExceeded("term " + std::to_string(n_max) + " needs about " +
                            std::to_string(pred) + " digits, cap is " +
                            std::to_string(digits_cap));
  std::vector<BigCount> seq;
  seq.reserve(static_cast<std::size_t>(n_max) + 1);
  seq.emplace_back(1);
  if (n_max >= 1) seq.emplace_back(2);
  for (unsigned n = 2; n <= n_max; ++n) {
    const BigCount& a = seq[n - 1];
    const BigCount& b = seq[n - 2];
    // 1 + C(1 + b, 2) + b(a - b)
    BigCount term = 1 + ((1 + b) * b) / 2 + b * (a - b);
    seq.push_back(std::move(term));
  }
  return seq;
}

BigCount n_of(unsigned n, std::uint64_t digits_cap) {
  return std::move(n_sequence(n, digits_cap).back());
}

bool check_bounds(const std::vector<BigCount>& seq) {
  for (std::size_t n = 2; n < seq.size(); ++n) {
    const BigCount prod = seq[n - 1] * seq[n - 2];
    if (2 * seq[n] < prod) return false;           // 2 A_n >= A_{n-1} A_{n-2}
    if (n >= 3 && seq[n] > prod) return false;     // A_n <= A_{n-1} A_{n-2}
  }
  return true;
}

}  // namespace leafine
