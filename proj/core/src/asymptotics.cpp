#include "leafine/asymptotics.hpp"

#include <cmath>
#include <string>

#include "leafine/errors.hpp"
#include "leafine/fib_trees.hpp"
#include "leafine/recurrence.hpp"

namespace leafine {

namespace {

constexpr unsigned kGuardBits = 64;

std::uint64_t digits_cap_for(unsigned n_max) {
  double pred = predicted_digits(n_max);
  if (!std::isfinite(pred)) return 0;  // n_sequence rejects anything
  return static_cast<std::uint64_t>(pred) + 64;
}

}  // namespace

BigFloat lambda1(unsigned precision) {
  BigFloat s = BigFloat::sqrt_ui(5, precision + 8);
  return ((BigFloat::from_ui(1, precision + 8) - s) /
          BigFloat::from_ui(2, precision + 8))
      .with_precision(precision);
}

BigFloat lambda2(unsigned precision) {
  BigFloat s = BigFloat::sqrt_ui(5, precision + 8);
  return ((BigFloat::from_ui(1, precision + 8) + s) /
          BigFloat::from_ui(2, precision + 8))
      .with_precision(precision);
}

BigFloat lambda2_power(unsigned n, unsigned precision) {
  if (n == 0) return BigFloat::from_ui(1, precision);
  unsigned work = precision + kGuardBits;
  BigFloat fn = BigFloat::from_bigcount(fibonacci(n), work);
  BigFloat fn1 = BigFloat::from_bigcount(fibonacci(n - 1), work);
  return (fn * lambda2(work) + fn1).with_precision(precision);
}

BigFloat e_term(unsigned i, const std::vector<BigCount>& seq,
                unsigned precision) {
  if (i < 2) throw InsufficientSequence("E_i is defined for i >= 2");
  if (seq.size() < i)
    throw InsufficientSequence("E_" + std::to_string(i) + " needs sequence values through index " +
                               std::to_string(i - 1));
  unsigned work = precision + kGuardBits;
  // A_i / (A_{i-1} A_{i-2}) = 1 + (b + 2 - b^2) / (2ab) with a = A_{i-1},
  // b = A_{i-2}; no cancellation, so rounded a and b keep full relative
  // precision without forming the huge exact products.
  BigFloat fa = BigFloat::from_bigcount(seq[i - 1], work);
  BigFloat fb = BigFloat::from_bigcount(seq[i - 2], work);
  BigFloat two = BigFloat::from_ui(2, work);
  BigFloat num = fb + two - fb * fb;
  BigFloat den = two * fa * fb;
  BigFloat delta = num / den;
  if (delta.compare(-1.0) <= 0)
    throw NonPositiveLogArgument("ratio A_i/(A_{i-1} A_{i-2}) is not positive at i = " +
                                 std::to_string(i));
  return log1p(delta).with_precision(precision);
}

K2Result compute_k2(unsigned terms, unsigned precision) {
  if (terms < 2) throw InsufficientSequence("the series starts at i = 2");
  const unsigned work = precision + kGuardBits;
  const unsigned needed = (terms <= 30) ? terms + 2 : terms + 1;
  std::vector<BigCount> seq = n_sequence(needed - 1, digits_cap_for(needed - 1));

  BigFloat sqrt5 = BigFloat::sqrt_ui(5, work);
  BigFloat w = BigFloat::from_ui(1, work) / lambda2(work);

  BigFloat sum = log(BigFloat::from_ui(2, work));
  BigFloat wp = w;  // lambda2^{-i+1} for the current i
  for (unsigned i = 2; i <= terms; ++i) {
    sum += e_term(i, seq, work) * wp;
    wp *= w;
  }

  // First dropped term has weight lambda2^{-terms}; the sup estimate
  // |E_{terms+1}| turns the tail into a geometric series.
  BigFloat e_next = abs(e_term(terms + 1, seq, work));
  BigFloat tail = e_next * wp / (BigFloat::from_ui(1, work) - w);

  bool sup_ok;
  if (terms <= 30) {
    sup_ok = abs(e_term(terms + 2, seq, work)).compare(e_next) <= 0;
  } else {
    sup_ok = true;  // |E_i| decreasing over the computed window
    BigFloat prev = abs(e_term(5, seq, work));
    for (unsigned i = 6; i <= terms + 1 && sup_ok; ++i) {
      BigFloat cur = abs(e_term(i, seq, work));
      if (cur.compare(prev) > 0) sup_ok = false;
      prev = std::move(cur);
    }
  }

  BigFloat value = exp(sum / sqrt5);
  BigFloat rel = tail / sqrt5 + BigFloat::pow2(-static_cast<long>(precision) + 3, work);
  BigFloat half = value * rel;

  K2Result res{value.with_precision(precision), half.with_precision(precision),
               tail.with_precision(precision), sup_ok, terms, precision};
  return res;
}

BigFloat compute_k1_truncated(unsigned n, const std::vector<BigCount>& seq,
                              unsigned precision) {
  if (n < 2) throw InsufficientSequence("truncation index must be >= 2");
  if (seq.size() <= n)
    throw InsufficientSequence("truncation at " + std::to_string(n) +
                               " needs sequence values through index " +
                               std::to_string(n));
  const unsigned work = precision + kGuardBits;
  BigFloat sqrt5 = BigFloat::sqrt_ui(5, work);
  BigFloat l1 = lambda1(work);
  BigFloat sum = BigFloat(work);
  BigFloat pw = l1;  // lambda1^{n-i+1}, walking i downward from n
  for (unsigned i = n; i >= 2; --i) {
    sum += e_term(i, seq, work) * pw;
    pw *= l1;
  }
  return exp(-(sum / sqrt5)).with_precision(precision);
}

PrefactorResult prefactor_empirical(unsigned n, const K2Result& k2,
                                    const std::vector<BigCount>& seq,
                                    unsigned precision) {
  if (seq.size() <= n)
    throw InsufficientSequence("prefactor at n = " + std::to_string(n) +
                               " needs the sequence through that index");
  const unsigned work = precision + kGuardBits;
  BigFloat l2n = lambda2_power(n, work);
  BigFloat logk2 = log(k2.value.with_precision(work));
  BigFloat value = BigFloat::from_bigcount(seq[n], work) * exp(-(l2n * logk2));

  // Error in log K2 is roughly the relative half-width of K2 itself plus
  // one rounding; it enters the prefactor scaled by lambda2^n.
  BigFloat relk2 = (k2.half_width / k2.value).with_precision(work);
  BigFloat rel = l2n * (relk2 + BigFloat::pow2(-static_cast<long>(k2.precision) + 4, work)) +
                 BigFloat::pow2(-static_cast<long>(precision) + 4, work);
  if (rel.compare(1e-6) > 0)
    throw PrecisionInsufficient("prefactor half-width bound " + rel.to_string(3) +
                                " exceeds 1e-6 at n = " + std::to_string(n) +
                                "; raise the precision or the series terms");
  return {value.with_precision(precision),
          (abs(value) * rel).with_precision(precision)};
}

AsymptoticConstants compute_constants(unsigned terms, unsigned precision,
                                      unsigned k1_truncation_index) {
  AsymptoticConstants c;
  c.k2 = compute_k2(terms, precision);
  unsigned k1n = k1_truncation_index < 2 ? 2 : k1_truncation_index;
  std::vector<BigCount> seq = n_sequence(k1n, digits_cap_for(k1n));
  c.k1_truncated = compute_k1_truncated(k1n, seq, precision);
  c.lambda1 = lambda1(precision);
  c.lambda2 = lambda2(precision);
  c.k1_truncation_index = k1n;
  c.terms_used = terms;
  c.precision = precision;
  return c;
}

namespace {

BigFloat growth_exponent(unsigned n, bool by_leaves, unsigned work) {
  if (!by_leaves) return lambda2_power(n, work);
  // ((3 sqrt 5 - 5) / 2) * F_{n+2}: same growth written against the leaf
  // count of the height-n tree instead of the height.
  BigFloat s = BigFloat::sqrt_ui(5, work);
  BigFloat coef = (BigFloat::from_ui(3, work) * s - BigFloat::from_ui(5, work)) /
                  BigFloat::from_ui(2, work);
  return coef * BigFloat::from_bigcount(fibonacci(n + 2u), work);
}

}  // namespace

BigFloat predict(unsigned n, const AsymptoticConstants& constants, K1Mode mode,
                 bool by_leaves) {
  const unsigned work = constants.precision + kGuardBits;
  BigFloat expo = growth_exponent(n, by_leaves, work);
  BigFloat value = exp(expo * log(constants.k2.value.with_precision(work)));
  if (mode == K1Mode::paper)
    value *= BigFloat::from_string(kReferenceK1Decimal, work);
  return value.with_precision(constants.precision);
}

BigFloat predict_log10(unsigned n, const AsymptoticConstants& constants,
                       K1Mode mode, bool by_leaves) {
  const unsigned work = constants.precision + kGuardBits;
  BigFloat expo = growth_exponent(n, by_leaves, work);
  BigFloat value = expo * log10(constants.k2.value.with_precision(work));
  if (mode == K1Mode::paper)
    value += log10(BigFloat::from_string(kReferenceK1Decimal, work));
  return value.with_precision(constants.precision);
}

}  // namespace leafine
