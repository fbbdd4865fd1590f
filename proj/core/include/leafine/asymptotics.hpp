#pragma once

#include <vector>

#include "leafine/bigcount.hpp"
#include "leafine/bigfloat.hpp"

namespace leafine {

inline constexpr unsigned kDefaultSeriesTerms = 30;

// 14-digit reference values of the asymptotic constants in
// A_n ~ K1 * K2^(phi^n). The K1 figure coincides with the truncated
// product at index 20; the truncations themselves drift to 1 (see
// compute_k1_truncated and the notes emitted by the CLI).
inline constexpr const char* kReferenceK1Decimal = "1.00001887227319";
inline constexpr const char* kReferenceK2Decimal = "1.48369689570172";

BigFloat lambda1(unsigned precision);  // (1 - sqrt 5) / 2
BigFloat lambda2(unsigned precision);  // (1 + sqrt 5) / 2, the golden ratio

// lambda2^n through the exact identity F_n * lambda2 + F_{n-1}; one
// rounding step instead of n of them.
BigFloat lambda2_power(unsigned n, unsigned precision);

// E_i = log(A_i / (A_{i-1} A_{i-2})), evaluated as log1p of an exact
// integer ratio so the result keeps full relative precision even when it
// is far below 2^-precision. Needs seq[0..i-1]; throws
// InsufficientSequence / NonPositiveLogArgument.
BigFloat e_term(unsigned i, const std::vector<BigCount>& seq,
                unsigned precision);

struct K2Result {
  BigFloat value;
  BigFloat half_width;   // truncation plus rounding, in value units
  BigFloat tail_bound;   // bound on the dropped series tail (sum level)
  bool sup_estimate_ok;  // |E_i| was decreasing at the truncation point
  unsigned terms = 0;
  unsigned precision = 0;
};

// K2 = exp((log 2 + sum_{i=2..terms} E_i lambda2^{-i+1}) / sqrt 5).
// The tail bound uses |E_{terms+1}| as the sup estimate; terms >= 2.
K2Result compute_k2(unsigned terms, unsigned precision);

// exp(-(1/sqrt 5) * sum_{i=2..n} E_i lambda1^{n-i+1}): the finite-n
// evaluation, no limit taken. Needs seq through index n. The values
// oscillate toward 1 with geometric envelope |lambda1|^n; index 20
// reproduces the 14-digit reference K1.
BigFloat compute_k1_truncated(unsigned n, const std::vector<BigCount>& seq,
                              unsigned precision);

struct PrefactorResult {
  BigFloat value;
  BigFloat half_width;
};

// C_n = A_n * K2^(-lambda2^n), the empirical approach to the leading
// constant. The half-width propagates the K2 truncation bound times
// lambda2^n; throws PrecisionInsufficient when the relative error bound
// exceeds 1e-6, InsufficientSequence when seq lacks A_n.
PrefactorResult prefactor_empirical(unsigned n, const K2Result& k2,
                                    const std::vector<BigCount>& seq,
                                    unsigned precision);

struct AsymptoticConstants {
  BigFloat lambda1;
  BigFloat lambda2;
  K2Result k2;
  BigFloat k1_truncated;
  unsigned k1_truncation_index = 0;
  unsigned terms_used = 0;
  unsigned precision = 0;
};

AsymptoticConstants compute_constants(unsigned terms, unsigned precision,
                                      unsigned k1_truncation_index = 20);

enum class K1Mode { paper, unity };

// K1 * K2^(lambda2^n) with K1 the reference constant (paper) or 1
// (unity). by_leaves swaps the exponent for the equivalent leaf-count
// form ((3 sqrt 5 - 5)/2) * F_{n+2}. Overflows to +inf for n beyond the
// float exponent range; use predict_log10 there.
BigFloat predict(unsigned n, const AsymptoticConstants& constants,
                 K1Mode mode, bool by_leaves = false);

BigFloat predict_log10(unsigned n, const AsymptoticConstants& constants,
                       K1Mode mode, bool by_leaves = false);

}  // namespace leafine
