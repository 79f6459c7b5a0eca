#pragma once

// Hardy-Ramanujan style estimates for p, nu and gamma, and ratio diagnostics
// against exact tables.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nucleus/bigint.hpp"
#include "nucleus/counting.hpp"

namespace nucleus {

/// A = pi sqrt(2/3), B = 4 sqrt(3).
struct HRConstants {
  double A;
  double B;
};

const HRConstants& hr_constants();

/// A real number carried as sign * exp(log_magnitude) so estimates stay
/// finite far beyond the point where exp(A sqrt(n)) overflows a double.
struct Estimate {
  int sign = 0;  // -1, 0 or +1
  double log_magnitude = 0.0;

  /// May be +-inf when the magnitude exceeds double range.
  double value() const;
  /// This estimate divided by a positive exact value.
  double ratio_to(const BigInt& exact) const;
};

/// exp(A sqrt n) / (B n). Requires n >= 1.
Estimate hr_p(std::uint64_t n);

enum class NuForm {
  exact_difference,  // e^{A sqrt n} (1 - e^{-A(sqrt n - sqrt(n-1))}) / (B n)
  simplified,        // A e^{A sqrt n} (sqrt n - sqrt(n-1)) / (B n)
};

/// Requires n >= 2.
Estimate hr_nu(std::uint64_t n, NuForm form);

/// With d1 = sqrt n - sqrt(n-1) and d2 = sqrt(n-1) - sqrt(n-2):
///   exact_difference  e^{A sqrt n} (1 - 2 e^{-A d1} + e^{-A (d1 + d2)}) / (B n)
///   simplified        A e^{A sqrt n} (d1 - e^{-A d1} d2) / (B n)
/// i.e. the difference of the corresponding nu forms at n and n-1 over the
/// common denominator B n. Both are positive for n >= 3. Requires n >= 3.
enum class GammaForm { exact_difference, simplified };

Estimate hr_gamma(std::uint64_t n, GammaForm form);

/// The commonly quoted shapes
///   exact_difference  e^{A sqrt n} (e^{-A d2} - e^{-A d1}) / (B n)
///   simplified        A e^{A sqrt n} (d1 - d2) / (B n)
/// which difference only the correction factor while holding e^{A sqrt n}
/// fixed. sqrt is concave, so both are negative for every n >= 3. Kept for
/// comparison. Requires n >= 3.
Estimate hr_gamma_printed(std::uint64_t n, GammaForm form);

struct AsymptoticRow {
  std::uint64_t n;
  BigInt exact;
  double estimate;
  double ratio;  // estimate / exact
};

enum class Series { p, nu, gamma };

/// One row per n in [first, last] with a positive exact value, comparing
/// hr_p, hr_nu(exact_difference) or hr_gamma(exact_difference) against the
/// table. n below the estimator's domain is skipped.
std::vector<AsymptoticRow> asymptotic_rows(Series series, std::uint64_t first, std::uint64_t last,
                                           const CountTable& t);

struct RatioRow {
  std::uint64_t n;
  double nu_over_p;
  std::optional<double> gamma_over_nu;        // absent when nu(n) = 0
  std::optional<double> predicted_nu_over_p;  // A (sqrt n - sqrt(n-1)), even n >= 2 only
  double sqrt_n_nu_over_p;                    // sqrt(n) nu(n) / p(n), reported only
  double n_gamma_over_p;                      // n gamma(n) / p(n), reported only
};

/// Rows n = 1..last. Requires last <= t.limit().
std::vector<RatioRow> ratio_report(std::uint64_t last, const CountTable& t);

struct BlockMean {
  std::uint64_t first;
  std::uint64_t last;
  double mean;
};

/// Means of values[n] over dyadic blocks [2^j, 2^{j+1}) starting at
/// first_block (a power of two), the last block truncated at values.size()-1.
std::vector<BlockMean> dyadic_block_means(std::span<const double> values, std::uint64_t first_block);

}  // namespace nucleus
