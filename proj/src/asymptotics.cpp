#include "nucleus/asymptotics.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nucleus {

namespace {

void require_at_least(std::uint64_t n, std::uint64_t lo, const char* op) {
  if (n < lo) {
    throw std::domain_error(std::string(op) + " is defined for n >= " + std::to_string(lo) + ", got n=" +
                            std::to_string(n));
  }
}

double root(std::uint64_t n) { return std::sqrt(static_cast<double>(n)); }

// sqrt(n) - sqrt(n-1) without cancellation.
double root_gap(std::uint64_t n) { return 1.0 / (root(n) + root(n - 1)); }

// log of e^{A sqrt n} / (B n), the shared scale of every estimator.
double log_scale(std::uint64_t n) {
  const auto& c = hr_constants();
  return c.A * root(n) - std::log(c.B * static_cast<double>(n));
}

Estimate scaled(std::uint64_t n, double factor) {
  if (factor == 0.0) return {0, 0.0};
  return {factor > 0 ? 1 : -1, log_scale(n) + std::log(std::fabs(factor))};
}

}  // namespace

const HRConstants& hr_constants() {
  static const HRConstants constants{std::numbers::pi * std::sqrt(2.0 / 3.0), 4.0 * std::sqrt(3.0)};
  return constants;
}

double Estimate::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

double Estimate::ratio_to(const BigInt& exact) const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude - log_of(exact));
}

Estimate hr_p(std::uint64_t n) {
  require_at_least(n, 1, "hr_p");
  return {1, log_scale(n)};
}

Estimate hr_nu(std::uint64_t n, NuForm form) {
  require_at_least(n, 2, "hr_nu");
  const double A = hr_constants().A;
  const double d1 = root_gap(n);
  switch (form) {
    case NuForm::exact_difference: return scaled(n, -std::expm1(-A * d1));
    case NuForm::simplified: return scaled(n, A * d1);
  }
  throw std::invalid_argument("hr_nu: unknown form");
}

Estimate hr_gamma(std::uint64_t n, GammaForm form) {
  require_at_least(n, 3, "hr_gamma");
  const double A = hr_constants().A;
  const double d1 = root_gap(n);
  const double d2 = root_gap(n - 1);
  switch (form) {
    case GammaForm::exact_difference:
      // (1 - e^{-A d1}) - e^{-A d1} (1 - e^{-A d2})
      return scaled(n, -std::expm1(-A * d1) + std::exp(-A * d1) * std::expm1(-A * d2));
    case GammaForm::simplified:
      return scaled(n, A * (d1 - std::exp(-A * d1) * d2));
  }
  throw std::invalid_argument("hr_gamma: unknown form");
}

Estimate hr_gamma_printed(std::uint64_t n, GammaForm form) {
  require_at_least(n, 3, "hr_gamma_printed");
  const double A = hr_constants().A;
  const double d1 = root_gap(n);
  const double d2 = root_gap(n - 1);
  switch (form) {
    case GammaForm::exact_difference:
      return scaled(n, std::exp(-A * d2) - std::exp(-A * d1));
    case GammaForm::simplified: {
      // sqrt n - 2 sqrt(n-1) + sqrt(n-2) = d1 - d2, rewritten to avoid cancellation.
      const double second = -2.0 / ((root(n) + root(n - 2)) * (root(n) + root(n - 1)) * (root(n - 1) + root(n - 2)));
      return scaled(n, A * second);
    }
  }
  throw std::invalid_argument("hr_gamma_printed: unknown form");
}

std::vector<AsymptoticRow> asymptotic_rows(Series series, std::uint64_t first, std::uint64_t last,
                                           const CountTable& t) {
  if (last > t.limit()) throw std::out_of_range("asymptotic_rows: last exceeds table limit");
  std::vector<AsymptoticRow> rows;
  for (std::uint64_t n = first; n <= last; ++n) {
    const BigInt* exact = nullptr;
    Estimate estimate;
    switch (series) {
      case Series::p:
        if (n < 1) continue;
        exact = &t.p(n);
        estimate = hr_p(n);
        break;
      case Series::nu:
        if (n < 2) continue;
        exact = &t.nu(n);
        estimate = hr_nu(n, NuForm::exact_difference);
        break;
      case Series::gamma:
        if (n < 3) continue;
        exact = &t.gamma(n);
        estimate = hr_gamma(n, GammaForm::exact_difference);
        break;
    }
    if (*exact <= 0) continue;
    rows.push_back({n, *exact, estimate.value(), estimate.ratio_to(*exact)});
  }
  return rows;
}

std::vector<RatioRow> ratio_report(std::uint64_t last, const CountTable& t) {
  if (last > t.limit()) throw std::out_of_range("ratio_report: last exceeds table limit");
  const double A = hr_constants().A;
  std::vector<RatioRow> rows;
  rows.reserve(last);
  for (std::uint64_t n = 1; n <= last; ++n) {
    RatioRow row{};
    row.n = n;
    row.nu_over_p = ratio_of(t.nu(n), t.p(n));
    if (t.nu(n) > 0) row.gamma_over_nu = ratio_of(t.gamma(n), t.nu(n));
    if (n >= 2 && n % 2 == 0) row.predicted_nu_over_p = A * root_gap(n);
    row.sqrt_n_nu_over_p = root(n) * row.nu_over_p;
    row.n_gamma_over_p = static_cast<double>(n) * ratio_of(t.gamma(n), t.p(n));
    rows.push_back(row);
  }
  return rows;
}

std::vector<BlockMean> dyadic_block_means(std::span<const double> values, std::uint64_t first_block) {
  if (first_block == 0 || (first_block & (first_block - 1)) != 0) {
    throw std::invalid_argument("dyadic_block_means: first_block must be a power of two");
  }
  std::vector<BlockMean> means;
  if (values.empty()) return means;
  const std::uint64_t top = values.size() - 1;
  for (std::uint64_t lo = first_block; lo <= top; lo *= 2) {
    const std::uint64_t hi = std::min(2 * lo - 1, top);
    double sum = 0.0;
    for (std::uint64_t n = lo; n <= hi; ++n) sum += values[n];
    means.push_back({lo, hi, sum / static_cast<double>(hi - lo + 1)});
  }
  return means;
}

}  // namespace nucleus
