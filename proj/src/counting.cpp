#include "nucleus/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nucleus/partition.hpp"

namespace nucleus {

namespace {

void require_in_table(std::size_t n, const CountTable& t, const char* op) {
  if (n > t.limit()) {
    throw std::out_of_range(std::string(op) + ": n=" + std::to_string(n) + " exceeds table limit " +
                            std::to_string(t.limit()));
  }
}

void require_at_least(std::size_t n, std::size_t lo, const char* op) {
  if (n < lo) {
    throw std::domain_error(std::string(op) + " is defined for n >= " + std::to_string(lo) + ", got n=" +
                            std::to_string(n));
  }
}

}  // namespace

BigInt pentagonal_value(std::span<const BigInt> known, std::size_t n) {
  if (n == 0) return 1;
  BigInt sum = 0;
  for (std::size_t k = 1;; ++k) {
    const std::size_t g1 = k * (3 * k - 1) / 2;
    if (g1 > n) break;
    const std::size_t g2 = k * (3 * k + 1) / 2;
    if (k % 2 == 1) {
      sum += known[n - g1];
      if (g2 <= n) sum += known[n - g2];
    } else {
      sum -= known[n - g1];
      if (g2 <= n) sum -= known[n - g2];
    }
  }
  return sum;
}

CountTable::CountTable(std::size_t limit) {
  p_.push_back(1);
  nu_.push_back(1);
  gamma_.push_back(0);
  extend_to(limit);
}

CountTable CountTable::from_p_values(std::vector<BigInt> p) {
  if (p.empty()) throw std::invalid_argument("no p values");
  CountTable t;
  for (std::size_t n = 0; n < p.size(); ++n) {
    const BigInt expected = pentagonal_value(p, n);
    if (p[n] != expected) {
      throw std::invalid_argument("p(" + std::to_string(n) + ") = " + to_decimal(p[n]) + " but the pentagonal " +
                                  "recurrence gives " + to_decimal(expected));
    }
  }
  t.p_ = std::move(p);
  t.nu_.assign(1, BigInt(1));
  t.gamma_.assign(1, BigInt(0));
  for (std::size_t n = 1; n < t.p_.size(); ++n) t.append_differences(n);
  return t;
}

void CountTable::append_differences(std::size_t n) {
  nu_.push_back(p_[n] - p_[n - 1]);
  gamma_.push_back(n >= 3 ? BigInt(nu_[n] - nu_[n - 1]) : BigInt(0));
}

void CountTable::extend_to(std::size_t limit) {
  if (limit <= this->limit()) return;
  p_.reserve(limit + 1);
  nu_.reserve(limit + 1);
  gamma_.reserve(limit + 1);
  for (std::size_t n = p_.size(); n <= limit; ++n) {
    p_.push_back(pentagonal_value(p_, n));
    append_differences(n);
  }
}

BigInt CountTable::p_signed(std::int64_t n) const {
  if (n < 0) return 0;
  return p_.at(static_cast<std::size_t>(n));
}

CountTable build_table(std::size_t limit) { return CountTable(limit); }

std::string_view method_name(Method m) {
  switch (m) {
    case Method::pentagonal: return "pentagonal";
    case Method::nu_chain: return "nu_chain";
    case Method::theorem1: return "theorem1";
    case Method::gamma_weights: return "gamma_weights";
    case Method::n_nu_minus_gamma: return "n_nu_minus_gamma";
    case Method::bounded_sum: return "bounded_sum";
    case Method::k_nuclear: return "k_nuclear";
  }
  return "unknown";
}

BigInt nu_k(std::size_t n, std::uint32_t k, const CountTable& t) {
  if (k == 0) throw std::invalid_argument("nu_k: k must be positive");
  require_in_table(n, t, "nu_k");
  return t.p(n) - t.p_signed(static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k));
}

BigInt nu_bounded(std::uint32_t n, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("nu_bounded: m must be positive");
  // Rolling the m dimension of nu(n, m) = nu(n, m-1) + nu(n-m, m).
  std::vector<BigInt> row(n + 1, BigInt(0));
  row[0] = 1;
  for (std::uint32_t part = 2; part <= std::min(m, n); ++part) {
    for (std::uint32_t r = part; r <= n; ++r) row[r] += row[r - part];
  }
  return row[n];
}

BoundedCountTable::BoundedCountTable(std::uint32_t limit) : limit_(limit) {
  const std::size_t width = limit + 1;
  values_.assign(width * width, BigInt(0));
  auto at = [&](std::uint32_t n, std::uint32_t m) -> BigInt& { return values_[m * width + n]; };
  for (std::uint32_t m = 0; m <= limit; ++m) at(0, m) = 1;
  for (std::uint32_t m = 2; m <= limit; ++m) {
    for (std::uint32_t n = 1; n <= limit; ++n) {
      at(n, m) = at(n, m - 1);
      if (n >= m) at(n, m) += at(n - m, m);
    }
  }
}

const BigInt& BoundedCountTable::at(std::uint32_t n, std::uint32_t m) const {
  if (n > limit_) throw std::out_of_range("BoundedCountTable: n exceeds limit");
  if (m == 0) throw std::invalid_argument("BoundedCountTable: m must be positive");
  m = std::min(m, limit_);
  return values_[static_cast<std::size_t>(m) * (limit_ + 1) + n];
}

MethodResult p_via_nu_chain(std::size_t n, const CountTable& t) {
  require_in_table(n, t, "p_via_nu_chain");
  BigInt sum = 0;
  for (std::size_t j = 0; j <= n; ++j) sum += t.nu(j);
  return {Method::nu_chain, static_cast<std::int64_t>(n), sum};
}

Theorem1Breakdown theorem1_breakdown(std::uint32_t n) {
  require_at_least(n, 2, "p_via_theorem1");
  Theorem1Breakdown out;
  out.n = n;
  auto stream = enumerate(n, EnumerationConstraint::nuclear());
  // Reverse-lexicographic order yields (n) first.
  for (bool first = true; stream.valid(); stream.advance(), first = false) {
    ++out.nuclear_count;
    if (first) continue;
    const auto& mu = stream.current();
    out.gap_sum += mu[0] - mu[1];
  }
  out.value = BigInt(n) + out.nuclear_count - 1 + out.gap_sum;
  return out;
}

MethodResult p_via_theorem1(std::uint32_t n) {
  auto breakdown = theorem1_breakdown(n);
  return {Method::theorem1, n, std::move(breakdown.value)};
}

BigInt nu_via_gamma_chain(std::size_t n, const CountTable& t) {
  require_at_least(n, 2, "nu_via_gamma_chain");
  require_in_table(n, t, "nu_via_gamma_chain");
  BigInt sum = 1;
  for (std::size_t k = 3; k <= n; ++k) sum += t.gamma(k);
  return sum;
}

MethodResult p_via_gamma_weights(std::size_t n, const CountTable& t) {
  require_at_least(n, 2, "p_via_gamma_weights");
  require_in_table(n, t, "p_via_gamma_weights");
  BigInt sum = n;
  for (std::size_t k = 3; k <= n; ++k) sum += BigInt(n - k + 1) * t.gamma(k);
  return {Method::gamma_weights, static_cast<std::int64_t>(n), sum};
}

MethodResult p_via_n_nu_minus_gamma(std::size_t n, const CountTable& t) {
  require_at_least(n, 2, "p_via_n_nu_minus_gamma");
  require_in_table(n, t, "p_via_n_nu_minus_gamma");
  BigInt weighted = 0;
  for (std::size_t k = 3; k <= n; ++k) weighted += BigInt(k - 1) * t.gamma(k);
  return {Method::n_nu_minus_gamma, static_cast<std::int64_t>(n), BigInt(n) * t.nu(n) - weighted};
}

BoundedSumResult nu_via_bounded_sum(std::uint32_t n, const BoundedCountTable& bounded) {
  require_at_least(n, 4, "nu_via_bounded_sum");
  if (n > bounded.limit()) throw std::out_of_range("nu_via_bounded_sum: n exceeds bounded table limit");
  BigInt sum = 0;
  // k is what remains after removing the largest part n - k.
  for (std::uint32_t k = 2; k <= n - 2; ++k) sum += bounded.at(k, n - k);
  return {sum, sum + 1};
}

BoundedSumResult nu_via_bounded_sum(std::uint32_t n) {
  require_at_least(n, 4, "nu_via_bounded_sum");
  return nu_via_bounded_sum(n, BoundedCountTable(n));
}

std::vector<BigInt> k_nuclear_terms(std::size_t n, std::uint32_t k, const CountTable& t) {
  if (k == 0) throw std::invalid_argument("p_via_k_nuclear: k must be positive");
  require_in_table(n, t, "p_via_k_nuclear");
  const std::size_t steps = n / k;
  std::vector<BigInt> terms;
  terms.reserve(steps + 1);
  terms.push_back(t.p(n % k));
  for (std::size_t j = 0; j < steps; ++j) terms.push_back(nu_k(n - j * k, k, t));
  return terms;
}

KNuclearResult p_via_k_nuclear(std::size_t n, std::uint32_t k, const CountTable& t) {
  BigInt corrected = 0;
  for (const auto& term : k_nuclear_terms(n, k, t)) corrected += term;
  const std::size_t steps = n / k;
  BigInt printed = t.p(n - steps * k);
  for (std::size_t j = 1; j <= steps; ++j) printed += nu_k(n - j * k, k, t);
  return {printed, {Method::k_nuclear, static_cast<std::int64_t>(n), corrected}};
}

}  // namespace nucleus
