#pragma once

// Exact values of p(n), nu(n) (nuclear partitions) and gamma(n) (ground state
// nuclear partitions), plus every identity that recovers p or nu from them.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nucleus/bigint.hpp"

namespace nucleus {

/// Memoized p, nu, gamma for 0..limit. p comes from Euler's pentagonal
/// recurrence; nu and gamma are its first and second differences with the
/// conventions nu(0)=1, gamma(0..3)=0.
class CountTable {
 public:
  CountTable() : CountTable(0) {}
  explicit CountTable(std::size_t limit);

  /// Rebuilds a table from stored p values, checking each against the
  /// pentagonal recurrence. Throws std::invalid_argument naming the first
  /// mismatching n. nu and gamma are recomputed.
  static CountTable from_p_values(std::vector<BigInt> p);

  /// Grows the table in place, reusing every value already present.
  void extend_to(std::size_t limit);

  std::size_t limit() const { return p_.size() - 1; }

  const BigInt& p(std::size_t n) const { return p_.at(n); }
  const BigInt& nu(std::size_t n) const { return nu_.at(n); }
  const BigInt& gamma(std::size_t n) const { return gamma_.at(n); }

  /// p with p(n) = 0 for negative n. Throws std::out_of_range past limit().
  BigInt p_signed(std::int64_t n) const;

  std::span<const BigInt> p_values() const { return p_; }
  std::span<const BigInt> nu_values() const { return nu_; }
  std::span<const BigInt> gamma_values() const { return gamma_; }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  void append_differences(std::size_t n);

  std::vector<BigInt> p_;
  std::vector<BigInt> nu_;
  std::vector<BigInt> gamma_;
};

/// One term of Euler's recurrence for p(n) from the already known p(0..n-1).
BigInt pentagonal_value(std::span<const BigInt> known, std::size_t n);

CountTable build_table(std::size_t limit);

enum class Method { pentagonal, nu_chain, theorem1, gamma_weights, n_nu_minus_gamma, bounded_sum, k_nuclear };

std::string_view method_name(Method m);

struct MethodResult {
  Method method;
  std::int64_t n;
  BigInt value;

  friend bool operator==(const MethodResult&, const MethodResult&) = default;
};

/// nu_k(n) = p(n) - p(n-k): partitions of n with no part equal to k.
BigInt nu_k(std::size_t n, std::uint32_t k, const CountTable& t);

/// nu(n, m): partitions of n with every part in [2, m].
BigInt nu_bounded(std::uint32_t n, std::uint32_t m);

/// All nu(n, m) for 0 <= n, m <= limit from the recurrence
/// nu(n, m) = nu(n, m-1) + nu(n-m, m), nu(0, m) = 1, nu(n > 0, 1) = 0.
class BoundedCountTable {
 public:
  explicit BoundedCountTable(std::uint32_t limit);
  std::uint32_t limit() const { return limit_; }
  /// m larger than limit() is clamped, since parts cannot exceed n anyway.
  const BigInt& at(std::uint32_t n, std::uint32_t m) const;

 private:
  std::uint32_t limit_;
  std::vector<BigInt> values_;  // row-major by m
};

/// nu(0) + nu(1) + ... + nu(n).
MethodResult p_via_nu_chain(std::size_t n, const CountTable& t);

/// The nuclear-partition count with its decomposition, as computed by
/// enumerating the nuclear partitions of n.
struct Theorem1Breakdown {
  std::uint32_t n = 0;
  std::uint64_t nuclear_count = 0;  // nu(n)
  std::uint64_t gap_sum = 0;        // sum of mu_1 - mu_2 over nuclear mu != (n)
  BigInt value;                     // n + nu(n) - 1 + gap_sum
};

/// Enumerates the nuclear partitions of n. Requires n >= 2: at n = 1 the
/// formula gives 0 while p(1) = 1. Throws std::domain_error otherwise.
Theorem1Breakdown theorem1_breakdown(std::uint32_t n);
MethodResult p_via_theorem1(std::uint32_t n);

/// 1 + gamma(3) + ... + gamma(n), for n >= 2.
BigInt nu_via_gamma_chain(std::size_t n, const CountTable& t);

/// n + sum_{k=3..n} (n-k+1) gamma(k), for n >= 2.
MethodResult p_via_gamma_weights(std::size_t n, const CountTable& t);

/// n nu(n) - sum_{k=3..n} (k-1) gamma(k), for n >= 2.
MethodResult p_via_n_nu_minus_gamma(std::size_t n, const CountTable& t);

/// The largest-part decomposition of nu(n). printed is the sum
/// sum_{k=2}^{n-2} nu(k, n-k) alone, which misses the partition (n) itself;
/// corrected adds that term back and equals nu(n).
struct BoundedSumResult {
  BigInt printed;
  BigInt corrected;
};

/// Requires n >= 4 and n <= bounded.limit(). Throws std::domain_error /
/// std::out_of_range otherwise.
BoundedSumResult nu_via_bounded_sum(std::uint32_t n, const BoundedCountTable& bounded);
BoundedSumResult nu_via_bounded_sum(std::uint32_t n);

/// p(n) telescoped in steps of k. corrected is
/// p(n mod k) + sum_{j=0}^{floor(n/k)-1} nu_k(n - jk) and equals p(n);
/// printed shifts the sum to j = 1..floor(n/k) and does not.
struct KNuclearResult {
  BigInt printed;
  MethodResult corrected;
};

KNuclearResult p_via_k_nuclear(std::size_t n, std::uint32_t k, const CountTable& t);

/// The summands of the corrected telescoping, in order:
/// p(n mod k), nu_k(n), nu_k(n-k), ..., nu_k(n mod k + k).
std::vector<BigInt> k_nuclear_terms(std::size_t n, std::uint32_t k, const CountTable& t);

}  // namespace nucleus
