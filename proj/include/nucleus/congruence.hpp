#pragma once

// Ramanujan congruences for p and the nu / gamma families derived from them.
// A family is data: a kind, a modulus and a progression a*n + b.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nucleus/bigint.hpp"
#include "nucleus/counting.hpp"

namespace nucleus {

enum class FamilyKind { ramanujan, nu_window, nu_k_progression, gamma_weighted, parity, custom };

std::string_view family_name(FamilyKind kind);
/// Throws std::invalid_argument for unknown names.
FamilyKind parse_family_kind(std::string_view name);

/// Which lower end a nu window uses. corrected sums the a consecutive values
/// nu(a(n-1)+b+1) .. nu(an+b), which telescope to p(an+b) - p(a(n-1)+b).
/// printed starts at nu(an) instead; the two agree only when b = a - 1.
enum class WindowConvention { corrected, printed };

struct CongruenceFamily {
  FamilyKind kind = FamilyKind::ramanujan;
  std::uint32_t modulus = 5;
  std::uint32_t a = 5;
  std::uint32_t b = 4;
  std::uint32_t start_n = 0;
  WindowConvention window = WindowConvention::corrected;

  /// Largest argument of p / nu / gamma touched when checking up to n = last.
  std::uint64_t max_argument(std::uint32_t last) const;

  friend bool operator==(const CongruenceFamily&, const CongruenceFamily&) = default;
};

/// What each kind asserts for n >= start_n, with m = modulus:
///   ramanujan, custom   p(a n + b) = 0 mod m
///   nu_window           sum of nu over the window ending at a n + b = 0 mod m
///   nu_k_progression    nu_a(a n + b) = 0 mod m
///   gamma_weighted      sum_{r=1}^{a-1} r gamma(a(n-1)+b+1+r) = 0 mod m
///   parity              sum of gamma(k), k even in 4..2n+4, = p(2n+4) mod 2
///
/// make_family builds the Ramanujan-modulus families: modulus in {5, 7, 11} with
/// (a, b) = (5, 4), (7, 5), (11, 6), start_n = 1 for the nu / gamma families.
/// For parity the modulus must be 2. Throws std::invalid_argument otherwise.
CongruenceFamily make_family(FamilyKind kind, std::uint32_t modulus);

/// p(a n + b) = 0 mod m for n >= 0. Requires a >= 1, m >= 2.
CongruenceFamily custom_family(std::uint32_t a, std::uint32_t b, std::uint32_t modulus);

struct Violation {
  std::uint32_t n;
  std::uint32_t residue;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CongruenceReport {
  CongruenceFamily family;
  std::uint32_t first_n = 0;
  std::uint32_t last_n = 0;
  std::vector<Violation> violations;

  bool holds() const { return violations.empty(); }

  friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

/// Checks n = family.start_n .. last against exact values. Throws
/// std::out_of_range when the table is too short.
CongruenceReport check_family(const CongruenceFamily& family, std::uint32_t last, const CountTable& t);

/// Same for families that only need p (ramanujan, custom), against residues
/// p(n) mod family.modulus such as p_mod_m_table produces.
CongruenceReport check_family_modular(const CongruenceFamily& family, std::uint32_t last,
                                      std::span<const std::uint32_t> p_residues);

CongruenceReport check_ramanujan(std::uint32_t modulus, std::uint32_t last, const CountTable& t);
CongruenceReport check_nu_window(std::uint32_t modulus, std::uint32_t last, const CountTable& t,
                                 WindowConvention window = WindowConvention::corrected);
/// Window check over an arbitrary nu sequence (index = argument).
CongruenceReport check_nu_window(std::uint32_t modulus, std::uint32_t last, std::span<const BigInt> nu,
                                 WindowConvention window = WindowConvention::corrected);
CongruenceReport check_nu_k_progression(std::uint32_t modulus, std::uint32_t last, const CountTable& t);
CongruenceReport check_gamma_weighted(std::uint32_t last, const CountTable& t, std::uint32_t modulus = 5);

/// gamma(4) + gamma(6) + ... + gamma(n) for even n >= 4.
BigInt parity_gamma_sum(std::uint32_t n, const CountTable& t);
/// parity_gamma_sum(n) mod 2, which equals p(n) mod 2. Throws
/// std::domain_error for odd n or n < 4.
int parity_via_gamma(std::uint32_t n, const CountTable& t);

/// p(0..last) mod m by the pentagonal recurrence in modular arithmetic.
std::vector<std::uint32_t> p_mod_m_table(std::uint32_t last, std::uint32_t modulus);

struct ParityRow {
  std::uint32_t n;
  BigInt gamma_sum;
  int parity;    // gamma_sum mod 2
  int expected;  // p(n) mod 2 from the modular table
  bool agrees() const { return parity == expected; }
};

/// Every even n in 4..last. Requires last <= t.limit().
std::vector<ParityRow> parity_listing(std::uint32_t last, const CountTable& t);

}  // namespace nucleus
