#include "nucleus/congruence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nucleus {

namespace {

std::uint32_t residue(const BigInt& value, std::uint32_t modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::uint32_t>();
}

std::uint32_t progression_offset(std::uint32_t modulus) {
  switch (modulus) {
    case 5: return 4;
    case 7: return 5;
    case 11: return 6;
    default:
      throw std::invalid_argument("unsupported modulus " + std::to_string(modulus) + " (expected 5, 7 or 11)");
  }
}

void require_argument(const CongruenceFamily& family, std::uint32_t last, std::size_t available) {
  if (last >= family.start_n && family.max_argument(last) >= available) {
    throw std::out_of_range(std::string(family_name(family.kind)) + " check up to n=" + std::to_string(last) +
                            " needs values through " + std::to_string(family.max_argument(last)));
  }
}

// Lower end of the nu window whose upper end is a n + b. May be negative for
// the corrected convention at n = 0.
std::int64_t window_start(const CongruenceFamily& f, std::uint32_t n) {
  const auto a = static_cast<std::int64_t>(f.a);
  const auto b = static_cast<std::int64_t>(f.b);
  if (f.window == WindowConvention::printed) return a * n;
  return a * (static_cast<std::int64_t>(n) - 1) + b + 1;
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ramanujan: return "ramanujan";
    case FamilyKind::nu_window: return "nu_window";
    case FamilyKind::nu_k_progression: return "nu_k_progression";
    case FamilyKind::gamma_weighted: return "gamma_weighted";
    case FamilyKind::parity: return "parity";
    case FamilyKind::custom: return "custom";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (auto kind : {FamilyKind::ramanujan, FamilyKind::nu_window, FamilyKind::nu_k_progression,
                    FamilyKind::gamma_weighted, FamilyKind::parity, FamilyKind::custom}) {
    if (family_name(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown congruence family '" + std::string(name) + "'");
}

std::uint64_t CongruenceFamily::max_argument(std::uint32_t last) const {
  if (kind == FamilyKind::parity) return 2ull * last + 4;
  return static_cast<std::uint64_t>(a) * last + b;
}

CongruenceFamily make_family(FamilyKind kind, std::uint32_t modulus) {
  if (kind == FamilyKind::custom) throw std::invalid_argument("use custom_family for custom progressions");
  if (kind == FamilyKind::parity) {
    if (modulus != 2) throw std::invalid_argument("parity family has modulus 2");
    return {FamilyKind::parity, 2, 2, 4, 0};
  }
  const auto b = progression_offset(modulus);
  const std::uint32_t start = kind == FamilyKind::ramanujan ? 0 : 1;
  return {kind, modulus, modulus, b, start};
}

CongruenceFamily custom_family(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  if (a == 0) throw std::invalid_argument("custom family needs a >= 1");
  if (modulus < 2) throw std::invalid_argument("custom family needs modulus >= 2");
  return {FamilyKind::custom, modulus, a, b, 0};
}

CongruenceReport check_nu_window(std::uint32_t modulus, std::uint32_t last, std::span<const BigInt> nu,
                                 WindowConvention window) {
  auto family = make_family(FamilyKind::nu_window, modulus);
  family.window = window;
  require_argument(family, last, nu.size());
  CongruenceReport report{family, family.start_n, last, {}};
  for (std::uint32_t n = family.start_n; n <= last; ++n) {
    const auto hi = static_cast<std::int64_t>(family.a) * n + family.b;
    BigInt sum = 0;
    for (auto k = std::max<std::int64_t>(window_start(family, n), 0); k <= hi; ++k) sum += nu[k];
    if (const auto r = residue(sum, modulus); r != 0) report.violations.push_back({n, r});
  }
  return report;
}

CongruenceReport check_family(const CongruenceFamily& family, std::uint32_t last, const CountTable& t) {
  if (family.kind == FamilyKind::nu_window) {
    if (family.a != family.modulus) throw std::invalid_argument("nu_window families use a = modulus");
    return check_nu_window(family.modulus, last, t.nu_values(), family.window);
  }
  require_argument(family, last, t.limit() + 1);
  CongruenceReport report{family, family.start_n, last, {}};
  const auto m = family.modulus;
  for (std::uint32_t n = family.start_n; n <= last; ++n) {
    const std::size_t arg = static_cast<std::size_t>(family.a) * n + family.b;
    std::uint32_t r = 0;
    switch (family.kind) {
      case FamilyKind::ramanujan:
      case FamilyKind::custom:
        r = residue(t.p(arg), m);
        break;
      case FamilyKind::nu_k_progression:
        r = residue(nu_k(arg, family.a, t), m);
        break;
      case FamilyKind::gamma_weighted: {
        const std::size_t s = arg - family.a + 1;
        BigInt sum = 0;
        for (std::uint32_t w = 1; w < family.a; ++w) sum += BigInt(w) * t.gamma(s + w);
        r = residue(sum, m);
        break;
      }
      case FamilyKind::parity: {
        const auto even = static_cast<std::uint32_t>(2 * n + 4);
        r = residue(parity_gamma_sum(even, t) + t.p(even), 2);
        break;
      }
      case FamilyKind::nu_window:
        break;
    }
    if (r != 0) report.violations.push_back({n, r});
  }
  return report;
}

CongruenceReport check_family_modular(const CongruenceFamily& family, std::uint32_t last,
                                      std::span<const std::uint32_t> p_residues) {
  if (family.kind != FamilyKind::ramanujan && family.kind != FamilyKind::custom) {
    throw std::invalid_argument("modular residues only support families stated in terms of p");
  }
  require_argument(family, last, p_residues.size());
  CongruenceReport report{family, family.start_n, last, {}};
  for (std::uint32_t n = family.start_n; n <= last; ++n) {
    const auto r = p_residues[static_cast<std::size_t>(family.a) * n + family.b] % family.modulus;
    if (r != 0) report.violations.push_back({n, r});
  }
  return report;
}

CongruenceReport check_ramanujan(std::uint32_t modulus, std::uint32_t last, const CountTable& t) {
  return check_family(make_family(FamilyKind::ramanujan, modulus), last, t);
}

CongruenceReport check_nu_window(std::uint32_t modulus, std::uint32_t last, const CountTable& t,
                                 WindowConvention window) {
  return check_nu_window(modulus, last, t.nu_values(), window);
}

CongruenceReport check_nu_k_progression(std::uint32_t modulus, std::uint32_t last, const CountTable& t) {
  return check_family(make_family(FamilyKind::nu_k_progression, modulus), last, t);
}

CongruenceReport check_gamma_weighted(std::uint32_t last, const CountTable& t, std::uint32_t modulus) {
  return check_family(make_family(FamilyKind::gamma_weighted, modulus), last, t);
}

BigInt parity_gamma_sum(std::uint32_t n, const CountTable& t) {
  if (n < 4 || n % 2 != 0) {
    throw std::domain_error("the gamma parity formula needs an even n >= 4, got n=" + std::to_string(n));
  }
  if (n > t.limit()) throw std::out_of_range("parity_via_gamma: n exceeds table limit");
  BigInt sum = 0;
  for (std::uint32_t k = 4; k <= n; k += 2) sum += t.gamma(k);
  return sum;
}

int parity_via_gamma(std::uint32_t n, const CountTable& t) {
  return static_cast<int>(residue(parity_gamma_sum(n, t), 2));
}

std::vector<std::uint32_t> p_mod_m_table(std::uint32_t last, std::uint32_t modulus) {
  if (modulus < 2) throw std::invalid_argument("p_mod_m_table: modulus must be >= 2");
  const std::uint64_t m = modulus;
  std::vector<std::uint32_t> p(static_cast<std::size_t>(last) + 1, 0);
  p[0] = static_cast<std::uint32_t>(1 % m);
  for (std::size_t n = 1; n <= last; ++n) {
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      std::uint64_t term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      (k % 2 == 1 ? plus : minus) += term;
    }
    p[n] = static_cast<std::uint32_t>((plus % m + m - minus % m) % m);
  }
  return p;
}

std::vector<ParityRow> parity_listing(std::uint32_t last, const CountTable& t) {
  if (last > t.limit()) throw std::out_of_range("parity_listing: last exceeds table limit");
  const auto expected = p_mod_m_table(last, 2);
  std::vector<ParityRow> rows;
  BigInt sum = 0;
  for (std::uint32_t n = 4; n <= last; n += 2) {
    sum += t.gamma(n);
    rows.push_back({n, sum, static_cast<int>(residue(sum, 2)), static_cast<int>(expected[n])});
  }
  return rows;
}

}  // namespace nucleus
