#include <doctest.h>

#include "nucleus/congruence.hpp"
#include "oracle.hpp"

using namespace nucleus;

namespace {

const CountTable& table() {
  static const CountTable t(2400);
  return t;
}

}  // namespace

TEST_CASE("ramanujan congruences hold on the exact table") {
  const auto& t = table();
  CHECK(t.p(4) % 5 == 0);
  CHECK(t.p(12) % 7 == 0);
  CHECK(t.p(17) % 11 == 0);
  for (std::uint32_t m : {5u, 7u, 11u}) {
    const auto r = check_ramanujan(m, 200, t);
    CHECK(r.holds());
    CHECK(r.first_n == 0);
    CHECK(r.last_n == 200);
  }
  CHECK_THROWS_AS(check_ramanujan(13, 10, t), std::invalid_argument);
  CHECK_THROWS_AS(check_ramanujan(5, 1000, t), std::out_of_range);
}

TEST_CASE("ramanujan congruences hold on the modular table to n = 10000") {
  for (std::uint32_t m : {5u, 7u, 11u}) {
    const auto family = make_family(FamilyKind::ramanujan, m);
    const auto residues = p_mod_m_table(static_cast<std::uint32_t>(family.max_argument(10000)), m);
    CHECK(check_family_modular(family, 10000, residues).holds());
  }
}

TEST_CASE("modular table agrees with the exact oracle") {
  const auto exact = oracle::p_exact(400);
  for (std::uint32_t m : {2u, 3u, 5u, 7u, 11u, 13u, 1000003u}) {
    const auto residues = p_mod_m_table(400, m);
    REQUIRE(residues.size() == 401);
    for (std::size_t n = 0; n <= 400; ++n) REQUIRE(residues[n] == exact[n] % m);
  }
  CHECK(p_mod_m_table(20, 2)[20] == 1);
  CHECK(p_mod_m_table(4, 5)[4] == 0);
  CHECK(p_mod_m_table(12, 7)[12] == 0);
}

TEST_CASE("nu windows") {
  const auto& t = table();
  BigInt first = 0;
  for (std::size_t k = 5; k <= 9; ++k) first += t.nu(k);
  CHECK(first == 25);
  BigInt second = 0;
  for (std::size_t k = 10; k <= 14; ++k) second += t.nu(k);
  CHECK(second == 105);

  for (std::uint32_t m : {5u, 7u, 11u}) {
    const auto r = check_nu_window(m, 200, t);
    CHECK(r.holds());
    CHECK(r.first_n == 1);
  }
  SUBCASE("uncorrected, the 5-window agrees but the 7- and 11-windows do not") {
    CHECK(check_nu_window(5, 200, t, WindowConvention::printed).holds());
    const auto seven = check_nu_window(7, 200, t, WindowConvention::printed);
    REQUIRE_FALSE(seven.holds());
    CHECK(seven.violations.front() == Violation{1, 66 % 7});
    CHECK_FALSE(check_nu_window(11, 200, t, WindowConvention::printed).holds());
  }
}

TEST_CASE("a corrupted nu value always surfaces as a window violation") {
  const auto& t = table();
  const auto last_n = 50u;
  std::vector<BigInt> nu(t.nu_values().begin(), t.nu_values().begin() + 11 * last_n + 7);
  for (std::uint32_t m : {5u, 7u, 11u}) {
    const auto family = make_family(FamilyKind::nu_window, m);
    for (std::size_t k = family.b + 1; k <= family.a * last_n + family.b; k += 3) {
      for (int delta : {1, 2, -1}) {
        if (delta % static_cast<int>(m) == 0) continue;
        auto corrupted = nu;
        corrupted[k] += delta;
        const auto r = check_nu_window(m, last_n, std::span<const BigInt>(corrupted));
        REQUIRE_FALSE(r.holds());
        // The window containing k starts at a(n-1)+b+1.
        const auto owner = static_cast<std::uint32_t>((k + family.a - family.b - 1) / family.a);
        CHECK(r.violations.front().n == owner);
      }
    }
  }
}

TEST_CASE("nu_k progressions") {
  const auto& t = table();
  CHECK(nu_k(9, 5, t) == 25);
  CHECK(nu_k(12, 7, t) == 70);
  CHECK(nu_k(17, 11, t) == 286);
  for (std::uint32_t m : {5u, 7u, 11u}) CHECK(check_nu_k_progression(m, 200, t).holds());
}

TEST_CASE("gamma-weighted sums") {
  const auto& t = table();
  auto weighted = [&](std::uint32_t a, std::uint32_t b, std::uint32_t n) {
    BigInt s = 0;
    for (std::uint32_t r = 1; r < a; ++r) s += r * t.gamma(a * (n - 1) + b + 1 + r);
    return s;
  };
  CHECK(weighted(5, 4, 1) == 15);
  CHECK(weighted(5, 4, 2) == 65);
  BigInt at_zero = t.gamma(1) + 2 * t.gamma(2) + 3 * t.gamma(3) + 4 * t.gamma(4);
  CHECK(at_zero == 4);

  for (std::uint32_t m : {5u, 7u, 11u}) {
    const auto r = check_gamma_weighted(200, t, m);
    CHECK(r.holds());
    CHECK(r.first_n == 1);
  }
}

TEST_CASE("parity via gamma sums") {
  const auto& t = table();
  CHECK(parity_gamma_sum(20, t) == 95);
  CHECK(parity_via_gamma(20, t) == 1);
  CHECK(parity_gamma_sum(4, t) == 1);
  CHECK(parity_gamma_sum(6, t) == 3);
  CHECK_THROWS_AS(parity_via_gamma(21, t), std::domain_error);
  CHECK_THROWS_AS(parity_via_gamma(2, t), std::domain_error);

  const auto residues = p_mod_m_table(1000, 2);
  for (std::uint32_t n = 4; n <= 1000; n += 2) REQUIRE(parity_via_gamma(n, t) == static_cast<int>(residues[n]));
  const auto rows = parity_listing(1000, t);
  CHECK(rows.size() == 499);
  CHECK(std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agrees(); }));
  CHECK(check_family(make_family(FamilyKind::parity, 2), 498, t).holds());
}

TEST_CASE("custom families") {
  const auto& t = table();
  const auto r = check_family(custom_family(2, 0, 3), 50, t);
  REQUIRE_FALSE(r.holds());
  CHECK(r.violations.front() == Violation{0, 1});
  CHECK(check_family(custom_family(5, 4, 5), 100, t).holds());
  CHECK_THROWS_AS(custom_family(0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(custom_family(2, 1, 1), std::invalid_argument);
}

TEST_CASE("family names and validation") {
  for (auto kind : {FamilyKind::ramanujan, FamilyKind::nu_window, FamilyKind::nu_k_progression,
                    FamilyKind::gamma_weighted, FamilyKind::parity, FamilyKind::custom}) {
    CHECK(parse_family_kind(family_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_family_kind("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(make_family(FamilyKind::parity, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_family(FamilyKind::nu_window, 3), std::invalid_argument);
  const auto seven = make_family(FamilyKind::nu_window, 7);
  CHECK(seven.a == 7);
  CHECK(seven.b == 5);
  CHECK(seven.start_n == 1);
}
