#pragma once

// Identity-versus-oracle sweeps behind `nucleus verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nucleus/counting.hpp"

namespace nucleus {

enum class CheckStatus { pass, fail, expected_fail, unexpected_pass };

std::string_view status_name(CheckStatus s);
CheckStatus parse_status(std::string_view name);

struct IdentityOutcome {
  std::string name;
  std::string description;
  CheckStatus status = CheckStatus::pass;
  std::uint64_t first_n = 0;
  std::uint64_t last_n = 0;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_failing_n;
  double wall_ms = 0.0;

  bool counts_as_failure() const { return status == CheckStatus::fail || status == CheckStatus::unexpected_pass; }

  friend bool operator==(const IdentityOutcome&, const IdentityOutcome&) = default;
};

struct VerificationSummary {
  std::uint64_t exact_limit = 0;
  std::uint64_t enum_limit = 0;
  std::vector<IdentityOutcome> outcomes;

  bool passed() const;

  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

struct VerifyOptions {
  std::uint32_t exact_limit = 500;
  std::uint32_t enum_limit = 40;
  /// Empty selects every identity.
  std::vector<std::string> identities;
  /// Run identities on worker threads. Results keep the canonical order.
  bool parallel = true;
};

/// Canonical identity names, in report order.
const std::vector<std::string>& identity_names();

/// Requires enum_limit <= exact_limit <= t.limit(). Unknown identity names
/// throw std::invalid_argument.
VerificationSummary run_verification(const CountTable& t, const VerifyOptions& options);

}  // namespace nucleus
