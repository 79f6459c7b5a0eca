#pragma once

// CSV / JSON / aligned-text renderings of tables and reports. Unbounded
// integers appear in JSON as decimal strings, never as numbers.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nucleus/asymptotics.hpp"
#include "nucleus/congruence.hpp"
#include "nucleus/counting.hpp"
#include "nucleus/partition.hpp"
#include "nucleus/verify.hpp"

namespace nucleus {

using Json = nlohmann::ordered_json;

enum class Format { csv, json, text };

/// "csv", "json" or "text". Throws std::invalid_argument.
Format parse_format(std::string_view name);

/// "1-20,100" -> 1..20, 100. Sorted, duplicates removed. Throws
/// std::invalid_argument on malformed input or descending ranges.
std::vector<std::size_t> parse_rows(std::string_view spec);

/// Columns n, gamma, nu, p for the given rows.
std::string render_table(const CountTable& t, std::span<const std::size_t> rows, Format format);
Json table_to_json(const CountTable& t, std::span<const std::size_t> rows);

Json to_json(const CongruenceReport& report);
CongruenceReport congruence_report_from_json(const Json& j);
std::string render_congruence(const CongruenceReport& report, Format format);

Json to_json(const VerificationSummary& summary, bool timings);
VerificationSummary verification_summary_from_json(const Json& j);
std::string render_verification(const VerificationSummary& summary, Format format, bool timings);

std::string render_parity(std::span<const ParityRow> rows, Format format);

/// Source line followed by one line per decay product.
std::string render_decay_chain(const DecayChain& chain);
/// Digraph over the nuclear partitions of n and their decay products; each
/// chain is drawn as consecutive edges mu -> step 1 -> step 2 -> ...
std::string render_decay_dot(std::uint32_t n);

std::string render_ratio_report(std::span<const RatioRow> rows, Format format);
std::string render_asymptotic_rows(std::string_view series, std::span<const AsymptoticRow> rows, Format format);

}  // namespace nucleus
