#include "nucleus/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nucleus/asymptotics.hpp"
#include "nucleus/cache.hpp"
#include "nucleus/congruence.hpp"
#include "nucleus/counting.hpp"
#include "nucleus/partition.hpp"
#include "nucleus/report.hpp"
#include "nucleus/verify.hpp"

namespace nucleus {

namespace {

struct CommonOptions {
  std::string format = "text";
  std::string cache;
};

std::optional<std::filesystem::path> cache_path(const CommonOptions& o) {
  if (!o.cache.empty()) return std::filesystem::path(o.cache);
  if (const char* env = std::getenv("NUCLEUS_CACHE"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

CountTable obtain_table(std::size_t limit, const CommonOptions& o) {
  if (auto path = cache_path(o)) return load_or_build(*path, limit);
  return CountTable(limit);
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  cmd->add_option("--cache", o.cache, "CSV value cache to load, extend and store (default: $NUCLEUS_CACHE)");
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TableArgs {
  CommonOptions common;
  std::size_t limit = 0;
  std::string rows;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  std::vector<std::size_t> rows;
  if (!a.rows.empty()) {
    try {
      rows = parse_rows(a.rows);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (rows.front() == 0) throw UsageError("rows start at n = 1");
  } else {
    const std::size_t limit = a.limit == 0 ? 20 : a.limit;
    for (std::size_t n = 1; n <= limit; ++n) rows.push_back(n);
  }
  if (a.limit != 0 && !a.rows.empty() && rows.back() > a.limit) {
    throw UsageError("--rows reaches n=" + std::to_string(rows.back()) + " beyond --limit " + std::to_string(a.limit));
  }
  const auto table = obtain_table(rows.back(), a.common);
  out << render_table(table, rows, parse_format(a.common.format));
  return kExitOk;
}

struct VerifyArgs {
  CommonOptions common;
  std::uint32_t limit = 500;
  std::uint32_t enum_limit = 40;
  std::vector<std::string> identities;
  bool timings = false;
  bool show_errata = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.enum_limit > a.limit) throw UsageError("--enum-limit must not exceed --limit");
  const auto table = obtain_table(a.limit, a.common);
  VerifyOptions options;
  options.exact_limit = a.limit;
  options.enum_limit = a.enum_limit;
  options.identities = a.identities;
  VerificationSummary summary;
  try {
    summary = run_verification(table, options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto format = parse_format(a.common.format);
  out << render_verification(summary, format, a.timings);
  if (a.show_errata && format == Format::text) {
    out << "\nerratum detail (printed vs corrected):\n";
    for (std::uint32_t n = 4; n <= std::min<std::uint32_t>(a.limit, 8); ++n) {
      const auto r = nu_via_bounded_sum(n);
      out << "  bounded sum n=" << n << ": printed " << to_decimal(r.printed) << ", corrected "
          << to_decimal(r.corrected) << ", nu(n) " << to_decimal(table.nu(n)) << '\n';
    }
    if (a.limit >= 6) {
      const auto r = p_via_k_nuclear(6, 2, table);
      out << "  k-nuclear telescoping n=6 k=2: printed " << to_decimal(r.printed) << ", corrected "
          << to_decimal(r.corrected.value) << ", p(6) " << to_decimal(table.p(6)) << '\n';
    }
  }
  return summary.passed() ? kExitOk : kExitCheckFailed;
}

struct CongruenceArgs {
  CommonOptions common;
  std::string family;
  std::string parameter;
  std::uint32_t limit = 200;
  bool show_errata = false;
};

CongruenceFamily parse_family_spec(const std::string& family, const std::string& parameter) {
  try {
    const auto kind = parse_family_kind(family);
    if (kind == FamilyKind::custom) {
      std::vector<std::uint32_t> abm;
      std::stringstream ss(parameter);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const auto value = std::stoul(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad custom parameter '" + item + "'");
        abm.push_back(static_cast<std::uint32_t>(value));
      }
      if (abm.size() != 3) throw std::invalid_argument("custom family needs a,b,m");
      return custom_family(abm[0], abm[1], abm[2]);
    }
    if (kind == FamilyKind::parity) return make_family(kind, parameter.empty() ? 2 : std::stoul(parameter));
    if (parameter.empty()) throw std::invalid_argument(family + " needs a modulus (5, 7 or 11)");
    std::size_t used = 0;
    const auto modulus = std::stoul(parameter, &used);
    if (used != parameter.size()) throw std::invalid_argument("bad modulus '" + parameter + "'");
    return make_family(kind, static_cast<std::uint32_t>(modulus));
  } catch (const std::logic_error& e) {
    throw UsageError(e.what());
  }
}

int cmd_congruence(const CongruenceArgs& a, std::ostream& out) {
  const auto family = parse_family_spec(a.family, a.parameter);
  const auto format = parse_format(a.common.format);
  CongruenceReport report;
  if (family.kind == FamilyKind::ramanujan || family.kind == FamilyKind::custom) {
    const auto residues = p_mod_m_table(static_cast<std::uint32_t>(family.max_argument(a.limit)), family.modulus);
    report = check_family_modular(family, a.limit, residues);
  } else {
    const auto table = obtain_table(family.max_argument(a.limit), a.common);
    report = check_family(family, a.limit, table);
    if (a.show_errata && family.kind == FamilyKind::nu_window) {
      const auto printed = check_nu_window(family.modulus, a.limit, table, WindowConvention::printed);
      out << render_congruence(printed, format);
      if (format == Format::text) {
        out << (printed.holds() ? "printed window holds here\n" : "printed window: expected-fail\n");
      }
    }
  }
  out << render_congruence(report, format);
  return report.holds() ? kExitOk : kExitCheckFailed;
}

struct DecayArgs {
  std::string partition;
  std::optional<std::uint32_t> dot;
};

int cmd_decay(const DecayArgs& a, std::ostream& out, std::ostream& err) {
  if (a.dot) {
    out << render_decay_dot(*a.dot);
    return kExitOk;
  }
  if (a.partition.empty()) throw UsageError("decay needs a partition literal such as 5,2, or --dot N");
  Partition mu;
  try {
    mu = Partition::parse(a.partition);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (mu.empty()) throw UsageError("the empty partition has no decay");
  if (!is_nuclear(mu)) {
    err << "error: " << mu.to_string() << " is not nuclear: " << multiplicity(mu, 1)
        << " part(s) equal to 1 (positions ";
    bool first = true;
    for (std::size_t i = 0; i < mu.num_parts(); ++i) {
      if (mu[i] != 1) continue;
      err << (first ? "" : ",") << i + 1;
      first = false;
    }
    err << ")\n";
    return kExitUsage;
  }
  const auto chain = decay_chain(mu);
  out << render_decay_chain(chain);
  if (chain.products.empty()) out << "ground state: " << mu.to_string() << " does not decay\n";
  return kExitOk;
}

struct ParityArgs {
  CommonOptions common;
  std::uint32_t limit = 1000;
};

int cmd_parity(const ParityArgs& a, std::ostream& out) {
  if (a.limit < 4) throw UsageError("parity needs --limit >= 4");
  const auto table = obtain_table(a.limit, a.common);
  const auto rows = parity_listing(a.limit, table);
  out << render_parity(rows, parse_format(a.common.format));
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agrees(); }) ? kExitOk
                                                                                        : kExitCheckFailed;
}

struct AsymptoticsArgs {
  CommonOptions common;
  std::uint32_t limit = 100;
  std::string series = "ratios";
  bool show_errata = false;
};

int cmd_asymptotics(const AsymptoticsArgs& a, std::ostream& out) {
  const auto table = obtain_table(a.limit, a.common);
  const auto format = parse_format(a.common.format);
  if (a.series == "ratios") {
    out << render_ratio_report(ratio_report(a.limit, table), format);
  } else {
    const Series series = a.series == "p" ? Series::p : a.series == "nu" ? Series::nu : Series::gamma;
    out << render_asymptotic_rows(a.series, asymptotic_rows(series, 1, a.limit, table), format);
  }
  if (a.show_errata && format == Format::text && a.limit >= 3) {
    const auto n = a.limit;
    out << "\ngamma estimates at n=" << n << ": exact_difference " << hr_gamma(n, GammaForm::exact_difference).value()
        << ", simplified " << hr_gamma(n, GammaForm::simplified).value() << "; printed shapes "
        << hr_gamma_printed(n, GammaForm::exact_difference).value() << " and "
        << hr_gamma_printed(n, GammaForm::simplified).value() << " (negative)\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact partition counts through nuclear partitions (no part equal to 1)", "nucleus"};
  app.require_subcommand(1);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print n, gamma(n), nu(n), p(n)");
  table->add_option("--limit", table_args.limit, "Print rows 1..N (default 20)");
  table->add_option("--rows", table_args.rows, "Row selection such as 1-20,100");
  add_common(table, table_args.common);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check every identity against the pentagonal oracle");
  verify->add_option("--limit", verify_args.limit, "Largest n for table-based identities")->capture_default_str();
  verify->add_option("--enum-limit", verify_args.enum_limit, "Largest n for enumeration-based identities")
      ->capture_default_str();
  verify->add_option("--identities", verify_args.identities, "Comma separated subset of identities")
      ->delimiter(',');
  verify->add_flag("--timings", verify_args.timings, "Report wall time per identity");
  verify->add_flag("--show-errata", verify_args.show_errata, "Print printed-vs-corrected detail for the errata");
  add_common(verify, verify_args.common);

  CongruenceArgs congruence_args;
  auto* congruence = app.add_subcommand("congruence", "Scan a congruence family");
  congruence
      ->add_option("family", congruence_args.family,
                   "ramanujan | nu_window | nu_k_progression | gamma_weighted | parity | custom")
      ->required();
  congruence->add_option("parameter", congruence_args.parameter, "Modulus (5, 7, 11), or a,b,m for custom");
  congruence->add_option("--limit", congruence_args.limit, "Check progression indices up to N")
      ->capture_default_str();
  congruence->add_flag("--show-errata", congruence_args.show_errata, "Also scan the printed nu window");
  add_common(congruence, congruence_args.common);

  DecayArgs decay_args;
  auto* decay = app.add_subcommand("decay", "Trace the decay chain of a nuclear partition");
  decay->add_option("partition", decay_args.partition, "Nuclear partition such as 5,2 or [5,2]");
  decay->add_option("--dot", decay_args.dot, "Emit the decay digraph of all nuclear partitions of N as DOT");

  ParityArgs parity_args;
  auto* parity = app.add_subcommand("parity", "Parity of p(n) from gamma sums, even n <= N");
  parity->add_option("--limit", parity_args.limit, "Largest n")->capture_default_str();
  add_common(parity, parity_args.common);

  AsymptoticsArgs asym_args;
  auto* asym = app.add_subcommand("asymptotics", "Hardy-Ramanujan estimates and growth ratios");
  asym->add_option("--limit", asym_args.limit, "Largest n")->capture_default_str();
  asym->add_option("--series", asym_args.series, "ratios | p | nu | gamma")
      ->check(CLI::IsMember({"ratios", "p", "nu", "gamma"}))
      ->capture_default_str();
  asym->add_flag("--show-errata", asym_args.show_errata, "Also print the negative printed gamma shapes");
  add_common(asym, asym_args.common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == table) return cmd_table(table_args, out);
    if (active == verify) return cmd_verify(verify_args, out);
    if (active == congruence) return cmd_congruence(congruence_args, out);
    if (active == decay) return cmd_decay(decay_args, out, err);
    if (active == parity) return cmd_parity(parity_args, out);
    if (active == asym) return cmd_asymptotics(asym_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << '\n';
    return kExitCache;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace nucleus
