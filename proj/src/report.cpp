#include "nucleus/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace nucleus {

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string render_grid(const std::vector<std::string>& header, const Grid& rows, Format format) {
  std::string out;
  if (format == Format::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += "  ";
      text += std::string(width[i] - cells[i].size(), ' ') + cells[i];
    }
    out += text + '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

CongruenceFamily family_from_json(const Json& j) {
  CongruenceFamily f;
  f.kind = parse_family_kind(j.at("family_id").get<std::string>());
  f.modulus = j.at("modulus").get<std::uint32_t>();
  f.a = j.at("progression").at(0).get<std::uint32_t>();
  f.b = j.at("progression").at(1).get<std::uint32_t>();
  f.start_n = j.at("start_n").get<std::uint32_t>();
  f.window = j.value("window", std::string("corrected")) == "printed" ? WindowConvention::printed
                                                                      : WindowConvention::corrected;
  return f;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv, json or text)");
}

std::vector<std::size_t> parse_rows(std::string_view spec) {
  std::vector<std::size_t> rows;
  if (spec.empty()) throw std::invalid_argument("empty row specification");
  while (true) {
    const auto comma = spec.find(',');
    const auto item = spec.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      rows.push_back(parse_uint(item, "row"));
    } else {
      const auto lo = parse_uint(item.substr(0, dash), "row range");
      const auto hi = parse_uint(item.substr(dash + 1), "row range");
      if (lo > hi) throw std::invalid_argument("descending row range '" + std::string(item) + "'");
      for (auto n = lo; n <= hi; ++n) rows.push_back(n);
    }
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

Json table_to_json(const CountTable& t, std::span<const std::size_t> rows) {
  Json out;
  out["columns"] = {"n", "gamma", "nu", "p"};
  out["rows"] = Json::array();
  for (const auto n : rows) {
    out["rows"].push_back(
        {{"n", n}, {"gamma", to_decimal(t.gamma(n))}, {"nu", to_decimal(t.nu(n))}, {"p", to_decimal(t.p(n))}});
  }
  return out;
}

std::string render_table(const CountTable& t, std::span<const std::size_t> rows, Format format) {
  if (format == Format::json) return dump(table_to_json(t, rows));
  Grid grid;
  for (const auto n : rows) {
    grid.push_back({std::to_string(n), to_decimal(t.gamma(n)), to_decimal(t.nu(n)), to_decimal(t.p(n))});
  }
  if (format == Format::csv) return render_grid({"n", "gamma", "nu", "p"}, grid, format);
  return render_grid({"n", "gamma(n)", "nu(n)", "p(n)"}, grid, format);
}

Json to_json(const CongruenceReport& report) {
  const auto& f = report.family;
  Json j;
  j["family_id"] = family_name(f.kind);
  j["modulus"] = f.modulus;
  j["progression"] = {f.a, f.b};
  j["start_n"] = f.start_n;
  if (f.kind == FamilyKind::nu_window) {
    j["window"] = f.window == WindowConvention::printed ? "printed" : "corrected";
  }
  j["range_checked"] = {report.first_n, report.last_n};
  j["holds"] = report.holds();
  j["violations"] = Json::array();
  for (const auto& v : report.violations) j["violations"].push_back({{"n", v.n}, {"residue", v.residue}});
  return j;
}

CongruenceReport congruence_report_from_json(const Json& j) {
  CongruenceReport report;
  report.family = family_from_json(j);
  report.first_n = j.at("range_checked").at(0).get<std::uint32_t>();
  report.last_n = j.at("range_checked").at(1).get<std::uint32_t>();
  for (const auto& v : j.at("violations")) {
    report.violations.push_back({v.at("n").get<std::uint32_t>(), v.at("residue").get<std::uint32_t>()});
  }
  return report;
}

std::string render_congruence(const CongruenceReport& report, Format format) {
  if (format == Format::json) return dump(to_json(report));
  const auto& f = report.family;
  if (format == Format::csv) {
    Grid grid;
    for (const auto& v : report.violations) grid.push_back({std::to_string(v.n), std::to_string(v.residue)});
    return render_grid({"n", "residue"}, grid, format);
  }
  std::string out = std::string(family_name(f.kind)) + " mod " + std::to_string(f.modulus) + ", progression " +
                    std::to_string(f.a) + "n+" + std::to_string(f.b);
  if (f.kind == FamilyKind::nu_window && f.window == WindowConvention::printed) out += " (printed window)";
  out += ", n=" + std::to_string(report.first_n) + ".." + std::to_string(report.last_n) + ": ";
  if (report.holds()) return out + "holds\n";
  out += std::to_string(report.violations.size()) + " violation(s)\n";
  Grid grid;
  for (const auto& v : report.violations) grid.push_back({std::to_string(v.n), std::to_string(v.residue)});
  return out + render_grid({"n", "residue"}, grid, format);
}

Json to_json(const VerificationSummary& summary, bool timings) {
  Json j;
  j["exact_limit"] = summary.exact_limit;
  j["enum_limit"] = summary.enum_limit;
  j["passed"] = summary.passed();
  j["identities"] = Json::array();
  for (const auto& o : summary.outcomes) {
    Json row;
    row["name"] = o.name;
    row["description"] = o.description;
    row["status"] = status_name(o.status);
    row["range"] = {o.first_n, o.last_n};
    row["checked"] = o.checked;
    row["failures"] = o.failures;
    row["first_failing_n"] = o.first_failing_n ? Json(*o.first_failing_n) : Json(nullptr);
    if (timings) row["wall_ms"] = o.wall_ms;
    j["identities"].push_back(std::move(row));
  }
  return j;
}

VerificationSummary verification_summary_from_json(const Json& j) {
  VerificationSummary s;
  s.exact_limit = j.at("exact_limit").get<std::uint64_t>();
  s.enum_limit = j.at("enum_limit").get<std::uint64_t>();
  for (const auto& row : j.at("identities")) {
    IdentityOutcome o;
    o.name = row.at("name").get<std::string>();
    o.description = row.at("description").get<std::string>();
    o.status = parse_status(row.at("status").get<std::string>());
    o.first_n = row.at("range").at(0).get<std::uint64_t>();
    o.last_n = row.at("range").at(1).get<std::uint64_t>();
    o.checked = row.at("checked").get<std::uint64_t>();
    o.failures = row.at("failures").get<std::uint64_t>();
    if (!row.at("first_failing_n").is_null()) o.first_failing_n = row.at("first_failing_n").get<std::uint64_t>();
    o.wall_ms = row.value("wall_ms", 0.0);
    s.outcomes.push_back(std::move(o));
  }
  return s;
}

std::string render_verification(const VerificationSummary& summary, Format format, bool timings) {
  if (format == Format::json) return dump(to_json(summary, timings));
  std::vector<std::string> header = {"identity", "status", "range", "checked", "failures", "first_failing_n"};
  if (timings) header.push_back("wall_ms");
  Grid grid;
  for (const auto& o : summary.outcomes) {
    std::vector<std::string> row = {o.name,
                                    std::string(status_name(o.status)),
                                    std::to_string(o.first_n) + (format == Format::csv ? "-" : "..") +
                                        std::to_string(o.last_n),
                                    std::to_string(o.checked),
                                    std::to_string(o.failures),
                                    o.first_failing_n ? std::to_string(*o.first_failing_n) : std::string("-")};
    if (timings) row.push_back(real(o.wall_ms));
    grid.push_back(std::move(row));
  }
  auto out = render_grid(header, grid, format);
  if (format == Format::text) out += summary.passed() ? "all identities pass\n" : "FAILED\n";
  return out;
}

std::string render_parity(std::span<const ParityRow> rows, Format format) {
  if (format == Format::json) {
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n},
                   {"gamma_sum", to_decimal(r.gamma_sum)},
                   {"parity", r.parity ? "odd" : "even"},
                   {"agrees", r.agrees()}});
    }
    return dump(j);
  }
  Grid grid;
  for (const auto& r : rows) {
    grid.push_back({std::to_string(r.n), to_decimal(r.gamma_sum), r.parity ? "odd" : "even",
                    r.agrees() ? "agree" : "DISAGREE"});
  }
  return render_grid({"n", "gamma_sum", "parity", "check"}, grid, format);
}

std::string render_decay_chain(const DecayChain& chain) {
  std::string out = chain.source.to_string() + '\n';
  for (const auto& p : chain.products) out += p.to_string() + '\n';
  return out;
}

std::string render_decay_dot(std::uint32_t n) {
  std::string out = "digraph decay_" + std::to_string(n) + " {\n";
  auto quoted = [](const Partition& p) { return "\"" + p.to_string() + "\""; };
  for (const auto& mu : enumerate(n, EnumerationConstraint::nuclear())) {
    if (mu.empty()) continue;
    const auto chain = decay_chain(mu);
    out += "  " + quoted(mu) + (is_ground_state(mu) ? " [shape=box];\n" : ";\n");
    const Partition* previous = &chain.source;
    for (const auto& product : chain.products) {
      out += "  " + quoted(*previous) + " -> " + quoted(product) + ";\n";
      previous = &product;
    }
  }
  return out + "}\n";
}

std::string render_ratio_report(std::span<const RatioRow> rows, Format format) {
  if (format == Format::json) {
    Json j = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["n"] = r.n;
      row["nu_over_p"] = r.nu_over_p;
      row["gamma_over_nu"] = r.gamma_over_nu ? Json(*r.gamma_over_nu) : Json(nullptr);
      row["predicted_nu_over_p"] = r.predicted_nu_over_p ? Json(*r.predicted_nu_over_p) : Json(nullptr);
      row["sqrt_n_nu_over_p"] = r.sqrt_n_nu_over_p;
      row["n_gamma_over_p"] = r.n_gamma_over_p;
      j.push_back(std::move(row));
    }
    return dump(j);
  }
  const std::string missing = format == Format::csv ? "" : "-";
  Grid grid;
  for (const auto& r : rows) {
    grid.push_back({std::to_string(r.n), real(r.nu_over_p), r.gamma_over_nu ? real(*r.gamma_over_nu) : missing,
                    r.predicted_nu_over_p ? real(*r.predicted_nu_over_p) : missing, real(r.sqrt_n_nu_over_p),
                    real(r.n_gamma_over_p)});
  }
  return render_grid(
      {"n", "nu_over_p", "gamma_over_nu", "predicted_nu_over_p", "sqrt_n_nu_over_p", "n_gamma_over_p"}, grid,
      format);
}

std::string render_asymptotic_rows(std::string_view series, std::span<const AsymptoticRow> rows, Format format) {
  if (format == Format::json) {
    Json j;
    j["series"] = series;
    j["rows"] = Json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"n", r.n}, {"exact", to_decimal(r.exact)}, {"estimate", r.estimate}, {"ratio", r.ratio}});
    }
    return dump(j);
  }
  Grid grid;
  for (const auto& r : rows) grid.push_back({std::to_string(r.n), to_decimal(r.exact), real(r.estimate), real(r.ratio)});
  return render_grid({"n", "exact", "estimate", "ratio"}, grid, format);
}

}  // namespace nucleus
