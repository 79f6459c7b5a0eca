#include "nucleus/cache.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace nucleus {

namespace {

constexpr std::string_view kHeader = "n,gamma,nu,p";

struct Row {
  std::size_t n;
  BigInt gamma;
  BigInt nu;
  BigInt p;
};

Row parse_row(const std::string& line, std::size_t expected_n) {
  auto fail = [&](const std::string& why) -> CacheError { return CacheError(expected_n, why); };
  std::vector<std::string_view> fields;
  std::string_view rest(line);
  while (true) {
    const auto comma = rest.find(',');
    fields.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (fields.size() != 4) throw fail("expected 4 fields, found " + std::to_string(fields.size()));
  Row row{};
  try {
    const BigInt n = parse_decimal(fields[0]);
    if (n != expected_n) throw fail("rows must be contiguous from 0; found n=" + to_decimal(n));
    row.n = expected_n;
    row.gamma = parse_decimal(fields[1]);
    row.nu = parse_decimal(fields[2]);
    row.p = parse_decimal(fields[3]);
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  return row;
}

void check_row(const Row& row, const std::vector<BigInt>& p, const std::vector<BigInt>& nu) {
  const std::size_t n = row.n;
  auto fail = [&](const std::string& why) { throw CacheError(n, why); };
  if (n == 0) {
    if (row.p != 1 || row.nu != 1 || row.gamma != 0) fail("row 0 must be 0,0,1,1");
    return;
  }
  if (row.nu != row.p - p[n - 1]) fail("nu(" + std::to_string(n) + ") != p(n) - p(n-1)");
  const BigInt gamma = n >= 3 ? BigInt(row.nu - nu[n - 1]) : BigInt(0);
  if (row.gamma != gamma) fail("gamma(" + std::to_string(n) + ") does not match the nu differences");
  const BigInt expected = pentagonal_value(p, n);
  if (row.p != expected) fail("p(" + std::to_string(n) + ") disagrees with the pentagonal recurrence");
}

CachePrefix read_impl(std::istream& in) {
  CachePrefix result{CountTable(0), std::nullopt};
  std::string line;
  if (!std::getline(in, line)) {
    result.error = CacheError(std::nullopt, "empty cache file");
    return result;
  }
  if (line != kHeader) {
    result.error = CacheError(std::nullopt, "bad header '" + line + "', expected '" + std::string(kHeader) + "'");
    return result;
  }
  std::vector<BigInt> p;
  std::vector<BigInt> nu;
  try {
    while (std::getline(in, line)) {
      const auto row = parse_row(line, p.size());
      check_row(row, p, nu);
      p.push_back(row.p);
      nu.push_back(row.nu);
    }
    if (p.empty()) throw CacheError(0, "cache has a header but no rows");
  } catch (const CacheError& e) {
    result.error = e;
  }
  if (!p.empty()) result.table = CountTable::from_p_values(std::move(p));
  return result;
}

}  // namespace

CacheError::CacheError(std::optional<std::size_t> row, const std::string& what)
    : std::runtime_error(row ? "cache row " + std::to_string(*row) + ": " + what : "cache header: " + what),
      row_(row) {}

void write_cache(std::ostream& out, const CountTable& t) {
  out << kHeader << '\n';
  for (std::size_t n = 0; n <= t.limit(); ++n) {
    out << n << ',' << to_decimal(t.gamma(n)) << ',' << to_decimal(t.nu(n)) << ',' << to_decimal(t.p(n)) << '\n';
  }
}

CountTable read_cache(std::istream& in) {
  auto result = read_impl(in);
  if (result.error) throw *result.error;
  return std::move(result.table);
}

CachePrefix read_cache_prefix(std::istream& in) { return read_impl(in); }

std::optional<CountTable> load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return read_cache(in);
}

CachePrefix load_cache_prefix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {CountTable(0), CacheError(std::nullopt, "cannot open " + path.string())};
  return read_cache_prefix(in);
}

void store_cache(const std::filesystem::path& path, const CountTable& t) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache " + tmp.string());
    write_cache(out, t);
    if (!out.flush()) throw std::runtime_error("cannot write cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CountTable load_or_build(const std::filesystem::path& path, std::size_t limit) {
  auto loaded = load_cache(path);
  CountTable table = loaded ? std::move(*loaded) : CountTable(0);
  const bool grew = !loaded || table.limit() < limit;
  table.extend_to(limit);
  if (grew) store_cache(path, table);
  return table;
}

}  // namespace nucleus
