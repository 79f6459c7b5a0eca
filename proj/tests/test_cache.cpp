#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "nucleus/cache.hpp"
#include "temp_dir.hpp"

using namespace nucleus;

namespace {

std::string serialized(const CountTable& t) {
  std::ostringstream out;
  write_cache(out, t);
  return out.str();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

// Replace field `column` (0 = n) of the row for n with `value`.
std::string edit_row(std::string text, std::size_t n, int column, const std::string& value) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  std::getline(in, line);
  out << line << '\n';
  for (std::size_t row = 0; std::getline(in, line); ++row) {
    if (row == n) {
      std::vector<std::string> fields;
      std::stringstream ss(line);
      for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
      fields[column] = value;
      line = fields[0] + "," + fields[1] + "," + fields[2] + "," + fields[3];
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("format is header plus LF rows") {
  const auto text = serialized(CountTable(4));
  CHECK(text == "n,gamma,nu,p\n0,0,1,1\n1,0,0,1\n2,0,1,2\n3,0,1,3\n4,1,2,5\n");
}

TEST_CASE("round trip is byte-identical") {
  testing_support::TempDir dir;
  const auto path = dir.path() / "table.csv";
  const CountTable t(100);
  store_cache(path, t);
  const auto first = slurp(path);
  const auto loaded = load_cache(path);
  REQUIRE(loaded);
  CHECK(*loaded == t);
  store_cache(path, *loaded);
  CHECK(slurp(path) == first);
  CHECK(first.find('\r') == std::string::npos);
  CHECK(first.find(" \n") == std::string::npos);

  SUBCASE("values beyond 64 bits survive") {
    const CountTable big(600);
    store_cache(path, big);
    CHECK(*load_cache(path) == big);
  }
}

TEST_CASE("resume from 100 to 200 equals a fresh build") {
  testing_support::TempDir dir;
  const auto path = dir.path() / "table.csv";
  store_cache(path, CountTable(100));
  const auto resumed = load_or_build(path, 200);
  CHECK(resumed == CountTable(200));
  CHECK(*load_cache(path) == CountTable(200));
  CHECK(slurp(path) == serialized(CountTable(200)));
  // A smaller request leaves the file alone.
  CHECK(load_or_build(path, 50).limit() == 200);
}

TEST_CASE("missing file gives a fresh table") {
  testing_support::TempDir dir;
  const auto path = dir.path() / "absent.csv";
  CHECK_FALSE(load_cache(path));
  CHECK(load_or_build(path, 30) == CountTable(30));
  CHECK(std::filesystem::exists(path));
}

TEST_CASE("a hand-edited p value is rejected at its row") {
  const auto good = serialized(CountTable(100));
  const auto p50 = to_decimal(CountTable(100).p(50));
  const auto bad = edit_row(good, 50, 3, to_decimal(parse_decimal(p50) + 1));
  std::istringstream in(bad);
  try {
    read_cache(in);
    FAIL("corrupt cache accepted");
  } catch (const CacheError& e) {
    REQUIRE(e.row());
    CHECK(*e.row() == 50);
  }

  std::istringstream again(bad);
  const auto prefix = read_cache_prefix(again);
  CHECK(prefix.table == CountTable(49));
  REQUIRE(prefix.error);
  CHECK(prefix.error->row() == 50);
}

TEST_CASE("every single-field corruption is caught at its row") {
  const CountTable original(60);
  const auto good = serialized(original);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 61;
    const int column = 1 + static_cast<int>(rng() % 3);
    const BigInt current = column == 1 ? original.gamma(n) : column == 2 ? original.nu(n) : original.p(n);
    const auto bad = edit_row(good, n, column, to_decimal(current + 1 + rng() % 5));
    std::istringstream in(bad);
    CAPTURE(n);
    CAPTURE(column);
    CHECK_THROWS_AS(read_cache(in), CacheError);
    std::istringstream again(bad);
    const auto prefix = read_cache_prefix(again);
    REQUIRE(prefix.error);
    CHECK(prefix.error->row() == n);
  }
}

TEST_CASE("structural corruption") {
  auto rejects = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_cache(in), CacheError);
  };
  rejects("");
  rejects("n,p,nu,gamma\n0,0,1,1\n");
  rejects("n,gamma,nu,p\n");
  rejects("n,gamma,nu,p\n0,0,1,1\n2,0,1,2\n");
  rejects("n,gamma,nu,p\n0,0,1,1\n1,0,0\n");
  rejects("n,gamma,nu,p\n0,0,1,1\n1,0,0,x\n");
  rejects("n,gamma,nu,p\n0,0,1,1\n1,0,0,1 \n");
  rejects("n,gamma,nu,p\n1,0,0,1\n");
}

TEST_CASE("CRLF files are rejected rather than silently normalized") {
  std::istringstream in("n,gamma,nu,p\r\n0,0,1,1\r\n1,0,0,1\r\n");
  CHECK_THROWS_AS(read_cache(in), CacheError);
}

TEST_CASE("a corrupt file is not overwritten by load_or_build") {
  testing_support::TempDir dir;
  const auto path = dir.path() / "table.csv";
  const auto bad = edit_row(serialized(CountTable(80)), 50, 3, "1");
  spit(path, bad);
  CHECK_THROWS_AS(load_or_build(path, 100), CacheError);
  CHECK(slurp(path) == bad);
}
