#pragma once

// Persistent CSV cache of a CountTable.
//
// Format (bit-exact): the header line "n,gamma,nu,p", then one row per n from
// 0 upward with decimal integers, LF line endings, no trailing whitespace,
// final newline.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "nucleus/counting.hpp"

namespace nucleus {

class CacheError : public std::runtime_error {
 public:
  /// row is the n of the offending data row; nullopt for the header.
  CacheError(std::optional<std::size_t> row, const std::string& what);
  std::optional<std::size_t> row() const { return row_; }

 private:
  std::optional<std::size_t> row_;
};

void write_cache(std::ostream& out, const CountTable& t);

/// Strict: throws CacheError for the first malformed or inconsistent row.
/// Rows are checked for contiguity, the nu/gamma difference identities
/// against their predecessor, and p against the pentagonal recurrence.
CountTable read_cache(std::istream& in);

struct CachePrefix {
  CountTable table;                 // every row before the first bad one
  std::optional<CacheError> error;  // the first bad row, if any
};

/// Lenient: keeps the longest valid prefix. A file whose header is bad
/// yields the table of limit 0.
CachePrefix read_cache_prefix(std::istream& in);

/// nullopt when the file does not exist.
std::optional<CountTable> load_cache(const std::filesystem::path& path);
CachePrefix load_cache_prefix(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory, then renames.
void store_cache(const std::filesystem::path& path, const CountTable& t);

/// Loads (strictly) from path if present, extends to limit, and stores the
/// result back when it grew. Throws CacheError on a corrupt file.
CountTable load_or_build(const std::filesystem::path& path, std::size_t limit);

}  // namespace nucleus
