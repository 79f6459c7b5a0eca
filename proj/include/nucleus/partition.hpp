#pragma once

// Integer partitions as explicit weakly decreasing part lists, constrained
// lazy enumeration, and the fusion/decay maps between nuclear (no part equal
// to 1) and non-nuclear partitions.

#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nucleus {

using Part = std::uint32_t;

class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  /// Accepts "5,2", "[5,2]" or "(5,2)"; "", "[]" and "()" give the empty
  /// partition. Parts must already be weakly decreasing.
  static Partition parse(std::string_view text);

  std::span<const Part> parts() const { return parts_; }
  std::size_t num_parts() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Sum of the parts (the n in "partition of n").
  std::uint64_t size() const { return size_; }

  Part largest() const;
  /// Second part, or 0 for partitions with fewer than two parts.
  Part second() const { return parts_.size() >= 2 ? parts_[1] : 0; }

  Part operator[](std::size_t i) const { return parts_[i]; }

  /// "(5,2)"; the empty partition renders as "()".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  friend class PartitionStream;

  std::vector<Part> parts_;
  std::uint64_t size_ = 0;
};

struct EnumerationConstraint {
  Part min_part = 1;
  std::optional<Part> max_part;
  std::optional<Part> forbidden_part;

  static EnumerationConstraint unconstrained() { return {}; }
  static EnumerationConstraint nuclear() { return {2, std::nullopt, std::nullopt}; }
  static EnumerationConstraint nuclear_bounded(Part max) { return {2, max, std::nullopt}; }
  static EnumerationConstraint avoiding(Part k) { return {1, std::nullopt, k}; }

  /// Throws std::invalid_argument for min_part == 0, max_part == 0,
  /// forbidden_part == 0 or min_part > max_part.
  void validate() const;
  bool allows(Part part) const;
  bool admits(const Partition& p) const;
};

/// Lazy single-consumer stream over the partitions of n that satisfy a
/// constraint, in reverse-lexicographic order of part sequences (so (n) comes
/// first when it is allowed). Memory is proportional to the longest partition
/// yielded. An interior forbidden part additionally keeps a memoized
/// representability table of size O(n) per distinct cap encountered.
class PartitionStream {
 public:
  PartitionStream(std::uint32_t n, EnumerationConstraint constraint);

  /// True while current() refers to a valid partition.
  bool valid() const { return valid_; }
  const Partition& current() const { return current_; }
  /// Moves to the next partition; returns valid().
  bool advance();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(PartitionStream* stream) : stream_(stream) {}
    reference operator*() const { return stream_->current(); }
    pointer operator->() const { return &stream_->current(); }
    iterator& operator++() {
      stream_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.stream_ == nullptr || !it.stream_->valid();
    }

   private:
    PartitionStream* stream_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  Part hi_for(Part cap) const;
  bool representable(std::uint64_t remaining, Part cap);
  bool fill(std::uint64_t remaining, Part cap);

  std::uint32_t n_;
  EnumerationConstraint constraint_;
  Partition current_;
  bool valid_ = false;
  std::map<Part, std::vector<bool>> reachable_;
};

PartitionStream enumerate(std::uint32_t n, EnumerationConstraint constraint = {});

/// Materializes a stream; intended for small n.
std::vector<Partition> collect(std::uint32_t n, EnumerationConstraint constraint = {});

/// Number of partitions a stream yields, without materializing them.
std::uint64_t count(std::uint32_t n, EnumerationConstraint constraint = {});

/// No part equal to 1. The empty partition is nuclear.
bool is_nuclear(const Partition& p);

/// Nuclear with at least two parts and the two largest equal.
bool is_ground_state(const Partition& p);

std::size_t multiplicity(const Partition& p, Part k);

/// Deletes every 1 and adds their count to the largest remaining part (or
/// yields (n) when the input is all 1's). Throws std::invalid_argument on
/// nuclear input.
Partition fuse(const Partition& lambda);

/// mu_1 - mu_2 for partitions with at least two parts, n - 1 for (n).
/// Throws std::invalid_argument on empty or non-nuclear input.
Part decay_capacity(const Partition& mu);

/// Lowers the largest part by j and appends j parts equal to 1.
/// Requires 1 <= j <= decay_capacity(mu); throws std::invalid_argument
/// otherwise.
Partition decay_step(const Partition& mu, Part j);

struct DecayChain {
  Partition source;
  /// decay_step(source, j) for j = 1..decay_capacity(source).
  std::vector<Partition> products;
};

DecayChain decay_chain(const Partition& mu);

}  // namespace nucleus
