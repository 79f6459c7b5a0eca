#include "nucleus/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace nucleus {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

void require_nuclear(const Partition& mu, const char* op) {
  if (mu.empty()) throw std::invalid_argument(std::string(op) + ": empty partition");
  if (!is_nuclear(mu)) {
    throw std::invalid_argument(std::string(op) + ": " + mu.to_string() + " is not nuclear (has a part equal to 1)");
  }
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && ((text.front() == '[' && text.back() == ']') || (text.front() == '(' && text.back() == ')'))) {
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Part> parts;
  if (text.empty()) return Partition(parts);
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    Part value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed partition literal: bad part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

Part Partition::largest() const {
  if (parts_.empty()) throw std::out_of_range("empty partition has no largest part");
  return parts_.front();
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

void EnumerationConstraint::validate() const {
  if (min_part == 0) throw std::invalid_argument("min_part must be positive");
  if (max_part && *max_part == 0) throw std::invalid_argument("max_part must be positive");
  if (forbidden_part && *forbidden_part == 0) throw std::invalid_argument("forbidden_part must be positive");
  if (max_part && min_part > *max_part) throw std::invalid_argument("min_part exceeds max_part");
}

bool EnumerationConstraint::allows(Part part) const {
  return part >= min_part && (!max_part || part <= *max_part) && (!forbidden_part || part != *forbidden_part);
}

bool EnumerationConstraint::admits(const Partition& p) const {
  return std::all_of(p.parts().begin(), p.parts().end(), [this](Part x) { return allows(x); });
}

PartitionStream::PartitionStream(std::uint32_t n, EnumerationConstraint constraint)
    : n_(n), constraint_(constraint) {
  constraint_.validate();
  if (n_ == 0) {
    valid_ = true;
    return;
  }
  current_.parts_.reserve(n_ / constraint_.min_part + 1);
  valid_ = fill(n_, n_);
  current_.size_ = valid_ ? n_ : 0;
}

Part PartitionStream::hi_for(Part cap) const {
  return constraint_.max_part ? std::min(cap, *constraint_.max_part) : cap;
}

bool PartitionStream::representable(std::uint64_t remaining, Part cap) {
  if (remaining == 0) return true;
  Part lo = constraint_.min_part;
  Part hi = hi_for(cap);
  if (constraint_.forbidden_part) {
    const Part k = *constraint_.forbidden_part;
    if (k == lo) {
      ++lo;
    } else if (k == hi) {
      --hi;
    } else if (k > lo && k < hi) {
      auto [it, inserted] = reachable_.try_emplace(hi);
      auto& reach = it->second;
      if (inserted) {
        reach.assign(n_ + 1, false);
        reach[0] = true;
        for (Part part = lo; part <= hi; ++part) {
          if (part == k) continue;
          for (std::size_t r = part; r <= n_; ++r) {
            if (reach[r - part]) reach[r] = true;
          }
        }
      }
      return remaining <= n_ && reach[remaining];
    }
  }
  if (hi < lo || hi == 0) return false;
  // Some number q of parts from [lo, hi] sums to remaining iff the fewest
  // possible parts, ceil(remaining / hi), are not already too large.
  const std::uint64_t fewest = (remaining + hi - 1) / hi;
  return fewest * lo <= remaining;
}

bool PartitionStream::fill(std::uint64_t remaining, Part cap) {
  auto& parts = current_.parts_;
  while (remaining > 0) {
    std::int64_t w = std::min<std::uint64_t>(hi_for(cap), remaining);
    for (; w >= static_cast<std::int64_t>(constraint_.min_part); --w) {
      const auto part = static_cast<Part>(w);
      if (constraint_.allows(part) && representable(remaining - part, part)) break;
    }
    if (w < static_cast<std::int64_t>(constraint_.min_part)) return false;
    parts.push_back(static_cast<Part>(w));
    remaining -= static_cast<Part>(w);
    cap = static_cast<Part>(w);
  }
  return true;
}

bool PartitionStream::advance() {
  if (!valid_) return false;
  auto& parts = current_.parts_;
  std::uint64_t remaining = 0;
  while (!parts.empty()) {
    const Part v = parts.back();
    parts.pop_back();
    remaining += v;
    for (std::int64_t w = static_cast<std::int64_t>(v) - 1; w >= static_cast<std::int64_t>(constraint_.min_part); --w) {
      const auto part = static_cast<Part>(w);
      if (!constraint_.allows(part) || !representable(remaining - part, part)) continue;
      parts.push_back(part);
      fill(remaining - part, part);
      return true;
    }
  }
  valid_ = false;
  current_.size_ = 0;
  return false;
}

PartitionStream enumerate(std::uint32_t n, EnumerationConstraint constraint) {
  return PartitionStream(n, constraint);
}

std::vector<Partition> collect(std::uint32_t n, EnumerationConstraint constraint) {
  std::vector<Partition> out;
  auto stream = enumerate(n, constraint);
  for (const auto& p : stream) out.push_back(p);
  return out;
}

std::uint64_t count(std::uint32_t n, EnumerationConstraint constraint) {
  std::uint64_t total = 0;
  for (auto stream = enumerate(n, constraint); stream.valid(); stream.advance()) ++total;
  return total;
}

bool is_nuclear(const Partition& p) { return p.empty() || p.parts().back() != 1; }

bool is_ground_state(const Partition& p) {
  return p.num_parts() >= 2 && is_nuclear(p) && p[0] == p[1];
}

std::size_t multiplicity(const Partition& p, Part k) {
  return static_cast<std::size_t>(std::count(p.parts().begin(), p.parts().end(), k));
}

Partition fuse(const Partition& lambda) {
  if (is_nuclear(lambda)) {
    throw std::invalid_argument("fuse: " + lambda.to_string() + " is nuclear; fuse needs at least one part equal to 1");
  }
  const auto ones = multiplicity(lambda, 1);
  std::vector<Part> parts(lambda.parts().begin(), lambda.parts().end() - static_cast<std::ptrdiff_t>(ones));
  if (parts.empty()) return Partition({static_cast<Part>(ones)});
  parts.front() += static_cast<Part>(ones);
  return Partition(std::move(parts));
}

Part decay_capacity(const Partition& mu) {
  require_nuclear(mu, "decay_capacity");
  if (mu.num_parts() == 1) return mu[0] - 1;
  return mu[0] - mu[1];
}

Partition decay_step(const Partition& mu, Part j) {
  const Part capacity = decay_capacity(mu);
  if (j == 0 || j > capacity) {
    throw std::invalid_argument("decay_step: j=" + std::to_string(j) + " outside 1.." + std::to_string(capacity) +
                                " for " + mu.to_string());
  }
  std::vector<Part> parts(mu.parts().begin(), mu.parts().end());
  parts.front() -= j;
  parts.insert(parts.end(), j, Part{1});
  return Partition(std::move(parts));
}

DecayChain decay_chain(const Partition& mu) {
  DecayChain chain{mu, {}};
  const Part capacity = decay_capacity(mu);
  chain.products.reserve(capacity);
  for (Part j = 1; j <= capacity; ++j) chain.products.push_back(decay_step(mu, j));
  return chain;
}

}  // namespace nucleus
