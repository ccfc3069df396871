#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hrmc/bigint.hpp"

namespace hrmc {

/// Codeword counts by rank, (c_0, ..., c_t).
struct WeightDistribution {
  std::vector<BigInt> counts;

  std::size_t t() const { return counts.empty() ? 0 : counts.size() - 1; }
  BigInt total() const {
    BigInt s = 0;
    for (const auto& c : counts) s += c;
    return s;
  }
  const BigInt& operator[](std::size_t i) const { return counts[i]; }

  /// Smallest nonzero rank with a nonzero count.
  std::optional<std::size_t> min_distance() const {
    for (std::size_t i = 1; i < counts.size(); ++i)
      if (counts[i] != 0) return i;
    return std::nullopt;
  }
  /// Largest rank with a nonzero count (the diameter of a linear code).
  std::size_t diameter() const {
    for (std::size_t i = counts.size(); i-- > 0;)
      if (counts[i] != 0) return i;
    return 0;
  }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

inline WeightDistribution make_distribution(std::initializer_list<long long> values) {
  WeightDistribution w;
  for (auto v : values) w.counts.emplace_back(v);
  return w;
}

}  // namespace hrmc
