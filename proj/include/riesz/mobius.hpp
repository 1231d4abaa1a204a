#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace riesz {

/// Immutable table of the Moebius function mu(n) for 1 <= n <= limit.
class MobiusTable {
 public:
  /// Linear sieve. Throws InvalidArgument for limit == 0.
  explicit MobiusTable(std::uint32_t limit);

  [[nodiscard]] std::uint32_t limit() const { return limit_; }

  /// mu(n) for 1 <= n <= limit(); unchecked.
  [[nodiscard]] int operator[](std::uint32_t n) const { return values_[n]; }
  /// Bounds-checked mu(n).
  [[nodiscard]] int at(std::uint32_t n) const;

  /// Entries 1..limit (index 0 is unused and holds 0).
  [[nodiscard]] std::span<const std::int8_t> values() const { return values_; }

  /// Mertens function M(x) = sum_{n <= x} mu(n), x <= limit().
  [[nodiscard]] long mertens(std::uint32_t x) const;

 private:
  std::uint32_t limit_;
  std::vector<std::int8_t> values_;
};

MobiusTable mobius_sieve(std::uint32_t limit);

}  // namespace riesz
