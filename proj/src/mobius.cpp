#include "riesz/mobius.hpp"

#include <string>

#include "riesz/errors.hpp"

namespace riesz {

MobiusTable::MobiusTable(std::uint32_t limit) : limit_(limit) {
  if (limit == 0) {
    throw InvalidArgument("mobius_sieve: limit must be >= 1");
  }
  values_.assign(static_cast<std::size_t>(limit) + 1, 0);
  values_[1] = 1;

  // Linear sieve: each composite is crossed out exactly once, by its
  // smallest prime factor.
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      values_[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t m = static_cast<std::uint64_t>(i) * p;
      if (m > limit) break;
      composite[m] = true;
      if (i % p == 0) {
        values_[m] = 0;
        break;
      }
      values_[m] = static_cast<std::int8_t>(-values_[i]);
    }
  }
}

int MobiusTable::at(std::uint32_t n) const {
  if (n == 0 || n > limit_) {
    throw InvalidArgument("mobius index " + std::to_string(n) + " outside [1, " +
                          std::to_string(limit_) + "]");
  }
  return values_[n];
}

long MobiusTable::mertens(std::uint32_t x) const {
  if (x > limit_) {
    throw InvalidArgument("mertens argument exceeds table limit");
  }
  long sum = 0;
  for (std::uint32_t n = 1; n <= x; ++n) sum += values_[n];
  return sum;
}

MobiusTable mobius_sieve(std::uint32_t limit) { return MobiusTable(limit); }

}  // namespace riesz
