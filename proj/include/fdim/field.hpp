// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdim/error.hpp"

namespace fdalg {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

/// Arithmetic in GF(p) for an odd prime p < 2^31.
class PrimeField {
 public:
  static constexpr Scalar kDefaultPrime = 32003;

  PrimeField() : PrimeField(kDefaultPrime) {}
  explicit PrimeField(Scalar p) : p_(p) {
    require(p >= 3 && p < (1u << 31) && is_prime(p), ErrorKind::InvalidArgument,
            "characteristic must be an odd prime below 2^31, got " + std::to_string(p));
  }

  Scalar p() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1, b = a % p_;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<Scalar>(r);
  }
  Scalar inv(Scalar a) const {
    require(a % p_ != 0, ErrorKind::InvalidArgument, "inverse of zero");
    return pow(a, p_ - 2);
  }
  /// Reduce a signed integer into [0, p).
  Scalar from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
  }
  /// Symmetric representative in (-p/2, p/2], used for printing.
  long long to_signed(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }

  bool operator==(const PrimeField&) const = default;

  static bool is_prime(Scalar n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  Scalar p_;
};

inline bool is_zero(const Vec& v) {
  for (Scalar x : v)
    if (x) return false;
  return true;
}

}  // namespace fdalg
