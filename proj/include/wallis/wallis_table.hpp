// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wallis/rational.hpp"

#include <cstddef>
#include <mutex>
#include <vector>

namespace wallis {

/// n!! = n(n-2)(n-4)...; the empty product (n == 0) is 1.
BigInt double_factorial(std::size_t n);

/// Cache of the closed-form ratios of the power integrals of sin (or cos)
/// over [0, pi/2]:
///
///   odd(n)  = (2n)!!   / (2n+1)!!   the full value of the odd-power integral
///   even(n) = (2n-1)!! / (2n)!!     the rational factor, the caller owns pi/2
///
/// Entries are extended by the one-step recurrences
///   odd(n)  = odd(n-1)  * 2n/(2n+1)
///   even(n) = even(n-1) * (2n-1)/(2n)
/// so a lookup is O(1) amortized and values stay canonical. Growth is
/// serialized internally; lookups may come from any thread.
class WallisTable {
 public:
  static WallisTable& instance();

  BigRational odd(std::size_t n);
  BigRational even(std::size_t n);

 private:
  WallisTable();
  void grow(std::size_t n);

  mutable std::mutex mu_;
  std::vector<BigRational> odd_;
  std::vector<BigRational> even_;
};

/// (2n)!! / (2n+1)!!, the odd-power integral, exactly. odd(0) = 1.
BigRational wallis_odd_ratio(std::size_t n);

/// (2n-1)!! / (2n)!!, the even-power integral divided by pi/2. even(0) = 1.
BigRational wallis_even_ratio(std::size_t n);

}  // namespace wallis
