// SPDX-License-Identifier: Apache-2.0
#include "wallis/wallis_table.hpp"

namespace wallis {

BigInt double_factorial(std::size_t n) {
  BigInt p = 1;
  for (std::size_t i = n; i >= 2; i -= 2) {
    p *= static_cast<unsigned long>(i);
    if (i == 2 || i == 3) break;
  }
  return p;
}

WallisTable& WallisTable::instance() {
  static WallisTable table;
  return table;
}

WallisTable::WallisTable() {
  odd_.emplace_back(1);
  even_.emplace_back(1);
}

void WallisTable::grow(std::size_t n) {
  while (odd_.size() <= n) {
    const auto k = static_cast<unsigned long>(odd_.size());
    odd_.push_back(odd_.back() * BigRational(2 * k, 2 * k + 1));
    even_.push_back(even_.back() * BigRational(2 * k - 1, 2 * k));
  }
}

BigRational WallisTable::odd(std::size_t n) {
  std::lock_guard lock(mu_);
  grow(n);
  return odd_[n];
}

BigRational WallisTable::even(std::size_t n) {
  std::lock_guard lock(mu_);
  grow(n);
  return even_[n];
}

BigRational wallis_odd_ratio(std::size_t n) { return WallisTable::instance().odd(n); }

BigRational wallis_even_ratio(std::size_t n) { return WallisTable::instance().even(n); }

}  // namespace wallis
