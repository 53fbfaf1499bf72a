// SPDX-License-Identifier: Apache-2.0
#include "wallis/number_sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace wallis {

namespace {

// Akiyama-Tanigawa: after processing row m, row_[0] holds the Bernoulli
// number of index m (in the B_1 = +1/2 convention; the sign is dropped
// anyway since only |B_{2k}| is exposed).
class BernoulliGenerator {
 public:
  BigRational positive(std::size_t k) {
    std::lock_guard lock(mu_);
    while (values_.size() <= k) step_to(2 * values_.size());
    return values_[k];
  }

 private:
  void step_to(std::size_t m_target) {
    while (next_m_ <= m_target) {
      const auto m = static_cast<unsigned long>(next_m_);
      row_.emplace_back(1, m + 1);
      for (std::size_t j = m; j >= 1; --j)
        row_[j - 1] = BigRational(static_cast<unsigned long>(j)) * (row_[j - 1] - row_[j]);
      if (m >= 2 && m % 2 == 0) {
        BigRational b = row_[0];
        if (b < 0) b = -b;
        values_.push_back(b);
      }
      ++next_m_;
    }
  }

  std::mutex mu_;
  std::vector<BigRational> row_;
  std::vector<BigRational> values_{BigRational(1)};  // unused slot for k = 0
  std::size_t next_m_ = 0;
};

// Seidel triangle (boustrophedon transform of 1,0,0,...):
//   T(n,0) = [n == 0],  T(n,k) = T(n,k-1) + T(n-1,n-k)
// The diagonal T(n,n) is the zigzag sequence 1,1,1,2,5,16,61,...;
// its even-index entries are the secant integers.
class EulerGenerator {
 public:
  BigInt positive(std::size_t k) {
    std::lock_guard lock(mu_);
    while (zigzag_.size() <= 2 * k) grow();
    return zigzag_[2 * k];
  }

 private:
  void grow() {
    const std::size_t n = zigzag_.size();
    std::vector<BigInt> next(n + 1);
    next[0] = 0;
    for (std::size_t j = 1; j <= n; ++j) next[j] = next[j - 1] + row_[n - j];
    zigzag_.push_back(next[n]);
    row_ = std::move(next);
  }

  std::mutex mu_;
  std::vector<BigInt> row_{BigInt(1)};
  std::vector<BigInt> zigzag_{BigInt(1)};
};

}  // namespace

BigRational bernoulli_positive(std::size_t k) {
  if (k == 0) throw std::invalid_argument("bernoulli_positive: index must be >= 1");
  static BernoulliGenerator gen;
  return gen.positive(k);
}

BigInt euler_positive(std::size_t k) {
  if (k == 0) throw std::invalid_argument("euler_positive: index must be >= 1");
  static EulerGenerator gen;
  return gen.positive(k);
}

}  // namespace wallis
