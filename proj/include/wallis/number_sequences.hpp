// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wallis/rational.hpp"

#include <cstddef>

namespace wallis {

/// |B_{2k}| for k >= 1: the positive even-index Bernoulli values
/// 1/6, 1/30, 1/42, 1/30, 5/66, ... Generated by the Akiyama-Tanigawa
/// scheme and cached; lookups are thread-safe.
BigRational bernoulli_positive(std::size_t k);

/// |E_{2k}| for k >= 1: the positive secant-series integers 1, 5, 61,
/// 1385, ... Generated by the Seidel (boustrophedon) triangle and cached;
/// lookups are thread-safe.
BigInt euler_positive(std::size_t k);

}  // namespace wallis
