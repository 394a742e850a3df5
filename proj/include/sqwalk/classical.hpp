// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

namespace sqw {

enum class SearchVariant { Blind, Memory };

/// Unstructured classical search over N elements, v of which are marked.
struct ClassicalSearchSpec {
  int n = 0;
  int v = 0;
  SearchVariant variant = SearchVariant::Blind;
};

/// P_k = (1-P)^{k-1} P with P = v/N.
double blind_pmf(const ClassicalSearchSpec& spec, std::int64_t k);
double blind_average(const ClassicalSearchSpec& spec);

/// Sampling without replacement; P_k = 0 for k > N-v+1.
double memory_pmf(const ClassicalSearchSpec& spec, std::int64_t k);
double memory_average(const ClassicalSearchSpec& spec);

struct MonteCarloResult {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::uint64_t seed = 0;
};

MonteCarloResult monte_carlo_average(const ClassicalSearchSpec& spec,
                                     std::int64_t trials, std::uint64_t seed);

}  // namespace sqw
