// SPDX-License-Identifier: Apache-2.0
#include "sqwalk/classical.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace sqw {

namespace {
void check(const ClassicalSearchSpec& spec) {
  if (spec.n < 1 || spec.v < 1 || spec.v > spec.n)
    throw std::invalid_argument("classical search: need 1 <= v <= N");
}
}  // namespace

double blind_pmf(const ClassicalSearchSpec& spec, std::int64_t k) {
  check(spec);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const double p = double(spec.v) / spec.n;
  return std::pow(1.0 - p, double(k - 1)) * p;
}

double blind_average(const ClassicalSearchSpec& spec) {
  check(spec);
  return double(spec.n) / spec.v;
}

double memory_pmf(const ClassicalSearchSpec& spec, std::int64_t k) {
  check(spec);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > spec.n - spec.v + 1) return 0.0;
  // Running product of (k-1) miss probabilities, then one hit; stays in
  // range for N up to ~1e4 where factorial forms would overflow.
  double p = 1.0;
  for (std::int64_t i = 0; i < k - 1; ++i)
    p *= double(spec.n - spec.v - i) / double(spec.n - i);
  return p * double(spec.v) / double(spec.n - k + 1);
}

double memory_average(const ClassicalSearchSpec& spec) {
  check(spec);
  return double(spec.n + 1) / (spec.v + 1);
}

MonteCarloResult monte_carlo_average(const ClassicalSearchSpec& spec,
                                     std::int64_t trials, std::uint64_t seed) {
  check(spec);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double sum = 0.0, sumsq = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::int64_t steps = 0;
    if (spec.variant == SearchVariant::Blind) {
      const double p = double(spec.v) / spec.n;
      do {
        ++steps;
      } while (unit(rng) >= p);
    } else {
      std::int64_t remaining = spec.n;
      for (;;) {
        ++steps;
        if (unit(rng) < double(spec.v) / double(remaining)) break;
        --remaining;  // the miss is removed from the pool
      }
    }
    sum += double(steps);
    sumsq += double(steps) * double(steps);
  }
  MonteCarloResult res;
  res.seed = seed;
  res.mean = sum / double(trials);
  if (trials > 1) {
    const double var =
        (sumsq - sum * sum / double(trials)) / double(trials - 1);
    res.stderr_ = std::sqrt(std::max(0.0, var) / double(trials));
  }
  return res;
}

}  // namespace sqw
