// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace sqw::tol {

// All numerical tolerances used by the library live here.
inline constexpr double kUnitarity = 1e-12;   // entrywise ||U^dag U - 1||
inline constexpr double kNorm = 1e-10;        // state normalization drift
inline constexpr double kCollapse = 1e-10;    // full-space vs collapsed agreement
inline constexpr double kCircuit = 1e-12;     // circuit vs walk, per amplitude
inline constexpr double kProjection = 1e-8;   // residual threshold for fast traces
inline constexpr double kAmplitudeZero = 1e-15;

// Largest Hilbert-space dimension for which a dense step matrix may be built.
inline constexpr std::size_t kDenseCap = 20000;

// Largest Hilbert-space dimension for which collapsed basis vectors are
// materialized as explicit edge lists.
inline constexpr std::size_t kMaterializeCap = 1000000;

}  // namespace sqw::tol
