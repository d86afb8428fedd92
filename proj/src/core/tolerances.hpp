#pragma once

// Default numeric tolerances. Operations that depend on a tolerance take it
// as a defaulted parameter so callers can tighten or loosen per use.
namespace anglespec::tol {

inline constexpr double det = 1e-9;          // |det - 1| slack on elements
inline constexpr double cls = 1e-9;          // trace band for classification
inline constexpr double num = 1e-12;         // crossing / generic numeric margin
inline constexpr double dedup = 1e-7;        // projective matrix identification
inline constexpr double trace_match = 1e-7;  // conjugacy candidate trace gate
inline constexpr double merge = 1e-6;        // hyperbolic distance point merge
inline constexpr double word_drift = 1e-8;   // per-letter word evaluation drift

}  // namespace anglespec::tol
