#pragma once

#include <string>

#include "stabrange/errors.hpp"

namespace stabrange {

// Enumeration caps. Every capped entry point takes an override flag
// (surfaced as --override-caps on the CLI); the caps below are what the
// acceptance and verification suites need, with headroom.

inline constexpr int kSytCap = 12;         // |mu| for tableau enumeration
inline constexpr int kOracleCapN = 8;      // symmetric group degree for characters
inline constexpr int kSeriesCap = 12;      // truncation order for S^(j), C^(j)
inline constexpr int kOrbitCap = 12;       // |J| and n for orbit counting
inline constexpr int kCoinvCapN = 5;       // linear-algebra oracle: slots
inline constexpr int kCoinvCapB = 2;       // linear-algebra oracle: basis size
inline constexpr int kCoinvCapJ = 6;       // linear-algebra oracle: total degree

inline void check_cap(long value, long cap, bool override_caps, errc code,
                      const std::string& what) {
  if (override_caps) return;
  if (value > cap)
    fail(code, what + " = " + std::to_string(value) + " exceeds cap " +
                   std::to_string(cap) + " (pass override to lift)");
}

}  // namespace stabrange
