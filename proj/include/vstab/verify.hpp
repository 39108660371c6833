#pragma once

#include "vstab/constructions.hpp"
#include "vstab/stability.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

struct Range {
    int lo = 0;
    int hi = 0;
    bool operator==(const Range&) const = default;
};

/// "3..10" or a single value "7".
Range parse_range(std::string_view text);

struct VerifyOptions {
    std::optional<Range> chi_range;   // prop31, prop31-variant
    std::optional<Range> delta_range; // constr1, fbounds, thm12
    std::optional<Range> m_range;     // sat
    std::optional<Range> k_range;     // c5blowup
    StabilityOptions stability;
    std::uint64_t seed = 1;           // random corpora
};

struct VerificationResult {
    std::string claim_id;
    ClaimStatus status = ClaimStatus::inconclusive;
    std::string computed;
    std::string expected;
    long long runtime_ms = 0;
};

/// prop31, prop31-variant, constr1, c5blowup, sat, fbounds, thm12, akbari, king, tovey,
/// oracle, critical, all.
const std::vector<std::string>& suite_names();

/// Recomputes every claim of the suite. Results are sorted by claim_id.
/// Throws std::invalid_argument for an unknown suite or an out-of-range parameter.
std::vector<VerificationResult> run_suite(std::string_view suite, const VerifyOptions& opts = {});

/// 0 when everything passes, 1 on any failure, 3 when the rest are only inconclusive.
int verification_exit_code(const std::vector<VerificationResult>& results);

// Corpus sizes of the property suites.
inline constexpr int kAkbariSamples = 1000;
inline constexpr int kKingSamples = 300;
inline constexpr int kOracleSamples = 500;
inline constexpr int kCriticalSamples = 200;
inline constexpr int kHaxellSamples = 500;
inline constexpr int kToveySamples = 200;

} // namespace vstab
