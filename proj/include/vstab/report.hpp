#pragma once

#include "vstab/constructions.hpp"
#include "vstab/critical.hpp"
#include "vstab/sat.hpp"
#include "vstab/stability.hpp"
#include "vstab/verify.hpp"

#include <json.hpp>

#include <vector>

namespace vstab {

/// Bumped whenever a field changes meaning or disappears.
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const StabilityReport& r);
Json to_json(const ConstructionMeta& meta);
Json to_json(const VerificationResult& r);
Json to_json(const CriticalityReport& r);
Json to_json(const PipelineResult& r);
Json to_json(const CertificateCheck& c);

struct InvariantsOutcome {
    Json report;
    int exit_code = 0; // 0, or 3 when a solver ran out of budget
};

/// n, m, delta, chi, omega with witnesses and, per requested parameter, the stability
/// report. Budget exhaustion leaves the affected fields null and marks the report
/// inconclusive.
InvariantsOutcome invariants_report(const Graph& g, const std::vector<Parameter>& stability,
                                    const StabilityOptions& opts);

Json verification_report(std::string_view suite, const std::vector<VerificationResult>& results);

} // namespace vstab
