#ifndef MINV_REPORT_HPP
#define MINV_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "minv/verify.hpp"

namespace minv {

struct AuditOptions {
    // Cited input: the Cotor algebra of H*(E8; F_3) is generated in degrees
    // <= 168 (Mimura-Sambe); consumed as a constant, never recomputed here.
    std::int32_t generator_degree_bound = 168; // cohomological
    VerifyPolicy policy = VerifyPolicy::automatic;
    bool drop_largest_generator = false; // mutant knob for tests
};

struct NoncollapseReport {
    std::string case_key;
    bool concluded = false;        // false: upstream verification failed, no verdict
    bool collapse_excluded = false;
    CheckStatus certificate_verdict = CheckStatus::inconclusive;
    std::vector<std::int32_t> verified_cohomological_degrees;
    std::int32_t bound = 0;
    std::string bound_provenance;
    std::int32_t witness_degree = -1;      // unique generator degree above the bound
    std::int32_t divergence_degree = -1;   // first cohomological degree where the
                                           // 4- and 5-generator series differ
    std::uint64_t divergence_delta = 0;
    std::int32_t series_agreement_limit = -1;
    std::string verdict_line;
    std::vector<std::string> evidence;
};

// Verifies the rank-5 case end to end, then checks that exactly one
// generator degree exceeds the bound and that the generating-series
// truncations with and without that generator first diverge exactly there.
NoncollapseReport noncollapse_audit(const AuditOptions& options = AuditOptions{});

std::string report_text(const NoncollapseReport& report);

} // namespace minv

#endif
