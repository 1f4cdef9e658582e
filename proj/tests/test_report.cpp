#include <doctest.h>

#include "minv/report.hpp"

using namespace minv;

TEST_CASE("noncollapse audit: standard run excludes collapse at witness 324") {
    NoncollapseReport rep = noncollapse_audit();
    CHECK(rep.concluded);
    CHECK(rep.collapse_excluded);
    CHECK(rep.certificate_verdict == CheckStatus::pass);
    CHECK(rep.witness_degree == 324);
    CHECK(rep.bound == 168);
    CHECK(rep.divergence_degree == 324);
    CHECK(rep.divergence_delta == 1);
    CHECK(rep.series_agreement_limit == 322);
    CHECK(rep.verified_cohomological_degrees ==
          std::vector<std::int32_t>{4, 26, 36, 48, 324});
    CHECK(!report_text(rep).empty());
}

TEST_CASE("noncollapse audit: inflated bound inverts the conclusion") {
    AuditOptions opts;
    opts.generator_degree_bound = 400;
    NoncollapseReport rep = noncollapse_audit(opts);
    CHECK(rep.concluded);
    CHECK(!rep.collapse_excluded);
    CHECK(rep.witness_degree == -1);
}

TEST_CASE("noncollapse audit: dropping the top generator refuses to conclude") {
    AuditOptions opts;
    opts.drop_largest_generator = true;
    NoncollapseReport rep = noncollapse_audit(opts);
    CHECK(!rep.concluded);
    CHECK(!rep.collapse_excluded);
    // condition three must have failed upstream: 2*13*18*24 != 1819584
    CHECK(rep.certificate_verdict != CheckStatus::pass);
}

TEST_CASE("series truncations with and without the witness degree") {
    std::vector<std::int32_t> small{4, 26, 36, 48};
    std::vector<std::int32_t> full{4, 26, 36, 48, 324};
    for (std::int32_t d = 0; d < 324; d += 2)
        CHECK(hilbert_coefficient(small, d) == hilbert_coefficient(full, d));
    CHECK(hilbert_coefficient(full, 324) == hilbert_coefficient(small, 324) + 1);
}
