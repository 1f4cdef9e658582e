#include "minv/report.hpp"

#include <algorithm>
#include <sstream>

namespace minv {

namespace {

std::string degrees_string(const std::vector<std::int32_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

} // namespace

NoncollapseReport noncollapse_audit(const AuditOptions& options) {
    NoncollapseReport rep;
    rep.case_key = "EE8^5a";
    rep.bound = options.generator_degree_bound;
    rep.bound_provenance =
        "cited input: Cotor over H*(E8;F_3) is generated in cohomological degree <= 168 "
        "(Mimura-Sambe computation)";

    CatalogCase cat = catalog_case(rep.case_key);
    InvariantPresentation pres = cat.presentation;
    if (options.drop_largest_generator) {
        std::size_t victim = 0;
        for (std::size_t i = 1; i < pres.poly_degrees.size(); ++i)
            if (pres.poly_degrees[i] > pres.poly_degrees[victim])
                victim = i;
        pres.generators.erase(pres.generators.begin() + static_cast<std::ptrdiff_t>(victim));
        pres.poly_degrees.erase(pres.poly_degrees.begin() + static_cast<std::ptrdiff_t>(victim));
        pres.cohomological_degrees.erase(pres.cohomological_degrees.begin() +
                                         static_cast<std::ptrdiff_t>(victim));
        pres.provenance.poly_degrees = pres.poly_degrees;
        rep.evidence.push_back("mutant: largest generator dropped before verification");
    }

    VerificationCertificate cert = wilkerson_check(pres, cat.group, options.policy);
    rep.certificate_verdict = cert.verdict;
    rep.verified_cohomological_degrees = pres.sorted_cohomological_degrees();

    if (cert.verdict != CheckStatus::pass) {
        rep.concluded = false;
        rep.collapse_excluded = false;
        rep.verdict_line = "no conclusion: the invariant-ring certificate did not pass (" +
                           std::string(check_status_name(cert.verdict)) + ")";
        rep.evidence.push_back("invariance: " + std::string(check_status_name(cert.invariance.status)));
        rep.evidence.push_back("integrality: " + std::string(check_status_name(cert.integrality.status)));
        rep.evidence.push_back("degree product " + std::to_string(cert.degree_product.degree_product) +
                               " vs group order " + std::to_string(cert.degree_product.group_order) +
                               ": " + std::string(check_status_name(cert.degree_product.status)));
        return rep;
    }
    rep.evidence.push_back("certificate: all three conditions pass; degrees " +
                           degrees_string(rep.verified_cohomological_degrees) +
                           ", group order " + std::to_string(cert.degree_product.group_order));

    std::vector<std::int32_t> above;
    for (std::int32_t d : rep.verified_cohomological_degrees)
        if (d > rep.bound)
            above.push_back(d);
    rep.concluded = true;

    if (above.size() != 1) {
        rep.collapse_excluded = false;
        rep.verdict_line = "collapse not excluded: " + std::to_string(above.size()) +
                           " generator degrees exceed the bound " + std::to_string(rep.bound);
        rep.evidence.push_back("degrees above bound: " + degrees_string(above));
        return rep;
    }
    rep.witness_degree = above.front();
    rep.evidence.push_back("exactly one generator degree " + std::to_string(rep.witness_degree) +
                           " exceeds the bound " + std::to_string(rep.bound));

    // series with and without the witness generator, compared on even degrees
    std::vector<std::int32_t> small = rep.verified_cohomological_degrees;
    small.erase(std::find(small.begin(), small.end(), rep.witness_degree));
    std::vector<std::int32_t> full = rep.verified_cohomological_degrees;
    for (std::int32_t d = 0; d <= rep.witness_degree; d += 2) {
        std::uint64_t cs = hilbert_coefficient(small, d);
        std::uint64_t cf = hilbert_coefficient(full, d);
        if (cs != cf) {
            rep.divergence_degree = d;
            rep.divergence_delta = cf - cs;
            break;
        }
        rep.series_agreement_limit = d;
    }

    bool diverges_at_witness = rep.divergence_degree == rep.witness_degree;
    rep.evidence.push_back(
        diverges_at_witness
            ? "generating series of " + degrees_string(small) + " and " + degrees_string(full) +
                  " agree on every even degree below " + std::to_string(rep.witness_degree) +
                  " and differ there by " + std::to_string(rep.divergence_delta)
            : "generating series divergence at " + std::to_string(rep.divergence_degree) +
                  " instead of " + std::to_string(rep.witness_degree));

    rep.collapse_excluded = diverges_at_witness;
    if (rep.collapse_excluded) {
        rep.verdict_line =
            "collapse excluded: the verified invariant ring needs a generator in degree " +
            std::to_string(rep.witness_degree) + " > " + std::to_string(rep.bound) +
            ", so a subalgebra generated in degrees <= " + std::to_string(rep.bound) +
            " cannot contain it integrally";
    } else {
        rep.verdict_line = "collapse not excluded by this audit";
    }
    return rep;
}

std::string report_text(const NoncollapseReport& rep) {
    std::ostringstream os;
    os << "noncollapse audit: case " << rep.case_key << "\n";
    os << "  verified degrees (cohomological): " << degrees_string(rep.verified_cohomological_degrees)
       << "\n";
    os << "  bound: " << rep.bound << " (" << rep.bound_provenance << ")\n";
    if (rep.witness_degree >= 0)
        os << "  witness degree: " << rep.witness_degree << "\n";
    if (rep.divergence_degree >= 0)
        os << "  series divergence at: " << rep.divergence_degree << " (delta "
           << rep.divergence_delta << ", agreement through " << rep.series_agreement_limit
           << ")\n";
    for (const std::string& e : rep.evidence)
        os << "  - " << e << "\n";
    os << "  verdict: " << rep.verdict_line << "\n";
    return os.str();
}

} // namespace minv
