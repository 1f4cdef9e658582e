#ifndef MINV_VERIFY_HPP
#define MINV_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minv/construct.hpp"
#include "minv/groebner.hpp"
#include "minv/group.hpp"

namespace minv {

// Three-valued outcomes everywhere: inconclusive is never silently promoted.
enum class CheckStatus { pass, fail, inconclusive };
const char* check_status_name(CheckStatus s);

struct InvarianceReport {
    CheckStatus status = CheckStatus::pass;
    int failing_generator = -1;       // presentation generator index, -1 if n/a
    int failing_group_generator = -1; // group generator index
};

// f invariant under every group generator (generators generate).
InvarianceReport check_invariance(const Polynomial& f, const GroupSpec& spec);
InvarianceReport check_presentation_invariance(const InvariantPresentation& pres,
                                               const GroupSpec& spec);

struct HsopCheck {
    CheckStatus status = CheckStatus::inconclusive;
    GroebnerStatus gb_status = GroebnerStatus::capped;
    bool zero_dimensional = false;
    std::vector<int> vars_missing_pure_power;
    double elapsed_seconds = 0.0;
};

// Integrality via Groebner basis: the generators are a homogeneous system of
// parameters iff their ideal is zero-dimensional.
HsopCheck hsop_groebner(const std::vector<Polynomial>& gens,
                        const GroebnerOptions& opts = GroebnerOptions{});

struct IntegralityReport {
    CheckStatus status = CheckStatus::inconclusive;
    std::string method; // "groebner" | "structural" | "base-dickson"
    std::vector<std::string> chain;
    double groebner_seconds = 0.0;
};

// Discharges integrality from the construction chain: Dickson bases are
// classical, trivial-group presentations are the full variable set, disjoint
// products and block compositions preserve the property.
IntegralityReport integrality_structural(const Provenance& prov, std::uint32_t p);

struct DegreeProductReport {
    CheckStatus status = CheckStatus::inconclusive;
    std::uint64_t degree_product = 0;
    std::uint64_t group_order = 0;
    bool equal = false;
    std::string order_method;
};

DegreeProductReport degree_product_check(const InvariantPresentation& pres, const GroupSpec& spec,
                                         std::uint64_t closure_cap = std::uint64_t(1) << 24);

enum class VerifyPolicy { automatic, groebner, structural };

struct VerificationCertificate {
    std::string subject;
    InvarianceReport invariance;
    IntegralityReport integrality;
    DegreeProductReport degree_product;
    CheckStatus verdict = CheckStatus::inconclusive;
};

// The three-condition criterion: invariance, integrality, degree product
// equal to the group order. Policy automatic uses Groebner only on small
// instances (nvars <= 3, max degree <= 30) and the structural chain
// otherwise.
VerificationCertificate wilkerson_check(const InvariantPresentation& pres, const GroupSpec& spec,
                                        VerifyPolicy policy = VerifyPolicy::automatic,
                                        const GroebnerOptions& gb_opts = GroebnerOptions{});

// Number of monomials in free generators of the given degrees with total
// degree d (dynamic programming).
std::uint64_t hilbert_coefficient(const std::vector<std::int32_t>& degrees, std::int32_t d);

// Dimension of the degree-d invariant slice: joint kernel of the induced
// generator actions minus identity on the degree-d monomial basis, by exact
// elimination. Empty when the monomial space exceeds the cap.
std::optional<std::uint64_t> invariant_dimension(const GroupSpec& spec, std::int32_t degree,
                                                 std::size_t monomial_cap = 100000);

struct HilbertMatch {
    CheckStatus status = CheckStatus::inconclusive;
    std::int32_t first_mismatch = -1;
    std::int32_t checked_through = -1;
    std::vector<std::uint64_t> oracle_dims;
    std::vector<std::uint64_t> series_coeffs;
};

// Degree-by-degree comparison of the kernel oracle against the free-algebra
// coefficients on the given polynomial degrees.
HilbertMatch hilbert_match(const GroupSpec& spec, const std::vector<std::int32_t>& poly_degrees,
                           std::int32_t max_degree, std::size_t monomial_cap = 100000);

} // namespace minv

#endif
