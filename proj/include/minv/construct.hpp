#ifndef MINV_CONSTRUCT_HPP
#define MINV_CONSTRUCT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "minv/dickson.hpp"
#include "minv/group.hpp"
#include "minv/poly.hpp"

namespace minv {

enum class ProvenanceKind {
    DicksonSL,       // Euler class + Dickson tail for SL_n
    DicksonGL,       // full Dickson set for GL_n
    BlockCompose,    // built from verified block factors
    DisjointProduct, // factors acting on disjoint variable blocks
    ExplicitTrivial, // generators are exactly the variables (trivial group)
    Explicit         // handed in without evidence
};

const char* provenance_kind_name(ProvenanceKind kind);

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::Explicit;
    std::string note;
    int nvars = 0;
    std::vector<std::int32_t> poly_degrees;
    std::vector<Provenance> children;
};

// A claimed polynomial invariant ring: generators with their degrees in both
// gradings (cohomological = 2 * polynomial) and how the claim was built.
struct InvariantPresentation {
    PrimeField field;
    int nvars = 0;
    std::vector<Polynomial> generators;
    std::vector<std::int32_t> poly_degrees;
    std::vector<std::int32_t> cohomological_degrees;
    Provenance provenance;

    std::vector<std::int32_t> sorted_cohomological_degrees() const;
};

InvariantPresentation dickson_sl_presentation(int n, std::uint32_t p);
InvariantPresentation dickson_gl_presentation(int n, std::uint32_t p);
InvariantPresentation trivial_presentation(PrimeField field, int nvars);

// Invariants of a product acting on disjoint variable blocks: generators of
// both factors, re-indexed into the joint variable set (a's block first).
InvariantPresentation product_presentation(const InvariantPresentation& a,
                                           const InvariantPresentation& b);

// Invariants of the block group from invariants of the diagonal factors:
// the first block's generators are composed with the span products of the
// leading variables (degree scaled by p^{n-m}), the second block's carry
// over verbatim. Inputs are re-checked for invariance under the recorded
// factor generators before composing.
InvariantPresentation compose_block_presentation(const InvariantPresentation& inv1,
                                                 const InvariantPresentation& inv2,
                                                 const GroupSpec& block_spec);

struct CatalogCase {
    std::string key;
    std::string description;
    GroupSpec group;
    std::vector<std::int32_t> claimed_cohomological_degrees;
    InvariantPresentation presentation;
};

std::vector<std::string> catalog_keys();
CatalogCase catalog_case(const std::string& key);

} // namespace minv

#endif
