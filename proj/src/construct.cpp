#include "minv/construct.hpp"

#include <algorithm>

namespace minv {

namespace {

std::int32_t required_degree(const Polynomial& f, const char* what) {
    Homogeneity h = f.homogeneity();
    if (f.is_zero() || !h.homogeneous)
        throw std::invalid_argument(std::string(what) + ": generator not homogeneous nonzero");
    return *h.degree;
}

InvariantPresentation make_presentation(PrimeField field, int nvars,
                                        std::vector<Polynomial> generators, Provenance prov,
                                        const char* what) {
    InvariantPresentation pres{field, nvars, std::move(generators), {}, {}, {}};
    for (const Polynomial& g : pres.generators) {
        if (g.nvars() != nvars)
            throw std::invalid_argument(std::string(what) + ": generator arity mismatch");
        std::int32_t d = required_degree(g, what);
        pres.poly_degrees.push_back(d);
        pres.cohomological_degrees.push_back(2 * d);
    }
    prov.nvars = nvars;
    prov.poly_degrees = pres.poly_degrees;
    pres.provenance = std::move(prov);
    return pres;
}

void check_child_invariance(const InvariantPresentation& pres,
                            const std::vector<MatrixF>& generators, const char* which) {
    for (const MatrixF& g : generators)
        for (std::size_t i = 0; i < pres.generators.size(); ++i)
            if (act_on_poly(g, pres.generators[i]) != pres.generators[i])
                throw std::invalid_argument(std::string("compose_block_presentation: ") + which +
                                            " generator " + std::to_string(i) +
                                            " is not invariant (unverified input)");
}

} // namespace

const char* provenance_kind_name(ProvenanceKind kind) {
    switch (kind) {
    case ProvenanceKind::DicksonSL:
        return "dickson-SL";
    case ProvenanceKind::DicksonGL:
        return "dickson-GL";
    case ProvenanceKind::BlockCompose:
        return "block-compose";
    case ProvenanceKind::DisjointProduct:
        return "disjoint-product";
    case ProvenanceKind::ExplicitTrivial:
        return "explicit-trivial";
    case ProvenanceKind::Explicit:
        return "explicit";
    }
    return "?";
}

std::vector<std::int32_t> InvariantPresentation::sorted_cohomological_degrees() const {
    std::vector<std::int32_t> d = cohomological_degrees;
    std::sort(d.begin(), d.end());
    return d;
}

InvariantPresentation dickson_sl_presentation(int n, std::uint32_t p) {
    PrimeField field(p);
    std::vector<Polynomial> gens;
    gens.push_back(euler_class(n, p).e);
    std::vector<Polynomial> dick = dickson_generators(n, p);
    for (int k = n - 1; k >= 1; --k)
        gens.push_back(dick[std::size_t(k)]);
    Provenance prov;
    prov.kind = ProvenanceKind::DicksonSL;
    prov.note = "SL_" + std::to_string(n) + "(F_" + std::to_string(p) + ")";
    return make_presentation(field, n, std::move(gens), std::move(prov), "dickson_sl_presentation");
}

InvariantPresentation dickson_gl_presentation(int n, std::uint32_t p) {
    PrimeField field(p);
    std::vector<Polynomial> dick = dickson_generators(n, p);
    std::vector<Polynomial> gens;
    for (int k = n - 1; k >= 0; --k)
        gens.push_back(dick[std::size_t(k)]);
    Provenance prov;
    prov.kind = ProvenanceKind::DicksonGL;
    prov.note = "GL_" + std::to_string(n) + "(F_" + std::to_string(p) + ")";
    return make_presentation(field, n, std::move(gens), std::move(prov), "dickson_gl_presentation");
}

InvariantPresentation trivial_presentation(PrimeField field, int nvars) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < nvars; ++i)
        gens.push_back(Polynomial::variable(field, nvars, i));
    Provenance prov;
    prov.kind = ProvenanceKind::ExplicitTrivial;
    prov.note = "trivial group";
    return make_presentation(field, nvars, std::move(gens), std::move(prov),
                             "trivial_presentation");
}

InvariantPresentation product_presentation(const InvariantPresentation& a,
                                           const InvariantPresentation& b) {
    require_same_field(a.field, b.field, "product_presentation");
    const int n = a.nvars + b.nvars;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : a.generators)
        gens.push_back(g.reindexed(n, 0));
    for (const Polynomial& g : b.generators)
        gens.push_back(g.reindexed(n, a.nvars));
    Provenance prov;
    prov.kind = ProvenanceKind::DisjointProduct;
    prov.note = std::to_string(a.nvars) + "+" + std::to_string(b.nvars) + " variables";
    prov.children = {a.provenance, b.provenance};
    return make_presentation(a.field, n, std::move(gens), std::move(prov),
                             "product_presentation");
}

InvariantPresentation compose_block_presentation(const InvariantPresentation& inv1,
                                                 const InvariantPresentation& inv2,
                                                 const GroupSpec& block_spec) {
    if (!block_spec.block)
        throw std::invalid_argument("compose_block_presentation: spec has no block structure");
    const BlockStructure& blk = *block_spec.block;
    const int m = blk.m;
    const int n = block_spec.n;
    const int d = n - m;
    require_same_field(inv1.field, block_spec.field, "compose_block_presentation");
    require_same_field(inv2.field, block_spec.field, "compose_block_presentation");
    if (inv1.nvars != m || inv2.nvars != d)
        throw std::invalid_argument("compose_block_presentation: dimension mismatch");

    check_child_invariance(inv1, blk.g1_generators, "first-factor");
    check_child_invariance(inv2, blk.g2_generators, "second-factor");

    if (m == 0)
        return inv2;
    if (d == 0)
        return inv1;

    const PrimeField field = block_spec.field;
    std::vector<int> basis(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i)
        basis[std::size_t(i)] = m + i;

    std::vector<Polynomial> images;
    for (int j = 0; j < m; ++j)
        images.push_back(span_product(Polynomial::variable(field, n, j), basis));
    SubstitutionMap span_images(std::move(images));

    std::int64_t scale = 1;
    for (int i = 0; i < d; ++i)
        scale *= field.p();

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < inv1.generators.size(); ++i) {
        Polynomial composed = substitute(inv1.generators[i], span_images);
        std::int32_t expect =
            static_cast<std::int32_t>(inv1.poly_degrees[i] * scale);
        if (required_degree(composed, "compose_block_presentation") != expect)
            throw std::logic_error("compose_block_presentation: composed degree mismatch");
        gens.push_back(std::move(composed));
    }
    for (const Polynomial& g : inv2.generators)
        gens.push_back(g.reindexed(n, m));

    Provenance prov;
    prov.kind = ProvenanceKind::BlockCompose;
    prov.note = "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", degree scale " +
                std::to_string(scale);
    prov.children = {inv1.provenance, inv2.provenance};
    return make_presentation(field, n, std::move(gens), std::move(prov),
                             "compose_block_presentation");
}

std::vector<std::string> catalog_keys() {
    return {"EE8^3", "EF4^3", "E3E6^4", "E2E7^4", "EE8^5a"};
}

CatalogCase catalog_case(const std::string& key) {
    if (key == "EE8^3") {
        PrimeField field(5);
        GroupSpec spec{field, 3, standard_generators(MatrixGroupFamily::SL, 3, 5), std::nullopt};
        return CatalogCase{key, "rank 3 at p=5: W = SL_3(F_5)", spec, {62, 200, 240},
                           dickson_sl_presentation(3, 5)};
    }
    if (key == "EF4^3") {
        PrimeField field(3);
        GroupSpec spec{field, 3, standard_generators(MatrixGroupFamily::SL, 3, 3), std::nullopt};
        return CatalogCase{key, "rank 3 at p=3: W = SL_3(F_3)", spec, {26, 36, 48},
                           dickson_sl_presentation(3, 3)};
    }
    if (key == "E3E6^4") {
        PrimeField field(3);
        GroupSpec spec = block_group_spec(
            field, {}, standard_generators(MatrixGroupFamily::SL, 3, 3), 1, 4);
        InvariantPresentation pres = compose_block_presentation(
            trivial_presentation(field, 1), dickson_sl_presentation(3, 3), spec);
        return CatalogCase{key, "rank 4 at p=3: trivial block over SL_3(F_3)", spec,
                           {26, 36, 48, 54}, pres};
    }
    if (key == "E2E7^4") {
        PrimeField field(3);
        GroupSpec spec = block_group_spec(field, standard_generators(MatrixGroupFamily::GL, 1, 3),
                                          standard_generators(MatrixGroupFamily::SL, 3, 3), 1, 4);
        InvariantPresentation pres = compose_block_presentation(
            dickson_gl_presentation(1, 3), dickson_sl_presentation(3, 3), spec);
        return CatalogCase{key, "rank 4 at p=3: GL_1(F_3) block over SL_3(F_3)", spec,
                           {26, 36, 48, 108}, pres};
    }
    if (key == "EE8^5a") {
        PrimeField field(3);
        std::vector<MatrixF> g2 =
            direct_sum_generators(standard_generators(MatrixGroupFamily::SL, 3, 3), 3,
                                  standard_generators(MatrixGroupFamily::GL, 1, 3), 1, field);
        GroupSpec spec = block_group_spec(
            field, standard_generators(MatrixGroupFamily::GL, 1, 3), std::move(g2), 1, 5);
        InvariantPresentation inv2 = product_presentation(dickson_sl_presentation(3, 3),
                                                          dickson_gl_presentation(1, 3));
        InvariantPresentation pres =
            compose_block_presentation(dickson_gl_presentation(1, 3), inv2, spec);
        return CatalogCase{key, "rank 5 at p=3: GL_1(F_3) block over SL_3(F_3) x GL_1(F_3)", spec,
                           {4, 26, 36, 48, 324}, pres};
    }
    throw std::invalid_argument("catalog_case: unknown key: " + key);
}

} // namespace minv
