#include "minv/serialize.hpp"

#include "minv/dickson.hpp"

namespace minv {

Json poly_to_json(const Polynomial& f) {
    Json j;
    j["p"] = f.field().p();
    j["nvars"] = f.nvars();
    Json terms = Json::array();
    for (const Term& t : f.terms()) {
        Json e = Json::array();
        for (std::int32_t x : t.mono.exps)
            e.push_back(x);
        terms.push_back(Json::array({t.coeff, e}));
    }
    j["terms"] = terms;
    return j;
}

Polynomial poly_from_json(const Json& j) {
    PrimeField field(j.at("p").get<std::uint32_t>());
    int nvars = j.at("nvars").get<int>();
    std::vector<std::pair<Exponents, std::int64_t>> raw;
    for (const Json& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("poly_from_json: malformed term");
        std::int64_t c = t.at(0).get<std::int64_t>();
        if (c <= 0 || c >= static_cast<std::int64_t>(field.p()))
            throw std::invalid_argument("poly_from_json: coefficient out of range");
        Exponents e;
        for (const Json& x : t.at(1))
            e.push_back(x.get<std::int32_t>());
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("poly_from_json: exponent arity mismatch");
        raw.emplace_back(std::move(e), c);
    }
    return Polynomial::from_terms(field, nvars, std::move(raw));
}

namespace {

Json matrix_to_json(const MatrixF& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j)
            row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

MatrixF matrix_from_json(const Json& j, PrimeField field) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const Json& r : j) {
        std::vector<std::int64_t> row;
        for (const Json& x : r)
            row.push_back(x.get<std::int64_t>());
        rows.push_back(std::move(row));
    }
    return MatrixF::from_rows(field, rows);
}

std::vector<MatrixF> matrices_from_json(const Json& j, PrimeField field) {
    std::vector<MatrixF> out;
    for (const Json& m : j)
        out.push_back(matrix_from_json(m, field));
    return out;
}

} // namespace

Json group_spec_to_json(const GroupSpec& spec) {
    Json j;
    j["p"] = spec.field.p();
    j["n"] = spec.n;
    Json gens = Json::array();
    for (const MatrixF& g : spec.generators)
        gens.push_back(matrix_to_json(g));
    j["generators"] = gens;
    if (spec.block) {
        Json blk;
        blk["m"] = spec.block->m;
        Json g1 = Json::array(), g2 = Json::array();
        for (const MatrixF& g : spec.block->g1_generators)
            g1.push_back(matrix_to_json(g));
        for (const MatrixF& g : spec.block->g2_generators)
            g2.push_back(matrix_to_json(g));
        blk["g1"] = g1;
        blk["g2"] = g2;
        j["block"] = blk;
    }
    return j;
}

GroupSpec group_spec_from_json(const Json& j) {
    PrimeField field(j.at("p").get<std::uint32_t>());
    int n = j.at("n").get<int>();
    GroupSpec spec{field, n, matrices_from_json(j.at("generators"), field), std::nullopt};
    for (const MatrixF& g : spec.generators) {
        if (g.n() != n)
            throw std::invalid_argument("group_spec_from_json: generator dimension mismatch");
        if (!g.invertible())
            throw std::invalid_argument("group_spec_from_json: singular generator");
    }
    if (j.contains("block")) {
        const Json& blk = j.at("block");
        spec.block = BlockStructure{blk.at("m").get<int>(),
                                    matrices_from_json(blk.at("g1"), field),
                                    matrices_from_json(blk.at("g2"), field)};
    }
    return spec;
}

Json provenance_to_json(const Provenance& prov) {
    Json j;
    j["rule"] = provenance_kind_name(prov.kind);
    j["note"] = prov.note;
    j["nvars"] = prov.nvars;
    j["poly_degrees"] = prov.poly_degrees;
    if (!prov.children.empty()) {
        Json ch = Json::array();
        for (const Provenance& c : prov.children)
            ch.push_back(provenance_to_json(c));
        j["children"] = ch;
    }
    return j;
}

Json presentation_to_json(const InvariantPresentation& pres, bool include_generators) {
    Json j;
    j["p"] = pres.field.p();
    j["nvars"] = pres.nvars;
    j["poly_degrees"] = pres.poly_degrees;
    j["cohomological_degrees"] = pres.cohomological_degrees;
    j["provenance"] = provenance_to_json(pres.provenance);
    if (include_generators) {
        Json gens = Json::array();
        for (const Polynomial& g : pres.generators)
            gens.push_back(poly_to_json(g));
        j["generators"] = gens;
    }
    return j;
}

Json certificate_to_json(const VerificationCertificate& cert) {
    Json j;
    j["subject"] = cert.subject;
    Json c1;
    c1["status"] = check_status_name(cert.invariance.status);
    if (cert.invariance.status == CheckStatus::fail) {
        c1["failing_generator"] = cert.invariance.failing_generator;
        c1["failing_group_generator"] = cert.invariance.failing_group_generator;
    }
    j["invariance"] = c1;
    Json c2;
    c2["status"] = check_status_name(cert.integrality.status);
    c2["method"] = cert.integrality.method;
    c2["chain"] = cert.integrality.chain;
    if (cert.integrality.method == "groebner")
        c2["elapsed_seconds"] = cert.integrality.groebner_seconds;
    j["integrality"] = c2;
    Json c3;
    c3["status"] = check_status_name(cert.degree_product.status);
    c3["degree_product"] = cert.degree_product.degree_product;
    c3["group_order"] = cert.degree_product.group_order;
    c3["equal"] = cert.degree_product.equal;
    c3["order_method"] = cert.degree_product.order_method;
    j["degree_product"] = c3;
    j["verdict"] = check_status_name(cert.verdict);
    return j;
}

Json report_to_json(const NoncollapseReport& rep) {
    Json j;
    j["schema_version"] = 1;
    j["case"] = rep.case_key;
    j["concluded"] = rep.concluded;
    j["collapse_excluded"] = rep.collapse_excluded;
    j["certificate_verdict"] = check_status_name(rep.certificate_verdict);
    j["verified_cohomological_degrees"] = rep.verified_cohomological_degrees;
    j["bound"] = rep.bound;
    j["bound_provenance"] = rep.bound_provenance;
    j["witness_degree"] = rep.witness_degree;
    j["divergence_degree"] = rep.divergence_degree;
    j["divergence_delta"] = rep.divergence_delta;
    j["series_agreement_limit"] = rep.series_agreement_limit;
    j["verdict"] = rep.verdict_line;
    j["evidence"] = rep.evidence;
    return j;
}

Json dickson_document(int n, std::uint32_t p) {
    Json j;
    j["kind"] = "dickson";
    j["p"] = p;
    j["nvars"] = n;
    Json gens = Json::array();
    for (const Polynomial& c : dickson_generators(n, p))
        gens.push_back(poly_to_json(c));
    j["generators"] = gens;
    return j;
}

Json euler_document(int n, std::uint32_t p) {
    EulerClass e = euler_class(n, p);
    Json j;
    j["kind"] = "euler";
    j["p"] = p;
    j["nvars"] = n;
    j["sigma"] = e.sigma;
    j["e"] = poly_to_json(e.e);
    return j;
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

} // namespace minv
