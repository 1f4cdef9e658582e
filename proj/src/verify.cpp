#include "minv/verify.hpp"

#include <algorithm>
#include <map>

#include "minv/linalg.hpp"

namespace minv {

const char* check_status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::inconclusive:
        return "inconclusive";
    }
    return "?";
}

InvarianceReport check_invariance(const Polynomial& f, const GroupSpec& spec) {
    for (std::size_t k = 0; k < spec.generators.size(); ++k) {
        if (act_on_poly(spec.generators[k], f) != f)
            return InvarianceReport{CheckStatus::fail, -1, static_cast<int>(k)};
    }
    return InvarianceReport{CheckStatus::pass, -1, -1};
}

InvarianceReport check_presentation_invariance(const InvariantPresentation& pres,
                                               const GroupSpec& spec) {
    for (std::size_t i = 0; i < pres.generators.size(); ++i) {
        InvarianceReport r = check_invariance(pres.generators[i], spec);
        if (r.status != CheckStatus::pass) {
            r.failing_generator = static_cast<int>(i);
            return r;
        }
    }
    return InvarianceReport{CheckStatus::pass, -1, -1};
}

HsopCheck hsop_groebner(const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
    HsopCheck out;
    for (const Polynomial& g : gens) {
        Homogeneity h = g.homogeneity();
        if (g.is_zero() || !h.homogeneous)
            throw std::invalid_argument("hsop_groebner: generators must be homogeneous nonzero");
    }
    GroebnerResult gb = buchberger(gens, opts);
    out.gb_status = gb.status;
    out.elapsed_seconds = gb.elapsed_seconds;
    if (gb.status != GroebnerStatus::complete) {
        out.status = CheckStatus::inconclusive;
        return out;
    }
    out.zero_dimensional = leading_ideal_zero_dimensional(
        gb.leading_monomials, gens.front().nvars(), &out.vars_missing_pure_power);
    out.status = out.zero_dimensional ? CheckStatus::pass : CheckStatus::fail;
    return out;
}

namespace {

std::vector<std::int32_t> sorted_copy(std::vector<std::int32_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::int64_t int_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

// returns false (with a message) when a provenance node fails its rule
bool discharge(const Provenance& node, std::uint32_t p, std::vector<std::string>& chain,
               std::string indent) {
    auto note = [&](const std::string& rule, bool ok) {
        chain.push_back(indent + provenance_kind_name(node.kind) + "[" + node.note + "]: " + rule +
                        (ok ? " ok" : " FAILED"));
        return ok;
    };
    switch (node.kind) {
    case ProvenanceKind::DicksonSL: {
        const int n = node.nvars;
        std::vector<std::int32_t> expect;
        expect.push_back(static_cast<std::int32_t>((int_pow(p, n) - 1) / (p - 1)));
        for (int k = 1; k < n; ++k)
            expect.push_back(static_cast<std::int32_t>(int_pow(p, n) - int_pow(p, k)));
        return note("classical SL degrees match",
                    sorted_copy(expect) == sorted_copy(node.poly_degrees));
    }
    case ProvenanceKind::DicksonGL: {
        const int n = node.nvars;
        std::vector<std::int32_t> expect;
        for (int k = 0; k < n; ++k)
            expect.push_back(static_cast<std::int32_t>(int_pow(p, n) - int_pow(p, k)));
        return note("classical GL degrees match",
                    sorted_copy(expect) == sorted_copy(node.poly_degrees));
    }
    case ProvenanceKind::ExplicitTrivial: {
        bool ok = static_cast<int>(node.poly_degrees.size()) == node.nvars;
        for (std::int32_t d : node.poly_degrees)
            ok = ok && d == 1;
        return note("generators are the full variable set", ok);
    }
    case ProvenanceKind::Explicit:
        chain.push_back(indent + "explicit[" + node.note + "]: no evidence, inconclusive");
        return false;
    case ProvenanceKind::DisjointProduct: {
        if (node.children.size() != 2)
            return note("two factors", false);
        const Provenance& a = node.children[0];
        const Provenance& b = node.children[1];
        bool shape = a.nvars + b.nvars == node.nvars;
        std::vector<std::int32_t> expect = a.poly_degrees;
        expect.insert(expect.end(), b.poly_degrees.begin(), b.poly_degrees.end());
        shape = shape && sorted_copy(expect) == sorted_copy(node.poly_degrees);
        if (!note("disjoint blocks concatenate", shape))
            return false;
        return discharge(a, p, chain, indent + "  ") && discharge(b, p, chain, indent + "  ");
    }
    case ProvenanceKind::BlockCompose: {
        if (node.children.size() != 2)
            return note("two factors", false);
        const Provenance& a = node.children[0];
        const Provenance& b = node.children[1];
        const int m = a.nvars;
        const int d = b.nvars;
        bool shape = m + d == node.nvars;
        std::vector<std::int32_t> expect;
        std::int64_t scale = int_pow(p, d);
        for (std::int32_t dd : a.poly_degrees)
            expect.push_back(static_cast<std::int32_t>(dd * scale));
        expect.insert(expect.end(), b.poly_degrees.begin(), b.poly_degrees.end());
        shape = shape && sorted_copy(expect) == sorted_copy(node.poly_degrees);
        if (!note("block composition scales first factor by p^(n-m)", shape))
            return false;
        return discharge(a, p, chain, indent + "  ") && discharge(b, p, chain, indent + "  ");
    }
    }
    return false;
}

} // namespace

IntegralityReport integrality_structural(const Provenance& prov, std::uint32_t p) {
    IntegralityReport out;
    out.method = (prov.kind == ProvenanceKind::DicksonSL || prov.kind == ProvenanceKind::DicksonGL)
                     ? "base-dickson"
                     : "structural";
    bool ok = discharge(prov, p, out.chain, "");
    out.status = ok ? CheckStatus::pass : CheckStatus::inconclusive;
    return out;
}

DegreeProductReport degree_product_check(const InvariantPresentation& pres, const GroupSpec& spec,
                                         std::uint64_t closure_cap) {
    DegreeProductReport out;
    std::uint64_t prod = 1;
    for (std::int32_t d : pres.poly_degrees) {
        if (d <= 0)
            throw std::invalid_argument("degree_product_check: nonpositive degree");
        prod *= static_cast<std::uint64_t>(d);
    }
    out.degree_product = prod;
    std::optional<OrderResult> order = group_order(spec, closure_cap);
    if (!order) {
        out.status = CheckStatus::inconclusive;
        out.order_method = "closure cap exceeded";
        return out;
    }
    out.group_order = order->order;
    out.order_method = order->method == OrderMethod::closure ? "closure" : "block-formula";
    out.equal = out.degree_product == out.group_order;
    out.status = out.equal ? CheckStatus::pass : CheckStatus::fail;
    return out;
}

VerificationCertificate wilkerson_check(const InvariantPresentation& pres, const GroupSpec& spec,
                                        VerifyPolicy policy, const GroebnerOptions& gb_opts) {
    VerificationCertificate cert;
    require_same_field(pres.field, spec.field, "wilkerson_check");
    if (pres.nvars != spec.n)
        throw std::invalid_argument("wilkerson_check: presentation/group arity mismatch");

    cert.invariance = check_presentation_invariance(pres, spec);

    // a malformed presentation (wrong arity between generators and recorded
    // degrees, non-homogeneous or zero generators) cannot be certified
    bool well_formed = pres.generators.size() == pres.poly_degrees.size();
    for (std::size_t i = 0; well_formed && i < pres.generators.size(); ++i) {
        Homogeneity h = pres.generators[i].homogeneity();
        well_formed = !pres.generators[i].is_zero() && h.homogeneous &&
                      *h.degree == pres.poly_degrees[i];
    }
    if (!well_formed) {
        cert.integrality.status = CheckStatus::inconclusive;
        cert.integrality.method = "none";
        cert.integrality.chain = {
            "generators are not homogeneous of the recorded degrees; integrality not tested"};
        cert.degree_product = degree_product_check(pres, spec);
        cert.verdict = cert.invariance.status == CheckStatus::fail ? CheckStatus::fail
                                                                   : CheckStatus::inconclusive;
        return cert;
    }

    std::int32_t max_degree = 0;
    for (std::int32_t d : pres.poly_degrees)
        max_degree = std::max(max_degree, d);
    bool use_groebner = policy == VerifyPolicy::groebner ||
                        (policy == VerifyPolicy::automatic && pres.nvars <= 3 && max_degree <= 30);
    if (use_groebner) {
        HsopCheck h = hsop_groebner(pres.generators, gb_opts);
        cert.integrality.status = h.status;
        cert.integrality.method = "groebner";
        cert.integrality.groebner_seconds = h.elapsed_seconds;
        if (h.status == CheckStatus::pass)
            cert.integrality.chain = {"groebner basis complete, leading ideal zero-dimensional"};
        else if (h.status == CheckStatus::fail) {
            std::string vars;
            for (int v : h.vars_missing_pure_power)
                vars += (vars.empty() ? "" : ",") + std::to_string(v + 1);
            cert.integrality.chain = {"leading ideal has no pure power for variable(s) " + vars};
        } else
            cert.integrality.chain = {"groebner run capped, no verdict"};
    } else if (pres.provenance.poly_degrees != pres.poly_degrees ||
               pres.provenance.nvars != pres.nvars) {
        cert.integrality.status = CheckStatus::inconclusive;
        cert.integrality.method = "structural";
        cert.integrality.chain = {"provenance does not describe this presentation"};
    } else {
        cert.integrality = integrality_structural(pres.provenance, pres.field.p());
    }

    cert.degree_product = degree_product_check(pres, spec);

    CheckStatus worst = CheckStatus::pass;
    for (CheckStatus s :
         {cert.invariance.status, cert.integrality.status, cert.degree_product.status}) {
        if (s == CheckStatus::fail)
            worst = CheckStatus::fail;
        else if (s == CheckStatus::inconclusive && worst == CheckStatus::pass)
            worst = CheckStatus::inconclusive;
    }
    cert.verdict = worst;
    return cert;
}

std::uint64_t hilbert_coefficient(const std::vector<std::int32_t>& degrees, std::int32_t d) {
    if (d < 0)
        return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(d) + 1, 0);
    ways[0] = 1;
    for (std::int32_t deg : degrees) {
        if (deg <= 0)
            throw std::invalid_argument("hilbert_coefficient: degrees must be positive");
        for (std::int32_t t = deg; t <= d; ++t)
            ways[std::size_t(t)] += ways[std::size_t(t - deg)];
    }
    return ways[std::size_t(d)];
}

namespace {

// degree-d monomials in canonical (graded lex desc) order
std::vector<Exponents> degree_monomials(int nvars, std::int32_t d) {
    std::vector<Exponents> out;
    Exponents cur(std::size_t(nvars), 0);
    // lexicographic descending enumeration of compositions of d
    struct Rec {
        int nvars;
        std::vector<Exponents>& out;
        Exponents& cur;
        void go(int pos, std::int32_t rest) {
            if (pos == nvars - 1) {
                cur[std::size_t(pos)] = rest;
                out.push_back(cur);
                return;
            }
            for (std::int32_t e = rest; e >= 0; --e) {
                cur[std::size_t(pos)] = e;
                go(pos + 1, rest - e);
            }
        }
    } rec{nvars, out, cur};
    if (nvars == 0) {
        if (d == 0)
            out.push_back({});
        return out;
    }
    rec.go(0, d);
    return out;
}

} // namespace

std::optional<std::uint64_t> invariant_dimension(const GroupSpec& spec, std::int32_t degree,
                                                 std::size_t monomial_cap) {
    if (degree < 0)
        throw std::invalid_argument("invariant_dimension: negative degree");
    const PrimeField& field = spec.field;
    const int n = spec.n;

    // C(degree+n-1, n-1) with early cap-out
    std::uint64_t count = 1;
    for (int i = 1; i <= n - 1; ++i) {
        count = count * (static_cast<std::uint64_t>(degree) + i) / i;
        if (count > monomial_cap * 4)
            break;
    }
    if (count > monomial_cap)
        return std::nullopt;

    std::vector<Exponents> basis = degree_monomials(n, degree);
    const std::size_t N = basis.size();
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < N; ++i)
        index.emplace(basis[i], i);

    auto poly_coords = [&](const Polynomial& f) {
        std::vector<std::uint32_t> v(N, 0);
        for (const Term& t : f.terms()) {
            auto it = index.find(t.mono.exps);
            if (it == index.end())
                throw std::logic_error("invariant_dimension: action left the degree slice");
            v[it->second] = t.coeff;
        }
        return v;
    };

    // K: columns spanning the current joint kernel
    std::vector<std::vector<std::uint32_t>> K;
    bool first = true;
    for (const MatrixF& g : spec.generators) {
        SubstitutionMap sub = action_substitution(g);
        if (first) {
            // rows of (rho(g) - I)^T assembled column-by-column: build as
            // dense N x N with column j = coords(g . m_j) - e_j
            std::vector<std::uint32_t> a(N * N, 0);
            for (std::size_t j = 0; j < N; ++j) {
                Polynomial m = Polynomial::from_canonical_terms(
                    field, n, {Term{Monomial(basis[j]), 1}});
                std::vector<std::uint32_t> col = poly_coords(substitute(m, sub));
                for (std::size_t i = 0; i < N; ++i)
                    a[i * N + j] = col[i];
                a[j * N + j] = field.sub(a[j * N + j], 1);
            }
            K = linalg::kernel_basis(field, N, N, std::move(a));
            first = false;
        } else {
            if (K.empty())
                break;
            const std::size_t k = K.size();
            std::vector<std::uint32_t> b(N * k, 0);
            for (std::size_t j = 0; j < k; ++j) {
                // act on the polynomial with coordinates K[j]
                std::vector<Term> terms;
                for (std::size_t i = 0; i < N; ++i)
                    if (K[j][i] != 0)
                        terms.push_back(Term{Monomial(basis[i]), K[j][i]});
                Polynomial f = Polynomial::from_canonical_terms(field, n, std::move(terms));
                std::vector<std::uint32_t> col = poly_coords(substitute(f, sub));
                for (std::size_t i = 0; i < N; ++i)
                    b[i * k + j] = field.sub(col[i], K[j][i]);
            }
            std::vector<std::vector<std::uint32_t>> ker = linalg::kernel_basis(field, N, k, std::move(b));
            std::vector<std::vector<std::uint32_t>> newK;
            for (const auto& y : ker) {
                std::vector<std::uint32_t> v(N, 0);
                for (std::size_t j = 0; j < k; ++j) {
                    if (y[j] == 0)
                        continue;
                    for (std::size_t i = 0; i < N; ++i)
                        v[i] = field.add(v[i], field.mul(y[j], K[j][i]));
                }
                newK.push_back(std::move(v));
            }
            K = std::move(newK);
        }
    }
    if (first) {
        // no generators: everything is invariant
        return N;
    }
    return K.size();
}

HilbertMatch hilbert_match(const GroupSpec& spec, const std::vector<std::int32_t>& poly_degrees,
                           std::int32_t max_degree, std::size_t monomial_cap) {
    HilbertMatch out;
    for (std::int32_t d = 0; d <= max_degree; ++d) {
        std::optional<std::uint64_t> dim = invariant_dimension(spec, d, monomial_cap);
        if (!dim) {
            out.status = CheckStatus::inconclusive;
            return out;
        }
        std::uint64_t coeff = hilbert_coefficient(poly_degrees, d);
        out.oracle_dims.push_back(*dim);
        out.series_coeffs.push_back(coeff);
        out.checked_through = d;
        if (*dim != coeff) {
            out.first_mismatch = d;
            out.status = CheckStatus::fail;
            return out;
        }
    }
    out.status = CheckStatus::pass;
    return out;
}

} // namespace minv
