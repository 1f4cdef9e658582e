#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "minv/report.hpp"
#include "minv/serialize.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

int status_exit_code(minv::CheckStatus s) {
    switch (s) {
    case minv::CheckStatus::pass:
        return kExitPass;
    case minv::CheckStatus::fail:
        return kExitFail;
    case minv::CheckStatus::inconclusive:
        return kExitInconclusive;
    }
    return kExitInconclusive;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

minv::VerifyPolicy parse_policy(const std::string& s) {
    if (s == "auto")
        return minv::VerifyPolicy::automatic;
    if (s == "groebner")
        return minv::VerifyPolicy::groebner;
    if (s == "structural")
        return minv::VerifyPolicy::structural;
    throw CLI::ValidationError("--policy", "expected auto|groebner|structural");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular invariant rings of finite matrix groups: Dickson generators, "
                 "block-group composition, certificate verification, degree-gap audit"};
    app.require_subcommand(1);
    bool json_output = false;
    app.add_flag("--json", json_output, "machine-readable JSON output");

    // catalog
    CLI::App* catalog = app.add_subcommand("catalog", "built-in Weyl group cases");
    CLI::App* catalog_list = catalog->add_subcommand("list", "list catalog keys");
    CLI::App* catalog_build = catalog->add_subcommand("build", "build a case and report degrees");
    std::string build_key, emit_path;
    catalog_build->add_option("key", build_key, "catalog key")->required();
    catalog_build->add_option("--emit-generators", emit_path, "write generators to a JSON file");
    catalog->require_subcommand(1);

    // dickson / euler
    CLI::App* dickson = app.add_subcommand("dickson", "emit Dickson generators c_{n,k}");
    int dn = 0;
    std::uint32_t dp = 0;
    std::string dout;
    dickson->add_option("--n", dn, "number of variables")->required();
    dickson->add_option("--p", dp, "prime modulus")->required();
    dickson->add_option("--out", dout, "output file (default stdout)");

    CLI::App* euler = app.add_subcommand("euler", "emit the Euler class generator");
    int en = 0;
    std::uint32_t ep = 0;
    std::string eout;
    euler->add_option("--n", en, "number of variables")->required();
    euler->add_option("--p", ep, "prime modulus")->required();
    euler->add_option("--out", eout, "output file (default stdout)");

    // verify
    CLI::App* verify = app.add_subcommand("verify", "run the three-condition certificate");
    std::string verify_key, policy_name = "auto";
    int hilbert_depth = -1;
    verify->add_option("key", verify_key, "catalog key")->required();
    verify->add_option("--policy", policy_name, "auto|groebner|structural (default auto)");
    verify->add_option("--hilbert-depth", hilbert_depth,
                       "also run the kernel oracle against the degrees through this degree");

    // oracle
    CLI::App* oracle = app.add_subcommand(
        "oracle", "per-degree invariant dimensions vs generating-series coefficients");
    std::string oracle_key, oracle_spec_path;
    std::vector<std::int32_t> oracle_degrees;
    int oracle_depth = 10;
    oracle->add_option("key", oracle_key, "catalog key");
    oracle->add_option("--spec", oracle_spec_path, "group spec JSON file instead of a key");
    oracle->add_option("--degrees", oracle_degrees,
                       "claimed polynomial degrees (with --spec)");
    oracle->add_option("--max-degree", oracle_depth, "check degrees 0..D (polynomial grading)");

    // audit
    CLI::App* audit = app.add_subcommand("audit", "degree-gap noncollapse audit");
    std::int32_t bound = 168;
    audit->add_option("--bound", bound, "generator degree bound (default 168)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*catalog_list) {
            if (json_output) {
                minv::Json j = minv::Json::array();
                for (const std::string& k : minv::catalog_keys())
                    j.push_back(k);
                std::cout << minv::dump_document(j);
            } else {
                for (const std::string& k : minv::catalog_keys())
                    std::cout << k << "\n";
            }
            return kExitPass;
        }
        if (*catalog_build) {
            minv::CatalogCase cat = minv::catalog_case(build_key);
            minv::Json j;
            j["key"] = cat.key;
            j["description"] = cat.description;
            j["group"] = minv::group_spec_to_json(cat.group);
            j["claimed_cohomological_degrees"] = cat.claimed_cohomological_degrees;
            j["computed"] = minv::presentation_to_json(cat.presentation, false);
            j["computed_cohomological_degrees_sorted"] =
                cat.presentation.sorted_cohomological_degrees();
            bool match = cat.presentation.sorted_cohomological_degrees() ==
                         cat.claimed_cohomological_degrees;
            j["degrees_match_claim"] = match;
            if (!emit_path.empty()) {
                write_output(
                    minv::dump_document(minv::presentation_to_json(cat.presentation, true)),
                    emit_path);
            }
            if (json_output)
                std::cout << minv::dump_document(j);
            else {
                std::cout << cat.key << ": " << cat.description << "\n";
                std::cout << "  claimed cohomological degrees: ";
                for (std::int32_t d : cat.claimed_cohomological_degrees)
                    std::cout << d << " ";
                std::cout << "\n  computed cohomological degrees: ";
                for (std::int32_t d : cat.presentation.sorted_cohomological_degrees())
                    std::cout << d << " ";
                std::cout << "\n  match: " << (match ? "yes" : "NO") << "\n";
                if (!emit_path.empty())
                    std::cout << "  generators written to " << emit_path << "\n";
            }
            return match ? kExitPass : kExitFail;
        }
        if (*dickson) {
            write_output(minv::dump_document(minv::dickson_document(dn, dp)), dout);
            return kExitPass;
        }
        if (*euler) {
            write_output(minv::dump_document(minv::euler_document(en, ep)), eout);
            return kExitPass;
        }
        if (*verify) {
            minv::CatalogCase cat = minv::catalog_case(verify_key);
            minv::VerificationCertificate cert =
                minv::wilkerson_check(cat.presentation, cat.group, parse_policy(policy_name));
            cert.subject = cat.key;
            minv::Json j = minv::certificate_to_json(cert);
            if (hilbert_depth >= 0) {
                minv::HilbertMatch hm = minv::hilbert_match(
                    cat.group, cat.presentation.poly_degrees, hilbert_depth);
                minv::Json h;
                h["status"] = minv::check_status_name(hm.status);
                h["checked_through"] = hm.checked_through;
                h["first_mismatch"] = hm.first_mismatch;
                h["oracle_dims"] = hm.oracle_dims;
                h["series_coeffs"] = hm.series_coeffs;
                j["hilbert_match"] = h;
                if (hm.status == minv::CheckStatus::fail && cert.verdict == minv::CheckStatus::pass)
                    cert.verdict = minv::CheckStatus::fail;
                if (hm.status == minv::CheckStatus::inconclusive &&
                    cert.verdict == minv::CheckStatus::pass)
                    cert.verdict = minv::CheckStatus::inconclusive;
                j["verdict"] = minv::check_status_name(cert.verdict);
            }
            if (json_output)
                std::cout << minv::dump_document(j);
            else {
                std::cout << cat.key << " verification: " << minv::check_status_name(cert.verdict)
                          << "\n";
                std::cout << "  invariance: " << minv::check_status_name(cert.invariance.status)
                          << "\n";
                std::cout << "  integrality (" << cert.integrality.method
                          << "): " << minv::check_status_name(cert.integrality.status) << "\n";
                for (const std::string& line : cert.integrality.chain)
                    std::cout << "    " << line << "\n";
                std::cout << "  degree product " << cert.degree_product.degree_product
                          << " vs group order " << cert.degree_product.group_order << " ("
                          << cert.degree_product.order_method
                          << "): " << minv::check_status_name(cert.degree_product.status) << "\n";
            }
            return status_exit_code(cert.verdict);
        }
        if (*oracle) {
            std::string subject;
            minv::GroupSpec spec{minv::PrimeField(3), 0, {}, std::nullopt};
            std::vector<std::int32_t> degrees;
            if (!oracle_spec_path.empty()) {
                if (oracle_degrees.empty()) {
                    std::cerr << "error: --spec requires --degrees\n";
                    return kExitUsage;
                }
                std::ifstream in(oracle_spec_path);
                if (!in)
                    throw std::runtime_error("cannot open spec file: " + oracle_spec_path);
                spec = minv::group_spec_from_json(minv::Json::parse(in));
                degrees = oracle_degrees;
                subject = oracle_spec_path;
            } else if (!oracle_key.empty()) {
                minv::CatalogCase cat = minv::catalog_case(oracle_key);
                spec = cat.group;
                degrees = cat.presentation.poly_degrees;
                subject = cat.key;
            } else {
                std::cerr << "error: oracle needs a catalog key or --spec FILE --degrees ...\n";
                return kExitUsage;
            }
            minv::HilbertMatch hm = minv::hilbert_match(spec, degrees, oracle_depth);
            if (json_output) {
                minv::Json j;
                j["subject"] = subject;
                j["status"] = minv::check_status_name(hm.status);
                j["checked_through"] = hm.checked_through;
                j["first_mismatch"] = hm.first_mismatch;
                j["oracle_dims"] = hm.oracle_dims;
                j["series_coeffs"] = hm.series_coeffs;
                std::cout << minv::dump_document(j);
            } else {
                std::cout << subject << " oracle through degree " << oracle_depth << ": "
                          << minv::check_status_name(hm.status) << "\n";
                for (std::size_t d = 0; d < hm.oracle_dims.size(); ++d)
                    std::cout << "  d=" << d << ": dim " << hm.oracle_dims[d] << ", series "
                              << hm.series_coeffs[d] << "\n";
            }
            return status_exit_code(hm.status);
        }
        if (*audit) {
            minv::AuditOptions opts;
            opts.generator_degree_bound = bound;
            minv::NoncollapseReport rep = minv::noncollapse_audit(opts);
            if (json_output)
                std::cout << minv::dump_document(minv::report_to_json(rep));
            else
                std::cout << minv::report_text(rep);
            if (!rep.concluded)
                return kExitInconclusive;
            return rep.collapse_excluded ? kExitPass : kExitFail;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconclusive;
    }
    return kExitUsage;
}
