#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "minv/serialize.hpp"

using namespace minv;

namespace {

PrimeField f3(3);

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("polynomial wire format") {
    Polynomial f = Polynomial::from_terms(f3, 2, {{{2, 0}, 1}, {{0, 2}, 2}});
    Json j = poly_to_json(f);
    CHECK(j.dump() == R"({"p":3,"nvars":2,"terms":[[1,[2,0]],[2,[0,2]]]})");
    CHECK(poly_from_json(j) == f);
}

TEST_CASE("polynomial parse rejects malformed input") {
    Json j = Json::parse(R"({"p":3,"nvars":2,"terms":[[0,[1,0]]]})");
    CHECK_THROWS_AS(poly_from_json(j), std::invalid_argument);
    j = Json::parse(R"({"p":3,"nvars":2,"terms":[[1,[1]]]})");
    CHECK_THROWS_AS(poly_from_json(j), std::invalid_argument);
    j = Json::parse(R"({"p":4,"nvars":1,"terms":[]})");
    CHECK_THROWS_AS(poly_from_json(j), std::invalid_argument);
}

TEST_CASE("serialization round-trip on random polynomials") {
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t p = (trial % 2 == 0) ? 3 : 5;
        PrimeField f(p);
        int nvars = 1 + static_cast<int>(rng() % 4);
        std::vector<std::pair<Exponents, std::int64_t>> raw;
        int terms = static_cast<int>(rng() % 8);
        for (int t = 0; t < terms; ++t) {
            Exponents e(static_cast<std::size_t>(nvars), 0);
            for (auto& x : e)
                x = std::int32_t(rng() % 5);
            raw.emplace_back(std::move(e), std::int64_t(rng() % p));
        }
        Polynomial f0 = Polynomial::from_terms(f, nvars, std::move(raw));
        CHECK(poly_from_json(poly_to_json(f0)) == f0);
    }
}

TEST_CASE("group spec round-trip, including block metadata") {
    GroupSpec spec = block_group_spec(f3, standard_generators(MatrixGroupFamily::GL, 1, 3),
                                      standard_generators(MatrixGroupFamily::SL, 3, 3), 1, 4);
    Json j = group_spec_to_json(spec);
    GroupSpec back = group_spec_from_json(j);
    CHECK(back.n == spec.n);
    CHECK(back.generators.size() == spec.generators.size());
    for (std::size_t i = 0; i < spec.generators.size(); ++i)
        CHECK(back.generators[i] == spec.generators[i]);
    REQUIRE(back.block.has_value());
    CHECK(back.block->m == 1);
    CHECK(back.block->g1_generators.size() == 1);
    CHECK(back.block->g2_generators.size() == 2);

    Json bad = j;
    bad["generators"][0][0][0] = 0; // make the first generator singular
    bad["generators"][0][0][1] = 0;
    CHECK_THROWS_AS(group_spec_from_json(bad), std::invalid_argument);
}

TEST_CASE("golden files for the shipped generator families") {
    const std::string dir = MINV_GOLDEN_DIR;
    CHECK(dump_document(dickson_document(2, 3)) == read_file(dir + "/dickson_n2_p3.json"));
    CHECK(dump_document(dickson_document(3, 3)) == read_file(dir + "/dickson_n3_p3.json"));
    CHECK(dump_document(dickson_document(1, 5)) == read_file(dir + "/dickson_n1_p5.json"));
    CHECK(dump_document(euler_document(2, 3)) == read_file(dir + "/euler_n2_p3.json"));
    CHECK(dump_document(euler_document(3, 3)) == read_file(dir + "/euler_n3_p3.json"));
    CHECK(dump_document(euler_document(1, 5)) == read_file(dir + "/euler_n1_p5.json"));
}

TEST_CASE("report JSON is stable across runs") {
    NoncollapseReport a = noncollapse_audit();
    NoncollapseReport b = noncollapse_audit();
    CHECK(dump_document(report_to_json(a)) == dump_document(report_to_json(b)));
}
