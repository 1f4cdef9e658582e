#include <doctest.h>

#include <random>

#include "minv/group.hpp"

using namespace minv;

namespace {

PrimeField f3(3);

std::vector<MatrixF> closure_elements(const GroupSpec& spec, std::size_t cap) {
    // tiny helper for sampling: returns all elements (BFS), caller keeps cap small
    std::vector<MatrixF> elems{MatrixF::identity(spec.field, spec.n)};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const MatrixF& g : spec.generators) {
            MatrixF next = elems[i] * g;
            bool seen = false;
            for (const MatrixF& e : elems)
                if (e == next) {
                    seen = true;
                    break;
                }
            if (!seen) {
                REQUIRE(elems.size() < cap);
                elems.push_back(next);
            }
        }
    }
    return elems;
}

} // namespace

TEST_CASE("contragredient action on variables") {
    MatrixF id = MatrixF::identity(f3, 2);
    CHECK(act_on_variable(id, 0) == Polynomial::variable(f3, 2, 0));
    CHECK(act_on_variable(id, 1) == Polynomial::variable(f3, 2, 1));

    // g = [[1,1],[0,1]] has inverse [[1,2],[0,1]]
    MatrixF g = MatrixF::from_rows(f3, {{1, 1}, {0, 1}});
    CHECK(act_on_variable(g, 0) ==
          Polynomial::from_terms(f3, 2, {{{1, 0}, 1}, {{0, 1}, 2}}));
    CHECK(act_on_variable(g, 1) == Polynomial::variable(f3, 2, 1));

    MatrixF d = MatrixF::from_rows(f3, {{2, 0}, {0, 1}});
    CHECK(act_on_variable(d, 0) == Polynomial::variable(f3, 2, 0).scaled(2));

    MatrixF sing = MatrixF::from_rows(f3, {{1, 2}, {2, 1}}); // det = 1-4 = 0 mod 3
    CHECK_THROWS_AS(act_on_variable(sing, 0), std::invalid_argument);
}

TEST_CASE("action on polynomials matches hand expansion") {
    MatrixF g = MatrixF::from_rows(f3, {{1, 1}, {0, 1}});
    Polynomial x2 = Polynomial::variable(f3, 2, 1);
    CHECK(act_on_poly(g, x2) == x2);
    Polynomial f = Polynomial::variable(f3, 2, 0);
    CHECK(act_on_poly(MatrixF::identity(f3, 2), f) == f);
}

TEST_CASE("action law act(g, act(h, f)) = act(gh, f) and degree preservation") {
    GroupSpec sl2{f3, 2, standard_generators(MatrixGroupFamily::SL, 2, 3), std::nullopt};
    std::vector<MatrixF> elems = closure_elements(sl2, 30);
    REQUIRE(elems.size() == 24);

    std::mt19937 rng(5150);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<std::uint32_t> coeff(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const MatrixF& g = elems[pick(rng)];
        const MatrixF& h = elems[pick(rng)];
        std::vector<std::pair<Exponents, std::int64_t>> raw;
        for (int t = 0; t < 4; ++t)
            raw.push_back({{std::int32_t(rng() % 4), std::int32_t(rng() % 4)}, coeff(rng)});
        Polynomial f = Polynomial::from_terms(f3, 2, raw);
        Polynomial lhs = act_on_poly(g, act_on_poly(h, f));
        Polynomial rhs = act_on_poly(g * h, f);
        CHECK(lhs == rhs);
        if (!f.is_zero()) {
            CHECK(act_on_poly(g, f).degree() == f.degree());
        }
    }
}

TEST_CASE("closure orders of the standard groups") {
    GroupSpec trivial{f3, 2, {}, std::nullopt};
    auto t = closure_order(trivial, 10);
    REQUIRE(t.has_value());
    CHECK(t->order == 1);

    GroupSpec idspec{f3, 2, {MatrixF::identity(f3, 2)}, std::nullopt};
    auto i = closure_order(idspec, 10);
    REQUIRE(i.has_value());
    CHECK(i->order == 1);

    GroupSpec sl2{f3, 2, standard_generators(MatrixGroupFamily::SL, 2, 3), std::nullopt};
    auto o = closure_order(sl2, 1000);
    REQUIRE(o.has_value());
    CHECK(o->order == 24); // (9-1)(9-3)/2

    GroupSpec sl3{f3, 3, standard_generators(MatrixGroupFamily::SL, 3, 3), std::nullopt};
    auto o3 = closure_order(sl3, 10000);
    REQUIRE(o3.has_value());
    CHECK(o3->order == 5616); // 27*26*8

    CHECK(!closure_order(sl3, 100).has_value()); // cap exceeded signals block formula
}

TEST_CASE("standard generator families") {
    CHECK(standard_generators(MatrixGroupFamily::SL, 1, 3).empty());

    auto gl1 = standard_generators(MatrixGroupFamily::GL, 1, 3);
    REQUIRE(gl1.size() == 1);
    CHECK(gl1[0].at(0, 0) == 2);
    GroupSpec gl1spec{f3, 1, gl1, std::nullopt};
    CHECK(closure_order(gl1spec, 10)->order == 2);

    auto gl2 = standard_generators(MatrixGroupFamily::GL, 2, 3);
    GroupSpec gl2spec{f3, 2, gl2, std::nullopt};
    CHECK(closure_order(gl2spec, 100)->order == 48); // (9-1)(9-3)

    PrimeField f2(2);
    GroupSpec sl22{f2, 2, standard_generators(MatrixGroupFamily::SL, 2, 2), std::nullopt};
    CHECK(closure_order(sl22, 100)->order == 6);
}

TEST_CASE("block group construction and order formula") {
    // trivial G1 over SL_3(F_3), m=1, n=4
    GroupSpec blk = block_group_spec(f3, {}, standard_generators(MatrixGroupFamily::SL, 3, 3), 1, 4);
    CHECK(blk.generators.size() == 5); // 0 + 2 + 3 unipotent
    OrderResult ord = block_order(blk);
    CHECK(ord.order == 151632); // 1 * 5616 * 27
    CHECK(ord.method == OrderMethod::block_formula);

    auto closure = closure_order(blk, 2000000);
    REQUIRE(closure.has_value());
    CHECK(closure->order == ord.order);

    // GL_1 over SL_3(F_3)
    GroupSpec blk2 = block_group_spec(f3, standard_generators(MatrixGroupFamily::GL, 1, 3),
                                      standard_generators(MatrixGroupFamily::SL, 3, 3), 1, 4);
    CHECK(blk2.generators.size() == 6);
    CHECK(block_order(blk2).order == 303264); // 2 * 5616 * 27
    auto closure2 = closure_order(blk2, 2000000);
    REQUIRE(closure2.has_value());
    CHECK(closure2->order == 303264);

    // rank-5 case: GL_1 over SL_3(F_3) x GL_1(F_3)
    std::vector<MatrixF> g2 =
        direct_sum_generators(standard_generators(MatrixGroupFamily::SL, 3, 3), 3,
                              standard_generators(MatrixGroupFamily::GL, 1, 3), 1, f3);
    CHECK(g2.size() == 3);
    GroupSpec blk5 = block_group_spec(f3, standard_generators(MatrixGroupFamily::GL, 1, 3),
                                      std::move(g2), 1, 5);
    CHECK(blk5.generators.size() == 8); // 1 + 3 + 4 unipotent
    CHECK(block_order(blk5).order == 1819584); // 2 * 11232 * 81

    CHECK_THROWS_AS(block_order(GroupSpec{f3, 2, {}, std::nullopt}), std::invalid_argument);
}

TEST_CASE("degenerate block splits") {
    auto sl3 = standard_generators(MatrixGroupFamily::SL, 3, 3);
    GroupSpec m0 = block_group_spec(f3, {}, sl3, 0, 3);
    CHECK(m0.generators.size() == sl3.size());
    for (std::size_t i = 0; i < sl3.size(); ++i)
        CHECK(m0.generators[i] == sl3[i]);
    CHECK(block_order(m0).order == 5616);

    GroupSpec mn = block_group_spec(f3, sl3, {}, 3, 3);
    CHECK(mn.generators.size() == sl3.size());
    for (std::size_t i = 0; i < sl3.size(); ++i)
        CHECK(mn.generators[i] == sl3[i]);
    CHECK(block_order(mn).order == 5616);
}

TEST_CASE("generated block group stays inside the block shape") {
    GroupSpec blk = block_group_spec(f3, standard_generators(MatrixGroupFamily::GL, 1, 3),
                                     standard_generators(MatrixGroupFamily::SL, 3, 3), 1, 4);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        MatrixF prod = MatrixF::identity(f3, 4);
        int len = 1 + static_cast<int>(rng() % 8);
        for (int s = 0; s < len; ++s)
            prod = prod * blk.generators[rng() % blk.generators.size()];
        // below-diagonal block must stay zero, the corner in GL_1, the rest in SL_3
        for (int i = 1; i < 4; ++i)
            CHECK(prod.at(i, 0) == 0);
        CHECK(prod.at(0, 0) != 0);
        MatrixF g2(f3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                g2.set(i, j, prod.at(1 + i, 1 + j));
        CHECK(g2.det() == 1);
    }
}

TEST_CASE("block elements factor as unipotent * first-block * second-block") {
    GroupSpec blk = block_group_spec(f3, standard_generators(MatrixGroupFamily::GL, 1, 3),
                                     standard_generators(MatrixGroupFamily::SL, 3, 3), 1, 4);
    // sample G1 and G2 elements from small closures
    GroupSpec g1spec{f3, 1, blk.block->g1_generators, std::nullopt};
    GroupSpec g2spec{f3, 3, blk.block->g2_generators, std::nullopt};
    std::vector<MatrixF> g1s = closure_elements(g1spec, 10);
    std::vector<MatrixF> g2s;
    {
        std::vector<MatrixF> some = closure_elements(g2spec, 6000);
        for (std::size_t i = 0; i < some.size(); i += 97)
            g2s.push_back(some[i]);
    }
    std::mt19937 rng(31337);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const MatrixF& g1 = g1s[rng() % g1s.size()];
        const MatrixF& g2 = g2s[rng() % g2s.size()];
        std::vector<std::uint32_t> m0(3);
        for (auto& x : m0)
            x = rng() % 3;
        // assemble g = (g1 m0 / 0 g2)
        MatrixF g(f3, 4);
        g.set(0, 0, g1.at(0, 0));
        for (int j = 0; j < 3; ++j)
            g.set(0, 1 + j, m0[std::size_t(j)]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                g.set(1 + i, 1 + j, g2.at(i, j));

        // constructive factorization: unipotent part carries m0 * g2^{-1}
        MatrixF g2inv = g2.inverted();
        MatrixF u = MatrixF::identity(f3, 4);
        for (int j = 0; j < 3; ++j) {
            std::uint32_t acc = 0;
            for (int k = 0; k < 3; ++k)
                acc = f3.add(acc, f3.mul(m0[std::size_t(k)], g2inv.at(k, j)));
            u.set(0, 1 + j, acc);
        }
        MatrixF b1 = MatrixF::identity(f3, 4);
        b1.set(0, 0, g1.at(0, 0));
        MatrixF b2 = MatrixF::identity(f3, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                b2.set(1 + i, 1 + j, g2.at(i, j));
        CHECK(u * b1 * b2 == g);
        ++checked;
    }
    CHECK(checked == 100);
}
