#include "tameblocks/errors.hpp"
#include "tameblocks/standard_groups.hpp"
#include "tameblocks/weyl.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace tameblocks;

namespace {

RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

RatVec random_vector(std::mt19937& rng, int rank, long long den) {
    RatVec v(static_cast<size_t>(rank));
    for (auto& x : v)
        x = Rational(static_cast<long long>(rng() % den), den);
    return v;
}

} // namespace

TEST_CASE("group orders") {
    CHECK(generate_weyl(sl2_datum()).order() == 2);
    CHECK(generate_weyl(pgl2_datum()).order() == 2);
    CHECK(generate_weyl(gl_datum(2)).order() == 2);
    CHECK(generate_weyl(gl_datum(3)).order() == 6);
    CHECK(generate_weyl(gl_datum(4)).order() == 24);
    CHECK(generate_weyl(sp4_datum()).order() == 8); // 2^2 * 2! signed permutations
    CHECK(generate_weyl(so5_datum()).order() == 8);
    CHECK(generate_weyl(torus_datum(3)).order() == 1);
    CHECK_THROWS_AS(generate_weyl(sp4_datum(), 4), bound_error);
}

TEST_CASE("canonical representatives") {
    WeylGroup w_sl2 = generate_weyl(sl2_datum());
    CHECK(canonical_rep(rv({Rational(0)}), w_sl2.elements) == rv({Rational(0)}));
    CHECK(canonical_rep(rv({Rational(2, 3)}), w_sl2.elements) == rv({Rational(1, 3)}));

    WeylGroup w_sp4 = generate_weyl(sp4_datum());
    CHECK(canonical_rep(rv({Rational(0), Rational(1, 2)}), w_sp4.elements) ==
          rv({Rational(0), Rational(1, 2)}));
    CHECK(canonical_rep(rv({Rational(1, 2), Rational(0)}), w_sp4.elements) ==
          rv({Rational(0), Rational(1, 2)}));

    // Constant on orbits; orbit agrees with the generator-closure oracle.
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        RatVec v = random_vector(rng, 2, 8);
        RatVec rep = canonical_rep(v, w_sp4.elements);
        for (const auto& u : orbit_of(v, w_sp4.elements))
            CHECK(canonical_rep(u, w_sp4.elements) == rep);
        CHECK(orbit_of(v, w_sp4.elements) == oracle::orbit_by_generators(v, w_sp4.generators));
    }
}

TEST_CASE("stabilizers") {
    RootDatum sl2 = sl2_datum();
    WeylGroup w = generate_weyl(sl2);
    CHECK(stabilizer(rv({Rational(0)}), w.elements, sl2).order() == w.order());
    // -1/2 = 1/2 mod 1, so the reflection fixes it; no root pairs to zero.
    Subgroup s = stabilizer(rv({Rational(1, 2)}), w.elements, sl2);
    CHECK(s.order() == 2);
    CHECK(s.generating_roots.empty());
    CHECK_FALSE(s.reflection_generated);

    RootDatum gl2 = gl_datum(2);
    WeylGroup wg = generate_weyl(gl2);
    CHECK(stabilizer(rv({Rational(1, 2), Rational(0)}), wg.elements, gl2).order() == 1);

    // Orbit-stabilizer on random vectors, and the fixing subgroup always embeds.
    RootDatum sp4 = sp4_datum();
    WeylGroup ws = generate_weyl(sp4);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        RatVec v = random_vector(rng, 2, 12);
        Subgroup st = stabilizer(v, ws.elements, sp4);
        CHECK(orbit_of(v, ws.elements).size() * st.order() == ws.order());
        Subgroup fx = fixing_reflection_subgroup(v, sp4);
        CHECK(subgroup_contains(st.elements, fx.elements));
    }
}

TEST_CASE("fixing reflection subgroups") {
    RootDatum sl2 = sl2_datum();
    CHECK(fixing_reflection_subgroup(rv({Rational(0)}), sl2).order() == 2);
    CHECK(fixing_reflection_subgroup(rv({Rational(1, 2)}), sl2).order() == 1);
    RootDatum gl2 = gl_datum(2);
    CHECK(fixing_reflection_subgroup(rv({Rational(1, 3), Rational(1, 3)}), gl2).order() == 2);
}

TEST_CASE("facet reflection subgroups") {
    RootDatum sp4 = sp4_datum();
    auto nodes = affine_simple_system(sp4);
    REQUIRE(nodes.size() == 3);
    CHECK(reflection_subgroup(sp4, nodes, {}).order() == 1);
    CHECK(reflection_subgroup(sp4, nodes, {0, 1}).order() == 8); // all finite nodes give W0

    // J = {long simple, affine}: sign changes of the two coordinates, order 4,
    // generated by the reflections of 2e2 and 2e1.
    int long_node = -1, affine_node = -1;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].offset == 1)
            affine_node = static_cast<int>(i);
        else if (nodes[i].linear == std::vector<long long>{0, 2})
            long_node = static_cast<int>(i);
    }
    Subgroup sign = reflection_subgroup(sp4, nodes, {long_node, affine_node});
    CHECK(sign.order() == 4);
    std::vector<IntMat> oracle_gens;
    oracle_gens.push_back(reflection_matrix(2, {2, 0}, {1, 0}));
    oracle_gens.push_back(reflection_matrix(2, {0, 2}, {0, 1}));
    CHECK(sign.elements == close_under_product(oracle_gens, 2));

    // Monotone in J.
    WeylGroup w0 = generate_weyl(sp4);
    std::vector<std::vector<int>> js{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    for (const auto& a : js)
        for (const auto& b : js) {
            if (!std::includes(b.begin(), b.end(), a.begin(), a.end()))
                continue;
            CHECK(subgroup_contains(reflection_subgroup(sp4, nodes, b).elements,
                                    reflection_subgroup(sp4, nodes, a).elements));
        }
}
