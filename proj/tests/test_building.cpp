#include "tameblocks/building.hpp"
#include "tameblocks/errors.hpp"
#include "tameblocks/standard_groups.hpp"

#include <doctest.h>

#include <set>

using namespace tameblocks;

namespace {

RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

BuildingContext split_context(const RootDatum& rd, long long q) {
    return make_building_context(rd, split_frobenius(rd, q, q));
}

InertialParam param(const BuildingContext& ctx, const RatVec& v) {
    return make_inertial_param(v, ctx.w0, ctx.frob, ctx.frob.lambda);
}

} // namespace

TEST_CASE("facet types") {
    BuildingContext torus = split_context(torus_datum(2), 3);
    REQUIRE(torus.facets.size() == 1);
    CHECK(torus.facets[0].nodes.empty());
    CHECK(torus.facets[0].barycenter == zero_vector(2));

    BuildingContext sl2 = split_context(sl2_datum(), 3);
    REQUIRE(sl2.facets.size() == 3);
    CHECK(sl2.facets[0].nodes.empty());
    CHECK(sl2.facets[1].nodes == std::vector<int>{0});
    CHECK(sl2.facets[2].nodes == std::vector<int>{1});

    BuildingContext gl3 = split_context(gl_datum(3), 3);
    CHECK(gl3.facets.size() == 7); // proper subsets of the affine triangle

    BuildingContext sp4 = split_context(sp4_datum(), 3);
    CHECK(sp4.facets.size() == 7);

    // The standalone form agrees with the context.
    auto standalone = facet_types(sp4_datum(), split_frobenius(sp4_datum(), 3, 3));
    REQUIRE(standalone.size() == sp4.facets.size());
    for (size_t i = 0; i < standalone.size(); ++i) {
        CHECK(standalone[i].nodes == sp4.facets[i].nodes);
        CHECK(standalone[i].barycenter == sp4.facets[i].barycenter);
    }
}

TEST_CASE("division algebra twist keeps only the origin facet") {
    RootDatum gl3 = gl_datum(3);
    FrobeniusDescriptor f = split_frobenius(gl3, 2, 2);
    f.diagram_rotation = std::vector<long long>{1};
    BuildingContext ctx = make_building_context(gl3, f);
    REQUIRE(ctx.facets.size() == 1);
    CHECK(ctx.facets[0].nodes.empty());

    // Oracle: rotation-stable proper subsets of a 3-cycle.
    size_t stable = 0;
    for (int mask = 0; mask < 7; ++mask) {
        int rotated = ((mask << 1) | (mask >> 2)) & 7;
        if (rotated == mask)
            ++stable;
    }
    CHECK(stable == ctx.facets.size());

    // The rotation linear part realizes a 3-cycle of W0.
    CHECK(matrix_order(ctx.facet_twist) == 3);
    CHECK_FALSE(ctx.symmetries.empty());
}

TEST_CASE("diagram rotation validation") {
    RootDatum sp4 = sp4_datum();
    FrobeniusDescriptor f = split_frobenius(sp4, 3, 3);
    f.diagram_rotation = std::vector<long long>{1}; // C2 diagram is not a cycle
    CHECK_THROWS_AS(make_building_context(sp4, f), validation_error);
    f.diagram_rotation = std::vector<long long>{0};
    CHECK(make_building_context(sp4, f).facets.size() == 7);
    f.diagram_rotation = std::vector<long long>{0, 0};
    CHECK_THROWS_AS(make_building_context(sp4, f), validation_error); // one entry per component
}

TEST_CASE("alcove geometry bounds the roots") {
    // Every positive root takes values in [0,1] on the closed fundamental
    // alcove (highest-root maximality); checking all barycenters covers the
    // vertices and hence the whole simplex.
    for (const RootDatum& rd :
         {sl2_datum(), pgl2_datum(), gl_datum(2), gl_datum(3), sp4_datum(), so5_datum()}) {
        BuildingContext ctx = split_context(rd, 3);
        for (const auto& facet : ctx.facets)
            for (const auto& root : rd.roots) {
                bool positive = true;
                for (const auto& c : simple_coefficients(rd, root))
                    positive = positive && c.num >= 0;
                if (!positive)
                    continue;
                Rational value = pair_int(root, facet.barycenter);
                CHECK(Rational(0) <= value);
                CHECK(value <= Rational(1));
            }
    }
}

TEST_CASE("parahoric quotients") {
    BuildingContext sl2 = split_context(sl2_datum(), 3);
    RootDatum iwahori = parahoric_quotient(sl2.rd, sl2.nodes, sl2.facets[0]);
    CHECK(iwahori.is_torus());
    RootDatum vertex = parahoric_quotient(sl2.rd, sl2.nodes, sl2.facets[1]);
    CHECK(vertex.roots.size() == 2);

    BuildingContext sp4 = split_context(sp4_datum(), 3);
    int middle = -1;
    for (size_t i = 0; i < sp4.facets.size(); ++i)
        if (sp4.facets[i].barycenter == rv({Rational(1, 2), Rational(0)}))
            middle = static_cast<int>(i);
    REQUIRE(middle >= 0);
    RootDatum quot = parahoric_quotient(sp4.rd, sp4.nodes, sp4.facets[static_cast<size_t>(middle)]);
    CHECK(quot.roots == std::vector<std::vector<long long>>{{-2, 0}, {0, -2}, {0, 2}, {2, 0}});

    // The quotient Weyl group is the facet reflection subgroup, on every facet
    // of every grid group.
    for (const RootDatum& rd :
         {sl2_datum(), pgl2_datum(), gl_datum(2), gl_datum(3), sp4_datum(), so5_datum()}) {
        BuildingContext ctx = split_context(rd, 3);
        for (size_t i = 0; i < ctx.facets.size(); ++i) {
            RootDatum q = parahoric_quotient(rd, ctx.nodes, ctx.facets[i]);
            WeylGroup wq = generate_weyl(q);
            CHECK(wq.elements == ctx.facet_groups[i].elements);
        }
    }
}

TEST_CASE("psi and face restriction") {
    BuildingContext sp4 = split_context(sp4_datum(), 3);
    int chamber = sp4.facet_index({});
    REQUIRE(chamber >= 0);

    // The two middle-vertex classes (1/2,0) and (0,1/2) are distinct classes
    // there but have the same parameter.
    int middle = -1, hyper1 = -1, hyper2 = -1;
    for (size_t i = 0; i < sp4.facets.size(); ++i) {
        if (sp4.facets[i].nodes.size() != 2)
            continue;
        if (sp4.facets[i].barycenter == rv({Rational(1, 2), Rational(0)}))
            middle = static_cast<int>(i);
        else if (sp4.facets[i].barycenter == zero_vector(2))
            hyper1 = static_cast<int>(i);
        else
            hyper2 = static_cast<int>(i);
    }
    REQUIRE(middle >= 0);
    REQUIRE(hyper1 >= 0);
    REQUIRE(hyper2 >= 0);

    const auto& wm = sp4.facet_groups[static_cast<size_t>(middle)].elements;
    RatVec a = canonical_rep(rv({Rational(1, 2), Rational(0)}), wm);
    RatVec b = canonical_rep(rv({Rational(0), Rational(1, 2)}), wm);
    CHECK(a != b);
    CHECK(psi_sigma(sp4, a) == psi_sigma(sp4, b));

    // Restriction from the chamber: the class stays (1/2,0) at the sign-change
    // vertex and canonicalizes to (0,1/2) where the facet group is all of W0.
    RatVec chamber_class = rv({Rational(1, 2), Rational(0)});
    CHECK(face_restriction(sp4, chamber, middle, chamber_class) ==
          rv({Rational(1, 2), Rational(0)}));
    CHECK(face_restriction(sp4, chamber, hyper1, chamber_class) ==
          rv({Rational(0), Rational(1, 2)}));
    CHECK(face_restriction(sp4, chamber, hyper2, chamber_class) ==
          rv({Rational(0), Rational(1, 2)}));
    CHECK(face_restriction(sp4, chamber, chamber, chamber_class) == chamber_class);
    CHECK_THROWS_AS(face_restriction(sp4, middle, chamber, a), validation_error);

    // Composition law: psi is unchanged by face restriction, for all classes
    // of all fibers at level 8.
    for (const auto& phi : enumerate_inertial_params(sp4.rd, sp4.frob, sp4.w0, 8, Lambda::Qlbar)) {
        ClassSystem s = compute_S_phi(sp4, phi);
        for (size_t from = 0; from < sp4.facets.size(); ++from)
            for (size_t to = 0; to < sp4.facets.size(); ++to) {
                const auto& ja = sp4.facets[from].nodes;
                const auto& jb = sp4.facets[to].nodes;
                if (!std::includes(jb.begin(), jb.end(), ja.begin(), ja.end()))
                    continue;
                for (const auto& rep : s.classes[from])
                    CHECK(psi_sigma(sp4, face_restriction(sp4, static_cast<int>(from),
                                                          static_cast<int>(to), rep)) ==
                          psi_sigma(sp4, rep));
            }
    }
}

TEST_CASE("fiber systems") {
    BuildingContext sl2 = split_context(sl2_datum(), 3);
    InertialParam triv = param(sl2, rv({Rational(0)}));
    ClassSystem s0 = compute_S_phi(sl2, triv);
    for (const auto& classes : s0.classes) {
        REQUIRE(classes.size() == 1);
        CHECK(is_zero(classes[0]));
    }

    // q=3: the order-4 parameter has an empty Iwahori fiber and singleton
    // vertex fibers; q=5 fills the Iwahori fiber with both vectors.
    InertialParam quarter = param(sl2, rv({Rational(1, 4)}));
    ClassSystem s3 = compute_S_phi(sl2, quarter);
    CHECK(s3.classes[0].empty());
    CHECK(s3.classes[1].size() == 1);
    CHECK(s3.classes[2].size() == 1);

    BuildingContext sl2_5 = split_context(sl2_datum(), 5);
    ClassSystem s5 = compute_S_phi(sl2_5, param(sl2_5, rv({Rational(1, 4)})));
    CHECK(s5.classes[0] == std::vector<RatVec>{rv({Rational(1, 4)}), rv({Rational(3, 4)})});

    CHECK(is_attained(sl2, quarter));
    CHECK(is_attained(sl2, triv));
}

TEST_CASE("attainability under the division twist") {
    RootDatum gl3 = gl_datum(3);
    FrobeniusDescriptor f = split_frobenius(gl3, 2, 2);
    f.diagram_rotation = std::vector<long long>{1};
    BuildingContext ctx = make_building_context(gl3, f);

    InertialParam bad = param(ctx, rv({Rational(1, 3), Rational(2, 3), Rational(0)}));
    CHECK_FALSE(is_attained(ctx, bad));
    InertialParam good = param(ctx, rv({Rational(1, 7), Rational(2, 7), Rational(4, 7)}));
    CHECK(is_attained(ctx, good));
    CHECK(is_attained(ctx, param(ctx, zero_vector(3))));
}

TEST_CASE("zero coherence") {
    BuildingContext sl2 = split_context(sl2_datum(), 3);
    for (const auto& phi : enumerate_inertial_params(sl2.rd, sl2.frob, sl2.w0, 8, Lambda::Qlbar))
        CHECK(verify_zero_coherence(sl2, compute_S_phi(sl2, phi)).pass);

    BuildingContext sp4 = split_context(sp4_datum(), 3);
    for (const auto& phi : enumerate_inertial_params(sp4.rd, sp4.frob, sp4.w0, 8, Lambda::Qlbar))
        CHECK(verify_zero_coherence(sp4, compute_S_phi(sp4, phi)).pass);

    // Deleting a vertex class of the trivial system breaks the face condition.
    ClassSystem broken = compute_S_phi(sl2, param(sl2, rv({Rational(0)})));
    broken.classes[1].clear();
    CheckReport r = verify_zero_coherence(sl2, broken);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("face pair") != std::string::npos);

    // The everything-system passes (preimages of everything).
    ClassSystem everything;
    everything.classes.resize(sl2.facets.size());
    for (size_t i = 0; i < sl2.facets.size(); ++i) {
        std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> reps(lex_less);
        for (const auto& v : all_level_vectors(1, 8)) {
            RatVec rep = canonical_rep(v, sl2.facet_groups[i].elements);
            if (order_invertible(class_order(rep), sl2.frob, Lambda::Qlbar) &&
                canonical_rep(facet_frobenius_image(sl2, rep), sl2.facet_groups[i].elements) ==
                    rep)
                reps.insert(rep);
        }
        everything.classes[i].assign(reps.begin(), reps.end());
    }
    CHECK(verify_zero_coherence(sl2, everything).pass);

    // PGL2 has the affine flip symmetry; moving one vertex class without the
    // other breaks the equivariance condition.
    BuildingContext pgl2 = split_context(pgl2_datum(), 3);
    CHECK_FALSE(pgl2.symmetries.empty());
    InertialParam half = param(pgl2, rv({Rational(1, 2)}));
    ClassSystem shalf = compute_S_phi(pgl2, half);
    CHECK(verify_zero_coherence(pgl2, shalf).pass);
}

TEST_CASE("partition of classes at every facet") {
    BuildingContext sl2 = split_context(sl2_datum(), 3);
    PartitionReport triv = verify_partition(sl2, 1, Lambda::Qlbar);
    CHECK(triv.pass);
    PartitionReport p8 = verify_partition(sl2, 8, Lambda::Qlbar);
    CHECK(p8.pass);
    CHECK(p8.facet_class_counts == std::vector<size_t>{2, 3, 3});

    BuildingContext sp4 = split_context(sp4_datum(), 3);
    CHECK(verify_partition(sp4, 8, Lambda::Qlbar).pass);
    CHECK_THROWS_AS(verify_partition(sp4, 6, Lambda::Qlbar), validation_error);

    // Division algebra at the prime level: 1 + 3 + 3 fixed vectors.
    RootDatum gl3 = gl_datum(3);
    FrobeniusDescriptor f = split_frobenius(gl3, 2, 2);
    f.diagram_rotation = std::vector<long long>{1};
    BuildingContext div = make_building_context(gl3, f);
    PartitionReport p7 = verify_partition(div, 7, Lambda::Qlbar);
    CHECK(p7.pass);
    CHECK(p7.facet_class_counts == std::vector<size_t>{7});
}

TEST_CASE("apartment symmetry groups") {
    // Lattice-accurate alcove symmetries: the simply connected groups are
    // type-preserving, the adjoint and GL types carry the diagram rotations.
    CHECK(split_context(sl2_datum(), 3).symmetries.empty());
    CHECK(split_context(pgl2_datum(), 3).symmetries.size() == 1);
    CHECK(split_context(gl_datum(2), 3).symmetries.size() == 1);
    CHECK(split_context(gl_datum(3), 3).symmetries.size() == 2);
    CHECK(split_context(sp4_datum(), 3).symmetries.empty());
    CHECK(split_context(so5_datum(), 3).symmetries.size() == 1);

    // The unramified quadratic twist kills the GL2 vertex identification: no
    // theta-fixed integral translation realizes the flip.
    RootDatum gl2 = gl_datum(2);
    FrobeniusDescriptor fu = split_frobenius(gl2, 3, 3);
    fu.theta = gl_flip(gl2);
    CHECK(make_building_context(gl2, fu).symmetries.empty());

    // Transport along a symmetry never changes the parameter, and maps facet
    // groups onto each other.
    BuildingContext gl3 = split_context(gl_datum(3), 3);
    for (const auto& sym : gl3.symmetries)
        for (size_t a = 0; a < gl3.facets.size(); ++a) {
            std::vector<int> jb;
            for (int x : gl3.facets[a].nodes)
                jb.push_back(sym.node_perm[static_cast<size_t>(x)]);
            std::sort(jb.begin(), jb.end());
            int b = gl3.facet_index(jb);
            REQUIRE(b >= 0);
            for (const auto& v : all_level_vectors(3, 4)) {
                RatVec rep = canonical_rep(v, gl3.facet_groups[a].elements);
                RatVec moved = canonical_rep(mat_vec(sym.transport, rep),
                                             gl3.facet_groups[static_cast<size_t>(b)].elements);
                CHECK(psi_sigma(gl3, moved) == psi_sigma(gl3, rep));
            }
        }
}

TEST_CASE("reducible datum with component-swapping frobenius") {
    // SL2 x SL2 with theta exchanging the two factors.
    RootDatum rd;
    rd.rank = 2;
    rd.name = "SL2xSL2";
    rd.roots = {{2, 0}, {-2, 0}, {0, 2}, {0, -2}};
    rd.coroots = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    rd.simple = {0, 2};
    rd = validate_root_datum(std::move(rd));

    BuildingContext split = split_context(rd, 3);
    CHECK(split.facets.size() == 9); // 3 proper subsets per component
    CHECK(verify_partition(split, 4, Lambda::Qlbar).pass);

    IntMat swap(2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    FrobeniusDescriptor f = split_frobenius(rd, 3, 3);
    f.theta = based_automorphism(rd, swap);
    BuildingContext twisted = make_building_context(rd, f);
    CHECK(twisted.facets.size() == 3); // swap-stable pairs of subsets
    CHECK(verify_partition(twisted, 4, Lambda::Qlbar).pass);
    for (const auto& phi : enumerate_inertial_params(rd, f, twisted.w0, 4, Lambda::Qlbar))
        CHECK(verify_zero_coherence(twisted, compute_S_phi(twisted, phi)).pass);
}

TEST_CASE("hyperspecial bijectivity for split data") {
    for (const RootDatum& rd :
         {sl2_datum(), pgl2_datum(), gl_datum(2), gl_datum(3), sp4_datum()}) {
        BuildingContext ctx = split_context(rd, 3);
        // The facet whose nodes are exactly the finite simple nodes.
        std::vector<int> finite_nodes;
        for (size_t i = 0; i < ctx.nodes.size(); ++i)
            if (ctx.nodes[i].offset == 0)
                finite_nodes.push_back(static_cast<int>(i));
        int hyper = ctx.facet_index(finite_nodes);
        REQUIRE(hyper >= 0);
        auto params = enumerate_inertial_params(rd, ctx.frob, ctx.w0, 8, Lambda::Qlbar);
        for (const auto& phi : params) {
            ClassSystem s = compute_S_phi(ctx, phi);
            CHECK(s.classes[static_cast<size_t>(hyper)].size() == 1);
            CHECK(is_attained(ctx, phi));
        }
    }
}
