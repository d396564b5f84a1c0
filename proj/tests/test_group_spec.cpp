#include "tameblocks/errors.hpp"
#include "tameblocks/group_spec.hpp"
#include "tameblocks/reports.hpp"
#include "tameblocks/inertial_params.hpp"
#include "tameblocks/standard_groups.hpp"
#include "tameblocks/version.hpp"

#include <doctest.h>

using namespace tameblocks;

namespace {

GroupSpec sl2_spec(long long q = 3) {
    GroupSpec spec;
    spec.name = "sl2";
    spec.rd = sl2_datum();
    spec.frob = split_frobenius(spec.rd, q, q);
    return spec;
}

} // namespace

TEST_CASE("spec round trip") {
    GroupSpec spec = sl2_spec();
    std::string text = serialize_group_spec(spec);
    GroupSpec parsed = parse_group_spec(text);
    CHECK(parsed.name == "sl2");
    CHECK(parsed.rd.roots == spec.rd.roots);
    CHECK(parsed.frob.q == 3);
    CHECK(serialize_group_spec(parsed) == text); // fixed point
    CHECK(parsed.source_hash == fnv1a_hash(text));
}

TEST_CASE("spec parsing errors") {
    CHECK_THROWS_AS(parse_group_spec("not json"), validation_error);
    CHECK_THROWS_AS(parse_group_spec("{}"), validation_error);
    std::string text = serialize_group_spec(sl2_spec());
    {
        auto broken = text;
        auto pos = broken.find("\"q\": 3");
        REQUIRE(pos != std::string::npos);
        broken.replace(pos, 6, "\"q\": 6"); // not a power of p
        CHECK_THROWS_AS(parse_group_spec(broken), validation_error);
    }
    {
        auto broken = text;
        auto pos = broken.find("Qlbar");
        REQUIRE(pos != std::string::npos);
        broken.replace(pos, 5, "Flbar");
        CHECK_THROWS_AS(parse_group_spec(broken), validation_error);
    }
}

TEST_CASE("decompose report determinism and exit codes") {
    GroupSpec spec = sl2_spec();
    RunResult a = run_decompose(spec, 8);
    RunResult b = run_decompose(spec, 8);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output); // byte identical

    RunResult csv = run_decompose(spec, 8, ReportFormat::Csv);
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("facet,parameter,class\n", 0) == 0);

    CHECK_THROWS_AS(run_decompose(spec, 6), validation_error); // p | N
}

TEST_CASE("coherence and fibers reports") {
    GroupSpec spec = sl2_spec();
    CHECK(run_coherence(spec, 8).exit_code == 0);
    CHECK(run_fibers(spec, {}, 8).exit_code == 0);
    CHECK(run_fibers(spec, {0}, 8).exit_code == 0);
}

TEST_CASE("reports embed the spec hash and library version") {
    GroupSpec spec = parse_group_spec(serialize_group_spec(sl2_spec()));
    std::string out = run_decompose(spec, 8).output;
    CHECK(out.find("spec_hash") != std::string::npos);
    CHECK(out.find(library_version) != std::string::npos);
    CHECK(out.find("symmetry_scope") != std::string::npos);
}

TEST_CASE("classical report") {
    GroupSpec sp4{"sp4", sp4_datum(), split_frobenius(sp4_datum(), 3, 3), 0};
    CHECK(run_classical(sp4, 8).exit_code == 0);
    GroupSpec so5{"so5", so5_datum(), split_frobenius(so5_datum(), 3, 3), 0};
    CHECK(run_classical(so5, 8).exit_code == 0);
    GroupSpec sl2 = sl2_spec(); // SL2 = Sp2, family C1
    CHECK(run_classical(sl2, 8).exit_code == 0);
    GroupSpec gl2{"gl2", gl_datum(2), split_frobenius(gl_datum(2), 3, 3), 0};
    CHECK_THROWS_AS(run_classical(gl2, 8), validation_error); // not standard coordinates
}

TEST_CASE("dual command is an involution") {
    for (const RootDatum& rd : {sl2_datum(), gl_datum(2), sp4_datum(), so5_datum()}) {
        GroupSpec spec{rd.name, rd, split_frobenius(rd, 3, 3), 0};
        std::string once = run_dual(spec).output;
        GroupSpec dual_spec = parse_group_spec(once);
        std::string twice = run_dual(dual_spec).output;
        CHECK(twice == serialize_group_spec(spec));
    }
    GroupSpec rot{"gl3d", gl_datum(3), split_frobenius(gl_datum(3), 2, 2), 0};
    rot.frob.diagram_rotation = std::vector<long long>{1};
    CHECK_THROWS_AS(run_dual(rot), validation_error);
}

TEST_CASE("torus spec decomposes into its fixed vectors") {
    GroupSpec torus{"t2", torus_datum(2), split_frobenius(torus_datum(2), 3, 3), 0};
    GroupSpec parsed = parse_group_spec(serialize_group_spec(torus));
    RunResult r = run_decompose(parsed, 4);
    CHECK(r.exit_code == 0);
    // Parameters of a torus are the Frobenius-fixed vectors: 3v = v at level 4
    // means 2v = 0, four of them; a single facet carries them all.
    CHECK(r.output.find("\"J={}\"") != std::string::npos);
    WeylGroup w = generate_weyl(parsed.rd);
    CHECK(enumerate_inertial_params(parsed.rd, parsed.frob, w, 4, Lambda::Qlbar).size() == 4);
}

TEST_CASE("flip twist round trips through the spec format") {
    GroupSpec u2{"u2", gl_datum(2), split_frobenius(gl_datum(2), 3, 3), 0};
    u2.frob.theta = gl_flip(gl_datum(2));
    GroupSpec parsed = parse_group_spec(serialize_group_spec(u2));
    CHECK(parsed.frob.theta.matrix == u2.frob.theta.matrix);
    CHECK(parsed.frob.theta.order == 2);
    CHECK(run_decompose(parsed, 8).exit_code == 0);
}
