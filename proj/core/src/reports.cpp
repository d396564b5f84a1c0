#include "tameblocks/reports.hpp"

#include "tameblocks/building.hpp"
#include "tameblocks/classical_poly.hpp"
#include "tameblocks/errors.hpp"
#include "tameblocks/levi.hpp"
#include "tameblocks/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

namespace tameblocks {

using nlohmann::json;

namespace {

json vec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.str());
    return a;
}

json classes_json(const std::vector<RatVec>& classes) {
    json a = json::array();
    for (const auto& c : classes)
        a.push_back(vec_json(c));
    return a;
}

std::string hash_hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

json header_json(const GroupSpec& spec) {
    json doc;
    doc["group"] = spec.name;
    doc["library_version"] = library_version;
    doc["spec_hash"] = hash_hex(spec.source_hash);
    doc["q"] = spec.frob.q;
    doc["p"] = spec.frob.p;
    if (spec.frob.ell)
        doc["ell"] = *spec.frob.ell;
    doc["lambda"] = spec.frob.lambda == Lambda::Qlbar ? "Qlbar" : "Zlbar";
    return doc;
}

json facets_json(const BuildingContext& ctx) {
    json facets = json::array();
    for (size_t i = 0; i < ctx.facets.size(); ++i) {
        json f;
        f["key"] = ctx.facets[i].key();
        f["nodes"] = ctx.facets[i].nodes;
        f["barycenter"] = vec_json(ctx.facets[i].barycenter);
        RootDatum quot = parahoric_quotient(ctx.rd, ctx.nodes, ctx.facets[i]);
        f["quotient"] = {{"roots", quot.roots.size()},
                         {"weyl_order", ctx.facet_groups[i].order()}};
        facets.push_back(std::move(f));
    }
    return facets;
}

void check_level(const GroupSpec& spec, long long n) {
    if (n <= 0)
        throw validation_error("order bound N must be positive");
    if (n % spec.frob.p == 0)
        throw validation_error("p divides N");
}

} // namespace

RunResult run_decompose(const GroupSpec& spec, long long n, ReportFormat format) {
    check_level(spec, n);
    BuildingContext ctx = make_building_context(spec.rd, spec.frob);
    Lambda lambda = spec.frob.lambda;
    auto params = enumerate_inertial_params(spec.rd, spec.frob, ctx.w0, n, lambda);

    bool proxy = connectedness_is_proxy(spec.rd);
    bool all_attained = true;
    bool all_coherent = true;

    json jparams = json::array();
    std::vector<std::array<std::string, 3>> csv_rows;
    for (const auto& phi : params) {
        ClassSystem s = compute_S_phi(ctx, phi);
        bool attained = false;
        json js;
        for (size_t i = 0; i < ctx.facets.size(); ++i) {
            js[ctx.facets[i].key()] = classes_json(s.classes[i]);
            attained = attained || !s.classes[i].empty();
            for (const auto& rep : s.classes[i])
                csv_rows.push_back({ctx.facets[i].key(), str(phi.rep), str(rep)});
        }
        all_attained = all_attained && attained;
        all_coherent = all_coherent && verify_zero_coherence(ctx, s).pass;
        json p;
        p["class"] = vec_json(phi.rep);
        p["order"] = phi.order;
        p["attained"] = attained;
        p["connected"] = centralizer_connected(phi, spec.rd, ctx.w0);
        p["connectedness_proxy"] = proxy;
        p["S"] = std::move(js);
        jparams.push_back(std::move(p));
    }

    PartitionReport partition = verify_partition(ctx, n, lambda);

    if (format == ReportFormat::Csv) {
        std::ostringstream os;
        os << "facet,parameter,class\n";
        std::sort(csv_rows.begin(), csv_rows.end());
        for (const auto& row : csv_rows)
            os << row[0] << "," << row[1] << "," << row[2] << "\n";
        return RunResult{partition.pass ? 0 : 1, os.str()};
    }

    json doc = header_json(spec);
    doc["command"] = "decompose";
    doc["N"] = n;
    doc["facets"] = facets_json(ctx);
    doc["parameters"] = std::move(jparams);
    json full;
    {
        // Level-N class universe per facet, the partition target.
        for (size_t i = 0; i < ctx.facets.size(); ++i) {
            std::vector<RatVec> classes;
            for (const auto& phi : params) {
                ClassSystem s = compute_S_phi(ctx, phi);
                classes.insert(classes.end(), s.classes[i].begin(), s.classes[i].end());
            }
            std::sort(classes.begin(), classes.end(), lex_less);
            full[ctx.facets[i].key()] = classes_json(classes);
        }
    }
    doc["S"] = std::move(full);
    doc["checks"] = {{"partition", partition.pass},
                     {"coherence", all_coherent},
                     {"attained", all_attained}};
    if (!partition.pass)
        doc["partition_failure"] = partition.detail;
    doc["symmetry_scope"] = "apartment";
    doc["symmetries"] = ctx.symmetries.size();
    return RunResult{partition.pass ? 0 : 1, doc.dump(2) + "\n"};
}

RunResult run_coherence(const GroupSpec& spec, long long n) {
    check_level(spec, n);
    BuildingContext ctx = make_building_context(spec.rd, spec.frob);
    auto params = enumerate_inertial_params(spec.rd, spec.frob, ctx.w0, n, spec.frob.lambda);

    bool all_pass = true;
    bool composition_ok = true;
    json jparams = json::array();
    for (const auto& phi : params) {
        ClassSystem s = compute_S_phi(ctx, phi);
        CheckReport r = verify_zero_coherence(ctx, s);
        all_pass = all_pass && r.pass;
        // Composition law: the parameter of a class is unchanged by passing
        // to a face.
        for (size_t a = 0; a < ctx.facets.size() && composition_ok; ++a)
            for (size_t b = 0; b < ctx.facets.size() && composition_ok; ++b) {
                const auto& ja = ctx.facets[a].nodes;
                const auto& jb = ctx.facets[b].nodes;
                if (!std::includes(jb.begin(), jb.end(), ja.begin(), ja.end()))
                    continue;
                for (const auto& rep : s.classes[a])
                    if (psi_sigma(ctx, face_restriction(ctx, static_cast<int>(a),
                                                        static_cast<int>(b), rep)) !=
                        psi_sigma(ctx, rep))
                        composition_ok = false;
            }
        json p;
        p["class"] = vec_json(phi.rep);
        p["coherent"] = r.pass;
        if (!r.pass)
            p["failure"] = r.detail;
        jparams.push_back(std::move(p));
    }

    json doc = header_json(spec);
    doc["command"] = "coherence";
    doc["N"] = n;
    doc["parameters"] = std::move(jparams);
    doc["checks"] = {{"coherence", all_pass}, {"composition", composition_ok}};
    doc["symmetry_scope"] = "apartment";
    return RunResult{all_pass && composition_ok ? 0 : 1, doc.dump(2) + "\n"};
}

RunResult run_fibers(const GroupSpec& spec, const std::vector<int>& levi_positions, long long n) {
    check_level(spec, n);
    BuildingContext ctx = make_building_context(spec.rd, spec.frob);
    LeviContext m = make_levi_context(spec.rd, spec.frob, levi_positions);
    auto params = enumerate_inertial_params(spec.rd, spec.frob, ctx.w0, n, spec.frob.lambda);

    bool roundtrip_ok = true;
    json jparams = json::array();
    for (const auto& phi : params) {
        json p;
        p["class"] = vec_json(phi.rep);
        p["order"] = phi.order;
        auto witness = discreteness_witness(phi, spec.rd, spec.frob, ctx.w0);
        p["discrete"] = !witness.has_value();
        if (witness) {
            json w;
            w["levi"] = witness->levi_positions;
            w["vector"] = vec_json(witness->vector);
            p["discreteness_witness"] = std::move(w);
        }
        json fibers = json::array();
        for (const auto& rep : restriction_fibers(phi, m, ctx.w0, spec.frob)) {
            json fj;
            fj["class"] = vec_json(rep);
            fj["equivalence_criterion"] =
                satisfies_equivalence_criterion(rep, m, spec.rd, ctx.w0);
            InertialParam back = levi_param_map(rep, ctx.w0, spec.frob, spec.frob.lambda);
            roundtrip_ok = roundtrip_ok && back.rep == phi.rep;
            fibers.push_back(std::move(fj));
        }
        p["fibers"] = std::move(fibers);
        jparams.push_back(std::move(p));
    }

    json doc = header_json(spec);
    doc["command"] = "fibers";
    doc["N"] = n;
    doc["levi"] = levi_positions;
    doc["parameters"] = std::move(jparams);
    doc["checks"] = {{"roundtrip", roundtrip_ok}};
    return RunResult{roundtrip_ok ? 0 : 1, doc.dump(2) + "\n"};
}

namespace {

// Standard-coordinate classical family of a root datum, if any.
std::optional<ClassicalType> classify_classical(const RootDatum& rd) {
    int n = rd.rank;
    std::set<std::vector<long long>> roots(rd.roots.begin(), rd.roots.end());
    auto unit = [&](int i, long long s) {
        std::vector<long long> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(i)] = s;
        return v;
    };
    auto two_coord = [&](int i, int j, long long si, long long sj) {
        std::vector<long long> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(i)] = si;
        v[static_cast<size_t>(j)] = sj;
        return v;
    };
    std::set<std::vector<long long>> dn, bn, cn;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (long long si : {1ll, -1ll})
                for (long long sj : {1ll, -1ll}) {
                    dn.insert(two_coord(i, j, si, sj));
                }
    bn = dn;
    cn = dn;
    for (int i = 0; i < n; ++i) {
        bn.insert(unit(i, 1));
        bn.insert(unit(i, -1));
        cn.insert(unit(i, 2));
        cn.insert(unit(i, -2));
    }
    if (roots == cn)
        return ClassicalType{ClassicalFamily::OddOrthogonal, n}; // G symplectic
    if (roots == bn)
        return ClassicalType{ClassicalFamily::Symplectic, n}; // G odd orthogonal
    if (n >= 2 && roots == dn)
        return ClassicalType{ClassicalFamily::EvenOrthogonal, n};
    return std::nullopt;
}

} // namespace

RunResult run_classical(const GroupSpec& spec, long long n) {
    check_level(spec, n);
    auto family = classify_classical(spec.rd);
    if (!family)
        throw validation_error("group is not a classical family in standard coordinates");
    BuildingContext ctx = make_building_context(spec.rd, spec.frob);

    size_t total_classes = 0, failures = 0;
    json vertices = json::array();
    for (size_t i = 0; i < ctx.facets.size(); ++i) {
        // Alcove vertices: one non-vanishing node per component.
        if (ctx.facets[i].nodes.size() != static_cast<size_t>(ctx.nodes.size()) -
                                              static_cast<size_t>(components(spec.rd).size()))
            continue;
        // Coordinate blocks from the barycenter: entries congruent to 1/2 vs 0.
        std::vector<int> half, zero;
        for (int c = 0; c < spec.rd.rank; ++c) {
            Rational frac = ctx.facets[i].barycenter[static_cast<size_t>(c)].mod1();
            if (frac == Rational(1, 2))
                half.push_back(c);
            else if (frac.is_zero())
                zero.push_back(c);
            else
                throw validation_error("vertex barycenter is not half-integral");
        }

        std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> classes(lex_less);
        for (const auto& v : all_level_vectors(spec.rd.rank, n)) {
            RatVec rep = canonical_rep(v, ctx.facet_groups[i].elements);
            if (!classes.count(rep) &&
                order_invertible(class_order(rep), spec.frob, spec.frob.lambda) &&
                canonical_rep(facet_frobenius_image(ctx, rep), ctx.facet_groups[i].elements) ==
                    rep)
                classes.insert(rep);
        }

        json jv;
        jv["facet"] = ctx.facets[i].key();
        jv["half_block"] = half;
        jv["zero_block"] = zero;
        size_t vertex_failures = 0;
        for (const auto& rep : classes) {
            RatVec s1, s2;
            for (int c : half)
                s1.push_back(rep[static_cast<size_t>(c)]);
            for (int c : zero)
                s2.push_back(rep[static_cast<size_t>(c)]);
            CompatibilityReport r = verify_compatibility(s1, s2, *family, spec.frob.q);
            ++total_classes;
            if (!r.pass) {
                ++failures;
                ++vertex_failures;
                if (!jv.contains("first_failure"))
                    jv["first_failure"] = {{"class", vec_json(rep)}, {"detail", r.detail}};
            }
        }
        jv["classes"] = classes.size();
        jv["failures"] = vertex_failures;
        vertices.push_back(std::move(jv));
    }

    json doc = header_json(spec);
    doc["command"] = "classical";
    doc["N"] = n;
    doc["family"] = family->family == ClassicalFamily::OddOrthogonal  ? "dual-odd-orthogonal"
                    : family->family == ClassicalFamily::Symplectic   ? "dual-symplectic"
                    : family->family == ClassicalFamily::EvenOrthogonal ? "even-orthogonal"
                                                                        : "unitary";
    doc["vertices"] = std::move(vertices);
    doc["classes_checked"] = total_classes;
    doc["checks"] = {{"compatibility", failures == 0}};
    return RunResult{failures == 0 ? 0 : 1, doc.dump(2) + "\n"};
}

RunResult run_dual(const GroupSpec& spec) {
    if (spec.frob.diagram_rotation)
        throw validation_error("dual of an inner-twist spec (diagram_rotation) is not defined");
    GroupSpec dual;
    dual.name = spec.name;
    dual.rd = dual_root_datum(spec.rd);
    dual.frob = spec.frob;
    dual.frob.theta = transpose_automorphism(spec.rd, spec.frob.theta);
    dual.source_hash = spec.source_hash;
    return RunResult{0, serialize_group_spec(dual)};
}

} // namespace tameblocks
