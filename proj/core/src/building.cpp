#include "tameblocks/building.hpp"

#include "tameblocks/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tameblocks {

namespace {

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::vector<int> compose_perm(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> r(inner.size());
    for (size_t i = 0; i < inner.size(); ++i)
        r[i] = outer[static_cast<size_t>(inner[i])];
    return r;
}

// Node permutation induced by theta: simple nodes through the base action,
// affine nodes through the image of the highest root.
std::vector<int> theta_node_perm(const std::vector<AffineNode>& nodes, const IntMat& theta) {
    std::vector<int> perm(nodes.size(), -1);
    for (size_t i = 0; i < nodes.size(); ++i) {
        auto img = mat_vec(theta, nodes[i].linear);
        for (size_t j = 0; j < nodes.size(); ++j)
            if (nodes[j].offset == nodes[i].offset && nodes[j].linear == img) {
                perm[i] = static_cast<int>(j);
                break;
            }
        if (perm[i] < 0)
            throw validation_error("theta does not act on the affine diagram");
    }
    return perm;
}

// Solves for the linear part w in W0 realizing a node permutation pi:
// w * linear_i = linear_{pi(i)} with a rationally consistent wall-offset
// translation. Used to transport classes along diagram rotations.
struct Realization {
    IntMat w;
    bool found = false;
};

Realization realize_node_perm(const BuildingContext& ctx, const std::vector<int>& pi) {
    const auto& nodes = ctx.nodes;
    for (const auto& w : ctx.w0.elements) {
        bool linear_ok = true;
        for (size_t i = 0; i < nodes.size() && linear_ok; ++i)
            linear_ok = mat_vec(w, nodes[i].linear) == nodes[static_cast<size_t>(pi[i])].linear;
        if (!linear_ok)
            continue;
        // Offset equations <linear_{pi(i)}, t> = offset_i - offset_{pi(i)},
        // solved over Q by Gaussian elimination.
        size_t m = nodes.size(), n = static_cast<size_t>(ctx.rd.rank);
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < n; ++j)
                a[i][j] = Rational(nodes[static_cast<size_t>(pi[i])].linear[j]);
            a[i][n] = Rational(nodes[i].offset - nodes[static_cast<size_t>(pi[i])].offset);
        }
        size_t row = 0;
        for (size_t col = 0; col < n && row < m; ++col) {
            size_t p = row;
            while (p < m && a[p][col].is_zero())
                ++p;
            if (p == m)
                continue;
            std::swap(a[row], a[p]);
            Rational inv(a[row][col].den, a[row][col].num);
            for (size_t j = col; j <= n; ++j)
                a[row][j] = a[row][j] * inv;
            for (size_t i = 0; i < m; ++i) {
                if (i == row || a[i][col].is_zero())
                    continue;
                Rational f = a[i][col];
                for (size_t j = col; j <= n; ++j)
                    a[i][j] = a[i][j] - f * a[row][j];
            }
            ++row;
        }
        bool consistent = true;
        for (size_t i = row; i < m; ++i)
            if (!a[i][n].is_zero())
                consistent = false;
        if (consistent)
            return Realization{w, true};
    }
    return Realization{};
}

// Orders a component's affine diagram as a cycle [affine, end, ..., other end]
// when it has type A; empty otherwise.
std::vector<int> component_cycle(const RootDatum& rd, const std::vector<AffineNode>& nodes,
                                 int comp) {
    std::map<std::vector<long long>, std::vector<long long>> coroot_of;
    for (size_t i = 0; i < rd.roots.size(); ++i)
        coroot_of[rd.roots[i]] = rd.coroots[i];
    std::vector<int> finite, affine;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].component != comp)
            continue;
        (nodes[i].offset == 0 ? finite : affine).push_back(static_cast<int>(i));
    }
    if (affine.size() != 1 || finite.empty())
        return {};
    auto adjacent = [&](int a, int b) {
        return dot(nodes[static_cast<size_t>(a)].linear,
                   coroot_of.at(nodes[static_cast<size_t>(b)].linear)) != 0;
    };
    if (finite.size() == 1)
        return {affine[0], finite[0]};
    std::vector<int> ends;
    for (int i : finite) {
        int deg = 0;
        for (int j : finite)
            if (i != j && adjacent(i, j))
                ++deg;
        if (deg == 1)
            ends.push_back(i);
    }
    if (ends.size() != 2)
        return {};
    // Type A requires the affine node adjacent to both ends.
    if (!adjacent(affine[0], ends[0]) || !adjacent(affine[0], ends[1]))
        return {};
    std::vector<int> path{std::min(ends[0], ends[1])};
    std::set<int> used{path[0]};
    while (path.size() < finite.size()) {
        bool advanced = false;
        for (int j : finite)
            if (!used.count(j) && adjacent(path.back(), j)) {
                path.push_back(j);
                used.insert(j);
                advanced = true;
                break;
            }
        if (!advanced)
            return {};
    }
    std::vector<int> cycle{affine[0]};
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
}

RatVec average(const std::vector<RatVec>& pts, int rank) {
    RatVec b = zero_vector(rank);
    for (const auto& p : pts)
        b = add(b, p);
    Rational f(1, static_cast<long long>(pts.size()));
    for (auto& x : b)
        x = x * f;
    return b;
}

// Alcove vertex attached to a finite node: the point of the component's
// coroot span where all other component simples vanish and the highest root
// evaluates to 1.
RatVec finite_node_vertex(const RootDatum& rd, const Component& comp, int which_simple) {
    size_t s = comp.simple_positions.size();
    std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s + 1));
    for (size_t j = 0; j < s; ++j) {
        for (size_t k = 0; k < s; ++k)
            a[j][k] = Rational(dot(rd.simple_root(comp.simple_positions[j]),
                                   rd.simple_coroot(comp.simple_positions[k])));
        a[j][s] = Rational(0);
    }
    long long mark = 0;
    size_t local = 0;
    for (size_t j = 0; j < s; ++j)
        if (comp.simple_positions[j] == which_simple) {
            local = j;
            mark = comp.marks[j];
        }
    a[local][s] = Rational(1, mark);
    // Gauss; the Cartan matrix of a semisimple component is invertible.
    for (size_t col = 0; col < s; ++col) {
        size_t p = col;
        while (p < s && a[p][col].is_zero())
            ++p;
        if (p == s)
            throw validation_error("degenerate Cartan matrix");
        std::swap(a[col], a[p]);
        Rational inv(a[col][col].den, a[col][col].num);
        for (size_t j = col; j <= s; ++j)
            a[col][j] = a[col][j] * inv;
        for (size_t i = 0; i < s; ++i) {
            if (i == col || a[i][col].is_zero())
                continue;
            Rational f = a[i][col];
            for (size_t j = col; j <= s; ++j)
                a[i][j] = a[i][j] - f * a[col][j];
        }
    }
    RatVec v = zero_vector(rd.rank);
    for (size_t k = 0; k < s; ++k) {
        const auto& coroot = rd.simple_coroot(comp.simple_positions[k]);
        for (int i = 0; i < rd.rank; ++i)
            v[static_cast<size_t>(i)] =
                v[static_cast<size_t>(i)] + a[k][s] * Rational(coroot[static_cast<size_t>(i)]);
    }
    return v;
}

} // namespace

std::string FacetType::key() const {
    std::ostringstream os;
    os << "J={";
    for (size_t i = 0; i < nodes.size(); ++i)
        os << (i ? "," : "") << nodes[i];
    os << "}";
    return os.str();
}

int BuildingContext::facet_index(const std::vector<int>& j) const {
    for (size_t i = 0; i < facets.size(); ++i)
        if (facets[i].nodes == j)
            return static_cast<int>(i);
    return -1;
}

RootDatum parahoric_quotient(const RootDatum& rd, const std::vector<AffineNode>& nodes,
                             const FacetType& facet) {
    RootDatum quot;
    quot.rank = rd.rank;
    quot.name = rd.name + "@" + facet.key();
    std::map<std::vector<long long>, size_t> pos;
    for (size_t i = 0; i < rd.roots.size(); ++i)
        if (pair_int(rd.roots[i], facet.barycenter).is_integer()) {
            pos[rd.roots[i]] = quot.roots.size();
            quot.roots.push_back(rd.roots[i]);
            quot.coroots.push_back(rd.coroots[i]);
        }
    for (int j : facet.nodes)
        quot.simple.push_back(static_cast<int>(pos.at(nodes[static_cast<size_t>(j)].linear)));
    return validate_root_datum(std::move(quot));
}

BuildingContext make_building_context(const RootDatum& rd, const FrobeniusDescriptor& f,
                                      size_t weyl_bound) {
    validate_frobenius(f);
    BuildingContext ctx;
    ctx.rd = rd;
    ctx.frob = f;
    ctx.w0 = generate_weyl(rd, weyl_bound);
    ctx.nodes = affine_simple_system(rd);
    ctx.facet_twist = IntMat::identity(rd.rank);

    auto comps = components(rd);
    std::vector<int> theta_perm = theta_node_perm(ctx.nodes, f.theta.matrix);

    std::vector<int> rot_perm(ctx.nodes.size());
    for (size_t i = 0; i < rot_perm.size(); ++i)
        rot_perm[i] = static_cast<int>(i);
    if (f.diagram_rotation) {
        if (f.diagram_rotation->size() != comps.size())
            throw validation_error("diagram_rotation needs one integer per component");
        bool nontrivial = false;
        for (size_t c = 0; c < comps.size(); ++c) {
            long long r = (*f.diagram_rotation)[c];
            auto cycle = component_cycle(rd, ctx.nodes, static_cast<int>(c));
            long long len = static_cast<long long>(cycle.size());
            if (cycle.empty()) {
                if (r != 0)
                    throw validation_error("diagram_rotation on a component without a cyclic "
                                           "affine diagram");
                continue;
            }
            long long shift = ((r % len) + len) % len;
            if (shift == 0)
                continue;
            nontrivial = true;
            for (long long k = 0; k < len; ++k)
                rot_perm[static_cast<size_t>(cycle[static_cast<size_t>(k)])] =
                    cycle[static_cast<size_t>((k + shift) % len)];
        }
        if (nontrivial) {
            // Commutation with the theta node action is part of the contract.
            if (compose_perm(rot_perm, theta_perm) != compose_perm(theta_perm, rot_perm))
                throw validation_error("diagram_rotation does not commute with theta");
            Realization real = realize_node_perm(ctx, rot_perm);
            if (!real.found)
                throw validation_error("diagram_rotation is not realizable on the apartment");
            ctx.facet_twist = real.w;
        }
    }
    ctx.frob_node_perm = compose_perm(rot_perm, theta_perm);

    // Alcove vertex per node.
    std::vector<RatVec> vertex(ctx.nodes.size(), zero_vector(rd.rank));
    for (size_t i = 0; i < ctx.nodes.size(); ++i)
        if (ctx.nodes[i].offset == 0) {
            const auto& comp = comps[static_cast<size_t>(ctx.nodes[i].component)];
            int simple_pos = -1;
            for (int k : comp.simple_positions)
                if (rd.simple_root(k) == ctx.nodes[i].linear)
                    simple_pos = k;
            vertex[i] = finite_node_vertex(rd, comp, simple_pos);
        }

    // Facet types: products over components of proper node subsets, kept when
    // stable under the Frobenius node action.
    std::vector<std::vector<int>> comp_nodes(comps.size());
    for (size_t i = 0; i < ctx.nodes.size(); ++i)
        comp_nodes[static_cast<size_t>(ctx.nodes[i].component)].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> choices{{}};
    for (const auto& cn : comp_nodes) {
        std::vector<std::vector<int>> next;
        size_t m = cn.size();
        for (size_t mask = 0; mask + 1 < (1ull << m) || (m == 0 && mask == 0); ++mask) {
            std::vector<int> subset;
            for (size_t b = 0; b < m; ++b)
                if (mask & (1ull << b))
                    subset.push_back(cn[b]);
            for (const auto& prefix : choices) {
                auto j = prefix;
                j.insert(j.end(), subset.begin(), subset.end());
                next.push_back(std::move(j));
            }
            if (m == 0)
                break;
        }
        choices = std::move(next);
    }
    for (auto& j : choices) {
        std::sort(j.begin(), j.end());
        std::set<int> j_set(j.begin(), j.end());
        bool stable = true;
        for (int x : j)
            if (!j_set.count(ctx.frob_node_perm[static_cast<size_t>(x)]))
                stable = false;
        if (!stable)
            continue;
        FacetType facet;
        facet.nodes = j;
        facet.barycenter = zero_vector(rd.rank);
        for (size_t c = 0; c < comps.size(); ++c) {
            std::vector<RatVec> pts;
            for (int idx : comp_nodes[c])
                if (!j_set.count(idx))
                    pts.push_back(vertex[static_cast<size_t>(idx)]);
            if (!pts.empty())
                facet.barycenter = add(facet.barycenter, average(pts, rd.rank));
        }
        for (size_t i = 0; i < ctx.nodes.size(); ++i) {
            Rational val = pair_int(ctx.nodes[i].linear, facet.barycenter) +
                           Rational(ctx.nodes[i].offset);
            bool vanishes = j_set.count(static_cast<int>(i)) > 0;
            if (vanishes != val.is_zero() || (!vanishes && !(Rational(0) < val)))
                throw validation_error("barycenter does not cut out the facet " + facet.key());
        }
        ctx.facets.push_back(std::move(facet));
    }
    std::sort(ctx.facets.begin(), ctx.facets.end(),
              [](const FacetType& a, const FacetType& b) { return a.nodes < b.nodes; });
    for (const auto& facet : ctx.facets)
        ctx.facet_groups.push_back(reflection_subgroup(rd, ctx.nodes, facet.nodes));

    // Apartment symmetries: alcove-preserving elements of X_vee ⋊ W0 that
    // survive the Frobenius, plus the rotation itself.
    std::set<std::vector<int>> seen;
    for (const auto& w : ctx.w0.elements) {
        std::vector<int> pi(ctx.nodes.size(), -1);
        bool ok = true;
        for (size_t i = 0; i < ctx.nodes.size() && ok; ++i) {
            auto img = mat_vec(w, ctx.nodes[i].linear);
            ok = false;
            for (size_t jn = 0; jn < ctx.nodes.size(); ++jn)
                if (ctx.nodes[jn].linear == img) {
                    pi[i] = static_cast<int>(jn);
                    ok = true;
                    break;
                }
        }
        if (!ok)
            continue;
        bool identity = true;
        for (size_t i = 0; i < pi.size(); ++i)
            identity = identity && pi[i] == static_cast<int>(i);
        if (identity || seen.count(pi))
            continue;
        IntRowMat rows;
        std::vector<long long> rhs;
        for (size_t i = 0; i < ctx.nodes.size(); ++i) {
            rows.push_back(ctx.nodes[static_cast<size_t>(pi[i])].linear);
            rhs.push_back(ctx.nodes[i].offset - ctx.nodes[static_cast<size_t>(pi[i])].offset);
        }
        IntMat tt = transpose(f.theta.matrix);
        for (int r = 0; r < rd.rank; ++r) {
            std::vector<long long> row(static_cast<size_t>(rd.rank), 0);
            for (int c = 0; c < rd.rank; ++c)
                row[static_cast<size_t>(c)] = tt.at(r, c) - (r == c ? 1 : 0);
            rows.push_back(std::move(row));
            rhs.push_back(0);
        }
        if (!(f.theta.matrix * w == w * f.theta.matrix))
            continue;
        if (!solve_integral(rows, rhs))
            continue;
        if (compose_perm(pi, ctx.frob_node_perm) != compose_perm(ctx.frob_node_perm, pi))
            continue;
        seen.insert(pi);
        ctx.symmetries.push_back(BuildingSymmetry{pi, w});
    }
    if (f.diagram_rotation && !(ctx.facet_twist == IntMat::identity(rd.rank)) &&
        !seen.count(rot_perm)) {
        ctx.symmetries.push_back(BuildingSymmetry{rot_perm, ctx.facet_twist});
        seen.insert(rot_perm);
    }
    return ctx;
}

std::vector<FacetType> facet_types(const RootDatum& rd, const FrobeniusDescriptor& f) {
    return make_building_context(rd, f).facets;
}

RatVec facet_frobenius_image(const BuildingContext& ctx, const RatVec& v) {
    return mod1(mat_vec(ctx.facet_twist, frobenius_image(v, ctx.frob)));
}

RatVec psi_sigma(const BuildingContext& ctx, const RatVec& class_rep) {
    return canonical_rep(class_rep, ctx.w0.elements);
}

RatVec face_restriction(const BuildingContext& ctx, int from_facet, int to_facet,
                        const RatVec& class_rep) {
    const auto& ja = ctx.facets[static_cast<size_t>(from_facet)].nodes;
    const auto& jb = ctx.facets[static_cast<size_t>(to_facet)].nodes;
    if (!std::includes(jb.begin(), jb.end(), ja.begin(), ja.end()))
        throw validation_error("face restriction requires the target node set to contain the "
                               "source node set");
    return canonical_rep(class_rep, ctx.facet_groups[static_cast<size_t>(to_facet)].elements);
}

namespace {

bool facet_F_stable_class(const BuildingContext& ctx, size_t facet, const RatVec& rep) {
    const auto& g = ctx.facet_groups[facet].elements;
    return canonical_rep(facet_frobenius_image(ctx, rep), g) == rep;
}

} // namespace

ClassSystem compute_S_phi(const BuildingContext& ctx, const InertialParam& phi) {
    ClassSystem s;
    s.classes.resize(ctx.facets.size());
    auto orbit = orbit_of(phi.rep, ctx.w0.elements);
    for (size_t i = 0; i < ctx.facets.size(); ++i) {
        std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> reps(lex_less);
        for (const auto& v : orbit)
            reps.insert(canonical_rep(v, ctx.facet_groups[i].elements));
        for (const auto& rep : reps)
            if (facet_F_stable_class(ctx, i, rep))
                s.classes[i].push_back(rep);
    }
    return s;
}

bool is_attained(const BuildingContext& ctx, const InertialParam& phi) {
    auto s = compute_S_phi(ctx, phi);
    for (const auto& list : s.classes)
        if (!list.empty())
            return true;
    return false;
}

CheckReport verify_zero_coherence(const BuildingContext& ctx, const ClassSystem& s) {
    CheckReport report;
    if (s.classes.size() != ctx.facets.size())
        return {false, "class system is not aligned with the facet list"};

    // Well-formedness: canonical, F-stable, invertible order.
    for (size_t i = 0; i < ctx.facets.size(); ++i)
        for (const auto& rep : s.classes[i]) {
            if (canonical_rep(rep, ctx.facet_groups[i].elements) != rep)
                return {false, "class " + str(rep) + " at " + ctx.facets[i].key() +
                                   " is not canonical"};
            if (!facet_F_stable_class(ctx, i, rep))
                return {false, "class " + str(rep) + " at " + ctx.facets[i].key() +
                                   " is not Frobenius-stable"};
            if (!order_invertible(class_order(rep), ctx.frob, ctx.frob.lambda))
                return {false, "class " + str(rep) + " at " + ctx.facets[i].key() +
                                   " has non-invertible order"};
        }

    // Universe: the W0-orbits met by the system.
    std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> params(lex_less);
    for (const auto& list : s.classes)
        for (const auto& rep : list)
            params.insert(psi_sigma(ctx, rep));
    std::vector<RatVec> universe;
    for (const auto& p : params) {
        auto orb = orbit_of(p, ctx.w0.elements);
        universe.insert(universe.end(), orb.begin(), orb.end());
    }

    auto contains = [&](size_t facet, const RatVec& rep) {
        const auto& list = s.classes[facet];
        return std::binary_search(list.begin(), list.end(), rep, lex_less);
    };

    // Condition (2): face-restriction preimages.
    for (size_t a = 0; a < ctx.facets.size(); ++a)
        for (size_t b = 0; b < ctx.facets.size(); ++b) {
            const auto& ja = ctx.facets[a].nodes;
            const auto& jb = ctx.facets[b].nodes;
            if (!std::includes(jb.begin(), jb.end(), ja.begin(), ja.end()))
                continue;
            std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> seen(lex_less);
            for (const auto& v : universe) {
                RatVec rep = canonical_rep(v, ctx.facet_groups[a].elements);
                if (!seen.insert(rep).second)
                    continue;
                if (!facet_F_stable_class(ctx, a, rep))
                    continue;
                bool in_a = contains(a, rep);
                bool in_b = contains(b, face_restriction(ctx, static_cast<int>(a),
                                                         static_cast<int>(b), rep));
                if (in_a != in_b)
                    return {false, "face pair " + ctx.facets[a].key() + " <= " +
                                       ctx.facets[b].key() + ": class " + str(rep) +
                                       (in_a ? " has no matching face class"
                                             : " is missing from the open facet")};
            }
        }

    // Condition (1): apartment symmetries.
    for (const auto& sym : ctx.symmetries) {
        for (size_t a = 0; a < ctx.facets.size(); ++a) {
            std::vector<int> jb;
            for (int x : ctx.facets[a].nodes)
                jb.push_back(sym.node_perm[static_cast<size_t>(x)]);
            std::sort(jb.begin(), jb.end());
            int b = ctx.facet_index(jb);
            if (b < 0)
                return {false, "symmetry maps " + ctx.facets[a].key() +
                                   " outside the Frobenius-stable facet list"};
            std::vector<RatVec> transported;
            for (const auto& rep : s.classes[a])
                transported.push_back(canonical_rep(mat_vec(sym.transport, rep),
                                                    ctx.facet_groups[static_cast<size_t>(b)]
                                                        .elements));
            std::sort(transported.begin(), transported.end(), lex_less);
            if (transported != s.classes[static_cast<size_t>(b)])
                return {false, "symmetry transport mismatch between " + ctx.facets[a].key() +
                                   " and " + ctx.facets[static_cast<size_t>(b)].key()};
        }
    }
    return report;
}

PartitionReport verify_partition(const BuildingContext& ctx, long long n, Lambda lambda) {
    if (n % ctx.frob.p == 0)
        throw validation_error("p divides N");
    PartitionReport report;

    std::vector<std::vector<RatVec>> universe(ctx.facets.size());
    for (size_t i = 0; i < ctx.facets.size(); ++i) {
        std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> reps(lex_less);
        for (const auto& v : all_level_vectors(ctx.rd.rank, n)) {
            RatVec rep = canonical_rep(v, ctx.facet_groups[i].elements);
            if (!reps.count(rep) && order_invertible(class_order(rep), ctx.frob, lambda) &&
                facet_F_stable_class(ctx, i, rep))
                reps.insert(rep);
        }
        universe[i].assign(reps.begin(), reps.end());
        report.facet_class_counts.push_back(universe[i].size());
    }

    auto params = enumerate_inertial_params(ctx.rd, ctx.frob, ctx.w0, n, lambda);
    std::vector<std::set<RatVec, bool (*)(const RatVec&, const RatVec&)>> covered(
        ctx.facets.size(), std::set<RatVec, bool (*)(const RatVec&, const RatVec&)>(lex_less));
    for (const auto& phi : params) {
        auto s = compute_S_phi(ctx, phi);
        for (size_t i = 0; i < ctx.facets.size(); ++i)
            for (const auto& rep : s.classes[i]) {
                if (!std::binary_search(universe[i].begin(), universe[i].end(), rep, lex_less)) {
                    report.pass = false;
                    report.detail = "fiber class " + str(rep) + " at " + ctx.facets[i].key() +
                                    " lies outside the level-" + std::to_string(n) + " universe";
                    return report;
                }
                if (!covered[i].insert(rep).second) {
                    report.pass = false;
                    report.detail = "class " + str(rep) + " at " + ctx.facets[i].key() +
                                    " belongs to two fibers";
                    return report;
                }
            }
    }
    for (size_t i = 0; i < ctx.facets.size(); ++i)
        if (covered[i].size() != universe[i].size()) {
            report.pass = false;
            report.detail = "facet " + ctx.facets[i].key() + " has " +
                            std::to_string(universe[i].size() - covered[i].size()) +
                            " classes in no fiber";
            return report;
        }
    return report;
}

} // namespace tameblocks
