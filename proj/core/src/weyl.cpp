#include "tameblocks/weyl.hpp"

#include "tameblocks/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tameblocks {

IntMat reflection_matrix(int rank, const std::vector<long long>& root,
                         const std::vector<long long>& coroot) {
    IntMat m = IntMat::identity(rank);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c)
            m.at(r, c) -= root[static_cast<size_t>(r)] * coroot[static_cast<size_t>(c)];
    return m;
}

std::vector<IntMat> close_under_product(std::vector<IntMat> gens, int rank, size_t bound) {
    std::set<IntMat> seen;
    seen.insert(IntMat::identity(rank));
    std::vector<IntMat> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<IntMat> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                IntMat p = g * w;
                if (seen.insert(p).second) {
                    next.push_back(p);
                    if (seen.size() > bound)
                        throw bound_error("group closure exceeds bound " + std::to_string(bound));
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

WeylGroup generate_weyl(const RootDatum& rd, size_t bound) {
    WeylGroup w;
    w.rank = rd.rank;
    for (size_t k = 0; k < rd.simple.size(); ++k)
        w.generators.push_back(
            reflection_matrix(rd.rank, rd.simple_root(static_cast<int>(k)),
                              rd.simple_coroot(static_cast<int>(k))));
    w.elements = close_under_product(w.generators, rd.rank, bound);
    return w;
}

bool subgroup_contains(const std::vector<IntMat>& sorted_big, const std::vector<IntMat>& small) {
    for (const auto& m : small)
        if (!std::binary_search(sorted_big.begin(), sorted_big.end(), m))
            return false;
    return true;
}

std::vector<RatVec> orbit_of(const RatVec& v, const std::vector<IntMat>& elements) {
    std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> orb(lex_less);
    RatVec v0 = mod1(v);
    for (const auto& w : elements)
        orb.insert(mod1(mat_vec(w, v0)));
    return {orb.begin(), orb.end()};
}

RatVec canonical_rep(const RatVec& v, const std::vector<IntMat>& elements) {
    RatVec v0 = mod1(v);
    RatVec best = v0;
    for (const auto& w : elements) {
        RatVec img = mod1(mat_vec(w, v0));
        if (lex_less(img, best))
            best = img;
    }
    return best;
}

Subgroup stabilizer(const RatVec& v, const std::vector<IntMat>& h, const RootDatum& rd) {
    Subgroup s;
    RatVec v0 = mod1(v);
    for (const auto& w : h)
        if (mod1(mat_vec(w, v0)) == v0)
            s.elements.push_back(w);
    std::sort(s.elements.begin(), s.elements.end());

    std::vector<IntMat> gens;
    for (size_t i = 0; i < rd.roots.size(); ++i)
        if (pair_int(rd.coroots[i], v0).mod1().is_zero()) {
            s.generating_roots.push_back(rd.roots[i]);
            gens.push_back(reflection_matrix(rd.rank, rd.roots[i], rd.coroots[i]));
        }
    auto closure = close_under_product(gens, rd.rank);
    s.reflection_generated = closure == s.elements;
    return s;
}

Subgroup fixing_reflection_subgroup(const RatVec& v, const RootDatum& rd) {
    Subgroup s;
    RatVec v0 = mod1(v);
    std::vector<IntMat> gens;
    for (size_t i = 0; i < rd.roots.size(); ++i)
        if (pair_int(rd.coroots[i], v0).mod1().is_zero()) {
            s.generating_roots.push_back(rd.roots[i]);
            gens.push_back(reflection_matrix(rd.rank, rd.roots[i], rd.coroots[i]));
        }
    s.elements = close_under_product(gens, rd.rank);
    s.reflection_generated = true;
    return s;
}

namespace {

// Affine reflection attached to a node, acting on the apartment X_vee tensor Q:
// x -> x - (<linear, x> + offset) * linear_vee. Stored as the pair of its
// action on X (class side) and the affine action on X_vee (certification side).
struct AffinePair {
    IntMat dual_linear;           // action on X_vee
    std::vector<long long> shift; // translation term, integral here

    bool operator<(const AffinePair& o) const {
        if (dual_linear != o.dual_linear)
            return dual_linear < o.dual_linear;
        return shift < o.shift;
    }
    bool operator==(const AffinePair& o) const {
        return dual_linear == o.dual_linear && shift == o.shift;
    }
};

AffinePair compose(const AffinePair& a, const AffinePair& b) {
    AffinePair r;
    r.dual_linear = a.dual_linear * b.dual_linear;
    r.shift = mat_vec(a.dual_linear, b.shift);
    for (size_t i = 0; i < r.shift.size(); ++i)
        r.shift[i] += a.shift[static_cast<size_t>(i)];
    return r;
}

} // namespace

Subgroup reflection_subgroup(const RootDatum& rd, const std::vector<AffineNode>& nodes,
                             const std::vector<int>& j) {
    std::map<std::vector<long long>, std::vector<long long>> coroot_of;
    for (size_t i = 0; i < rd.roots.size(); ++i)
        coroot_of[rd.roots[i]] = rd.coroots[i];

    Subgroup s;
    std::vector<IntMat> gens;
    std::vector<AffinePair> affine_gens;
    for (int idx : j) {
        const AffineNode& node = nodes[static_cast<size_t>(idx)];
        auto it = coroot_of.find(node.linear);
        if (it == coroot_of.end())
            throw validation_error("affine node linear part is not a root");
        s.generating_roots.push_back(node.linear);
        gens.push_back(reflection_matrix(rd.rank, node.linear, it->second));
        AffinePair p;
        // On X_vee: x -> x - (<beta, x> + n) beta_vee.
        p.dual_linear = IntMat(rd.rank);
        for (int r = 0; r < rd.rank; ++r)
            for (int c = 0; c < rd.rank; ++c)
                p.dual_linear.at(r, c) =
                    (r == c ? 1 : 0) -
                    it->second[static_cast<size_t>(r)] * node.linear[static_cast<size_t>(c)];
        p.shift.assign(static_cast<size_t>(rd.rank), 0);
        for (int r = 0; r < rd.rank; ++r)
            p.shift[static_cast<size_t>(r)] = -static_cast<long long>(node.offset) *
                                              it->second[static_cast<size_t>(r)];
        affine_gens.push_back(std::move(p));
    }
    s.elements = close_under_product(gens, rd.rank);
    s.reflection_generated = true;

    // Certify injectivity of the affine-to-linear projection: the affine
    // closure must have the same size as the linear one.
    std::set<AffinePair> affine;
    AffinePair id{IntMat::identity(rd.rank), std::vector<long long>(static_cast<size_t>(rd.rank), 0)};
    affine.insert(id);
    std::vector<AffinePair> frontier{id};
    while (!frontier.empty()) {
        std::vector<AffinePair> next;
        for (const auto& w : frontier)
            for (const auto& g : affine_gens) {
                AffinePair p = compose(g, w);
                if (affine.insert(p).second) {
                    next.push_back(p);
                    if (affine.size() > 4 * s.elements.size() + 16)
                        throw validation_error(
                            "facet reflection group does not embed into the finite Weyl group");
                }
            }
        frontier = std::move(next);
    }
    if (affine.size() != s.elements.size())
        throw validation_error(
            "facet reflection group does not embed into the finite Weyl group");
    return s;
}

} // namespace tameblocks
