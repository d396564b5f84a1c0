#include "tameblocks/levi.hpp"

#include "tameblocks/errors.hpp"

#include <algorithm>
#include <set>

namespace tameblocks {

LeviContext make_levi_context(const RootDatum& rd, const FrobeniusDescriptor& f,
                              std::vector<int> simple_positions) {
    std::sort(simple_positions.begin(), simple_positions.end());
    for (int k : simple_positions)
        if (k < 0 || static_cast<size_t>(k) >= rd.simple.size())
            throw validation_error("levi subset position out of range");
    auto action = simple_action(rd, f.theta.matrix);
    std::set<int> subset(simple_positions.begin(), simple_positions.end());
    for (int k : simple_positions)
        if (!subset.count(action[static_cast<size_t>(k)]))
            throw validation_error("levi subset is not theta-stable");

    LeviContext m;
    m.simple_positions = std::move(simple_positions);
    std::vector<IntMat> gens;
    for (int k : m.simple_positions) {
        m.group.generating_roots.push_back(rd.simple_root(k));
        gens.push_back(reflection_matrix(rd.rank, rd.simple_root(k), rd.simple_coroot(k)));
    }
    m.group.elements = close_under_product(gens, rd.rank);
    m.group.reflection_generated = true;
    return m;
}

InertialParam levi_param_map(const RatVec& rep_m, const WeylGroup& w0,
                             const FrobeniusDescriptor& f, Lambda lambda) {
    return make_inertial_param(rep_m, w0, f, lambda);
}

std::vector<RatVec> restriction_fibers(const InertialParam& phi, const LeviContext& m,
                                       const WeylGroup& w0, const FrobeniusDescriptor& f) {
    std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> reps(lex_less);
    for (const auto& v : orbit_of(phi.rep, w0.elements)) {
        RatVec rep = canonical_rep(v, m.group.elements);
        if (!reps.count(rep) && is_F_stable(rep, m.group.elements, f))
            reps.insert(rep);
    }
    return {reps.begin(), reps.end()};
}

bool satisfies_equivalence_criterion(const RatVec& rep_m, const LeviContext& m,
                                     const RootDatum& rd, const WeylGroup& w0) {
    Subgroup stab = stabilizer(rep_m, w0.elements, rd);
    if (!subgroup_contains(m.group.elements, stab.elements))
        return false;
    // Implied by the stabilizer containment; checked alongside for reports.
    Subgroup fixing = fixing_reflection_subgroup(rep_m, rd);
    return subgroup_contains(m.group.elements, fixing.elements);
}

namespace {

// Rank over Q of a list of row vectors.
int rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty())
        return 0;
    size_t n = rows[0].size();
    int rank = 0;
    for (size_t col = 0; col < n && static_cast<size_t>(rank) < rows.size(); ++col) {
        size_t pivot = static_cast<size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
        Rational inv(rows[static_cast<size_t>(rank)][col].den,
                     rows[static_cast<size_t>(rank)][col].num);
        for (size_t j = col; j < n; ++j)
            rows[static_cast<size_t>(rank)][j] = rows[static_cast<size_t>(rank)][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<size_t>(rank) || rows[i][col].is_zero())
                continue;
            Rational fct = rows[i][col];
            for (size_t j = col; j < n; ++j)
                rows[i][j] = rows[i][j] - fct * rows[static_cast<size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

// Dimension of {x : <x, coroot> = 0 for the subset} ∩ ker(twist - 1), the
// twist-fixed central directions of the Levi dual.
int fixed_center_dimension(const RootDatum& rd, const std::vector<int>& simple_positions,
                           const IntMat& twist) {
    std::vector<std::vector<Rational>> rows;
    for (int k : simple_positions) {
        const auto& coroot = rd.simple_coroot(k);
        std::vector<Rational> row;
        for (long long x : coroot)
            row.push_back(Rational(x));
        rows.push_back(std::move(row));
    }
    for (int i = 0; i < rd.rank; ++i) {
        std::vector<Rational> row;
        for (int j = 0; j < rd.rank; ++j)
            row.push_back(Rational(twist.at(i, j) - (i == j ? 1 : 0)));
        rows.push_back(std::move(row));
    }
    return rd.rank - rational_rank(std::move(rows));
}

} // namespace

std::optional<DiscretenessWitness> discreteness_witness(const InertialParam& phi,
                                                        const RootDatum& rd,
                                                        const FrobeniusDescriptor& f,
                                                        const WeylGroup& w0) {
    size_t s = rd.simple.size();
    if (s == 0)
        return std::nullopt; // a torus has no proper Levi
    auto orbit = orbit_of(phi.rep, w0.elements);

    // Proper standard Levi subsets, with their root sets and reflection groups.
    std::vector<std::vector<int>> subsets;
    std::vector<std::set<std::vector<long long>>> root_sets;
    std::vector<std::vector<IntMat>> groups;
    for (size_t mask = 0; mask + 1 < (1ull << s); ++mask) {
        std::vector<int> positions;
        for (size_t b = 0; b < s; ++b)
            if (mask & (1ull << b))
                positions.push_back(static_cast<int>(b));
        RootDatum levi = levi_subdatum(rd, positions);
        std::set<std::vector<long long>> roots(levi.roots.begin(), levi.roots.end());
        std::vector<IntMat> gens;
        for (size_t k = 0; k < levi.simple.size(); ++k)
            gens.push_back(reflection_matrix(rd.rank, levi.simple_root(static_cast<int>(k)),
                                             levi.simple_coroot(static_cast<int>(k))));
        subsets.push_back(std::move(positions));
        root_sets.push_back(std::move(roots));
        groups.push_back(close_under_product(gens, rd.rank));
    }

    // A twisted Levi datum is a Levi of the L-group only when its twist-fixed
    // central torus exceeds that of the ambient group; otherwise the twist is
    // elliptic and witnesses nothing.
    std::vector<int> all_positions;
    for (size_t k = 0; k < s; ++k)
        all_positions.push_back(static_cast<int>(k));
    int ambient_center = fixed_center_dimension(rd, all_positions, f.theta.matrix);

    for (const auto& w : w0.elements) {
        IntMat twist = w * f.theta.matrix;
        for (size_t li = 0; li < subsets.size(); ++li) {
            bool stable = true;
            for (const auto& root : root_sets[li])
                if (!root_sets[li].count(mat_vec(twist, root))) {
                    stable = false;
                    break;
                }
            if (!stable)
                continue;
            if (fixed_center_dimension(rd, subsets[li], twist) <= ambient_center)
                continue;
            for (const auto& v : orbit) {
                RatVec img = mod1(mat_vec(twist, scale(f.q, v)));
                for (const auto& inner : groups[li])
                    if (mod1(mat_vec(inner, img)) == v)
                        return DiscretenessWitness{w, subsets[li], v, inner};
            }
        }
    }
    return std::nullopt;
}

bool is_discrete(const InertialParam& phi, const RootDatum& rd, const FrobeniusDescriptor& f,
                 const WeylGroup& w0) {
    return !discreteness_witness(phi, rd, f, w0).has_value();
}

} // namespace tameblocks
